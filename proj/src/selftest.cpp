#include "maxsg/selftest.hpp"

#include <functional>

#include "maxsg/classify.hpp"
#include "maxsg/error.hpp"
#include "maxsg/fintrans.hpp"
#include "maxsg/genpairs.hpp"
#include "maxsg/mapexpr.hpp"
#include "maxsg/relcalc.hpp"

namespace maxsg {

namespace {

using Check = std::pair<const char*, std::function<bool()>>;

const Card kA = Card::aleph0();

CardInterval ex(Card c) { return CardInterval::exact(c); }

std::vector<Check> core_checks() {
  return {
      {"card_add finite", [] { return Card(2) + Card(3) == Card(5); }},
      {"card_add absorbs", [] { return kA + Card(5) == kA && kA + kA == kA; }},
      {"defect with injective g",
       [] { return compose_defect(ex(kA), ex(0), ex(1), Tri::Yes) == ex(kA); }},
      {"defect forced infinite",
       [] { return compose_defect(ex(kA), ex(3), ex(0), Tri::No) == ex(kA); }},
      {"collapse with surjective f",
       [] { return compose_collapse(ex(2), ex(0), ex(3), Tri::Yes) == ex(5); }},
      {"collapse forced infinite",
       [] { return compose_collapse(ex(0), ex(1), ex(kA), Tri::No) == ex(kA); }},
      {"kinf upper bound",
       [] { return compose_kinf(ex(0), ex(3)) == CardInterval(0, 3); }},
  };
}

std::vector<Check> mapexpr_checks() {
  return {
      {"eval double", [] { return eval(times_map(2), 7) == 14; }},
      {"eval pairing projection", [] { return eval(cantor_proj(), 2) == 0; }},
      {"eval halve after double",
       [] { return eval(compose(times_map(2), divfloor_map(2)), 7) == 7; }},
      {"normalize 4x",
       [] {
         return normalize(compose(times_map(2), times_map(2))) ==
                AffinePeriodic{0, 1, 4, {0}};
       }},
      {"normalize ceil half",
       [] {
         return normalize(compose(shift_map(1), divfloor_map(2))) ==
                AffinePeriodic{0, 2, 1, {0, 1}};
       }},
      {"normalize pairing absent", [] { return !normalize(cantor_proj()); }},
      {"certify double",
       [] {
         Certificate c = certify(times_map(2));
         return c.inj == Tri::Yes && c.surj == Tri::No && c.d == ex(kA) &&
                c.c == ex(0) && c.kinf == ex(0) && c.fin_image == Tri::No;
       }},
      {"certify pairing projection",
       [] {
         Certificate c = certify(cantor_proj());
         return c.inj == Tri::No && c.surj == Tri::Yes && c.d == ex(0) &&
                c.c == ex(kA) && c.kinf == ex(kA) && c.fin_image == Tri::No;
       }},
      {"certify projection then double",
       [] {
         Certificate c = certify(compose(cantor_proj(), times_map(2)));
         return c.d == ex(kA) && c.c == ex(kA) && c.kinf == ex(kA);
       }},
      {"fiber of 6 under double",
       [] {
         auto f = fiber(times_map(2), 6, 100);
         return std::get<FiniteFiber>(f).elements == std::vector<std::uint64_t>{3};
       }},
      {"fiber of 2 under halve",
       [] {
         auto f = fiber(divfloor_map(2), 2, 100);
         return std::get<FiniteFiber>(f).elements ==
                std::vector<std::uint64_t>{4, 5};
       }},
      {"column fiber",
       [] {
         auto f = std::get<InfiniteFiber>(fiber(cantor_proj(), 1, 100));
         return f.first(4) == std::vector<std::uint64_t>{1, 4, 8, 13};
       }},
      {"invert double",
       [] { return normalize(invert(times_map(2))) == normalize(divfloor_map(2)); }},
      {"invert halve",
       [] { return normalize(invert(divfloor_map(2))) == normalize(times_map(2)); }},
      {"chain pass",
       [] {
         std::vector<InversePair> p{{divfloor_map(2), times_map(2)},
                                    {divfloor_map(2), times_map(2)}};
         return chain_inverse_check(p, 1000).kind == ChainVerdict::Kind::Pass;
       }},
      {"chain hypothesis violated at 1",
       [] {
         std::vector<InversePair> p{{times_map(2), divfloor_map(2)},
                                    {times_map(2), divfloor_map(2)}};
         auto v = chain_inverse_check(p, 1000);
         return v.kind == ChainVerdict::Kind::HypothesisViolated && v.witness == 1;
       }},
  };
}

std::vector<Check> classify_checks() {
  const Threshold plus = Threshold::Aleph0Plus;
  return {
      {"S1 rejects halve",
       [] { return in_S(FamilyKind::S1, certify(divfloor_map(2))).answer == Tri::No; }},
      {"S1 holds double",
       [] { return in_S(FamilyKind::S1, certify(times_map(2))).answer == Tri::Yes; }},
      {"S5 rejects projection",
       [] { return in_S(FamilyKind::S5, certify(cantor_proj())).answer == Tri::No; }},
      {"F1 singleton double",
       [=] { return in_F(FamilyKind::F1, {0}, plus, times_map(2)).answer == Tri::Yes; }},
      {"F2 singleton successor",
       [=] { return in_F(FamilyKind::F2, {0}, plus, shift_map(1)).answer == Tri::No; }},
      {"F1 transposition",
       [=] { return in_F(FamilyKind::F1, {0}, plus, perm_map({1, 0})).answer == Tri::No; }},
      {"U1 Frechet double",
       [=] {
         return in_U(FamilyKind::U1, FilterOracle::frechet(), plus, times_map(2))
                    .answer == Tri::Yes;
       }},
      {"rho halve",
       [] { return rho(divfloor_map(2), 2) == Relation::full(2); }},
      {"A2 double",
       [] { return in_A(FamilyKind::A2, 2, times_map(2)).answer == Tri::Yes; }},
      {"constant map in frakF",
       [] { return in_frakF(certify(constant_map(5))) == Tri::Yes; }},
  };
}

std::vector<Check> genpairs_checks() {
  auto is = [](const Decision& d, Decision::Answer a) { return d.answer == a; };
  using A = Decision::Answer;
  return {
      {"sym pair generates",
       [=] { return is(decide_sym_pair(times_map(2), cantor_proj()), A::Generates); }},
      {"sym pair refused by S5",
       [] {
         auto d = decide_sym_pair(times_map(2), divfloor_map(2));
         return d.witness && d.witness->kind == FamilyKind::S5;
       }},
      {"pointwise pair refused by F2",
       [] {
         auto d = decide_pointwise_stab_pair({0}, times_map(2), cantor_proj());
         return d.witness &&
                *d.witness == Family::f(FamilyKind::F2, {0}, Threshold::Aleph0Plus);
       }},
      {"pointwise pair generates",
       [=] {
         MapExpr f(AffinePeriodic{0, 1, 2, {2}});
         return is(decide_pointwise_stab_pair({0}, f, cantor_proj()), A::Generates);
       }},
      {"partition pair generates",
       [=] {
         MapExpr f(AffinePeriodic{0, 4, 8, {0, 2, 5, 7}});
         return is(decide_partition_pair(2, f, cantor_proj()), A::Generates);
       }},
      {"partition pair refused by S4",
       [] {
         auto d = decide_partition_pair(2, shift_map(1), cantor_proj());
         return d.witness && d.witness->kind == FamilyKind::S4;
       }},
  };
}

std::vector<Check> relcalc_checks() {
  return {
      {"compose to full",
       [] {
         Relation r = Relation::from_pairs(2, {{0, 0}, {0, 1}, {1, 0}});
         return rel_compose(r, r) == Relation::full(2);
       }},
      {"bfs witness",
       [] {
         Relation r = Relation::from_pairs(2, {{0, 0}, {0, 1}, {1, 0}});
         return bfin_witness(r, r) == Word{Letter::rho(), Letter::rho()};
       }},
      {"greedy witness n=3",
       [] {
         Relation r = Relation::from_pairs(3, {{0, 0}, {0, 1}, {1, 0}, {2, 0}});
         Relation s = invert_rel(r);
         return evaluate(bfin_greedy(r, s), r, s) == Relation::full(3);
       }},
  };
}

std::vector<Check> fintrans_checks() {
  return {
      {"S3 from two generators", [] { return closure(3, symmetric_generators(3)).size() == 6; }},
      {"maximal subgroups of S4", [] { return maximal_subgroups_symn(4).size() == 8; }},
      {"maximal subsemigroups of T3", [] { return maximal_subsemigroups_Tn(3).size() == 5; }},
      {"rank 2 map generates T3", [] { return generates_Tn(3, {FinMap{{0, 0, 2}}}); }},
      {"constant map does not generate T3",
       [] { return !generates_Tn(3, {FinMap{{0, 0, 0}}}); }},
  };
}

}  // namespace

std::vector<SelfCheck> run_selftest(const std::string& suite) {
  const std::vector<std::pair<std::string, std::function<std::vector<Check>()>>> suites{
      {"core", core_checks},         {"mapexpr", mapexpr_checks},
      {"classify", classify_checks}, {"genpairs", genpairs_checks},
      {"relcalc", relcalc_checks},   {"fintrans", fintrans_checks}};
  bool any = false;
  std::vector<SelfCheck> out;
  for (const auto& [name, make] : suites) {
    if (suite != "all" && suite != name) {
      continue;
    }
    any = true;
    for (const auto& [check, run] : make()) {
      SelfCheck sc{name, check, false, {}};
      try {
        sc.ok = run();
      } catch (const std::exception& e) {
        sc.detail = e.what();
      }
      out.push_back(std::move(sc));
    }
  }
  if (!any) {
    throw Error(errc::usage, "unknown selftest suite '" + suite + "'");
  }
  return out;
}

}  // namespace maxsg
