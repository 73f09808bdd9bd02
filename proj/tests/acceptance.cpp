// Acceptance gate: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "maxsg/classify.hpp"
#include "maxsg/error.hpp"
#include "maxsg/fintrans.hpp"
#include "maxsg/genpairs.hpp"
#include "maxsg/relcalc.hpp"
#include "oracles.hpp"

using namespace maxsg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) {
      detail = why;
    }
    ok = false;
  }
};

// ---------------------------------------------------------------------------
// 1. Finite-case counts.

Outcome finite_counts() {
  Outcome out;
  auto start = Clock::now();
  const std::size_t expected[] = {0, 0, 2, 5, 9};
  std::ostringstream seen;
  for (unsigned n = 2; n <= 4; ++n) {
    auto reports = maximal_subsemigroups_Tn(n);
    std::size_t groups = maximal_subgroups_symn(n).size();
    seen << " n=" << n << ":" << reports.size();
    if (reports.size() != expected[n]) {
      out.fail("wrong count for n=" + std::to_string(n));
    }
    if (reports.size() != groups + 1) {
      out.fail("count differs from maximal subgroups + 1 at n=" + std::to_string(n));
    }
    std::vector<ElementSet> sets;
    for (const auto& r : reports) {
      if (!r.is_closed || !r.is_maximal) {
        out.fail("unverified subsemigroup at n=" + std::to_string(n));
      }
      std::vector<FinMap> gens;
      for (auto c : r.elements) {
        gens.push_back(decode(n, c));
      }
      if (closure(n, gens) != r.elements) {
        out.fail("reported set is not closed at n=" + std::to_string(n));
      }
      sets.push_back(r.elements);
    }
    if (!completeness_check(n, sets)) {
      out.fail("completeness check failed at n=" + std::to_string(n));
    }
  }
  double t = seconds_since(start);
  if (t >= 60) {
    out.fail("took " + std::to_string(t) + " s");
  }
  out.detail = (out.ok ? "counts" + seen.str() : out.detail) + ", " + std::to_string(t) + " s";
  return out;
}

// ---------------------------------------------------------------------------
// 2. Full-relation words over every admissible pair.

using Matrix = std::vector<std::vector<bool>>;

Matrix to_matrix(const Relation& r) {
  Matrix m(r.n(), std::vector<bool>(r.n(), false));
  for (unsigned i = 0; i < r.n(); ++i) {
    for (unsigned j = 0; j < r.n(); ++j) {
      m[i][j] = r.test(i, j);
    }
  }
  return m;
}

Matrix product(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  Matrix out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i][j] && b[j][k]) {
          out[i][k] = true;
        }
      }
    }
  }
  return out;
}

bool all_true(const Matrix& m) {
  for (const auto& row : m) {
    for (bool b : row) {
      if (!b) {
        return false;
      }
    }
  }
  return true;
}

bool word_is_full(const Word& w, const Matrix& rho, const Matrix& sigma) {
  if (w.empty()) {
    return false;
  }
  std::size_t n = rho.size();
  Matrix value;
  for (const Letter& l : w) {
    Matrix step;
    if (l.kind == Letter::Kind::Rho) {
      step = rho;
    } else if (l.kind == Letter::Kind::Sigma) {
      step = sigma;
    } else {
      step.assign(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        step[i][l.perm.at(i)] = true;
      }
    }
    value = value.empty() ? step : product(value, step);
  }
  return all_true(value);
}

bool rows_total(const Matrix& m) {
  for (const auto& row : m) {
    if (std::find(row.begin(), row.end(), true) == row.end()) {
      return false;
    }
  }
  return true;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.size(), std::vector<bool>(m.size(), false));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      t[j][i] = m[i][j];
    }
  }
  return t;
}

bool is_perm_matrix(const Matrix& m) {
  for (const auto& row : m) {
    if (std::count(row.begin(), row.end(), true) != 1) {
      return false;
    }
  }
  Matrix t = transpose(m);
  for (const auto& row : t) {
    if (std::count(row.begin(), row.end(), true) != 1) {
      return false;
    }
  }
  return true;
}

Outcome full_relation_words() {
  Outcome out;
  std::ostringstream seen;
  double n3_time = 0;
  for (unsigned n : {2U, 3U}) {
    auto start = Clock::now();
    std::uint64_t count = std::uint64_t{1} << (n * n);
    std::vector<Matrix> matrices;
    for (std::uint64_t b = 0; b < count; ++b) {
      matrices.push_back(to_matrix(Relation::from_bits(n, b)));
    }
    std::size_t admissible = 0;
    std::size_t failures = 0;
    for (std::uint64_t a = 0; a < count; ++a) {
      const Matrix& r = matrices[a];
      if (!rows_total(r) || is_perm_matrix(r)) {
        continue;
      }
      for (std::uint64_t b = 0; b < count; ++b) {
        const Matrix& s = matrices[b];
        if (!rows_total(transpose(s)) || is_perm_matrix(s)) {
          continue;
        }
        ++admissible;
        Relation rho = Relation::from_bits(n, a);
        Relation sigma = Relation::from_bits(n, b);
        try {
          if (!word_is_full(bfin_witness(rho, sigma), r, s) ||
              !word_is_full(bfin_greedy(rho, sigma), r, s)) {
            ++failures;
          }
        } catch (const Error&) {
          ++failures;
        }
      }
    }
    double t = seconds_since(start);
    if (n == 3) {
      n3_time = t;
    }
    seen << " n=" << n << ": " << admissible << " pairs, " << failures << " failures;";
    if (failures > 0) {
      out.fail("failures at n=" + std::to_string(n));
    }
  }
  if (n3_time >= 300) {
    out.fail("n=3 took " + std::to_string(n3_time) + " s");
  }
  if (out.ok) {
    out.detail = seen.str() + " n=3 in " + std::to_string(n3_time) + " s";
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3. Interval rules contain the exact composite parameters.

bool within(const CardInterval& bound, Card x) { return bound.lo() <= x && x <= bound.hi(); }

Outcome interval_soundness() {
  Outcome out;
  auto grid = oracle::shape_grid(3001, 3);
  auto small = oracle::small_exhaustive();
  std::mt19937_64 rng(3002);
  std::size_t pairs = 0;
  std::size_t equalities = 0;
  std::size_t violations = 0;
  std::size_t oracle_checks = 0;
  auto check_pair = [&](const AffinePeriodic& f, const AffinePeriodic& g) {
    ++pairs;
    Certificate cf = exact_certificate(f);
    Certificate cg = exact_certificate(g);
    AffinePeriodic fg = compose(f, g);
    Certificate exact = exact_certificate(fg);
    CardInterval d = compose_defect(cf.d, cg.c, cg.d, cg.inj);
    CardInterval c = compose_collapse(cf.c, cf.d, cg.c, cf.surj);
    CardInterval k = compose_kinf(cf.kinf, cg.kinf);
    Card dx = exact.d.lo();
    Card cx = exact.c.lo();
    Card kx = exact.kinf.lo();
    bool bad = !within(d, dx) || !within(c, cx) || !within(k, kx);
    if (cg.inj == Tri::Yes) {
      ++equalities;
      bad = bad || d != CardInterval::exact(dx) || dx != cf.d.lo() + cg.d.lo();
    }
    if (cf.surj == Tri::Yes) {
      ++equalities;
      bad = bad || c != CardInterval::exact(cx) || cx != cf.c.lo() + cg.c.lo();
    }
    if (pairs % 25 == 0) {
      ++oracle_checks;
      bad = bad || oracle::defect(fg) != dx || oracle::collapse(fg) != cx ||
            oracle::infinite_fibers(fg) != kx;
    }
    if (bad) {
      ++violations;
      out.fail("violation at " + to_string(f) + " ; " + to_string(g));
    }
  };
  for (int i = 0; i < 12000; ++i) {
    check_pair(grid[rng() % grid.size()], grid[rng() % grid.size()]);
  }
  for (int i = 0; i < 8000; ++i) {
    check_pair(small[rng() % small.size()], small[rng() % small.size()]);
  }
  std::ostringstream s;
  s << pairs << " pairs over " << grid.size() + small.size() << " maps, " << equalities
    << " equality cases, " << oracle_checks << " oracle rechecks, " << violations
    << " violations";
  if (out.ok) {
    out.detail = s.str();
  } else {
    out.detail += "; " + s.str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// 4. Families are closed under composition.

std::vector<Family> closure_families() {
  std::vector<Family> out;
  for (auto k : {FamilyKind::S1, FamilyKind::S2, FamilyKind::S3, FamilyKind::S4,
                 FamilyKind::S5}) {
    out.push_back(Family::s(k));
  }
  for (std::vector<std::uint64_t> gamma :
       {std::vector<std::uint64_t>{0}, std::vector<std::uint64_t>{0, 1}}) {
    for (Threshold mu : {Threshold::Aleph0, Threshold::Aleph0Plus}) {
      out.push_back(Family::f(FamilyKind::F1, gamma, mu));
      if (gamma.size() > 1 || mu == Threshold::Aleph0Plus) {
        out.push_back(Family::f(FamilyKind::F2, gamma, mu));
      }
    }
  }
  for (unsigned n : {2U, 3U}) {
    out.push_back(Family::a(FamilyKind::A1, n));
    out.push_back(Family::a(FamilyKind::A2, n));
  }
  return out;
}

Outcome semigroup_closure() {
  Outcome out;
  auto grid = oracle::shape_grid(4001, 1);
  std::mt19937_64 rng(4002);
  std::vector<MapExpr> pool{cantor_proj(), times_map(2), divfloor_map(2), shift_map(1),
                            identity_map(), perm_map({1, 0}), constant_map(0)};
  while (pool.size() < 500) {
    pool.push_back(oracle::random_expr(rng, grid, 1, 20));
  }
  auto families = closure_families();
  std::size_t total = 0;
  std::size_t violations = 0;
  for (const Family& fam : families) {
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (member(fam, pool[i]).answer == Tri::Yes) {
        inside.push_back(i);
      }
    }
    if (inside.empty()) {
      out.fail("no decisive members of " + fam.name());
      continue;
    }
    for (int k = 0; k < 1000; ++k) {
      const MapExpr& f = pool[inside[rng() % inside.size()]];
      const MapExpr& g = pool[inside[rng() % inside.size()]];
      ++total;
      if (member(fam, compose(f, g)).answer == Tri::No) {
        ++violations;
        out.fail(fam.name() + " not closed at " + to_string(f) + " ; " + to_string(g));
      }
    }
  }
  std::ostringstream s;
  s << families.size() << " families, " << total << " pairs, " << violations << " violations";
  out.detail = out.ok ? s.str() : out.detail + "; " + s.str();
  return out;
}

// ---------------------------------------------------------------------------
// 5. Generating-pair deciders.

using Answer = Decision::Answer;

bool witness_holds(const Decision& d, const MapExpr& f, const MapExpr& g) {
  return d.witness.has_value() && member(*d.witness, f).answer == Tri::Yes &&
         member(*d.witness, g).answer == Tri::Yes;
}

Outcome generating_pairs() {
  Outcome out;
  MapExpr twice_plus_two = AffinePeriodic{0, 1, 2, {2}};
  MapExpr spread = AffinePeriodic{0, 4, 8, {0, 2, 5, 7}};
  FilterOracle principal0 = FilterOracle::principal({0});

  if (decide_sym_pair(times_map(2), cantor_proj()).answer != Answer::Generates) {
    out.fail("sym(times(2), cantor_proj)");
  }
  Decision halve = decide_sym_pair(times_map(2), divfloor_map(2));
  if (halve.answer != Answer::DoesNotGenerate || !witness_holds(halve, times_map(2), divfloor_map(2))) {
    out.fail("sym(times(2), divfloor(2))");
  }
  Decision pw = decide_pointwise_stab_pair({0}, times_map(2), cantor_proj());
  if (pw.answer != Answer::DoesNotGenerate ||
      pw.witness != Family::f(FamilyKind::F2, {0}, Threshold::Aleph0Plus)) {
    out.fail("pointwise({0}, times(2), cantor_proj)");
  }
  if (decide_pointwise_stab_pair({0}, twice_plus_two, cantor_proj()).answer !=
      Answer::Generates) {
    out.fail("pointwise({0}, 2x+2, cantor_proj)");
  }
  if (decide_filter_pair(principal0, twice_plus_two, cantor_proj()).answer !=
      Answer::Generates) {
    out.fail("filter({0}, 2x+2, cantor_proj)");
  }
  Decision uf = decide_filter_pair(principal0, times_map(2), cantor_proj());
  if (uf.answer != Answer::DoesNotGenerate ||
      uf.witness != Family::u(FamilyKind::U2, principal0, Threshold::Aleph0Plus)) {
    out.fail("filter({0}, times(2), cantor_proj)");
  }
  try {
    decide_filter_pair(FilterOracle::frechet(), identity_map(), identity_map());
    out.fail("Fréchet filter pair was decided");
  } catch (const Error& e) {
    if (std::string(e.code()) != errc::unsupported_filter) {
      out.fail("Fréchet filter pair raised " + std::string(e.code()));
    }
  }
  if (decide_partition_pair(2, spread, cantor_proj()).answer != Answer::Generates) {
    out.fail("partition(2, spread, cantor_proj)");
  }
  Decision s4 = decide_partition_pair(2, shift_map(1), cantor_proj());
  if (s4.witness != Family::s(FamilyKind::S4)) {
    out.fail("partition(2, shift(1), cantor_proj)");
  }
  Decision id = decide_sym_pair(identity_map(), identity_map());
  if (!id.witness || id.witness->kind != FamilyKind::S1) {
    out.fail("sym(id, id)");
  }

  auto grid = oracle::shape_grid(5001, 1);
  std::mt19937_64 rng(5002);
  std::vector<MapExpr> pool{times_map(2), divfloor_map(2), shift_map(1), identity_map(),
                            cantor_proj(), twice_plus_two, spread, constant_map(0),
                            compose(times_map(2), cantor_proj())};
  while (pool.size() < 40) {
    pool.push_back(oracle::random_expr(rng, grid, 1, 25));
  }
  std::size_t refusals = 0;
  for (const auto& f : pool) {
    for (const auto& g : pool) {
      std::vector<Decision> ds{decide_sym_pair(f, g),
                               decide_pointwise_stab_pair({0, 1}, f, g),
                               decide_filter_pair(principal0, f, g),
                               decide_partition_pair(2, f, g),
                               decide_partition_pair(3, f, g)};
      for (const auto& d : ds) {
        if (d.answer != Answer::DoesNotGenerate) {
          continue;
        }
        ++refusals;
        if (!witness_holds(d, f, g)) {
          out.fail("witness recheck failed at " + to_string(f) + " ; " + to_string(g));
        }
      }
    }
  }
  if (out.ok) {
    out.detail = "examples reproduced; " + std::to_string(refusals) + " witnesses rechecked";
  }
  return out;
}

// ---------------------------------------------------------------------------
// 6. Inverse machinery.

Outcome inverse_machinery() {
  Outcome out;
  std::vector<MapExpr> maps{identity_map(),   shift_map(1),      shift_map(5),
                            times_map(2),     times_map(3),      divfloor_map(2),
                            divfloor_map(3),  perm_map({1, 0}),  perm_map({2, 0, 1}),
                            constant_map(0),  constant_map(7),
                            compose(shift_map(1), divfloor_map(2)),
                            compose(times_map(3), shift_map(1))};
  for (const auto& f : oracle::shape_grid(6001, 1)) {
    maps.emplace_back(f);
  }
  for (const auto& e : maps) {
    MapExpr inv = invert(e);
    for (std::uint64_t x = 0; x < 1000; ++x) {
      std::uint64_t y = oracle::eval(e, x);
      std::uint64_t z = oracle::eval(inv, x);
      if (oracle::eval(e, oracle::eval(inv, y)) != y ||
          oracle::eval(inv, oracle::eval(e, z)) != z) {
        out.fail("inverse law fails for " + to_string(e) + " at " + std::to_string(x));
        break;
      }
    }
    auto nf = normalize(e);
    auto ni = normalize(inv);
    if (!nf || !ni || exact_certificate(*nf).c != exact_certificate(*ni).d ||
        oracle::collapse(*nf) != oracle::defect(*ni)) {
      out.fail("c(f) != d(f') for " + to_string(e));
    }
  }
  if (normalize(invert(times_map(2))) != normalize(divfloor_map(2)) ||
      normalize(invert(divfloor_map(2))) != normalize(times_map(2)) ||
      normalize(invert(identity_map())) != normalize(identity_map())) {
    out.fail("named inverse examples");
  }

  std::vector<InversePair> pass{{divfloor_map(2), times_map(2)}, {divfloor_map(2), times_map(2)}};
  if (chain_inverse_check(pass, 1000) != ChainVerdict{ChainVerdict::Kind::Pass, 0, 0}) {
    out.fail("chain [(halve, double), (halve, double)]");
  }
  std::vector<InversePair> ident{{identity_map(), identity_map()}};
  if (chain_inverse_check(ident, 1000) != ChainVerdict{ChainVerdict::Kind::Pass, 0, 0}) {
    out.fail("chain [(id, id)]");
  }
  std::vector<InversePair> bad{{times_map(2), divfloor_map(2)}, {times_map(2), divfloor_map(2)}};
  ChainVerdict v = chain_inverse_check(bad, 1000);
  if (v.kind != ChainVerdict::Kind::HypothesisViolated || v.witness != 1) {
    out.fail("chain [(double, halve), (double, halve)]");
  }
  if (out.ok) {
    out.detail = std::to_string(maps.size()) + " maps, chain examples reproduced";
  }
  return out;
}

// ---------------------------------------------------------------------------
// 7. Normalization.

Outcome normalization() {
  Outcome out;
  auto grid = oracle::shape_grid(7001, 1);
  std::mt19937_64 rng(7002);
  for (int i = 0; i < 1000; ++i) {
    const AffinePeriodic& f = grid[rng() % grid.size()];
    const AffinePeriodic& g = grid[rng() % grid.size()];
    MapExpr e = compose(MapExpr(f), MapExpr(g));
    auto nf = normalize(e);
    if (!nf) {
      out.fail("absent for " + to_string(e));
      continue;
    }
    std::uint64_t window = 10 * (nf->threshold + nf->period) + 1000;
    for (std::uint64_t x = 0; x < window; ++x) {
      if (oracle::eval(*nf, x) != oracle::eval(g, oracle::eval(f, x))) {
        out.fail("disagreement for " + to_string(e) + " at " + std::to_string(x));
        break;
      }
    }
  }
  std::size_t absent = 0;
  for (int i = 0; i < 200; ++i) {
    MapExpr e = oracle::random_expr(rng, grid, 2, 30);
    bool has_cantor = false;
    std::function<void(const MapExpr&)> scan = [&](const MapExpr& x) {
      if (x.is_cantor()) {
        has_cantor = true;
      } else if (const Composite* c = x.composite()) {
        scan(c->first);
        scan(c->second);
      }
    };
    scan(e);
    if (!has_cantor) {
      continue;
    }
    ++absent;
    if (normalize(e).has_value()) {
      out.fail("normalized " + to_string(e));
    }
  }
  if (normalize(cantor_proj()).has_value()) {
    out.fail("normalized cantor_proj");
  }
  if (out.ok) {
    out.detail = "1000 pairs agree; " + std::to_string(absent + 1) + " pairing expressions absent";
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"finite-case counts", finite_counts},
      {"full-relation words", full_relation_words},
      {"interval-rule soundness", interval_soundness},
      {"semigroup closure", semigroup_closure},
      {"generating-pair deciders", generating_pairs},
      {"inverse machinery", inverse_machinery},
      {"normalization", normalization},
  };
  int failed = 0;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d (%s): %s\n", o.ok ? "PASS" : "FAIL", k, name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
