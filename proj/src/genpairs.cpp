#include "maxsg/genpairs.hpp"

#include <algorithm>

#include "maxsg/error.hpp"

namespace maxsg {

std::string to_string(Decision::Answer a) {
  switch (a) {
    case Decision::Answer::Generates:
      return "generates";
    case Decision::Answer::DoesNotGenerate:
      return "does_not_generate";
    default:
      return "unknown";
  }
}

namespace {

Decision generates() { return {Decision::Answer::Generates, std::nullopt, {}}; }

Decision refuse(Family w) {
  return {Decision::Answer::DoesNotGenerate, std::move(w), {}};
}

Decision unknown(std::string blocking) {
  return {Decision::Answer::Unknown, std::nullopt, std::move(blocking)};
}

bool both_members(const Family& fam, const MapExpr& f, const MapExpr& g) {
  return member(fam, f).answer == Tri::Yes && member(fam, g).answer == Tri::Yes;
}

// f injective with d(f) = aleph0, g surjective with k(g, aleph0) = aleph0.
Tri base_oriented(const Certificate& f, const Certificate& g) {
  Tri t = tri_and(f.inj, at_least(f.d, Threshold::Aleph0));
  return tri_and(t, tri_and(g.surj, at_least(g.kinf, Threshold::Aleph0)));
}

struct Oriented {
  Decision refusal;  // meaningful when !ok
  bool ok = false;
  bool swapped = false;
};

Oriented sym_stage(const MapExpr& f, const MapExpr& g) {
  Certificate cf = certify(f);
  Certificate cg = certify(g);
  Tri forward = base_oriented(cf, cg);
  Tri backward = base_oriented(cg, cf);
  if (forward == Tri::Yes || backward == Tri::Yes) {
    return {{}, true, forward != Tri::Yes};
  }
  for (auto k : {FamilyKind::S1, FamilyKind::S2, FamilyKind::S3, FamilyKind::S4,
                 FamilyKind::S5}) {
    Family fam = Family::s(k);
    if (in_S(k, cf).answer == Tri::Yes && in_S(k, cg).answer == Tri::Yes) {
      return {refuse(fam), false, false};
    }
  }
  auto describe = [](const Certificate& c) {
    return "inj=" + to_string(c.inj) + ", d=" + c.d.to_string() +
           ", surj=" + to_string(c.surj) + ", k=" + c.kinf.to_string();
  };
  // Sorted so that the text does not depend on the order of the pair.
  std::string a = describe(cf);
  std::string b = describe(cg);
  if (b < a) {
    std::swap(a, b);
  }
  std::string why = "injective/surjective pair conditions undecided for the maps (" +
                    a + ") and (" + b + ")";
  return {unknown(why), false, false};
}

bool subset_of(const std::vector<std::uint64_t>& values,
               const std::vector<std::uint64_t>& gamma) {
  return std::all_of(values.begin(), values.end(), [&](std::uint64_t v) {
    return std::binary_search(gamma.begin(), gamma.end(), v);
  });
}

std::vector<std::uint64_t> images_of(const MapExpr& e,
                                     const std::vector<std::uint64_t>& gamma) {
  std::vector<std::uint64_t> out;
  for (auto x : gamma) {
    out.push_back(eval(e, x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Gamma e^-1 is not inside Gamma: something outside Gamma maps into Gamma.
bool preimage_escapes(const MapExpr& e, const std::vector<std::uint64_t>& gamma) {
  PeriodicSet from_outside = image(e, PeriodicSet::finite(gamma).complement());
  return std::any_of(gamma.begin(), gamma.end(),
                     [&](std::uint64_t x) { return from_outside.contains(x); });
}

bool inside_image(const MapExpr& e, const std::vector<std::uint64_t>& gamma) {
  PeriodicSet img = image(e, PeriodicSet::naturals());
  return std::all_of(gamma.begin(), gamma.end(),
                     [&](std::uint64_t x) { return img.contains(x); });
}

std::vector<std::uint64_t> normalized(std::vector<std::uint64_t> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) {
    throw Error(errc::invalid_parameters, "the stabilised set must be nonempty");
  }
  if (s.size() > 16) {
    throw Error(errc::invalid_parameters,
                "the stabilised set may have at most 16 points");
  }
  return s;
}

// A refusal that names a family, or Unknown if no listed family holds both
// maps decisively.
Decision witness_among(const std::vector<Family>& families, const MapExpr& f,
                       const MapExpr& g, const std::string& context) {
  for (const auto& fam : families) {
    if (both_members(fam, f, g)) {
      return refuse(fam);
    }
  }
  return unknown("no decisive witness among the " + context + " families");
}

}  // namespace

Decision decide_sym_pair(const MapExpr& f, const MapExpr& g) {
  Oriented o = sym_stage(f, g);
  return o.ok ? generates() : o.refusal;
}

Decision decide_pointwise_stab_pair(std::vector<std::uint64_t> sigma,
                                    const MapExpr& f0, const MapExpr& g0) {
  sigma = normalized(std::move(sigma));
  Oriented o = sym_stage(f0, g0);
  if (!o.ok) {
    return o.refusal;
  }
  const MapExpr& f = o.swapped ? g0 : f0;
  const MapExpr& g = o.swapped ? f0 : g0;
  const std::size_t m = sigma.size();
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::vector<std::uint64_t> gamma;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) {
        gamma.push_back(sigma[i]);
      }
    }
    std::vector<std::uint64_t> gf = images_of(f, gamma);
    std::vector<std::uint64_t> gg = images_of(g, gamma);
    bool f_leaves = !subset_of(gf, gamma);
    bool g_leaves = !subset_of(gg, gamma);
    bool g_pre_escapes = preimage_escapes(g, gamma);
    bool clause_i = f_leaves && g_pre_escapes;
    bool clause_ii = g_leaves && g_pre_escapes && gg.size() == gamma.size();
    bool clause_iii = f_leaves && preimage_escapes(f, gamma) && inside_image(f, gamma);
    if (!(clause_i || clause_ii || clause_iii)) {
      return witness_among({Family::f(FamilyKind::F1, gamma, Threshold::Aleph0Plus),
                            Family::f(FamilyKind::F2, gamma, Threshold::Aleph0Plus)},
                           f0, g0, "finite-set");
    }
  }
  return generates();
}

Decision decide_filter_pair(const FilterOracle& filter, const MapExpr& f,
                            const MapExpr& g) {
  if (filter.kind() != FilterOracle::Kind::Principal) {
    throw Error(errc::unsupported_filter,
                "generating pairs are decided only for principal filters");
  }
  const auto& gamma = filter.generator();
  if (gamma.size() == 1) {
    Decision d = decide_pointwise_stab_pair(gamma, f, g);
    if (d.witness && (d.witness->kind == FamilyKind::F1 ||
                      d.witness->kind == FamilyKind::F2)) {
      FamilyKind k = d.witness->kind == FamilyKind::F1 ? FamilyKind::U1 : FamilyKind::U2;
      d.witness = Family::u(k, filter, d.witness->mu);
    }
    return d;
  }
  Oriented o = sym_stage(f, g);
  if (!o.ok) {
    return o.refusal;
  }
  std::vector<Family> families;
  for (auto k : {FamilyKind::U1, FamilyKind::U2}) {
    for (auto mu : {Threshold::Aleph0, Threshold::Aleph0Plus}) {
      families.push_back(Family::u(k, filter, mu));
    }
  }
  std::string undecided;
  for (const auto& fam : families) {
    Tri a = member(fam, f).answer;
    Tri b = member(fam, g).answer;
    if (a == Tri::Yes && b == Tri::Yes) {
      return refuse(fam);
    }
    if (a != Tri::No && b != Tri::No && undecided.empty()) {
      undecided = "membership in " + fam.name() + " undecided";
    }
  }
  return undecided.empty() ? generates() : unknown(undecided);
}

Decision decide_partition_pair(unsigned n, const MapExpr& f0, const MapExpr& g0) {
  Oriented o = sym_stage(f0, g0);
  if (!o.ok) {
    return o.refusal;
  }
  const MapExpr& f = o.swapped ? g0 : f0;
  const MapExpr& g = o.swapped ? f0 : g0;
  Relation rf = rho(f, n);
  Relation rg = rho(g, n);
  bool f_moves = !is_permutation(rf);
  bool g_moves = !is_permutation(rg);
  if ((f_moves && g_moves) || (f_moves && is_total(invert_rel(rf))) ||
      (g_moves && is_total(rg))) {
    return generates();
  }
  return witness_among({Family::a(FamilyKind::A1, n), Family::a(FamilyKind::A2, n)},
                       f0, g0, "partition");
}

}  // namespace maxsg
