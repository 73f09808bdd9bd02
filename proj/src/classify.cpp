#include "maxsg/classify.hpp"

#include <algorithm>
#include <set>

#include "maxsg/error.hpp"

namespace maxsg {

namespace {

const char* const kAleph0 = "ℵ₀";

std::string card_text(Card c) {
  return c.is_aleph0() ? kAleph0 : std::to_string(c.value());
}

std::string mu_text(Threshold mu) {
  return mu == Threshold::Aleph0 ? kAleph0 : "ℵ₀⁺";
}

std::string value_text(const std::string& name, const CardInterval& iv) {
  if (iv.is_exact()) {
    return name + "=" + card_text(iv.lo());
  }
  return name + " in [" + card_text(iv.lo()) + ", " + card_text(iv.hi()) + "]";
}

std::string set_text(const std::vector<std::uint64_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i > 0 ? "," : "") + std::to_string(v[i]);
  }
  return out + "}";
}

// One disjunct. `text` describes the fact that makes it true, false or
// undecided.
struct Clause {
  Tri value;
  std::string text;
};

Verdict disjunction(const std::vector<Clause>& clauses) {
  Verdict v;
  v.answer = Tri::No;
  for (const auto& c : clauses) {
    v.answer = tri_or(v.answer, c.value);
  }
  std::string sep;
  for (const auto& c : clauses) {
    if (c.value == v.answer) {
      v.reason += sep + c.text;
      sep = v.answer == Tri::No ? " and " : "; ";
      if (v.answer == Tri::Yes) {
        break;
      }
    }
  }
  if (v.answer == Tri::Unknown) {
    v.reason += " straddles the clause threshold";
  }
  return v;
}

Clause zero(const std::string& name, const CardInterval& iv) {
  return {is_zero(iv), value_text(name, iv)};
}

Clause positive(const std::string& name, const CardInterval& iv) {
  return {is_positive(iv), value_text(name, iv)};
}

Clause at_least_mu(const std::string& name, const CardInterval& iv,
                   Threshold mu) {
  Tri t = at_least(iv, mu);
  std::string rel = t == Tri::Yes ? ">=" : t == Tri::No ? "<" : "vs";
  return {t, value_text(name, iv) + " " + rel + " " + mu_text(mu)};
}

Clause below_mu(const std::string& name, const CardInterval& iv, Threshold mu) {
  Clause c = at_least_mu(name, iv, mu);
  c.value = tri_not(c.value);
  return c;
}

Clause frak_f(const Certificate& cert) {
  std::string text = cert.fin_image == Tri::Yes  ? "f has finite image"
                     : cert.fin_image == Tri::No ? "f has infinite image"
                                                 : "finiteness of the image undecided";
  return {cert.fin_image, text};
}

Clause both(Clause a, Clause b) {
  Tri t = tri_and(a.value, b.value);
  if (t == Tri::Yes) {
    return {t, a.text + " and " + b.text};
  }
  if (t == Tri::No) {
    return {t, a.value == Tri::No ? a.text : b.text};
  }
  return {t, a.value == Tri::Unknown ? a.text : b.text};
}

std::vector<std::uint64_t> normalize_gamma(std::vector<std::uint64_t> gamma) {
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  if (gamma.empty()) {
    throw Error(errc::invalid_parameters, "gamma must be a nonempty finite set");
  }
  return gamma;
}

void check_partition(unsigned n) {
  if (n < 2 || n > Relation::kMaxN) {
    throw Error(errc::invalid_parameters,
                "partition size must be between 2 and 8, got " + std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

FilterOracle FilterOracle::principal(std::vector<std::uint64_t> generator) {
  FilterOracle f;
  f.kind_ = Kind::Principal;
  f.generator_ = normalize_gamma(std::move(generator));
  return f;
}

FilterOracle FilterOracle::frechet() { return {}; }

Card FilterOracle::kappa() const {
  return kind_ == Kind::Principal ? Card(generator_.size()) : Card::aleph0();
}

bool FilterOracle::contains(const PeriodicSet& s) const {
  if (kind_ == Kind::Frechet) {
    return s.is_cofinite();
  }
  return std::all_of(generator_.begin(), generator_.end(),
                     [&](std::uint64_t g) { return s.contains(g); });
}

std::string FilterOracle::describe() const {
  return kind_ == Kind::Frechet ? "frechet" : "principal" + set_text(generator_);
}

std::string to_string(FamilyKind k) {
  static const char* const names[] = {"S1", "S2", "S3", "S4", "S5", "F1",
                                      "F2", "U1", "U2", "A1", "A2"};
  return names[static_cast<int>(k)];
}

std::string Family::name() const {
  std::string base = to_string(kind);
  switch (kind) {
    case FamilyKind::S3:
    case FamilyKind::S4:
      return base + "(aleph0)";
    case FamilyKind::F1:
    case FamilyKind::F2:
      return base + "(" + set_text(gamma) + "," + maxsg::to_string(mu) + ")";
    case FamilyKind::U1:
    case FamilyKind::U2:
      return base + "(" + (filter ? filter->describe() : "?") + "," +
             maxsg::to_string(mu) + ")";
    case FamilyKind::A1:
    case FamilyKind::A2:
      return base + "(n=" + std::to_string(n) + ")";
    default:
      return base;
  }
}

// ---------------------------------------------------------------------------

Verdict in_S(FamilyKind variant, const Certificate& cert) {
  const Threshold a0 = Threshold::Aleph0;
  switch (variant) {
    case FamilyKind::S1:
      return disjunction({zero("c(f)", cert.c), positive("d(f)", cert.d)});
    case FamilyKind::S2:
      return disjunction({positive("c(f)", cert.c), zero("d(f)", cert.d)});
    case FamilyKind::S3:
      return disjunction(
          {below_mu("c(f)", cert.c, a0), at_least_mu("d(f)", cert.d, a0)});
    case FamilyKind::S4:
      return disjunction(
          {at_least_mu("c(f)", cert.c, a0), below_mu("d(f)", cert.d, a0)});
    case FamilyKind::S5: {
      Verdict v = disjunction({below_mu("k(f,ℵ₀)", cert.kinf, a0)});
      if (v.answer == Tri::No) {
        v.reason = value_text("k(f,ℵ₀)", cert.kinf);
      }
      return v;
    }
    default:
      throw Error(errc::invalid_parameters,
                  to_string(variant) + " is not a symmetric-group family");
  }
}

Verdict in_F(FamilyKind variant, std::vector<std::uint64_t> gamma, Threshold mu,
             const MapExpr& e) {
  gamma = normalize_gamma(std::move(gamma));
  const std::string g = set_text(gamma);
  const Certificate cert = certify(e);

  if (variant == FamilyKind::F1) {
    PeriodicSet img = image(e, PeriodicSet::naturals());
    auto missing = std::find_if(gamma.begin(), gamma.end(),
                                [&](std::uint64_t x) { return !img.contains(x); });
    Clause outside{to_tri(missing != gamma.end()),
                   missing != gamma.end()
                       ? std::to_string(*missing) + " is not in the image"
                       : g + " lies inside the image"};
    PeriodicSet from_outside =
        image(e, PeriodicSet::finite(gamma).complement());
    bool closed = std::none_of(gamma.begin(), gamma.end(), [&](std::uint64_t x) {
      return from_outside.contains(x);
    });
    Clause pre{to_tri(closed), closed ? g + "f^-1 ⊆ " + g : g + "f^-1 ⊄ " + g};
    return disjunction({at_least_mu("d(f)", cert.d, mu), outside,
                        both(pre, below_mu("c(f)", cert.c, mu)), frak_f(cert)});
  }
  if (variant == FamilyKind::F2) {
    if (gamma.size() == 1 && mu == Threshold::Aleph0) {
      throw Error(errc::invalid_parameters,
                  "F2 with a singleton gamma requires nu = aleph0+");
    }
    std::set<std::uint64_t> values;
    for (auto x : gamma) {
      values.insert(eval(e, x));
    }
    bool shrinks = values.size() < gamma.size();
    Clause smaller{to_tri(shrinks), "|" + g + "f| = " + std::to_string(values.size()) +
                                        (shrinks ? " < " : " = ") +
                                        std::to_string(gamma.size())};
    bool fixed = std::equal(values.begin(), values.end(), gamma.begin(), gamma.end());
    Clause setwise{to_tri(fixed), fixed ? g + "f = " + g : g + "f ≠ " + g};
    return disjunction({at_least_mu("c(f)", cert.c, mu), smaller,
                        both(setwise, below_mu("d(f)", cert.d, mu)),
                        frak_f(cert)});
  }
  throw Error(errc::invalid_parameters,
              to_string(variant) + " is not a finite-set family");
}

Verdict in_U(FamilyKind variant, const FilterOracle& filter, Threshold mu,
             const MapExpr& e) {
  if (variant != FamilyKind::U1 && variant != FamilyKind::U2) {
    throw Error(errc::invalid_parameters,
                to_string(variant) + " is not a filter family");
  }
  if (filter.kind() == FilterOracle::Kind::Principal) {
    Verdict v = in_F(variant == FamilyKind::U1 ? FamilyKind::F1 : FamilyKind::F2,
                     filter.generator(), mu, e);
    v.reason = "principal filter generated by " + set_text(filter.generator()) +
               ": " + v.reason;
    return v;
  }
  // For the cofinite filter, over all subsets of N:
  //   (for all S not in F)(Sf not in F)  iff  c(f) < aleph0 or d(f) = aleph0
  //   (for all S in F)(c(f|S) > 0)       iff  c(f) = aleph0
  //   (for all S in F)(Sf in F)          iff  d(f) < aleph0
  Verdict v = in_S(variant == FamilyKind::U1 ? FamilyKind::S3 : FamilyKind::S4,
                   certify(e));
  v.reason = "Fréchet filter, subset quantifiers resolved in closed form: " +
             v.reason;
  return v;
}

Relation rho(const MapExpr& e, unsigned n) {
  check_partition(n);
  Relation r(n);
  for (unsigned i = 0; i < n; ++i) {
    PeriodicSet img = image(e, PeriodicSet::residue_class(i, n));
    for (unsigned j = 0; j < n; ++j) {
      if (img.meets_class_infinitely(j, n)) {
        r.set(i, j);
      }
    }
  }
  return r;
}

Verdict in_A(FamilyKind variant, unsigned n, const MapExpr& e) {
  Relation r = rho(e, n);
  std::string text = "ρ_f = " + to_string(r);
  if (is_permutation(r)) {
    return {Tri::Yes, text + " is a permutation"};
  }
  if (variant == FamilyKind::A1) {
    bool total = is_total(r);
    return {to_tri(!total), text + (total ? " is total and not a permutation"
                                          : " is not total")};
  }
  if (variant == FamilyKind::A2) {
    bool total = is_total(invert_rel(r));
    return {to_tri(!total),
            text + (total ? " has total inverse and is not a permutation"
                          : " has non-total inverse")};
  }
  throw Error(errc::invalid_parameters,
              to_string(variant) + " is not a partition family");
}

Tri in_frakF(const Certificate& cert) { return cert.fin_image; }

Verdict member(const Family& family, const MapExpr& e) {
  switch (family.kind) {
    case FamilyKind::S1:
    case FamilyKind::S2:
    case FamilyKind::S3:
    case FamilyKind::S4:
    case FamilyKind::S5:
      return in_S(family.kind, certify(e));
    case FamilyKind::F1:
    case FamilyKind::F2:
      return in_F(family.kind, family.gamma, family.mu, e);
    case FamilyKind::U1:
    case FamilyKind::U2:
      if (!family.filter) {
        throw Error(errc::invalid_parameters, "filter family without a filter");
      }
      return in_U(family.kind, *family.filter, family.mu, e);
    default:
      return in_A(family.kind, family.n, e);
  }
}

}  // namespace maxsg
