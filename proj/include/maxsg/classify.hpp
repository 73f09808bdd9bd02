#pragma once

// Membership in the maximal subsemigroups of the full transformation monoid
// on a countable set, for the families determined by the symmetric group,
// pointwise stabilisers of finite sets, filter stabilisers and finite
// partitions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxsg/core.hpp"
#include "maxsg/mapexpr.hpp"
#include "maxsg/periodic_set.hpp"
#include "maxsg/relcalc.hpp"

namespace maxsg {

class FilterOracle {
 public:
  enum class Kind { Principal, Frechet };

  /// Sets containing the (nonempty, finite) generator.
  static FilterOracle principal(std::vector<std::uint64_t> generator);
  /// Cofinite sets.
  static FilterOracle frechet();

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::uint64_t>& generator() const noexcept {
    return generator_;
  }
  /// Least cardinality of a member.
  Card kappa() const;
  bool contains(const PeriodicSet& s) const;
  std::string describe() const;

  friend bool operator==(const FilterOracle&, const FilterOracle&) = default;

 private:
  Kind kind_ = Kind::Frechet;
  std::vector<std::uint64_t> generator_;
};

enum class FamilyKind { S1, S2, S3, S4, S5, F1, F2, U1, U2, A1, A2 };

std::string to_string(FamilyKind k);

/// A family together with its parameters.
struct Family {
  FamilyKind kind = FamilyKind::S1;
  std::vector<std::uint64_t> gamma;          // F1, F2
  Threshold mu = Threshold::Aleph0Plus;      // F1, F2, U1, U2
  std::optional<FilterOracle> filter;        // U1, U2
  unsigned n = 0;                            // A1, A2

  static Family s(FamilyKind k) { return {k, {}, Threshold::Aleph0, {}, 0}; }
  static Family f(FamilyKind k, std::vector<std::uint64_t> gamma, Threshold mu) {
    return {k, std::move(gamma), mu, {}, 0};
  }
  static Family u(FamilyKind k, FilterOracle filter, Threshold mu) {
    return {k, {}, mu, std::move(filter), 0};
  }
  static Family a(FamilyKind k, unsigned n) {
    return {k, {}, Threshold::Aleph0, {}, n};
  }

  /// e.g. "S3(aleph0)", "F2({0},aleph0+)", "U1(principal{0},aleph0+)", "A1(n=2)"
  std::string name() const;

  friend bool operator==(const Family&, const Family&) = default;
};

struct Verdict {
  Tri answer = Tri::Unknown;
  std::string reason;
};

/// S1..S5, decided from the certificate alone.
Verdict in_S(FamilyKind variant, const Certificate& cert);

/// F1(gamma, mu) or F2(gamma, mu). Throws Error(InvalidParameters) for an
/// empty gamma and for F2 with a singleton gamma and mu = aleph0.
Verdict in_F(FamilyKind variant, std::vector<std::uint64_t> gamma, Threshold mu,
             const MapExpr& e);

/// U1(filter, mu) or U2(filter, mu). Principal filters reduce to in_F on the
/// generator; for the Frechet filter the subset quantifiers collapse to
/// conditions on d and c (U1 = S3(aleph0), U2 = S4(aleph0) for both mu).
Verdict in_U(FamilyKind variant, const FilterOracle& filter, Threshold mu,
             const MapExpr& e);

/// {(i, j) : (i mod n) e meets (j mod n) in infinitely many points}.
/// Throws Error(InvalidParameters) unless 2 <= n <= 8.
Relation rho(const MapExpr& e, unsigned n);

Verdict in_A(FamilyKind variant, unsigned n, const MapExpr& e);

Tri in_frakF(const Certificate& cert);

Verdict member(const Family& family, const MapExpr& e);

}  // namespace maxsg
