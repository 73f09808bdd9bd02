#pragma once

// Finitely described total self-maps of the naturals.
//
// Maps are written to the right of their argument and composed from left to
// right: Compose{f, g} sends x to (x f) g, i.e. applies f first.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "maxsg/core.hpp"
#include "maxsg/periodic_set.hpp"

namespace maxsg {

/// f(x) = table[x] for x < threshold + period, and f(x + period) = f(x) + shift
/// for every x >= threshold.
struct AffinePeriodic {
  std::uint64_t threshold = 0;
  std::uint64_t period = 1;
  std::uint64_t shift = 0;
  std::vector<std::uint64_t> table;

  std::uint64_t operator()(std::uint64_t x) const;

  /// The entry table[threshold + r]: where the r-th tail progression starts.
  std::uint64_t tail_start(std::uint64_t r) const {
    return table[threshold + r];
  }

  friend bool operator==(const AffinePeriodic&, const AffinePeriodic&) = default;
};

/// Throws Error(ArityError) on period 0 or a table of the wrong length.
void validate(const AffinePeriodic& f);

/// Least period, then least threshold.
AffinePeriodic canonical(AffinePeriodic f);

/// The map x -> (x first) second, in canonical form.
AffinePeriodic compose(const AffinePeriodic& first, const AffinePeriodic& second);

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z);

/// z -> first component of cantor_unpair(z).
struct CantorProj {
  friend bool operator==(CantorProj, CantorProj) = default;
};

struct Composite;

/// Immutable expression: AffinePeriodic, CantorProj or Composite.
class MapExpr {
 public:
  MapExpr(AffinePeriodic f);  // NOLINT: validates
  MapExpr(CantorProj);        // NOLINT

  static MapExpr compose(MapExpr first, MapExpr second);

  const AffinePeriodic* affine() const;
  bool is_cantor() const;
  const Composite* composite() const;

  template <class Visitor>
  decltype(auto) visit(Visitor&& v) const;

 private:
  struct Node;
  explicit MapExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Composite {
  MapExpr first;
  MapExpr second;
};

struct MapExpr::Node {
  std::variant<AffinePeriodic, CantorProj, Composite> value;
};

template <class Visitor>
decltype(auto) MapExpr::visit(Visitor&& v) const {
  return std::visit(std::forward<Visitor>(v), node_->value);
}

inline MapExpr compose(MapExpr first, MapExpr second) {
  return MapExpr::compose(std::move(first), std::move(second));
}

MapExpr identity_map();
MapExpr shift_map(std::uint64_t k);
MapExpr times_map(std::uint64_t k);
/// k >= 1
MapExpr divfloor_map(std::uint64_t k);
/// `images` must be a permutation of 0..images.size()-1; fixes everything
/// beyond.
MapExpr perm_map(const std::vector<std::uint64_t>& images);
MapExpr constant_map(std::uint64_t c);
MapExpr cantor_proj();

std::uint64_t eval(const MapExpr& e, std::uint64_t x);

/// Canonical affine-periodic form, or nullopt when the expression contains
/// the pairing projection.
std::optional<AffinePeriodic> normalize(const MapExpr& e);

/// The image of a set under a map. Exact for every expression.
PeriodicSet image(const AffinePeriodic& f, const PeriodicSet& domain);
PeriodicSet image(const MapExpr& e, const PeriodicSet& domain);

struct Certificate {
  Tri inj = Tri::Unknown;
  Tri surj = Tri::Unknown;
  CardInterval d = CardInterval::unbounded();
  CardInterval c = CardInterval::unbounded();
  CardInterval kinf = CardInterval::unbounded();
  Tri fin_image = Tri::Unknown;

  bool is_exact() const {
    return d.is_exact() && c.is_exact() && kinf.is_exact();
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate exact_certificate(const AffinePeriodic& f);

/// Exact when the expression normalizes or is the pairing projection;
/// otherwise the composition interval rules are folded over the tree and
/// tightened with the exact image of the whole expression.
Certificate certify(const MapExpr& e);

/// An infinite preimage: either an eventually periodic set, or the union of
/// the pairing columns {pair(x, y) : y in N} over x in an eventually
/// periodic set.
class InfiniteFiber {
 public:
  static InfiniteFiber periodic(PeriodicSet members);
  static InfiniteFiber columns(PeriodicSet column_indices);

  bool contains(std::uint64_t x) const;
  std::vector<std::uint64_t> first(std::size_t k) const;
  std::string describe() const;

  bool is_columns() const { return columns_; }
  const PeriodicSet& set() const { return set_; }

 private:
  PeriodicSet set_;
  bool columns_ = false;
};

struct FiniteFiber {
  std::vector<std::uint64_t> elements;  // exhaustive, sorted
};

struct UnknownFiber {
  std::vector<std::uint64_t> sampled;  // every preimage below the cap
  std::uint64_t cap = 0;
};

using FiberReport = std::variant<FiniteFiber, InfiniteFiber, UnknownFiber>;

/// The preimage of y. cap >= 1 bounds the search when no exact analysis
/// applies.
FiberReport fiber(const MapExpr& e, std::uint64_t y, std::uint64_t cap);

/// Semigroup inverse with least-preimage transversal. Points off the image
/// are sent where their nearest image point below is sent (or the least
/// image point, below the image), which keeps the inverse affine-periodic.
/// Throws Error(NotInvertibleInClass) for maps whose every inverse lies
/// outside the class.
MapExpr invert(const MapExpr& e);

struct InversePair {
  MapExpr map;
  MapExpr inverse;
};

struct ChainVerdict {
  enum class Kind { Pass, HypothesisViolated, ConclusionFailed };
  Kind kind = Kind::Pass;
  std::size_t index = 0;      // offending link i (1-based chain position)
  std::uint64_t witness = 0;  // offending point

  friend bool operator==(const ChainVerdict&, const ChainVerdict&) = default;
};

/// Checks, on [0, window), that the product of the inverses u0' u1' ... un'
/// and the reversed product un ... u1 u0 are mutual inverses, provided each
/// image of a partial product u0' ... u(i-1)' lies inside the image of ui.
/// Throws Error(InverseLawViolated) if some pair is not an inverse pair.
ChainVerdict chain_inverse_check(std::span<const InversePair> pairs,
                                 std::uint64_t window);

struct WindowReport {
  std::uint64_t window = 0;
  std::vector<std::uint64_t> hit;     // values in [0, M) hit from [0, M)
  std::vector<std::uint64_t> missed;  // values in [0, M) not hit from [0, M)
  std::uint64_t collisions = 0;       // M minus the number of distinct values
  std::map<std::uint64_t, std::uint64_t> fiber_sizes;  // value -> count
  std::map<std::uint64_t, std::uint64_t> histogram;    // count -> #values
};

/// Empirical statistics of the map restricted to [0, M). Never a proof.
WindowReport window_stats(const MapExpr& e, std::uint64_t M);

std::string to_string(const AffinePeriodic& f);
std::string to_string(const MapExpr& e);

}  // namespace maxsg
