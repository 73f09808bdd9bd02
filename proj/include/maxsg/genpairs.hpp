#pragma once

// Does a pair of maps, together with a subgroup of the symmetric group,
// generate the full transformation monoid? A refusal names a maximal
// subsemigroup that contains the subgroup and both maps.

#include <optional>
#include <string>
#include <vector>

#include "maxsg/classify.hpp"
#include "maxsg/mapexpr.hpp"

namespace maxsg {

struct Decision {
  enum class Answer { Generates, DoesNotGenerate, Unknown };
  Answer answer = Answer::Unknown;
  std::optional<Family> witness;  // DoesNotGenerate
  std::string blocking;           // Unknown

  friend bool operator==(const Decision&, const Decision&) = default;
};

std::string to_string(Decision::Answer a);

/// With the whole symmetric group.
Decision decide_sym_pair(const MapExpr& f, const MapExpr& g);

/// With the pointwise stabiliser of the finite set sigma.
Decision decide_pointwise_stab_pair(std::vector<std::uint64_t> sigma,
                                    const MapExpr& f, const MapExpr& g);

/// With the stabiliser of a principal filter. Throws Error(UnsupportedFilter)
/// for the Frechet filter.
Decision decide_filter_pair(const FilterOracle& filter, const MapExpr& f,
                            const MapExpr& g);

/// With the stabiliser of the partition into residue classes mod n.
Decision decide_partition_pair(unsigned n, const MapExpr& f, const MapExpr& g);

}  // namespace maxsg
