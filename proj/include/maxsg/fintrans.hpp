#pragma once

// Brute-force engine for the full transformation monoid T_n on
// {0, ..., n-1}: closures, maximal subgroups of S_n and the maximal
// subsemigroups of T_n.

#include <cstdint>
#include <string>
#include <vector>

namespace maxsg {

struct FinMap {
  std::vector<std::uint8_t> images;

  unsigned n() const { return static_cast<unsigned>(images.size()); }
  unsigned rank() const;
  bool is_permutation() const { return rank() == n(); }

  friend auto operator<=>(const FinMap&, const FinMap&) = default;
};

/// x -> (x a) b
FinMap fin_compose(const FinMap& a, const FinMap& b);

/// Base-n code with images[0] least significant; 1 <= n <= 7.
std::uint32_t encode(const FinMap& f);
FinMap decode(unsigned n, std::uint32_t code);

/// "[1,0,0]"
std::string to_string(const FinMap& f);

/// Sorted element codes.
using ElementSet = std::vector<std::uint32_t>;

/// Least composition-closed set containing the generators. Throws
/// Error(InvalidParameters) unless 1 <= n <= 7 and every generator acts on n
/// points.
ElementSet closure(unsigned n, const std::vector<FinMap>& gens);

/// Generators of S_n: a transposition and an n-cycle.
std::vector<FinMap> symmetric_generators(unsigned n);

/// Every map of T_n with rank at most r.
ElementSet maps_of_rank_at_most(unsigned n, unsigned r);
ElementSet all_maps(unsigned n);
ElementSet all_permutations(unsigned n);

/// 2 <= n <= 5, ordered by size then elements.
std::vector<ElementSet> maximal_subgroups_symn(unsigned n);

struct SubsemigroupReport {
  ElementSet elements;
  bool is_closed = false;
  bool is_maximal = false;
  std::string description;
};

struct CompletenessResult {
  bool complete = false;
  std::uint64_t tuples = 0;          // number of transversal tuples covered
  std::uint64_t closures = 0;        // distinct partial closures explored
  std::vector<FinMap> counterexample;  // a transversal with proper closure
};

/// Every choice of one element outside each candidate generates T_n.
/// Partial tuples are merged by their closure, so the work is bounded by the
/// number of distinct closures rather than the number of tuples.
CompletenessResult completeness_report(unsigned n,
                                       const std::vector<ElementSet>& candidates);
bool completeness_check(unsigned n, const std::vector<ElementSet>& candidates);

/// 2 <= n <= 4. Throws Error(CompletenessFailure) if some transversal of the
/// complements generates a proper subsemigroup.
std::vector<SubsemigroupReport> maximal_subsemigroups_Tn(unsigned n);

/// closure(S_n u extra) = T_n, for 1 <= n <= 7.
bool generates_Tn(unsigned n, const std::vector<FinMap>& extra);

}  // namespace maxsg
