#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maxsg {

/// An eventually periodic subset of the naturals: below `threshold` the
/// members are listed in `head`; from `threshold` on, x is a member iff
/// x mod `period` is in `residues`.
///
/// Every constructor and set operation returns the canonical form (least
/// period, then least threshold), so structural equality is set equality.
class PeriodicSet {
 public:
  PeriodicSet() = default;  // the empty set

  static PeriodicSet finite(std::vector<std::uint64_t> members);
  static PeriodicSet residue_class(std::uint64_t residue, std::uint64_t modulus);
  static PeriodicSet naturals();
  /// Union of the finite set `members` and the progressions
  /// {start + k * step : k >= 0} for each start; step >= 1.
  static PeriodicSet from_progressions(std::vector<std::uint64_t> members,
                                       const std::vector<std::uint64_t>& starts,
                                       std::uint64_t step);
  static PeriodicSet from_parts(std::uint64_t threshold, std::uint64_t period,
                                std::vector<std::uint64_t> residues,
                                std::vector<std::uint64_t> head);

  bool contains(std::uint64_t x) const;
  bool empty() const { return residues_.empty() && head_.empty(); }
  bool is_finite() const { return residues_.empty(); }
  bool is_cofinite() const { return residues_.size() == period_; }

  /// Number of members (finite sets) or non-members (cofinite sets).
  std::uint64_t finite_count() const { return head_.size(); }
  std::uint64_t cofinite_gap_count() const;

  /// The first k members in increasing order (fewer if the set is finite).
  std::vector<std::uint64_t> first(std::size_t k) const;

  /// Least member >= x, if any.
  bool next_member(std::uint64_t x, std::uint64_t& out) const;

  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t period() const { return period_; }
  const std::vector<std::uint64_t>& residues() const { return residues_; }
  const std::vector<std::uint64_t>& head() const { return head_; }

  PeriodicSet complement() const;

  /// Does the set meet the residue class r mod n in infinitely many points?
  bool meets_class_infinitely(std::uint64_t r, std::uint64_t n) const;

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

  std::string describe() const;

 private:
  void canonicalize();

  std::uint64_t threshold_ = 0;
  std::uint64_t period_ = 1;
  std::vector<std::uint64_t> residues_;
  std::vector<std::uint64_t> head_;
};

PeriodicSet set_union(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet set_intersection(const PeriodicSet& a, const PeriodicSet& b);

}  // namespace maxsg
