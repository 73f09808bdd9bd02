#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maxsg {

/// A binary relation on {0, ..., n-1}, 1 <= n <= 8, stored as an n*n bit
/// matrix (bit i*n + j set iff (i, j) is in the relation).
class Relation {
 public:
  static constexpr unsigned kMaxN = 8;

  explicit Relation(unsigned n = 1);
  static Relation identity(unsigned n);
  static Relation full(unsigned n);
  static Relation from_pairs(unsigned n,
                             const std::vector<std::pair<unsigned, unsigned>>& pairs);
  /// {(i, perm[i])}
  static Relation from_permutation(const std::vector<std::uint8_t>& perm);
  static Relation from_bits(unsigned n, std::uint64_t bits);

  unsigned n() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool test(unsigned i, unsigned j) const noexcept {
    return (bits_ >> (i * n_ + j)) & 1U;
  }
  void set(unsigned i, unsigned j, bool value = true);

  /// Bit mask of {j : (i, j) in the relation}.
  std::uint32_t row(unsigned i) const noexcept {
    return static_cast<std::uint32_t>((bits_ >> (i * n_)) & ((1U << n_) - 1));
  }

  /// {j : (i, j) in the relation for some i in the bit mask `from`}.
  std::uint32_t image(std::uint32_t from) const noexcept;

  std::vector<std::pair<unsigned, unsigned>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  unsigned n_;
  std::uint64_t bits_ = 0;
};

/// Left-to-right composition: (i, k) iff (i, j) in a and (j, k) in b for some j.
/// Throws Error(DimensionMismatch) when the sizes differ.
Relation rel_compose(const Relation& a, const Relation& b);
bool is_total(const Relation& a);
Relation invert_rel(const Relation& a);
bool is_permutation(const Relation& a);

/// "{(0,0),(0,1)}", pairs in increasing order.
std::string to_string(const Relation& a);
/// Throws ParseError on malformed text or out-of-range points.
Relation parse_relation(std::string_view text, unsigned n);

struct Letter {
  enum class Kind { Perm, Rho, Sigma };
  Kind kind = Kind::Rho;
  std::vector<std::uint8_t> perm;  // images, only for Kind::Perm

  static Letter permutation(std::vector<std::uint8_t> images) {
    return {Kind::Perm, std::move(images)};
  }
  static Letter rho() { return {Kind::Rho, {}}; }
  static Letter sigma() { return {Kind::Sigma, {}}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Left-to-right product of the letters with Rho and Sigma substituted.
Relation evaluate(const Word& w, const Relation& rho, const Relation& sigma);

std::string to_string(const Letter& l);
std::string to_string(const Word& w);

/// Shortest word over Sym(n), rho, sigma evaluating to n x n. Among shortest
/// words the lexicographically least is returned, letters ordered
/// Perm < Rho < Sigma and permutations by their image lists.
/// Throws Error(HypothesisViolated) unless rho and sigma^-1 are total and
/// neither is a permutation.
Word bfin_witness(const Relation& rho, const Relation& sigma);

/// The constructive procedure: grow 0 rho a0 sigma a1 sigma ... to the full
/// set through a least set A with A sigma full, do the same for the pair
/// (sigma^-1, rho^-1), and prepend the inverse of the second word.
Word bfin_greedy(const Relation& rho, const Relation& sigma);

}  // namespace maxsg
