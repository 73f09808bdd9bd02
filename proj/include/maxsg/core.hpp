#pragma once

// Cardinal arithmetic on {0, 1, 2, ..., aleph0}, sound interval bounds on
// such cardinals, three-valued logic, and the interval transformers that
// bound the defect, collapse and infinite contraction index of a composite
// map from the parameters of its factors.

#include <compare>
#include <cstdint>
#include <string>

namespace maxsg {

/// A cardinal that is either a natural number or aleph0.
class Card {
 public:
  constexpr Card() noexcept = default;
  constexpr Card(std::uint64_t n) noexcept : value_(n) {}  // NOLINT

  static constexpr Card aleph0() noexcept {
    Card c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_finite() const noexcept { return !infinite_; }
  constexpr bool is_aleph0() const noexcept { return infinite_; }

  // Only meaningful for finite cardinals.
  constexpr std::uint64_t value() const noexcept { return value_; }

  friend constexpr bool operator==(Card, Card) noexcept = default;

  friend constexpr std::strong_ordering operator<=>(Card a, Card b) noexcept {
    if (a.infinite_ || b.infinite_) {
      return a.infinite_ <=> b.infinite_;
    }
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

/// Cardinal sum; aleph0 absorbs. Throws std::overflow_error if a finite sum
/// does not fit in 64 bits.
Card card_add(Card a, Card b);

inline Card operator+(Card a, Card b) { return card_add(a, b); }

/// The infinite cardinals a threshold parameter can take when the
/// underlying set is countable: aleph0 itself and its successor.
enum class Threshold { Aleph0, Aleph0Plus };

/// c >= mu. Every Card is below aleph0+.
constexpr bool reaches(Card c, Threshold mu) noexcept {
  return mu == Threshold::Aleph0 && c.is_aleph0();
}

std::string to_string(Threshold mu);

enum class Tri : std::uint8_t { No, Yes, Unknown };

constexpr Tri to_tri(bool b) noexcept { return b ? Tri::Yes : Tri::No; }

constexpr Tri tri_not(Tri a) noexcept {
  switch (a) {
    case Tri::Yes:
      return Tri::No;
    case Tri::No:
      return Tri::Yes;
    default:
      return Tri::Unknown;
  }
}

constexpr Tri tri_and(Tri a, Tri b) noexcept {
  if (a == Tri::No || b == Tri::No) {
    return Tri::No;
  }
  if (a == Tri::Yes && b == Tri::Yes) {
    return Tri::Yes;
  }
  return Tri::Unknown;
}

constexpr Tri tri_or(Tri a, Tri b) noexcept {
  return tri_not(tri_and(tri_not(a), tri_not(b)));
}

std::string to_string(Tri t);

/// A closed interval [lo, hi] of cardinals, lo <= hi.
class CardInterval {
 public:
  /// Throws std::invalid_argument if lo > hi.
  CardInterval(Card lo, Card hi);

  static CardInterval exact(Card c) { return CardInterval(c, c); }
  static CardInterval unbounded() { return CardInterval(0, Card::aleph0()); }

  Card lo() const noexcept { return lo_; }
  Card hi() const noexcept { return hi_; }
  bool is_exact() const noexcept { return lo_ == hi_; }
  bool contains(Card c) const noexcept { return lo_ <= c && c <= hi_; }
  bool contains(const CardInterval& other) const noexcept {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  friend bool operator==(const CardInterval&, const CardInterval&) = default;

  std::string to_string() const;

 private:
  Card lo_;
  Card hi_;
};

/// Endpoint-wise sum.
CardInterval operator+(const CardInterval& a, const CardInterval& b);

/// Intersection of two bounds on the same quantity. Sound inputs never
/// produce an empty intersection, so an empty one throws std::logic_error.
CardInterval intersect(const CardInterval& a, const CardInterval& b);

// Three-valued comparisons of an interval-bounded cardinal.
Tri is_zero(const CardInterval& x);
Tri is_positive(const CardInterval& x);
Tri at_least(const CardInterval& x, Threshold mu);
inline Tri below(const CardInterval& x, Threshold mu) {
  return tri_not(at_least(x, mu));
}

/// Bound on d(fg) from d(f), c(g), d(g) and whether g is injective.
CardInterval compose_defect(const CardInterval& defect_f,
                            const CardInterval& collapse_g,
                            const CardInterval& defect_g, Tri g_injective);

/// Bound on c(fg) from c(f), d(f), c(g) and whether f is surjective.
CardInterval compose_collapse(const CardInterval& collapse_f,
                              const CardInterval& defect_f,
                              const CardInterval& collapse_g,
                              Tri f_surjective);

/// Bound on k(fg, aleph0) from k(f, aleph0) and k(g, aleph0).
CardInterval compose_kinf(const CardInterval& kinf_f,
                          const CardInterval& kinf_g);

}  // namespace maxsg
