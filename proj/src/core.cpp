#include "maxsg/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxsg {

std::string Card::to_string() const {
  return infinite_ ? "aleph0" : std::to_string(value_);
}

Card card_add(Card a, Card b) {
  if (a.is_aleph0() || b.is_aleph0()) {
    return Card::aleph0();
  }
  std::uint64_t sum = 0;
  if (__builtin_add_overflow(a.value(), b.value(), &sum)) {
    throw std::overflow_error("finite cardinal sum exceeds 64 bits");
  }
  return sum;
}

std::string to_string(Threshold mu) {
  return mu == Threshold::Aleph0 ? "aleph0" : "aleph0+";
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "yes";
    case Tri::No:
      return "no";
    default:
      return "unknown";
  }
}

CardInterval::CardInterval(Card lo, Card hi) : lo_(lo), hi_(hi) {
  if (hi < lo) {
    throw std::invalid_argument("malformed cardinal interval [" +
                                lo.to_string() + ", " + hi.to_string() + "]");
  }
}

std::string CardInterval::to_string() const {
  if (is_exact()) {
    return lo_.to_string();
  }
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

CardInterval operator+(const CardInterval& a, const CardInterval& b) {
  return CardInterval(a.lo() + b.lo(), a.hi() + b.hi());
}

CardInterval intersect(const CardInterval& a, const CardInterval& b) {
  Card lo = std::max(a.lo(), b.lo());
  Card hi = std::min(a.hi(), b.hi());
  if (hi < lo) {
    throw std::logic_error("contradictory cardinal bounds " + a.to_string() +
                           " and " + b.to_string());
  }
  return CardInterval(lo, hi);
}

Tri is_zero(const CardInterval& x) {
  if (x.hi() == Card(0)) {
    return Tri::Yes;
  }
  return x.lo() > Card(0) ? Tri::No : Tri::Unknown;
}

Tri is_positive(const CardInterval& x) { return tri_not(is_zero(x)); }

Tri at_least(const CardInterval& x, Threshold mu) {
  if (reaches(x.lo(), mu)) {
    return Tri::Yes;
  }
  return reaches(x.hi(), mu) ? Tri::Unknown : Tri::No;
}

CardInterval compose_defect(const CardInterval& defect_f,
                            const CardInterval& collapse_g,
                            const CardInterval& defect_g, Tri g_injective) {
  // d(g) <= d(fg) <= d(f) + d(g)
  CardInterval out(defect_g.lo(), defect_f.hi() + defect_g.hi());
  // g injective: d(fg) = d(f) + d(g)
  if (g_injective == Tri::Yes || collapse_g.hi() == Card(0)) {
    out = intersect(out, defect_f + defect_g);
  }
  // c(g) < aleph0 <= d(f) forces d(fg) >= aleph0
  if (collapse_g.hi().is_finite() && defect_f.lo().is_aleph0()) {
    out = intersect(out, CardInterval::exact(Card::aleph0()));
  }
  return out;
}

CardInterval compose_collapse(const CardInterval& collapse_f,
                              const CardInterval& defect_f,
                              const CardInterval& collapse_g,
                              Tri f_surjective) {
  // c(f) <= c(fg) <= c(f) + c(g)
  CardInterval out(collapse_f.lo(), collapse_f.hi() + collapse_g.hi());
  // f surjective: c(fg) = c(f) + c(g)
  if (f_surjective == Tri::Yes || defect_f.hi() == Card(0)) {
    out = intersect(out, collapse_f + collapse_g);
  }
  // d(f) < aleph0 <= c(g) forces c(fg) >= aleph0
  if (defect_f.hi().is_finite() && collapse_g.lo().is_aleph0()) {
    out = intersect(out, CardInterval::exact(Card::aleph0()));
  }
  return out;
}

CardInterval compose_kinf(const CardInterval& kinf_f,
                          const CardInterval& kinf_g) {
  return CardInterval(0, kinf_f.hi() + kinf_g.hi());
}

}  // namespace maxsg
