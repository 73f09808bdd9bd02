#pragma once

// Reference computations that share no code with the library beyond the
// AffinePeriodic record itself: pointwise evaluation, window statistics and
// window extrapolation of the map parameters.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "maxsg/mapexpr.hpp"

namespace oracle {

using maxsg::AffinePeriodic;
using maxsg::Card;

inline std::uint64_t eval(const AffinePeriodic& f, std::uint64_t x) {
  if (x < f.threshold) {
    return f.table[x];
  }
  std::uint64_t k = x - f.threshold;
  return f.table[f.threshold + k % f.period] + f.shift * (k / f.period);
}

inline std::uint64_t pair(std::uint64_t x, std::uint64_t y) {
  return (x + y) * (x + y + 1) / 2 + y;
}

// First component by direct search along diagonals.
inline std::uint64_t proj(std::uint64_t z) {
  std::uint64_t w = 0;
  while ((w + 1) * (w + 2) / 2 <= z) {
    ++w;
  }
  return w - (z - w * (w + 1) / 2);
}

inline std::uint64_t eval(const maxsg::MapExpr& e, std::uint64_t x) {
  if (const auto* f = e.affine()) {
    return oracle::eval(*f, x);
  }
  if (const auto* c = e.composite()) {
    return oracle::eval(c->second, oracle::eval(c->first, x));
  }
  return proj(x);
}

inline std::uint64_t max_table(const AffinePeriodic& f) {
  return *std::max_element(f.table.begin(), f.table.end());
}

// Values in [0, y) not hit by f.
inline std::uint64_t missed_below(const AffinePeriodic& f, std::uint64_t y) {
  std::uint64_t domain =
      f.shift == 0 ? f.threshold + f.period
                   : f.threshold + f.period * (y / f.shift + 2);
  std::vector<bool> hit(y, false);
  for (std::uint64_t x = 0; x < domain; ++x) {
    std::uint64_t v = eval(f, x);
    if (v < y) {
      hit[v] = true;
    }
  }
  return static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), false));
}

inline std::map<std::uint64_t, std::uint64_t> fibers_below(const AffinePeriodic& f,
                                                           std::uint64_t domain) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::uint64_t x = 0; x < domain; ++x) {
    ++out[eval(f, x)];
  }
  return out;
}

inline std::uint64_t collisions_below(const AffinePeriodic& f, std::uint64_t domain) {
  return domain - fibers_below(f, domain).size();
}

// Stabilised window counts are finite values; growth over one more period
// marks aleph0.
inline Card defect(const AffinePeriodic& f) {
  std::uint64_t y = max_table(f) + 1;
  std::uint64_t a = missed_below(f, y);
  std::uint64_t b = missed_below(f, y + std::max<std::uint64_t>(f.shift, 1));
  return a == b ? Card(a) : Card::aleph0();
}

inline std::uint64_t settled_domain(const AffinePeriodic& f) {
  return f.threshold + f.period * (max_table(f) + 2);
}

inline Card collapse(const AffinePeriodic& f) {
  std::uint64_t x = settled_domain(f);
  std::uint64_t a = collisions_below(f, x);
  std::uint64_t b = collisions_below(f, x + f.period);
  return a == b ? Card(a) : Card::aleph0();
}

// Values whose window fiber grows in each of period + 1 consecutive periods.
inline Card infinite_fibers(const AffinePeriodic& f) {
  std::uint64_t x = settled_domain(f);
  std::vector<std::map<std::uint64_t, std::uint64_t>> snaps;
  for (std::uint64_t k = 0; k <= f.period + 1; ++k) {
    snaps.push_back(fibers_below(f, x + k * f.period));
  }
  std::uint64_t count = 0;
  for (const auto& [v, n] : snaps.back()) {
    bool growing = true;
    for (std::size_t k = 1; k < snaps.size() && growing; ++k) {
      auto prev = snaps[k - 1].find(v);
      auto cur = snaps[k].find(v);
      growing = cur != snaps[k].end() &&
                (prev == snaps[k - 1].end() || cur->second > prev->second);
    }
    count += growing ? 1 : 0;
  }
  return count;
}

inline AffinePeriodic random_affine(std::mt19937_64& rng, std::uint64_t threshold,
                                    std::uint64_t period, std::uint64_t shift,
                                    std::uint64_t value_bound) {
  AffinePeriodic f{threshold, period, shift, {}};
  std::uniform_int_distribution<std::uint64_t> v(0, value_bound - 1);
  for (std::uint64_t i = 0; i < threshold + period; ++i) {
    f.table.push_back(v(rng));
  }
  return f;
}

// Every shape with threshold + period <= 8, period <= 6, shift <= 12, each
// with `per_shape` seeded random tables (values below 16) plus one table
// whose tail starts are 0..period-1 (injective, cofinite or co-infinite
// image depending on the shift).
inline std::vector<AffinePeriodic> shape_grid(std::uint64_t seed, int per_shape) {
  std::mt19937_64 rng(seed);
  std::vector<AffinePeriodic> out;
  for (std::uint64_t p = 1; p <= 6; ++p) {
    for (std::uint64_t n = 0; n + p <= 8; ++n) {
      for (std::uint64_t s = 0; s <= 12; ++s) {
        for (int k = 0; k < per_shape; ++k) {
          out.push_back(random_affine(rng, n, p, s, 16));
        }
        AffinePeriodic f{n, p, s, {}};
        for (std::uint64_t i = 0; i < n; ++i) {
          f.table.push_back(i);
        }
        for (std::uint64_t r = 0; r < p; ++r) {
          f.table.push_back(n + r);
        }
        out.push_back(f);
      }
    }
  }
  return out;
}

// Every table with threshold + period <= 3, entries in {0..3}, shift <= 3.
inline std::vector<AffinePeriodic> small_exhaustive() {
  std::vector<AffinePeriodic> out;
  for (std::uint64_t len = 1; len <= 3; ++len) {
    std::uint64_t tables = 1;
    for (std::uint64_t i = 0; i < len; ++i) {
      tables *= 4;
    }
    for (std::uint64_t p = 1; p <= len; ++p) {
      for (std::uint64_t s = 0; s <= 3; ++s) {
        for (std::uint64_t code = 0; code < tables; ++code) {
          AffinePeriodic f{len - p, p, s, {}};
          for (std::uint64_t i = 0, c = code; i < len; ++i, c /= 4) {
            f.table.push_back(c % 4);
          }
          out.push_back(f);
        }
      }
    }
  }
  return out;
}

// A random expression over grid maps and the pairing projection, at most
// `depth` compositions deep.
inline maxsg::MapExpr random_expr(std::mt19937_64& rng,
                                  const std::vector<AffinePeriodic>& pool,
                                  int depth, int cantor_percent) {
  if (depth == 0 || rng() % 3 == 0) {
    if (static_cast<int>(rng() % 100) < cantor_percent) {
      return maxsg::cantor_proj();
    }
    return pool[rng() % pool.size()];
  }
  return maxsg::compose(random_expr(rng, pool, depth - 1, cantor_percent),
                        random_expr(rng, pool, depth - 1, cantor_percent));
}

}  // namespace oracle
