#include "maxsg/mapexpr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "maxsg/error.hpp"

namespace maxsg {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("map value exceeds 64 bits");
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("map value exceeds 64 bits");
  }
  return out;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return a / b + (a % b != 0 ? 1 : 0);
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i > 0 ? "," : "") + std::to_string(v[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// AffinePeriodic

std::uint64_t AffinePeriodic::operator()(std::uint64_t x) const {
  if (x < table.size()) {
    return table[x];
  }
  std::uint64_t q = (x - threshold) / period;
  std::uint64_t r = (x - threshold) % period;
  return checked_add(table[threshold + r], checked_mul(shift, q));
}

void validate(const AffinePeriodic& f) {
  if (f.period == 0) {
    throw Error(errc::arity, "affine map period must be at least 1");
  }
  if (f.table.size() != f.threshold + f.period) {
    throw Error(errc::arity,
                "affine map table has " + std::to_string(f.table.size()) +
                    " entries, expected threshold + period = " +
                    std::to_string(f.threshold + f.period));
  }
}

AffinePeriodic canonical(AffinePeriodic f) {
  validate(f);
  for (std::uint64_t d = 1; d < f.period; ++d) {
    if (f.period % d != 0 || (f.shift * d) % f.period != 0) {
      continue;
    }
    std::uint64_t s = f.shift * d / f.period;
    bool law = true;
    for (std::uint64_t x = f.threshold; x < f.threshold + f.period && law;
         ++x) {
      law = f(x + d) == f(x) + s;
    }
    if (law) {
      f.table.resize(f.threshold + d);
      f.period = d;
      f.shift = s;
      break;
    }
  }
  while (f.threshold > 0 &&
         f.table[f.threshold - 1 + f.period] ==
             f.table[f.threshold - 1] + f.shift) {
    --f.threshold;
    f.table.pop_back();
  }
  return f;
}

AffinePeriodic compose(const AffinePeriodic& first, const AffinePeriodic& second) {
  validate(first);
  validate(second);
  AffinePeriodic h;
  if (first.shift == 0) {
    h.threshold = first.threshold;
    h.period = first.period;
    h.shift = 0;
    for (auto v : first.table) {
      h.table.push_back(second(v));
    }
    return canonical(std::move(h));
  }
  std::uint64_t g = std::gcd(first.shift, second.period);
  std::uint64_t lift = second.period / g;
  h.period = checked_mul(first.period, lift);
  h.shift = checked_mul(first.shift / g, second.shift);
  std::uint64_t steps = 0;
  for (std::uint64_t r = 0; r < first.period; ++r) {
    std::uint64_t a = first.tail_start(r);
    if (a < second.threshold) {
      steps = std::max(steps, ceil_div(second.threshold - a, first.shift));
    }
  }
  h.threshold = checked_add(first.threshold, checked_mul(first.period, steps));
  std::uint64_t size = checked_add(h.threshold, h.period);
  h.table.reserve(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    h.table.push_back(second(first(x)));
  }
  return canonical(std::move(h));
}

std::string to_string(const AffinePeriodic& f) {
  return "affine(" + std::to_string(f.threshold) + "," +
         std::to_string(f.period) + "," + std::to_string(f.shift) + ",[" +
         join(f.table) + "])";
}

// ---------------------------------------------------------------------------
// Pairing

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
  unsigned __int128 w = static_cast<unsigned __int128>(x) + y;
  unsigned __int128 z = w * (w + 1) / 2 + y;
  if (z > UINT64_MAX) {
    throw std::overflow_error("pairing value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(z);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  // w = floor((sqrt(8z + 1) - 1) / 2), corrected for rounding
  auto w = static_cast<std::uint64_t>(
      (std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
  auto tri = [](std::uint64_t v) {
    return static_cast<unsigned __int128>(v) * (v + 1) / 2;
  };
  while (tri(w) > z) {
    --w;
  }
  while (tri(w + 1) <= z) {
    ++w;
  }
  auto y = static_cast<std::uint64_t>(z - tri(w));
  return {w - y, y};
}

// ---------------------------------------------------------------------------
// MapExpr

MapExpr::MapExpr(AffinePeriodic f) {
  validate(f);
  node_ = std::make_shared<const Node>(Node{std::move(f)});
}

MapExpr::MapExpr(CantorProj) : node_(std::make_shared<const Node>(Node{CantorProj{}})) {}

MapExpr MapExpr::compose(MapExpr first, MapExpr second) {
  return MapExpr(std::make_shared<const Node>(
      Node{Composite{std::move(first), std::move(second)}}));
}

const AffinePeriodic* MapExpr::affine() const {
  return std::get_if<AffinePeriodic>(&node_->value);
}

bool MapExpr::is_cantor() const {
  return std::holds_alternative<CantorProj>(node_->value);
}

const Composite* MapExpr::composite() const {
  return std::get_if<Composite>(&node_->value);
}

MapExpr identity_map() { return AffinePeriodic{0, 1, 1, {0}}; }
MapExpr shift_map(std::uint64_t k) { return AffinePeriodic{0, 1, 1, {k}}; }
MapExpr times_map(std::uint64_t k) { return AffinePeriodic{0, 1, k, {0}}; }

MapExpr divfloor_map(std::uint64_t k) {
  if (k == 0) {
    throw Error(errc::arity, "divfloor divisor must be at least 1");
  }
  return AffinePeriodic{0, k, 1, std::vector<std::uint64_t>(k, 0)};
}

MapExpr perm_map(const std::vector<std::uint64_t>& images) {
  std::vector<std::uint64_t> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) {
      throw Error(errc::arity, "perm images must be a permutation of 0.." +
                                   std::to_string(images.size() - 1));
    }
  }
  std::uint64_t m = images.size();
  std::vector<std::uint64_t> table = images;
  table.push_back(m);
  return AffinePeriodic{m, 1, 1, std::move(table)};
}

MapExpr constant_map(std::uint64_t c) { return AffinePeriodic{0, 1, 0, {c}}; }
MapExpr cantor_proj() { return CantorProj{}; }

std::uint64_t eval(const MapExpr& e, std::uint64_t x) {
  struct V {
    std::uint64_t x;
    std::uint64_t operator()(const AffinePeriodic& f) const { return f(x); }
    std::uint64_t operator()(CantorProj) const { return cantor_unpair(x).first; }
    std::uint64_t operator()(const Composite& c) const {
      return eval(c.second, eval(c.first, x));
    }
  };
  return e.visit(V{x});
}

std::optional<AffinePeriodic> normalize(const MapExpr& e) {
  struct V {
    std::optional<AffinePeriodic> operator()(const AffinePeriodic& f) const {
      return canonical(f);
    }
    std::optional<AffinePeriodic> operator()(CantorProj) const {
      return std::nullopt;
    }
    std::optional<AffinePeriodic> operator()(const Composite& c) const {
      auto a = normalize(c.first);
      if (!a) {
        return std::nullopt;
      }
      auto b = normalize(c.second);
      if (!b) {
        return std::nullopt;
      }
      return compose(*a, *b);
    }
  };
  return e.visit(V{});
}

std::string to_string(const MapExpr& e) {
  struct V {
    std::string operator()(const AffinePeriodic& f) const {
      return to_string(f);
    }
    std::string operator()(CantorProj) const { return "cantor_proj"; }
    std::string operator()(const Composite& c) const {
      return "compose(" + to_string(c.first) + "," + to_string(c.second) + ")";
    }
  };
  return e.visit(V{});
}

// ---------------------------------------------------------------------------
// Images

PeriodicSet image(const AffinePeriodic& f, const PeriodicSet& domain) {
  if (domain.empty()) {
    return {};
  }
  std::uint64_t start = std::max(domain.threshold(), f.threshold);
  std::vector<std::uint64_t> values;
  for (auto x : domain.head()) {
    values.push_back(f(x));
  }
  for (std::uint64_t x = domain.threshold(); x < start; ++x) {
    if (domain.contains(x)) {
      values.push_back(f(x));
    }
  }
  if (domain.is_finite()) {
    return PeriodicSet::finite(std::move(values));
  }
  std::uint64_t span = std::lcm(domain.period(), f.period);
  std::vector<std::uint64_t> starts;
  for (std::uint64_t x = start; x < start + span; ++x) {
    if (domain.contains(x)) {
      starts.push_back(f(x));
    }
  }
  if (f.shift == 0) {
    values.insert(values.end(), starts.begin(), starts.end());
    return PeriodicSet::finite(std::move(values));
  }
  return PeriodicSet::from_progressions(std::move(values), starts,
                                        checked_mul(f.shift, span / f.period));
}

namespace {

PeriodicSet cantor_image(const PeriodicSet& domain) {
  if (domain.is_finite()) {
    std::vector<std::uint64_t> values;
    for (auto z : domain.head()) {
      values.push_back(cantor_unpair(z).first);
    }
    return PeriodicSet::finite(std::move(values));
  }
  // Beyond the domain threshold, pair(x, y) mod m depends only on
  // x mod 2m and y mod 2m.
  const std::uint64_t m = domain.period();
  const std::uint64_t limit = domain.threshold();
  std::vector<char> in_class(m, 0);
  for (auto r : domain.residues()) {
    in_class[r] = 1;
  }
  auto triangle_mod = [m](std::uint64_t w) {
    unsigned __int128 t = static_cast<unsigned __int128>(w) * (w + 1) / 2;
    return static_cast<std::uint64_t>(t % m);
  };
  std::vector<char> hit(2 * m, 0);
  const std::vector<std::uint64_t>& classes = domain.residues();
  if (classes.size() * 2 <= m) {
    for (std::uint64_t w = 0; w < 2 * m; ++w) {
      std::uint64_t t = triangle_mod(w);
      for (auto r : classes) {
        std::uint64_t y = (r + m - t) % m;
        hit[(w + 2 * m - y) % (2 * m)] = 1;
        hit[(w + m - y) % (2 * m)] = 1;
      }
    }
  } else {
    for (std::uint64_t x = 0; x < 2 * m; ++x) {
      for (std::uint64_t y = 0; y < 2 * m && !hit[x]; ++y) {
        hit[x] = in_class[(triangle_mod(x + y) + y) % m];
      }
    }
  }
  std::vector<std::uint64_t> residues;
  for (std::uint64_t x = 0; x < 2 * m; ++x) {
    if (hit[x]) {
      residues.push_back(x);
    }
  }
  // Past `start` every pair(x, y) lies beyond the domain threshold.
  std::uint64_t start = 0;
  while (static_cast<unsigned __int128>(start) * (start + 1) / 2 < limit) {
    ++start;
  }
  std::vector<std::uint64_t> head;
  for (std::uint64_t x = 0; x < start; ++x) {
    std::uint64_t y = 0;
    bool found = false;
    for (; !found && cantor_pair(x, y) < limit; ++y) {
      found = domain.contains(cantor_pair(x, y));
    }
    for (std::uint64_t k = 0; !found && k < 2 * m; ++k, ++y) {
      found = in_class[cantor_pair(x, y) % m] != 0;
    }
    if (found) {
      head.push_back(x);
    }
  }
  return PeriodicSet::from_parts(start, 2 * m, std::move(residues),
                                 std::move(head));
}

}  // namespace

PeriodicSet image(const MapExpr& e, const PeriodicSet& domain) {
  struct V {
    const PeriodicSet& domain;
    PeriodicSet operator()(const AffinePeriodic& f) const {
      return image(f, domain);
    }
    PeriodicSet operator()(CantorProj) const { return cantor_image(domain); }
    PeriodicSet operator()(const Composite& c) const {
      return image(c.second, image(c.first, domain));
    }
  };
  return e.visit(V{domain});
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

// Is v = t_r + k * shift for some tail progression r and k >= 0?
bool on_tail(const AffinePeriodic& f, std::uint64_t v) {
  for (std::uint64_t r = 0; r < f.period; ++r) {
    std::uint64_t t = f.tail_start(r);
    if (f.shift == 0 ? v == t : v >= t && (v - t) % f.shift == 0) {
      return true;
    }
  }
  return false;
}

std::uint64_t prefix_values_off_tail(const AffinePeriodic& f) {
  std::set<std::uint64_t> off;
  for (std::uint64_t x = 0; x < f.threshold; ++x) {
    if (!on_tail(f, f.table[x])) {
      off.insert(f.table[x]);
    }
  }
  return off.size();
}

Certificate from_exact(Card d, Card c, Card kinf, bool fin_image) {
  Certificate cert;
  cert.d = CardInterval::exact(d);
  cert.c = CardInterval::exact(c);
  cert.kinf = CardInterval::exact(kinf);
  cert.inj = is_zero(cert.c);
  cert.surj = is_zero(cert.d);
  cert.fin_image = to_tri(fin_image);
  return cert;
}

}  // namespace

Certificate exact_certificate(const AffinePeriodic& g) {
  AffinePeriodic f = canonical(g);
  if (f.shift == 0) {
    std::set<std::uint64_t> tail;
    for (std::uint64_t r = 0; r < f.period; ++r) {
      tail.insert(f.tail_start(r));
    }
    return from_exact(Card::aleph0(), Card::aleph0(), tail.size(), true);
  }
  std::uint64_t s = f.shift;
  std::uint64_t off = prefix_values_off_tail(f);

  // d: every residue class mod s must be reached by some tail progression
  Card d = Card::aleph0();
  if (f.period >= s) {
    std::vector<std::optional<std::uint64_t>> least(s);
    for (std::uint64_t r = 0; r < f.period; ++r) {
      std::uint64_t t = f.tail_start(r);
      auto& slot = least[t % s];
      if (!slot || t < *slot) {
        slot = t;
      }
    }
    bool covered = std::all_of(least.begin(), least.end(),
                               [](const auto& v) { return v.has_value(); });
    if (covered) {
      std::uint64_t gaps = 0;
      for (std::uint64_t rho = 0; rho < s; ++rho) {
        gaps += (*least[rho] - rho) / s;
      }
      d = gaps - off;
    }
  }

  // c: the tail is injective iff its progressions are pairwise disjoint
  std::set<std::uint64_t> classes;
  for (std::uint64_t r = 0; r < f.period; ++r) {
    classes.insert(f.tail_start(r) % s);
  }
  Card c = classes.size() == f.period ? Card(f.threshold - off) : Card::aleph0();
  return from_exact(d, c, 0, false);
}

Certificate certify(const MapExpr& e) {
  if (e.is_cantor()) {
    return from_exact(0, Card::aleph0(), Card::aleph0(), false);
  }
  if (auto f = normalize(e)) {
    return exact_certificate(*f);
  }
  const Composite& comp = *e.composite();
  Certificate f = certify(comp.first);
  Certificate g = certify(comp.second);
  Certificate out;
  out.d = compose_defect(f.d, g.c, g.d, g.inj);
  out.c = compose_collapse(f.c, f.d, g.c, f.surj);
  out.kinf = compose_kinf(f.kinf, g.kinf);
  if (f.kinf.lo() > Card(0)) {
    Card lo = f.kinf.lo().is_aleph0() && g.kinf.hi() == Card(0) ? Card::aleph0() : Card(1);
    out.kinf = intersect(out.kinf, CardInterval(lo, Card::aleph0()));
  }
  if (f.surj == Tri::Yes) {
    out.kinf = intersect(out.kinf, CardInterval(g.kinf.lo(), Card::aleph0()));
  }

  PeriodicSet img = image(e, PeriodicSet::naturals());
  if (comp.second.is_cantor() && !img.is_finite()) {
    out.kinf = intersect(out.kinf, CardInterval::exact(Card::aleph0()));
  }
  if (img.is_cofinite()) {
    out.d = intersect(out.d, CardInterval::exact(img.cofinite_gap_count()));
  } else {
    out.d = intersect(out.d, CardInterval::exact(Card::aleph0()));
  }
  if (img.is_finite()) {
    out.c = intersect(out.c, CardInterval::exact(Card::aleph0()));
    out.kinf = intersect(out.kinf, CardInterval(1, img.finite_count()));
  }
  if (out.c.hi().is_finite()) {
    out.kinf = intersect(out.kinf, CardInterval::exact(0));
  }
  if (out.kinf.lo() > Card(0)) {
    out.c = intersect(out.c, CardInterval::exact(Card::aleph0()));
  }
  out.inj = is_zero(out.c);
  out.surj = is_zero(out.d);
  out.fin_image = to_tri(img.is_finite());
  return out;
}

// ---------------------------------------------------------------------------
// Fibers

InfiniteFiber InfiniteFiber::periodic(PeriodicSet members) {
  InfiniteFiber f;
  f.set_ = std::move(members);
  return f;
}

InfiniteFiber InfiniteFiber::columns(PeriodicSet column_indices) {
  InfiniteFiber f;
  f.set_ = std::move(column_indices);
  f.columns_ = true;
  return f;
}

bool InfiniteFiber::contains(std::uint64_t x) const {
  return set_.contains(columns_ ? cantor_unpair(x).first : x);
}

std::vector<std::uint64_t> InfiniteFiber::first(std::size_t k) const {
  if (!columns_) {
    return set_.first(k);
  }
  std::vector<std::uint64_t> out;
  if (set_.empty()) {
    return out;
  }
  for (std::uint64_t z = 0; out.size() < k; ++z) {
    if (contains(z)) {
      out.push_back(z);
    }
  }
  return out;
}

std::string InfiniteFiber::describe() const {
  if (!columns_) {
    return set_.describe();
  }
  return "{pair(x,y) : y in N, x in " + set_.describe() + "}";
}

namespace {

struct Preimage {
  PeriodicSet set;
  bool columns = false;
};

PeriodicSet affine_preimage(const AffinePeriodic& f, const PeriodicSet& target) {
  // Past `start`, x and x + span have images congruent mod target.period()
  // and both beyond the target threshold (or equal, when shift is 0).
  std::uint64_t steps = 0;
  if (f.shift > 0) {
    for (std::uint64_t r = 0; r < f.period; ++r) {
      std::uint64_t a = f.tail_start(r);
      if (a < target.threshold()) {
        steps = std::max(steps, ceil_div(target.threshold() - a, f.shift));
      }
    }
  }
  std::uint64_t start = checked_add(f.threshold, checked_mul(f.period, steps));
  std::uint64_t span = checked_mul(f.period, target.period());
  std::vector<std::uint64_t> head;
  for (std::uint64_t x = 0; x < start; ++x) {
    if (target.contains(f(x))) {
      head.push_back(x);
    }
  }
  std::vector<std::uint64_t> residues;
  for (std::uint64_t x = start; x < start + span; ++x) {
    if (target.contains(f(x))) {
      residues.push_back(x % span);
    }
  }
  return PeriodicSet::from_parts(start, span, std::move(residues),
                                 std::move(head));
}

std::optional<Preimage> preimage(const MapExpr& e, const Preimage& target) {
  if (auto f = normalize(e)) {
    if (target.columns) {
      return std::nullopt;
    }
    return Preimage{affine_preimage(*f, target.set), false};
  }
  if (e.is_cantor()) {
    if (target.columns) {
      return std::nullopt;
    }
    return Preimage{target.set, true};
  }
  const Composite& c = *e.composite();
  auto mid = preimage(c.second, target);
  if (!mid) {
    return std::nullopt;
  }
  return preimage(c.first, *mid);
}

}  // namespace

FiberReport fiber(const MapExpr& e, std::uint64_t y, std::uint64_t cap) {
  if (auto pre = preimage(e, Preimage{PeriodicSet::finite({y}), false})) {
    if (pre->set.empty()) {
      return FiniteFiber{};
    }
    if (pre->columns) {
      return InfiniteFiber::columns(std::move(pre->set));
    }
    if (pre->set.is_finite()) {
      return FiniteFiber{pre->set.head()};
    }
    return InfiniteFiber::periodic(std::move(pre->set));
  }
  if (!image(e, PeriodicSet::naturals()).contains(y)) {
    return FiniteFiber{};
  }
  UnknownFiber out;
  out.cap = cap;
  for (std::uint64_t x = 0; x < cap; ++x) {
    if (eval(e, x) == y) {
      out.sampled.push_back(x);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Inverses

namespace {

std::optional<std::uint64_t> least_preimage(const AffinePeriodic& f,
                                            std::uint64_t y) {
  for (std::uint64_t x = 0; x < f.threshold; ++x) {
    if (f.table[x] == y) {
      return x;
    }
  }
  std::optional<std::uint64_t> best;
  for (std::uint64_t r = 0; r < f.period; ++r) {
    std::uint64_t t = f.tail_start(r);
    std::optional<std::uint64_t> x;
    if (f.shift == 0) {
      if (t == y) {
        x = f.threshold + r;
      }
    } else if (y >= t && (y - t) % f.shift == 0) {
      x = f.threshold + r + f.period * ((y - t) / f.shift);
    }
    if (x && (!best || *x < *best)) {
      best = x;
    }
  }
  return best;
}

}  // namespace

MapExpr invert(const MapExpr& e) {
  auto normal = normalize(e);
  if (!normal) {
    throw Error(errc::not_invertible,
                "every inverse of an expression containing the pairing "
                "projection grows quadratically and is not affine-periodic");
  }
  const AffinePeriodic& f = *normal;
  PeriodicSet img = image(f, PeriodicSet::naturals());
  std::uint64_t least_image = img.first(1).front();
  std::uint64_t top = *std::max_element(f.table.begin(), f.table.end());

  AffinePeriodic g;
  if (f.shift == 0) {
    g.threshold = top + 1;
    g.period = 1;
    g.shift = 0;
  } else {
    g.threshold = top + f.shift + 1;
    g.period = f.shift;
    g.shift = f.period;
  }
  for (std::uint64_t y = 0; y < g.threshold + g.period; ++y) {
    std::uint64_t target = least_image;
    for (std::uint64_t v = y + 1; v-- > least_image;) {
      if (img.contains(v)) {
        target = v;
        break;
      }
    }
    g.table.push_back(*least_preimage(f, target));
  }
  return canonical(std::move(g));
}

ChainVerdict chain_inverse_check(std::span<const InversePair> pairs,
                                 std::uint64_t window) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [u, v] = pairs[i];
    for (std::uint64_t x = 0; x < window; ++x) {
      std::uint64_t ux = eval(u, x);
      std::uint64_t vx = eval(v, x);
      if (eval(u, eval(v, ux)) != ux || eval(v, eval(u, vx)) != vx) {
        throw Error(errc::inverse_law,
                    "pair " + std::to_string(i) +
                        " violates the inverse laws at x=" + std::to_string(x));
      }
    }
  }
  if (pairs.empty()) {
    return {};
  }

  // partial[x] = x u0' u1' ... u(i-1)'
  std::vector<std::uint64_t> partial(window);
  std::iota(partial.begin(), partial.end(), std::uint64_t{0});
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    for (auto& p : partial) {
      p = eval(pairs[i - 1].inverse, p);
    }
    PeriodicSet target = image(pairs[i].map, PeriodicSet::naturals());
    std::optional<std::uint64_t> witness;
    for (auto p : partial) {
      if (!target.contains(p) && (!witness || p < *witness)) {
        witness = p;
      }
    }
    if (witness) {
      return {ChainVerdict::Kind::HypothesisViolated, i, *witness};
    }
  }

  auto a = [&](std::uint64_t x) {
    for (const auto& pr : pairs) {
      x = eval(pr.inverse, x);
    }
    return x;
  };
  auto b = [&](std::uint64_t x) {
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      x = eval(it->map, x);
    }
    return x;
  };
  for (std::uint64_t x = 0; x < window; ++x) {
    std::uint64_t ax = a(x);
    std::uint64_t bx = b(x);
    if (a(b(ax)) != ax || b(a(bx)) != bx) {
      return {ChainVerdict::Kind::ConclusionFailed, pairs.size(), x};
    }
  }
  return {};
}

WindowReport window_stats(const MapExpr& e, std::uint64_t M) {
  WindowReport w;
  w.window = M;
  for (std::uint64_t x = 0; x < M; ++x) {
    ++w.fiber_sizes[eval(e, x)];
  }
  w.collisions = M - w.fiber_sizes.size();
  for (const auto& [value, count] : w.fiber_sizes) {
    ++w.histogram[count];
  }
  for (std::uint64_t y = 0; y < M; ++y) {
    (w.fiber_sizes.contains(y) ? w.hit : w.missed).push_back(y);
  }
  return w;
}

}  // namespace maxsg
