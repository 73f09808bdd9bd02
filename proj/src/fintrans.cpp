#include "maxsg/fintrans.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "maxsg/error.hpp"

namespace maxsg {

namespace {

std::uint32_t power(unsigned n) {
  std::uint32_t out = 1;
  for (unsigned i = 0; i < n; ++i) {
    out *= n;
  }
  return out;
}

void check_n(unsigned n, unsigned lo, unsigned hi) {
  if (n < lo || n > hi) {
    throw Error(errc::invalid_parameters,
                "n must be between " + std::to_string(lo) + " and " +
                    std::to_string(hi) + ", got " + std::to_string(n));
  }
}

FinMap identity(unsigned n) {
  FinMap f;
  f.images.resize(n);
  std::iota(f.images.begin(), f.images.end(), std::uint8_t{0});
  return f;
}

bool contains(const ElementSet& s, std::uint32_t code) {
  return std::binary_search(s.begin(), s.end(), code);
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<FinMap> decode_all(unsigned n, const ElementSet& s) {
  std::vector<FinMap> out;
  out.reserve(s.size());
  for (auto c : s) {
    out.push_back(decode(n, c));
  }
  return out;
}

bool is_closed(unsigned n, const ElementSet& s) {
  std::vector<FinMap> maps = decode_all(n, s);
  for (const auto& a : maps) {
    for (const auto& b : maps) {
      if (!contains(s, encode(fin_compose(a, b)))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

unsigned FinMap::rank() const {
  std::vector<bool> hit(images.size(), false);
  unsigned r = 0;
  for (auto v : images) {
    if (!hit[v]) {
      hit[v] = true;
      ++r;
    }
  }
  return r;
}

FinMap fin_compose(const FinMap& a, const FinMap& b) {
  if (a.n() != b.n()) {
    throw Error(errc::dimension, "cannot compose maps on different sets");
  }
  FinMap out;
  out.images.resize(a.n());
  for (unsigned i = 0; i < a.n(); ++i) {
    out.images[i] = b.images[a.images[i]];
  }
  return out;
}

std::uint32_t encode(const FinMap& f) {
  std::uint32_t code = 0;
  for (unsigned i = f.n(); i-- > 0;) {
    code = code * f.n() + f.images[i];
  }
  return code;
}

FinMap decode(unsigned n, std::uint32_t code) {
  FinMap f;
  f.images.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    f.images[i] = static_cast<std::uint8_t>(code % n);
    code /= n;
  }
  return f;
}

std::string to_string(const FinMap& f) {
  std::string out = "[";
  for (unsigned i = 0; i < f.n(); ++i) {
    out += (i > 0 ? "," : "") + std::to_string(f.images[i]);
  }
  return out + "]";
}

ElementSet closure(unsigned n, const std::vector<FinMap>& gens) {
  check_n(n, 1, 7);
  for (const auto& g : gens) {
    if (g.n() != n) {
      throw Error(errc::invalid_parameters,
                  "generator " + to_string(g) + " does not act on " +
                      std::to_string(n) + " points");
    }
    for (auto v : g.images) {
      if (v >= n) {
        throw Error(errc::invalid_parameters,
                    "generator " + to_string(g) + " is not a self-map");
      }
    }
  }
  std::vector<char> seen(power(n), 0);
  std::vector<std::uint32_t> found;
  for (const auto& g : gens) {
    std::uint32_t c = encode(g);
    if (!seen[c]) {
      seen[c] = 1;
      found.push_back(c);
    }
  }
  FinMap x;
  FinMap y;
  y.images.resize(n);
  for (std::size_t k = 0; k < found.size(); ++k) {
    x = decode(n, found[k]);
    for (const auto& g : gens) {
      for (unsigned i = 0; i < n; ++i) {
        y.images[i] = g.images[x.images[i]];
      }
      std::uint32_t c = encode(y);
      if (!seen[c]) {
        seen[c] = 1;
        found.push_back(c);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<FinMap> symmetric_generators(unsigned n) {
  check_n(n, 1, 7);
  if (n == 1) {
    return {identity(1)};
  }
  FinMap swap = identity(n);
  std::swap(swap.images[0], swap.images[1]);
  FinMap cycle;
  for (unsigned i = 0; i < n; ++i) {
    cycle.images.push_back(static_cast<std::uint8_t>((i + 1) % n));
  }
  return {swap, cycle};
}

ElementSet maps_of_rank_at_most(unsigned n, unsigned r) {
  check_n(n, 1, 7);
  ElementSet out;
  for (std::uint32_t c = 0; c < power(n); ++c) {
    if (decode(n, c).rank() <= r) {
      out.push_back(c);
    }
  }
  return out;
}

ElementSet all_maps(unsigned n) { return maps_of_rank_at_most(n, n); }

ElementSet all_permutations(unsigned n) {
  return closure(n, symmetric_generators(n));
}

std::vector<ElementSet> maximal_subgroups_symn(unsigned n) {
  check_n(n, 2, 5);
  const ElementSet sym = all_permutations(n);
  const FinMap id = identity(n);

  struct Subgroup {
    ElementSet elements;
    std::vector<FinMap> gens;
  };
  std::set<ElementSet> known{{encode(id)}};
  std::vector<Subgroup> subgroups{{{encode(id)}, {}}};
  for (std::size_t k = 0; k < subgroups.size(); ++k) {
    for (auto p : sym) {
      if (contains(subgroups[k].elements, p)) {
        continue;
      }
      std::vector<FinMap> gens = subgroups[k].gens;
      gens.push_back(decode(n, p));
      std::vector<FinMap> with_id = gens;
      with_id.push_back(id);
      ElementSet h = closure(n, with_id);
      if (known.insert(h).second) {
        subgroups.push_back({std::move(h), std::move(gens)});
      }
    }
  }

  std::vector<ElementSet> proper;
  for (const auto& s : known) {
    if (s.size() < sym.size()) {
      proper.push_back(s);
    }
  }
  std::vector<ElementSet> out;
  for (const auto& h : proper) {
    bool maximal = std::none_of(proper.begin(), proper.end(), [&](const ElementSet& k) {
      return k.size() > h.size() &&
             std::includes(k.begin(), k.end(), h.begin(), h.end());
    });
    if (maximal) {
      out.push_back(h);
    }
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

CompletenessResult completeness_report(unsigned n,
                                       const std::vector<ElementSet>& candidates) {
  check_n(n, 1, 7);
  const ElementSet full = all_maps(n);
  std::vector<ElementSet> complements;
  for (const auto& c : candidates) {
    complements.push_back(set_difference(full, c));
  }
  // small complements first keeps the number of partial closures low
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return complements[a].size() < complements[b].size();
  });

  CompletenessResult result;
  result.tuples = 1;
  // closure of a partial transversal -> the partial transversal (by slot)
  std::map<ElementSet, std::vector<std::int64_t>> states{
      {ElementSet{}, std::vector<std::int64_t>(candidates.size(), -1)}};
  for (std::size_t slot : order) {
    result.tuples *= complements[slot].size();
    std::map<ElementSet, std::vector<std::int64_t>> next;
    for (const auto& [closed, choice] : states) {
      for (auto x : complements[slot]) {
        std::vector<std::int64_t> extended = choice;
        extended[slot] = x;
        if (contains(closed, x)) {
          next.emplace(closed, std::move(extended));
          continue;
        }
        std::vector<FinMap> gens;
        for (auto c : extended) {
          if (c >= 0) {
            gens.push_back(decode(n, static_cast<std::uint32_t>(c)));
          }
        }
        next.emplace(closure(n, gens), std::move(extended));
      }
    }
    result.closures += next.size();
    states = std::move(next);
  }
  result.complete = true;
  for (const auto& [closed, choice] : states) {
    if (closed != full) {
      result.complete = false;
      for (auto c : choice) {
        result.counterexample.push_back(decode(n, static_cast<std::uint32_t>(c)));
      }
      break;
    }
  }
  return result;
}

bool completeness_check(unsigned n, const std::vector<ElementSet>& candidates) {
  return completeness_report(n, candidates).complete;
}

std::vector<SubsemigroupReport> maximal_subsemigroups_Tn(unsigned n) {
  check_n(n, 2, 4);
  const ElementSet full = all_maps(n);
  const ElementSet sym = all_permutations(n);
  const ElementSet singular = set_difference(full, sym);

  std::vector<SubsemigroupReport> candidates;
  for (const auto& m : maximal_subgroups_symn(n)) {
    candidates.push_back({set_union(m, singular), false, false,
                          "M u (T_n \\ S_n) for a maximal subgroup M of S_n of order " +
                              std::to_string(m.size())});
  }
  candidates.push_back({set_union(sym, maps_of_rank_at_most(n, n - 2)), false,
                        false, "S_n u {f : rank(f) <= n-2}"});

  std::vector<SubsemigroupReport> verified;
  std::vector<ElementSet> sets;
  for (auto& c : candidates) {
    c.is_closed = is_closed(n, c.elements);
    bool proper = c.elements.size() < full.size();
    c.is_maximal = c.is_closed && proper;
    std::vector<FinMap> gens = decode_all(n, c.elements);
    for (auto s : set_difference(full, c.elements)) {
      if (!c.is_maximal) {
        break;
      }
      gens.push_back(decode(n, s));
      c.is_maximal = closure(n, gens).size() == full.size();
      gens.pop_back();
    }
    if (c.is_closed && c.is_maximal) {
      sets.push_back(c.elements);
      verified.push_back(std::move(c));
    }
  }

  CompletenessResult check = completeness_report(n, sets);
  if (!check.complete) {
    std::string tuple;
    for (const auto& f : check.counterexample) {
      tuple += (tuple.empty() ? "" : ",") + to_string(f);
    }
    throw Error(errc::completeness,
                "the transversal (" + tuple + ") generates a proper subsemigroup of T_" +
                    std::to_string(n));
  }
  return verified;
}

bool generates_Tn(unsigned n, const std::vector<FinMap>& extra) {
  std::vector<FinMap> gens = symmetric_generators(n);
  gens.insert(gens.end(), extra.begin(), extra.end());
  return closure(n, gens).size() == power(n);
}

}  // namespace maxsg
