#include "maxsg/relcalc.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "maxsg/error.hpp"

namespace maxsg {

namespace {

void check_size(unsigned n) {
  if (n == 0 || n > Relation::kMaxN) {
    throw Error(errc::invalid_parameters,
                "relation size must be between 1 and 8, got " + std::to_string(n));
  }
}

void check_point(unsigned n, unsigned i) {
  if (i >= n) {
    throw Error(errc::dimension, "point " + std::to_string(i) +
                                     " outside {0.." + std::to_string(n - 1) +
                                     "}");
  }
}

}  // namespace

Relation::Relation(unsigned n) : n_(n) { check_size(n); }

Relation Relation::identity(unsigned n) {
  Relation r(n);
  for (unsigned i = 0; i < n; ++i) {
    r.set(i, i);
  }
  return r;
}

Relation Relation::full(unsigned n) {
  Relation r(n);
  r.bits_ = n * n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1;
  return r;
}

Relation Relation::from_pairs(
    unsigned n, const std::vector<std::pair<unsigned, unsigned>>& pairs) {
  Relation r(n);
  for (auto [i, j] : pairs) {
    r.set(i, j);
  }
  return r;
}

Relation Relation::from_permutation(const std::vector<std::uint8_t>& perm) {
  Relation r(static_cast<unsigned>(perm.size()));
  for (unsigned i = 0; i < perm.size(); ++i) {
    r.set(i, perm[i]);
  }
  return r;
}

Relation Relation::from_bits(unsigned n, std::uint64_t bits) {
  Relation r(n);
  r.bits_ = bits & full(n).bits_;
  return r;
}

void Relation::set(unsigned i, unsigned j, bool value) {
  check_point(n_, i);
  check_point(n_, j);
  std::uint64_t bit = std::uint64_t{1} << (i * n_ + j);
  bits_ = value ? bits_ | bit : bits_ & ~bit;
}

std::uint32_t Relation::image(std::uint32_t from) const noexcept {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    if ((from >> i) & 1U) {
      out |= row(i);
    }
  }
  return out;
}

std::vector<std::pair<unsigned, unsigned>> Relation::pairs() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      if (test(i, j)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

Relation rel_compose(const Relation& a, const Relation& b) {
  if (a.n() != b.n()) {
    throw Error(errc::dimension, "cannot compose relations on " +
                                     std::to_string(a.n()) + " and " +
                                     std::to_string(b.n()) + " points");
  }
  unsigned n = a.n();
  std::uint64_t bits = 0;
  for (unsigned i = 0; i < n; ++i) {
    bits |= static_cast<std::uint64_t>(b.image(a.row(i))) << (i * n);
  }
  return Relation::from_bits(n, bits);
}

bool is_total(const Relation& a) {
  for (unsigned i = 0; i < a.n(); ++i) {
    if (a.row(i) == 0) {
      return false;
    }
  }
  return true;
}

Relation invert_rel(const Relation& a) {
  Relation out(a.n());
  for (auto [i, j] : a.pairs()) {
    out.set(j, i);
  }
  return out;
}

bool is_permutation(const Relation& a) {
  std::uint32_t seen = 0;
  for (unsigned i = 0; i < a.n(); ++i) {
    std::uint32_t r = a.row(i);
    if (std::popcount(r) != 1 || (seen & r) != 0) {
      return false;
    }
    seen |= r;
  }
  return true;
}

std::string to_string(const Relation& a) {
  std::string out = "{";
  bool first = true;
  for (auto [i, j] : a.pairs()) {
    out += (first ? "(" : ",(") + std::to_string(i) + "," + std::to_string(j) + ")";
    first = false;
  }
  return out + "}";
}

Relation parse_relation(std::string_view text, unsigned n) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') {
      ++pos;
    }
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(pos, std::string("expected '") + c + "'");
    }
    ++pos;
  };
  auto number = [&]() -> unsigned {
    skip();
    std::size_t start = pos;
    unsigned v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + static_cast<unsigned>(text[pos] - '0');
      if (v >= n) {
        throw ParseError(start, "point out of range for n=" + std::to_string(n));
      }
      ++pos;
    }
    if (pos == start) {
      throw ParseError(pos, "expected a number");
    }
    return v;
  };
  Relation r(n);
  expect('{');
  skip();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      expect('(');
      unsigned i = number();
      expect(',');
      unsigned j = number();
      expect(')');
      r.set(i, j);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect('}');
      break;
    }
  }
  skip();
  if (pos != text.size()) {
    throw ParseError(pos, "trailing characters");
  }
  return r;
}

Relation evaluate(const Word& w, const Relation& rho, const Relation& sigma) {
  if (w.empty()) {
    return Relation::identity(rho.n());
  }
  auto letter = [&](const Letter& l) {
    switch (l.kind) {
      case Letter::Kind::Perm:
        return Relation::from_permutation(l.perm);
      case Letter::Kind::Rho:
        return rho;
      default:
        return sigma;
    }
  };
  Relation out = letter(w.front());
  for (std::size_t i = 1; i < w.size(); ++i) {
    out = rel_compose(out, letter(w[i]));
  }
  return out;
}

std::string to_string(const Letter& l) {
  switch (l.kind) {
    case Letter::Kind::Rho:
      return "Rho";
    case Letter::Kind::Sigma:
      return "Sigma";
    default: {
      std::string out = "Perm([";
      for (std::size_t i = 0; i < l.perm.size(); ++i) {
        out += (i > 0 ? "," : "") + std::to_string(l.perm[i]);
      }
      return out + "])";
    }
  }
}

std::string to_string(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += (i > 0 ? "," : "") + to_string(w[i]);
  }
  return out + "]";
}

namespace {

void check_hypotheses(const Relation& rho, const Relation& sigma) {
  if (rho.n() != sigma.n()) {
    throw Error(errc::dimension, "rho and sigma have different sizes");
  }
  if (!is_total(rho)) {
    throw Error(errc::hypothesis, "rho is not total");
  }
  if (!is_total(invert_rel(sigma))) {
    throw Error(errc::hypothesis, "sigma^-1 is not total");
  }
  if (is_permutation(rho)) {
    throw Error(errc::hypothesis, "rho is a permutation");
  }
  if (is_permutation(sigma)) {
    throw Error(errc::hypothesis, "sigma is a permutation");
  }
}

std::vector<std::vector<std::uint8_t>> all_permutations(unsigned n) {
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<std::vector<std::uint8_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

Word bfin_witness(const Relation& rho, const Relation& sigma) {
  check_hypotheses(rho, sigma);
  const unsigned n = rho.n();
  const std::uint64_t target = Relation::full(n).bits();

  std::vector<Letter> alphabet;
  std::vector<Relation> letters;
  for (auto& p : all_permutations(n)) {
    letters.push_back(Relation::from_permutation(p));
    alphabet.push_back(Letter::permutation(std::move(p)));
  }
  alphabet.push_back(Letter::rho());
  letters.push_back(rho);
  alphabet.push_back(Letter::sigma());
  letters.push_back(sigma);

  // parent state and letter index of the first (least) word reaching a state
  struct Origin {
    std::uint64_t parent;
    std::uint32_t letter;
    bool root;
  };
  std::unordered_map<std::uint64_t, Origin> seen;
  std::deque<std::uint64_t> queue;
  auto visit = [&](std::uint64_t state, Origin o) {
    if (seen.emplace(state, o).second) {
      queue.push_back(state);
    }
  };
  for (std::uint32_t k = 0; k < letters.size(); ++k) {
    visit(letters[k].bits(), {0, k, true});
  }
  while (!queue.empty() && !seen.contains(target)) {
    std::uint64_t state = queue.front();
    queue.pop_front();
    Relation current = Relation::from_bits(n, state);
    for (std::uint32_t k = 0; k < letters.size(); ++k) {
      visit(rel_compose(current, letters[k]).bits(), {state, k, false});
    }
  }
  // the full relation lies in the generated semigroup, so the search succeeds
  Word w;
  for (std::uint64_t state = target;;) {
    const Origin& o = seen.at(state);
    w.push_back(alphabet[o.letter]);
    if (o.root) {
      break;
    }
    state = o.parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

namespace {

// Least-cardinality A (least bit mask among those) with A sigma full.
std::uint32_t least_cover(const Relation& sigma) {
  const unsigned n = sigma.n();
  const std::uint32_t all = (1U << n) - 1;
  std::uint32_t best = all;
  for (std::uint32_t a = 1; a <= all; ++a) {
    if (sigma.image(a) == all && std::popcount(a) < std::popcount(best)) {
      best = a;
    }
  }
  return best;
}

std::vector<unsigned> members(std::uint32_t mask, unsigned n) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) {
      out.push_back(i);
    }
  }
  return out;
}

// A permutation sending the listed sources to the listed targets in order,
// completed by pairing the remaining points in increasing order.
std::vector<std::uint8_t> extend(unsigned n, const std::vector<unsigned>& from,
                                 const std::vector<unsigned>& to) {
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < from.size(); ++k) {
    image[from[k]] = static_cast<int>(to[k]);
    used[to[k]] = true;
  }
  unsigned next = 0;
  std::vector<std::uint8_t> perm(n);
  for (unsigned i = 0; i < n; ++i) {
    if (image[i] < 0) {
      while (used[next]) {
        ++next;
      }
      image[i] = static_cast<int>(next);
      used[next] = true;
    }
    perm[i] = static_cast<std::uint8_t>(image[i]);
  }
  return perm;
}

// A word tau with 0 tau = {0, ..., n-1}, first letter Rho.
Word row_filling_word(const Relation& rho, const Relation& sigma) {
  const unsigned n = rho.n();
  const std::uint32_t all = (1U << n) - 1;
  const std::uint32_t cover = least_cover(sigma);
  const std::vector<unsigned> a = members(cover, n);

  Word w{Letter::rho()};
  std::uint32_t reached = rho.row(0);
  while (reached != all) {
    std::vector<unsigned> x = members(reached, n);
    std::vector<std::uint8_t> perm;
    if (x.size() >= a.size()) {
      // A is inside the image of X
      perm = extend(n, std::vector<unsigned>(x.begin(), x.begin() + a.size()), a);
    } else {
      // X lands strictly inside A and meets a point with at least two
      // sigma-successors
      std::vector<unsigned> targets;
      for (unsigned i : a) {
        if (std::popcount(sigma.row(i)) > 1) {
          targets.push_back(i);
          break;
        }
      }
      for (unsigned i : a) {
        if (targets.size() < x.size() && i != targets.front()) {
          targets.push_back(i);
        }
      }
      perm = extend(n, x, targets);
    }
    std::uint32_t moved = Relation::from_permutation(perm).image(reached);
    w.push_back(Letter::permutation(std::move(perm)));
    w.push_back(Letter::sigma());
    reached = sigma.image(moved);
  }
  return w;
}

std::vector<std::uint8_t> inverse_perm(const std::vector<std::uint8_t>& p) {
  std::vector<std::uint8_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[p[i]] = static_cast<std::uint8_t>(i);
  }
  return out;
}

}  // namespace

Word bfin_greedy(const Relation& rho, const Relation& sigma) {
  check_hypotheses(rho, sigma);
  Word forward = row_filling_word(rho, sigma);
  // 0 tau1 is full for a word tau1 in sigma^-1 (as Rho) and rho^-1 (as Sigma);
  // its inverse has a full column 0 and is a word in sigma and rho.
  Word dual = row_filling_word(invert_rel(sigma), invert_rel(rho));
  Word w;
  for (auto it = dual.rbegin(); it != dual.rend(); ++it) {
    switch (it->kind) {
      case Letter::Kind::Rho:
        w.push_back(Letter::sigma());
        break;
      case Letter::Kind::Sigma:
        w.push_back(Letter::rho());
        break;
      default:
        w.push_back(Letter::permutation(inverse_perm(it->perm)));
    }
  }
  w.insert(w.end(), forward.begin(), forward.end());
  return w;
}

}  // namespace maxsg
