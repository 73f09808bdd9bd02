#include "maxsg/periodic_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maxsg {

namespace {

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

PeriodicSet PeriodicSet::finite(std::vector<std::uint64_t> members) {
  sort_unique(members);
  PeriodicSet s;
  s.threshold_ = members.empty() ? 0 : members.back() + 1;
  s.head_ = std::move(members);
  s.canonicalize();
  return s;
}

PeriodicSet PeriodicSet::residue_class(std::uint64_t residue,
                                       std::uint64_t modulus) {
  if (modulus == 0) {
    throw std::invalid_argument("residue class modulus must be positive");
  }
  return from_parts(0, modulus, {residue % modulus}, {});
}

PeriodicSet PeriodicSet::naturals() { return from_parts(0, 1, {0}, {}); }

PeriodicSet PeriodicSet::from_progressions(
    std::vector<std::uint64_t> members, const std::vector<std::uint64_t>& starts,
    std::uint64_t step) {
  if (starts.empty()) {
    return finite(std::move(members));
  }
  if (step == 0) {
    throw std::invalid_argument("progression step must be positive");
  }
  std::uint64_t top = *std::max_element(starts.begin(), starts.end());
  for (auto m : members) {
    top = std::max(top, m);
  }
  PeriodicSet s;
  s.threshold_ = top + 1;
  s.period_ = step;
  for (auto start : starts) {
    s.residues_.push_back(start % step);
    for (std::uint64_t y = start; y < s.threshold_; y += step) {
      members.push_back(y);
    }
  }
  s.head_ = std::move(members);
  s.canonicalize();
  return s;
}

PeriodicSet PeriodicSet::from_parts(std::uint64_t threshold,
                                    std::uint64_t period,
                                    std::vector<std::uint64_t> residues,
                                    std::vector<std::uint64_t> head) {
  if (period == 0) {
    throw std::invalid_argument("period must be positive");
  }
  PeriodicSet s;
  s.threshold_ = threshold;
  s.period_ = period;
  s.residues_ = std::move(residues);
  s.head_ = std::move(head);
  for (auto r : s.residues_) {
    if (r >= period) {
      throw std::invalid_argument("residue out of range");
    }
  }
  for (auto h : s.head_) {
    if (h >= threshold) {
      throw std::invalid_argument("head element beyond threshold");
    }
  }
  s.canonicalize();
  return s;
}

void PeriodicSet::canonicalize() {
  sort_unique(residues_);
  sort_unique(head_);
  if (residues_.empty()) {
    period_ = 1;
  } else if (period_ > 1) {
    std::vector<bool> in(period_, false);
    for (auto r : residues_) {
      in[r] = true;
    }
    for (std::uint64_t d = 1; d < period_; ++d) {
      if (period_ % d != 0) {
        continue;
      }
      bool invariant = true;
      for (std::uint64_t r = 0; r < period_ && invariant; ++r) {
        invariant = in[r] == in[r % d];
      }
      if (invariant) {
        std::vector<std::uint64_t> reduced;
        for (std::uint64_t r = 0; r < d; ++r) {
          if (in[r]) {
            reduced.push_back(r);
          }
        }
        residues_ = std::move(reduced);
        period_ = d;
        break;
      }
    }
  }
  while (threshold_ > 0) {
    std::uint64_t x = threshold_ - 1;
    bool in_head = !head_.empty() && head_.back() == x;
    bool by_rule =
        std::binary_search(residues_.begin(), residues_.end(), x % period_);
    if (in_head != by_rule) {
      break;
    }
    --threshold_;
    if (in_head) {
      head_.pop_back();
    }
  }
}

bool PeriodicSet::contains(std::uint64_t x) const {
  if (x < threshold_) {
    return std::binary_search(head_.begin(), head_.end(), x);
  }
  return std::binary_search(residues_.begin(), residues_.end(), x % period_);
}

std::uint64_t PeriodicSet::cofinite_gap_count() const {
  return threshold_ - head_.size();
}

bool PeriodicSet::next_member(std::uint64_t x, std::uint64_t& out) const {
  if (x < threshold_) {
    auto it = std::lower_bound(head_.begin(), head_.end(), x);
    if (it != head_.end()) {
      out = *it;
      return true;
    }
    x = threshold_;
  }
  if (residues_.empty()) {
    return false;
  }
  std::uint64_t r = x % period_;
  std::uint64_t base = x - r;
  auto it = std::lower_bound(residues_.begin(), residues_.end(), r);
  out = it != residues_.end() ? base + *it : base + period_ + residues_.front();
  return true;
}

std::vector<std::uint64_t> PeriodicSet::first(std::size_t k) const {
  std::vector<std::uint64_t> out;
  std::uint64_t x = 0;
  std::uint64_t next = 0;
  while (out.size() < k && next_member(x, next)) {
    out.push_back(next);
    x = next + 1;
  }
  return out;
}

PeriodicSet PeriodicSet::complement() const {
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0, i = 0; r < period_; ++r) {
    if (i < residues_.size() && residues_[i] == r) {
      ++i;
    } else {
      residues.push_back(r);
    }
  }
  std::vector<std::uint64_t> head;
  for (std::uint64_t x = 0, i = 0; x < threshold_; ++x) {
    if (i < head_.size() && head_[i] == x) {
      ++i;
    } else {
      head.push_back(x);
    }
  }
  return from_parts(threshold_, period_, std::move(residues), std::move(head));
}

bool PeriodicSet::meets_class_infinitely(std::uint64_t r,
                                         std::uint64_t n) const {
  std::uint64_t g = std::gcd(period_, n);
  return std::any_of(residues_.begin(), residues_.end(),
                     [&](std::uint64_t q) { return q % g == r % g; });
}

std::string PeriodicSet::describe() const {
  std::string head = "{" + join(head_) + "}";
  if (residues_.empty()) {
    return head;
  }
  std::string tail = "{x >= " + std::to_string(threshold_) + " : x mod " +
                     std::to_string(period_) + " in {" + join(residues_) +
                     "}}";
  if (head_.empty()) {
    return tail;
  }
  return head + " u " + tail;
}

namespace {

template <class Op>
PeriodicSet combine(const PeriodicSet& a, const PeriodicSet& b, Op op) {
  std::uint64_t period = std::lcm(a.period(), b.period());
  std::uint64_t threshold = std::max(a.threshold(), b.threshold());
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < period; ++r) {
    // threshold + ((r - threshold) mod period) is the first tail point ≡ r
    std::uint64_t x = threshold + (r + period - threshold % period) % period;
    if (op(a.contains(x), b.contains(x))) {
      residues.push_back(r);
    }
  }
  std::vector<std::uint64_t> head;
  for (std::uint64_t x = 0; x < threshold; ++x) {
    if (op(a.contains(x), b.contains(x))) {
      head.push_back(x);
    }
  }
  return PeriodicSet::from_parts(threshold, period, std::move(residues),
                                 std::move(head));
}

}  // namespace

PeriodicSet set_union(const PeriodicSet& a, const PeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

PeriodicSet set_intersection(const PeriodicSet& a, const PeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

}  // namespace maxsg
