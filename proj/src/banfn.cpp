#include "m3lat/banfn.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace m3lat {

namespace {

bool is_complement(const FiniteLattice& l, Elem x, Elem y) {
  return l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
}

/// Backtracking core. allowed(y) restricts the values; visit returns false to
/// stop the search.
void search_banaschewski(const FiniteLattice& l, const std::function<bool(Elem)>& allowed,
                         const std::function<bool(const BanMap&)>& visit) {
  const std::size_t n = l.size();
  if (n > kBanSearchLimit) {
    throw BudgetExceeded("Banaschewski search limited to " + std::to_string(kBanSearchLimit) +
                         " elements");
  }
  std::vector<std::size_t> down(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (l.leq(y, x)) ++down[x];
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return down[a] < down[b]; });

  std::vector<std::vector<Elem>> choices(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y : complements(l, x))
      if (allowed(y)) choices[x].push_back(y);

  BanMap f{std::vector<Elem>(n, 0)};
  bool stop = false;
  std::function<void(std::size_t)> step = [&](std::size_t depth) {
    if (stop) return;
    if (depth == n) {
      stop = !visit(f);
      return;
    }
    const Elem x = order[depth];
    for (Elem y : choices[x]) {
      // Everything strictly below x was assigned earlier in the extension.
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Elem u = order[d];
        if (l.leq(u, x)) ok = l.leq(y, f.table[u]);
      }
      if (!ok) continue;
      f.table[x] = y;
      step(depth + 1);
      if (stop) return;
    }
  };
  step(0);
}

}  // namespace

bool is_banaschewski(const FiniteLattice& l, const BanMap& f) {
  const std::size_t n = l.size();
  if (f.table.size() != n) return false;
  for (Elem x = 0; x < n; ++x) {
    if (f.table[x] >= n || !is_complement(l, x, f.table[x])) return false;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (l.leq(x, y) && !l.leq(f.table[y], f.table[x])) return false;
  return true;
}

BanEnumeration enumerate_banaschewski(const FiniteLattice& l) {
  BanEnumeration out;
  for (Elem x = 0; x < l.size(); ++x) {
    if (complements(l, x).empty()) {
      out.note = "element " + std::to_string(x) + " has no complement";
      return out;
    }
  }
  search_banaschewski(
      l, [](Elem) { return true; },
      [&](const BanMap& f) {
        out.functions.push_back(f);
        return true;
      });
  if (out.functions.empty()) out.note = "complemented, but no antitone choice of complements";
  return out;
}

RangeInfo range_of(const FiniteLattice& l, const BanMap& f) {
  RangeInfo r;
  r.image = f.table;
  std::sort(r.image.begin(), r.image.end());
  r.image.erase(std::unique(r.image.begin(), r.image.end()), r.image.end());
  r.is_sublattice = is_sublattice(l, r.image);
  return r;
}

std::optional<BanMap> is_range_of_some_banaschewski(const FiniteLattice& l, const Mask& mask) {
  std::vector<bool> in(l.size(), false);
  for (Elem x : mask) {
    if (x >= l.size()) throw std::out_of_range("mask element out of range");
    in[x] = true;
  }
  std::optional<BanMap> found;
  search_banaschewski(
      l, [&](Elem y) { return in[y]; },
      [&](const BanMap& f) {
        std::vector<bool> hit(l.size(), false);
        for (Elem y : f.table) hit[y] = true;
        if (hit == in) {
          found = f;
          return false;
        }
        return true;
      });
  return found;
}

bool boolean_ranges_isomorphic(const FiniteLattice& l) {
  std::vector<FiniteLattice> ranges;
  for (const auto& f : enumerate_banaschewski(l).functions) {
    const RangeInfo r = range_of(l, f);
    if (!r.is_sublattice) continue;
    FiniteLattice sub = induced(l, r.image);
    if (is_boolean(sub)) ranges.push_back(std::move(sub));
  }
  for (std::size_t i = 1; i < ranges.size(); ++i) {
    if (!is_isomorphic(ranges[0], ranges[i])) return false;
  }
  return true;
}

}  // namespace m3lat
