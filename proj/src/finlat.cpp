#include "m3lat/finlat.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace m3lat {

namespace {

std::vector<std::vector<bool>> empty_order(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  return leq;
}

/// Reflexive-transitive closure of a cover list.
std::vector<std::vector<bool>> order_from_covers(std::size_t n,
                                                 const std::vector<std::pair<Elem, Elem>>& covers) {
  auto leq = empty_order(n);
  for (auto [x, y] : covers) leq[x][y] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return leq;
}

std::string pair_text(Elem x, Elem y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

void spot_check_laws(const FiniteLattice& l) {
  const std::size_t n = l.size();
  auto fail = [](const char* law, Elem x, Elem y) {
    throw std::logic_error(std::string("FiniteLattice: ") + law + " fails at " + pair_text(x, y));
  };
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (l.meet(x, y) != l.meet(y, x) || l.join(x, y) != l.join(y, x)) fail("commutativity", x, y);
      if (l.meet(x, l.join(x, y)) != x || l.join(x, l.meet(x, y)) != x) fail("absorption", x, y);
    }
  }
  auto assoc = [&](Elem x, Elem y, Elem z) {
    if (l.meet(l.meet(x, y), z) != l.meet(x, l.meet(y, z)) ||
        l.join(l.join(x, y), z) != l.join(x, l.join(y, z))) {
      fail("associativity", x, y);
    }
  };
  if (n <= 64) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) assoc(x, y, z);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, n - 1);
    for (int i = 0; i < 20000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
}

}  // namespace

FiniteLattice FiniteLattice::from_order(std::vector<std::vector<bool>> leq) {
  using Kind = LatticeError::Kind;
  const std::size_t n = leq.size();
  if (n == 0) throw LatticeError(Kind::NotLattice, 0, 0, "empty carrier has no bounds");
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) {
      throw LatticeError(Kind::NotPoset, i, 0, "order matrix row " + std::to_string(i) + " has wrong length");
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (!leq[x][x]) throw LatticeError(Kind::NotPoset, x, x, "not reflexive at " + pair_text(x, x));
    for (Elem y = 0; y < n; ++y) {
      if (x != y && leq[x][y] && leq[y][x]) {
        throw LatticeError(Kind::NotPoset, x, y, "not antisymmetric at " + pair_text(x, y));
      }
      if (!leq[x][y]) continue;
      for (Elem z = 0; z < n; ++z) {
        if (leq[y][z] && !leq[x][z]) {
          throw LatticeError(Kind::NotPoset, x, z, "not transitive at " + pair_text(x, z));
        }
      }
    }
  }

  FiniteLattice l;
  l.n_ = n;
  l.leq_.resize(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) l.leq_[x * n + y] = leq[x][y];

  // The greatest lower bound, if it exists, is the lower bound with the
  // largest down-set; likewise for upper bounds with the largest up-set.
  std::vector<std::size_t> down(n, 0), up(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (leq[y][x]) ++down[x];
      if (leq[x][y]) ++up[x];
    }

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      std::optional<Elem> glb, lub;
      for (Elem z = 0; z < n; ++z) {
        if (leq[z][x] && leq[z][y] && (!glb || down[z] > down[*glb])) glb = z;
        if (leq[x][z] && leq[y][z] && (!lub || up[z] > up[*lub])) lub = z;
      }
      for (Elem z = 0; z < n; ++z) {
        if (glb && leq[z][x] && leq[z][y] && !leq[z][*glb]) glb.reset();
        if (lub && leq[x][z] && leq[y][z] && !leq[*lub][z]) lub.reset();
      }
      if (!glb) throw LatticeError(Kind::NotLattice, x, y, "no meet for " + pair_text(x, y));
      if (!lub) throw LatticeError(Kind::NotLattice, x, y, "no join for " + pair_text(x, y));
      l.meet_[x * n + y] = l.meet_[y * n + x] = *glb;
      l.join_[x * n + y] = l.join_[y * n + x] = *lub;
    }
  }
  l.bottom_ = l.meet_[0];
  l.top_ = l.join_[0];
  for (Elem x = 1; x < n; ++x) {
    l.bottom_ = l.meet(l.bottom_, x);
    l.top_ = l.join(l.top_, x);
  }
  spot_check_laws(l);
  return l;
}

std::vector<std::vector<bool>> FiniteLattice::order_matrix() const {
  std::vector<std::vector<bool>> m(n_, std::vector<bool>(n_));
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) m[x][y] = leq(x, y);
  return m;
}

FiniteLattice chain(std::size_t k) {
  std::vector<std::pair<Elem, Elem>> covers;
  for (Elem i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return FiniteLattice::from_order(order_from_covers(k, covers));
}

FiniteLattice boolean_lattice(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) leq[x][y] = (x & ~y) == 0;
  return FiniteLattice::from_order(std::move(leq));
}

FiniteLattice diamond_m3() {
  return FiniteLattice::from_order(
      order_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

FiniteLattice pentagon_n5() {
  return FiniteLattice::from_order(order_from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}));
}

FiniteLattice product(const FiniteLattice& l, const FiniteLattice& r) {
  const std::size_t m = r.size();
  const std::size_t n = l.size() * m;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) leq[x][y] = l.leq(x / m, y / m) && r.leq(x % m, y % m);
  return FiniteLattice::from_order(std::move(leq));
}

FiniteLattice with_new_top(const FiniteLattice& l) {
  const std::size_t n = l.size();
  auto leq = l.order_matrix();
  for (auto& row : leq) row.push_back(true);
  leq.emplace_back(n + 1, false);
  leq[n][n] = true;
  return FiniteLattice::from_order(std::move(leq));
}

FiniteLattice double_element(const FiniteLattice& l, Elem x) {
  const std::size_t n = l.size();
  if (x >= n) throw std::out_of_range("double_element: no such element");
  auto leq = l.order_matrix();
  for (Elem y = 0; y < n; ++y) leq[y].push_back(l.leq(y, x));
  leq.emplace_back(n + 1, false);
  for (Elem y = 0; y < n; ++y) leq[n][y] = l.leq(x, y) && y != x;
  leq[n][n] = true;
  return FiniteLattice::from_order(std::move(leq));
}

FiniteLattice relabeled(const FiniteLattice& l, const std::vector<Elem>& perm) {
  const std::size_t n = l.size();
  if (perm.size() != n) throw std::invalid_argument("relabeled: permutation size mismatch");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) leq[perm[x]][perm[y]] = l.leq(x, y);
  return FiniteLattice::from_order(std::move(leq));
}

std::vector<NamedLattice> curated_family() {
  std::vector<NamedLattice> family;
  for (std::size_t k = 1; k <= 4; ++k) family.push_back({"chain" + std::to_string(k), chain(k)});
  family.push_back({"2^2", boolean_lattice(2)});
  family.push_back({"2^3", boolean_lattice(3)});
  family.push_back({"M3", diamond_m3()});
  family.push_back({"N5", pentagon_n5()});
  family.push_back({"M3+top", with_new_top(diamond_m3())});
  family.push_back({"N5-doubled", double_element(pentagon_n5(), 3)});
  return family;
}

bool is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

bool is_modular(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem z = 0; z < n; ++z) {
      if (!l.leq(x, z)) continue;
      for (Elem y = 0; y < n; ++y)
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) return false;
    }
  return true;
}

std::vector<Elem> complements(const FiniteLattice& l, Elem x) {
  std::vector<Elem> out;
  for (Elem y = 0; y < l.size(); ++y) {
    if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) out.push_back(y);
  }
  return out;
}

bool is_complemented(const FiniteLattice& l) {
  for (Elem x = 0; x < l.size(); ++x)
    if (complements(l, x).empty()) return false;
  return true;
}

bool is_uniquely_complemented(const FiniteLattice& l) {
  for (Elem x = 0; x < l.size(); ++x)
    if (complements(l, x).size() != 1) return false;
  return true;
}

bool is_boolean(const FiniteLattice& l) { return is_uniquely_complemented(l) && is_distributive(l); }

bool arguesian_holds_at(const FiniteLattice& l, const std::array<Elem, 6>& t) {
  const auto [a0, a1, a2, b0, b1, b2] = t;
  auto m = [&](Elem x, Elem y) { return l.meet(x, y); };
  auto j = [&](Elem x, Elem y) { return l.join(x, y); };
  const Elem c0 = m(j(a1, a2), j(b1, b2));
  const Elem c1 = m(j(a0, a2), j(b0, b2));
  const Elem c2 = m(j(a0, a1), j(b0, b1));
  const Elem c = m(c2, j(c0, c1));
  const Elem lhs = m(m(j(a0, b0), j(a1, b1)), j(a2, b2));
  const Elem rhs = j(m(j(c, a1), a0), m(j(c, b1), b0));
  return l.leq(lhs, rhs);
}

ArguesianResult is_arguesian(const FiniteLattice& l, std::uint64_t sample_budget, std::uint64_t seed) {
  ArguesianResult r;
  const std::uint64_t n = l.size();
  // n^6 with overflow guard.
  std::uint64_t total = 1;
  bool small = true;
  for (int i = 0; i < 6 && small; ++i) {
    if (total > sample_budget / n) small = false;
    total *= n;
  }
  small = small && total <= sample_budget;
  if (small) {
    r.mode = CheckMode::Exhaustive;
    std::array<Elem, 6> t{};
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t rest = code;
      for (int i = 5; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = rest % n;
        rest /= n;
      }
      ++r.checked;
      if (!arguesian_holds_at(l, t)) {
        r.holds = false;
        r.counterexample = t;
        return r;
      }
    }
    return r;
  }
  r.mode = CheckMode::Sampled;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, n - 1);
  for (std::uint64_t i = 0; i < sample_budget; ++i) {
    std::array<Elem, 6> t{};
    for (auto& e : t) e = pick(rng);
    ++r.checked;
    if (!arguesian_holds_at(l, t)) {
      r.holds = false;
      r.counterexample = t;
      return r;
    }
  }
  return r;
}

M3Lattice m3_of(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::array<Elem, 3>> triples;
  std::vector<std::ptrdiff_t> index_of(n * n * n, -1);
  auto code = [n](Elem a, Elem b, Elem c) { return (a * n + b) * n + c; };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem ab = l.meet(a, b);
        if (ab == l.meet(a, c) && ab == l.meet(b, c)) {
          index_of[code(a, b, c)] = static_cast<std::ptrdiff_t>(triples.size());
          triples.push_back({a, b, c});
        }
      }
  const auto& ts = triples;
  const std::size_t m = ts.size();
  auto below = [&](const std::array<Elem, 3>& s, const std::array<Elem, 3>& t) {
    return l.leq(s[0], t[0]) && l.leq(s[1], t[1]) && l.leq(s[2], t[2]);
  };
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) leq[i][j] = below(ts[i], ts[j]);
  const FiniteLattice lattice = FiniteLattice::from_order(std::move(leq));

  const bool distributive = is_distributive(l);
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = i; j < m; ++j) {
      const std::array<Elem, 3> raw{l.join(ts[i][0], ts[j][0]), l.join(ts[i][1], ts[j][1]),
                                    l.join(ts[i][2], ts[j][2])};
      // Meet of all balanced triples above the componentwise join. The top
      // triple is balanced, so the set is never empty.
      std::array<Elem, 3> acc{l.top(), l.top(), l.top()};
      for (const auto& t : ts) {
        if (below(raw, t)) acc = {l.meet(acc[0], t[0]), l.meet(acc[1], t[1]), l.meet(acc[2], t[2])};
      }
      const auto idx = index_of[code(acc[0], acc[1], acc[2])];
      if (idx < 0 || static_cast<Elem>(idx) != lattice.join(i, j)) {
        throw std::logic_error("m3_of: join via balanced upper bounds disagrees with order join at " +
                               pair_text(i, j));
      }
      if (distributive) {
        const Elem mu = l.join(l.join(l.meet(raw[0], raw[1]), l.meet(raw[0], raw[2])),
                               l.meet(raw[1], raw[2]));
        const std::array<Elem, 3> closed{l.join(raw[0], mu), l.join(raw[1], mu), l.join(raw[2], mu)};
        if (closed != acc) {
          throw std::logic_error("m3_of: closure join disagrees at " + pair_text(i, j));
        }
      }
    }
  }
  return M3Lattice{lattice, std::move(triples)};
}

namespace {

void require_valid_mask(const FiniteLattice& l, const Mask& mask) {
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] >= l.size()) throw std::out_of_range("mask: element out of range");
    if (i > 0 && mask[i] <= mask[i - 1]) throw std::invalid_argument("mask: not sorted/unique");
  }
}

bool is_sublattice_bits(const FiniteLattice& l, const std::vector<bool>& in) {
  if (!in[l.bottom()] || !in[l.top()]) return false;
  for (Elem x = 0; x < l.size(); ++x) {
    if (!in[x]) continue;
    for (Elem y = x + 1; y < l.size(); ++y) {
      if (in[y] && (!in[l.meet(x, y)] || !in[l.join(x, y)])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_sublattice(const FiniteLattice& l, const Mask& mask) {
  require_valid_mask(l, mask);
  std::vector<bool> in(l.size(), false);
  for (Elem x : mask) in[x] = true;
  return is_sublattice_bits(l, in);
}

FiniteLattice induced(const FiniteLattice& l, const Mask& mask) {
  if (!is_sublattice(l, mask)) throw std::invalid_argument("induced: mask is not a bounded sublattice");
  std::vector<std::vector<bool>> leq(mask.size(), std::vector<bool>(mask.size()));
  for (Elem i = 0; i < mask.size(); ++i)
    for (Elem j = 0; j < mask.size(); ++j) leq[i][j] = l.leq(mask[i], mask[j]);
  return FiniteLattice::from_order(std::move(leq));
}

std::vector<Mask> maximal_boolean_extensions(const FiniteLattice& l, const Mask& mask) {
  require_valid_mask(l, mask);
  const std::size_t n = l.size();
  if (n > 16) throw BudgetExceeded("maximal_boolean_extensions: lattice has more than 16 elements");
  std::vector<bool> base(n, false);
  for (Elem x : mask) base[x] = true;
  std::vector<Elem> free;
  for (Elem x = 0; x < n; ++x)
    if (!base[x]) free.push_back(x);

  std::vector<Mask> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << free.size()); ++bits) {
    std::vector<bool> in = base;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (bits >> i & 1U) in[free[i]] = true;
    if (!is_sublattice_bits(l, in)) continue;
    Mask candidate;
    for (Elem x = 0; x < n; ++x)
      if (in[x]) candidate.push_back(x);
    if (is_boolean(induced(l, candidate))) out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct IsoSearch {
  IsoSearch(const FiniteLattice& a, const FiniteLattice& b, std::uint64_t node_budget)
      : l1(a), l2(b), budget(node_budget) {}

  const FiniteLattice& l1;
  const FiniteLattice& l2;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<Elem> order;                // l1 elements in assignment order
  std::vector<std::vector<Elem>> cands;   // per l1 element
  std::vector<std::ptrdiff_t> image;      // l1 -> l2
  std::vector<bool> used;

  bool run(std::size_t depth) {
    if (++nodes > budget) throw BudgetExceeded("is_isomorphic: node budget exhausted");
    if (depth == order.size()) return true;
    const Elem x = order[depth];
    for (Elem y : cands[x]) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Elem u = order[d];
        const auto v = static_cast<Elem>(image[u]);
        ok = l1.leq(x, u) == l2.leq(y, v) && l1.leq(u, x) == l2.leq(v, y);
      }
      if (!ok) continue;
      image[x] = static_cast<std::ptrdiff_t>(y);
      used[y] = true;
      if (run(depth + 1)) return true;
      used[y] = false;
      image[x] = -1;
    }
    return false;
  }
};

/// (down-set size, up-set size, lower covers, upper covers, depth from bottom).
std::vector<std::array<std::size_t, 5>> invariants(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::array<std::size_t, 5>> inv(n, {0, 0, 0, 0, 0});
  for (auto [x, y] : hasse_covers(l)) {
    ++inv[y][2];
    ++inv[x][3];
  }
  std::vector<Elem> by_down(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (l.leq(y, x)) ++inv[x][0];
      if (l.leq(x, y)) ++inv[x][1];
    }
  // Longest chain from bottom, processed in a linear extension.
  std::iota(by_down.begin(), by_down.end(), Elem{0});
  std::sort(by_down.begin(), by_down.end(), [&](Elem a, Elem b) { return inv[a][0] < inv[b][0]; });
  for (Elem x : by_down)
    for (Elem y = 0; y < n; ++y)
      if (y != x && l.leq(y, x)) inv[x][4] = std::max(inv[x][4], inv[y][4] + 1);
  return inv;
}

}  // namespace

bool is_isomorphic(const FiniteLattice& l1, const FiniteLattice& l2, std::uint64_t node_budget) {
  const std::size_t n = l1.size();
  if (n != l2.size()) return false;
  const auto inv1 = invariants(l1);
  const auto inv2 = invariants(l2);
  {
    auto s1 = inv1, s2 = inv2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  IsoSearch search(l1, l2, node_budget);
  search.cands.resize(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (inv1[x] == inv2[y]) search.cands[x].push_back(y);
  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), Elem{0});
  // Most constrained first, then bottom-up so comparabilities prune early.
  std::stable_sort(search.order.begin(), search.order.end(), [&](Elem a, Elem b) {
    if (search.cands[a].size() != search.cands[b].size()) {
      return search.cands[a].size() < search.cands[b].size();
    }
    return inv1[a][4] < inv1[b][4];
  });
  search.image.assign(n, -1);
  search.used.assign(n, false);
  return search.run(0);
}

std::vector<std::pair<Elem, Elem>> hasse_covers(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::pair<Elem, Elem>> covers;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (x == y || !l.leq(x, y)) continue;
      bool cover = true;
      for (Elem z = 0; z < n && cover; ++z) {
        if (z != x && z != y && l.leq(x, z) && l.leq(z, y)) cover = false;
      }
      if (cover) covers.emplace_back(x, y);
    }
  }
  return covers;
}

std::string to_dot(const FiniteLattice& l) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Elem x = 0; x < l.size(); ++x) os << "  " << x << " [label=\"" << x << "\"];\n";
  for (auto [x, y] : hasse_covers(l)) os << "  " << x << " -> " << y << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<Elem> join_irreducibles(const FiniteLattice& l) {
  std::vector<std::size_t> lower_covers(l.size(), 0);
  for (auto [x, y] : hasse_covers(l)) ++lower_covers[y];
  std::vector<Elem> out;
  for (Elem x = 0; x < l.size(); ++x)
    if (lower_covers[x] == 1) out.push_back(x);
  return out;
}

std::vector<std::vector<Elem>> birkhoff_representation(const FiniteLattice& l) {
  if (!is_distributive(l)) throw std::invalid_argument("birkhoff_representation: not distributive");
  const auto ji = join_irreducibles(l);
  std::vector<std::vector<Elem>> rep(l.size());
  for (Elem x = 0; x < l.size(); ++x)
    for (std::size_t k = 0; k < ji.size(); ++k)
      if (l.leq(ji[k], x)) rep[x].push_back(k);
  return rep;
}

}  // namespace m3lat
