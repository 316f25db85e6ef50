#include "m3lat/subspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace m3lat {

PrimeField::PrimeField(Scalar p) : p_(p) {
  if (p < 2 || p >= (1U << 16)) throw std::invalid_argument("PrimeField: modulus out of range");
  for (Scalar d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
  }
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
  // Fermat: a^(p-2).
  Scalar result = 1;
  Scalar base = a % p_;
  for (Scalar e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Scalar PrimeField::reduce(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Scalar>(((v % p) + p) % p);
}

std::vector<Vec> rref(const PrimeField& f, std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Scalar scale = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Scalar factor = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

Subspace Subspace::whole(const VectorSpace& v) {
  std::vector<Vec> id(v.dim, Vec(v.dim, 0));
  for (std::size_t i = 0; i < v.dim; ++i) id[i][i] = 1;
  return span(v, id);
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span[";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << "; ";
    for (std::size_t k = 0; k < basis_[i].size(); ++k) os << (k ? " " : "") << basis_[i][k];
  }
  os << "] mod " << space_.field.modulus();
  return os.str();
}

Subspace span(const VectorSpace& v, std::span<const Vec> vectors) {
  std::vector<Vec> rows;
  rows.reserve(vectors.size());
  for (const auto& x : vectors) {
    if (x.size() != v.dim) throw SpaceMismatch("span: vector has wrong dimension");
    Vec reduced(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) reduced[k] = x[k] % v.field.modulus();
    rows.push_back(std::move(reduced));
  }
  return Subspace(v, rref(v.field, std::move(rows)));
}

namespace {

void require_same_space(const Subspace& u, const Subspace& w, const char* op) {
  if (u.space() != w.space()) throw SpaceMismatch(std::string(op) + ": subspaces of different spaces");
}

}  // namespace

Subspace sum(const Subspace& u, const Subspace& w) {
  require_same_space(u, w, "sum");
  std::vector<Vec> rows = u.basis();
  rows.insert(rows.end(), w.basis().begin(), w.basis().end());
  return span(u.space(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  require_same_space(u, w, "intersect");
  const std::size_t d = u.space().dim;
  std::vector<Vec> block;
  for (const auto& row : u.basis()) {
    Vec r(2 * d);
    std::copy(row.begin(), row.end(), r.begin());
    std::copy(row.begin(), row.end(), r.begin() + static_cast<std::ptrdiff_t>(d));
    block.push_back(std::move(r));
  }
  for (const auto& row : w.basis()) {
    Vec r(2 * d, 0);
    std::copy(row.begin(), row.end(), r.begin());
    block.push_back(std::move(r));
  }
  std::vector<Vec> right;
  for (const auto& r : rref(u.space().field, std::move(block))) {
    if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d), [](Scalar x) { return x == 0; })) {
      right.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(d), r.end());
    }
  }
  return span(u.space(), right);
}

bool contains(const Subspace& w, const Vec& v) {
  if (v.size() != w.space().dim) throw SpaceMismatch("contains: vector has wrong dimension");
  std::vector<Vec> rows = w.basis();
  rows.push_back(v);
  return rref(w.space().field, std::move(rows)).size() == w.dim();
}

bool is_subspace_of(const Subspace& u, const Subspace& w) {
  require_same_space(u, w, "is_subspace_of");
  return sum(u, w).dim() == w.dim();
}

std::vector<Subspace> all_subspaces(const VectorSpace& v) {
  const std::uint64_t p = v.field.modulus();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < v.dim; ++i) {
    count *= p;
    if (count > 4096) throw BudgetExceeded("all_subspaces: space too large");
  }
  std::vector<Vec> vectors;
  for (std::uint64_t code = 1; code < count; ++code) {
    Vec x(v.dim);
    std::uint64_t rest = code;
    for (std::size_t k = 0; k < v.dim; ++k) {
      x[k] = static_cast<Scalar>(rest % p);
      rest /= p;
    }
    vectors.push_back(std::move(x));
  }
  // Grow subspaces one generator at a time, starting from zero.
  std::set<std::vector<Vec>> seen;
  std::vector<Subspace> out{Subspace::zero(v)};
  seen.insert(out.front().basis());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& x : vectors) {
      if (contains(out[i], x)) continue;
      std::vector<Vec> gens = out[i].basis();
      gens.push_back(x);
      Subspace bigger = span(v, gens);
      if (seen.insert(bigger.basis()).second) out.push_back(std::move(bigger));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis() < b.basis();
  });
  return out;
}

SubspaceLattice subspace_lattice(const VectorSpace& v) {
  auto elements = all_subspaces(v);
  std::vector<std::vector<bool>> leq(elements.size(), std::vector<bool>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) leq[i][j] = is_subspace_of(elements[i], elements[j]);
  return SubspaceLattice{FiniteLattice::from_order(std::move(leq)), std::move(elements)};
}

Vec PresentedSpace::x(Index alpha) const {
  if (alpha >= n_) throw std::out_of_range("PresentedSpace::x: index out of range");
  Vec v(2 * n_, 0);
  v[2 * alpha] = 1;
  return v;
}

Vec PresentedSpace::y(Index alpha) const {
  if (alpha >= n_) throw std::out_of_range("PresentedSpace::y: index out of range");
  Vec v(2 * n_, 0);
  v[2 * alpha + 1] = 1;
  return v;
}

Vec PresentedSpace::z(Index alpha) const {
  if (alpha >= n_) throw std::out_of_range("PresentedSpace::z: index out of range");
  Vec v(2 * n_, 0);
  v[2 * alpha] = field_.neg(1);
  v[2 * alpha + 1] = field_.neg(1);
  return v;
}

namespace {

void require_matching_universe(const PresentedSpace& s, const Triple& t) {
  if (t.universe() != s.universe()) {
    throw UniverseMismatch("triple universe " + t.universe().to_string() + " does not match space over " +
                           s.universe().to_string());
  }
}

void require_matching_space(const PresentedSpace& s, const Subspace& w) {
  if (w.space() != s.ambient()) throw SpaceMismatch("subspace is not in the presented space");
}

}  // namespace

Subspace F_map(const PresentedSpace& s, const Triple& t) {
  require_matching_universe(s, t);
  std::vector<Vec> gens;
  for (Index a : t.a.support()) gens.push_back(s.x(a));
  for (Index b : t.b.support()) gens.push_back(s.y(b));
  for (Index c : t.c.support()) gens.push_back(s.z(c));
  return span(s.ambient(), gens);
}

Triple G_map(const PresentedSpace& s, const Subspace& w) {
  require_matching_space(s, w);
  std::vector<Index> xs, ys, zs;
  for (Index i = 0; i < s.n(); ++i) {
    if (contains(w, s.x(i))) xs.push_back(i);
    if (contains(w, s.y(i))) ys.push_back(i);
    if (contains(w, s.z(i))) zs.push_back(i);
  }
  const Universe u = s.universe();
  return Triple(FcSet(u, Tag::Fin, xs), FcSet(u, Tag::Fin, ys), FcSet(u, Tag::Fin, zs));
}

bool check_adjunction(const PresentedSpace& s, const Triple& t, const Subspace& w) {
  return is_subspace_of(F_map(s, t), w) == leq(t, G_map(s, w));
}

bool check_gf_closure(const PresentedSpace& s, const Triple& t) {
  return G_map(s, F_map(s, t)) == closure(t).triple();
}

bool check_meet_preservation(const PresentedSpace& s, const BalancedTriple& u, const BalancedTriple& v) {
  return intersect(F_map(s, u.triple()), F_map(s, v.triple())) == F_map(s, m3_meet(u, v).triple());
}

std::vector<BalancedTriple> all_balanced_triples(const Universe& u) {
  std::vector<BalancedTriple> out;
  for (auto& t : all_triples(u)) {
    if (is_balanced(t)) out.emplace_back(std::move(t));
  }
  return out;
}

EmbeddingReport check_embedding(const PresentedSpace& s, std::uint64_t samples, std::uint64_t seed) {
  EmbeddingReport report;
  const Universe u = s.universe();
  const VectorSpace v = s.ambient();
  auto fail = [&](const std::string& what) {
    report.pass = false;
    report.counterexample = what;
  };
  if (F_map(s, Triple::bottom(u)) != Subspace::zero(v)) {
    fail("F(bottom) is not the zero subspace");
    return report;
  }
  if (F_map(s, Triple::top(u)) != Subspace::whole(v)) {
    fail("F(top) is not the whole space");
    return report;
  }
  auto check_pair = [&](const BalancedTriple& x, const BalancedTriple& y) {
    ++report.checked;
    const Subspace fx = F_map(s, x.triple());
    const Subspace fy = F_map(s, y.triple());
    if (intersect(fx, fy) != F_map(s, m3_meet(x, y).triple())) {
      fail("meet not preserved at " + x.to_string() + ", " + y.to_string());
      return false;
    }
    if (sum(fx, fy) != F_map(s, m3_join(x, y).triple())) {
      fail("join not preserved at " + x.to_string() + ", " + y.to_string());
      return false;
    }
    if (!(x == y) && fx == fy) {
      fail("not injective at " + x.to_string() + ", " + y.to_string());
      return false;
    }
    return true;
  };
  if (s.n() <= 2) {
    report.mode = CheckMode::Exhaustive;
    const auto all = all_balanced_triples(u);
    for (const auto& x : all)
      for (const auto& y : all)
        if (!check_pair(x, y)) return report;
    return report;
  }
  report.mode = CheckMode::Sampled;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const BalancedTriple x = closure(random_triple(rng, u));
    const BalancedTriple y = closure(random_triple(rng, u));
    if (!check_pair(x, y)) return report;
  }
  return report;
}

EmbeddingReport check_m3_distributive_embedding(const FiniteLattice& l, const PrimeField& field) {
  EmbeddingReport report;
  const auto rep = birkhoff_representation(l);
  const Index k = join_irreducibles(l).size();
  const PresentedSpace s(k, field);
  const Universe u = s.universe();
  const M3Lattice m3 = m3_of(l);
  auto to_set = [&](Elem x) { return FcSet(u, Tag::Fin, std::vector<Index>(rep[x].begin(), rep[x].end())); };
  std::vector<Subspace> images;
  for (const auto& t : m3.triples) images.push_back(F_map(s, Triple(to_set(t[0]), to_set(t[1]), to_set(t[2]))));
  const auto& ml = m3.lattice;
  if (images[ml.bottom()] != Subspace::zero(s.ambient()) || images[ml.top()] != Subspace::whole(s.ambient())) {
    report.pass = false;
    report.counterexample = "bounds not preserved";
    return report;
  }
  for (Elem i = 0; i < ml.size(); ++i) {
    for (Elem j = 0; j < ml.size(); ++j) {
      ++report.checked;
      const bool ok = intersect(images[i], images[j]) == images[ml.meet(i, j)] &&
                      sum(images[i], images[j]) == images[ml.join(i, j)] && (i == j || images[i] != images[j]);
      if (!ok) {
        report.pass = false;
        report.counterexample = "embedding fails at elements " + std::to_string(i) + ", " + std::to_string(j);
        return report;
      }
    }
  }
  return report;
}

}  // namespace m3lat
