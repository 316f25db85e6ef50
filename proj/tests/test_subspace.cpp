#include <doctest.h>

#include <algorithm>
#include <random>

#include "m3lat/subspace.hpp"

using namespace m3lat;

namespace {

const PrimeField F2(2);

Subspace span_of(const VectorSpace& v, std::vector<Vec> vs) { return span(v, vs); }

Triple tri(const Universe& u, std::initializer_list<Index> a, std::initializer_list<Index> b,
           std::initializer_list<Index> c) {
  return Triple(FcSet::fin(u, a), FcSet::fin(u, b), FcSet::fin(u, c));
}

Vec random_vec(std::mt19937_64& rng, const PrimeField& f, std::size_t dim) {
  Vec v(dim);
  for (auto& x : v) x = static_cast<Scalar>(rng() % f.modulus());
  return v;
}

Subspace random_subspace(std::mt19937_64& rng, const VectorSpace& v) {
  std::vector<Vec> gens(rng() % (v.dim + 1));
  for (auto& g : gens) g = random_vec(rng, v.field, v.dim);
  return span(v, gens);
}

}  // namespace

TEST_CASE("prime field") {
  const PrimeField f5(5);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.inv(3) == 2);
  CHECK(f5.neg(0) == 0);
  CHECK(f5.reduce(-7) == 3);
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(65537), std::invalid_argument);
}

TEST_CASE("subspace arithmetic examples") {
  for (Scalar p : {2u, 3u, 5u}) {
    const PresentedSpace s(1, PrimeField(p));
    const VectorSpace v = s.ambient();
    const Subspace xy = sum(span_of(v, {s.x(0)}), span_of(v, {s.y(0)}));
    CHECK(xy.dim() == 2);
    CHECK(contains(xy, s.z(0)));
    CHECK(intersect(xy, span_of(v, {s.z(0)})) == span_of(v, {s.z(0)}));
  }
  const VectorSpace v{F2, 3};
  CHECK_THROWS_AS(span_of(v, {{1, 0}}), SpaceMismatch);
  CHECK(Subspace::whole(v).dim() == 3);
  CHECK(Subspace::zero(v).dim() == 0);
}

TEST_CASE("F and G examples") {
  const PresentedSpace s(1, F2);
  const Universe u = s.universe();
  const VectorSpace v = s.ambient();
  CHECK(F_map(s, tri(u, {0}, {}, {})) == span_of(v, {s.x(0)}));
  const Subspace f = F_map(s, tri(u, {}, {0}, {0}));
  CHECK(f.dim() == 2);
  CHECK(f == span_of(v, {s.x(0), s.y(0)}));
  CHECK(F_map(s, Triple::bottom(u)) == Subspace::zero(v));

  CHECK(G_map(s, Subspace::zero(v)) == Triple::bottom(u));
  CHECK(G_map(s, span_of(v, {s.x(0), s.y(0)})) == tri(u, {0}, {0}, {0}));
  CHECK(G_map(s, span_of(v, {s.x(0)})) == tri(u, {0}, {}, {}));
}

TEST_CASE("adjunction, closure and meet examples") {
  const PresentedSpace s(2, F2);
  const Universe u = s.universe();
  const VectorSpace v = s.ambient();
  CHECK(check_adjunction(s, tri(u, {0}, {}, {}), span_of(v, {s.x(0)})));
  CHECK(check_adjunction(s, tri(u, {0}, {}, {}), span_of(v, {s.y(0)})));
  CHECK(check_gf_closure(s, tri(u, {}, {0}, {0})));
  CHECK(G_map(s, F_map(s, tri(u, {}, {0}, {0}))) == tri(u, {0}, {0}, {0}));

  const BalancedTriple a(tri(u, {0}, {0}, {0}));
  const BalancedTriple b(tri(u, {1}, {1}, {1}));
  CHECK(check_meet_preservation(s, a, a));
  CHECK(check_meet_preservation(s, a, b));
  CHECK(intersect(F_map(s, a.triple()), F_map(s, b.triple())) == Subspace::zero(v));
}

TEST_CASE("exhaustive checks at n = 2") {
  for (Scalar p : {2u, 3u}) {
    const PresentedSpace s(2, PrimeField(p));
    const auto triples = all_triples(s.universe());
    REQUIRE(triples.size() == 64);
    for (const auto& t : triples) REQUIRE(check_gf_closure(s, t));
    const auto bal = all_balanced_triples(s.universe());
    for (const auto& x : bal)
      for (const auto& y : bal) REQUIRE(check_meet_preservation(s, x, y));
  }
  const PresentedSpace s(2, F2);
  const auto subs = all_subspaces(s.ambient());
  CHECK(subs.size() == 67);
  for (const auto& t : all_triples(s.universe()))
    for (const auto& w : subs) REQUIRE(check_adjunction(s, t, w));
}

TEST_CASE("embedding reports") {
  for (Scalar p : {2u, 3u}) {
    const auto r = check_embedding(PresentedSpace(2, PrimeField(p)));
    CHECK(r.pass);
    CHECK(r.mode == CheckMode::Exhaustive);
  }
  const auto r3 = check_embedding(PresentedSpace(3, F2), 10'000, 4);
  CHECK(r3.pass);
  CHECK(r3.mode == CheckMode::Sampled);
  CHECK(r3.checked == 10'000);
}

TEST_CASE("echelon canonicalization") {
  std::mt19937_64 rng(41);
  const PrimeField f5(5);
  const VectorSpace v{f5, 5};
  for (int i = 0; i < 500; ++i) {
    std::vector<Vec> gens(1 + rng() % 4);
    for (auto& g : gens) g = random_vec(rng, f5, v.dim);
    const Subspace w = span(v, gens);
    // Shuffle, scale by nonzero scalars, and add a combination.
    auto alt = gens;
    std::shuffle(alt.begin(), alt.end(), rng);
    for (auto& g : alt) {
      const Scalar c = static_cast<Scalar>(1 + rng() % 4);
      for (auto& x : g) x = f5.mul(x, c);
    }
    Vec extra(v.dim, 0);
    for (const auto& g : gens)
      for (std::size_t k = 0; k < v.dim; ++k) extra[k] = f5.add(extra[k], g[k]);
    alt.push_back(extra);
    REQUIRE(span(v, alt) == w);
    // Rows are in reduced echelon form.
    std::size_t last = 0;
    for (std::size_t r = 0; r < w.dim(); ++r) {
      const auto& row = w.basis()[r];
      const auto pivot = static_cast<std::size_t>(
          std::find_if(row.begin(), row.end(), [](Scalar x) { return x != 0; }) - row.begin());
      REQUIRE(pivot < v.dim);
      REQUIRE(row[pivot] == 1);
      if (r > 0) REQUIRE(pivot > last);
      for (std::size_t o = 0; o < w.dim(); ++o)
        if (o != r) REQUIRE(w.basis()[o][pivot] == 0);
      last = pivot;
    }
  }
}

TEST_CASE("dimension law") {
  std::mt19937_64 rng(42);
  for (Scalar p : {2u, 3u}) {
    const VectorSpace v{PrimeField(p), 6};
    for (int i = 0; i < 5'000; ++i) {
      const Subspace a = random_subspace(rng, v);
      const Subspace b = random_subspace(rng, v);
      const Subspace s = sum(a, b);
      const Subspace m = intersect(a, b);
      REQUIRE(a.dim() + b.dim() == s.dim() + m.dim());
      REQUIRE(is_subspace_of(m, a));
      REQUIRE(is_subspace_of(m, b));
      REQUIRE(is_subspace_of(a, s));
    }
  }
}

TEST_CASE("F joins and G meets") {
  std::mt19937_64 rng(43);
  const PresentedSpace s(3, PrimeField(3));
  const Universe u = s.universe();
  const VectorSpace v = s.ambient();
  CHECK(F_map(s, Triple::top(u)) == Subspace::whole(v));
  CHECK(G_map(s, Subspace::whole(v)) == Triple::top(u));
  for (int i = 0; i < 2'000; ++i) {
    const Triple t1 = random_triple(rng, u);
    const Triple t2 = random_triple(rng, u);
    REQUIRE(F_map(s, componentwise_join(t1, t2)) == sum(F_map(s, t1), F_map(s, t2)));
    REQUIRE(check_gf_closure(s, t1));
    const Subspace w1 = random_subspace(rng, v);
    const Subspace w2 = random_subspace(rng, v);
    REQUIRE(G_map(s, intersect(w1, w2)) == componentwise_meet(G_map(s, w1), G_map(s, w2)));
    REQUIRE(check_adjunction(s, t1, w1));
  }
}

TEST_CASE("Sub(GF(2)^3) is Arguesian") {
  const auto sl = subspace_lattice(VectorSpace{F2, 3});
  CHECK(sl.lattice.size() == 16);
  CHECK(is_modular(sl.lattice));
  const auto r = is_arguesian(sl.lattice, 1'000'000, 1);
  CHECK(r.holds);
  CHECK(r.mode == CheckMode::Sampled);
}

TEST_CASE("M3 of a distributive lattice embeds into a subspace lattice") {
  for (const auto& l : {chain(2), chain(3), boolean_lattice(2), boolean_lattice(3)}) {
    const auto r = check_m3_distributive_embedding(l, F2);
    CHECK(r.pass);
  }
  CHECK_THROWS(check_m3_distributive_embedding(diamond_m3(), F2));
}
