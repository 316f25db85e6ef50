#include <doctest.h>

#include <random>

#include "m3lat/slat.hpp"

using namespace m3lat;

namespace {

const Universe W = Universe::omega();
const FcSet K = FcSet::full(W);
const FcSet E0 = FcSet::empty(W);

SElem S3(FcSet a, FcSet b, FcSet c) { return SElem(Triple(std::move(a), std::move(b), std::move(c))); }

bool s_leq(const SElem& s, const SElem& t) { return leq(s.triple(), t.triple()); }

}  // namespace

TEST_CASE("SElem validation") {
  CHECK_THROWS_AS(S3(K, E0, K), NotBalanced);
  // Balanced, but c∖mu = c is infinite.
  CHECK_THROWS_AS(S3(E0, E0, K), NotInS);
}

TEST_CASE("banf examples") {
  CHECK(banf(SElem::top(W)) == SElem::bottom(W));
  CHECK(banf(S3(K, E0, E0)) == S3(E0, K, E0));
  const FcSet f0 = FcSet::fin(W, {0});
  const FcSet c0 = FcSet::cofin(W, {0});
  CHECK(banf(S3(f0, f0, f0)) == S3(c0, c0, c0));
}

TEST_CASE("E examples") {
  CHECK(in_E(S3(FcSet::fin(W, {0, 1}), FcSet::cofin(W, {0}), FcSet::fin(W, {1}))));
  CHECK(in_E(S3(K, E0, E0)));
  CHECK(in_E(SElem::top(W)));
  CHECK_FALSE(in_E(S3(E0, E0, FcSet::fin(W, {2}))));
  CHECK_THROWS_AS(e_to_pair(S3(E0, E0, FcSet::fin(W, {2}))), PreconditionViolation);

  std::mt19937_64 rng(21);
  for (int i = 0; i < 1'000; ++i) {
    const PairAC p(random_fcset(rng, W), random_fcset(rng, W));
    const SElem e = e_from_pair(p);
    REQUIRE(in_E(e));
    REQUIRE(e_to_pair(e) == p);
    REQUIRE(banf(banf(e)) == e);
  }
}

TEST_CASE("E is isomorphic to the product algebra") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 2'000; ++i) {
    const PairAC p(random_fcset(rng, W), random_fcset(rng, W));
    const PairAC q(random_fcset(rng, W), random_fcset(rng, W));
    const SElem ep = e_from_pair(p);
    const SElem eq = e_from_pair(q);
    REQUIRE(e_to_pair(s_meet(ep, eq)) == PairAC(intersection(p.a, q.a), intersection(p.c, q.c)));
    REQUIRE(e_to_pair(s_join(ep, eq)) == PairAC(set_union(p.a, q.a), set_union(p.c, q.c)));
  }
}

TEST_CASE("banf is a Banaschewski function on sampled S") {
  std::mt19937_64 rng(23);
  int comparable = 0;
  for (int i = 0; i < 10'000; ++i) {
    const SElem s = random_s_element(rng, W);
    const SElem t = s_join(s, random_s_element(rng, W));
    REQUIRE(s_leq(s, t));
    ++comparable;
    REQUIRE(s_leq(banf(t), banf(s)));
    REQUIRE(is_complement_pair(s, banf(s)));
    REQUIRE(in_E(banf(s)));
  }
  CHECK(comparable == 10'000);
}

TEST_CASE("g examples") {
  CHECK(g_embed(PairAC(K, K)).triple() == Triple::top(W));
  CHECK(g_embed(PairAC(FcSet::fin(W, {0}), FcSet::fin(W, {1}))).triple() ==
        Triple(FcSet::fin(W, {0}), E0, FcSet::fin(W, {1})));
  CHECK(g_embed(PairAC(E0, E0)).triple() == Triple::bottom(W));
}

TEST_CASE("A and B membership examples") {
  CHECK(in_B(SElem(g_embed(PairAC(FcSet::fin(W, {0}), FcSet::fin(W, {0, 1}))))));
  CHECK_FALSE(in_B(S3(K, E0, E0)));
  CHECK_FALSE(in_A(PairAC(FcSet::cofin(W, {0}), FcSet::fin(W, {0}))));
  CHECK_THROWS_AS(PairAC(E0, FcSet::empty(Universe::finite(1))), UniverseMismatch);
}

TEST_CASE("g is a bounded lattice embedding on A") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 5'000; ++i) {
    const PairAC p = random_a_pair(rng, W);
    const PairAC q = random_a_pair(rng, W);
    const SElem gp(g_embed(p));
    const SElem gq(g_embed(q));
    REQUIRE(in_B(gp));
    REQUIRE(s_meet(gp, gq).triple() == g_embed(PairAC(intersection(p.a, q.a), intersection(p.c, q.c))).triple());
    REQUIRE(s_join(gp, gq).triple() == g_embed(PairAC(set_union(p.a, q.a), set_union(p.c, q.c))).triple());
    REQUIRE((gp == gq) == (p == q));
    // The complement in B is the image of the componentwise complement.
    REQUIRE(is_complement_pair(gp, SElem(g_embed(PairAC(complement(p.a), complement(p.c))))));
  }
}

TEST_CASE("complements inside B are unique") {
  // Over Finite(3) every pair is in A, so B is all 64 images.
  const Universe u = Universe::finite(3);
  const auto subsets = all_subsets(u);
  std::vector<std::pair<PairAC, SElem>> b_elems;
  for (const auto& a : subsets)
    for (const auto& c : subsets) b_elems.emplace_back(PairAC(a, c), SElem(g_embed(PairAC(a, c))));
  for (const auto& [p, gp] : b_elems) {
    int found = 0;
    for (const auto& [q, gq] : b_elems)
      if (is_complement_pair(gp, gq)) {
        ++found;
        CHECK(q == PairAC(complement(p.a), complement(p.c)));
      }
    CHECK(found == 1);
  }
}

TEST_CASE("complement pairs") {
  CHECK(is_complement_pair(SElem::top(W), SElem::bottom(W)));
  const SElem t = S3(K, E0, E0);
  CHECK_FALSE(is_complement_pair(t, t));
  std::mt19937_64 rng(25);
  for (int i = 0; i < 1'000; ++i) {
    const SElem s = random_s_element(rng, W);
    REQUIRE(is_complement_pair(s, banf(s)));
    if (!(s == SElem::top(W)) && !(s == SElem::bottom(W))) REQUIRE_FALSE(is_complement_pair(s, s));
  }
}

TEST_CASE("complement obstruction") {
  // <∅,κ,κ> is not balanced, so the complement used here is banf<κ,∅,∅>.
  CHECK_FALSE(complement_obstruction(S3(K, E0, E0), S3(E0, K, E0)));
  // t in B violates the precondition.
  CHECK_THROWS_AS(complement_obstruction(SElem::top(W), SElem::bottom(W)), PreconditionViolation);
  // Not a complement.
  CHECK_THROWS_AS(complement_obstruction(S3(K, E0, E0), SElem::bottom(W)), PreconditionViolation);
  // b ⊄ a.
  CHECK_THROWS_AS(complement_obstruction(S3(E0, K, E0), S3(K, E0, E0)), PreconditionViolation);
}

TEST_CASE("find_complement_in_B examples") {
  CHECK_FALSE(find_complement_in_B(S3(K, E0, E0), 8).has_value());
  const auto top = find_complement_in_B(SElem::bottom(W), 0);
  REQUIRE(top.has_value());
  CHECK(*top == SElem(g_embed(PairAC(K, K))));
  const FcSet f0 = FcSet::fin(W, {0});
  const auto c = find_complement_in_B(SElem(g_embed(PairAC(f0, f0))), 1);
  REQUIRE(c.has_value());
  CHECK(*c == SElem(g_embed(PairAC(FcSet::cofin(W, {0}), FcSet::cofin(W, {0})))));
}

TEST_CASE("nondistributivity witness") {
  const FcSet f3 = FcSet::fin(W, {3});
  const auto w = nondistrib_witness(S3(E0, f3, E0));
  CHECK(w.f == f3);
  CHECK(w.lhs.triple() == Triple(E0, f3, E0));
  CHECK(w.rhs.triple() == Triple::bottom(W));
  CHECK_THROWS_AS(nondistrib_witness(S3(K, E0, E0)), PreconditionViolation);

  std::mt19937_64 rng(26);
  int tested = 0;
  while (tested < 1'000) {
    const SElem t = random_s_element(rng, W);
    if (is_subset(t.b(), t.a())) continue;
    ++tested;
    const auto r = nondistrib_witness(t);
    REQUIRE(is_finite(r.f));
    REQUIRE(r.f.support().size() == 1);
    REQUIRE(is_subset(r.f, difference(t.b(), t.a())));
    REQUIRE(r.lhs.triple() == Triple(E0, r.f, E0));
    REQUIRE(r.rhs.triple() == Triple::bottom(W));
  }
}

TEST_CASE("atom and coatom decompositions") {
  const PairAC p1(FcSet::fin(W, {0, 1}), E0);
  CHECK(is_finite_join_of_atoms(p1));
  CHECK_FALSE(is_finite_meet_of_coatoms(p1));
  const PairAC p2(K, E0);
  CHECK_FALSE(is_finite_join_of_atoms(p2));
  CHECK_FALSE(is_finite_meet_of_coatoms(p2));
  const PairAC p3(FcSet::cofin(W, {0}), K);
  CHECK_FALSE(is_finite_join_of_atoms(p3));
  CHECK(is_finite_meet_of_coatoms(p3));

  CHECK_THROWS_AS(join_of_atoms(p2), PreconditionViolation);
  CHECK_THROWS_AS(meet_of_coatoms(p1), PreconditionViolation);

  // Every element of A is one or the other, and the decomposition reproduces it.
  std::mt19937_64 rng(27);
  for (int i = 0; i < 2'000; ++i) {
    const PairAC p = random_a_pair(rng, W);
    const bool fj = is_finite_join_of_atoms(p);
    const bool fm = is_finite_meet_of_coatoms(p);
    REQUIRE((fj || fm));
    if (fj) REQUIRE(join_of_atoms(p) == g_embed(p));
    if (fm) REQUIRE(meet_of_coatoms(p) == g_embed(p));
  }
}
