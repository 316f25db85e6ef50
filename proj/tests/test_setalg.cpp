#include <doctest.h>

#include <functional>
#include <random>

#include "m3lat/setalg.hpp"

using namespace m3lat;

namespace {

const Universe W = Universe::omega();

// Supports in tests stay below 16, so membership on [0, 24) decides a set.
constexpr Index kWindow = 24;

bool same_members(const FcSet& x, const std::function<bool(Index)>& oracle) {
  for (Index i = 0; i < kWindow; ++i)
    if (x.contains(i) != oracle(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("union examples") {
  CHECK(set_union(FcSet::fin(W, {0, 1}), FcSet::fin(W, {1, 2})) == FcSet::fin(W, {0, 1, 2}));
  const FcSet x = FcSet::cofin(W, {3, 9});
  CHECK(set_union(FcSet::empty(W), x) == x);
  CHECK(set_union(FcSet::cofin(W, {0}), FcSet::fin(W, {0})) == FcSet::full(W));
}

TEST_CASE("intersection examples") {
  CHECK(intersection(FcSet::cofin(W, {0}), FcSet::fin(W, {0, 2})) == FcSet::fin(W, {2}));
  const FcSet x = FcSet::fin(W, {4, 5});
  CHECK(intersection(x, FcSet::full(W)) == x);
  CHECK(intersection(FcSet::cofin(W, {0}), FcSet::cofin(W, {1})) == FcSet::cofin(W, {0, 1}));
}

TEST_CASE("complement examples") {
  CHECK(complement(FcSet::fin(W, {0, 1})) == FcSet::cofin(W, {0, 1}));
  CHECK(complement(FcSet::full(W)) == FcSet::empty(W));
  const Universe u3 = Universe::finite(3);
  CHECK(complement(FcSet::fin(u3, {0})) == FcSet::fin(u3, {1, 2}));
  CHECK(complement(FcSet::fin(u3, {0})).tag() == Tag::Fin);
}

TEST_CASE("difference and predicates") {
  CHECK(difference(FcSet::full(W), FcSet::fin(W, {0})) == FcSet::cofin(W, {0}));
  CHECK_FALSE(is_finite(FcSet::cofin(W, {5})));
  CHECK(is_cofinite(FcSet::cofin(W, {5})));
  CHECK(is_subset(FcSet::fin(W, {1}), FcSet::cofin(W, {0})));
  CHECK_FALSE(is_subset(FcSet::cofin(W, {0}), FcSet::fin(W, {1})));
  const Universe u2 = Universe::finite(2);
  CHECK(is_finite(FcSet::full(u2)));
  CHECK(is_cofinite(FcSet::empty(u2)));
}

TEST_CASE("sim examples") {
  CHECK(sim(FcSet::fin(W, {0, 1}), FcSet::fin(W, {7})));
  CHECK_FALSE(sim(FcSet::full(W), FcSet::empty(W)));
  CHECK(sim(FcSet::cofin(W, {0}), FcSet::cofin(W, {3, 4})));
  CHECK_FALSE(sim(FcSet::cofin(W, {0}), FcSet::fin(W, {0})));
}

TEST_CASE("canonical form") {
  CHECK(FcSet(W, Tag::Fin, {3, 1, 3, 2}) == FcSet::fin(W, {1, 2, 3}));
  const Universe u4 = Universe::finite(4);
  CHECK(FcSet(u4, Tag::Cofin, {1}) == FcSet::fin(u4, {0, 2, 3}));
  CHECK(FcSet::full(u4).is_full());
  CHECK(FcSet::cofin(W, {0, 1, 3}).min_element() == Index{2});
  CHECK_FALSE(FcSet::empty(W).min_element().has_value());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(set_union(FcSet::empty(W), FcSet::empty(Universe::finite(2))), UniverseMismatch);
  CHECK_THROWS_AS(sim(FcSet::empty(Universe::finite(3)), FcSet::empty(Universe::finite(2))), UniverseMismatch);
  CHECK_THROWS_AS(FcSet::fin(Universe::finite(2), {2}), std::out_of_range);
}

TEST_CASE("Boolean algebra laws on random sets") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10'000; ++i) {
    const FcSet a = random_fcset(rng, W);
    const FcSet b = random_fcset(rng, W);
    const FcSet c = random_fcset(rng, W);
    REQUIRE(same_members(set_union(a, b), [&](Index k) { return a.contains(k) || b.contains(k); }));
    REQUIRE(same_members(intersection(a, b), [&](Index k) { return a.contains(k) && b.contains(k); }));
    REQUIRE(same_members(complement(a), [&](Index k) { return !a.contains(k); }));
    REQUIRE(set_union(set_union(a, b), c) == set_union(a, set_union(b, c)));
    REQUIRE(intersection(intersection(a, b), c) == intersection(a, intersection(b, c)));
    REQUIRE(intersection(a, set_union(b, c)) == set_union(intersection(a, b), intersection(a, c)));
    REQUIRE(set_union(a, intersection(b, c)) == intersection(set_union(a, b), set_union(a, c)));
    REQUIRE(complement(set_union(a, b)) == intersection(complement(a), complement(b)));
    REQUIRE(complement(complement(a)) == a);
    REQUIRE(set_union(a, complement(a)).is_full());
  }
}

TEST_CASE("equal sets built along different paths are identical") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2'000; ++i) {
    const FcSet a = random_fcset(rng, W);
    const FcSet b = random_fcset(rng, W);
    // a = (a∖b) ∪ (a∩b) and a∪b = complement(∁a ∩ ∁b).
    CHECK(set_union(difference(a, b), intersection(a, b)) == a);
    CHECK(complement(intersection(complement(a), complement(b))) == set_union(a, b));
  }
}

TEST_CASE("sim is an equivalence matching the symmetric-difference test") {
  // Exhaustive over Finite(4): everything is finite, so sim is total.
  const auto sets = all_subsets(Universe::finite(4));
  for (const auto& a : sets)
    for (const auto& c : sets) CHECK(sim(a, c) == is_finite(symmetric_difference(a, c)));

  std::mt19937_64 rng(99);
  for (int i = 0; i < 10'000; ++i) {
    const FcSet a = random_fcset(rng, W);
    const FcSet b = random_fcset(rng, W);
    const FcSet c = random_fcset(rng, W);
    REQUIRE(sim(a, c) == is_finite(symmetric_difference(a, c)));
    REQUIRE(sim(a, a));
    REQUIRE(sim(a, c) == sim(c, a));
    if (sim(a, b) && sim(b, c)) REQUIRE(sim(a, c));
  }
}

TEST_CASE("finite universes give the full power set") {
  for (Index n = 0; n <= 4; ++n) {
    const Universe u = Universe::finite(n);
    const auto sets = all_subsets(u);
    CHECK(sets.size() == (std::size_t{1} << n));
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        // Bitmask model: union is OR, intersection is AND.
        CHECK(set_union(sets[i], sets[j]) == sets[i | j]);
        CHECK(intersection(sets[i], sets[j]) == sets[i & j]);
      }
      CHECK(complement(sets[i]) == sets[~i & (sets.size() - 1)]);
    }
  }
}

TEST_CASE("bounded enumeration") {
  CHECK(bounded_fcsets(W, 3).size() == 16);
  CHECK(bounded_fcsets(Universe::finite(2), 3).size() == 4);
}
