#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "m3lat/finlat.hpp"

using namespace m3lat;

namespace {

std::vector<std::vector<bool>> order_from_covers(std::size_t n, std::vector<std::pair<Elem, Elem>> covers) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [x, y] : covers) leq[x][y] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  return leq;
}

}  // namespace

TEST_CASE("from_order examples") {
  const auto c2 = FiniteLattice::from_order({{true, true}, {false, true}});
  CHECK(c2.meet(0, 1) == 0);
  CHECK(c2.join(0, 1) == 1);
  CHECK(c2.bottom() == 0);
  CHECK(c2.top() == 1);

  const auto n5 = FiniteLattice::from_order(order_from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}));
  CHECK(n5 == pentagon_n5());
  CHECK(n5.join(1, 3) == 4);
  CHECK(n5.meet(2, 3) == 0);

  // Bowtie: 0, 1 both below 2 and 3.
  try {
    (void)FiniteLattice::from_order(order_from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    FAIL("bowtie accepted");
  } catch (const LatticeError& e) {
    CHECK(e.kind() == LatticeError::Kind::NotLattice);
  }

  // Not antisymmetric.
  CHECK_THROWS_AS(FiniteLattice::from_order({{true, true}, {true, true}}), LatticeError);
  // Not reflexive.
  CHECK_THROWS_AS(FiniteLattice::from_order({{false}}), LatticeError);
  CHECK_THROWS_AS(FiniteLattice::from_order({}), LatticeError);
}

TEST_CASE("property checks on standard lattices") {
  const auto m3 = diamond_m3();
  CHECK(is_modular(m3));
  CHECK_FALSE(is_distributive(m3));
  CHECK(is_complemented(m3));
  CHECK_FALSE(is_boolean(m3));

  CHECK_FALSE(is_modular(pentagon_n5()));
  CHECK(is_complemented(pentagon_n5()));

  const auto b3 = boolean_lattice(3);
  CHECK(is_boolean(b3));
  CHECK(is_uniquely_complemented(b3));
  CHECK(is_distributive(chain(4)));
  CHECK_FALSE(is_complemented(chain(3)));
}

TEST_CASE("Boolean lattices have unique complements") {
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto b = boolean_lattice(k);
    REQUIRE(is_boolean(b));
    for (Elem x = 0; x < b.size(); ++x) {
      const auto cs = complements(b, x);
      REQUIRE(cs.size() == 1);
      CHECK(cs[0] == ((b.size() - 1) ^ x));
    }
  }
}

TEST_CASE("Arguesian examples") {
  const auto n5 = is_arguesian(pentagon_n5(), 1'000'000);
  CHECK_FALSE(n5.holds);
  CHECK(n5.mode == CheckMode::Exhaustive);
  REQUIRE(n5.counterexample.has_value());
  CHECK_FALSE(arguesian_holds_at(pentagon_n5(), *n5.counterexample));
  // Lexicographically first violation, found by an independent search.
  CHECK(*n5.counterexample == std::array<Elem, 6>{0, 2, 1, 2, 0, 3});

  const auto m3 = is_arguesian(diamond_m3(), 1'000'000);
  CHECK(m3.holds);
  CHECK(m3.mode == CheckMode::Exhaustive);
  CHECK(m3.checked == 15'625);

  CHECK(is_arguesian(boolean_lattice(2), 1'000'000).holds);

  const auto sampled = is_arguesian(boolean_lattice(3), 1'000, 5);
  CHECK(sampled.mode == CheckMode::Sampled);
  CHECK(sampled.checked == 1'000);
  CHECK(sampled.holds);
}

TEST_CASE("m3_of on small lattices") {
  const auto one = m3_of(chain(1));
  CHECK(one.lattice.size() == 1);

  const auto d = m3_of(chain(2));
  REQUIRE(d.lattice.size() == 5);
  std::vector<std::array<Elem, 3>> expected{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};
  auto got = d.triples;
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
  CHECK(is_isomorphic(d.lattice, diamond_m3()));
}

TEST_CASE("m3_of sizes and the distributive/modular/Arguesian equivalence") {
  // Sizes come from an independent enumeration of balanced triples.
  const std::map<std::string, std::size_t> sizes{
      {"chain1", 1}, {"chain2", 5},  {"chain3", 12}, {"chain4", 22},  {"2^2", 25},
      {"2^3", 125},  {"M3", 50},     {"N5", 41},     {"M3+top", 66},  {"N5-doubled", 63}};
  const auto family = curated_family();
  REQUIRE(family.size() == sizes.size());
  for (const auto& [name, l] : family) {
    CAPTURE(name);
    const auto m = m3_of(l);
    CHECK(m.lattice.size() == sizes.at(name));
    const bool dist = is_distributive(l);
    CHECK(is_modular(m.lattice) == dist);
    const auto arg = is_arguesian(m.lattice, 200'000, 3);
    if (dist) {
      CHECK(arg.holds);
    } else {
      CHECK_FALSE(arg.holds);
    }
  }
}

TEST_CASE("sublattices") {
  const auto b2 = boolean_lattice(2);
  CHECK(is_sublattice(b2, {0, 3}));
  CHECK_FALSE(is_sublattice(b2, {0, 1, 2}));

  const auto m3 = diamond_m3();
  const Mask pq{0, 1, 2, 4};
  CHECK(is_sublattice(m3, pq));
  CHECK(is_boolean(induced(m3, pq)));
  CHECK(maximal_boolean_extensions(m3, pq).empty());
  // {0,4} extends to the three four-element Boolean sublattices.
  CHECK(maximal_boolean_extensions(m3, {0, 4}).size() == 3);
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(boolean_lattice(2), product(chain(2), chain(2))));
  CHECK_FALSE(is_isomorphic(diamond_m3(), pentagon_n5()));
  CHECK_FALSE(is_isomorphic(chain(4), boolean_lattice(2)));

  const auto family = curated_family();
  for (const auto& [name, l] : family) {
    CAPTURE(name);
    CHECK(is_isomorphic(l, l));
  }
  for (const auto& [n1, l1] : family)
    for (const auto& [n2, l2] : family) CHECK(is_isomorphic(l1, l2) == is_isomorphic(l2, l1));

  std::mt19937_64 rng(31);
  for (const auto& [name, l] : family) {
    CAPTURE(name);
    std::vector<Elem> perm(l.size());
    std::iota(perm.begin(), perm.end(), Elem{0});
    for (int rep = 0; rep < 5; ++rep) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto r = relabeled(l, perm);
      CHECK(is_isomorphic(l, r));
      CHECK(is_distributive(r) == is_distributive(l));
    }
  }
}

TEST_CASE("Hasse diagram and DOT") {
  const auto covers = hasse_covers(boolean_lattice(2));
  CHECK(covers == std::vector<std::pair<Elem, Elem>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const std::string dot = to_dot(chain(2));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("0 -> 1") != std::string::npos);
}

TEST_CASE("join-irreducible representation") {
  const auto b2 = boolean_lattice(2);
  CHECK(join_irreducibles(b2) == std::vector<Elem>{1, 2});
  const auto rep = birkhoff_representation(chain(3));
  CHECK(rep.size() == 3);
  CHECK(rep[0].empty());
  CHECK(rep[2].size() == 2);
}

TEST_CASE("constructors") {
  CHECK(product(chain(2), chain(3)).size() == 6);
  const auto t = with_new_top(diamond_m3());
  CHECK(t.size() == 6);
  CHECK(t.top() == 5);
  const auto d = double_element(pentagon_n5(), 3);
  CHECK(d.size() == 6);
  CHECK(d.leq(3, 5));
  CHECK(is_isomorphic(double_element(chain(2), 0), chain(3)));
}
