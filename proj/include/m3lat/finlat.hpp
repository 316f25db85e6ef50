#pragma once

// Explicit finite bounded lattices: construction from an order relation,
// identity checks, the generic M3[L] construction, sublattices, isomorphism,
// and Hasse-diagram export.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace m3lat {

using Elem = std::size_t;

class LatticeError : public std::runtime_error {
public:
  enum class Kind { NotPoset, NotLattice };

  LatticeError(Kind kind, Elem x, Elem y, const std::string& what)
      : std::runtime_error(what), kind_(kind), pair_(x, y) {}

  Kind kind() const { return kind_; }
  /// The pair of elements that broke the check.
  std::pair<Elem, Elem> offending_pair() const { return pair_; }

private:
  Kind kind_;
  std::pair<Elem, Elem> pair_;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class FiniteLattice {
public:
  /// Builds meet/join tables from a partial order given as an n×n matrix.
  /// Throws LatticeError if leq is not a partial order or some pair lacks a
  /// meet or join. An empty carrier is rejected as having no bounds.
  static FiniteLattice from_order(std::vector<std::vector<bool>> leq);

  std::size_t size() const { return n_; }
  bool leq(Elem x, Elem y) const { return leq_[x * n_ + y] != 0; }
  Elem meet(Elem x, Elem y) const { return meet_[x * n_ + y]; }
  Elem join(Elem x, Elem y) const { return join_[x * n_ + y]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  std::vector<std::vector<bool>> order_matrix() const;

  bool operator==(const FiniteLattice&) const = default;

private:
  FiniteLattice() = default;

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

// Common lattices.
FiniteLattice chain(std::size_t k);
/// The Boolean lattice 2^k; element i is the subset with bitmask i.
FiniteLattice boolean_lattice(std::size_t k);
/// Bottom 0, atoms 1..3, top 4.
FiniteLattice diamond_m3();
/// 0 < 1 < 2 < 4 and 0 < 3 < 4.
FiniteLattice pentagon_n5();
/// Elements (i, j) indexed i * |R| + j, ordered componentwise.
FiniteLattice product(const FiniteLattice& l, const FiniteLattice& r);
/// Adjoins a new top above the old one; the new top gets index n.
FiniteLattice with_new_top(const FiniteLattice& l);
/// Replaces x by a two-element chain x < x'; x' gets index n.
FiniteLattice double_element(const FiniteLattice& l, Elem x);
/// Relabels: element i of the input becomes element perm[i].
FiniteLattice relabeled(const FiniteLattice& l, const std::vector<Elem>& perm);

struct NamedLattice {
  std::string name;
  FiniteLattice lattice;
};

/// Chains of 1..4 elements, 2^2, 2^3, M3, N5, M3 with a new top, and N5 with
/// its short side doubled.
std::vector<NamedLattice> curated_family();

bool is_distributive(const FiniteLattice& l);
bool is_modular(const FiniteLattice& l);
std::vector<Elem> complements(const FiniteLattice& l, Elem x);
bool is_complemented(const FiniteLattice& l);
bool is_uniquely_complemented(const FiniteLattice& l);
/// Distributive and uniquely complemented.
bool is_boolean(const FiniteLattice& l);

enum class CheckMode { Exhaustive, Sampled };

struct ArguesianResult {
  bool holds = true;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t checked = 0;
  /// (a0, a1, a2, b0, b1, b2) violating the inequality.
  std::optional<std::array<Elem, 6>> counterexample;
};

/// Checks (a0∨b0)∧(a1∨b1)∧(a2∨b2) ≤ ((c∨a1)∧a0) ∨ ((c∨b1)∧b0) with
/// ci = (aj∨ak)∧(bj∨bk) and c = c2∧(c0∨c1). Exhaustive over all 6-tuples when
/// n^6 ≤ sample_budget, otherwise sample_budget uniform tuples drawn with seed.
ArguesianResult is_arguesian(const FiniteLattice& l, std::uint64_t sample_budget,
                             std::uint64_t seed = 0);
bool arguesian_holds_at(const FiniteLattice& l, const std::array<Elem, 6>& t);

struct M3Lattice {
  FiniteLattice lattice;
  /// Element i of lattice is the balanced triple triples[i] of the base.
  std::vector<std::array<Elem, 3>> triples;
};

/// Balanced triples of L under the componentwise order. Joins are computed as
/// the meet of all balanced triples above the componentwise join and compared
/// with the order-derived join; for distributive L they are also compared
/// with the closure formula. Disagreement throws std::logic_error.
M3Lattice m3_of(const FiniteLattice& l);

/// Sorted, duplicate-free set of element indices of a parent lattice.
using Mask = std::vector<Elem>;

/// Closed under meet and join and contains both bounds.
bool is_sublattice(const FiniteLattice& l, const Mask& mask);
/// The sublattice on mask, elements renumbered in mask order.
FiniteLattice induced(const FiniteLattice& l, const Mask& mask);
/// Boolean bounded sublattices strictly containing mask. n ≤ 16.
std::vector<Mask> maximal_boolean_extensions(const FiniteLattice& l, const Mask& mask);

/// Backtracking over order-compatible bijections. Throws BudgetExceeded after
/// node_budget search nodes.
bool is_isomorphic(const FiniteLattice& l1, const FiniteLattice& l2,
                   std::uint64_t node_budget = 10'000'000);

/// Cover pairs (x, y), x ⋖ y, sorted.
std::vector<std::pair<Elem, Elem>> hasse_covers(const FiniteLattice& l);
std::string to_dot(const FiniteLattice& l);

/// For distributive L: element x ↦ sorted indices of the join-irreducibles
/// below x. This is a bounded lattice embedding into P(J(L)).
std::vector<std::vector<Elem>> birkhoff_representation(const FiniteLattice& l);
std::vector<Elem> join_irreducibles(const FiniteLattice& l);

}  // namespace m3lat
