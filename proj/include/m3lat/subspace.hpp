#pragma once

// Subspace lattices over prime fields and the representation of balanced
// triples by subspaces of the space presented by generators x_α, y_α, z_α
// with relations x_α + y_α + z_α = 0.
//
// Coordinates: x_α is the unit vector 2α, y_α the unit vector 2α+1, and
// z_α = -x_α - y_α, so {x_α, y_α} is a basis of the 2n-dimensional space.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "m3lat/finlat.hpp"
#include "m3lat/triples.hpp"

namespace m3lat {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

class SpaceMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class PrimeField {
public:
  /// Throws std::invalid_argument unless p is a prime below 2^16.
  explicit PrimeField(Scalar p);

  Scalar modulus() const { return p_; }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
  Scalar mul(Scalar a, Scalar b) const { return a * b % p_; }
  Scalar neg(Scalar a) const { return (p_ - a) % p_; }
  Scalar inv(Scalar a) const;
  /// Reduces an arbitrary integer into [0, p).
  Scalar reduce(std::int64_t v) const;

  bool operator==(const PrimeField&) const = default;

private:
  Scalar p_;
};

struct VectorSpace {
  PrimeField field;
  std::size_t dim;

  bool operator==(const VectorSpace&) const = default;
};

/// A subspace in canonical reduced row echelon form: equal subspaces have
/// identical bases.
class Subspace {
public:
  static Subspace zero(const VectorSpace& v) { return Subspace(v, {}); }
  static Subspace whole(const VectorSpace& v);

  const VectorSpace& space() const { return space_; }
  const std::vector<Vec>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  bool operator==(const Subspace&) const = default;
  std::string to_string() const;

private:
  Subspace(VectorSpace v, std::vector<Vec> rref) : space_(v), basis_(std::move(rref)) {}
  friend Subspace span(const VectorSpace& v, std::span<const Vec> vectors);

  VectorSpace space_;
  std::vector<Vec> basis_;
};

/// Reduced row echelon form; zero rows dropped.
std::vector<Vec> rref(const PrimeField& f, std::vector<Vec> rows);

/// Throws SpaceMismatch if a vector has the wrong length.
Subspace span(const VectorSpace& v, std::span<const Vec> vectors);
Subspace sum(const Subspace& u, const Subspace& w);
/// Zassenhaus: eliminate the rows [u | u] and [w | 0]; the rows with zero
/// left half span U ∩ W in their right half.
Subspace intersect(const Subspace& u, const Subspace& w);
bool contains(const Subspace& w, const Vec& v);
bool is_subspace_of(const Subspace& u, const Subspace& w);

/// Every subspace of a small space, sorted by (dim, basis). Requires p^dim ≤ 4096.
std::vector<Subspace> all_subspaces(const VectorSpace& v);

struct SubspaceLattice {
  FiniteLattice lattice;
  std::vector<Subspace> elements;
};

/// Sub(V) as an explicit finite lattice ordered by inclusion.
SubspaceLattice subspace_lattice(const VectorSpace& v);

/// The space with generators x_α, y_α, z_α (α < n) and relations
/// x_α + y_α + z_α = 0.
class PresentedSpace {
public:
  PresentedSpace(Index n, PrimeField field) : n_(n), field_(field) {}

  Index n() const { return n_; }
  const PrimeField& field() const { return field_; }
  VectorSpace ambient() const { return VectorSpace{field_, static_cast<std::size_t>(2 * n_)}; }
  Universe universe() const { return Universe::finite(n_); }

  Vec x(Index alpha) const;
  Vec y(Index alpha) const;
  Vec z(Index alpha) const;

  bool operator==(const PresentedSpace&) const = default;

private:
  Index n_;
  PrimeField field_;
};

/// <A, B, C> ↦ X_A + Y_B + Z_C.
Subspace F_map(const PresentedSpace& s, const Triple& t);
/// W ↦ <{α : x_α ∈ W}, {β : y_β ∈ W}, {γ : z_γ ∈ W}>.
Triple G_map(const PresentedSpace& s, const Subspace& w);

/// F(t) ⊆ W iff t ≤ G(W).
bool check_adjunction(const PresentedSpace& s, const Triple& t, const Subspace& w);
/// G(F(t)) equals the balancing closure of t.
bool check_gf_closure(const PresentedSpace& s, const Triple& t);
/// F(s) ∩ F(t) = F(s ∧ t) for balanced s, t.
bool check_meet_preservation(const PresentedSpace& s, const BalancedTriple& u, const BalancedTriple& v);

struct EmbeddingReport {
  bool pass = true;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t checked = 0;
  std::optional<std::string> counterexample;
};

/// Checks that F restricted to balanced triples preserves meets and joins,
/// is injective and maps bounds to bounds. n ≤ 2: all pairs of balanced
/// triples. Larger n: `samples` random pairs drawn with `seed`.
EmbeddingReport check_embedding(const PresentedSpace& s, std::uint64_t samples = 10'000,
                                std::uint64_t seed = 0);

/// For finite distributive L: embeds M3[L] into Sub(V) by composing the
/// join-irreducible representation of L with F, and verifies the composite
/// is a bounded lattice embedding.
EmbeddingReport check_m3_distributive_embedding(const FiniteLattice& l, const PrimeField& field);

/// All balanced triples over Finite(n), in all_triples order.
std::vector<BalancedTriple> all_balanced_triples(const Universe& u);

}  // namespace m3lat
