#pragma once

// The lattice S together with its two Boolean sublattices:
//   E = range of the Banaschewski function banf = {<A, B, A∩B>},
//   B = g(A) where A = {<A, C> : A ~ C} and g<A, C> = <A, A∩C, C>.
// Everything B-related here is a checkable witness for why B is a maximal
// Boolean sublattice that is not a Banaschewski range and is not isomorphic
// to E.

#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "m3lat/triples.hpp"

namespace m3lat {

class PreconditionViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotInS : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An element of S: balanced and in T.
class SElem {
public:
  explicit SElem(BalancedTriple t);
  explicit SElem(Triple t) : SElem(BalancedTriple(std::move(t))) {}

  static SElem bottom(const Universe& u) { return SElem(Triple::bottom(u)); }
  static SElem top(const Universe& u) { return SElem(Triple::top(u)); }

  const BalancedTriple& balanced() const { return t_; }
  const Triple& triple() const { return t_.triple(); }
  const FcSet& a() const { return t_.a(); }
  const FcSet& b() const { return t_.b(); }
  const FcSet& c() const { return t_.c(); }
  const Universe& universe() const { return t_.universe(); }

  bool operator==(const SElem&) const = default;
  std::string to_string() const { return t_.to_string(); }

private:
  BalancedTriple t_;
};

SElem s_meet(const SElem& s, const SElem& t);
SElem s_join(const SElem& s, const SElem& t);

/// An element <A, C> of F(κ) × F(κ).
struct PairAC {
  FcSet a;
  FcSet c;

  PairAC(FcSet a_, FcSet c_);

  const Universe& universe() const { return a.universe(); }
  bool operator==(const PairAC&) const = default;
  std::string to_string() const;
};

/// f<A,B,C> = <κ∖A, κ∖(B∪C), κ∖(A∪B∪C)>.
SElem banf(const SElem& t);

bool in_E(const SElem& t);
/// <A, B, A∩B> ↦ <A, B>. Throws PreconditionViolation outside E.
PairAC e_to_pair(const SElem& t);
SElem e_from_pair(const PairAC& p);

/// g<A, C> = <A, A∩C, C>.
BalancedTriple g_embed(const PairAC& p);

bool in_A(const PairAC& p);
/// Membership in B, decided as "A ~ C and B ⊆ A" and cross-checked against
/// "t = g(p) for some p in A"; throws std::logic_error on disagreement.
bool in_B(const SElem& t);

/// s ∧ t = 0 and s ∨ t = 1 in S.
bool is_complement_pair(const SElem& s, const SElem& t);

/// For t ∉ B with b ⊆ a and a complement t' of t, returns whether b' ⊆ a'.
/// The expected answer is always false.
bool complement_obstruction(const SElem& t, const SElem& t_prime);

/// Searches g-images of pairs of bounded FcSets (support ⊆ [0, bound), both
/// tags) in the order of `bounded_fcsets` for A then C, and returns the first
/// complement of t lying in B.
std::optional<SElem> find_complement_in_B(const SElem& t, Index support_bound);

struct NondistribWitness {
  FcSet f;
  BalancedTriple lhs;  // t ∧ (g<F,∅> ∨ g<∅,F>)
  BalancedTriple rhs;  // (t ∧ g<F,∅>) ∨ (t ∧ g<∅,F>)
};

/// For t with b ⊄ a, F = {least element of b∖a}. lhs ≠ rhs shows that no
/// sublattice containing t and B is distributive.
NondistribWitness nondistrib_witness(const SElem& t);

bool is_finite_join_of_atoms(const PairAC& p);
bool is_finite_meet_of_coatoms(const PairAC& p);

/// Join over α∈A of g<{α},∅> and over γ∈C of g<∅,{γ}>. Requires a finite pair.
BalancedTriple join_of_atoms(const PairAC& p);
/// Meet over α∉A of g<κ∖{α},κ> and over γ∉C of g<κ,κ∖{γ}>. Requires a cofinite pair.
BalancedTriple meet_of_coatoms(const PairAC& p);

/// Random element of S: closure of a random triple, redrawn until it lies in T.
SElem random_s_element(std::mt19937_64& rng, const Universe& u, Index index_bound = 16);

/// Random pair in A: a finite or cofinite pair with equal probability.
PairAC random_a_pair(std::mt19937_64& rng, const Universe& u, Index index_bound = 16);

}  // namespace m3lat
