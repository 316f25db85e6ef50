#pragma once

// Triples over the finite-cofinite algebra, the majority polynomial mu, the
// balancing closure, and the lattices T and S (balanced members of T).

#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "m3lat/setalg.hpp"

namespace m3lat {

struct Triple {
  FcSet a;
  FcSet b;
  FcSet c;

  /// Throws UniverseMismatch unless all components share one universe.
  Triple(FcSet a_, FcSet b_, FcSet c_);

  const Universe& universe() const { return a.universe(); }

  static Triple bottom(const Universe& u);
  static Triple top(const Universe& u);
  static Triple diagonal(const FcSet& x) { return Triple(x, x, x); }

  bool operator==(const Triple&) const = default;
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

class NotBalanced : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A triple with a∧b = a∧c = b∧c, checked on construction.
class BalancedTriple {
public:
  explicit BalancedTriple(Triple t);

  const Triple& triple() const { return t_; }
  const FcSet& a() const { return t_.a; }
  const FcSet& b() const { return t_.b; }
  const FcSet& c() const { return t_.c; }
  const Universe& universe() const { return t_.universe(); }

  static BalancedTriple bottom(const Universe& u) { return BalancedTriple(Triple::bottom(u)); }
  static BalancedTriple top(const Universe& u) { return BalancedTriple(Triple::top(u)); }

  bool operator==(const BalancedTriple&) const = default;
  std::string to_string() const { return t_.to_string(); }

private:
  Triple t_;
};

/// (a∧b) ∨ (a∧c) ∨ (b∧c).
FcSet mu(const Triple& t);

/// ⟨a∨μ, b∨μ, c∨μ⟩, the least balanced triple above t.
BalancedTriple closure(const Triple& t);

bool is_balanced(const Triple& t);

/// Componentwise order on triples.
bool leq(const Triple& s, const Triple& t);

Triple componentwise_join(const Triple& s, const Triple& t);
Triple componentwise_meet(const Triple& s, const Triple& t);

BalancedTriple m3_meet(const BalancedTriple& s, const BalancedTriple& t);
BalancedTriple m3_join(const BalancedTriple& s, const BalancedTriple& t);

/// c ∖ μ(t) is finite.
bool in_T(const Triple& t);
bool in_S(const Triple& t);

Triple random_triple(std::mt19937_64& rng, const Universe& u, Index index_bound = 16);

/// All |P(n)|^3 triples of a finite universe, in lexicographic bitmask order.
std::vector<Triple> all_triples(const Universe& u);

}  // namespace m3lat
