#include "m3lat/triples.hpp"

#include <ostream>

namespace m3lat {

namespace {

void require_same_universe(const Triple& s, const Triple& t, const char* op) {
  if (s.universe() != t.universe()) {
    throw UniverseMismatch(std::string(op) + ": universe mismatch");
  }
}

}  // namespace

Triple::Triple(FcSet a_, FcSet b_, FcSet c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a.universe() != b.universe() || a.universe() != c.universe()) {
    throw UniverseMismatch("Triple: components from different universes");
  }
}

Triple Triple::bottom(const Universe& u) {
  return Triple(FcSet::empty(u), FcSet::empty(u), FcSet::empty(u));
}

Triple Triple::top(const Universe& u) {
  return Triple(FcSet::full(u), FcSet::full(u), FcSet::full(u));
}

std::string Triple::to_string() const {
  return "<" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ">";
}

std::ostream& operator<<(std::ostream& os, const Triple& t) { return os << t.to_string(); }

BalancedTriple::BalancedTriple(Triple t) : t_(std::move(t)) {
  if (!is_balanced(t_)) throw NotBalanced("not a balanced triple: " + t_.to_string());
}

FcSet mu(const Triple& t) {
  return set_union(set_union(intersection(t.a, t.b), intersection(t.a, t.c)),
                   intersection(t.b, t.c));
}

BalancedTriple closure(const Triple& t) {
  const FcSet m = mu(t);
  return BalancedTriple(Triple(set_union(t.a, m), set_union(t.b, m), set_union(t.c, m)));
}

bool is_balanced(const Triple& t) {
  const FcSet ab = intersection(t.a, t.b);
  return ab == intersection(t.a, t.c) && ab == intersection(t.b, t.c);
}

bool leq(const Triple& s, const Triple& t) {
  require_same_universe(s, t, "leq");
  return is_subset(s.a, t.a) && is_subset(s.b, t.b) && is_subset(s.c, t.c);
}

Triple componentwise_join(const Triple& s, const Triple& t) {
  return Triple(set_union(s.a, t.a), set_union(s.b, t.b), set_union(s.c, t.c));
}

Triple componentwise_meet(const Triple& s, const Triple& t) {
  return Triple(intersection(s.a, t.a), intersection(s.b, t.b), intersection(s.c, t.c));
}

BalancedTriple m3_meet(const BalancedTriple& s, const BalancedTriple& t) {
  return BalancedTriple(componentwise_meet(s.triple(), t.triple()));
}

BalancedTriple m3_join(const BalancedTriple& s, const BalancedTriple& t) {
  return closure(componentwise_join(s.triple(), t.triple()));
}

bool in_T(const Triple& t) { return is_finite(difference(t.c, mu(t))); }

bool in_S(const Triple& t) { return is_balanced(t) && in_T(t); }

Triple random_triple(std::mt19937_64& rng, const Universe& u, Index index_bound) {
  FcSet a = random_fcset(rng, u, index_bound);
  FcSet b = random_fcset(rng, u, index_bound);
  FcSet c = random_fcset(rng, u, index_bound);
  return Triple(std::move(a), std::move(b), std::move(c));
}

std::vector<Triple> all_triples(const Universe& u) {
  const auto sets = all_subsets(u);
  std::vector<Triple> out;
  out.reserve(sets.size() * sets.size() * sets.size());
  for (const auto& a : sets) {
    for (const auto& b : sets) {
      for (const auto& c : sets) out.emplace_back(a, b, c);
    }
  }
  return out;
}

}  // namespace m3lat
