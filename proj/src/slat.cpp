#include "m3lat/slat.hpp"

namespace m3lat {

SElem::SElem(BalancedTriple t) : t_(std::move(t)) {
  if (!in_T(t_.triple())) throw NotInS("not in T: " + t_.to_string());
}

SElem s_meet(const SElem& s, const SElem& t) { return SElem(m3_meet(s.balanced(), t.balanced())); }

SElem s_join(const SElem& s, const SElem& t) { return SElem(m3_join(s.balanced(), t.balanced())); }

PairAC::PairAC(FcSet a_, FcSet c_) : a(std::move(a_)), c(std::move(c_)) {
  if (a.universe() != c.universe()) throw UniverseMismatch("PairAC: universe mismatch");
}

std::string PairAC::to_string() const { return "<" + a.to_string() + ", " + c.to_string() + ">"; }

SElem banf(const SElem& t) {
  const FcSet bc = set_union(t.b(), t.c());
  return SElem(Triple(complement(t.a()), complement(bc), complement(set_union(t.a(), bc))));
}

bool in_E(const SElem& t) { return t.c() == intersection(t.a(), t.b()); }

PairAC e_to_pair(const SElem& t) {
  if (!in_E(t)) throw PreconditionViolation("e_to_pair: not in E: " + t.to_string());
  return PairAC(t.a(), t.b());
}

SElem e_from_pair(const PairAC& p) { return SElem(Triple(p.a, p.c, intersection(p.a, p.c))); }

BalancedTriple g_embed(const PairAC& p) {
  return BalancedTriple(Triple(p.a, intersection(p.a, p.c), p.c));
}

bool in_A(const PairAC& p) { return sim(p.a, p.c); }

bool in_B(const SElem& t) {
  const bool described = sim(t.a(), t.c()) && is_subset(t.b(), t.a());
  // g is injective and determined by the outer components, so the only
  // candidate preimage is <a, c>.
  const PairAC candidate(t.a(), t.c());
  const bool as_image = in_A(candidate) && g_embed(candidate) == t.balanced();
  if (described != as_image) {
    throw std::logic_error("in_B: description and g-image disagree on " + t.to_string());
  }
  return described;
}

bool is_complement_pair(const SElem& s, const SElem& t) {
  if (s.universe() != t.universe()) throw UniverseMismatch("is_complement_pair");
  const auto& u = s.universe();
  return s_meet(s, t) == SElem::bottom(u) && s_join(s, t) == SElem::top(u);
}

bool complement_obstruction(const SElem& t, const SElem& t_prime) {
  if (in_B(t)) throw PreconditionViolation("complement_obstruction: t lies in B");
  if (!is_subset(t.b(), t.a())) throw PreconditionViolation("complement_obstruction: b ⊄ a");
  if (!is_complement_pair(t, t_prime)) {
    throw PreconditionViolation("complement_obstruction: t' is not a complement of t");
  }
  return is_subset(t_prime.b(), t_prime.a());
}

std::optional<SElem> find_complement_in_B(const SElem& t, Index support_bound) {
  const auto sets = bounded_fcsets(t.universe(), support_bound);
  for (const auto& a : sets) {
    for (const auto& c : sets) {
      const PairAC p(a, c);
      if (!in_A(p)) continue;
      SElem candidate(g_embed(p));
      if (is_complement_pair(t, candidate)) return candidate;
    }
  }
  return std::nullopt;
}

NondistribWitness nondistrib_witness(const SElem& t) {
  const FcSet b_minus_a = difference(t.b(), t.a());
  const auto least = b_minus_a.min_element();
  if (!least) throw PreconditionViolation("nondistrib_witness: b ⊆ a for " + t.to_string());
  const auto& u = t.universe();
  const FcSet f(u, Tag::Fin, {*least});
  const FcSet none = FcSet::empty(u);
  const BalancedTriple gf0 = g_embed(PairAC(f, none));
  const BalancedTriple g0f = g_embed(PairAC(none, f));
  const BalancedTriple& x = t.balanced();
  BalancedTriple lhs = m3_meet(x, m3_join(gf0, g0f));
  BalancedTriple rhs = m3_join(m3_meet(x, gf0), m3_meet(x, g0f));
  return NondistribWitness{f, std::move(lhs), std::move(rhs)};
}

bool is_finite_join_of_atoms(const PairAC& p) { return is_finite(p.a) && is_finite(p.c); }

bool is_finite_meet_of_coatoms(const PairAC& p) { return is_cofinite(p.a) && is_cofinite(p.c); }

BalancedTriple join_of_atoms(const PairAC& p) {
  if (!is_finite_join_of_atoms(p)) throw PreconditionViolation("join_of_atoms: pair not finite");
  const auto& u = p.universe();
  const FcSet none = FcSet::empty(u);
  // In a finite universe the Fin-tagged support is the element list itself.
  BalancedTriple acc = BalancedTriple::bottom(u);
  for (Index alpha : p.a.support()) {
    acc = m3_join(acc, g_embed(PairAC(FcSet(u, Tag::Fin, {alpha}), none)));
  }
  for (Index gamma : p.c.support()) {
    acc = m3_join(acc, g_embed(PairAC(none, FcSet(u, Tag::Fin, {gamma}))));
  }
  return acc;
}

BalancedTriple meet_of_coatoms(const PairAC& p) {
  if (!is_finite_meet_of_coatoms(p)) {
    throw PreconditionViolation("meet_of_coatoms: pair not cofinite");
  }
  const auto& u = p.universe();
  const FcSet all = FcSet::full(u);
  const FcSet missing_a = complement(p.a);
  const FcSet missing_c = complement(p.c);
  BalancedTriple acc = BalancedTriple::top(u);
  for (Index alpha : missing_a.support()) {
    acc = m3_meet(acc, g_embed(PairAC(FcSet(u, Tag::Cofin, {alpha}), all)));
  }
  for (Index gamma : missing_c.support()) {
    acc = m3_meet(acc, g_embed(PairAC(all, FcSet(u, Tag::Cofin, {gamma}))));
  }
  return acc;
}

SElem random_s_element(std::mt19937_64& rng, const Universe& u, Index index_bound) {
  for (;;) {
    BalancedTriple t = closure(random_triple(rng, u, index_bound));
    if (in_T(t.triple())) return SElem(std::move(t));
  }
}

PairAC random_a_pair(std::mt19937_64& rng, const Universe& u, Index index_bound) {
  FcSet a = random_fcset(rng, u, index_bound);
  FcSet c = random_fcset(rng, u, index_bound);
  if (!u.is_finite()) {
    std::bernoulli_distribution coin(0.5);
    const Tag tag = coin(rng) ? Tag::Cofin : Tag::Fin;
    a = FcSet(u, tag, a.support());
    c = FcSet(u, tag, c.support());
  }
  return PairAC(std::move(a), std::move(c));
}

}  // namespace m3lat
