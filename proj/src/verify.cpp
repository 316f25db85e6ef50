#include "m3lat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "m3lat/json_io.hpp"
#include "m3lat/slat.hpp"
#include "m3lat/subspace.hpp"

namespace m3lat {

namespace {

using Clock = std::chrono::steady_clock;

/// Accumulates a single report; the first failure wins.
class Run {
public:
  explicit Run(VerificationReport& r) : r_(r) {}

  bool ok() const { return r_.pass; }

  /// Records a failure unless cond holds. Returns cond.
  bool require(bool cond, const std::function<json()>& counterexample) {
    if (!cond && r_.pass) {
      r_.pass = false;
      r_.counterexample = counterexample();
    }
    return cond;
  }

  void sampled(std::uint64_t count, std::uint64_t seed) {
    r_.mode = CheckMode::Sampled;
    r_.count = count;
    r_.seed = seed;
  }

  void exhaustive(std::uint64_t count) {
    r_.mode = CheckMode::Exhaustive;
    r_.count = count;
  }

  json& details() { return r_.details; }

private:
  VerificationReport& r_;
};

json case_of(std::initializer_list<std::pair<const char*, json>> items) {
  json j = json::object();
  for (const auto& [k, v] : items) j[k] = v;
  return j;
}

const Universe kOmega = Universe::omega();

// T is a bounded join-subsemilattice of F(κ)^3.
void lemma_t_join(Run& run, const VerifyParams& p) {
  std::mt19937_64 rng(p.seed);
  run.require(in_T(Triple::bottom(kOmega)) && in_T(Triple::top(kOmega)), [] { return json("bounds not in T"); });
  std::uint64_t done = 0;
  while (done < p.samples && run.ok()) {
    const Triple s = random_triple(rng, kOmega);
    const Triple t = random_triple(rng, kOmega);
    if (!in_T(s) || !in_T(t)) continue;
    ++done;
    run.require(in_T(componentwise_join(s, t)), [&] { return case_of({{"s", to_json(s)}, {"t", to_json(t)}}); });
  }
  run.sampled(done, p.seed);
}

void lemma_t_closure(Run& run, const VerifyParams& p) {
  std::mt19937_64 rng(p.seed);
  std::uint64_t done = 0;
  while (done < p.samples && run.ok()) {
    const Triple t = random_triple(rng, kOmega);
    if (!in_T(t)) continue;
    ++done;
    run.require(in_T(closure(t).triple()), [&] { return case_of({{"t", to_json(t)}}); });
  }
  run.sampled(done, p.seed);
}

// S is a bounded sublattice of M3[F(κ)]; T is not meet-closed.
void lemma_s_sublattice(Run& run, const VerifyParams& p) {
  const FcSet all = FcSet::full(kOmega);
  const FcSet none = FcSet::empty(kOmega);
  const Triple x(all, none, all);
  const Triple y(none, all, all);
  const Triple xy = componentwise_meet(x, y);
  run.require(in_T(x) && in_T(y) && xy == Triple(none, none, all) && !in_T(xy),
              [&] { return case_of({{"meet_outside_T", to_json(xy)}}); });
  run.details()["meet_outside_T"] = to_json(xy);
  run.details()["meet_outside_T_in_T"] = in_T(xy);
  run.require(in_S(Triple::bottom(kOmega)) && in_S(Triple::top(kOmega)), [] { return json("bounds not in S"); });

  std::mt19937_64 rng(p.seed);
  for (std::uint64_t i = 0; i < p.samples && run.ok(); ++i) {
    const SElem s = random_s_element(rng, kOmega);
    const SElem t = random_s_element(rng, kOmega);
    const BalancedTriple meet = m3_meet(s.balanced(), t.balanced());
    const BalancedTriple join = m3_join(s.balanced(), t.balanced());
    run.require(in_S(meet.triple()) && in_S(join.triple()),
                [&] { return case_of({{"s", to_json(s.triple())}, {"t", to_json(t.triple())}}); });
  }
  run.sampled(p.samples, p.seed);
}

void lemma_s_modular(Run& run, const VerifyParams& p) {
  // Exhaustive over Finite(2), where S = M3[P(2)] has 25 elements.
  std::vector<BalancedTriple> small = all_balanced_triples(Universe::finite(2));
  std::uint64_t exhaustive = 0;
  for (const auto& x : small)
    for (const auto& z : small) {
      if (!leq(x.triple(), z.triple())) continue;
      for (const auto& y : small) {
        ++exhaustive;
        run.require(m3_join(x, m3_meet(y, z)) == m3_meet(m3_join(x, y), z), [&] {
          return case_of({{"x", to_json(x.triple())}, {"y", to_json(y.triple())}, {"z", to_json(z.triple())}});
        });
      }
    }
  run.details()["exhaustive_finite2_cases"] = exhaustive;

  std::mt19937_64 rng(p.seed);
  for (std::uint64_t i = 0; i < p.samples && run.ok(); ++i) {
    const SElem x = random_s_element(rng, kOmega);
    const SElem y = random_s_element(rng, kOmega);
    const SElem z = s_join(x, random_s_element(rng, kOmega));  // forces x ≤ z
    run.require(s_join(x, s_meet(y, z)) == s_meet(s_join(x, y), z), [&] {
      return case_of({{"x", to_json(x.triple())}, {"y", to_json(y.triple())}, {"z", to_json(z.triple())}});
    });
  }
  run.sampled(p.samples, p.seed);
}

void lemma_banf(Run& run, const VerifyParams& p) {
  std::mt19937_64 rng(p.seed);
  for (std::uint64_t i = 0; i < p.samples && run.ok(); ++i) {
    const SElem s = random_s_element(rng, kOmega);
    const SElem t = random_s_element(rng, kOmega);
    const SElem lower = s_meet(s, t);  // lower ≤ t
    const SElem ft = banf(t);
    run.require(is_complement_pair(t, ft), [&] { return case_of({{"t", to_json(t.triple())}}); });
    run.require(leq(ft.triple(), banf(lower).triple()),
                [&] { return case_of({{"s", to_json(lower.triple())}, {"t", to_json(t.triple())}}); });
    run.require(in_E(ft), [&] { return case_of({{"t", to_json(t.triple())}, {"range_not_in_E", true}}); });
  }
  run.sampled(p.samples, p.seed);
}

void lemma_e_iso(Run& run, const VerifyParams& p) {
  std::mt19937_64 rng(p.seed);
  for (std::uint64_t i = 0; i < p.samples && run.ok(); ++i) {
    const PairAC x(random_fcset(rng, kOmega), random_fcset(rng, kOmega));
    const PairAC y(random_fcset(rng, kOmega), random_fcset(rng, kOmega));
    const SElem ex = e_from_pair(x);
    const SElem ey = e_from_pair(y);
    auto cx = [&] { return case_of({{"p", json{to_json(x.a), to_json(x.c)}}, {"q", json{to_json(y.a), to_json(y.c)}}}); };
    run.require(in_E(ex) && e_to_pair(ex) == x, cx);
    run.require(banf(banf(ex)) == ex, cx);
    run.require(s_meet(ex, ey) == e_from_pair(PairAC(intersection(x.a, y.a), intersection(x.c, y.c))), cx);
    run.require(s_join(ex, ey) == e_from_pair(PairAC(set_union(x.a, y.a), set_union(x.c, y.c))), cx);
    run.require((ex == ey) == (x == y), cx);
  }
  run.sampled(p.samples, p.seed);
}

void lemma_g_embed(Run& run, const VerifyParams& p) {
  const FcSet all = FcSet::full(kOmega);
  const FcSet none = FcSet::empty(kOmega);
  run.require(g_embed(PairAC(all, all)) == BalancedTriple::top(kOmega) &&
                  g_embed(PairAC(none, none)) == BalancedTriple::bottom(kOmega),
              [] { return json("bounds not preserved"); });
  std::mt19937_64 rng(p.seed);
  for (std::uint64_t i = 0; i < p.samples && run.ok(); ++i) {
    const PairAC x(random_fcset(rng, kOmega), random_fcset(rng, kOmega));
    const PairAC y(random_fcset(rng, kOmega), random_fcset(rng, kOmega));
    auto cx = [&] { return case_of({{"p", json{to_json(x.a), to_json(x.c)}}, {"q", json{to_json(y.a), to_json(y.c)}}}); };
    run.require(m3_meet(g_embed(x), g_embed(y)) ==
                    g_embed(PairAC(intersection(x.a, y.a), intersection(x.c, y.c))), cx);
    run.require(m3_join(g_embed(x), g_embed(y)) == g_embed(PairAC(set_union(x.a, y.a), set_union(x.c, y.c))), cx);
    run.require((g_embed(x) == g_embed(y)) == (x == y), cx);
  }
  run.sampled(p.samples, p.seed);
}

void lemma_a_boolean(Run& run, const VerifyParams& p) {
  const FcSet all = FcSet::full(kOmega);
  const FcSet none = FcSet::empty(kOmega);
  run.require(in_A(PairAC(none, none)) && in_A(PairAC(all, all)), [] { return json("bounds not in A"); });
  std::mt19937_64 rng(p.seed);
  for (std::uint64_t i = 0; i < p.samples && run.ok(); ++i) {
    const PairAC x = random_a_pair(rng, kOmega);
    const PairAC y = random_a_pair(rng, kOmega);
    auto cx = [&] { return case_of({{"p", json{to_json(x.a), to_json(x.c)}}, {"q", json{to_json(y.a), to_json(y.c)}}}); };
    run.require(in_A(x) && in_A(y), cx);
    run.require(in_A(PairAC(intersection(x.a, y.a), intersection(x.c, y.c))), cx);
    run.require(in_A(PairAC(set_union(x.a, y.a), set_union(x.c, y.c))), cx);
    run.require(in_A(PairAC(complement(x.a), complement(x.c))), cx);
  }
  run.sampled(p.samples, p.seed);
}

// B = g(A) lies in S, is closed under S's operations, and is Boolean with
// componentwise complements.
void lemma_b_sublattice(Run& run, const VerifyParams& p) {
  std::mt19937_64 rng(p.seed);
  for (std::uint64_t i = 0; i < p.samples && run.ok(); ++i) {
    const PairAC x = random_a_pair(rng, kOmega);
    const PairAC y = random_a_pair(rng, kOmega);
    auto cx = [&] { return case_of({{"p", json{to_json(x.a), to_json(x.c)}}, {"q", json{to_json(y.a), to_json(y.c)}}}); };
    if (!run.require(in_S(g_embed(x).triple()), cx)) break;
    const SElem gx(g_embed(x));
    const SElem gy(g_embed(y));
    run.require(in_B(gx) && in_B(gy), cx);
    run.require(in_B(s_meet(gx, gy)) && in_B(s_join(gx, gy)), cx);
    const SElem comp(g_embed(PairAC(complement(x.a), complement(x.c))));
    run.require(in_B(comp) && is_complement_pair(gx, comp), cx);
  }
  run.sampled(p.samples, p.seed);
}

// Elements t ∈ S∖B with b ⊆ a: their complements t' always have b' ⊄ a'.
void lemma_b_obstruction(Run& run, const VerifyParams& p) {
  std::mt19937_64 rng(p.seed);
  const Index small_bound = 3;
  const auto candidates_sets = bounded_fcsets(kOmega, small_bound);
  std::vector<SElem> small_s;
  for (const auto& a : candidates_sets)
    for (const auto& b : candidates_sets)
      for (const auto& c : candidates_sets) {
        const Triple t(a, b, c);
        if (in_S(t)) small_s.emplace_back(t);
      }
  const std::uint64_t elements = std::min<std::uint64_t>(p.samples, 200);
  std::uint64_t complements_checked = 0;
  std::uint64_t done = 0;
  while (done < elements && run.ok()) {
    // t = g<A, C> with A cofinite and C finite: balanced, in T, b ⊆ a, A ≁ C.
    const FcSet a(kOmega, Tag::Cofin, random_fcset(rng, Universe::finite(small_bound)).support());
    const FcSet c(kOmega, Tag::Fin, random_fcset(rng, Universe::finite(small_bound)).support());
    const SElem t(g_embed(PairAC(a, c)));
    ++done;
    std::vector<SElem> comps{banf(t)};
    for (const auto& cand : small_s)
      if (is_complement_pair(t, cand)) comps.push_back(cand);
    for (const auto& tp : comps) {
      ++complements_checked;
      run.require(!complement_obstruction(t, tp),
                  [&] { return case_of({{"t", to_json(t.triple())}, {"t_prime", to_json(tp.triple())}}); });
    }
  }
  run.details()["complements_checked"] = complements_checked;
  run.sampled(done, p.seed);
}

// Any t ∈ S with b ⊄ a together with B generates a non-distributive sublattice.
void lemma_b_maximal(Run& run, const VerifyParams& p) {
  std::mt19937_64 rng(p.seed);
  std::uint64_t done = 0;
  while (done < p.samples && run.ok()) {
    const SElem t = random_s_element(rng, kOmega);
    if (is_subset(t.b(), t.a())) continue;
    ++done;
    const NondistribWitness w = nondistrib_witness(t);
    const Universe& u = t.universe();
    const BalancedTriple expected_lhs(Triple(FcSet::empty(u), w.f, FcSet::empty(u)));
    run.require(w.lhs == expected_lhs && w.rhs == BalancedTriple::bottom(u) && !(w.lhs == w.rhs),
                [&] { return case_of({{"t", to_json(t.triple())}, {"F", to_json(w.f)}}); });
  }
  run.sampled(done, p.seed);
}

// <κ,∅,∅> has no complement in B; the forced chain A = ∅ ⇒ B = ∅ ⇒ C = κ ⇒
// C∖μ infinite is asserted on every bounded candidate pair.
void lemma_b_not_range(Run& run, const VerifyParams& p) {
  const FcSet all = FcSet::full(kOmega);
  const FcSet none = FcSet::empty(kOmega);
  const SElem x(Triple(all, none, none));
  const auto found = find_complement_in_B(x, p.bound);
  run.require(!found, [&] { return case_of({{"complement_in_B", to_json(found->triple())}}); });

  const auto sets = bounded_fcsets(kOmega, p.bound);
  std::uint64_t candidates = 0, meet_zero = 0, both = 0;
  for (const auto& a : sets) {
    for (const auto& c : sets) {
      if (!run.ok()) break;
      ++candidates;
      const PairAC pair(a, c);
      const BalancedTriple g = g_embed(pair);
      auto cx = [&] { return case_of({{"A", to_json(a)}, {"C", to_json(c)}}); };
      if (componentwise_meet(x.triple(), g.triple()) != Triple::bottom(kOmega)) continue;
      ++meet_zero;
      if (!run.require(a.is_empty(), cx)) break;   // A = A ∩ κ = ∅
      if (!run.require(g.b().is_empty(), cx)) break;  // B = A ∩ C = ∅
      if (!(m3_join(x.balanced(), g) == BalancedTriple::top(kOmega))) continue;
      ++both;
      if (!run.require(c.is_full(), cx)) break;  // C = κ
      run.require(!is_finite(difference(g.c(), mu(g.triple()))) && !in_S(g.triple()) && !in_A(pair), cx);
    }
  }
  run.details()["meet_zero_candidates"] = meet_zero;
  run.details()["complement_candidates"] = both;
  run.exhaustive(candidates);
}

// B's index lattice: finite elements are finite joins of atoms, cofinite
// ones finite meets of coatoms; <κ,∅> ∈ F(κ)^2 is neither.
void lemma_b_e_invariant(Run& run, const VerifyParams& p) {
  const FcSet all = FcSet::full(kOmega);
  const FcSet none = FcSet::empty(kOmega);
  const PairAC odd(all, none);
  run.require(!is_finite_join_of_atoms(odd) && !is_finite_meet_of_coatoms(odd) && !in_A(odd),
              [] { return json("<kappa, empty> classified as atom join or coatom meet"); });

  // Every tag combination: A-membership holds exactly for matching tags, and
  // then exactly one decomposition applies.
  for (Tag ta : {Tag::Fin, Tag::Cofin})
    for (Tag tc : {Tag::Fin, Tag::Cofin}) {
      const PairAC q(FcSet(kOmega, ta, {0, 2}), FcSet(kOmega, tc, {1}));
      auto cx = [&] { return case_of({{"p", json{to_json(q.a), to_json(q.c)}}}); };
      run.require(in_A(q) == (ta == tc), cx);
      run.require(is_finite_join_of_atoms(q) == (ta == Tag::Fin && tc == Tag::Fin), cx);
      run.require(is_finite_meet_of_coatoms(q) == (ta == Tag::Cofin && tc == Tag::Cofin), cx);
    }

  std::mt19937_64 rng(p.seed);
  for (std::uint64_t i = 0; i < p.samples && run.ok(); ++i) {
    const PairAC q = random_a_pair(rng, kOmega);
    auto cx = [&] { return case_of({{"p", json{to_json(q.a), to_json(q.c)}}}); };
    const bool fin = is_finite_join_of_atoms(q);
    const bool cof = is_finite_meet_of_coatoms(q);
    run.require(fin != cof, cx);
    if (fin) run.require(join_of_atoms(q) == g_embed(q), cx);
    if (cof) run.require(meet_of_coatoms(q) == g_embed(q), cx);
  }
  run.sampled(p.samples, p.seed);
}

void lemma_gf_closure(Run& run, const VerifyParams& p) {
  const PresentedSpace s(p.n, PrimeField(p.p));
  std::uint64_t count = 0;
  for (const auto& t : all_triples(s.universe())) {
    ++count;
    if (!run.require(check_gf_closure(s, t), [&] { return case_of({{"t", to_json(t)}, {"p", p.p}}); })) break;
  }
  run.exhaustive(count);
}

// Capped at n = 2: Sub(V) is enumerated explicitly.
void lemma_gf_adjunction(Run& run, const VerifyParams& p) {
  const PresentedSpace s(std::min<Index>(p.n, 2), PrimeField(p.p));
  run.details()["n"] = s.n();
  const auto subspaces = all_subspaces(s.ambient());
  const auto triples = all_triples(s.universe());
  std::uint64_t count = 0;
  for (const auto& t : triples) {
    for (const auto& w : subspaces) {
      ++count;
      if (!run.require(check_adjunction(s, t, w), [&] { return case_of({{"t", to_json(t)}, {"W", to_json(w)}}); })) {
        run.exhaustive(count);
        return;
      }
    }
  }
  run.details()["subspaces"] = subspaces.size();
  run.exhaustive(count);
}

void lemma_f_meet(Run& run, const VerifyParams& p) {
  const PresentedSpace s(p.n, PrimeField(p.p));
  const auto balanced = all_balanced_triples(s.universe());
  std::uint64_t count = 0;
  for (const auto& x : balanced) {
    for (const auto& y : balanced) {
      ++count;
      if (!run.require(check_meet_preservation(s, x, y),
                       [&] { return case_of({{"s", to_json(x.triple())}, {"t", to_json(y.triple())}}); })) {
        run.exhaustive(count);
        return;
      }
    }
  }
  run.exhaustive(count);
}

void lemma_f_embed(Run& run, const VerifyParams& p) {
  const PresentedSpace s(p.n, PrimeField(p.p));
  const EmbeddingReport e = check_embedding(s, p.samples, p.seed);
  run.require(e.pass, [&] { return json(e.counterexample.value_or("")); });
  if (e.mode == CheckMode::Exhaustive) {
    run.exhaustive(e.checked);
  } else {
    run.sampled(e.checked, p.seed);
  }
}

// L distributive ⇔ M3[L] modular ⇔ M3[L] Arguesian, over the curated family.
void lemma_m3_arguesian(Run& run, const VerifyParams& p) {
  constexpr std::uint64_t kExhaustiveLimit = 100'000'000;
  constexpr std::uint64_t kSampleBudget = 1'000'000;
  bool any_sampled = false;
  json per = json::array();
  for (const auto& [name, l] : curated_family()) {
    const M3Lattice m3 = m3_of(l);
    const std::uint64_t n = m3.lattice.size();
    const std::uint64_t n6 = n * n * n * n * n * n;
    const ArguesianResult arg = n6 <= kExhaustiveLimit ? is_arguesian(m3.lattice, kExhaustiveLimit, p.seed)
                                                       : is_arguesian(m3.lattice, kSampleBudget, p.seed);
    any_sampled = any_sampled || arg.mode == CheckMode::Sampled;
    const bool dist = is_distributive(l);
    const bool mod = is_modular(m3.lattice);
    per.push_back({{"lattice", name},
                   {"m3_size", n},
                   {"distributive", dist},
                   {"m3_modular", mod},
                   {"m3_arguesian", arg.holds},
                   {"arguesian_mode", arg.mode == CheckMode::Exhaustive ? "exhaustive" : "sampled"},
                   {"tuples_checked", arg.checked}});
    run.require(dist == mod && mod == arg.holds, [&] { return json{{"lattice", name}}; });
  }
  run.require(is_isomorphic(m3_of(chain(2)).lattice, diamond_m3()), [] { return json("M3[2] is not M3"); });
  run.details()["family"] = per;
  if (any_sampled) {
    run.sampled(per.size(), p.seed);
  } else {
    run.exhaustive(per.size());
  }
}

using LemmaFn = void (*)(Run&, const VerifyParams&);

const std::vector<std::pair<std::string, LemmaFn>>& registry() {
  static const std::vector<std::pair<std::string, LemmaFn>> r{
      {"t-join", lemma_t_join},
      {"t-closure", lemma_t_closure},
      {"s-sublattice", lemma_s_sublattice},
      {"s-modular", lemma_s_modular},
      {"banf", lemma_banf},
      {"e-iso", lemma_e_iso},
      {"g-embed", lemma_g_embed},
      {"a-boolean", lemma_a_boolean},
      {"b-sublattice", lemma_b_sublattice},
      {"b-obstruction", lemma_b_obstruction},
      {"b-maximal", lemma_b_maximal},
      {"b-not-range", lemma_b_not_range},
      {"b-e-invariant", lemma_b_e_invariant},
      {"gf-closure", lemma_gf_closure},
      {"gf-adjunction", lemma_gf_adjunction},
      {"f-meet", lemma_f_meet},
      {"f-embed", lemma_f_embed},
      {"m3-arguesian", lemma_m3_arguesian},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_known_lemma(const std::string& id) {
  const auto& ids = lemma_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

VerificationReport run_lemma(const std::string& id, const VerifyParams& params) {
  const auto& r = registry();
  auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first == id; });
  if (it == r.end()) throw std::invalid_argument("unknown lemma id: " + id);
  VerificationReport report;
  report.lemma = id;
  Run run(report);
  const auto start = Clock::now();
  it->second(run, params);
  report.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
  return report;
}

std::vector<VerificationReport> run_all(const VerifyParams& params) {
  std::vector<VerificationReport> out;
  for (const auto& id : lemma_ids()) out.push_back(run_lemma(id, params));
  return out;
}

nlohmann::json to_json(const VerificationReport& r, bool include_elapsed) {
  json mode;
  if (r.mode == CheckMode::Exhaustive) {
    mode = {{"kind", "exhaustive"}, {"count", r.count}};
  } else {
    mode = {{"kind", "sampled"}, {"count", r.count}, {"seed", r.seed}};
  }
  json j{{"lemma", r.lemma}, {"mode", mode}, {"details", r.details}};
  j["result"] = r.pass ? json("pass") : json{{"fail", r.counterexample}};
  if (include_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace m3lat
