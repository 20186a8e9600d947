#pragma once

// Ground truth: exhaustive witness verification, coherence checking, and
// brute-force minimal-witness search.

#include <chrono>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eppa/automorphisms.hpp"
#include "eppa/canonical.hpp"
#include "eppa/structures.hpp"
#include "eppa/witness.hpp"

namespace eppa {

enum class VerifyStrategy { use_extender, search, both };

inline const char* strategy_name(VerifyStrategy s) {
  switch (s) {
    case VerifyStrategy::use_extender: return "use-extender";
    case VerifyStrategy::search: return "search";
    default: return "both";
  }
}

struct VerifyFailure {
  PartialMap p;
  std::string reason;
};

struct VerificationReport {
  bool pass = false;
  unsigned long long checked = 0;   // partial automorphisms enumerated
  unsigned long long extended = 0;  // successfully extended
  unsigned long long failure_count = 0;
  std::vector<VerifyFailure> failures;  // first few, in enumeration order
  double wall_ms = 0;
  std::string strategy;
};

struct VerifyOptions {
  VerifyStrategy strategy = VerifyStrategy::search;
  int max_failures_kept = 10;
  double timeout_secs = 0;  // 0 = unlimited
};

namespace detail {

struct Deadline {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double limit_secs = 0;
  unsigned counter = 0;

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
  void poll(const char* what) {
    if (limit_secs <= 0) return;
    if ((++counter & 0xff) != 0) return;
    if (elapsed_ms() > limit_secs * 1000.0)
      throw CapacityError(std::string(what) + " timed out after " +
                          std::to_string(limit_secs) + "s");
  }
};

}  // namespace detail

// Exhaustive check that every partial automorphism of w.base extends to an
// automorphism of w.host. use_extender validates the constructive extender's
// output; search proves existence by complete backtracking; both cross-checks
// that a valid extender output implies search success.
template <class S>
VerificationReport verify_witness(const Witness<S>& w,
                                  const VerifyOptions& opt = {}) {
  if (!check_embedding(w))
    throw InputError("witness embedding is not an embedding");
  bool want_ext = opt.strategy != VerifyStrategy::search;
  bool want_search = opt.strategy != VerifyStrategy::use_extender;
  if (want_ext && !w.has_extender())
    throw InputError("verification strategy needs an extender, witness has none");

  VerificationReport rep;
  rep.strategy = strategy_name(opt.strategy);
  detail::Deadline dl;
  dl.limit_secs = opt.timeout_secs;

  // one engine for every seed: host color refinement and incidence tables
  // are computed once per verification run
  auto engine = detail::make_extension_search(w.host);

  for_each_partial_auto(w.base, -1, [&](const PartialMap& p) {
    ++rep.checked;
    dl.poll("witness verification");
    std::string reason;

    bool ext_ok = true;
    if (want_ext) {
      Perm g = w.extender(p);
      if (static_cast<int>(g.size()) != w.host.n || !is_permutation(g)) {
        ext_ok = false;
        reason = "extender output is not a permutation of the host";
      } else if (!is_automorphism(w.host, g)) {
        ext_ok = false;
        reason = "extender output is not an automorphism of the host";
      } else {
        for (auto [u, v] : p.pairs)
          if (g[w.embedding[u]] != w.embedding[v]) {
            ext_ok = false;
            reason = "extender output does not extend the partial map";
            break;
          }
      }
    }

    bool search_ok = true;
    if (want_search) {
      std::vector<std::pair<int, int>> hp;
      hp.reserve(p.pairs.size());
      for (auto [u, v] : p.pairs)
        hp.emplace_back(w.embedding[u], w.embedding[v]);
      PartialMap q = PartialMap::from_pairs(std::move(hp));
      if (!is_partial_automorphism(w.host, q)) {
        search_ok = false;
        reason = "induced host map is not a partial automorphism";
      } else if (!engine.run(q)) {
        search_ok = false;
        reason = "no automorphism of the host extends the map";
      } else if (!is_automorphism(w.host, engine.img)) {
        throw InternalError("extension search produced a non-automorphism");
      }
    }

    bool ok = ext_ok && search_ok;
    if (opt.strategy == VerifyStrategy::both && ext_ok && !search_ok)
      throw InternalError(
          "extender produced a valid extension but search found none for " +
          p.str());
    if (ok) {
      ++rep.extended;
    } else {
      ++rep.failure_count;
      if (static_cast<int>(rep.failures.size()) < opt.max_failures_kept)
        rep.failures.push_back({p, reason});
    }
  });

  rep.pass = rep.failure_count == 0;
  rep.wall_ms = dl.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------------------
// coherence

enum class CoherenceScope { substructure_autos, all_composable };

struct CoherenceReport {
  bool pass = false;
  unsigned long long pairs_checked = 0;
  std::vector<std::string> violations;  // first few
  std::string scope;
};

// Checks the composition law Psi(g f) = Psi(g) Psi(f) of the witness
// extender. substructure_autos restricts to automorphism pairs of a common
// induced substructure; all_composable ranges over all pairs with
// rng(f) = dom(g).
template <class S>
CoherenceReport verify_coherence(const Witness<S>& w, CoherenceScope scope,
                                 double timeout_secs = 0) {
  if (!w.has_extender())
    throw InputError("coherence check needs a witness with an extender");
  CoherenceReport rep;
  rep.scope = scope == CoherenceScope::substructure_autos
                  ? "substructure-autos"
                  : "all-composable";

  std::vector<PartialMap> all = enumerate_partial_autos(w.base);
  std::vector<Perm> psi(all.size());
  std::map<std::vector<std::pair<int, int>>, size_t> index;
  for (size_t i = 0; i < all.size(); ++i) {
    psi[i] = w.extender(all[i]);
    index[all[i].pairs] = i;
  }

  detail::Deadline dl;
  dl.limit_secs = timeout_secs;

  // bucket by domain to find composable partners quickly
  std::map<std::vector<int>, std::vector<size_t>> by_dom;
  for (size_t i = 0; i < all.size(); ++i) by_dom[all[i].dom()].push_back(i);

  auto check_pair = [&](size_t gi, size_t fi) {
    dl.poll("coherence check");
    ++rep.pairs_checked;
    PartialMap gf = compose(all[gi], all[fi]);
    auto it = index.find(gf.pairs);
    if (it == index.end())
      throw InternalError("composition of partial automorphisms missing from "
                          "the enumeration");
    const Perm& lhs = psi[it->second];
    Perm rhs = compose_perm(psi[gi], psi[fi]);
    if (lhs != rhs && static_cast<int>(rep.violations.size()) < 10)
      rep.violations.push_back("Psi(gf) != Psi(g)Psi(f) for f=" +
                               all[fi].str() + ", g=" + all[gi].str());
    return lhs == rhs;
  };

  unsigned long long bad = 0;
  if (scope == CoherenceScope::all_composable) {
    for (size_t fi = 0; fi < all.size(); ++fi) {
      auto it = by_dom.find(all[fi].rng());
      if (it == by_dom.end()) continue;
      for (size_t gi : it->second)
        if (!check_pair(gi, fi)) ++bad;
    }
  } else {
    for (size_t fi = 0; fi < all.size(); ++fi) {
      auto d = all[fi].dom();
      if (d != all[fi].rng()) continue;  // automorphism of an induced C
      auto it = by_dom.find(d);
      for (size_t gi : it->second) {
        if (all[gi].rng() != d) continue;
        if (!check_pair(gi, fi)) ++bad;
      }
    }
  }
  rep.pass = bad == 0;
  return rep;
}

// ---------------------------------------------------------------------------
// brute-force minimal witness search

struct MinWitnessOptions {
  int max_m = 10;
  bool prune_transitive = false;
  unsigned long long max_hosts = 500000;  // candidate hosts generated in total
  double timeout_secs = 0;
  int canonical_cap = 12;
};

struct LevelStats {
  int m = 0;
  unsigned long long generated = 0;  // candidate hosts before dedup
  unsigned long long kept = 0;       // canonical classes
  unsigned long long verified = 0;   // hosts run through verification
  unsigned long long passed = 0;
};

struct MinWitnessResult {
  bool found = false;
  int value = -1;
  Witness<Graph> certificate;
  bool exhausted = false;   // every host up to max_m was ruled out
  bool pruned_mode = false;  // value conditional on the vertex-transitivity
                             // assumption about smallest witnesses
  std::vector<LevelStats> levels;
};

// Level-wise exhaustive search for the smallest host: grow hosts one vertex
// at a time over all possible neighborhoods, dedup by the canonical form of
// the host with the embedded copy of g marked (the witness property is a
// property of the (host, copy) pair, not of the bare host). Exact when
// prune_transitive is off; with pruning on, only vertex-transitive hosts are
// verified and the result is conditional.
inline MinWitnessResult min_witness_search(const Graph& g,
                                           const MinWitnessOptions& opt = {}) {
  if (g.n > 6)
    throw CapacityError("min witness search needs |G| <= 6, got " +
                        std::to_string(g.n));
  if (opt.max_m > (opt.prune_transitive ? 12 : 10))
    throw CapacityError("max_m too large: " + std::to_string(opt.max_m));

  MinWitnessResult res;
  res.pruned_mode = opt.prune_transitive;

  detail::Deadline dl;
  dl.limit_secs = opt.timeout_secs;
  unsigned long long total_generated = 0;

  std::vector<Graph> frontier{g};
  for (int m = g.n; m <= opt.max_m; ++m) {
    LevelStats stats;
    stats.m = m;
    stats.kept = frontier.size();

    for (const Graph& host : frontier) {
      dl.poll("min witness search");
      if (opt.prune_transitive && !is_vertex_transitive(host)) continue;
      ++stats.verified;
      Witness<Graph> w;
      w.base = g;
      w.host = host;
      w.embedding = identity_perm(g.n);
      w.tag = "search-min candidate";
      VerifyOptions vo;
      vo.strategy = VerifyStrategy::search;
      VerificationReport rep = verify_witness(w, vo);
      if (rep.pass) {
        ++stats.passed;
        res.found = true;
        res.value = m;
        res.certificate = std::move(w);
        res.levels.push_back(stats);
        return res;
      }
    }
    res.levels.push_back(stats);
    if (m == opt.max_m) break;

    // grow every host by one vertex with every possible neighborhood
    std::vector<int> marks(m + 1, 0);
    for (int i = 0; i < g.n; ++i) marks[i] = 1;
    CanonicalOptions copt;
    copt.cap = opt.canonical_cap;
    copt.init_colors = marks;
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& host : frontier) {
      for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        dl.poll("min witness search");
        if (++total_generated > opt.max_hosts)
          throw CapacityError("min witness search exceeded max_hosts = " +
                              std::to_string(opt.max_hosts));
        Graph h2(m + 1);
        for (auto [u, v] : host.edges()) h2.add_edge(u, v);
        for (int v = 0; v < m; ++v)
          if (mask >> v & 1) h2.add_edge(v, m);
        auto cf = canonical_form(h2, copt);
        if (seen.insert(cf.canon).second) next.push_back(std::move(h2));
      }
    }
    stats.generated = total_generated;
    res.levels.back().generated = total_generated;
    frontier = std::move(next);
  }
  res.exhausted = !res.found;
  return res;
}

}  // namespace eppa
