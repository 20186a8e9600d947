#pragma once

// Lower-bound engine. The core certificate: an independent set A plus, for
// each realized neighbor count k, one outside vertex with exactly k neighbors
// in A; any witness then needs a distinct vertex for every k-subset of A, so
// |A| + sum_k C(|A|, k) is a lower bound. Complementation preserves the
// extension property, so the best certificate over the graph and its
// complement is returned. Also: the extremal half-graph and half-star
// constructions, closed-form cycle and degree bounds, the catalog of finite
// homogeneous graphs with a membership test, and seeded random experiments.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eppa/automorphisms.hpp"
#include "eppa/bigint.hpp"
#include "eppa/structures.hpp"

namespace eppa {

inline constexpr int kDefaultExactMisCap = 25;

// ---------------------------------------------------------------------------
// certificates

struct BoundCertificate {
  BigInt value = 0;
  std::vector<int> independent_set;            // A, ascending
  std::vector<std::pair<int, int>> witnesses;  // (vertex, k), k ascending
  bool complemented = false;  // certificate lives in the complement
};

enum class BoundMode { exact, greedy };

// re-derives every invariant from scratch: independence, exact neighbor
// counts, strictly increasing k, and the value formula
inline bool validate_certificate(const Graph& g, const BoundCertificate& c) {
  Graph h = c.complemented ? complement(g) : g;
  const auto& a = c.independent_set;
  std::vector<char> in_a(h.n, 0);
  for (int v : a) {
    if (v < 0 || v >= h.n || in_a[v]) return false;
    in_a[v] = 1;
  }
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (h.adjacent(a[i], a[j])) return false;
  BigInt value = static_cast<long long>(a.size());
  int prev_k = -1;
  for (auto [v, k] : c.witnesses) {
    if (v < 0 || v >= h.n || in_a[v] || k <= prev_k) return false;
    int cnt = 0;
    for (int u : a) cnt += h.adjacent(v, u);
    if (cnt != k) return false;
    value += binomial(static_cast<long long>(a.size()), k);
    prev_k = k;
  }
  return value == c.value;
}

namespace detail {

// best certificate on a fixed independent set: every realized neighbor
// count contributes its binomial, witnessed by the lowest such vertex
inline BoundCertificate certificate_for_set(const Graph& h, std::vector<int> a,
                                            bool complemented) {
  std::sort(a.begin(), a.end());
  std::vector<char> in_a(h.n, 0);
  for (int v : a) in_a[v] = 1;
  std::map<int, int> first_witness;  // k -> lowest outside vertex
  for (int v = 0; v < h.n; ++v) {
    if (in_a[v]) continue;
    int k = 0;
    for (int u : a) k += h.adjacent(v, u);
    first_witness.emplace(k, v);
  }
  BoundCertificate c;
  c.complemented = complemented;
  c.value = static_cast<long long>(a.size());
  c.independent_set = std::move(a);
  for (auto [k, v] : first_witness) {
    c.witnesses.emplace_back(v, k);
    c.value += binomial(static_cast<long long>(c.independent_set.size()), k);
  }
  return c;
}

// Bron-Kerbosch with pivoting over the complement (maximal independent sets
// of g are maximal cliques of its complement); bitmask sets, so n <= 64
template <class F>
void for_each_maximal_independent_set(const Graph& g, F&& yield) {
  if (g.n > 64)
    throw CapacityError("maximal independent set enumeration supports at most "
                        "64 vertices, got " +
                        std::to_string(g.n));
  const int n = g.n;
  std::vector<uint64_t> non(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) non[u] |= uint64_t{1} << v;
  std::vector<int> buf;
  auto emit = [&](uint64_t r) {
    buf.clear();
    for (uint64_t m = r; m;) {
      buf.push_back(__builtin_ctzll(m));
      m &= m - 1;
    }
    yield(buf);
  };
  auto bk = [&](auto&& self, uint64_t r, uint64_t p, uint64_t x) -> void {
    if (!p && !x) {
      emit(r);
      return;
    }
    int pivot = -1, best = -1;
    for (uint64_t m = p | x; m;) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      int c = __builtin_popcountll(p & non[v]);
      if (c > best) {
        best = c;
        pivot = v;
      }
    }
    for (uint64_t cand = p & ~non[pivot]; cand;) {
      int v = __builtin_ctzll(cand);
      cand &= cand - 1;
      const uint64_t vbit = uint64_t{1} << v;
      self(self, r | vbit, p & non[v], x & non[v]);
      p &= ~vbit;
      x |= vbit;
    }
  };
  uint64_t all = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  bk(bk, 0, all, 0);
}

// grow from the start vertex, then sweep ascending; maximal by construction
inline std::vector<int> greedy_independent_set(const Graph& g, int start) {
  std::vector<int> a{start};
  for (int v = 0; v < g.n; ++v) {
    if (v == start) continue;
    bool ok = true;
    for (int u : a)
      if (g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) a.push_back(v);
  }
  return a;
}

}  // namespace detail

inline int max_independent_set_size(const Graph& g) {
  int best = 0;
  detail::for_each_maximal_independent_set(
      g, [&](const std::vector<int>& a) {
        best = std::max(best, static_cast<int>(a.size()));
      });
  return best;
}

// best certificate over the graph and its complement; exact mode maximizes
// over all maximal independent sets, greedy mode over n grown ones
inline BoundCertificate lower_bound_hrus(const Graph& g,
                                         BoundMode mode = BoundMode::exact,
                                         int exact_cap = kDefaultExactMisCap) {
  if (mode == BoundMode::exact && g.n > exact_cap)
    throw CapacityError("exact certificate search capped at " +
                        std::to_string(exact_cap) + " vertices, got " +
                        std::to_string(g.n) + "; use greedy mode");
  BoundCertificate best;
  if (g.n == 0) return best;
  bool have = false;
  for (bool complemented : {false, true}) {
    Graph h = complemented ? complement(g) : g;
    auto consider = [&](const std::vector<int>& a) {
      auto c = detail::certificate_for_set(h, a, complemented);
      if (!have || c.value > best.value) {
        best = std::move(c);
        have = true;
      }
    };
    if (mode == BoundMode::exact) {
      detail::for_each_maximal_independent_set(h, consider);
    } else {
      for (int s = 0; s < h.n; ++s) consider(detail::greedy_independent_set(h, s));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// extremal constructions

// bipartite graph on [2m]: lower i and upper j are adjacent iff j >= i + m;
// upper half independent, lower vertex i sees exactly m - i upper vertices,
// so all of k = 1..m are realized and the certificate reaches 2^m + m - 1
inline Graph build_half_graph(int m) {
  if (m < 1) throw InputError("half graph needs m >= 1");
  Graph g(2 * m);
  for (int u = 0; u < 2 * m; ++u)
    for (int v = u + m; v < 2 * m; ++v) g.add_edge(u, v);
  return g;
}

// star center (last vertex) joined to half of an otherwise edgeless part:
// the center sees exactly floor((n-1)/2) of the n-1 independent vertices,
// forcing the central binomial coefficient as a lower bound
inline Graph build_half_star_graph(int n) {
  if (n < 2) throw InputError("half star needs n >= 2");
  Graph g(n);
  for (int u = 0; u < (n - 1) / 2; ++u) g.add_edge(n - 1, u);
  return g;
}

// ---------------------------------------------------------------------------
// closed forms

// lower bound from the largest independent set of the cycle (a common
// neighbor of two members realizes k = 2, and for odd n a vertex adjacent to
// exactly one member realizes k = 1); upper bound C(n, 2); C_3, C_4, C_5 are
// themselves homogeneous, so both sides collapse to n there
inline std::pair<BigInt, BigInt> cycle_bounds(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  if (n <= 5) return {n, n};
  BigInt lower = (n % 2 == 0) ? BigInt(n) * (n + 2) / 8
                              : BigInt(n - 1) * (n + 5) / 8;
  return {lower, binomial(n, 2)};
}

struct DegreeBoundsReport {
  int max_degree = 0;
  int neighborhood_independence = 0;  // max independent set in a neighborhood
  BigInt bound = 0;                   // C(ceil(n/(d+1)), k), 0 when flagged
  bool homogeneous_subgraph = false;  // disjoint cliques; no bound claimed
};

// a greedy independent set containing a size-k independent set from one
// neighborhood has size >= ceil(n/(d+1)) and realizes k, giving the binomial
// bound; if every neighborhood is a clique the graph is a disjoint union of
// complete graphs, which sits inside a homogeneous graph instead
inline DegreeBoundsReport degree_bounds(const Graph& g) {
  DegreeBoundsReport r;
  if (g.n == 0) {
    r.homogeneous_subgraph = true;
    return r;
  }
  for (int v = 0; v < g.n; ++v) r.max_degree = std::max(r.max_degree, g.degree(v));
  for (int v = 0; v < g.n; ++v) {
    Graph nb = induced_substructure(g, g.neighbors(v));
    r.neighborhood_independence =
        std::max(r.neighborhood_independence, max_independent_set_size(nb));
  }
  if (r.neighborhood_independence <= 1) {
    r.homogeneous_subgraph = true;
    return r;
  }
  int d = r.max_degree;
  r.bound = binomial((g.n + d) / (d + 1), r.neighborhood_independence);
  return r;
}

// ---------------------------------------------------------------------------
// finite homogeneous graphs

enum class HomogeneousFamily {
  c5,
  line_k33,
  disjoint_cliques,
  complement_disjoint_cliques,
};

struct HomogeneousCatalogEntry {
  HomogeneousFamily family;
  std::string name;
  bool parametrized;  // takes (copies, clique size)
};

inline std::vector<HomogeneousCatalogEntry> homogeneous_catalog() {
  return {{HomogeneousFamily::c5, "C_5", false},
          {HomogeneousFamily::line_k33, "L(K_{3,3})", false},
          {HomogeneousFamily::disjoint_cliques, "disjoint cliques", true},
          {HomogeneousFamily::complement_disjoint_cliques,
           "complement of disjoint cliques", true}};
}

namespace detail {

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

// vertex 3i + j is cell (i, j) of a 3x3 grid; edges along rows and columns
inline Graph rook_3x3_graph() {
  Graph g(9);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 == v / 3 || u % 3 == v % 3) g.add_edge(u, v);
  return g;
}

inline Graph disjoint_cliques_graph(int s, int t) {
  Graph g(s * t);
  for (int b = 0; b < s; ++b)
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) g.add_edge(b * t + i, b * t + j);
  return g;
}

}  // namespace detail

inline Graph materialize(const HomogeneousCatalogEntry& e, int copies = 0,
                         int clique_size = 0) {
  switch (e.family) {
    case HomogeneousFamily::c5:
      return detail::cycle_graph(5);
    case HomogeneousFamily::line_k33:
      return detail::rook_3x3_graph();
    case HomogeneousFamily::disjoint_cliques:
    case HomogeneousFamily::complement_disjoint_cliques: {
      if (copies < 1 || clique_size < 1)
        throw InputError("clique family needs copies >= 1 and size >= 1");
      if (static_cast<long long>(copies) * clique_size > 10000)
        throw CapacityError("clique family materialization capped at 10000 "
                            "vertices");
      Graph g = detail::disjoint_cliques_graph(copies, clique_size);
      return e.family == HomogeneousFamily::disjoint_cliques ? g
                                                             : complement(g);
    }
  }
  throw InputError("unknown catalog entry");
}

struct HomogeneousEmbedding {
  std::string target_name;
  Graph target;
  std::vector<int> embedding;  // induced, vertex of g -> vertex of target
};

namespace detail {

// when every component is complete, reports the component count, the largest
// size, and an induced embedding into that many equal cliques
inline bool components_all_cliques(const Graph& g, int& count, int& largest,
                                   std::vector<std::vector<int>>& comps) {
  count = 0;
  largest = 0;
  comps.clear();
  std::vector<char> seen(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (seen[v]) continue;
    std::vector<int> comp{v};
    seen[v] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int u : g.neighbors(comp[i]))
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = i + 1; j < comp.size(); ++j)
        if (!g.adjacent(comp[i], comp[j])) return false;
    largest = std::max(largest, static_cast<int>(comp.size()));
    ++count;
    comps.push_back(std::move(comp));
  }
  return true;
}

}  // namespace detail

// disjoint unions of cliques (and their complements) sit inside the equal
// size clique families; everything else is tried against the two sporadic
// graphs and their complements by induced embedding search
inline std::optional<HomogeneousEmbedding> is_subgraph_of_homogeneous(
    const Graph& g) {
  for (bool complemented : {false, true}) {
    Graph h = complemented ? complement(g) : g;
    int s = 0, t = 0;
    std::vector<std::vector<int>> comps;
    if (!detail::components_all_cliques(h, s, t, comps)) continue;
    Graph target = detail::disjoint_cliques_graph(s, std::max(t, 1));
    std::vector<int> emb(g.n, -1);
    for (int c = 0; c < s; ++c)
      for (size_t i = 0; i < comps[c].size(); ++i)
        emb[comps[c][i]] = c * std::max(t, 1) + static_cast<int>(i);
    if (complemented) target = complement(target);
    return HomogeneousEmbedding{
        complemented ? "complement of disjoint cliques" : "disjoint cliques",
        std::move(target), std::move(emb)};
  }
  const Graph c5 = detail::cycle_graph(5);
  const Graph rook = detail::rook_3x3_graph();
  const std::pair<std::string, Graph> sporadic[] = {
      {"C_5", c5},
      {"L(K_{3,3})", rook},
      {"complement of C_5", complement(c5)},
      {"complement of L(K_{3,3})", complement(rook)}};
  for (const auto& [name, target] : sporadic) {
    if (g.n > target.n) continue;
    if (auto emb = find_induced_embedding(g, target))
      return HomogeneousEmbedding{name, target, *emb};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// random experiments

struct RandomExperimentReport {
  int n = 0;
  double p = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  bool exact = false;  // exact enumeration, else greedy fallback
  std::vector<BigInt> values;  // certificate value per sample, sample order
  BigInt min_value = 0, median_value = 0, max_value = 0;  // lower median
  std::map<std::pair<int, int>, int> profile;  // (|A|, best k) -> samples
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

// byte-reproducible: per-sample engines are seeded from a splitmix64 stream,
// edges drawn in fixed lexicographic order from the top 53 bits
inline RandomExperimentReport random_experiment(
    int n, double p, int samples, std::uint64_t seed,
    int exact_cap = kDefaultExactMisCap) {
  if (n < 0) throw InputError("negative vertex count");
  if (samples < 1) throw InputError("need at least one sample");
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError("edge probability must lie in [0, 1]");
  RandomExperimentReport r;
  r.n = n;
  r.p = p;
  r.samples = samples;
  r.seed = seed;
  r.exact = n <= exact_cap;
  std::uint64_t stream = seed;
  for (int s = 0; s < samples; ++s) {
    std::mt19937_64 eng(detail::splitmix64(stream));
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((eng() >> 11) * 0x1.0p-53 < p) g.add_edge(i, j);
    auto cert = lower_bound_hrus(
        g, r.exact ? BoundMode::exact : BoundMode::greedy, exact_cap);
    int m = static_cast<int>(cert.independent_set.size());
    int best_k = -1;
    BigInt best_term = -1;
    for (auto [v, k] : cert.witnesses) {
      BigInt term = binomial(m, k);
      if (term > best_term) {
        best_term = term;
        best_k = k;
      }
    }
    ++r.profile[{m, best_k}];
    r.values.push_back(std::move(cert.value));
  }
  auto sorted = r.values;
  std::sort(sorted.begin(), sorted.end());
  r.min_value = sorted.front();
  r.median_value = sorted[(samples - 1) / 2];
  r.max_value = sorted.back();
  return r;
}

}  // namespace eppa
