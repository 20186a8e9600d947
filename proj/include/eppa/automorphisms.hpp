#pragma once

// Partial-automorphism enumeration, automorphism-extension search, induced
// embedding search, orbits. The searches are complete backtracking; pruning
// only ever discards provably impossible assignments (stable-color classes,
// pairwise relation consistency, hypergraph co-degrees).

#include <algorithm>
#include <optional>
#include <vector>

#include "eppa/canonical.hpp"
#include "eppa/structures.hpp"

namespace eppa {

using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// p after q
inline Perm compose_perm(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw InputError("permutation size mismatch");
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
  return out;
}

inline Perm invert_perm(const Perm& p) {
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

template <class S>
bool is_automorphism(const S& s, const Perm& p);

template <>
inline bool is_automorphism<Graph>(const Graph& s, const Perm& p) {
  if (static_cast<int>(p.size()) != s.n || !is_permutation(p)) return false;
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (s.adjacent(u, v) != s.adjacent(p[u], p[v])) return false;
  return true;
}

template <>
inline bool is_automorphism<Digraph>(const Digraph& s, const Perm& p) {
  if (static_cast<int>(p.size()) != s.n || !is_permutation(p)) return false;
  for (int u = 0; u < s.n; ++u)
    for (int v = 0; v < s.n; ++v)
      if (u != v && s.arc(u, v) != s.arc(p[u], p[v])) return false;
  return true;
}

template <>
inline bool is_automorphism<Hypergraph>(const Hypergraph& s, const Perm& p) {
  if (static_cast<int>(p.size()) != s.n || !is_permutation(p)) return false;
  // bijection mapping edges into edges is onto the edge set
  auto edges = s.hyperedges();
  std::vector<int> img;
  for (const auto& e : edges) {
    img.clear();
    for (int v : e) img.push_back(p[v]);
    std::sort(img.begin(), img.end());
    if (!std::binary_search(edges.begin(), edges.end(), img)) return false;
  }
  return true;
}

// relabel a structure by perm (old -> new index)
inline Graph apply_perm(const Graph& s, const Perm& p) {
  Graph out(s.n);
  for (auto [u, v] : s.edges()) out.add_edge(p[u], p[v]);
  return out;
}
inline Digraph apply_perm(const Digraph& s, const Perm& p) {
  Digraph out(s.n);
  for (auto [u, v] : s.arcs()) out.add_arc(p[u], p[v]);
  return out;
}
inline Hypergraph apply_perm(const Hypergraph& s, const Perm& p) {
  Hypergraph out(s.n, s.r);
  for (const auto& e : s.hyperedges()) {
    std::vector<int> img;
    for (int v : e) img.push_back(p[v]);
    out.add_edge(img);
  }
  return out;
}

// ---------------------------------------------------------------------------
// enumeration of partial automorphisms

namespace detail {

inline bool consistent_pair(const Graph& s,
                            const std::vector<std::pair<int, int>>& assigned,
                            int u, int x) {
  for (auto [v, y] : assigned)
    if (s.adjacent(u, v) != s.adjacent(x, y)) return false;
  return true;
}

inline bool consistent_pair(const Digraph& s,
                            const std::vector<std::pair<int, int>>& assigned,
                            int u, int x) {
  for (auto [v, y] : assigned) {
    if (s.arc(u, v) != s.arc(x, y)) return false;
    if (s.arc(v, u) != s.arc(y, x)) return false;
  }
  return true;
}

inline bool consistent_pair(const Hypergraph& s,
                            const std::vector<std::pair<int, int>>& assigned,
                            int u, int x) {
  int k = static_cast<int>(assigned.size());
  if (k < s.r - 1) return true;
  // all (r-1)-subsets of the assigned pairs, extended by (u,x)
  std::vector<int> idx(s.r - 1);
  for (int i = 0; i < s.r - 1; ++i) idx[i] = i;
  while (true) {
    std::vector<int> t{u}, ft{x};
    for (int i : idx) {
      t.push_back(assigned[i].first);
      ft.push_back(assigned[i].second);
    }
    if (s.has_edge(t) != s.has_edge(ft)) return false;
    int i = s.r - 2;
    while (i >= 0 && idx[i] == k - (s.r - 1) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s.r - 1; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

template <class S, class F>
void images_backtrack(const S& s, const std::vector<int>& dom, size_t t,
                      std::vector<std::pair<int, int>>& assigned,
                      std::vector<char>& used, F&& fn) {
  if (t == dom.size()) {
    PartialMap pm;
    pm.pairs = assigned;  // sorted by source, injective by construction
    fn(pm);
    return;
  }
  int u = dom[t];
  for (int x = 0; x < s.n; ++x) {
    if (used[x] || !consistent_pair(s, assigned, u, x)) continue;
    used[x] = 1;
    assigned.emplace_back(u, x);
    images_backtrack(s, dom, t + 1, assigned, used, fn);
    assigned.pop_back();
    used[x] = 0;
  }
}

}  // namespace detail

// Yields every partial automorphism with |dom| <= max_size exactly once.
// Order: domain subsets in colex order (= ascending bitmask), images
// lexicographic within each domain. max_size < 0 means unbounded.
template <class S, class F>
void for_each_partial_auto(const S& s, int max_size, F&& fn) {
  if (s.n > 20)
    throw CapacityError("partial automorphism enumeration needs n <= 20, got " +
                        std::to_string(s.n));
  unsigned cap = (max_size < 0 || max_size > s.n) ? s.n : max_size;
  std::vector<std::pair<int, int>> assigned;
  std::vector<char> used(s.n, 0);
  for (uint64_t mask = 0; mask < (uint64_t{1} << s.n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) > cap) continue;
    std::vector<int> dom;
    for (int v = 0; v < s.n; ++v)
      if (mask >> v & 1) dom.push_back(v);
    detail::images_backtrack(s, dom, 0, assigned, used, fn);
  }
}

template <class S>
std::vector<PartialMap> enumerate_partial_autos(const S& s,
                                                int max_size = -1) {
  std::vector<PartialMap> out;
  for_each_partial_auto(s, max_size, [&](const PartialMap& p) {
    out.push_back(p);
  });
  return out;
}

template <class S>
unsigned long long count_partial_autos(const S& s) {
  unsigned long long c = 0;
  for_each_partial_auto(s, -1, [&](const PartialMap&) { ++c; });
  return c;
}

// ---------------------------------------------------------------------------
// automorphism extension search

namespace detail {

struct HyperIncidence {
  std::vector<std::vector<int>> edges;        // sorted edges
  std::vector<std::vector<int>> inc;          // vertex -> edge indices
  std::vector<std::vector<int>> codeg;        // pair co-degrees

  explicit HyperIncidence(const Hypergraph& s)
      : edges(s.hyperedges()), inc(s.n), codeg(s.n, std::vector<int>(s.n, 0)) {
    for (size_t ei = 0; ei < edges.size(); ++ei)
      for (int v : edges[ei]) inc[v].push_back(static_cast<int>(ei));
    for (const auto& e : edges)
      for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j) {
          ++codeg[e[i]][e[j]];
          ++codeg[e[j]][e[i]];
        }
  }
};

template <class S>
struct ExtensionSearch {
  const S& s;
  int n;
  std::vector<int> colors;
  std::vector<int> img, pre;  // -1 = unassigned
  int assigned_count = 0;

  explicit ExtensionSearch(const S& s_)
      : s(s_), n(s_.n), colors(refine_colors(s_)), img(s_.n, -1),
        pre(s_.n, -1) {}

  virtual ~ExtensionSearch() = default;

  // cheap necessary condition, used while counting candidates
  virtual bool quick_ok(int u, int x) const { return full_ok(u, x); }
  // exact consistency of u -> x against everything assigned
  virtual bool full_ok(int u, int x) const = 0;

  void reset() {
    std::fill(img.begin(), img.end(), -1);
    std::fill(pre.begin(), pre.end(), -1);
    assigned_count = 0;
  }

  bool assign_seed(const PartialMap& p) {
    for (auto [u, x] : p.pairs) {
      if (colors[u] != colors[x]) return false;
      img[u] = x;
      pre[x] = u;
      ++assigned_count;
    }
    return true;
  }

  // one-shot: seed, then search; reusable across seeds on the same structure
  bool run(const PartialMap& p) {
    reset();
    if (!assign_seed(p)) return false;
    return search();
  }

  // next vertex to branch on: most-constrained unassigned, ties by index;
  // -1 signals a provably dead position
  virtual int pick_next() {
    int best_u = -1, best_cnt = -1;
    for (int u = 0; u < n; ++u) {
      if (img[u] >= 0) continue;
      int cnt = 0;
      for (int x = 0; x < n; ++x)
        if (pre[x] < 0 && colors[x] == colors[u] && quick_ok(u, x)) ++cnt;
      if (cnt == 0) return -1;
      if (best_cnt < 0 || cnt < best_cnt) {
        best_cnt = cnt;
        best_u = u;
      }
    }
    return best_u;
  }

  virtual bool search() {
    if (assigned_count == n) return true;
    int u = pick_next();
    if (u < 0) return false;
    for (int x = 0; x < n; ++x) {
      if (pre[x] >= 0 || colors[x] != colors[u]) continue;
      if (!full_ok(u, x)) continue;
      img[u] = x;
      pre[x] = u;
      ++assigned_count;
      if (search()) return true;
      img[u] = -1;
      pre[x] = -1;
      --assigned_count;
    }
    return false;
  }
};

struct GraphExtensionSearch : ExtensionSearch<Graph> {
  using ExtensionSearch::ExtensionSearch;
  bool full_ok(int u, int x) const override {
    for (int v = 0; v < n; ++v)
      if (img[v] >= 0 && s.adjacent(u, v) != s.adjacent(x, img[v]))
        return false;
    return true;
  }
};

struct DigraphExtensionSearch : ExtensionSearch<Digraph> {
  using ExtensionSearch::ExtensionSearch;
  bool full_ok(int u, int x) const override {
    for (int v = 0; v < n; ++v) {
      if (img[v] < 0) continue;
      if (s.arc(u, v) != s.arc(x, img[v])) return false;
      if (s.arc(v, u) != s.arc(img[v], x)) return false;
    }
    return true;
  }
};

struct HypergraphExtensionSearch : ExtensionSearch<Hypergraph> {
  HyperIncidence hi;
  bool use_domains;
  std::vector<uint64_t> dom;  // candidate-image bitmask per unassigned vertex

  explicit HypergraphExtensionSearch(const Hypergraph& s_)
      : ExtensionSearch(s_), hi(s_), use_domains(s_.n <= 64 && s_.r <= 8) {
    if (use_domains) {
      ekeys_.reserve(hi.edges.size());
      for (const auto& e : hi.edges) {
        uint64_t k = 0;
        for (int v : e) k = (k << 8) | static_cast<uint64_t>(v);
        ekeys_.push_back(k);
      }
      std::sort(ekeys_.begin(), ekeys_.end());
    }
  }

  bool codeg_ok(int u, int x) const {
    for (int v = 0; v < n; ++v)
      if (img[v] >= 0 && hi.codeg[u][v] != hi.codeg[x][img[v]]) return false;
    return true;
  }

  bool quick_ok(int u, int x) const override { return codeg_ok(u, x); }

  // Branch on the vertex with the most incident edges whose other endpoints
  // are already assigned. Hyperedge constraints only complete once r distinct
  // rows are touched; count-based ordering alone fills unconstrained blocks
  // first and detects contradictions only after exponential thrash.
  int pick_next() override {
    int best_u = -1, best_sup = -1, best_cnt = -1;
    for (int u = 0; u < n; ++u) {
      if (img[u] >= 0) continue;
      int sup = 0;
      for (int ei : hi.inc[u]) {
        bool complete = true;
        for (int w : hi.edges[ei])
          if (w != u && img[w] < 0) {
            complete = false;
            break;
          }
        sup += complete;
      }
      int cnt = 0;
      for (int x = 0; x < n; ++x)
        if (pre[x] < 0 && colors[x] == colors[u] && codeg_ok(u, x)) ++cnt;
      if (cnt == 0) return -1;
      if (best_u < 0 || sup > best_sup ||
          (sup == best_sup && cnt < best_cnt)) {
        best_u = u;
        best_sup = sup;
        best_cnt = cnt;
      }
    }
    return best_u;
  }

  bool full_ok(int u, int x) const override {
    if (!codeg_ok(u, x)) return false;
    // edges through u contained in assigned+u must map to edges ...
    for (int ei : hi.inc[u]) {
      const auto& e = hi.edges[ei];
      buf_.clear();
      bool complete = true;
      for (int w : e) {
        int fw = (w == u) ? x : img[w];
        if (fw < 0) {
          complete = false;
          break;
        }
        buf_.push_back(fw);
      }
      if (!complete) continue;
      if (!edge_member()) return false;
    }
    // ... and edges through x contained in image+x must pull back to edges
    for (int ei : hi.inc[x]) {
      const auto& e = hi.edges[ei];
      buf_.clear();
      bool complete = true;
      for (int w : e) {
        int pw = (w == x) ? u : pre[w];
        if (pw < 0) {
          complete = false;
          break;
        }
        buf_.push_back(pw);
      }
      if (!complete) continue;
      if (!edge_member()) return false;
    }
    return true;
  }

  // Bitset-domain search (n <= 64). Tuple constraints activate only once all
  // but one endpoint is placed, so plain backtracking discovers contradictions
  // long after the bad choice; here every edge filters the domain of its last
  // open endpoint the moment it reaches one hole, in both directions.
  bool search() override {
    if (!use_domains) return ExtensionSearch::search();
    dom.assign(n, 0);
    for (int u = 0; u < n; ++u) {
      if (img[u] >= 0) continue;
      for (int x = 0; x < n; ++x)
        if (pre[x] < 0 && colors[x] == colors[u] && full_ok(u, x))
          dom[u] |= uint64_t{1} << x;
      if (!dom[u]) return false;
    }
    return domain_search();
  }

 private:
  struct DomTrim {
    int w;
    uint64_t removed;
  };

  // membership of the (unsorted) tuple in buf_ among the hyperedges; packed
  // 64-bit keys when available, lexicographic vectors otherwise
  bool edge_member() const {
    std::sort(buf_.begin(), buf_.end());
    if (!ekeys_.empty()) {
      uint64_t k = 0;
      for (int v : buf_) k = (k << 8) | static_cast<uint64_t>(v);
      return std::binary_search(ekeys_.begin(), ekeys_.end(), k);
    }
    return std::binary_search(hi.edges.begin(), hi.edges.end(), buf_);
  }

  // prunes domains against constraints completed by the assignment u -> x
  // (img/pre already updated); records removals for backtracking
  bool propagate(int u, int x, std::vector<DomTrim>& trail) {
    const uint64_t xbit = uint64_t{1} << x;
    for (int w = 0; w < n; ++w)
      if (img[w] < 0 && (dom[w] & xbit)) {
        trail.push_back({w, xbit});
        dom[w] &= ~xbit;
        if (!dom[w]) return false;
      }
    // pairwise: automorphisms preserve codegrees, so every open vertex must
    // keep the codegree it has with u under the images
    for (int w = 0; w < n; ++w) {
      if (img[w] >= 0) continue;
      uint64_t keep = 0;
      for (uint64_t cands = dom[w]; cands;) {
        int y = __builtin_ctzll(cands);
        cands &= cands - 1;
        if (hi.codeg[w][u] == hi.codeg[y][x]) keep |= uint64_t{1} << y;
      }
      if (uint64_t removed = dom[w] & ~keep) {
        trail.push_back({w, removed});
        dom[w] = keep;
        if (!keep) return false;
      }
    }
    // base side: edges through u now at one hole pin that hole's images
    for (int ei : hi.inc[u]) {
      const auto& e = hi.edges[ei];
      int hole = -1;
      bool active = true;
      for (int w : e)
        if (img[w] < 0) {
          if (hole >= 0) {
            active = false;
            break;
          }
          hole = w;
        }
      if (!active || hole < 0) continue;
      uint64_t keep = 0;
      for (uint64_t cands = dom[hole]; cands;) {
        int y = __builtin_ctzll(cands);
        cands &= cands - 1;
        buf_.clear();
        for (int w : e) buf_.push_back(w == hole ? y : img[w]);
        if (edge_member()) keep |= uint64_t{1} << y;
      }
      if (uint64_t removed = dom[hole] & ~keep) {
        trail.push_back({hole, removed});
        dom[hole] = keep;
        if (!keep) return false;
      }
    }
    // image side: host edges through x at one preimage hole reject sources
    // whose completed tuple fails to be an edge
    for (int ei : hi.inc[x]) {
      const auto& e = hi.edges[ei];
      int hole = -1;
      bool active = true;
      for (int z : e)
        if (pre[z] < 0) {
          if (hole >= 0) {
            active = false;
            break;
          }
          hole = z;
        }
      if (!active || hole < 0) continue;
      const uint64_t hbit = uint64_t{1} << hole;
      for (int w = 0; w < n; ++w) {
        if (img[w] >= 0 || !(dom[w] & hbit)) continue;
        buf_.clear();
        for (int z : e) buf_.push_back(z == hole ? w : pre[z]);
        if (!edge_member()) {
          trail.push_back({w, hbit});
          dom[w] &= ~hbit;
          if (!dom[w]) return false;
        }
      }
    }
    return true;
  }

  // Branch on forced vertices first; otherwise on the vertex whose assignment
  // brings the most edges down to one hole, so propagation engages right away.
  // Plain fail-first ordering walks through whole blocks that share no edge
  // (tuples need r distinct blocks) and only then hits the contradictions.
  bool domain_search() {
    if (assigned_count == n) return true;
    int u = -1, best_c = 0, best_imp = 0;
    for (int w = 0; w < n; ++w) {
      if (img[w] >= 0) continue;
      int c = __builtin_popcountll(dom[w]);
      if (c == 0) return false;
      int imp = 0;
      if (c > 1 && best_c != 1)
        for (int ei : hi.inc[w]) {
          int holes = 0;
          for (int v : hi.edges[ei]) holes += (img[v] < 0);
          imp += (holes == 2);
        }
      bool better;
      if (u < 0) better = true;
      else if ((c == 1) != (best_c == 1)) better = (c == 1);
      else if (imp != best_imp) better = imp > best_imp;
      else better = c < best_c;
      if (better) {
        u = w;
        best_c = c;
        best_imp = imp;
      }
    }
    for (uint64_t cands = dom[u]; cands;) {
      int x = __builtin_ctzll(cands);
      cands &= cands - 1;
      img[u] = x;
      pre[x] = u;
      ++assigned_count;
      std::vector<DomTrim> trail;
      if (propagate(u, x, trail) && domain_search()) return true;
      for (auto it = trail.rbegin(); it != trail.rend(); ++it)
        dom[it->w] |= it->removed;
      img[u] = -1;
      pre[x] = -1;
      --assigned_count;
    }
    return false;
  }

  mutable std::vector<int> buf_;
  std::vector<uint64_t> ekeys_;
};

inline GraphExtensionSearch make_extension_search(const Graph& s) {
  return GraphExtensionSearch(s);
}
inline DigraphExtensionSearch make_extension_search(const Digraph& s) {
  return DigraphExtensionSearch(s);
}
inline HypergraphExtensionSearch make_extension_search(const Hypergraph& s) {
  return HypergraphExtensionSearch(s);
}

}  // namespace detail

// Complete backtracking search for a total automorphism of s extending p.
// Returns the first extension in the deterministic search order, or nullopt
// when provably none exists.
template <class S>
std::optional<Perm> extend_to_automorphism(const S& s, const PartialMap& p) {
  if (!is_partial_automorphism(s, p))
    throw InputError("map " + p.str() +
                     " is not a partial automorphism of the host");
  auto search = detail::make_extension_search(s);
  if (!search.assign_seed(p)) return std::nullopt;
  // seed images must also be pairwise consistent beyond stable colors; the
  // PartialMap check above already guarantees that
  if (!search.search()) return std::nullopt;
  Perm out = search.img;
  if (!is_automorphism(s, out))
    throw InternalError("extension search produced a non-automorphism");
  return out;
}

// ---------------------------------------------------------------------------
// induced embedding search (exact relation match, not a subgraph search)

namespace detail {

template <class S>
int embed_degree(const S& s, int v);

template <>
inline int embed_degree<Graph>(const Graph& s, int v) { return s.degree(v); }
template <>
inline int embed_degree<Digraph>(const Digraph& s, int v) {
  return s.out_degree(v) + s.in_degree(v);
}
template <>
inline int embed_degree<Hypergraph>(const Hypergraph& s, int v) {
  int c = 0;
  for (const auto& e : s.hyperedges())
    for (int w : e) c += (w == v);
  return c;
}

inline bool embed_pair_ok(const Graph& g, const Graph& h,
                          const std::vector<std::pair<int, int>>& assigned,
                          int u, int x) {
  for (auto [v, y] : assigned)
    if (g.adjacent(u, v) != h.adjacent(x, y)) return false;
  return true;
}
inline bool embed_pair_ok(const Digraph& g, const Digraph& h,
                          const std::vector<std::pair<int, int>>& assigned,
                          int u, int x) {
  for (auto [v, y] : assigned) {
    if (g.arc(u, v) != h.arc(x, y)) return false;
    if (g.arc(v, u) != h.arc(y, x)) return false;
  }
  return true;
}
inline bool embed_pair_ok(const Hypergraph& g, const Hypergraph& h,
                          const std::vector<std::pair<int, int>>& assigned,
                          int u, int x) {
  if (g.r != h.r) return false;
  int k = static_cast<int>(assigned.size());
  if (k < g.r - 1) return true;
  std::vector<int> idx(g.r - 1);
  for (int i = 0; i < g.r - 1; ++i) idx[i] = i;
  while (true) {
    std::vector<int> t{u}, ft{x};
    for (int i : idx) {
      t.push_back(assigned[i].first);
      ft.push_back(assigned[i].second);
    }
    if (g.has_edge(t) != h.has_edge(ft)) return false;
    int i = g.r - 2;
    while (i >= 0 && idx[i] == k - (g.r - 1) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < g.r - 1; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

template <class S>
bool embed_backtrack(const S& g, const S& h,
                     std::vector<std::pair<int, int>>& assigned,
                     std::vector<char>& used, std::vector<int>& result) {
  if (static_cast<int>(assigned.size()) == g.n) {
    result.assign(g.n, -1);
    for (auto [u, x] : assigned) result[u] = x;
    return true;
  }
  // most-constrained unmapped vertex of g
  int best_u = -1, best_cnt = -1;
  std::vector<char> mapped(g.n, 0);
  for (auto& [u, x] : assigned) mapped[u] = 1;
  for (int u = 0; u < g.n; ++u) {
    if (mapped[u]) continue;
    int cnt = 0;
    for (int x = 0; x < h.n; ++x)
      if (!used[x] && embed_degree(h, x) >= embed_degree(g, u) &&
          embed_pair_ok(g, h, assigned, u, x))
        ++cnt;
    if (best_cnt < 0 || cnt < best_cnt) {
      best_cnt = cnt;
      best_u = u;
      if (cnt == 0) return false;
    }
  }
  int u = best_u;
  for (int x = 0; x < h.n; ++x) {
    if (used[x] || embed_degree(h, x) < embed_degree(g, u) ||
        !embed_pair_ok(g, h, assigned, u, x))
      continue;
    used[x] = 1;
    assigned.emplace_back(u, x);
    if (embed_backtrack(g, h, assigned, used, result)) return true;
    assigned.pop_back();
    used[x] = 0;
  }
  return false;
}

}  // namespace detail

// injective map from g's vertices to h's with exact relation agreement on
// every tuple (an isomorphism onto an induced substructure of h)
template <class S>
std::optional<std::vector<int>> find_induced_embedding(const S& g,
                                                       const S& h) {
  if (g.n > h.n) return std::nullopt;
  std::vector<std::pair<int, int>> assigned;
  std::vector<char> used(h.n, 0);
  std::vector<int> result;
  if (detail::embed_backtrack(g, h, assigned, used, result))
    return result;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// orbits / vertex transitivity

template <class S>
std::vector<int> orbit_of_vertex(const S& s, int v) {
  detail::check_vertex(v, s.n);
  std::vector<int> orbit;
  for (int x = 0; x < s.n; ++x) {
    PartialMap p = PartialMap::from_pairs({{v, x}});
    if (extend_to_automorphism(s, p)) orbit.push_back(x);
  }
  return orbit;
}

template <class S>
bool is_vertex_transitive(const S& s) {
  if (s.n == 0) return true;
  return static_cast<int>(orbit_of_vertex(s, 0).size()) == s.n;
}

}  // namespace eppa
