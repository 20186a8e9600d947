#pragma once

// Core combinatorial types on dense vertex sets {0..n-1}: Graph, Digraph,
// r-uniform Hypergraph, partial maps between them. Everything is a plain
// value type; operations never mutate their inputs.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eppa {

// Error taxonomy:
//   InputError    - bad arguments or structures handed in by the caller
//   CapacityError - a configured cap (size, host count, timeout) was exceeded
//   ParseError    - malformed input file, message carries the line number
//   InternalError - an invariant that should be unbreakable broke; abort loudly
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

inline void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(n) + ")");
}

// n x n bit matrix backed by 64-bit words.
struct BitMatrix {
  int n = 0;
  int wpr = 0;  // words per row
  std::vector<uint64_t> bits;

  BitMatrix() = default;
  explicit BitMatrix(int n_) : n(n_), wpr((n_ + 63) / 64) {
    // hosts are materialized with a full matrix; keep memory bounded (~256MB)
    if (static_cast<size_t>(n) * wpr > (size_t{1} << 25))
      throw CapacityError("structure on " + std::to_string(n) +
                          " vertices is too large to materialize");
    bits.assign(static_cast<size_t>(n) * wpr, 0);
  }
  bool get(int i, int j) const {
    return (bits[static_cast<size_t>(i) * wpr + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(int i, int j) {
    bits[static_cast<size_t>(i) * wpr + (j >> 6)] |= uint64_t{1} << (j & 63);
  }
  void reset(int i, int j) {
    bits[static_cast<size_t>(i) * wpr + (j >> 6)] &= ~(uint64_t{1} << (j & 63));
  }
  bool operator==(const BitMatrix& o) const {
    return n == o.n && bits == o.bits;
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------

struct Graph {
  int n = 0;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj_(n_) {
    if (n_ < 0) throw InputError("negative vertex count");
  }
  Graph(int n_, const std::vector<std::pair<int, int>>& es) : Graph(n_) {
    for (auto [u, v] : es) add_edge(u, v);
  }

  void add_edge(int u, int v) {
    detail::check_vertex(u, n);
    detail::check_vertex(v, n);
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (adj_.get(u, v))
      throw InputError("duplicate edge {" + std::to_string(u) + "," +
                       std::to_string(v) + "}");
    adj_.set(u, v);
    adj_.set(v, u);
    ++m_;
  }

  bool adjacent(int u, int v) const { return adj_.get(u, v); }
  int m() const { return m_; }

  int degree(int v) const {
    int d = 0;
    for (int u = 0; u < n; ++u) d += adj_.get(v, u);
    return d;
  }
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n; ++u)
      if (adj_.get(v, u)) out.push_back(u);
    return out;
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj_.get(u, v)) out.emplace_back(u, v);
    return out;
  }
  bool operator==(const Graph& o) const { return n == o.n && adj_ == o.adj_; }

 private:
  detail::BitMatrix adj_;
  int m_ = 0;
};

struct Digraph {
  int n = 0;

  Digraph() = default;
  explicit Digraph(int n_) : n(n_), arc_(n_) {
    if (n_ < 0) throw InputError("negative vertex count");
  }
  Digraph(int n_, const std::vector<std::pair<int, int>>& as) : Digraph(n_) {
    for (auto [u, v] : as) add_arc(u, v);
  }

  void add_arc(int u, int v) {
    detail::check_vertex(u, n);
    detail::check_vertex(v, n);
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (arc_.get(u, v))
      throw InputError("duplicate arc (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    arc_.set(u, v);
    ++m_;
  }

  bool arc(int u, int v) const { return arc_.get(u, v); }
  int m() const { return m_; }

  int out_degree(int v) const {
    int d = 0;
    for (int u = 0; u < n; ++u) d += arc_.get(v, u);
    return d;
  }
  int in_degree(int v) const {
    int d = 0;
    for (int u = 0; u < n; ++u) d += arc_.get(u, v);
    return d;
  }
  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (arc_.get(u, v)) out.emplace_back(u, v);
    return out;
  }
  bool operator==(const Digraph& o) const { return n == o.n && arc_ == o.arc_; }

 private:
  detail::BitMatrix arc_;
  int m_ = 0;
};

struct Hypergraph {
  int n = 0;
  int r = 0;

  Hypergraph() = default;
  Hypergraph(int n_, int r_) : n(n_), r(r_) {
    if (n_ < 0) throw InputError("negative vertex count");
    if (r_ < 1) throw InputError("uniformity must be >= 1");
  }
  Hypergraph(int n_, int r_, const std::vector<std::vector<int>>& es)
      : Hypergraph(n_, r_) {
    for (const auto& e : es) add_edge(e);
  }

  void add_edge(std::vector<int> e) {
    if (static_cast<int>(e.size()) != r)
      throw InputError("hyperedge arity " + std::to_string(e.size()) +
                       " != " + std::to_string(r));
    for (int v : e) detail::check_vertex(v, n);
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InputError("hyperedge with repeated vertex");
    if (!edges_.insert(std::move(e)).second)
      throw InputError("duplicate hyperedge");
  }

  // accepts the vertices in any order
  bool has_edge(std::vector<int> e) const {
    std::sort(e.begin(), e.end());
    return edges_.count(e) > 0;
  }
  int m() const { return static_cast<int>(edges_.size()); }
  // sorted lexicographically, each edge sorted internally
  std::vector<std::vector<int>> hyperedges() const {
    return {edges_.begin(), edges_.end()};
  }
  bool operator==(const Hypergraph& o) const {
    return n == o.n && r == o.r && edges_ == o.edges_;
  }

 private:
  std::set<std::vector<int>> edges_;
};

// ---------------------------------------------------------------------------
// induced substructures & complement

namespace detail {
// validates V and returns it sorted; rejects duplicates and range errors
inline std::vector<int> sorted_vertex_subset(std::vector<int> vs, int n) {
  for (int v : vs) check_vertex(v, n);
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw InputError("vertex subset with duplicates");
  return vs;
}
}  // namespace detail

inline Graph induced_substructure(const Graph& g, std::vector<int> vs) {
  vs = detail::sorted_vertex_subset(std::move(vs), g.n);
  Graph out(static_cast<int>(vs.size()));
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

inline Digraph induced_substructure(const Digraph& g, std::vector<int> vs) {
  vs = detail::sorted_vertex_subset(std::move(vs), g.n);
  Digraph out(static_cast<int>(vs.size()));
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j)
      if (i != j && g.arc(vs[i], vs[j]))
        out.add_arc(static_cast<int>(i), static_cast<int>(j));
  return out;
}

inline Hypergraph induced_substructure(const Hypergraph& g,
                                       std::vector<int> vs) {
  vs = detail::sorted_vertex_subset(std::move(vs), g.n);
  Hypergraph out(static_cast<int>(vs.size()), g.r);
  // position of each picked vertex in the relabeling
  std::vector<int> pos(g.n, -1);
  for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  for (const auto& e : g.hyperedges()) {
    std::vector<int> img;
    img.reserve(e.size());
    for (int v : e) {
      if (pos[v] < 0) break;
      img.push_back(pos[v]);
    }
    if (img.size() == e.size()) out.add_edge(img);
  }
  return out;
}

inline Graph complement(const Graph& g) {
  Graph out(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

// ---------------------------------------------------------------------------
// partial maps

// A finite injective partial function on vertex indices, kept sorted by
// source. Whether it is a partial automorphism of a structure is checked by
// is_partial_automorphism / make_partial_iso below.
struct PartialMap {
  std::vector<std::pair<int, int>> pairs;  // (source, image), sorted by source

  PartialMap() = default;

  static PartialMap from_pairs(std::vector<std::pair<int, int>> ps) {
    std::sort(ps.begin(), ps.end());
    for (size_t i = 0; i + 1 < ps.size(); ++i)
      if (ps[i].first == ps[i + 1].first)
        throw InputError("partial map defined twice at " +
                         std::to_string(ps[i].first));
    std::vector<int> imgs;
    for (auto& p : ps) imgs.push_back(p.second);
    std::sort(imgs.begin(), imgs.end());
    if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end())
      throw InputError("partial map not injective");
    PartialMap pm;
    pm.pairs = std::move(ps);
    return pm;
  }

  int size() const { return static_cast<int>(pairs.size()); }
  bool empty() const { return pairs.empty(); }

  // -1 when undefined
  int image(int u) const {
    for (auto& [s, t] : pairs)
      if (s == u) return t;
    return -1;
  }
  bool defined(int u) const { return image(u) >= 0; }

  std::vector<int> dom() const {
    std::vector<int> out;
    for (auto& p : pairs) out.push_back(p.first);
    return out;
  }
  std::vector<int> rng() const {
    std::vector<int> out;
    for (auto& p : pairs) out.push_back(p.second);
    std::sort(out.begin(), out.end());
    return out;
  }

  PartialMap inverse() const {
    std::vector<std::pair<int, int>> inv;
    inv.reserve(pairs.size());
    for (auto& [s, t] : pairs) inv.emplace_back(t, s);
    return from_pairs(std::move(inv));
  }

  bool operator==(const PartialMap& o) const { return pairs == o.pairs; }
  bool operator<(const PartialMap& o) const { return pairs < o.pairs; }

  std::string str() const {
    std::string s = "{";
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(pairs[i].first) + "->" +
           std::to_string(pairs[i].second);
    }
    return s + "}";
  }
};

// g after f, defined where f's image lies in dom(g)
inline PartialMap compose(const PartialMap& g, const PartialMap& f) {
  std::vector<std::pair<int, int>> out;
  for (auto& [s, t] : f.pairs) {
    int u = g.image(t);
    if (u >= 0) out.emplace_back(s, u);
  }
  return PartialMap::from_pairs(std::move(out));
}

// exactly composable in the coherence sense: rng(f) = dom(g)
inline bool exactly_composable(const PartialMap& g, const PartialMap& f) {
  return f.rng() == g.dom();
}

// relation agreement on every tuple inside dom (the map is already injective)
inline bool preserves_relations(const Graph& s, const PartialMap& p) {
  for (size_t i = 0; i < p.pairs.size(); ++i)
    for (size_t j = i + 1; j < p.pairs.size(); ++j) {
      auto [u, fu] = p.pairs[i];
      auto [v, fv] = p.pairs[j];
      if (s.adjacent(u, v) != s.adjacent(fu, fv)) return false;
    }
  return true;
}

inline bool preserves_relations(const Digraph& s, const PartialMap& p) {
  for (size_t i = 0; i < p.pairs.size(); ++i)
    for (size_t j = 0; j < p.pairs.size(); ++j) {
      if (i == j) continue;
      auto [u, fu] = p.pairs[i];
      auto [v, fv] = p.pairs[j];
      if (s.arc(u, v) != s.arc(fu, fv)) return false;
    }
  return true;
}

inline bool preserves_relations(const Hypergraph& s, const PartialMap& p) {
  int k = p.size();
  if (k < s.r) return true;
  // all r-subsets of the domain
  std::vector<int> idx(s.r);
  for (int i = 0; i < s.r; ++i) idx[i] = i;
  while (true) {
    std::vector<int> t, ft;
    for (int i : idx) {
      t.push_back(p.pairs[i].first);
      ft.push_back(p.pairs[i].second);
    }
    if (s.has_edge(t) != s.has_edge(ft)) return false;
    int i = s.r - 1;
    while (i >= 0 && idx[i] == k - s.r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s.r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

template <class S>
bool is_partial_automorphism(const S& s, const PartialMap& p) {
  for (auto& [u, v] : p.pairs) {
    if (u < 0 || u >= s.n || v < 0 || v >= s.n) return false;
  }
  return preserves_relations(s, p);
}

// validated constructor: throws InputError unless p is a partial automorphism
template <class S>
PartialMap make_partial_iso(const S& s,
                            std::vector<std::pair<int, int>> pairs) {
  PartialMap p = PartialMap::from_pairs(std::move(pairs));
  if (!is_partial_automorphism(s, p))
    throw InputError("map " + p.str() + " is not a partial automorphism");
  return p;
}

}  // namespace eppa
