#pragma once

// Kneser-style witnesses. The edge universe E' regularizes a graph to degree
// d with half-edge tokens; the host has one vertex per d-subset of E' with
// X ~ Y iff the subsets intersect, and psi(v) is the set of elements at v.
// Any permutation of E' acts on d-subsets as a host automorphism, and a
// partial automorphism of the base lifts to one such permutation. The
// relational variant for digraphs uses ordered pairs (out-set, in-set) of
// d-subsets over arcs plus out/in tokens.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eppa/automorphisms.hpp"
#include "eppa/bigint.hpp"
#include "eppa/structures.hpp"
#include "eppa/witness.hpp"

namespace eppa {

inline constexpr long long kDefaultKneserCap = 1000000;

inline BigInt kneser_size_bound(long long n, long long m, long long d) {
  if (n < 1 || m < 0 || d < 1) throw InputError("bad kneser bound parameters");
  if (d * n < m + d)
    throw InputError("kneser bound needs dn >= m + d");
  return binomial(d * n - m, d);
}

namespace detail {

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

inline bool subsets_intersect(const std::vector<int>& a,
                              const std::vector<int>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace detail

struct EdgeUniverse {
  int n = 0;
  int d = 0;
  int edges = 0;  // elements 0..edges-1 are the graph edges, in edge order
  std::vector<std::pair<int, int>> endpoints;  // (u,v) edges; (v,-1-t) tokens
  std::vector<std::vector<int>> incident;      // vertex -> sorted element ids

  int size() const { return static_cast<int>(endpoints.size()); }
};

inline EdgeUniverse build_edge_universe(const Graph& g, int d) {
  int maxdeg = 0;
  for (int v = 0; v < g.n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
  if (d < 2) throw InputError("edge universe needs d >= 2");
  if (d < maxdeg)
    throw InputError("edge universe needs d >= max degree " +
                     std::to_string(maxdeg));
  EdgeUniverse u;
  u.n = g.n;
  u.d = d;
  u.edges = g.m();
  u.incident.resize(g.n);
  for (auto [a, b] : g.edges()) {
    int id = static_cast<int>(u.endpoints.size());
    u.endpoints.emplace_back(a, b);
    u.incident[a].push_back(id);
    u.incident[b].push_back(id);
  }
  for (int v = 0; v < g.n; ++v)
    for (int t = 0; t < d - g.degree(v); ++t) {
      int id = static_cast<int>(u.endpoints.size());
      u.endpoints.emplace_back(v, -1 - t);
      u.incident[v].push_back(id);
    }
  return u;
}

// lifts a partial automorphism of g to a permutation of the edge universe:
// (a) edges inside dom map to their image edges, (b) the leftover elements
// at each dom vertex map to the leftover elements at its image in sorted
// order, (c) untouched elements map to untouched elements in sorted order
inline Perm kneser_element_permutation(const Graph& g, const EdgeUniverse& u,
                                       const PartialMap& p) {
  if (!is_partial_automorphism(g, p))
    throw InputError("map is not a partial automorphism of the base graph");
  std::vector<char> in_dom(g.n, 0), in_rng(g.n, 0);
  for (auto [a, b] : p.pairs) {
    in_dom[a] = 1;
    in_rng[b] = 1;
  }
  std::map<std::pair<int, int>, int> edge_id;
  for (int e = 0; e < u.edges; ++e) edge_id[u.endpoints[e]] = e;
  Perm sigma(u.size(), -1);
  std::vector<char> used(u.size(), 0);
  for (int e = 0; e < u.edges; ++e) {
    auto [a, b] = u.endpoints[e];
    if (!in_dom[a] || !in_dom[b]) continue;
    int x = p.image(a), y = p.image(b);
    auto it = edge_id.find({std::min(x, y), std::max(x, y)});
    if (it == edge_id.end())
      throw InternalError("partial automorphism lost an edge");
    sigma[e] = it->second;
    used[it->second] = 1;
  }
  for (auto [v, w] : p.pairs) {
    std::vector<int> src, tgt;
    for (int e : u.incident[v])
      if (sigma[e] < 0) src.push_back(e);
    for (int e : u.incident[w])
      if (!used[e]) tgt.push_back(e);
    if (src.size() != tgt.size())
      throw InternalError("leftover counts differ at vertex " +
                          std::to_string(v));
    for (size_t i = 0; i < src.size(); ++i) {
      sigma[src[i]] = tgt[i];
      used[tgt[i]] = 1;
    }
  }
  std::vector<int> rest_src, rest_tgt;
  for (int e = 0; e < u.size(); ++e) {
    if (sigma[e] < 0) rest_src.push_back(e);
    if (!used[e]) rest_tgt.push_back(e);
  }
  for (size_t i = 0; i < rest_src.size(); ++i) sigma[rest_src[i]] = rest_tgt[i];
  if (!is_permutation(sigma))
    throw InternalError("element lift is not a permutation");
  return sigma;
}

namespace detail {

struct SubsetTable {
  std::vector<std::vector<int>> subsets;  // lex order
  std::map<std::vector<int>, int> index;

  void build(int n, int k) {
    subsets = k_subsets(n, k);
    for (size_t i = 0; i < subsets.size(); ++i)
      index[subsets[i]] = static_cast<int>(i);
  }

  int rank(std::vector<int> s) const {
    std::sort(s.begin(), s.end());
    auto it = index.find(s);
    if (it == index.end()) throw InternalError("subset missing from table");
    return it->second;
  }

  std::vector<int> apply(const Perm& sigma, int at) const {
    std::vector<int> img;
    img.reserve(subsets[at].size());
    for (int e : subsets[at]) img.push_back(sigma[e]);
    std::sort(img.begin(), img.end());
    return img;
  }
};

inline std::string element_label(const EdgeUniverse& u, int e) {
  auto [a, b] = u.endpoints[e];
  if (b >= 0)
    return "e(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
  return "h(" + std::to_string(a + 1) + "," + std::to_string(-b) + ")";
}

}  // namespace detail

inline Witness<Graph> build_kneser_witness(const Graph& g, int d = -1,
                                           long long cap = kDefaultKneserCap) {
  int maxdeg = 0;
  for (int v = 0; v < g.n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
  if (d < 0) d = std::max(2, maxdeg);
  EdgeUniverse u = build_edge_universe(g, d);
  BigInt count = binomial(u.size(), d);
  if (count > cap)
    throw CapacityError("kneser witness would have " + count.str() +
                        " vertices, cap is " + std::to_string(cap));
  auto tab = std::make_shared<detail::SubsetTable>();
  tab->build(u.size(), d);
  int host_n = static_cast<int>(tab->subsets.size());
  Graph host(host_n);
  for (int a = 0; a < host_n; ++a)
    for (int b = a + 1; b < host_n; ++b)
      if (detail::subsets_intersect(tab->subsets[a], tab->subsets[b]))
        host.add_edge(a, b);
  Witness<Graph> w;
  w.base = g;
  w.host = std::move(host);
  w.embedding.reserve(g.n);
  for (int v = 0; v < g.n; ++v) w.embedding.push_back(tab->rank(u.incident[v]));
  w.host_labels.reserve(host_n);
  for (int a = 0; a < host_n; ++a) {
    std::string lab = "{";
    for (size_t i = 0; i < tab->subsets[a].size(); ++i) {
      if (i) lab += ", ";
      lab += detail::element_label(u, tab->subsets[a][i]);
    }
    lab += "}";
    w.host_labels.push_back(lab);
  }
  w.tag = "kneser";
  w.extender = [g, u, tab, host_n](const PartialMap& p) {
    Perm sigma = kneser_element_permutation(g, u, p);
    Perm out(host_n);
    for (int at = 0; at < host_n; ++at) out[at] = tab->rank(tab->apply(sigma, at));
    return out;
  };
  return w;
}

struct KneserGraphBound {
  BigInt direct;
  BigInt complemented;
  BigInt best;
  int d_direct = 0;
  int d_complement = 0;
};

// the complement of a witness for the complement graph is a witness, so the
// bound may be instantiated on either side; both defaults use max(2, maxdeg)
inline KneserGraphBound kneser_graph_bound(const Graph& g, int d = -1) {
  KneserGraphBound out;
  Graph co = complement(g);
  int deg = 0, codeg = 0;
  for (int v = 0; v < g.n; ++v) {
    deg = std::max(deg, g.degree(v));
    codeg = std::max(codeg, co.degree(v));
  }
  out.d_direct = d < 0 ? std::max(2, deg) : d;
  if (out.d_direct < deg)
    throw InputError("kneser bound needs d >= max degree");
  out.d_complement = std::max(2, codeg);
  out.direct = kneser_size_bound(g.n, g.m(), out.d_direct);
  out.complemented = kneser_size_bound(g.n, co.m(), out.d_complement);
  out.best = std::min(out.direct, out.complemented);
  return out;
}

// ---------------------------------------------------------------------------
// relational variant at r = 2: arcs, out/in tokens, ordered subset pairs

struct ArcUniverse {
  int n = 0;
  int d = 0;
  int arcs = 0;  // elements 0..arcs-1 are the arcs, in arc order
  std::vector<std::pair<int, int>> ends;  // (u,v) arcs; (v,-1-t)/(v,-1001-t) tokens
  std::vector<std::vector<int>> out_inc;  // vertex -> sorted out element ids
  std::vector<std::vector<int>> in_inc;   // vertex -> sorted in element ids

  int size() const { return static_cast<int>(ends.size()); }
};

inline ArcUniverse build_arc_universe(const Digraph& g, int d) {
  int maxdeg = 0;
  for (int v = 0; v < g.n; ++v)
    maxdeg = std::max({maxdeg, g.out_degree(v), g.in_degree(v)});
  if (d < 2) throw InputError("arc universe needs d >= 2");
  if (d < maxdeg)
    throw InputError("arc universe needs d >= max out/in degree " +
                     std::to_string(maxdeg));
  ArcUniverse u;
  u.n = g.n;
  u.d = d;
  u.arcs = g.m();
  u.out_inc.resize(g.n);
  u.in_inc.resize(g.n);
  for (auto [a, b] : g.arcs()) {
    int id = static_cast<int>(u.ends.size());
    u.ends.emplace_back(a, b);
    u.out_inc[a].push_back(id);
    u.in_inc[b].push_back(id);
  }
  for (int v = 0; v < g.n; ++v)
    for (int t = 0; t < d - g.out_degree(v); ++t) {
      int id = static_cast<int>(u.ends.size());
      u.ends.emplace_back(v, -1 - t);
      u.out_inc[v].push_back(id);
    }
  for (int v = 0; v < g.n; ++v)
    for (int t = 0; t < d - g.in_degree(v); ++t) {
      int id = static_cast<int>(u.ends.size());
      u.ends.emplace_back(v, -1001 - t);
      u.in_inc[v].push_back(id);
    }
  return u;
}

inline Perm relational_element_permutation(const Digraph& g,
                                           const ArcUniverse& u,
                                           const PartialMap& p) {
  if (!is_partial_automorphism(g, p))
    throw InputError("map is not a partial automorphism of the base digraph");
  std::vector<char> in_dom(g.n, 0);
  for (auto [a, b] : p.pairs) in_dom[a] = 1;
  std::map<std::pair<int, int>, int> arc_id;
  for (int e = 0; e < u.arcs; ++e) arc_id[u.ends[e]] = e;
  Perm sigma(u.size(), -1);
  std::vector<char> used(u.size(), 0);
  for (int e = 0; e < u.arcs; ++e) {
    auto [a, b] = u.ends[e];
    if (!in_dom[a] || !in_dom[b]) continue;
    auto it = arc_id.find({p.image(a), p.image(b)});
    if (it == arc_id.end())
      throw InternalError("partial automorphism lost an arc");
    sigma[e] = it->second;
    used[it->second] = 1;
  }
  auto match_leftovers = [&](const std::vector<int>& src_all,
                             const std::vector<int>& tgt_all, int v) {
    std::vector<int> src, tgt;
    for (int e : src_all)
      if (sigma[e] < 0) src.push_back(e);
    for (int e : tgt_all)
      if (!used[e]) tgt.push_back(e);
    if (src.size() != tgt.size())
      throw InternalError("leftover counts differ at vertex " +
                          std::to_string(v));
    for (size_t i = 0; i < src.size(); ++i) {
      sigma[src[i]] = tgt[i];
      used[tgt[i]] = 1;
    }
  };
  for (auto [v, w] : p.pairs) {
    match_leftovers(u.out_inc[v], u.out_inc[w], v);
    match_leftovers(u.in_inc[v], u.in_inc[w], v);
  }
  std::vector<int> rest_src, rest_tgt;
  for (int e = 0; e < u.size(); ++e) {
    if (sigma[e] < 0) rest_src.push_back(e);
    if (!used[e]) rest_tgt.push_back(e);
  }
  for (size_t i = 0; i < rest_src.size(); ++i) sigma[rest_src[i]] = rest_tgt[i];
  if (!is_permutation(sigma))
    throw InternalError("element lift is not a permutation");
  return sigma;
}

namespace detail {

inline std::string arc_element_label(const ArcUniverse& u, int e) {
  auto [a, b] = u.ends[e];
  if (b >= 0)
    return "a(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
  if (b > -1001) return "o(" + std::to_string(a + 1) + "," + std::to_string(-b) + ")";
  return "i(" + std::to_string(a + 1) + "," + std::to_string(-b - 1000) + ")";
}

}  // namespace detail

// host vertices are all ordered pairs (A, B) of d-subsets; arc P -> Q iff
// the out-set of P meets the in-set of Q (self-meets carry no loop: removing
// every loop is invariant under the subset action)
inline Witness<Digraph> build_relational_kneser_witness(
    const Digraph& g, int d = -1, long long cap = kDefaultKneserCap) {
  int maxdeg = 0;
  for (int v = 0; v < g.n; ++v)
    maxdeg = std::max({maxdeg, g.out_degree(v), g.in_degree(v)});
  if (d < 0) d = std::max(2, maxdeg);
  ArcUniverse u = build_arc_universe(g, d);
  BigInt side = binomial(u.size(), d);
  BigInt total = side * side;
  if (total > cap)
    throw CapacityError("relational kneser witness would have " + total.str() +
                        " vertices, cap is " + std::to_string(cap));
  auto tab = std::make_shared<detail::SubsetTable>();
  tab->build(u.size(), d);
  int s = static_cast<int>(tab->subsets.size());
  int host_n = s * s;
  Digraph host(host_n);
  for (int pa = 0; pa < s; ++pa)
    for (int qb = 0; qb < s; ++qb) {
      if (!detail::subsets_intersect(tab->subsets[pa], tab->subsets[qb]))
        continue;
      // every P = (pa, *) points at every Q = (*, qb), loops skipped
      for (int pb = 0; pb < s; ++pb)
        for (int qa = 0; qa < s; ++qa) {
          int from = pa * s + pb, to = qa * s + qb;
          if (from != to) host.add_arc(from, to);
        }
    }
  Witness<Digraph> w;
  w.base = g;
  w.host = std::move(host);
  w.embedding.reserve(g.n);
  for (int v = 0; v < g.n; ++v)
    w.embedding.push_back(tab->rank(u.out_inc[v]) * s + tab->rank(u.in_inc[v]));
  w.host_labels.reserve(host_n);
  for (int at = 0; at < host_n; ++at) {
    auto part = [&](int idx) {
      std::string lab = "{";
      for (size_t i = 0; i < tab->subsets[idx].size(); ++i) {
        if (i) lab += ", ";
        lab += detail::arc_element_label(u, tab->subsets[idx][i]);
      }
      return lab + "}";
    };
    w.host_labels.push_back("(" + part(at / s) + ", " + part(at % s) + ")");
  }
  w.tag = "relational-kneser";
  w.extender = [g, u, tab, s](const PartialMap& p) {
    Perm sigma = relational_element_permutation(g, u, p);
    int side_n = s;
    Perm out(side_n * side_n);
    std::vector<int> sub_img(side_n);
    for (int i = 0; i < side_n; ++i) sub_img[i] = tab->rank(tab->apply(sigma, i));
    for (int a = 0; a < side_n; ++a)
      for (int b = 0; b < side_n; ++b)
        out[a * side_n + b] = sub_img[a] * side_n + sub_img[b];
    return out;
  };
  return w;
}

}  // namespace eppa
