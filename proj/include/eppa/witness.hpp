#pragma once

// A witness bundles the base structure, the host, the embedding, the label
// table of constructed host vertices, and an optional constructive extender
// mapping partial automorphisms of the base to automorphisms of the host.

#include <functional>
#include <string>
#include <vector>

#include "eppa/automorphisms.hpp"
#include "eppa/structures.hpp"

namespace eppa {

template <class S>
struct Witness {
  S base;
  S host;
  std::vector<int> embedding;  // base vertex -> host vertex
  std::vector<std::string> host_labels;
  std::function<Perm(const PartialMap&)> extender;
  bool coherent = false;  // extender constructed to be coherent
  std::string tag;

  bool has_extender() const { return static_cast<bool>(extender); }
};

namespace detail {

inline bool embedding_relations_ok(const Graph& b, const Graph& h,
                                   const std::vector<int>& e) {
  for (int u = 0; u < b.n; ++u)
    for (int v = u + 1; v < b.n; ++v)
      if (b.adjacent(u, v) != h.adjacent(e[u], e[v])) return false;
  return true;
}

inline bool embedding_relations_ok(const Digraph& b, const Digraph& h,
                                   const std::vector<int>& e) {
  for (int u = 0; u < b.n; ++u)
    for (int v = 0; v < b.n; ++v)
      if (u != v && b.arc(u, v) != h.arc(e[u], e[v])) return false;
  return true;
}

inline bool embedding_relations_ok(const Hypergraph& b, const Hypergraph& h,
                                   const std::vector<int>& e) {
  if (b.r != h.r) return false;
  if (b.n < b.r) return true;
  std::vector<int> idx(b.r);
  for (int i = 0; i < b.r; ++i) idx[i] = i;
  while (true) {
    std::vector<int> t(idx.begin(), idx.end()), ft;
    for (int v : t) ft.push_back(e[v]);
    if (b.has_edge(t) != h.has_edge(ft)) return false;
    int i = b.r - 1;
    while (i >= 0 && idx[i] == b.n - b.r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < b.r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

}  // namespace detail

// the embedding is injective and relation-preserving in both directions on
// every tuple of base vertices
template <class S>
bool check_embedding(const Witness<S>& w) {
  if (static_cast<int>(w.embedding.size()) != w.base.n) return false;
  std::vector<char> used(w.host.n, 0);
  for (int x : w.embedding) {
    if (x < 0 || x >= w.host.n || used[x]) return false;
    used[x] = 1;
  }
  return detail::embedding_relations_ok(w.base, w.host, w.embedding);
}

}  // namespace eppa
