#pragma once

// Exact canonical forms via individualization-refinement. No hashing, no
// partial-string pruning: the canonical string is the minimum over all leaves
// of the refinement tree, with subtree skipping justified only by discovered
// automorphisms that fix the current individualization prefix pointwise.
// Intended for small structures (default cap 12 vertices).

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "eppa/structures.hpp"

namespace eppa {

namespace detail {

// --- refinement signatures -------------------------------------------------

inline std::vector<int> color_signature(const Graph& s, int v,
                                        const std::vector<int>& colors,
                                        int num_colors) {
  std::vector<int> cnt(num_colors, 0);
  for (int u = 0; u < s.n; ++u)
    if (s.adjacent(v, u)) ++cnt[colors[u]];
  return cnt;
}

inline std::vector<int> color_signature(const Digraph& s, int v,
                                        const std::vector<int>& colors,
                                        int num_colors) {
  std::vector<int> cnt(2 * num_colors, 0);
  for (int u = 0; u < s.n; ++u) {
    if (s.arc(v, u)) ++cnt[colors[u]];
    if (s.arc(u, v)) ++cnt[num_colors + colors[u]];
  }
  return cnt;
}

inline std::vector<int> color_signature(const Hypergraph& s, int v,
                                        const std::vector<int>& colors,
                                        int /*num_colors*/) {
  std::vector<std::vector<int>> parts;
  for (const auto& e : s.hyperedges()) {
    bool has = false;
    for (int w : e) has |= (w == v);
    if (!has) continue;
    std::vector<int> others;
    for (int w : e)
      if (w != v) others.push_back(colors[w]);
    std::sort(others.begin(), others.end());
    parts.push_back(std::move(others));
  }
  std::sort(parts.begin(), parts.end());
  std::vector<int> flat;
  for (auto& p : parts) {
    for (int c : p) flat.push_back(c);
    flat.push_back(-1);
  }
  return flat;
}

inline int normalize_color_ranks(std::vector<int>& colors) {
  std::vector<int> vals(colors);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (int& c : colors)
    c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) -
                         vals.begin());
  return static_cast<int>(vals.size());
}

}  // namespace detail

// 1-WL color refinement to a stable partition. Color values are ranks
// 0..k-1; the rank order is isomorphism-invariant, so corresponding vertices
// of isomorphic structures receive equal colors.
template <class S>
std::vector<int> refine_colors(const S& s, std::vector<int> colors = {}) {
  if (colors.empty()) colors.assign(s.n, 0);
  if (static_cast<int>(colors.size()) != s.n)
    throw InputError("color vector size mismatch");
  int k = detail::normalize_color_ranks(colors);
  while (k < s.n) {
    std::vector<std::pair<std::vector<int>, int>> keyed(s.n);
    for (int v = 0; v < s.n; ++v) {
      std::vector<int> key;
      key.push_back(colors[v]);
      auto sig = detail::color_signature(s, v, colors, k);
      key.insert(key.end(), sig.begin(), sig.end());
      keyed[v] = {std::move(key), v};
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> next(s.n);
    int rank = 0;
    for (int i = 0; i < s.n; ++i) {
      if (i > 0 && keyed[i].first != keyed[i - 1].first) ++rank;
      next[keyed[i].second] = rank;
    }
    int k2 = rank + 1;
    if (k2 == k) break;
    colors = std::move(next);
    k = k2;
  }
  return colors;
}

struct CanonicalOptions {
  int cap = 12;
  std::vector<int> init_colors;  // empty = uniform
};

struct CanonicalForm {
  std::vector<int> relabel;  // old vertex -> canonical position
  std::string canon;         // canonical byte sequence (colors + relations)
};

namespace detail {

// relation bytes of the structure relabeled by perm (old -> position)
inline void render_relations(const Graph& s, const std::vector<int>& inv,
                             std::string& out) {
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j)
      out.push_back(s.adjacent(inv[i], inv[j]) ? '1' : '0');
}

inline void render_relations(const Digraph& s, const std::vector<int>& inv,
                             std::string& out) {
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      if (i != j) out.push_back(s.arc(inv[i], inv[j]) ? '1' : '0');
}

inline void render_relations(const Hypergraph& s, const std::vector<int>& inv,
                             std::string& out) {
  std::vector<int> pos(s.n);
  for (int i = 0; i < s.n; ++i) pos[inv[i]] = i;
  std::vector<std::vector<int>> edges;
  for (const auto& e : s.hyperedges()) {
    std::vector<int> img;
    for (int v : e) img.push_back(pos[v]);
    std::sort(img.begin(), img.end());
    edges.push_back(std::move(img));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) {
    for (int v : e) out.push_back(static_cast<char>(v));
    out.push_back(static_cast<char>(0xff));
  }
}

inline char kind_tag(const Graph&) { return 'G'; }
inline char kind_tag(const Digraph&) { return 'D'; }
inline char kind_tag(const Hypergraph&) { return 'H'; }

inline void render_header_extra(const Graph&, std::string&) {}
inline void render_header_extra(const Digraph&, std::string&) {}
inline void render_header_extra(const Hypergraph& s, std::string& out) {
  out.push_back(static_cast<char>(s.r));
}

template <class S>
struct CanonSearch {
  const S& s;
  const std::vector<int>& init_colors;
  int n;
  std::string best;
  std::vector<int> best_perm;
  bool have_best = false;
  std::vector<std::vector<int>> gens;  // discovered automorphisms, old -> old
  std::vector<int> prefix;             // individualized vertices on this path

  CanonSearch(const S& s_, const std::vector<int>& init)
      : s(s_), init_colors(init), n(s_.n) {}

  std::string render(const std::vector<int>& perm) const {
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    std::string out;
    out.push_back(kind_tag(s));
    out.push_back(static_cast<char>(n));
    render_header_extra(s, out);
    for (int i = 0; i < n; ++i)
      out.push_back(static_cast<char>(init_colors[inv[i]]));
    render_relations(s, inv, out);
    return out;
  }

  void leaf(const std::vector<int>& colors) {
    std::string str = render(colors);
    if (!have_best || str < best) {
      best = std::move(str);
      best_perm = colors;
      have_best = true;
      return;
    }
    if (str == best) {
      // two leaves with equal strings tie: best_perm^-1 after this leaf's
      // perm is an automorphism, usable for orbit pruning
      std::vector<int> inv_best(n);
      for (int v = 0; v < n; ++v) inv_best[best_perm[v]] = v;
      std::vector<int> a(n);
      for (int v = 0; v < n; ++v) a[v] = inv_best[colors[v]];
      bool ident = true;
      for (int v = 0; v < n; ++v) ident &= (a[v] == v);
      if (!ident) gens.push_back(std::move(a));
    }
  }

  // orbit of v under the subgroup generated by the stored automorphisms that
  // fix the current prefix pointwise
  bool same_constrained_orbit(int v, const std::vector<int>& explored) {
    std::vector<const std::vector<int>*> useful;
    for (const auto& g : gens) {
      bool fixes = true;
      for (int p : prefix) fixes &= (g[p] == p);
      if (fixes) useful.push_back(&g);
    }
    if (useful.empty()) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto* g : useful)
      for (int u = 0; u < n; ++u) {
        int a = find(u), b = find((*g)[u]);
        if (a != b) parent[a] = b;
      }
    for (int u : explored)
      if (find(u) == find(v)) return true;
    return false;
  }

  void node(std::vector<int> colors) {
    colors = refine_colors(s, std::move(colors));
    int num_colors = colors.empty() ? 0 : *std::max_element(colors.begin(),
                                                            colors.end()) + 1;
    if (num_colors == n) {
      leaf(colors);
      return;
    }
    // target cell: smallest non-singleton class, ties by color value
    std::vector<int> class_size(num_colors, 0);
    for (int c : colors) ++class_size[c];
    int target = -1;
    for (int c = 0; c < num_colors; ++c)
      if (class_size[c] >= 2 &&
          (target < 0 || class_size[c] < class_size[target]))
        target = c;
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (colors[v] == target) cell.push_back(v);
    std::vector<int> explored;
    for (int v : cell) {
      if (!explored.empty() && same_constrained_orbit(v, explored)) continue;
      explored.push_back(v);
      std::vector<int> child(n);
      for (int u = 0; u < n; ++u) child[u] = 2 * colors[u] + (u == v ? 0 : 1);
      prefix.push_back(v);
      node(std::move(child));
      prefix.pop_back();
    }
  }
};

}  // namespace detail

template <class S>
CanonicalForm canonical_form(const S& s, const CanonicalOptions& opt = {}) {
  if (s.n > opt.cap)
    throw CapacityError("canonical form cap exceeded: " + std::to_string(s.n) +
                        " > " + std::to_string(opt.cap));
  std::vector<int> init = opt.init_colors;
  if (init.empty()) init.assign(s.n, 0);
  if (static_cast<int>(init.size()) != s.n)
    throw InputError("initial color vector size mismatch");
  for (int c : init)
    if (c < 0 || c > 200) throw InputError("initial colors must be in 0..200");
  if (s.n == 0) {
    std::string canon;
    canon.push_back(detail::kind_tag(s));
    canon.push_back(static_cast<char>(0));
    detail::render_header_extra(s, canon);
    return {{}, canon};
  }
  detail::CanonSearch<S> search(s, init);
  search.node(init);
  return {search.best_perm, search.best};
}

template <class S>
bool isomorphic(const S& a, const S& b, int cap = 12) {
  if (a.n != b.n) return false;
  CanonicalOptions opt;
  opt.cap = cap;
  return canonical_form(a, opt).canon == canonical_form(b, opt).canon;
}

}  // namespace eppa
