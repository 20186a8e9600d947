#pragma once

// Clique-free witnesses. Starting from the valuation host H_0 on n rows, each
// host vertex u is blown up into one vertex (u, chi) per valuation
// chi : U(u) -> {1..k-1} over the K_k-copies U(u) of H_0 through u. Two
// vertices are adjacent iff their H_0 vertices are and the valuations differ
// on every shared copy, which kills every K_k while preserving extension.
// The base embeds by valuing each copy injectively over its embedded members.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eppa/bigint.hpp"
#include "eppa/structures.hpp"
#include "eppa/valuation.hpp"
#include "eppa/witness.hpp"

namespace eppa {

inline constexpr long long kDefaultKkFreeCap = 100000;

namespace detail {

template <class F>
void for_each_k_clique(const Graph& g, int k, F&& fn) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      fn(cur);
      return;
    }
    for (int v = from; v < g.n; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

inline std::vector<std::vector<int>> enumerate_k_cliques(const Graph& g,
                                                         int k) {
  if (k < 1) throw InputError("clique size must be positive");
  std::vector<std::vector<int>> out;
  detail::for_each_k_clique(g, k, [&](const std::vector<int>& c) {
    out.push_back(c);
  });
  return out;
}

inline bool has_k_clique(const Graph& g, int k) {
  if (k < 1) throw InputError("clique size must be positive");
  if (k == 1) return g.n > 0;
  bool found = false;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (found) return;
    if (static_cast<int>(cur.size()) == k) {
      found = true;
      return;
    }
    for (int v = from; v < g.n && !found; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

inline BigInt kkfree_size_bound(long long m, long long k) {
  if (k < 3) throw InputError("clique-free bound needs k >= 3");
  if (m < 0) throw InputError("negative vertex count");
  if (m == 0) return 0;
  BigInt exp = binomial(m - 1, k - 1);
  if (exp > 1000000)
    throw CapacityError("clique-free bound exponent too large to materialize");
  return BigInt(m) * boost::multiprecision::pow(
                         BigInt(k - 1), static_cast<unsigned>(exp));
}

struct KkFreeHost {
  int n = 0;
  int k = 0;
  Graph h0;                                // valuation host on n rows
  std::vector<std::vector<int>> cliques;   // K_k copies of h0, lex order
  std::vector<std::vector<int>> copies_at; // h0 vertex -> clique ids, sorted
  std::vector<int> count_at;               // (k-1)^{|copies_at[u]|}
  std::vector<int> offset;                 // h0 vertex -> first host vertex id
  Graph host;
  std::vector<std::string> labels;
};

// decodes host vertex id into (h0 vertex, valuation digits 1..k-1 over
// copies_at[u] in order, most significant first)
inline std::pair<int, std::vector<int>> kkfree_vertex_parts(
    const KkFreeHost& kh, int v) {
  detail::check_vertex(v, kh.host.n);
  int u = static_cast<int>(std::upper_bound(kh.offset.begin(), kh.offset.end(),
                                            v) -
                           kh.offset.begin()) -
          1;
  int rest = v - kh.offset[u];
  int len = static_cast<int>(kh.copies_at[u].size());
  std::vector<int> chi(len);
  for (int a = len - 1; a >= 0; --a) {
    chi[a] = rest % (kh.k - 1) + 1;
    rest /= kh.k - 1;
  }
  return {u, chi};
}

inline KkFreeHost build_kkfree_host(int n, int k,
                                    long long cap = kDefaultKkFreeCap) {
  if (k < 3) throw InputError("clique-free construction needs k >= 3");
  KkFreeHost kh;
  kh.n = n;
  kh.k = k;
  kh.h0 = build_valuation_host(n);
  kh.cliques = enumerate_k_cliques(kh.h0, k);
  kh.copies_at.resize(kh.h0.n);
  for (size_t c = 0; c < kh.cliques.size(); ++c)
    for (int u : kh.cliques[c]) kh.copies_at[u].push_back(static_cast<int>(c));
  kh.count_at.resize(kh.h0.n);
  kh.offset.resize(kh.h0.n);
  BigInt total = 0;
  for (int u = 0; u < kh.h0.n; ++u) {
    BigInt cnt = boost::multiprecision::pow(
        BigInt(k - 1), static_cast<unsigned>(kh.copies_at[u].size()));
    total += cnt;
    if (total > cap)
      throw CapacityError("clique-free host would exceed cap " +
                          std::to_string(cap));
    kh.count_at[u] = static_cast<int>(cnt);
  }
  int host_n = 0;
  for (int u = 0; u < kh.h0.n; ++u) {
    kh.offset[u] = host_n;
    host_n += kh.count_at[u];
  }
  kh.host = Graph(host_n);
  // shared copies between adjacent h0 vertices, as (pos in u, pos in v)
  for (int u = 0; u < kh.h0.n; ++u)
    for (int v = u + 1; v < kh.h0.n; ++v) {
      if (!kh.h0.adjacent(u, v)) continue;
      std::vector<std::pair<int, int>> shared;
      for (size_t a = 0; a < kh.copies_at[u].size(); ++a)
        for (size_t b = 0; b < kh.copies_at[v].size(); ++b)
          if (kh.copies_at[u][a] == kh.copies_at[v][b])
            shared.emplace_back(static_cast<int>(a), static_cast<int>(b));
      for (int x = 0; x < kh.count_at[u]; ++x) {
        auto [xu, chi] = kkfree_vertex_parts(kh, kh.offset[u] + x);
        for (int y = 0; y < kh.count_at[v]; ++y) {
          auto [yv, xi] = kkfree_vertex_parts(kh, kh.offset[v] + y);
          bool generic = true;
          for (auto [a, b] : shared)
            if (chi[a] == xi[b]) {
              generic = false;
              break;
            }
          if (generic) kh.host.add_edge(kh.offset[u] + x, kh.offset[v] + y);
        }
      }
    }
  if (has_k_clique(kh.host, k))
    throw InternalError("clique-free host contains a forbidden clique");
  kh.labels.reserve(host_n);
  for (int v = 0; v < host_n; ++v) {
    auto [u, chi] = kkfree_vertex_parts(kh, v);
    std::string lab = "(" + std::to_string(u + 1) + ", [";
    for (size_t a = 0; a < chi.size(); ++a) {
      if (a) lab += ",";
      lab += std::to_string(chi[a]);
    }
    kh.labels.push_back(lab + "])");
  }
  return kh;
}

inline Witness<Graph> build_kkfree_witness(const Graph& g, int k = 3,
                                           long long cap = kDefaultKkFreeCap) {
  if (has_k_clique(g, k))
    throw InputError("base graph contains a K_" + std::to_string(k));
  KkFreeHost kh = build_kkfree_host(g.n, k, cap);
  std::vector<int> psi0 = valuation_embedding(g);
  std::vector<char> in_image(kh.h0.n, 0);
  for (int x : psi0) in_image[x] = 1;
  Witness<Graph> w;
  w.base = g;
  w.embedding.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    int u = psi0[i];
    int rank = 0;
    for (int c : kh.copies_at[u]) {
      // embedded members of this copy, increasing: u's position gives chi
      int value = 0, seen = 0;
      for (int x : kh.cliques[c])
        if (in_image[x]) {
          ++seen;
          if (x == u) value = seen;
        }
      if (seen > kh.k - 1)
        throw InternalError("embedded clique too large in clique-free host");
      rank = rank * (kh.k - 1) + (value - 1);
    }
    w.embedding[i] = kh.offset[u] + rank;
  }
  w.host = std::move(kh.host);
  w.host_labels = std::move(kh.labels);
  w.tag = "kkfree";
  return w;
}

}  // namespace eppa
