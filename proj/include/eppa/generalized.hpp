#pragma once

// Valuation witnesses beyond graphs: digraphs valued in Z_3 / Z_4, Paley
// tournaments, r-uniform hypergraph valuations, and the bit-incidence family
// whose witnesses need factorially many vertices. None of these carry a
// constructive extender; verification goes through the generic search.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eppa/bigint.hpp"
#include "eppa/kneser.hpp"
#include "eppa/structures.hpp"
#include "eppa/valuation.hpp"
#include "eppa/witness.hpp"

namespace eppa {

inline constexpr long long kDefaultDirectedCap = 1000000;
inline constexpr long long kDefaultHyperCap = 1000000;

namespace detail {

// (forward, backward) arcs of the pair listed first-to-second, for residue s
inline std::pair<bool, bool> decode_arcs(int q, int s) {
  if (q == 4) {
    if (s == 1) return {true, false};
    if (s == 3) return {false, true};
    if (s == 2) return {true, true};
    return {false, false};
  }
  if (s == 1) return {true, false};
  if (s == 2) return {false, true};
  return {false, false};
}

inline int valq_digit(long long word, int q, int pos) {
  for (int t = 0; t < pos; ++t) word /= q;
  return static_cast<int>(word % q);
}

inline std::string valq_label(int n, int q, int i, long long word) {
  int digits = std::max(1, n - 1);
  std::string s(digits, '0');
  for (int p = 0; p < digits; ++p)
    s[digits - 1 - p] = static_cast<char>('0' + valq_digit(word, q, p));
  return "(" + std::to_string(i + 1) + ", " + s + "_" + std::to_string(q) +
         ")";
}

inline bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace detail

inline Digraph build_directed_valuation_host(
    int n, bool allow_bidirectional, long long cap = kDefaultDirectedCap) {
  if (n < 1) throw InputError("need at least one row");
  const int q = allow_bidirectional ? 4 : 3;
  BigInt total = BigInt(n) * ipow(BigInt(q), static_cast<unsigned>(n - 1));
  if (total > cap)
    throw CapacityError("directed valuation host would have " + total.str() +
                        " vertices, cap is " + std::to_string(cap));
  long long per = 1;
  for (int t = 0; t < n - 1; ++t) per *= q;
  Digraph h(static_cast<int>(n * per));
  for (int i = 0; i < n; ++i)
    for (long long w = 0; w < per; ++w) {
      int u = static_cast<int>(i * per + w);
      for (int j = i + 1; j < n; ++j) {
        int di = detail::valq_digit(w, q, detail::val_bit_pos(i, j));
        for (long long x = 0; x < per; ++x) {
          int dj = detail::valq_digit(x, q, detail::val_bit_pos(j, i));
          int s = ((di - dj) % q + q) % q;
          auto [fwd, bwd] = detail::decode_arcs(q, s);
          int v = static_cast<int>(j * per + x);
          if (fwd) h.add_arc(u, v);
          if (bwd) h.add_arc(v, u);
        }
      }
    }
  return h;
}

inline Witness<Digraph> build_directed_valuation_witness(
    const Digraph& g, bool allow_bidirectional,
    long long cap = kDefaultDirectedCap) {
  const int q = allow_bidirectional ? 4 : 3;
  if (!allow_bidirectional)
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j)
        if (g.arc(i, j) && g.arc(j, i))
          throw InputError(
              "base has a bidirectional pair; enable bidirectional arcs");
  Witness<Digraph> w;
  w.base = g;
  w.host = build_directed_valuation_host(g.n, allow_bidirectional, cap);
  long long per = 1;
  for (int t = 0; t < g.n - 1; ++t) per *= q;
  std::vector<long long> word(g.n, 0), qpow(std::max(g.n - 1, 1), 1);
  for (size_t p = 1; p < qpow.size(); ++p) qpow[p] = qpow[p - 1] * q;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      int c = 0;
      if (g.arc(i, j) && g.arc(j, i))
        c = 2;
      else if (g.arc(i, j))
        c = 1;
      else if (g.arc(j, i))
        c = q - 1;
      // f_i(j) stays 0; the residue from (i, f_i) listed first is then c
      word[j] += static_cast<long long>((q - c) % q) *
                 qpow[detail::val_bit_pos(j, i)];
    }
  w.embedding.resize(g.n);
  for (int i = 0; i < g.n; ++i)
    w.embedding[i] = static_cast<int>(i * per + word[i]);
  w.host_labels.reserve(w.host.n);
  for (int i = 0; i < g.n; ++i)
    for (long long x = 0; x < per; ++x)
      w.host_labels.push_back(detail::valq_label(g.n, q, i, x));
  w.tag = "directed-valuation";
  return w;
}

inline Digraph build_paley_tournament(long long q) {
  if (!detail::is_prime(q) || q % 4 != 3)
    throw InputError("modulus must be a prime congruent to 3 mod 4");
  if (q > 10000) throw CapacityError("Paley tournament too large");
  std::vector<char> residue(q, 0);
  for (long long x = 1; x < q; ++x) residue[(x * x) % q] = 1;
  Digraph t(static_cast<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (a != b && residue[((b - a) % q + q) % q]) t.add_arc(a, b);
  return t;
}

namespace detail {

// lex-ordered (r-1)-subsets of [n] minus {i}, plus subset -> rank lookup
struct HyperRowSubsets {
  std::vector<std::vector<int>> subs;
  std::map<std::vector<int>, int> rank;
};

inline HyperRowSubsets hyper_row_subsets(int n, int r, int i) {
  std::vector<int> ground;
  for (int v = 0; v < n; ++v)
    if (v != i) ground.push_back(v);
  HyperRowSubsets out;
  for (const auto& idx : k_subsets(n - 1, r - 1)) {
    std::vector<int> s;
    s.reserve(idx.size());
    for (int t : idx) s.push_back(ground[t]);
    out.rank[s] = static_cast<int>(out.subs.size());
    out.subs.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

inline Hypergraph build_hypergraph_valuation_host(
    int n, int r, long long cap = kDefaultHyperCap) {
  if (r < 2 || n < r) throw InputError("need 2 <= r <= n");
  BigInt nsubs = binomial(n - 1, r - 1);
  if (nsubs > 40)
    throw CapacityError("hypergraph valuation words exceed 40 bits");
  int cs = static_cast<int>(nsubs);
  long long per = 1LL << cs;
  BigInt total = BigInt(n) * per;
  if (total > cap)
    throw CapacityError("hypergraph valuation host would have " +
                        total.str() + " vertices, cap is " +
                        std::to_string(cap));
  Hypergraph h(static_cast<int>(n * per), r);
  std::vector<detail::HyperRowSubsets> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) rows.push_back(detail::hyper_row_subsets(n, r, i));
  // iterate row sets, then one valuation word per row
  for (const auto& proj : detail::k_subsets(n, r)) {
    std::vector<int> prank(r);
    for (int t = 0; t < r; ++t) {
      std::vector<int> rest;
      for (int u : proj)
        if (u != proj[t]) rest.push_back(u);
      prank[t] = rows[proj[t]].rank.at(rest);
    }
    std::vector<long long> word(r, 0);
    while (true) {
      int parity = 0;
      for (int t = 0; t < r; ++t) parity ^= (word[t] >> prank[t]) & 1;
      if (parity) {
        std::vector<int> e(r);
        for (int t = 0; t < r; ++t)
          e[t] = static_cast<int>(proj[t] * per + word[t]);
        h.add_edge(e);
      }
      int t = r - 1;
      while (t >= 0 && word[t] == per - 1) word[t--] = 0;
      if (t < 0) break;
      ++word[t];
    }
  }
  return h;
}

inline Witness<Hypergraph> build_hypergraph_valuation_witness(
    const Hypergraph& g, long long cap = kDefaultHyperCap) {
  Witness<Hypergraph> w;
  w.base = g;
  w.host = build_hypergraph_valuation_host(g.n, g.r, cap);
  int cs = static_cast<int>(binomial(g.n - 1, g.r - 1));
  long long per = 1LL << cs;
  std::vector<detail::HyperRowSubsets> rows;
  rows.reserve(g.n);
  for (int i = 0; i < g.n; ++i)
    rows.push_back(detail::hyper_row_subsets(g.n, g.r, i));
  std::vector<long long> word(g.n, 0);
  for (const auto& e : g.hyperedges()) {
    int i = e.back();  // edges come back sorted; the max vertex carries the bit
    std::vector<int> rest(e.begin(), e.end() - 1);
    word[i] |= 1LL << rows[i].rank.at(rest);
  }
  w.embedding.resize(g.n);
  for (int i = 0; i < g.n; ++i)
    w.embedding[i] = static_cast<int>(i * per + word[i]);
  w.host_labels.reserve(w.host.n);
  for (int i = 0; i < g.n; ++i)
    for (long long x = 0; x < per; ++x) {
      std::string bits(std::max(cs, 1), '0');
      for (int p = 0; p < cs; ++p)
        if ((x >> p) & 1) bits[cs - 1 - p] = '1';
      w.host_labels.push_back("(" + std::to_string(i + 1) + ", 0b" + bits +
                              ")");
    }
  w.tag = "hypergraph-valuation";
  return w;
}

inline Hypergraph build_bit_incidence_hypergraph(int k) {
  if (k < 1) throw InputError("need k >= 1");
  if (k > 20) throw CapacityError("bit-incidence hypergraph too large");
  long long m = 1LL << k;
  Hypergraph h(static_cast<int>(m + k + 1), 3);
  for (int i = 0; i < k; ++i)
    for (long long c = 0; c < m; ++c)
      if ((c >> i) & 1)
        h.add_edge({0, 1 + i, static_cast<int>(1 + k + c)});
  return h;
}

inline BigInt bit_incidence_lower_bound(int k) {
  if (k < 1) throw InputError("need k >= 1");
  if (k > 20) throw CapacityError("factorial of 2^k too large");
  return factorial(1LL << k);
}

}  // namespace eppa
