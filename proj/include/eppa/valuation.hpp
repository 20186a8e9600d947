#pragma once

// Valuation witness for graphs. Host vertices are pairs (i, f) where i is a
// base vertex and f : [n] \ {i} -> {0,1} is a valuation, packed into the id
// i * 2^(n-1) + word with bit position (j < i ? j : j - 1) holding f(j).
// (i, f) ~ (i', f') iff i != i' and f(i') != f'(i). Switch automorphisms
// (pi, S) permute the first coordinate by pi and flip the valuation bits
// selected by the set S of unordered vertex pairs; every such pair acts as
// an automorphism of the host, and every partial automorphism of the base
// extends to one.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eppa/automorphisms.hpp"
#include "eppa/bigint.hpp"
#include "eppa/canonical.hpp"
#include "eppa/structures.hpp"
#include "eppa/witness.hpp"

namespace eppa {

inline constexpr int kMaxValuationBase = 16;

inline BigInt valuation_witness_size(int n) {
  if (n < 1) throw InputError("valuation witness needs n >= 1");
  return BigInt(n) * ipow(2, n - 1);
}

inline int valuation_vertex_id(int n, int i, std::uint32_t word) {
  return (i << (n - 1)) | static_cast<int>(word);
}

inline std::pair<int, std::uint32_t> valuation_vertex_parts(int n, int v) {
  std::uint32_t mask = (n == 1) ? 0u : (1u << (n - 1)) - 1u;
  return {v >> (n - 1), static_cast<std::uint32_t>(v) & mask};
}

namespace detail {

inline int val_bit_pos(int i, int j) { return j < i ? j : j - 1; }

inline bool val_word_bit(std::uint32_t word, int i, int j) {
  return (word >> val_bit_pos(i, j)) & 1u;
}

inline std::pair<int, int> switch_pair(int n, int a, int b) {
  check_vertex(a, n);
  check_vertex(b, n);
  if (a == b)
    throw InputError("switch pair must join two distinct vertices");
  return {std::min(a, b), std::max(a, b)};
}

inline void check_valuation_base(int n) {
  if (n < 1) throw InputError("valuation witness needs n >= 1");
  if (n > kMaxValuationBase)
    throw CapacityError("valuation witness capped at n <= " +
                        std::to_string(kMaxValuationBase));
}

inline int switch_image(int n, const Perm& pi, const Perm& inv,
                        const std::set<std::pair<int, int>>& sw, int v) {
  auto [i, w] = valuation_vertex_parts(n, v);
  int ni = pi[i];
  std::uint32_t nw = 0;
  for (int j = 0; j < n; ++j) {
    if (j == ni) continue;
    bool bit = val_word_bit(w, i, inv[j]);
    if (sw.count({std::min(ni, j), std::max(ni, j)})) bit = !bit;
    if (bit) nw |= 1u << val_bit_pos(ni, j);
  }
  return valuation_vertex_id(n, ni, nw);
}

}  // namespace detail

struct SwitchAutomorphism {
  int n = 0;
  Perm pi;
  std::set<std::pair<int, int>> switches;  // unordered pairs, stored (lo, hi)

  int host_size() const { return n << (n - 1); }

  int apply_vertex(int v) const {
    detail::check_vertex(v, host_size());
    return detail::switch_image(n, pi, invert_perm(pi), switches, v);
  }

  Perm to_host_perm() const {
    Perm inv = invert_perm(pi);
    Perm out(host_size());
    for (int v = 0; v < host_size(); ++v)
      out[v] = detail::switch_image(n, pi, inv, switches, v);
    return out;
  }

  SwitchAutomorphism inverse() const {
    SwitchAutomorphism r;
    r.n = n;
    r.pi = invert_perm(pi);
    for (auto [a, b] : switches)
      r.switches.insert(detail::switch_pair(n, r.pi[a], r.pi[b]));
    return r;
  }

  bool operator==(const SwitchAutomorphism& o) const = default;
};

inline SwitchAutomorphism make_switch_automorphism(
    Perm pi, const std::set<std::pair<int, int>>& switches = {}) {
  if (!is_permutation(pi))
    throw InputError("switch automorphism needs a permutation");
  int n = static_cast<int>(pi.size());
  detail::check_valuation_base(n);
  SwitchAutomorphism s;
  s.n = n;
  s.pi = std::move(pi);
  for (auto [a, b] : switches) s.switches.insert(detail::switch_pair(n, a, b));
  return s;
}

inline SwitchAutomorphism theta_pi(Perm pi) {
  return make_switch_automorphism(std::move(pi));
}

inline SwitchAutomorphism theta_switch(int n, int a, int b) {
  return make_switch_automorphism(identity_perm(n), {{a, b}});
}

// a after b: (pi_a pi_b, S_a symmetric-difference pi_a(S_b))
inline SwitchAutomorphism compose(const SwitchAutomorphism& a,
                                  const SwitchAutomorphism& b) {
  if (a.n != b.n) throw InputError("switch automorphism size mismatch");
  SwitchAutomorphism r;
  r.n = a.n;
  r.pi = compose_perm(a.pi, b.pi);
  r.switches = a.switches;
  for (auto [x, y] : b.switches) {
    auto key = detail::switch_pair(a.n, a.pi[x], a.pi[y]);
    auto it = r.switches.find(key);
    if (it == r.switches.end())
      r.switches.insert(key);
    else
      r.switches.erase(it);
  }
  return r;
}

inline Graph build_valuation_host(int n) {
  detail::check_valuation_base(n);
  Graph h(n << (n - 1));
  std::uint32_t words = 1u << (n - 1);
  for (int i = 0; i < n; ++i)
    for (std::uint32_t w = 0; w < words; ++w) {
      int v = valuation_vertex_id(n, i, w);
      for (int k = i + 1; k < n; ++k) {
        bool need = !detail::val_word_bit(w, i, k);
        for (std::uint32_t x = 0; x < words; ++x)
          if (detail::val_word_bit(x, k, i) == need)
            h.add_edge(v, valuation_vertex_id(n, k, x));
      }
    }
  return h;
}

// base vertex i sits at (i, f_i) with f_i(j) = 1 iff j < i and ij is an edge
inline std::vector<int> valuation_embedding(const Graph& g) {
  detail::check_valuation_base(g.n);
  std::vector<int> e(g.n);
  for (int i = 0; i < g.n; ++i) {
    std::uint32_t w = 0;
    for (int j = 0; j < i; ++j)
      if (g.adjacent(i, j)) w |= 1u << j;
    e[i] = valuation_vertex_id(g.n, i, w);
  }
  return e;
}

inline std::vector<std::string> valuation_labels(int n) {
  detail::check_valuation_base(n);
  int digits = std::max(1, n - 1);
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n) << (n - 1));
  for (int v = 0; v < (n << (n - 1)); ++v) {
    auto [i, w] = valuation_vertex_parts(n, v);
    std::string bits(digits, '0');
    for (int b = 0; b < digits; ++b)
      if ((w >> b) & 1u) bits[digits - 1 - b] = '1';
    labels.push_back("(" + std::to_string(i + 1) + ", 0b" + bits + ")");
  }
  return labels;
}

// Extends a partial automorphism p of g to a switch automorphism of the
// valuation host: pi completes p by matching the unmapped vertices in
// ascending order, and S switches exactly the pairs {p(i), j} where the
// embedded valuations of i and p(i) disagree. Pairs constrained from two
// sides always agree for a partial automorphism.
inline SwitchAutomorphism extend_in_valuation_witness(const Graph& g,
                                                      const PartialMap& p) {
  detail::check_valuation_base(g.n);
  if (!is_partial_automorphism(g, p))
    throw InputError("map is not a partial automorphism of the base graph");
  int n = g.n;
  Perm pi(n, -1);
  std::vector<char> hit(n, 0);
  for (auto [d, r] : p.pairs) {
    pi[d] = r;
    hit[r] = 1;
  }
  for (int d = 0, r = 0; d < n; ++d) {
    if (pi[d] >= 0) continue;
    while (hit[r]) ++r;
    pi[d] = r;
    hit[r] = 1;
  }
  Perm inv = invert_perm(pi);
  std::vector<int> embed = valuation_embedding(g);
  std::vector<std::uint32_t> word(n);
  for (int i = 0; i < n; ++i)
    word[i] = valuation_vertex_parts(n, embed[i]).second;
  std::map<std::pair<int, int>, bool> need;
  for (auto [i, a] : p.pairs)
    for (int j = 0; j < n; ++j) {
      if (j == a) continue;
      bool want = detail::val_word_bit(word[i], i, inv[j]) !=
                  detail::val_word_bit(word[a], a, j);
      auto key = detail::switch_pair(n, a, j);
      auto it = need.find(key);
      if (it == need.end())
        need.emplace(key, want);
      else if (it->second != want)
        throw InternalError("inconsistent switch constraint at pair {" +
                            std::to_string(key.first) + "," +
                            std::to_string(key.second) + "}");
    }
  SwitchAutomorphism s;
  s.n = n;
  s.pi = std::move(pi);
  for (auto& [key, want] : need)
    if (want) s.switches.insert(key);
  return s;
}

// Coherent extender: every vertex subset C gets a representative subset r(C)
// of its induced-isomorphism class (first in ascending mask order) and a
// fixed induced isomorphism iota_C : r(C) -> C with lexicographically least
// image tuple. A partial automorphism f : C -> D factors as
// iota_D alpha iota_C^{-1} with alpha an automorphism of the representative,
// and Psi(f) = Phi(iota_D) Phi(alpha) Phi(iota_C)^{-1} composes
// multiplicatively because Phi does on automorphisms of a fixed subset.
namespace detail {

struct CoherenceTable {
  Graph g;
  std::vector<int> rep_of;          // subset mask -> representative mask
  std::vector<PartialMap> iota;     // subset mask -> iso r(mask) -> mask
};

inline std::vector<int> mask_vertices(int mask) {
  std::vector<int> vs;
  for (int v = 0; mask >> v; ++v)
    if ((mask >> v) & 1) vs.push_back(v);
  return vs;
}

// lexicographically least image tuple over ascending dom realizing an
// induced isomorphism dom -> rng inside g
inline PartialMap lexleast_induced_iso(const Graph& g,
                                       const std::vector<int>& dom,
                                       const std::vector<int>& rng) {
  int k = static_cast<int>(dom.size());
  std::vector<int> img(k, -1);
  std::vector<char> used(rng.size(), 0);
  auto ok = [&](int at) {
    for (int b = 0; b < at; ++b)
      if (g.adjacent(dom[at], dom[b]) != g.adjacent(img[at], img[b]))
        return false;
    return true;
  };
  int at = 0;
  std::vector<int> cursor(k, 0);
  while (at >= 0 && at < k) {
    bool advanced = false;
    for (int& c = cursor[at]; c < static_cast<int>(rng.size()); ++c) {
      if (used[c]) continue;
      img[at] = rng[c];
      if (!ok(at)) continue;
      used[c] = 1;
      ++c;
      advanced = true;
      break;
    }
    if (advanced) {
      ++at;
      if (at < k) cursor[at] = 0;
    } else {
      --at;
      if (at >= 0) used[std::find(rng.begin(), rng.end(), img[at]) - rng.begin()] = 0;
    }
  }
  if (at < 0) throw InternalError("no induced isomorphism between equivalent subsets");
  std::vector<std::pair<int, int>> ps;
  for (int a = 0; a < k; ++a) ps.emplace_back(dom[a], img[a]);
  return PartialMap::from_pairs(std::move(ps));
}

}  // namespace detail

inline std::function<Perm(const PartialMap&)> make_coherent_extender(
    const Graph& g) {
  detail::check_valuation_base(g.n);
  if (g.n > 12)
    throw CapacityError("coherent extender capped at n <= 12");
  auto tab = std::make_shared<detail::CoherenceTable>();
  tab->g = g;
  int masks = 1 << g.n;
  tab->rep_of.assign(masks, 0);
  tab->iota.resize(masks);
  std::map<std::string, int> class_rep;
  for (int mask = 0; mask < masks; ++mask) {
    auto vs = detail::mask_vertices(mask);
    std::string canon = canonical_form(induced_substructure(g, vs)).canon;
    auto [it, fresh] = class_rep.emplace(canon, mask);
    tab->rep_of[mask] = it->second;
    tab->iota[mask] = detail::lexleast_induced_iso(
        g, detail::mask_vertices(it->second), vs);
  }
  return [tab](const PartialMap& p) -> Perm {
    const Graph& g = tab->g;
    if (!is_partial_automorphism(g, p))
      throw InputError("map is not a partial automorphism of the base graph");
    int cmask = 0, dmask = 0;
    for (auto [d, r] : p.pairs) {
      cmask |= 1 << d;
      dmask |= 1 << r;
    }
    if (tab->rep_of[cmask] != tab->rep_of[dmask])
      throw InternalError("isomorphic subsets classified apart");
    const PartialMap& ic = tab->iota[cmask];
    const PartialMap& id = tab->iota[dmask];
    PartialMap alpha = eppa::compose(id.inverse(), eppa::compose(p, ic));
    SwitchAutomorphism sc = extend_in_valuation_witness(g, ic);
    SwitchAutomorphism sa = extend_in_valuation_witness(g, alpha);
    SwitchAutomorphism sd = extend_in_valuation_witness(g, id);
    return eppa::compose(eppa::compose(sd, sa), sc.inverse()).to_host_perm();
  };
}

inline Witness<Graph> build_valuation_witness(const Graph& g,
                                              bool coherent = false) {
  detail::check_valuation_base(g.n);
  Witness<Graph> w;
  w.base = g;
  w.host = build_valuation_host(g.n);
  w.embedding = valuation_embedding(g);
  w.host_labels = valuation_labels(g.n);
  w.tag = "valuation";
  w.coherent = coherent;
  if (coherent) {
    w.extender = make_coherent_extender(g);
  } else {
    w.extender = [g](const PartialMap& p) {
      return extend_in_valuation_witness(g, p).to_host_perm();
    };
  }
  return w;
}

}  // namespace eppa
