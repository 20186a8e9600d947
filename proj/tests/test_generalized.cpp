#include <catch2/catch_amalgamated.hpp>

#include "eppa/generalized.hpp"
#include "eppa/canonical.hpp"
#include "eppa/verify.hpp"

using namespace eppa;

namespace {

Digraph digraph_from_arcs(int n,
                          const std::vector<std::pair<int, int>>& arcs) {
  Digraph g(n);
  for (auto [u, v] : arcs) g.add_arc(u, v);
  return g;
}

VerifyOptions search_opt() {
  VerifyOptions opt;
  opt.strategy = VerifyStrategy::search;
  return opt;
}

}  // namespace

TEST_CASE("directed valuation host sizes") {
  REQUIRE(build_directed_valuation_host(2, true).n == 8);
  REQUIRE(build_directed_valuation_host(2, false).n == 6);
  REQUIRE(build_directed_valuation_host(3, false).n == 27);
  REQUIRE(build_directed_valuation_host(3, true).n == 48);
  Digraph h1 = build_directed_valuation_host(1, false);
  REQUIRE(h1.n == 1);
  REQUIRE(h1.m() == 0);
  REQUIRE_THROWS_AS(build_directed_valuation_host(0, false), InputError);
  REQUIRE_THROWS_AS(build_directed_valuation_host(12, true, 1000),
                    CapacityError);
}

TEST_CASE("oriented host carries no bidirectional pair") {
  for (int n : {2, 3}) {
    Digraph h = build_directed_valuation_host(n, false);
    for (int u = 0; u < h.n; ++u)
      for (int v = u + 1; v < h.n; ++v)
        REQUIRE_FALSE((h.arc(u, v) && h.arc(v, u)));
  }
  Digraph h4 = build_directed_valuation_host(2, true);
  bool any = false;
  for (int u = 0; u < h4.n && !any; ++u)
    for (int v = u + 1; v < h4.n; ++v)
      if (h4.arc(u, v) && h4.arc(v, u)) {
        any = true;
        break;
      }
  REQUIRE(any);
}

TEST_CASE("decode table is orientation consistent") {
  for (int q : {3, 4})
    for (int s = 0; s < q; ++s) {
      auto [fwd, bwd] = detail::decode_arcs(q, s);
      auto [rfwd, rbwd] = detail::decode_arcs(q, (q - s) % q);
      REQUIRE(fwd == rbwd);
      REQUIRE(bwd == rfwd);
    }
}

TEST_CASE("host arcs agree with the residue decode") {
  for (bool bi : {false, true}) {
    const int q = bi ? 4 : 3;
    const int n = 3;
    const long long per = static_cast<long long>(q) * q;
    Digraph h = build_directed_valuation_host(n, bi);
    for (int i = 0; i < n; ++i)
      for (long long w = 0; w < per; ++w)
        for (int j = i + 1; j < n; ++j)
          for (long long x = 0; x < per; ++x) {
            int u = static_cast<int>(i * per + w);
            int v = static_cast<int>(j * per + x);
            int di = detail::valq_digit(w, q, detail::val_bit_pos(i, j));
            int dj = detail::valq_digit(x, q, detail::val_bit_pos(j, i));
            int s = ((di - dj) % q + q) % q;
            auto [fwd, bwd] = detail::decode_arcs(q, s);
            REQUIRE(h.arc(u, v) == fwd);
            REQUIRE(h.arc(v, u) == bwd);
          }
    for (int i = 0; i < n; ++i)
      for (long long w = 0; w < per; ++w)
        for (long long x = 0; x < per; ++x)
          if (w != x)
            REQUIRE_FALSE(h.arc(static_cast<int>(i * per + w),
                                static_cast<int>(i * per + x)));
  }
}

TEST_CASE("directed embedding lands forward") {
  Digraph g = digraph_from_arcs(2, {{0, 1}});
  for (bool bi : {false, true}) {
    Witness<Digraph> w = build_directed_valuation_witness(g, bi);
    REQUIRE(check_embedding(w));
    REQUIRE(w.host.arc(w.embedding[0], w.embedding[1]));
    REQUIRE_FALSE(w.host.arc(w.embedding[1], w.embedding[0]));
  }
  Digraph b = digraph_from_arcs(2, {{0, 1}, {1, 0}});
  REQUIRE_THROWS_AS(build_directed_valuation_witness(b, false), InputError);
  Witness<Digraph> wb = build_directed_valuation_witness(b, true);
  REQUIRE(check_embedding(wb));
  REQUIRE(wb.host.arc(wb.embedding[0], wb.embedding[1]));
  REQUIRE(wb.host.arc(wb.embedding[1], wb.embedding[0]));
}

TEST_CASE("oriented witness verified for every 3-vertex oriented graph") {
  std::vector<Digraph> reps;
  reps.push_back(digraph_from_arcs(3, {}));
  reps.push_back(digraph_from_arcs(3, {{0, 1}}));
  reps.push_back(digraph_from_arcs(3, {{0, 1}, {1, 2}}));
  reps.push_back(digraph_from_arcs(3, {{1, 0}, {1, 2}}));
  reps.push_back(digraph_from_arcs(3, {{0, 2}, {1, 2}}));
  reps.push_back(digraph_from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}));
  reps.push_back(digraph_from_arcs(3, {{0, 1}, {1, 2}, {0, 2}}));
  for (size_t a = 0; a < reps.size(); ++a)
    for (size_t b = a + 1; b < reps.size(); ++b)
      REQUIRE_FALSE(isomorphic(reps[a], reps[b]));
  for (const Digraph& g : reps) {
    Witness<Digraph> w = build_directed_valuation_witness(g, false);
    REQUIRE(w.host.n == 27);
    REQUIRE(check_embedding(w));
    auto rep = verify_witness(w, search_opt());
    INFO("oriented base with " << g.m() << " arcs");
    REQUIRE(rep.pass);
    REQUIRE(rep.checked == count_partial_autos(g));
  }
}

TEST_CASE("bidirectional witness verified") {
  for (int mask = 0; mask < 4; ++mask) {
    Digraph g(2);
    if (mask & 1) g.add_arc(0, 1);
    if (mask & 2) g.add_arc(1, 0);
    Witness<Digraph> w = build_directed_valuation_witness(g, true);
    REQUIRE(w.host.n == 8);
    auto rep = verify_witness(w, search_opt());
    REQUIRE(rep.pass);
    REQUIRE(rep.checked == count_partial_autos(g));
  }
  Digraph g = digraph_from_arcs(3, {{0, 1}, {1, 0}, {1, 2}});
  Witness<Digraph> w = build_directed_valuation_witness(g, true);
  REQUIRE(w.host.n == 48);
  auto rep = verify_witness(w, search_opt());
  REQUIRE(rep.pass);
  REQUIRE(rep.checked == count_partial_autos(g));
}

TEST_CASE("paley tournament structure") {
  REQUIRE_THROWS_AS(build_paley_tournament(1), InputError);
  REQUIRE_THROWS_AS(build_paley_tournament(2), InputError);
  REQUIRE_THROWS_AS(build_paley_tournament(5), InputError);
  REQUIRE_THROWS_AS(build_paley_tournament(9), InputError);
  Digraph p3 = build_paley_tournament(3);
  REQUIRE(p3 == digraph_from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}));
  Digraph p7 = build_paley_tournament(7);
  REQUIRE(p7.n == 7);
  for (int v = 0; v < 7; ++v) {
    REQUIRE(p7.out_degree(v) == 3);
    REQUIRE(p7.in_degree(v) == 3);
  }
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      REQUIRE((p7.arc(a, b) || p7.arc(b, a)));
      REQUIRE_FALSE((p7.arc(a, b) && p7.arc(b, a)));
    }
  std::vector<int> shift(7), dbl(7);
  for (int x = 0; x < 7; ++x) {
    shift[x] = (x + 1) % 7;
    dbl[x] = (2 * x) % 7;
  }
  REQUIRE(is_automorphism(p7, shift));
  REQUIRE(is_automorphism(p7, dbl));
}

TEST_CASE("paley seven witnesses the transitive triangle") {
  Digraph tt = digraph_from_arcs(3, {{0, 1}, {1, 2}, {0, 2}});
  Witness<Digraph> w;
  w.base = tt;
  w.host = build_paley_tournament(7);
  w.embedding = {0, 1, 2};
  w.tag = "paley";
  REQUIRE(check_embedding(w));
  auto rep = verify_witness(w, search_opt());
  REQUIRE(rep.pass);
  REQUIRE(rep.checked == count_partial_autos(tt));
}

TEST_CASE("paley three is its own witness") {
  Digraph p3 = build_paley_tournament(3);
  Witness<Digraph> w;
  w.base = p3;
  w.host = p3;
  w.embedding = {0, 1, 2};
  w.tag = "paley";
  auto rep = verify_witness(w, search_opt());
  REQUIRE(rep.pass);
  REQUIRE(rep.checked == count_partial_autos(p3));
}

TEST_CASE("hypergraph valuation host counts") {
  Hypergraph h43 = build_hypergraph_valuation_host(4, 3);
  REQUIRE(h43.n == 32);
  REQUIRE(h43.m() == 1024);
  Hypergraph h33 = build_hypergraph_valuation_host(3, 3);
  REQUIRE(h33.n == 6);
  REQUIRE(h33.m() == 4);
  REQUIRE_THROWS_AS(build_hypergraph_valuation_host(3, 1), InputError);
  REQUIRE_THROWS_AS(build_hypergraph_valuation_host(2, 3), InputError);
  REQUIRE_THROWS_AS(build_hypergraph_valuation_host(4, 3, 10), CapacityError);
}

TEST_CASE("rank two hypergraph valuation matches the graph host") {
  for (int n = 2; n <= 4; ++n) {
    Hypergraph h = build_hypergraph_valuation_host(n, 2);
    Graph g = build_valuation_host(n);
    REQUIRE(h.n == g.n);
    REQUIRE(h.m() == static_cast<int>(g.edges().size()));
    for (auto [u, v] : g.edges()) REQUIRE(h.has_edge({u, v}));
  }
}

TEST_CASE("hypergraph host codegree census") {
  Hypergraph h = build_hypergraph_valuation_host(4, 3);
  std::map<std::pair<int, int>, int> codeg;
  for (const auto& e : h.hyperedges())
    for (size_t a = 0; a < e.size(); ++a)
      for (size_t b = a + 1; b < e.size(); ++b) ++codeg[{e[a], e[b]}];
  for (int u = 0; u < h.n; ++u)
    for (int v = u + 1; v < h.n; ++v) {
      auto it = codeg.find({u, v});
      int c = it == codeg.end() ? 0 : it->second;
      if (u / 8 == v / 8)
        REQUIRE(c == 0);
      else
        REQUIRE(c == 8);
    }
}

TEST_CASE("hypergraph witnesses verified on three vertices") {
  for (int mask = 0; mask < 2; ++mask) {
    Hypergraph g(3, 3);
    if (mask) g.add_edge({0, 1, 2});
    Witness<Hypergraph> w = build_hypergraph_valuation_witness(g);
    REQUIRE(w.host.n == 6);
    REQUIRE(check_embedding(w));
    auto rep = verify_witness(w, search_opt());
    REQUIRE(rep.pass);
    REQUIRE(rep.checked == count_partial_autos(g));
  }
}

TEST_CASE("hypergraph witnesses verified for all 3-uniform bases on four vertices") {
  auto triples = detail::k_subsets(4, 3);
  for (int mask = 0; mask < 16; ++mask) {
    Hypergraph g(4, 3);
    for (int t = 0; t < 4; ++t)
      if ((mask >> t) & 1) g.add_edge(triples[t]);
    Witness<Hypergraph> w = build_hypergraph_valuation_witness(g);
    REQUIRE(w.host.n == 32);
    REQUIRE(check_embedding(w));
    auto rep = verify_witness(w, search_opt());
    INFO("base edge mask " << mask);
    REQUIRE(rep.pass);
    REQUIRE(rep.checked == count_partial_autos(g));
  }
}

TEST_CASE("generalized labels") {
  Witness<Digraph> w =
      build_directed_valuation_witness(digraph_from_arcs(2, {{0, 1}}), false);
  REQUIRE(w.host_labels.size() == 6);
  REQUIRE(w.host_labels[0] == "(1, 0_3)");
  REQUIRE(w.host_labels[5] == "(2, 2_3)");
  Witness<Digraph> w3 = build_directed_valuation_witness(
      digraph_from_arcs(3, {{0, 1}}), false);
  REQUIRE(w3.host_labels[14] == "(2, 12_3)");
  Hypergraph g(3, 3);
  Witness<Hypergraph> wh = build_hypergraph_valuation_witness(g);
  REQUIRE(wh.host_labels.size() == 6);
  REQUIRE(wh.host_labels[1] == "(1, 0b1)");
  REQUIRE(wh.host_labels[4] == "(3, 0b0)");
}

TEST_CASE("bit incidence family") {
  Hypergraph h1 = build_bit_incidence_hypergraph(1);
  REQUIRE(h1.n == 4);
  REQUIRE(h1.m() == 1);
  REQUIRE(h1.hyperedges() == std::vector<std::vector<int>>{{0, 1, 3}});
  Hypergraph h2 = build_bit_incidence_hypergraph(2);
  REQUIRE(h2.n == 7);
  REQUIRE(h2.m() == 4);
  for (int k = 1; k <= 5; ++k)
    REQUIRE(build_bit_incidence_hypergraph(k).m() == k * (1 << (k - 1)));
  Hypergraph h3 = build_bit_incidence_hypergraph(3);
  for (const auto& e : h3.hyperedges()) {
    REQUIRE(e[0] == 0);
    REQUIRE(e[1] >= 1);
    REQUIRE(e[1] <= 3);
    REQUIRE(e[2] >= 4);
    int c = e[2] - 4;
    REQUIRE(((c >> (e[1] - 1)) & 1) == 1);
  }
  REQUIRE(bit_incidence_lower_bound(1) == 2);
  REQUIRE(bit_incidence_lower_bound(2) == 24);
  REQUIRE(bit_incidence_lower_bound(3) == 40320);
  REQUIRE_THROWS_AS(build_bit_incidence_hypergraph(0), InputError);
  REQUIRE_THROWS_AS(bit_incidence_lower_bound(0), InputError);
}
