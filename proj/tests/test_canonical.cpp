#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "eppa/automorphisms.hpp"
#include "eppa/canonical.hpp"
#include "eppa/structures.hpp"

using namespace eppa;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Perm random_perm(int n, std::mt19937_64& rng) {
  Perm p = identity_perm(n);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % (i + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

}  // namespace

TEST_CASE("color refinement splits path ends from the middle") {
  auto colors = refine_colors(path(3));
  REQUIRE(colors[0] == colors[2]);
  REQUIRE(colors[0] != colors[1]);
}

TEST_CASE("relabelings of C_5 share a canonical sequence") {
  Graph a = cycle(5);
  Graph b(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
  REQUIRE(canonical_form(a).canon == canonical_form(b).canon);
  REQUIRE(isomorphic(a, b));
}

TEST_CASE("P_4 and K_{1,3} have distinct canonical sequences") {
  Graph k13(4, {{0, 1}, {0, 2}, {0, 3}});
  REQUIRE(canonical_form(path(4)).canon != canonical_form(k13).canon);
}

TEST_CASE("the 64 labeled graphs on 4 vertices fall into 11 classes") {
  std::vector<std::pair<int, int>> slots{{0, 1}, {0, 2}, {0, 3},
                                         {1, 2}, {1, 3}, {2, 3}};
  std::set<std::string> classes;
  for (int mask = 0; mask < 64; ++mask) {
    Graph g(4);
    for (int i = 0; i < 6; ++i)
      if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
    classes.insert(canonical_form(g).canon);
  }
  REQUIRE(classes.size() == 11);
}

TEST_CASE("canonical form is invariant under random relabeling") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    Perm sigma = random_perm(n, rng);
    Graph h = apply_perm(g, sigma);
    auto cg = canonical_form(g);
    auto ch = canonical_form(h);
    REQUIRE(cg.canon == ch.canon);
    // both relabelings land on the same canonical representative
    REQUIRE(apply_perm(g, cg.relabel) == apply_perm(h, ch.relabel));
  }
}

TEST_CASE("canonical forms of digraphs") {
  Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  Digraph tri2(3, {{2, 1}, {1, 0}, {0, 2}});
  Digraph trans(3, {{0, 1}, {1, 2}, {0, 2}});
  REQUIRE(canonical_form(tri).canon == canonical_form(tri2).canon);
  REQUIRE(canonical_form(tri).canon != canonical_form(trans).canon);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Digraph d(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && (rng() & 3) == 0) d.add_arc(u, v);
    Perm sigma = random_perm(n, rng);
    REQUIRE(canonical_form(d).canon ==
            canonical_form(apply_perm(d, sigma)).canon);
  }
}

TEST_CASE("canonical forms of hypergraphs") {
  Hypergraph a(4, 3, {{0, 1, 2}, {1, 2, 3}});
  Hypergraph b(4, 3, {{3, 2, 1}, {0, 3, 2}});
  REQUIRE(canonical_form(a).canon == canonical_form(b).canon);

  Hypergraph c(4, 3, {{0, 1, 2}, {0, 1, 3}});
  REQUIRE(canonical_form(a).canon == canonical_form(c).canon);

  // uniformity participates in the key even with no edges
  REQUIRE(canonical_form(Hypergraph(4, 2)).canon !=
          canonical_form(Hypergraph(4, 3)).canon);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    Hypergraph h(n, 3);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
          if (rng() & 1) h.add_edge({u, v, w});
    Perm sigma = random_perm(n, rng);
    REQUIRE(canonical_form(h).canon ==
            canonical_form(apply_perm(h, sigma)).canon);
  }
}

TEST_CASE("initial colors participate in the canonical form") {
  Graph p3 = path(3);
  CanonicalOptions end_marked;
  end_marked.init_colors = {1, 0, 0};
  CanonicalOptions mid_marked;
  mid_marked.init_colors = {0, 1, 0};
  CanonicalOptions other_end;
  other_end.init_colors = {0, 0, 1};
  REQUIRE(canonical_form(p3, end_marked).canon !=
          canonical_form(p3, mid_marked).canon);
  REQUIRE(canonical_form(p3, end_marked).canon ==
          canonical_form(p3, other_end).canon);

  // marking either diagonal of C_4 is the same colored graph
  Graph c4 = cycle(4);
  CanonicalOptions diag1, diag2, edge_pair;
  diag1.init_colors = {1, 0, 1, 0};
  diag2.init_colors = {0, 1, 0, 1};
  edge_pair.init_colors = {1, 1, 0, 0};
  REQUIRE(canonical_form(c4, diag1).canon ==
          canonical_form(c4, diag2).canon);
  REQUIRE(canonical_form(c4, diag1).canon !=
          canonical_form(c4, edge_pair).canon);
}

TEST_CASE("worst-case symmetric graphs stay tractable at the cap") {
  Graph k12(12);
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v) k12.add_edge(u, v);
  Graph empty12(12);
  REQUIRE(canonical_form(k12).canon != canonical_form(empty12).canon);
}

TEST_CASE("the cap raises a capacity error") {
  REQUIRE_THROWS_AS(canonical_form(Graph(13)), CapacityError);
  CanonicalOptions opt;
  opt.cap = 16;
  REQUIRE_NOTHROW(canonical_form(Graph(14), opt));
}
