#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "eppa/automorphisms.hpp"
#include "eppa/bigint.hpp"
#include "eppa/structures.hpp"

using namespace eppa;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// independent oracle: loop over all pairs of equal-size vertex subsets and
// all bijections between them, counting the relation-preserving ones
template <class S>
unsigned long long oracle_count(const S& s) {
  unsigned long long count = 0;
  for (uint64_t a = 0; a < (uint64_t{1} << s.n); ++a)
    for (uint64_t b = 0; b < (uint64_t{1} << s.n); ++b) {
      if (__builtin_popcountll(a) != __builtin_popcountll(b)) continue;
      std::vector<int> dom, img;
      for (int v = 0; v < s.n; ++v) {
        if (a >> v & 1) dom.push_back(v);
        if (b >> v & 1) img.push_back(v);
      }
      std::sort(img.begin(), img.end());
      do {
        std::vector<std::pair<int, int>> pairs;
        for (size_t i = 0; i < dom.size(); ++i)
          pairs.emplace_back(dom[i], img[i]);
        PartialMap p;
        p.pairs = pairs;
        std::sort(p.pairs.begin(), p.pairs.end());
        if (preserves_relations(s, p)) ++count;
      } while (std::next_permutation(img.begin(), img.end()));
    }
  return count;
}

}  // namespace

TEST_CASE("partial automorphism counts on tiny graphs") {
  Graph k1(1);
  REQUIRE(count_partial_autos(k1) == 2);  // the empty map and the identity

  Graph k2(2, {{0, 1}});
  REQUIRE(count_partial_autos(k2) == 7);
}

TEST_CASE("enumeration matches the double-loop oracle") {
  REQUIRE(count_partial_autos(path(3)) == oracle_count(path(3)));
  REQUIRE(count_partial_autos(path(4)) == oracle_count(path(4)));
  REQUIRE(count_partial_autos(cycle(5)) == oracle_count(cycle(5)));

  Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  REQUIRE(count_partial_autos(tri) == 22);
  REQUIRE(count_partial_autos(tri) == oracle_count(tri));

  Digraph trans(3, {{0, 1}, {1, 2}, {0, 2}});
  REQUIRE(count_partial_autos(trans) == oracle_count(trans));

  Hypergraph h(4, 3, {{0, 1, 2}, {0, 1, 3}});
  REQUIRE(count_partial_autos(h) == oracle_count(h));
}

TEST_CASE("empty graph count has the closed form sum C(n,k)^2 k!") {
  for (int n = 0; n <= 5; ++n) {
    Graph g(n);
    BigInt expect = 0;
    for (int k = 0; k <= n; ++k)
      expect += binomial(n, k) * binomial(n, k) * factorial(k);
    REQUIRE(BigInt(count_partial_autos(g)) == expect);
  }
}

TEST_CASE("enumeration order is deterministic and as documented") {
  Graph k2(2, {{0, 1}});
  auto autos = enumerate_partial_autos(k2);
  std::vector<PartialMap> expect{
      PartialMap{},
      PartialMap::from_pairs({{0, 0}}),
      PartialMap::from_pairs({{0, 1}}),
      PartialMap::from_pairs({{1, 0}}),
      PartialMap::from_pairs({{1, 1}}),
      PartialMap::from_pairs({{0, 0}, {1, 1}}),
      PartialMap::from_pairs({{0, 1}, {1, 0}}),
  };
  REQUIRE(autos == expect);
  REQUIRE(enumerate_partial_autos(k2) == autos);
}

TEST_CASE("max_size bound is respected") {
  Graph c5 = cycle(5);
  auto bounded = enumerate_partial_autos(c5, 2);
  for (const auto& p : bounded) REQUIRE(p.size() <= 2);
  unsigned long long small = 0;
  for (const auto& p : enumerate_partial_autos(c5))
    if (p.size() <= 2) ++small;
  REQUIRE(bounded.size() == small);
}

TEST_CASE("every yielded map preserves relations") {
  for_each_partial_auto(path(4), -1, [&](const PartialMap& p) {
    REQUIRE(is_partial_automorphism(path(4), p));
  });
  Digraph d(3, {{0, 1}, {1, 0}, {1, 2}});
  for_each_partial_auto(d, -1, [&](const PartialMap& p) {
    REQUIRE(is_partial_automorphism(d, p));
  });
  Hypergraph h(4, 3, {{0, 1, 2}});
  for_each_partial_auto(h, -1, [&](const PartialMap& p) {
    REQUIRE(is_partial_automorphism(h, p));
  });
}
