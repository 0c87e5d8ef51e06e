#include <doctest.h>

#include "bip/finord.hpp"

using namespace bip::finord;
using bip::SchemaError;

TEST_CASE("finite map basics") {
  FinMap f(3, 2, {0, 1, 0});
  CHECK(f.dom() == 3);
  CHECK(f.cod() == 2);
  CHECK(f(2) == 0);
  CHECK(!f.is_bijection());
  CHECK(!f.is_order_preserving());
  CHECK(FinMap(3, 3, {0, 1, 1}).is_order_preserving());

  CHECK(FinMap::identity(3) == FinMap(3, 3, {0, 1, 2}));
  CHECK(FinMap::to_point(4) == FinMap(4, 1, {0, 0, 0, 0}));

  FinMap b(3, 3, {2, 0, 1});
  CHECK(b.is_bijection());
  CHECK(b.inverse() == FinMap(3, 3, {1, 2, 0}));
  CHECK(compose(b, b.inverse()) == FinMap::identity(3));

  CHECK_THROWS_AS(FinMap(2, 2, {0, 2}), SchemaError);
  CHECK_THROWS_AS(f.inverse(), SchemaError);
}

TEST_CASE("composition is diagrammatic") {
  FinMap f(3, 2, {0, 1, 0});
  FinMap g(2, 2, {1, 0});
  CHECK(compose(f, g) == FinMap(3, 2, {1, 0, 1}));
  CHECK_THROWS_AS(compose(g, f), SchemaError);
}

TEST_CASE("map enumeration") {
  CHECK(map_count(3, 2) == 8);
  CHECK(map_count(0, 5) == 1);
  CHECK(map_count(2, 0) == 0);
  CHECK(map_count(0, 0) == 1);

  CHECK(FinMap::from_rank(3, 2, 6) == FinMap(3, 2, {0, 1, 1}));
  for (long long r = 0; r < map_count(3, 2); ++r)
    CHECK(FinMap::from_rank(3, 2, r).rank() == r);
}

TEST_CASE("pair codec ranks second coordinate as primary key") {
  CHECK(lex_index(3, 2, 2, 0) == 2);
  CHECK(lex_index(3, 2, 0, 1) == 3);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 3; ++i) {
      auto [a, b] = lex_unindex(3, 2, lex_index(3, 2, i, j));
      CHECK(a == i);
      CHECK(b == j);
    }
}

TEST_CASE("indexed union blocks") {
  auto u = IndexedUnion::from_sizes({2, 0, 3});
  CHECK(u.total == 5);
  CHECK(u.offsets == std::vector<int>{0, 2, 2});
  CHECK(u.position(2, 1) == 3);
  CHECK(u.block_of(2) == std::pair<int, int>{2, 0});
  for (int p = 0; p < u.total; ++p) {
    auto [blk, s] = u.block_of(p);
    CHECK(u.position(blk, s) == p);
  }
  CHECK(u.projection() == FinMap(5, 3, {0, 0, 2, 2, 2}));
}

TEST_CASE("graph bijection") {
  CHECK(graph_bijection(FinMap(3, 2, {0, 1, 0})) == FinMap(3, 3, {0, 2, 1}));
  CHECK(graph_bijection(FinMap(4, 3, {2, 0, 2, 1})) ==
        FinMap(4, 4, {2, 0, 3, 1}));

  // collapsing everything to a point reorders nothing
  for (int n = 0; n <= 6; ++n)
    CHECK(graph_bijection(FinMap::to_point(n)) == FinMap::identity(n));

  // a bijection is its own graph bijection
  FinMap b(3, 3, {2, 0, 1});
  CHECK(graph_bijection(b) == b);

  auto d = decompose(FinMap(4, 3, {2, 0, 2, 1}));
  CHECK(d.fibers == std::vector<std::vector<int>>{{1}, {3}, {0, 2}});
}

TEST_CASE("restriction to a fibre") {
  auto r = restrict_to_fiber(FinMap(3, 2, {0, 0, 1}), FinMap::identity(2), 0);
  CHECK(r.map == FinMap(2, 1, {0, 0}));
  CHECK(r.dom_elems == std::vector<int>{0, 1});
  CHECK(r.cod_elems == std::vector<int>{0});

  auto r2 = restrict_to_fiber(FinMap(4, 3, {2, 0, 2, 1}), FinMap(3, 2, {1, 0, 1}), 1);
  CHECK(r2.cod_elems == std::vector<int>{0, 2});
  CHECK(r2.dom_elems == std::vector<int>{0, 1, 2});
  CHECK(r2.map == FinMap(3, 2, {1, 0, 1}));

  FinMap phi(4, 3, {2, 0, 2, 1});
  FinMap h(3, 2, {1, 0, 1});
  CHECK(restrict(phi, compose(phi, h), h, 1).map == r2.map);
  CHECK_THROWS_AS(restrict(phi, FinMap(4, 2, {0, 0, 0, 0}), h, 1), SchemaError);
}

TEST_CASE("merge and split are mutually inverse") {
  FinMap f(3, 2, {0, 1, 0});
  FinMap g(3, 2, {1, 0, 0});
  auto S = IndexedUnion::from_sizes({1, 2, 1});
  auto Q = IndexedUnion::from_sizes({2, 1, 1});

  std::vector<FinMap> family{FinMap(2, 2, {1, 0}), FinMap(2, 2, {0, 0})};
  FinMap merged = merge_family(family, f, g, S, Q);
  CHECK(merged == FinMap(4, 4, {3, 0, 0, 2}));

  auto back = split(merged, f, g, S, Q);
  REQUIRE(back.size() == family.size());
  CHECK(back[0] == family[0]);
  CHECK(back[1] == family[1]);

  // position 0 sits over k = 0 on the left but over k = 1 on the right
  CHECK_THROWS_AS(split(FinMap(4, 4, {0, 0, 0, 0}), f, g, S, Q), SchemaError);
}

TEST_CASE("graph bijection respects composition") {
  CHECK(check_graph_functoriality(FinMap(3, 2, {0, 1, 0}), FinMap(2, 2, {1, 0})));

  // exhaustive over all composable pairs with |I|, |K|, |L| <= 3
  for (int ni = 0; ni <= 3; ++ni)
    for (int nk = 0; nk <= 3; ++nk)
      for (int nl = 0; nl <= 3; ++nl)
        for (long long rf = 0; rf < map_count(ni, nk); ++rf)
          for (long long rh = 0; rh < map_count(nk, nl); ++rh)
            CHECK(check_graph_functoriality(FinMap::from_rank(ni, nk, rf),
                                            FinMap::from_rank(nk, nl, rh)));
}
