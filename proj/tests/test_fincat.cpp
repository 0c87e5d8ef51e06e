#include <doctest.h>

#include <algorithm>

#include "bip/fincat.hpp"

using namespace bip::fincat;
using bip::CapError;
using bip::SchemaError;

TEST_CASE("builders produce valid categories") {
  CHECK(FinCat::discrete(3).morphisms() == 3);
  CHECK(FinCat::terminal().objects() == 1);
  CHECK(FinCat::walking_arrow().morphisms() == 3);
  CHECK(FinCat::walking_iso().morphisms() == 4);
  CHECK(FinCat::group_z2().morphisms() == 2);
}

TEST_CASE("bad tables are rejected") {
  // identity with the wrong endpoints
  CHECK_THROWS_AS(FinCat::build(2, {{0, 1}}, {0, 0}, {}), SchemaError);
  // missing composite (walking arrow without id . arrow)
  CHECK_THROWS_AS(
      FinCat::build(2, {{0, 0}, {1, 1}, {0, 1}}, {0, 1},
                    {{0, 0, 0}, {1, 1, 1}, {2, 1, 2}}),
      SchemaError);
  // non-associative multiplication on three endomorphisms
  CHECK_THROWS_AS(FinCat::build(1, {{0, 0}, {0, 0}, {0, 0}}, {0},
                                {{0, 0, 0},
                                 {0, 1, 1},
                                 {0, 2, 2},
                                 {1, 0, 1},
                                 {2, 0, 2},
                                 {1, 1, 2},
                                 {1, 2, 0},
                                 {2, 1, 1},
                                 {2, 2, 1}}),
                  SchemaError);
}

TEST_CASE("composition and inverses") {
  FinCat iso = FinCat::walking_iso();
  CHECK(iso.compose(2, 3) == iso.identity(0));
  CHECK(iso.inverse_of(2) == 3);
  CHECK(iso.inverse_of(3) == 2);
  CHECK(iso.is_iso(iso.identity(1)));

  FinCat arrow = FinCat::walking_arrow();
  CHECK(!arrow.is_iso(2));
  CHECK(arrow.inverse_of(2) == -1);
  CHECK_THROWS_AS(arrow.compose(2, 2), SchemaError);

  auto triples = FinCat::group_z2().composition_triples();
  CHECK(triples.size() == 4);
  CHECK(std::count(triples.begin(), triples.end(),
                   std::array<int, 3>{1, 1, 0}) == 1);
}

TEST_CASE("functors validate their laws") {
  CatPtr arrow = share(FinCat::walking_arrow());
  CatPtr z2 = share(FinCat::group_z2());

  FinFunctor f(arrow, z2, {0, 0}, {0, 0, 1});
  CHECK(f.obj(1) == 0);
  CHECK(f.mor(2) == 1);

  CHECK(equal_functors(FinFunctor::identity(arrow),
                       compose(FinFunctor::identity(arrow),
                               FinFunctor::identity(arrow))));
  CHECK(equal_functors(compose(f, FinFunctor::identity(z2)), f));
  FinFunctor c = FinFunctor::constant(arrow, z2, 0);
  CHECK(c.mor(2) == 0);

  // arrow image with endpoints that do not match the object images
  CHECK_THROWS_AS(FinFunctor(share(FinCat::walking_iso()), arrow,
                             {0, 1}, {0, 1, 2, 2}),
                  SchemaError);
  // identity not preserved
  CHECK_THROWS_AS(FinFunctor(z2, z2, {0}, {1, 0}), SchemaError);
}

TEST_CASE("natural transformations validate naturality") {
  CatPtr arrow = share(FinCat::walking_arrow());
  CatPtr z2 = share(FinCat::group_z2());
  FinFunctor f0(arrow, z2, {0, 0}, {0, 0, 0});
  FinFunctor f1(arrow, z2, {0, 0}, {0, 0, 1});

  FinNatTrans t(f0, f1, {0, 1});
  CHECK(t.at(1) == 1);
  CHECK(t.is_invertible());
  CHECK(!t.is_identity_transformation());
  CHECK_THROWS_AS(FinNatTrans(f0, f1, {0, 0}), SchemaError);

  FinNatTrans u = invert(t);
  CHECK(u.components() == std::vector<int>{0, 1});
  CHECK(equal_nats(vcompose(t, u), FinNatTrans::identity(f0)));
  CHECK(vcompose(u, t).is_identity_transformation());
}

TEST_CASE("horizontal composition and whiskering") {
  CatPtr arrow = share(FinCat::walking_arrow());
  CatPtr z2 = share(FinCat::group_z2());
  FinFunctor f0(arrow, z2, {0, 0}, {0, 0, 0});
  FinFunctor f1(arrow, z2, {0, 0}, {0, 0, 1});
  FinNatTrans t(f0, f1, {0, 1});

  FinFunctor idz2 = FinFunctor::identity(z2);
  FinNatTrans ht = hcompose(t, FinNatTrans::identity(idz2));
  CHECK(equal_functors(ht.src(), compose(f0, idz2)));
  CHECK(ht.components() == t.components());

  CHECK(whisker_right(t, idz2).components() == t.components());
  FinFunctor pick0(share(FinCat::terminal()), arrow, {0}, {0});
  CHECK(whisker_left(pick0, t).components() == std::vector<int>{0});
}

TEST_CASE("interchange of vertical and horizontal composition") {
  CatPtr arrow = share(FinCat::walking_arrow());
  CatPtr z2 = share(FinCat::group_z2());
  FunctorCat fc1 = functor_category(arrow, z2);
  FunctorCat fc2 = functor_category(z2, z2);

  long long cases = 0;
  for (const auto& a : fc1.mors)
    for (const auto& b : fc1.mors) {
      if (a.dst != b.src) continue;
      for (const auto& c : fc2.mors)
        for (const auto& d : fc2.mors) {
          if (c.dst != d.src) continue;
          FinNatTrans na(fc1.objects[a.src], fc1.objects[a.dst], a.comps);
          FinNatTrans nb(fc1.objects[b.src], fc1.objects[b.dst], b.comps);
          FinNatTrans nc(fc2.objects[c.src], fc2.objects[c.dst], c.comps);
          FinNatTrans nd(fc2.objects[d.src], fc2.objects[d.dst], d.comps);
          CHECK(equal_nats(hcompose(vcompose(na, nb), vcompose(nc, nd)),
                           vcompose(hcompose(na, nc), hcompose(nb, nd))));
          ++cases;
        }
    }
  CHECK(cases > 0);
}

TEST_CASE("products use the first-factor-fastest codec") {
  CatPtr arrow = share(FinCat::walking_arrow());
  ProductCat p = product({arrow, arrow});
  CHECK(p.cat->objects() == 4);
  CHECK(p.cat->morphisms() == 9);

  int m = p.mor_rank({2, 2});
  CHECK(m == 8);
  CHECK(p.cat->src(m) == p.obj_rank({0, 0}));
  CHECK(p.cat->dst(m) == p.obj_rank({1, 1}));
  CHECK(p.obj_tuple(p.obj_rank({1, 0})) == std::vector<int>{1, 0});
  for (int r = 0; r < p.cat->morphisms(); ++r)
    CHECK(p.mor_rank(p.mor_tuple(r)) == r);

  // empty product is the terminal category
  ProductCat unit = product({});
  CHECK(unit.cat->objects() == 1);
  CHECK(unit.cat->morphisms() == 1);

  CHECK_THROWS_AS(product({arrow, arrow}, 2), CapError);
}

TEST_CASE("coproducts lay parts out in order") {
  CatPtr arrow = share(FinCat::walking_arrow());
  CatPtr z2 = share(FinCat::group_z2());
  CoproductCat c = coproduct({arrow, z2});
  CHECK(c.cat->objects() == 3);
  CHECK(c.cat->morphisms() == 5);
  CHECK(c.obj_part(2) == std::pair<int, int>{1, 0});
  CHECK(c.mor_part(4) == std::pair<int, int>{1, 1});
  CHECK(c.cat->compose(c.mor_in(1, 1), c.mor_in(1, 1)) == c.mor_in(1, 0));
  CHECK_THROWS_AS(c.cat->compose(c.mor_in(0, 2), c.mor_in(1, 1)), SchemaError);
}

TEST_CASE("functor categories enumerate functors and transformations") {
  CatPtr arrow = share(FinCat::walking_arrow());
  CatPtr z2 = share(FinCat::group_z2());
  FunctorCat fc = functor_category(arrow, z2);
  CHECK(fc.objects.size() == 2);
  CHECK(fc.mors.size() == 8);
  CHECK(fc.cat->objects() == 2);
  CHECK(fc.cat->morphisms() == 8);

  for (int i = 0; i < static_cast<int>(fc.objects.size()); ++i)
    CHECK(fc.index_of(fc.objects[i]) == i);
  for (int m = 0; m < static_cast<int>(fc.mors.size()); ++m)
    CHECK(fc.nat_index(fc.mors[m].src, fc.mors[m].dst, fc.mors[m].comps) == m);

  FunctorCat disc = functor_category(share(FinCat::discrete(2)),
                                     share(FinCat::discrete(3)));
  CHECK(disc.objects.size() == 9);
  CHECK(disc.mors.size() == 9);
  for (const auto& nv : disc.mors) CHECK(nv.src == nv.dst);
}
