#include <doctest.h>

#include <memory>
#include <vector>

#include "bip/catprop.hpp"
#include "bip/error.hpp"
#include "bip/fincat.hpp"

using namespace bip;
using catprop::CatValuedBiprop;
using catprop::CvPtr;
using finord::FinMap;

namespace {

using Word = biprop::Word;

CvPtr single_colour(fincat::FinCat cat, bool skip_reindex = false) {
  return std::make_shared<const CatValuedBiprop>(
      std::vector<fincat::CatPtr>{fincat::share(std::move(cat))}, 2, 1 << 20,
      skip_reindex);
}

}  // namespace

TEST_CASE("functor categories over the default registry have the expected shape") {
  auto cp = catprop::cat_valued_biprop(2);
  CHECK(cp->name() == "cat-valued");
  CHECK(cp->colours() == 2);
  CHECK(cp->max_word_len() == 2);
  CHECK(cp->strict());

  // colour 0 is a point, colour 1 a two-object discrete category, so
  // hom(a;b) has |prod b|^|prod a| objects and no non-identity cells
  struct Row { Word b; int size; };
  for (const auto& row : {Row{{}, 1}, Row{{0}, 1}, Row{{1}, 16},
                          Row{{1, 1}, 256}}) {
    auto h = cp->hom({1, 1}, row.b);
    CHECK(h->objects() == row.size);
    CHECK(h->morphisms() == row.size);
  }
  CHECK(cp->unit_object(Word{}) == 0);
  CHECK(cp->unit_object({1}) == 2);
  CHECK(cp->unit_object({1, 1}) == 228);

  CHECK_THROWS_AS((void)cp->hom({1, 1, 1}, {1}), CapError);
  CHECK_THROWS_AS((void)cp->hom({2}, {1}), SchemaError);
  CHECK_THROWS_AS((void)cp->unit_object({-1}), SchemaError);
}

TEST_CASE("registry construction rejects degenerate input") {
  CHECK_THROWS_AS(CatValuedBiprop(std::vector<fincat::CatPtr>{}), SchemaError);
  CHECK_THROWS_AS(CatValuedBiprop({nullptr}), SchemaError);
  CHECK_THROWS_AS(CatValuedBiprop(catprop::default_registry(), -1),
                  SchemaError);
  CHECK_THROWS_AS(CatValuedBiprop(catprop::default_registry(), 2, 0),
                  SchemaError);
  // a hom cap below the first functor category to be built
  CatValuedBiprop tiny(catprop::default_registry(), 2, 2);
  CHECK_THROWS_AS((void)tiny.hom({1}, {1}), CapError);
  CHECK_THROWS_AS(catprop::check_catprop(nullptr, CheckCaps{2, 2, 2}),
                  SchemaError);
}

TEST_CASE("tensors along a transposition swap the block arguments") {
  // strictness makes the reindexed tensor literally equal to the tensor of
  // the blocks written in foot order, so a swap cospan must agree with the
  // identity cospan fed the swapped argument list
  const FinMap sw(2, 2, {1, 0});
  const FinMap id2 = FinMap::identity(2);

  auto d2 = single_colour(fincat::FinCat::discrete(2));
  const Word aa{0, 0};
  const int n = d2->hom({0}, {0})->objects();
  CHECK(n == 4);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      CHECK(d2->tensor_obj(sw, sw, aa, aa, {x, y}) ==
            d2->tensor_obj(id2, id2, aa, aa, {y, x}));

  // same at the level of two-cells, over a registry that has some
  auto wa = single_colour(fincat::FinCat::walking_arrow());
  const int m = wa->hom({0}, {0})->morphisms();
  CHECK(m == 6);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      CHECK(wa->tensor_mor(sw, sw, aa, aa, {p, q}) ==
            wa->tensor_mor(id2, id2, aa, aa, {q, p}));

  // mixed-colour version: the blocks of the swap cospan appear reversed
  auto cp = catprop::cat_valued_biprop(2);
  const Word ab{0, 1};
  const int h0 = cp->hom({0}, {0})->objects();
  const int h1 = cp->hom({1}, {1})->objects();
  for (int p = 0; p < h1; ++p)
    for (int q = 0; q < h0; ++q)
      CHECK(cp->tensor_obj(sw, sw, ab, ab, {p, q}) ==
            cp->tensor_obj(id2, id2, ab, ab, {q, p}));
  CHECK(cp->tensor_obj(sw, sw, {1, 1}, {1, 1},
                       {cp->unit_object({1}), cp->unit_object({1})}) ==
        cp->unit_object({1, 1}));
}

TEST_CASE("the default registry passes the full law sweep") {
  auto cp = catprop::cat_valued_biprop(2);
  auto rep = catprop::check_catprop(cp, CheckCaps{2, 2, 2});
  CHECK(rep.all_pass());
  CHECK(rep.results.size() == 23);
  CHECK(rep.total_checked() == 445300);
  CHECK(rep.find("assoc-pasting")->checked == 215333);
  CHECK(rep.find("tensor-shift")->checked == 215333);
  CHECK(rep.find("tensor-functor")->checked == 5070);
  CHECK(rep.find("identity-components")->checked == 6771);
  CHECK(rep.find("graph-compatibility")->checked == 47);
  // the colour categories are discrete, so naturality has nothing to say
  CHECK(rep.find("assoc-naturality")->checked == 0);
}

TEST_CASE("a registry with real two-cells makes naturality bite") {
  auto wa = single_colour(fincat::FinCat::walking_arrow());
  CHECK(wa->hom({0}, {0})->objects() == 3);
  CHECK(wa->hom({0}, {0})->morphisms() == 6);
  CHECK(wa->hom({0, 0}, {0, 0})->objects() == 36);
  CHECK(wa->hom({0, 0}, {0, 0})->morphisms() == 400);
  CHECK(wa->hom({0, 0}, {0})->objects() == 6);
  CHECK(wa->hom({0, 0}, {0})->morphisms() == 20);
  CHECK(wa->unit_object({0}) == 1);
  CHECK(wa->unit_object({0, 0}) == 22);

  auto rep = catprop::check_catprop(wa, CheckCaps{2, 2, 2});
  CHECK(rep.all_pass());
  CHECK(rep.total_checked() == 26629);
  CHECK(rep.find("assoc-naturality")->checked == 367);
  CHECK(rep.find("lunit-naturality")->checked == 4);
}

TEST_CASE("skipping the input reindex breaks exactly the reorder-sensitive laws") {
  auto good = single_colour(fincat::FinCat::discrete(2));
  auto grep = catprop::check_catprop(good, CheckCaps{2, 2, 2});
  CHECK(grep.all_pass());
  CHECK(grep.total_checked() == 72092);

  auto bad = single_colour(fincat::FinCat::discrete(2), true);
  CHECK(bad->name() == "cat-valued/unreindexed");
  auto brep = catprop::check_catprop(bad, CheckCaps{2, 2, 2});
  CHECK_FALSE(brep.all_pass());
  for (const auto& r : brep.results) {
    const bool reorder_sensitive = r.law == "tensor-units" ||
                                   r.law == "assoc-pasting" ||
                                   r.law == "tensor-shift";
    CHECK(r.pass == !reorder_sensitive);
  }
  CHECK(brep.find("tensor-units")->witness.find("f=(1,0)") !=
        std::string::npos);
  // everything the tensor does not touch survives, including the strictness
  // witness and the combinatorial layer
  CHECK(brep.find("identity-components")->pass);
  CHECK(brep.find("graph-compatibility")->pass);

  // over mixed colour sizes the corrupted reorder cannot even type-check
  auto mixed = std::make_shared<const CatValuedBiprop>(
      catprop::default_registry(), 2, 1 << 20, true);
  const FinMap sw(2, 2, {1, 0});
  CHECK_THROWS_AS((void)mixed->tensor_obj(sw, sw, {0, 1}, {0, 1},
                                          {mixed->unit_object({1}),
                                           mixed->unit_object({0})}),
                  SchemaError);
}
