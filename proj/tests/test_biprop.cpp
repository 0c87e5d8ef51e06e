#include "bip/biprop.hpp"

#include <doctest.h>

#include "bip/error.hpp"

using namespace bip;
using namespace bip::biprop;
using finord::FinMap;

namespace {

BpPtr parity(int len = 3) { return std::make_shared<ParityBiprop>(len); }

// collapses every 2-cell to the identity; breaks unitor compatibility only
class FlattenParity final : public BipropMorphism {
 public:
  explicit FlattenParity(BpPtr p) : p_(std::move(p)) {}
  std::string name() const override { return "flatten"; }
  BpPtr src() const override { return p_; }
  BpPtr dst() const override { return p_; }
  int colour_map(int c) const override { return c; }
  int obj(const Word&, const Word&, int x) const override { return x; }
  int mor(const Word&, const Word&, int) const override { return 0; }
  int comp_comparison(const Word&, const Word&, const Word&, int,
                      int) const override {
    return 0;
  }
  int unit_comparison(const Word&) const override { return 0; }

 private:
  BpPtr p_;
};

}  // namespace

TEST_CASE("parity biprop satisfies every axiom") {
  BpPtr p = parity();
  CheckCaps caps{2, 2, 2};
  auto rep = check_biprop(p, caps);
  CHECK(rep.all_pass());
  // weak unitors force the slow coherence scans
  const auto* pent = rep.find("pentagon");
  REQUIRE(pent != nullptr);
  CHECK(pent->checked > 0);
  CHECK(pent->witness.empty());
  const auto* shift = rep.find("tensor-shift");
  REQUIRE(shift != nullptr);
  CHECK(shift->checked > 0);
  CHECK(rep.find("tensor-assoc")->checked > 0);
  CHECK(rep.find("unitor-agreement")->pass);
}

TEST_CASE("parity biprop at longer words") {
  auto rep = check_bicategory(parity(), CheckCaps{3, 3, 2});
  CHECK(rep.all_pass());
}

TEST_CASE("parity components and tensors have the advertised signs") {
  BpPtr p = parity();
  CHECK(p->lunit_component({0, 0}, {0}, 0) == 0);
  CHECK(p->lunit_component({0}, {0, 0}, 0) == 1);
  CHECK(p->runit_component({0}, {0, 0}, 0) == 0);
  CHECK(p->runit_component({0, 0}, {0}, 0) == 1);
  CHECK(p->compose_mor({0}, {0}, {0}, 1, 1) == 0);
  // one fused block picks up the sign; two blocks cancel
  CHECK(p->tensor_mor(FinMap::to_point(2), FinMap::to_point(2), {0, 0},
                      {0, 0}, {1}) == 1);
  CHECK(p->tensor_mor(FinMap::identity(2), FinMap::identity(2), {0, 0},
                      {0, 0}, {1, 1}) == 0);
  CHECK_THROWS_AS(p->hom({0, 0, 0, 0}, {0}), CapError);
  CHECK_THROWS_AS(p->hom({1}, {0}), SchemaError);
}

TEST_CASE("tabulated sign biprop matches the parity laws") {
  auto bp = std::make_shared<TabulatedBiprop>(sign_reference_data(2, 0));
  auto rep = check_bicategory(bp, CheckCaps{2, 2, 2});
  CHECK(rep.all_pass());
  CHECK(rep.find("pentagon")->checked > 0);
  CHECK_THROWS_AS(bp->tensor_obj(FinMap::identity(1), FinMap::identity(1),
                                 {0}, {0}, {0}),
                  SchemaError);
  CHECK_THROWS_AS(bp->hom({0, 0, 0}, {0}), CapError);
}

TEST_CASE("skewed associativity breaks exactly the coherence laws") {
  auto bp = std::make_shared<TabulatedBiprop>(sign_reference_data(2, 1));
  auto rep = check_bicategory(bp, CheckCaps{2, 2, 2});
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.find("assoc-component")->pass);
  CHECK(rep.find("assoc-naturality")->pass);
  CHECK(rep.find("lunit-component")->pass);
  CHECK(rep.find("unitor-agreement")->pass);
  CHECK_FALSE(rep.find("pentagon")->pass);
  CHECK_FALSE(rep.find("triangle")->pass);
  CHECK(rep.find("pentagon")->witness.find("pentagon fails") !=
        std::string::npos);
}

TEST_CASE("tabulated biprop rejects malformed tables") {
  auto data = sign_reference_data(1, 0);
  data.m.front().mor.pop_back();
  CHECK_THROWS_AS(TabulatedBiprop{data}, SchemaError);
  data = sign_reference_data(1, 0);
  data.units.front().obj = 5;
  CHECK_THROWS_AS(TabulatedBiprop{data}, SchemaError);
  data = sign_reference_data(1, 0);
  data.homs.push_back(data.homs.front());
  CHECK_THROWS_AS(TabulatedBiprop{data}, SchemaError);
}

TEST_CASE("identity morphism on parity validates") {
  BpPtr p = parity();
  auto id = identity_morphism(p);
  auto rep = validate_morphism(id, CheckCaps{2, 2, 2});
  CHECK(rep.all_pass());
  // parity is weak, so the compatibilities were checked instance by instance
  CHECK(rep.find("hexagon")->checked > 0);
  CHECK(rep.find("lunit-compat")->checked > 0);
  CHECK(rep.find("tensor-strict")->checked > 0);
  CHECK(rep.find("tensor-compat")->checked > 0);
}

TEST_CASE("collapsing all 2-cells is not a morphism of biprops") {
  BpPtr p = parity();
  auto flat = std::make_shared<FlattenParity>(p);
  auto rep = validate_morphism(flat, CheckCaps{2, 2, 2});
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.find("hom-functor")->pass);
  CHECK(rep.find("comp-comparison")->pass);
  CHECK(rep.find("comp-naturality")->pass);
  CHECK(rep.find("hexagon")->pass);
  CHECK_FALSE(rep.find("lunit-compat")->pass);
  CHECK_FALSE(rep.find("runit-compat")->pass);
}

TEST_CASE("morphism composition is unital on the identity") {
  BpPtr p = parity();
  auto id = identity_morphism(p);
  auto twice = compose_morphisms(id, id);
  CHECK(morphisms_equal(twice, id, CheckCaps{2, 2, 2}));
  CHECK(validate_morphism(twice, CheckCaps{2, 2, 2}).all_pass());
}
