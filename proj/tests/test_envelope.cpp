#include <doctest.h>

#include <memory>
#include <vector>

#include "bip/envelope.hpp"
#include "bip/error.hpp"
#include "bip/fincat.hpp"
#include "bip/multicat.hpp"

using namespace bip;
using envelope::EnvPtr;
using finord::FinMap;

namespace {

using Word = biprop::Word;

// Two-valued homs with a constant skew left unitor: every component law
// holds on its own, but the triangle cannot close.
class LopsidedUnits final : public multicat::SWMulticat {
 public:
  std::string name() const override { return "lopsided-units"; }
  int colours() const override { return 1; }
  int max_arity() const override { return 2; }

  fincat::CatPtr hom(const Word& as, int) const override {
    if (static_cast<int>(as.size()) > max_arity())
      throw CapError("lopsided-units: word too long");
    return z2_;
  }
  int unit_object(int) const override { return 0; }
  int compose_obj(const FinMap&, const Word&, const Word&, int,
                  const std::vector<int>&, int) const override {
    return 0;
  }
  int compose_mor(const FinMap&, const Word&, const Word&, int,
                  const std::vector<int>& inner, int outer) const override {
    int s = outer;
    for (int m : inner) s ^= m;
    return s;
  }
  int assoc_component(const FinMap&, const FinMap&, const Word&, const Word&,
                      const Word&, int, const std::vector<int>&,
                      const std::vector<int>&, int) const override {
    return 0;
  }
  int lunit_component(const Word&, int, int) const override { return 1; }
  int runit_component(const Word&, int, int) const override { return 0; }

 private:
  fincat::CatPtr z2_ = fincat::share(fincat::FinCat::group_z2());
};

}  // namespace

TEST_CASE("envelope hom categories have the predicted sizes") {
  auto fs = multicat::finite_set_multicat({2}, 3);
  auto env = envelope::envelope(fs, 3);
  CHECK(env->colours() == 1);
  CHECK(env->max_word_len() == 3);
  CHECK(env->strict());

  // sum over maps I -> J of prod_j |C(A|fibre; X)|
  CHECK(env->hom({0, 0}, {0, 0})->objects() == 96);
  CHECK(env->hom({0, 0}, {0, 0})->morphisms() == 96);
  CHECK(env->hom({0, 0, 0}, {0, 0})->objects() == 1408);
  CHECK(env->hom({0, 0, 0}, {0, 0, 0})->objects() == 5760);
  CHECK(env->hom({0}, {})->objects() == 0);
  CHECK(env->hom({}, {})->objects() == 1);
  CHECK(env->hom({}, {0})->objects() == 2);

  // summands sit at their map's rank, in enumeration order
  const envelope::EnvHom& H = env->hom_data({0, 0}, {0, 0});
  REQUIRE(H.phis.size() == 4);
  CHECK(H.phis[1] == FinMap(2, 2, {1, 0}));
  CHECK(H.cop.obj_offset == std::vector<int>{0, 32, 48, 64});
  for (int x = 0; x < 96; ++x) {
    auto s = H.split_obj(x);
    CHECK(H.join_obj(s.tag, s.comps) == x);
  }

  CHECK_THROWS_AS(env->hom({0, 0, 0, 0}, {0}), CapError);
  CHECK_THROWS_AS(env->hom({0, 1}, {0}), SchemaError);
  CHECK_THROWS_AS(envelope::envelope(fs, 4), SchemaError);
  auto tiny = envelope::envelope(fs, 3, 50);
  CHECK_THROWS_AS(tiny->hom({0, 0}, {0, 0}), CapError);
}

TEST_CASE("envelope structure evaluates to the frozen values") {
  auto fs = multicat::finite_set_multicat({2}, 3);
  auto env = envelope::envelope(fs, 3);

  CHECK(env->unit_object({0, 0}) == 58);

  // NOT after AND is NAND
  CHECK(env->compose_obj({0, 0}, {0}, {0}, 8, 1) == 7);

  const FinMap id2 = FinMap::identity(2);
  const FinMap swap(2, 2, {1, 0});
  // two NOT gates side by side, wired straight and wired crossed
  CHECK(env->tensor_obj(id2, id2, {0, 0}, {0, 0}, {1, 1}) == 53);
  CHECK(env->tensor_obj(swap, id2, {0, 0}, {0, 0}, {1, 1}) == 37);

  // a strict base gives identity coherence components
  const auto h22 = env->hom({0, 0}, {0, 0});
  CHECK(env->lunit_component({0, 0}, {0, 0}, 58) == h22->identity(58));
  CHECK(env->runit_component({0, 0}, {0, 0}, 58) == h22->identity(58));
}

TEST_CASE("envelope of the one-point multicategory counts maps") {
  auto env = envelope::envelope(multicat::terminal_multicat(), 3);
  CHECK(env->hom({0, 0}, {0, 0})->objects() == 4);
  CHECK(env->hom({0, 0, 0}, {0})->objects() == 1);
  CHECK(env->hom({0}, {0, 0, 0})->objects() == 3);
  auto rep = biprop::check_biprop(env, CheckCaps{2, 2, 2});
  CHECK(rep.all_pass());
}

TEST_CASE("the sign envelope keeps its two-cell structure") {
  auto env = envelope::envelope(multicat::sign_multicat(3), 3);
  CHECK(env->hom({0, 0}, {0, 0})->objects() == 4);
  CHECK(env->hom({0, 0}, {0, 0})->morphisms() == 16);
  auto rep = biprop::check_biprop(env, CheckCaps{2, 2, 2});
  for (const auto& r : rep.results) {
    INFO(r.law, ": ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("the finite-set envelope passes every biprop law") {
  auto fs = multicat::finite_set_multicat({2}, 3);
  auto env = envelope::envelope(fs, 3);
  // the index-2 multi-map tier of this envelope is exercised by the
  // long-running checker binary; keep the unit sweep at index 1
  auto rep = biprop::check_biprop(env, CheckCaps{2, 2, 1});
  for (const auto& r : rep.results) {
    INFO(r.law, ": ", r.witness);
    CHECK(r.pass);
  }
  const auto* pent = rep.find("pentagon");
  REQUIRE(pent != nullptr);
  CHECK(pent->checked > 0);
  const auto* shift = rep.find("tensor-shift");
  REQUIRE(shift != nullptr);
  CHECK(shift->checked > 0);
}

TEST_CASE("building the envelope refuses an incoherent base") {
  auto bad = std::make_shared<LopsidedUnits>();
  report::Report why;
  auto env = envelope::build_envelope(bad, CheckCaps{2, 2, 2}, 2, &why);
  CHECK(env == nullptr);
  CHECK_FALSE(why.all_pass());
  const auto* tri = why.find("triangle");
  REQUIRE(tri != nullptr);
  CHECK_FALSE(tri->pass);
  // the skew unitor is a perfectly good component; only coherence breaks
  const auto* lu = why.find("lunit-component");
  REQUIRE(lu != nullptr);
  CHECK(lu->pass);

  report::Report ok;
  auto good = envelope::build_envelope(multicat::terminal_multicat(),
                                       CheckCaps{2, 2, 2}, 2, &ok);
  CHECK(good != nullptr);
  CHECK(ok.all_pass());
}

TEST_CASE("the envelope of a multifunctor is a biprop morphism") {
  auto fs = multicat::finite_set_multicat({2}, 3);
  auto env = envelope::envelope(fs, 3);
  auto swap = multicat::fs_swap_conjugation(fs);
  auto F = envelope::envelope_morphism(swap, env, env);

  // conjugating AND by the swap gives OR
  CHECK(F->obj({0, 0}, {0}, 8) == 14);
  // identity wirings are fixed
  CHECK(F->obj({0, 0}, {0, 0}, 58) == 58);

  auto rep = biprop::validate_morphism(F, CheckCaps{2, 2, 2});
  for (const auto& r : rep.results) {
    INFO(r.law, ": ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("the envelope respects identities and composition") {
  auto fs = multicat::finite_set_multicat({2}, 3);
  auto env = envelope::envelope(fs, 3);
  auto swap = multicat::fs_swap_conjugation(fs);
  auto rep = envelope::check_envelope_functoriality(swap, swap, env, env, env,
                                                    CheckCaps{2, 2, 2});
  for (const auto& r : rep.results) {
    INFO(r.law, ": ", r.witness);
    CHECK(r.pass);
  }
  CHECK(rep.find("envelope-identity") != nullptr);
  CHECK(rep.find("envelope-composition") != nullptr);

  // the swap conjugation is an involution; so is its envelope
  auto F = envelope::envelope_morphism(swap, env, env);
  auto FF = biprop::compose_morphisms(F, F);
  CHECK(biprop::morphisms_equal(FF, biprop::identity_morphism(env),
                                CheckCaps{2, 2, 2}));

  // envelopes over a different copy of the base are rejected
  auto other = envelope::envelope(multicat::finite_set_multicat({2}, 3), 3);
  CHECK_THROWS_AS(envelope::envelope_morphism(swap, other, other),
                  SchemaError);
}
