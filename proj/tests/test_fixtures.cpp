#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "bip/biprop.hpp"
#include "bip/catprop.hpp"
#include "bip/error.hpp"
#include "bip/fixtures.hpp"
#include "bip/multicat.hpp"
#include "bip/report.hpp"

using namespace bip;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_file(const std::string& path) { return json::parse(slurp(path)); }

const report::CheckResult& law(const report::Report& rep, const char* name) {
  const auto* r = rep.find(name);
  REQUIRE(r != nullptr);
  return *r;
}

}  // namespace

TEST_CASE("strict multicategory fixtures load through the strictifying wrapper") {
  auto fx = fixtures::load_fixture("fixtures/terminal.json");
  CHECK(fx.kind == fixtures::Kind::multicat);
  CHECK(fx.name == "terminal");
  // defaulted caps block, written out explicitly by the generator
  CHECK(fx.caps.max_word_len == 3);
  CHECK(fx.caps.max_index == 3);
  CHECK(fx.caps.max_hom == 4);
  REQUIRE(fx.mc);
  CHECK(fx.mc->name() == "terminal/strict");
  CHECK(fx.mc->strict());
  CHECK(fx.mc->colours() == 1);
  CHECK(fx.mc->max_arity() == 3);

  auto rep = multicat::validate_multicat(fx.mc, fixtures::check_caps(fx.caps));
  CHECK(rep.all_pass());
  CHECK(rep.total_checked() == 5175);
}

TEST_CASE("finite-set fixtures validate in full") {
  auto fs = fixtures::load_fixture("fixtures/finite-set.json");
  CHECK(fs.caps.max_hom == 16);
  REQUIRE(fs.mc);
  CHECK(fs.mc->strict());
  CHECK(fs.mc->unit_object(0) == 2);  // identity function on two points
  auto rep = multicat::validate_multicat(fs.mc, fixtures::check_caps(fs.caps));
  CHECK(rep.all_pass());
  CHECK(rep.total_checked() == 578958);

  auto small = fixtures::load_fixture("fixtures/fs-small.json");
  REQUIRE(small.mc);
  CHECK(small.mc->colours() == 2);
  auto rep2 =
      multicat::validate_multicat(small.mc, fixtures::check_caps(small.caps));
  CHECK(rep2.all_pass());
  CHECK(rep2.total_checked() == 1583643);
}

TEST_CASE("a flipped associativity entry fails exactly the coherence laws") {
  auto fx = fixtures::load_fixture("fixtures/corrupt-nu.json");
  REQUIRE(fx.mc);
  CHECK_FALSE(fx.mc->strict());

  auto rep = multicat::validate_multicat(fx.mc, fixtures::check_caps(fx.caps));
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.total_checked() == 1685);
  for (const auto& r : rep.results) {
    const bool coherence = r.law == "pentagon" || r.law == "triangle";
    CHECK(r.pass == !coherence);
  }
  // the flip survives as a well-formed isomorphism, so the component and
  // naturality sweeps stay green and only the pastings notice
  CHECK(law(rep, "assoc-component").checked == 47);
  CHECK(law(rep, "pentagon").checked == 12);
  CHECK(law(rep, "pentagon").witness.find("pentagon does not commute") !=
        std::string::npos);
  CHECK(law(rep, "triangle").checked == 4);
}

TEST_CASE("a transposed value table fails the substitution comparison") {
  // no extension on purpose: the loader falls back to PATH.json
  auto fx = fixtures::load_fixture("fixtures/corrupt-multifunctor");
  CHECK(fx.kind == fixtures::Kind::multifunctor);
  REQUIRE(fx.mf);
  CHECK(fx.mf->strict());

  auto rep =
      multicat::validate_multifunctor(fx.mf, fixtures::check_caps(fx.caps));
  CHECK_FALSE(rep.all_pass());
  CHECK(law(rep, "hom-functor").pass);
  CHECK(law(rep, "hom-functor").checked == 66);
  // the unit object keeps its image, so the damage is invisible at the units
  CHECK(law(rep, "unit-comparison").pass);
  CHECK_FALSE(law(rep, "subst-comparison").pass);
  CHECK(law(rep, "subst-comparison").witness.find(
            "bad substitution comparison") != std::string::npos);
  for (const char* name : {"assoc-compat", "lunit-compat", "runit-compat"}) {
    CHECK_FALSE(law(rep, name).pass);
    CHECK(law(rep, name).witness ==
          "not attempted: comparison checks failed");
  }
}

TEST_CASE("multifunctor fixtures validate and match their generators") {
  auto inc = fixtures::load_fixture("fixtures/mf-include.json");
  REQUIRE(inc.mf);
  auto rep =
      multicat::validate_multifunctor(inc.mf, fixtures::check_caps(inc.caps));
  CHECK(rep.all_pass());
  CHECK(rep.total_checked() == 7853);

  auto sw = fixtures::load_fixture("fixtures/mf-swap.json");
  REQUIRE(sw.mf);
  auto rep2 =
      multicat::validate_multifunctor(sw.mf, fixtures::check_caps(sw.caps));
  CHECK(rep2.all_pass());

  const CheckCaps caps = fixtures::check_caps(sw.caps);
  auto code = multicat::fs_swap_conjugation(multicat::finite_set_multicat({2}, 2));
  CHECK(multicat::multifunctors_equal(sw.mf, code, caps));

  // value tables survive a serialize/parse cycle; embedded names gain the
  // wrapper suffix, so the comparison is semantic rather than byte level
  auto reloaded = fixtures::parse_fixture(
      fixtures::serialize_multifunctor(sw.mf, sw.name, sw.caps));
  REQUIRE(reloaded.mf);
  CHECK(multicat::multifunctors_equal(reloaded.mf, sw.mf, caps));
}

TEST_CASE("the reference biprop fixture reproduces its generator byte for byte") {
  auto fx = fixtures::load_fixture("fixtures/corrupt-assoc.json");
  CHECK(fx.kind == fixtures::Kind::biprop_reference);
  REQUIRE(fx.reference);

  auto rep = biprop::check_bicategory(fx.reference, fixtures::check_caps(fx.caps));
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.total_checked() == 1268);
  for (const auto& r : rep.results) {
    const bool coherence = r.law == "pentagon" || r.law == "triangle";
    CHECK(r.pass == !coherence);
  }

  const std::string bytes = slurp("fixtures/corrupt-assoc.json");
  CHECK(fixtures::serialize_reference_biprop(biprop::sign_reference_data(2, 1),
                                             "corrupt-assoc", {2, 2, 4}) ==
        bytes);
  const auto* tab =
      dynamic_cast<const biprop::TabulatedBiprop*>(fx.reference.get());
  REQUIRE(tab != nullptr);
  CHECK(fixtures::serialize_reference_biprop(tab->data(), fx.name, fx.caps) ==
        bytes);
}

TEST_CASE("registry fixtures default their caps and build the functor biprop") {
  auto fx = fixtures::load_fixture("fixtures/registry-basic.json");
  CHECK(fx.kind == fixtures::Kind::registry);
  // the file carries no caps block at all
  CHECK(fx.caps.max_word_len == 3);
  CHECK(fx.caps.max_index == 3);
  CHECK(fx.caps.max_hom == 4);
  REQUIRE(fx.registry.size() == 2);
  CHECK(fx.registry_word_len == 2);

  auto cv = std::make_shared<const catprop::CatValuedBiprop>(
      fx.registry, fx.registry_word_len);
  CHECK(cv->hom({1, 1}, {1, 1})->objects() == 256);
  CHECK(cv->unit_object({1, 1}) == 228);

  const std::string s1 = fixtures::serialize_registry(
      fx.registry, fx.registry_word_len, fx.name, fx.caps);
  auto fx2 = fixtures::parse_fixture(s1);
  CHECK(fixtures::serialize_registry(fx2.registry, fx2.registry_word_len,
                                     fx2.name, fx2.caps) == s1);
}

TEST_CASE("multicat serialization round-trips byte for byte") {
  const std::string bytes = slurp("fixtures/terminal.json");
  auto fx = fixtures::parse_fixture(bytes);
  CHECK(fixtures::serialize_multicat(fx.mc, fx.name, fx.caps, true) == bytes);
}

TEST_CASE("malformed fixtures are rejected with the right error class") {
  CHECK_THROWS_AS(fixtures::load_fixture("fixtures/definitely-missing"),
                  SchemaError);
  CHECK_THROWS_AS(fixtures::parse_fixture("{"), SchemaError);
  CHECK_THROWS_AS(fixtures::parse_fixture(R"({"kind":"multicat"})"),
                  SchemaError);
  CHECK_THROWS_AS(
      fixtures::parse_fixture(R"({"kind":"prop","name":"x"})"), SchemaError);

  // a strict payload must not carry component tables...
  {
    json j = parse_file("fixtures/corrupt-nu.json");
    j["strict"] = true;
    CHECK_THROWS_AS(fixtures::parse_fixture(j.dump()), SchemaError);
  }
  // ...and a non-strict one cannot do without them
  {
    json j = parse_file("fixtures/terminal.json");
    j["strict"] = false;
    CHECK_THROWS_AS(fixtures::parse_fixture(j.dump()), SchemaError);
  }

  // shrinking the declared caps below the declared data trips the cap check
  {
    json j = parse_file("fixtures/finite-set.json");
    j["caps"]["max_word_len"] = 1;
    CHECK_THROWS_AS(fixtures::parse_fixture(j.dump()), CapError);
  }
  {
    json j = parse_file("fixtures/registry-basic.json");
    j["max_word_len"] = 9;
    CHECK_THROWS_AS(fixtures::parse_fixture(j.dump()), CapError);
  }
  CHECK_THROWS_AS(
      fixtures::serialize_registry({fincat::share(fincat::FinCat::discrete(9))},
                                   1, "big", {}),
      CapError);

  // a declared-strict payload with tables that break strictness fails the
  // load itself, not some later check
  {
    json j = parse_file("fixtures/finite-set.json");
    bool hit = false;
    for (auto& e : j.at("mu"))
      if (e.at("phi") == json::array({0}) && e.at("cod") == 1 &&
          e.at("as") == json::array({0}) && e.at("bs") == json::array({0}) &&
          e.at("target") == 0) {
        std::swap(e.at("objects")[8], e.at("objects")[9]);
        hit = true;
      }
    REQUIRE(hit);
    CHECK_THROWS_WITH_AS(fixtures::parse_fixture(j.dump()),
                         doctest::Contains("unequal sides"), SchemaError);
  }
}
