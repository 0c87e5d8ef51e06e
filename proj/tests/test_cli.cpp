#include <doctest.h>

#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// runs the checker with stderr folded into stdout
RunResult run(const std::string& args) {
  const std::string cmd = std::string(BIPCHECK_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("exit codes partition outcomes") {
  auto ok = run("validate-multicat fixtures/terminal");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "overall: PASS laws=10 instances=5175"));

  auto red = run("validate-multicat fixtures/corrupt-nu.json");
  CHECK(red.code == 1);
  CHECK(contains(red.out, "[FAIL] pentagon"));
  CHECK(contains(red.out, "pentagon does not commute"));

  auto wrong_kind = run("validate-multicat fixtures/registry-basic.json");
  CHECK(wrong_kind.code == 2);
  CHECK(contains(wrong_kind.out, "schema error"));

  auto missing = run("validate-multicat no-such-file");
  CHECK(missing.code == 2);

  auto too_long = run("envelope fixtures/finite-set.json --dump-hom 0,0,0 0");
  CHECK(too_long.code == 3);
  CHECK(contains(too_long.out, "cap error"));
}

TEST_CASE("check-biprop reports the corrupted pentagon with a witness") {
  auto r = run("check-biprop fixtures/corrupt-assoc.json");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "[FAIL] pentagon checked=1 witness=pentagon fails"));
  CHECK(contains(r.out, "overall: FAIL laws=11 instances=1268"));
}

TEST_CASE("envelope prints the summand layout and passes its law suite") {
  auto dump = run("envelope fixtures/finite-set.json --dump-hom 0,0 0");
  CHECK(dump.code == 0);
  CHECK(contains(dump.out, "envelope env(finite-set/strict) colours=1"));
  CHECK(contains(dump.out, "hom (0,0);(0) objects=16 morphisms=16 summands=1"));
  CHECK(contains(dump.out, "phi=[0,0]:2->1 offset=0 size=16"));

  auto check = run("envelope fixtures/terminal --check");
  CHECK(check.code == 0);
  CHECK(contains(check.out, "overall: PASS laws=21 instances=2408"));
}

TEST_CASE("actions print the permutation tables") {
  auto l = run("act fixtures/finite-set.json --hom 0,0 0 --side l --perm 1,0");
  CHECK(l.code == 0);
  CHECK(contains(l.out, "left action beta=[1,0]:2->2"));
  // swapping the two arguments of a binary function exchanges these tables
  CHECK(contains(l.out, "obj 2 -> 4"));
  CHECK(contains(l.out, "obj 4 -> 2"));

  auto r = run("act fixtures/finite-set.json --hom 0 0,0 --side r --perm 1,0");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "right action delta=[1,0]:2->2"));
  CHECK(contains(r.out, "obj 1 -> 10"));

  auto bad = run("act fixtures/finite-set.json --hom 0,0 0 --side x --perm 1,0");
  CHECK(bad.code == 2);
}

TEST_CASE("catprop-demo prints spot values for both registries") {
  auto def = run("catprop-demo");
  CHECK(def.code == 0);
  CHECK(contains(def.out, "cat-valued biprop colours=2 max-word-len=2"));
  CHECK(contains(def.out, "hom (1);(1) objects=4 morphisms=4"));
  CHECK(contains(def.out, "unit (-) = 0"));

  auto fx = run("catprop-demo --registry fixtures/registry-basic.json");
  CHECK(fx.code == 0);
  CHECK(contains(fx.out, "cat-valued biprop colours=2 max-word-len=2"));
}

TEST_CASE("compose-morphisms validates the pasted composite") {
  auto r = run(
      "compose-morphisms fixtures/mf-swap.json fixtures/mf-include.json "
      "--check");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "composite env(mf-swap);env(mf-include)"));
  CHECK(contains(r.out, "colour 0 -> 1"));
  CHECK(contains(r.out, "overall: PASS laws=10 instances=117994"));

  auto bad = run(
      "compose-morphisms fixtures/mf-include.json fixtures/mf-swap.json");
  CHECK(bad.code == 2);
  CHECK(contains(bad.out, "not composable"));
}

TEST_CASE("reports are byte-identical across runs and formats are honored") {
  const std::string cmd = "validate-multicat fixtures/corrupt-nu.json";
  auto a = run(cmd);
  auto b = run(cmd);
  CHECK(a.out == b.out);

  auto s = run("--format structured " + cmd);
  CHECK(s.code == 1);
  CHECK(s.out.front() == '{');
  CHECK(contains(s.out, "\"overall\": false"));
  auto s2 = run("--format structured " + cmd);
  CHECK(s.out == s2.out);
}
