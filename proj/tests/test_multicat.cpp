#include <doctest.h>

#include <vector>

#include "bip/error.hpp"
#include "bip/multicat.hpp"

using namespace bip;
using namespace bip::multicat;
using finord::FinMap;

namespace {

// independent helpers for the substitution oracle: functions prod X_i -> Y
// ranked by sum g(p) |Y|^p, points ranked first-coordinate-fastest
int fn_value(int rank, int target_size, long long point) {
  long long q = rank;
  for (long long p = 0; p < point; ++p) q /= target_size;
  return static_cast<int>(q % target_size);
}

// skewed substitution: xor of all arguments, plus an extra flip whenever the
// index map is the fold 2 -> 1; associativity genuinely fails
class SkewedMulticat final : public StrictMulticatBase {
 public:
  SkewedMulticat() : hom_(fincat::share(fincat::FinCat::discrete(2))) {}
  std::string name() const override { return "skewed"; }
  int colours() const override { return 1; }
  int max_arity() const override { return 3; }
  fincat::CatPtr hom(const Word&, int) const override { return hom_; }
  int unit_object(int) const override { return 0; }
  int compose_obj(const FinMap& phi, const Word&, const Word&, int,
                  const std::vector<int>& inner, int outer) const override {
    int v = outer;
    for (int h : inner) v ^= h;
    if (phi.dom() == 2 && phi.cod() == 1) v ^= 1;
    return v;
  }
  int compose_mor(const FinMap& phi, const Word& as, const Word& bs, int c,
                  const std::vector<int>& inner, int outer) const override {
    return compose_obj(phi, as, bs, c, inner, outer);
  }

 private:
  fincat::CatPtr hom_;
};

}  // namespace

TEST_CASE("word helpers") {
  CHECK(subword({5, 7, 9}, {0, 2}) == Word{5, 9});
  CHECK(subword({5, 7, 9}, {}) == Word{});
  CHECK_THROWS_AS(subword({5}, {1}), SchemaError);
  CHECK(all_words(2, 0).size() == 1);
  CHECK(all_words(2, 3).size() == 8);
  CHECK(all_words(2, 2) ==
        std::vector<Word>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(all_words(0, 2).empty());
}

TEST_CASE("terminal multicategory validates") {
  auto t = terminal_multicat();
  CheckCaps caps{3, 3, 2};
  auto rep = validate_multicat(t, caps);
  CHECK(rep.all_pass());
  REQUIRE(rep.find("pentagon") != nullptr);
  CHECK(rep.find("pentagon")->pass);
  CHECK(rep.find("triangle")->pass);
  CHECK(rep.find("substitution-functor")->checked > 0);
}

TEST_CASE("finite-set hom sizes and units") {
  FiniteSetMulticat fs({2}, 3);
  CHECK(fs.hom({}, 0)->objects() == 2);
  CHECK(fs.hom({0}, 0)->objects() == 4);
  CHECK(fs.hom({0, 0}, 0)->objects() == 16);
  CHECK(fs.hom({0, 0, 0}, 0)->objects() == 256);
  CHECK(fs.unit_object(0) == 2);  // identity on a two-element set

  FiniteSetMulticat mixed({1, 2}, 2);
  CHECK(mixed.hom({0, 1}, 1)->objects() == 4);
  CHECK(mixed.hom({0}, 0)->objects() == 1);
  CHECK(mixed.unit_object(0) == 0);

  CHECK_THROWS_AS(FiniteSetMulticat({}, 2), SchemaError);
  CHECK_THROWS_AS(FiniteSetMulticat({9}, 1), SchemaError);
  CHECK_THROWS_AS(FiniteSetMulticat({2}, 9), SchemaError);
  CHECK_THROWS_AS(fs.hom({0, 0, 0, 0}, 0), CapError);
}

TEST_CASE("finite-set substitution matches the reordered-argument oracle") {
  auto mc = finite_set_multicat({2}, 3);
  auto& fs = dynamic_cast<const FiniteSetMulticat&>(*mc);
  for (int I = 0; I <= 3; ++I)
    for (int J = 0; J <= 2; ++J) {
      long long nmaps = finord::map_count(I, J);
      for (long long r = 0; r < nmaps; ++r) {
        FinMap f = FinMap::from_rank(I, J, r);
        Word as(I, 0), bs(J, 0);
        // fibre position lists, computed here from scratch
        std::vector<std::vector<int>> fib(J);
        for (int i = 0; i < I; ++i) fib[f(i)].push_back(i);
        std::vector<int> inner_sizes(J);
        for (int j = 0; j < J; ++j)
          inner_sizes[j] = 1 << (1 << fib[j].size());  // 2^(2^fibre)
        long long outer_size = J == 0 ? 2 : (1LL << (1LL << J));
        // walk a deterministic sample of inner/outer tuples
        std::vector<int> inner(J, 0);
        for (int step = 0; step < 40; ++step) {
          for (int j = 0; j < J; ++j)
            inner[j] = (step * 7 + j * 5) % inner_sizes[j];
          int outer = static_cast<int>((step * 11) % outer_size);
          int got = fs.compose_obj(f, as, bs, 0, inner, outer);
          for (long long p = 0; p < (1LL << I); ++p) {
            std::vector<int> digits(I);
            for (int i = 0; i < I; ++i) digits[i] = (p >> i) & 1;
            long long op = 0;
            for (int j = 0; j < J; ++j) {
              long long sp = 0;
              for (size_t q = 0; q < fib[j].size(); ++q)
                sp |= static_cast<long long>(digits[fib[j][q]]) << q;
              op |= static_cast<long long>(fn_value(inner[j], 2, sp)) << j;
            }
            int expect = fn_value(outer, 2, op);
            CHECK(fn_value(got, 2, p) == expect);
          }
        }
      }
    }
}

TEST_CASE("min then negation gives nand") {
  auto mc = finite_set_multicat({2}, 2);
  // min on two bits: values (0,0,0,1) -> rank 8; negation: values (1,0) -> 1
  int composite = mc->compose_obj(FinMap::to_point(2), {0, 0}, {0}, 0, {8}, 1);
  CHECK(composite == 7);  // nand: values (1,1,1,0)
}

TEST_CASE("materialized substitution is a functor") {
  auto mc = finite_set_multicat({2}, 3);
  // construction validates functoriality; spot the identity-map case and a fold
  auto m1 = materialize_mu(mc, FinMap::identity(2), {0, 0}, {0, 0}, 0);
  CHECK(m1.source.cat->objects() == 4 * 4 * 16);
  auto m2 = materialize_mu(mc, FinMap::to_point(2), {0, 0}, {0}, 0);
  CHECK(m2.source.cat->objects() == 16 * 4);
  // fold of the pair of identities into the outer argument returns it
  int u = mc->unit_object(0);
  CHECK(mc->compose_obj(FinMap::identity(2), {0, 0}, {0, 0}, 0, {u, u}, 9) == 9);
}

TEST_CASE("finite-set multicategory validates") {
  CheckCaps caps{2, 2, 2};
  auto rep = validate_multicat(finite_set_multicat({2}, 3), caps);
  CHECK(rep.all_pass());
  CHECK(rep.find("pentagon")->checked > 0);
  auto rep2 = validate_multicat(finite_set_multicat({1, 2}, 2), caps);
  CHECK(rep2.all_pass());
}

TEST_CASE("sign multicategory validates and adds signs") {
  auto mc = sign_multicat(3);
  CheckCaps caps{2, 2, 2};
  auto rep = validate_multicat(mc, caps);
  CHECK(rep.all_pass());
  // naturality loops had genuine morphisms to walk
  CHECK(rep.find("lunit-naturality")->checked > 0);
  CHECK(mc->compose_mor(FinMap::to_point(2), {0, 0}, {0}, 0, {1}, 1) == 0);
  CHECK(mc->compose_mor(FinMap::to_point(2), {0, 0}, {0}, 0, {1}, 0) == 1);
}

TEST_CASE("strictify accepts strict data and refuses skewed data") {
  CheckCaps caps{2, 2, 2};
  auto ok = strictify(finite_set_multicat({2}, 2), caps);
  CHECK(ok->strict());
  CHECK(ok->compose_obj(FinMap::to_point(2), {0, 0}, {0}, 0, {8}, 1) == 7);

  auto skew = std::make_shared<SkewedMulticat>();
  CHECK_THROWS_AS(strictify(skew, caps), SchemaError);
}

TEST_CASE("identity and inclusion multifunctors validate") {
  CheckCaps caps{2, 2, 2};
  auto fs = finite_set_multicat({1, 2}, 2);
  auto idf = identity_multifunctor(fs);
  auto rep = validate_multifunctor(idf, caps);
  CHECK(rep.all_pass());

  // terminal -> finite-set at the singleton colour: all homs collapse
  class Include final : public StrictMultifunctorBase {
   public:
    Include(McPtr s, McPtr d) : s_(std::move(s)), d_(std::move(d)) {}
    std::string name() const override { return "include"; }
    McPtr src() const override { return s_; }
    McPtr dst() const override { return d_; }
    int colour_map(int) const override { return 0; }
    int obj(const Word&, int, int) const override { return 0; }
    int mor(const Word&, int, int) const override { return 0; }

   private:
    McPtr s_, d_;
  };
  auto inc = std::make_shared<Include>(terminal_multicat(), fs);
  auto rep2 = validate_multifunctor(inc, caps);
  CHECK(rep2.all_pass());
}

namespace {

// conjugation by the swap of the two-element set, one colour
class SwapConjugation final : public StrictMultifunctorBase {
 public:
  explicit SwapConjugation(McPtr fs) : fs_(std::move(fs)) {}
  std::string name() const override { return "swap-conj"; }
  McPtr src() const override { return fs_; }
  McPtr dst() const override { return fs_; }
  int colour_map(int c) const override { return c; }
  int obj(const Word& as, int, int x) const override {
    int n = static_cast<int>(as.size());
    long long points = 1LL << n;
    long long out = 0;
    for (long long p = 0; p < points; ++p) {
      long long flipped = ~p & (points - 1);
      int v = 1 - fn_value(x, 2, flipped);
      out |= static_cast<long long>(v) << p;
    }
    return static_cast<int>(out);
  }
  int mor(const Word& as, int b, int m) const override { return obj(as, b, m); }

 private:
  McPtr fs_;
};

}  // namespace

TEST_CASE("swap conjugation is a multifunctor and squares to the identity") {
  CheckCaps caps{2, 2, 2};
  auto fs = finite_set_multicat({2}, 2);
  auto sw = std::make_shared<SwapConjugation>(fs);
  auto rep = validate_multifunctor(sw, caps);
  CHECK(rep.all_pass());
  CHECK(sw->obj({0}, 0, fs->unit_object(0)) == fs->unit_object(0));
  // negation conjugated is negation again
  CHECK(sw->obj({0}, 0, 1) == 1);

  auto sq = compose_multifunctors(sw, sw);
  CHECK(multifunctors_equal(sq, identity_multifunctor(fs), caps));
  CHECK_FALSE(multifunctors_equal(sw, identity_multifunctor(fs), caps));
  auto rep2 = validate_multifunctor(sq, caps);
  CHECK(rep2.all_pass());
}

TEST_CASE("composition with identity leaves a multifunctor unchanged") {
  CheckCaps caps{2, 2, 2};
  auto fs = finite_set_multicat({2}, 2);
  auto sw = std::make_shared<SwapConjugation>(fs);
  auto idf = identity_multifunctor(fs);
  CHECK(multifunctors_equal(compose_multifunctors(idf, sw), sw, caps));
  CHECK(multifunctors_equal(compose_multifunctors(sw, idf), sw, caps));
}
