#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bip/caps.hpp"
#include "bip/fincat.hpp"
#include "bip/finord.hpp"
#include "bip/report.hpp"

namespace bip::multicat {

using fincat::CatPtr;
using fincat::FinCat;
using fincat::FinFunctor;
using finord::FinMap;

// A word of colours; position i carries the colour of the i-th input.
using Word = std::vector<int>;

// The sub-word of w picked out by the listed positions, in the listed order.
Word subword(const Word& w, const std::vector<int>& elems);

// Words of a given length over a colour set, ranked with position 0 as the
// least significant digit (same convention as every other codec here).
std::vector<Word> all_words(int colours, int len);

// A finite symmetric weak multicategory, exposed through evaluators rather
// than materialized tables: hom categories per (word, target colour), units,
// substitution mu_phi indexed by arbitrary maps phi, and the structural
// isomorphisms (associativity nu, left unitor theta, right unitor zeta_u)
// given componentwise.  Symmetry is not extra data: composing along
// bijections already realizes it.
//
// Substitution along phi : I -> J takes one inner argument per j in J, living
// in hom(subword(as, phi^-1 j); bs[j]) with the fibre enumerated in
// increasing order, plus an outer argument in hom(bs; c); the result lives in
// hom(as; c).
class SWMulticat {
 public:
  virtual ~SWMulticat() = default;

  virtual std::string name() const = 0;
  virtual int colours() const = 0;
  // Longest word for which hom data exists.
  virtual int max_arity() const = 0;

  virtual CatPtr hom(const Word& as, int b) const = 0;
  virtual int unit_object(int a) const = 0;

  virtual int compose_obj(const FinMap& phi, const Word& as, const Word& bs,
                          int c, const std::vector<int>& inner,
                          int outer) const = 0;
  virtual int compose_mor(const FinMap& phi, const Word& as, const Word& bs,
                          int c, const std::vector<int>& inner,
                          int outer) const = 0;

  // Component of nu_{f,g} at ((h_j)_J, (m_k)_K, w): a morphism of hom(as; d)
  // from the composite that pairs f with g first (per-fibre composites of the
  // h's with m_k, then one outer substitution along f.g) to the nested
  // composite mu_f((h_j), mu_g((m_k), w)).
  virtual int assoc_component(const FinMap& f, const FinMap& g, const Word& as,
                              const Word& bs, const Word& cs, int d,
                              const std::vector<int>& hs,
                              const std::vector<int>& ms, int w) const = 0;

  // theta: mu_{id_I}((1_{A_i})_I, x) -> x for x in hom(as; b).
  virtual int lunit_component(const Word& as, int b, int x) const = 0;
  // zeta_u: mu_{I->1}((x), 1_B) -> x.
  virtual int runit_component(const Word& as, int b, int x) const = 0;

  // Declared-strict instances promise identity nu/theta/zeta_u.
  virtual bool strict() const { return false; }
};

using McPtr = std::shared_ptr<const SWMulticat>;

// The two sides of an associativity instance, as objects of hom(as; d).
int route_a_obj(const SWMulticat& mc, const FinMap& f, const FinMap& g,
                const Word& as, const Word& bs, const Word& cs, int d,
                const std::vector<int>& hs, const std::vector<int>& ms, int w);
int route_b_obj(const SWMulticat& mc, const FinMap& f, const FinMap& g,
                const Word& as, const Word& bs, const Word& cs, int d,
                const std::vector<int>& hs, const std::vector<int>& ms, int w);
// Same on morphism data.
int route_a_mor(const SWMulticat& mc, const FinMap& f, const FinMap& g,
                const Word& as, const Word& bs, const Word& cs, int d,
                const std::vector<int>& hs, const std::vector<int>& ms, int w);
int route_b_mor(const SWMulticat& mc, const FinMap& f, const FinMap& g,
                const Word& as, const Word& bs, const Word& cs, int d,
                const std::vector<int>& hs, const std::vector<int>& ms, int w);

// mu_phi materialized as an honest functor [prod_j hom_j] x hom_outer ->
// hom(as; c), for oracle tests on small configurations.
struct MaterializedMu {
  fincat::ProductCat source;  // inner factors in j order, outer last
  FinFunctor functor;
};
MaterializedMu materialize_mu(const McPtr& mc, const FinMap& phi,
                              const Word& as, const Word& bs, int c,
                              long long max_objects = 1 << 16);

// Exhaustive law checking within caps: substitution functoriality, component
// endpoints/invertibility and naturality for nu/theta/zeta_u, the pentagon,
// and the triangle tying nu, theta and zeta_u together.  When every scanned
// component is an identity, the pentagon and triangle composites are forced
// by the scanned endpoint equalities, and the checker records the scan count
// instead of walking the (much larger) composite configuration space.
report::Report validate_multicat(const McPtr& mc, const CheckCaps& caps);

// Base for strict instances: all three iso families are identities.  The
// component evaluators recompute both endpoint objects and refuse (SchemaError)
// when they differ, so "strictifying" genuinely weak data fails loudly.
class StrictMulticatBase : public SWMulticat {
 public:
  bool strict() const override { return true; }
  int assoc_component(const FinMap& f, const FinMap& g, const Word& as,
                      const Word& bs, const Word& cs, int d,
                      const std::vector<int>& hs, const std::vector<int>& ms,
                      int w) const override;
  int lunit_component(const Word& as, int b, int x) const override;
  int runit_component(const Word& as, int b, int x) const override;
};

McPtr terminal_multicat();

// Colours are finite sets given by their sizes; hom((X_i); Y) is the discrete
// category of functions prod_i X_i -> Y and substitution is substitution of
// functions, which is strictly associative and unital.  Functions are ranked
// by sum_p g(p) |Y|^p over points p of the domain product (point 0 least
// significant); points are ranked with the first coordinate fastest.
class FiniteSetMulticat final : public StrictMulticatBase {
 public:
  FiniteSetMulticat(std::vector<int> sizes, int max_arity);

  std::string name() const override;
  int colours() const override { return static_cast<int>(sizes_.size()); }
  int max_arity() const override { return max_arity_; }
  CatPtr hom(const Word& as, int b) const override;
  int unit_object(int a) const override;
  int compose_obj(const FinMap& phi, const Word& as, const Word& bs, int c,
                  const std::vector<int>& inner, int outer) const override;
  int compose_mor(const FinMap& phi, const Word& as, const Word& bs, int c,
                  const std::vector<int>& inner, int outer) const override;

  int set_size(int colour) const;
  // Number of points of the domain product of a word.
  long long point_count(const Word& as) const;
  // Value of the function with the given object id at the given point rank.
  int eval(const Word& as, int b, int obj, long long point) const;

 private:
  long long hom_size(const Word& as, int b) const;  // capped, throws CapError

  std::vector<int> sizes_;
  int max_arity_ = 0;
  mutable std::map<std::vector<int>, CatPtr> hom_cache_;
};

McPtr finite_set_multicat(std::vector<int> sizes, int max_arity);

// One colour, every hom the one-object two-morphism group {1, s}; morphisms
// are signs and substitution adds them.  Strict, but with genuinely
// non-discrete homs, so naturality loops have work to do; fixtures corrupt
// its tables to exercise failure reporting.
McPtr sign_multicat(int max_arity);

// Wraps a multicategory, replacing nu/theta/zeta_u by identities after an
// eager scan within caps that every associativity/unit instance has literally
// equal sides; throws SchemaError otherwise.  Beyond the scanned caps the
// wrapper still recomputes endpoints on every call and refuses mismatches.
McPtr strictify(const McPtr& base, const CheckCaps& caps);

// ---------------------------------------------------------------------------

// A symmetric weak multifunctor F : C -> D: a colour map, a functor between
// the hom categories for every (word, target), an invertible comparison
// 1_{F a} -> F(1_a) per colour, and an invertible comparison per substitution
// instance from mu^D over the F-images to the F-image of mu^C.
class SWMultifunctor {
 public:
  virtual ~SWMultifunctor() = default;

  virtual std::string name() const = 0;
  virtual McPtr src() const = 0;
  virtual McPtr dst() const = 0;

  virtual int colour_map(int c) const = 0;
  Word word_map(const Word& as) const;

  virtual int obj(const Word& as, int b, int x) const = 0;
  virtual int mor(const Word& as, int b, int m) const = 0;

  // 1_{F a} -> F(1_a), a morphism of dst hom((Fa); Fa).
  virtual int unit_comparison(int a) const = 0;
  // mu^D_phi((F h_j), F w) -> F(mu^C_phi((h_j), w)), in dst hom(F as; F c).
  virtual int subst_comparison(const FinMap& phi, const Word& as,
                               const Word& bs, int c,
                               const std::vector<int>& inner,
                               int outer) const = 0;

  virtual bool strict() const { return false; }
};

using MfPtr = std::shared_ptr<const SWMultifunctor>;

// Base for strict multifunctors: comparisons are identities; evaluators
// recompute both endpoint objects and refuse mismatches.
class StrictMultifunctorBase : public SWMultifunctor {
 public:
  bool strict() const override { return true; }
  int unit_comparison(int a) const override;
  int subst_comparison(const FinMap& phi, const Word& as, const Word& bs,
                       int c, const std::vector<int>& inner,
                       int outer) const override;
};

MfPtr identity_multifunctor(const McPtr& c);

// Diagrammatic composite: apply f, then g.  Comparisons are the stacked
// pastings (g's comparison at the f-images followed by g of f's comparison).
MfPtr compose_multifunctors(const MfPtr& f, const MfPtr& g);

// Conjugation by the pointwise swap on a finite-set multicategory all of
// whose colours have exactly two points; an involutive strict endofunctor.
MfPtr fs_swap_conjugation(const McPtr& fs);

// Checks hom-functor laws, comparison endpoints/invertibility/naturality, and
// the three coherence families (with nu, with theta, with zeta_u) within caps.
report::Report validate_multifunctor(const MfPtr& f, const CheckCaps& caps);

// True when the two multifunctors agree on every hom object/morphism and
// every comparison component within caps (endpoints must already agree).
bool multifunctors_equal(const MfPtr& f, const MfPtr& g, const CheckCaps& caps);

}  // namespace bip::multicat
