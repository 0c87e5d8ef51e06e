#pragma once

#include <map>
#include <memory>
#include <vector>

#include "bip/biprop.hpp"
#include "bip/caps.hpp"
#include "bip/report.hpp"

namespace bip::catprop {

using biprop::BpPtr;
using biprop::Word;
using fincat::CatPtr;
using finord::FinMap;

// The colours available by default: the one-object category and the
// two-object discrete category.
std::vector<CatPtr> default_registry();

// Categories as colours: a word denotes the product of its colour
// categories, hom(a; b) is the category of functors between the products,
// composition is functor composition, and units are identity functors, so
// every structure component is an identity.
//
// Tensoring over a cospan f : I -> K <- J : g reorders the input product
// along the fibre graph of f, applies the blocks factorwise, and reorders
// the output back along the fibre graph of g.  Nested and flat products
// share one codec, so this tensor is strict on the nose; the strictness
// rests on the graph assignment turning composition into composition, and
// `skip_input_reindex` deliberately omits the input reordering so tests can
// watch the tensor laws fail while everything one-sided still holds.
class CatValuedBiprop final : public biprop::Biprop {
 public:
  explicit CatValuedBiprop(std::vector<CatPtr> registry, int max_word_len = 2,
                           long long max_hom_objects = 1 << 20,
                           bool skip_input_reindex = false);
  ~CatValuedBiprop() override;  // out of line: the plan cache owns an
                                // incomplete type here

  std::string name() const override;
  int colours() const override { return static_cast<int>(registry_.size()); }
  int max_word_len() const override { return max_word_len_; }
  CatPtr hom(const Word& a, const Word& b) const override;
  int unit_object(const Word& a) const override;
  int compose_obj(const Word& a, const Word& b, const Word& c, int x,
                  int y) const override;
  int compose_mor(const Word& a, const Word& b, const Word& c, int mx,
                  int my) const override;
  int assoc_component(const Word& a, const Word& b, const Word& c,
                      const Word& d, int x, int y, int z) const override;
  int lunit_component(const Word& a, const Word& b, int x) const override;
  int runit_component(const Word& a, const Word& b, int x) const override;
  int tensor_obj(const FinMap& f, const FinMap& g, const Word& a,
                 const Word& b, const std::vector<int>& xs) const override;
  int tensor_mor(const FinMap& f, const FinMap& g, const Word& a,
                 const Word& b, const std::vector<int>& xs) const override;
  bool strict() const override { return true; }

  const fincat::FunctorCat& hom_data(const Word& a, const Word& b) const;
  const fincat::ProductCat& word_product(const Word& a) const;

 private:
  void check_word(const Word& a) const;
  fincat::FinFunctor functor_at(const Word& a, const Word& b, int x) const;
  fincat::FinNatTrans nat_at(const Word& a, const Word& b, int m) const;

  // Shared bookkeeping of one tensor instance: fibre orders, the reordering
  // functors on both sides, and the block word layout.
  struct TensorPlan;
  const TensorPlan& tensor_plan(const FinMap& f, const FinMap& g,
                                const Word& a, const Word& b) const;

  std::vector<CatPtr> registry_;
  int max_word_len_ = 0;
  long long max_hom_objects_ = 0;
  bool skip_input_reindex_ = false;

  mutable std::map<Word, fincat::ProductCat> prods_;
  mutable std::map<std::vector<int>, fincat::FunctorCat> homs_;
  mutable std::map<std::vector<int>, std::unique_ptr<TensorPlan>> plans_;
};

using CvPtr = std::shared_ptr<const CatValuedBiprop>;

CvPtr cat_valued_biprop(int max_word_len = 2);
CvPtr cat_valued_biprop(std::vector<CatPtr> registry, int max_word_len,
                        long long max_hom_objects = 1 << 20);

// The biprop law sweep plus what is special here: every associator and
// unitor component is an identity morphism, and the fibre-graph assignment
// is functorial (the combinatorial fact the strict tensor stands on).
// Extra laws: identity-components, graph-compatibility.
//
// Hom sizes grow exponentially in word length, so the two law families that
// enumerate hom-object triples across unrestricted words run clamped: the
// word-indexed composition laws at one-letter words and the block-product
// tensor laws at a multi-index bound of one.  The bijection-indexed derived
// identities and the remaining tensor laws run at the caller's caps, which
// is where the permutation reindexing gets exercised.
report::Report check_catprop(const CvPtr& cp, const CheckCaps& caps);

}  // namespace bip::catprop
