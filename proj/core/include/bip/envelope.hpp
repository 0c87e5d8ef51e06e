#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bip/biprop.hpp"
#include "bip/multicat.hpp"

namespace bip::envelope {

using biprop::BpMorPtr;
using biprop::BpPtr;
using biprop::Word;
using fincat::CatPtr;
using finord::FinMap;
using multicat::McPtr;
using multicat::MfPtr;

// hom((A_i)_I; (B_j)_J) is the coproduct over maps phi : I -> J, taken in
// rank order, of the products over j of C(A | phi^-1 j; B_j).  An object or
// morphism splits into the summand tag and its component tuple.
struct EnvHom {
  Word a, b;
  std::vector<FinMap> phis;
  std::vector<finord::FiberDecomposition> decs;
  std::vector<fincat::ProductCat> parts;
  fincat::CoproductCat cop;

  CatPtr cat() const { return cop.cat; }

  struct Split {
    int tag = 0;
    std::vector<int> comps;
  };
  Split split_obj(int x) const;
  Split split_mor(int m) const;
  int join_obj(int tag, const std::vector<int>& comps) const;
  int join_mor(int tag, const std::vector<int>& comps) const;
};

// The enveloping biprop of a finite symmetric weak multicategory: hom
// categories as above, horizontal composition by fibrewise substitution,
// tensors by merging tags along a cospan, and coherence components taken
// summandwise from the base structure.  Hom categories are materialised
// lazily and memoised; their total size is guarded per word pair.
class EnvelopeBiprop final : public biprop::Biprop {
 public:
  EnvelopeBiprop(McPtr base, int max_word_len,
                 long long max_hom_objects = 1 << 20);

  std::string name() const override;
  int colours() const override { return mc_->colours(); }
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
  bool strict() const override { return mc_->strict(); }

  const EnvHom& hom_data(const Word& a, const Word& b) const;
  McPtr base() const { return mc_; }

 private:
  struct ComposeCtx;
  struct ComposePlan;
  struct AssocCtx;
  struct AssocPlan;
  struct TensorShape;

  int compose_impl(const Word& a, const Word& b, const Word& c, int x, int y,
                   bool mor) const;
  int tensor_impl(const FinMap& f, const FinMap& g, const Word& a,
                  const Word& b, const std::vector<int>& xs, bool mor) const;
  ComposeCtx& compose_ctx(const Word& a, const Word& b, const Word& c) const;
  const ComposePlan& compose_plan(ComposeCtx& ctx, int tx, int ty) const;
  AssocCtx& assoc_ctx(const Word& a, const Word& b, const Word& c,
                      const Word& d) const;
  const AssocPlan& assoc_plan(AssocCtx& ctx, int tx, int ty, int tz) const;
  TensorShape& tensor_shape(const FinMap& f, const FinMap& g, const Word& a,
                            const Word& b) const;

  McPtr mc_;
  int max_word_len_;
  long long max_hom_objects_;
  mutable std::map<std::vector<int>, EnvHom> homs_;
  mutable std::map<std::vector<int>, std::unique_ptr<ComposeCtx>> compose_ctxs_;
  mutable std::map<std::vector<int>, std::unique_ptr<AssocCtx>> assoc_ctxs_;
  mutable std::map<std::vector<int>, std::unique_ptr<TensorShape>> tensor_shapes_;
};

using EnvPtr = std::shared_ptr<const EnvelopeBiprop>;

EnvPtr envelope(const McPtr& base, int max_word_len,
                long long max_hom_objects = 1 << 20);

// Validates the base within caps first; an invalid base is refused (null
// return) and the validation report is stored in `out` when given.
EnvPtr build_envelope(const McPtr& base, const CheckCaps& caps,
                      int max_word_len, report::Report* out = nullptr,
                      long long max_hom_objects = 1 << 20);

// The envelope of a multifunctor: tags pass through, components map
// factorwise, comparisons assemble from the base comparisons.
BpMorPtr envelope_morphism(const MfPtr& f, const EnvPtr& src,
                           const EnvPtr& dst);

// Envelope respects identities and composition of multifunctors, up to
// equality of the resulting biprop morphisms within caps.
report::Report check_envelope_functoriality(const MfPtr& f, const MfPtr& g,
                                            const EnvPtr& ef,
                                            const EnvPtr& em,
                                            const EnvPtr& eg,
                                            const CheckCaps& caps);

}  // namespace bip::envelope
