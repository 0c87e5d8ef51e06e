#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bip/caps.hpp"
#include "bip/fincat.hpp"
#include "bip/finord.hpp"
#include "bip/report.hpp"

namespace bip::biprop {

using fincat::CatPtr;
using fincat::FinCat;
using finord::FinMap;
using Word = std::vector<int>;

// A biprop: hom categories indexed by pairs of colour words, horizontal
// composition m with unit objects, associativity / unitor isomorphisms given
// componentwise, and tensor functors indexed by cospans of finite index maps.
// Everything is exposed through pointwise evaluators; hom categories are the
// only materialised tables, so large tensor sources never get built.
//
// tensor over the cospan f : I -> K <- J : g takes one argument per k in K,
// xs[k] in hom(a restricted to f^-1 k; b restricted to g^-1 k) with fibres
// enumerated increasing, and lands in hom(a; b).
class Biprop {
 public:
  virtual ~Biprop() = default;

  virtual std::string name() const = 0;
  virtual int colours() const = 0;
  virtual int max_word_len() const = 0;

  virtual CatPtr hom(const Word& a, const Word& b) const = 0;
  virtual int unit_object(const Word& a) const = 0;

  // m on objects / morphisms: hom(a;b) x hom(b;c) -> hom(a;c), diagrammatic.
  virtual int compose_obj(const Word& a, const Word& b, const Word& c, int x,
                          int y) const = 0;
  virtual int compose_mor(const Word& a, const Word& b, const Word& c, int mx,
                          int my) const = 0;

  // component m(m(x,y),z) -> m(x,m(y,z)) in hom(a;d)
  virtual int assoc_component(const Word& a, const Word& b, const Word& c,
                              const Word& d, int x, int y, int z) const = 0;
  // component m(i_a, x) -> x in hom(a;b)
  virtual int lunit_component(const Word& a, const Word& b, int x) const = 0;
  // component m(x, i_b) -> x in hom(a;b)
  virtual int runit_component(const Word& a, const Word& b, int x) const = 0;

  virtual int tensor_obj(const FinMap& f, const FinMap& g, const Word& a,
                         const Word& b, const std::vector<int>& xs) const = 0;
  virtual int tensor_mor(const FinMap& f, const FinMap& g, const Word& a,
                         const Word& b, const std::vector<int>& xs) const = 0;

  // Declared-strict instances promise identity a/l/r.
  virtual bool strict() const { return false; }
};

using BpPtr = std::shared_ptr<const Biprop>;

// Bicategory-level laws: functoriality of m, endpoints / invertibility /
// naturality of a, l, r, the pentagon, the triangle, and agreement of the two
// unitors on unit objects.  Identity components short-circuit the composite
// laws exactly as in the multicategory validator.
report::Report check_bicategory(const BpPtr& bp, const CheckCaps& caps);

// Tensor laws: functoriality of each tensor, compatibility of tensors with m
// (three maps into a common codomain), with a (four maps), with l and r, unit
// tensors, collapse of the one-point cospan to the identity, and strictness
// of tensor multiplication along a map of index sets.
report::Report check_tensor_axioms(const BpPtr& bp, const CheckCaps& caps);

// Consequences for bijections: the pasting of associativity components along
// three composable bijections and the shifted tensor formula it produces.
report::Report check_derived_identities(const BpPtr& bp, const CheckCaps& caps);

// Everything at once.
report::Report check_biprop(const BpPtr& bp, const CheckCaps& caps);

// ---------------------------------------------------------------------------
// morphisms of biprops

class BipropMorphism {
 public:
  virtual ~BipropMorphism() = default;

  virtual std::string name() const = 0;
  virtual BpPtr src() const = 0;
  virtual BpPtr dst() const = 0;

  virtual int colour_map(int c) const = 0;
  Word word_map(const Word& a) const;

  virtual int obj(const Word& a, const Word& b, int x) const = 0;
  virtual int mor(const Word& a, const Word& b, int m) const = 0;

  // component m(Fx, Fy) -> F(m(x,y)) in dst hom(Fa; Fc)
  virtual int comp_comparison(const Word& a, const Word& b, const Word& c,
                              int x, int y) const = 0;
  // component i_{Fa} -> F(i_a) in dst hom(Fa; Fa)
  virtual int unit_comparison(const Word& a) const = 0;

  virtual bool strict() const { return false; }
};

using BpMorPtr = std::shared_ptr<const BipropMorphism>;

// Base for strict morphisms: comparisons are identities; evaluators recompute
// both endpoint objects and refuse mismatches.
class StrictBipropMorphismBase : public BipropMorphism {
 public:
  bool strict() const override { return true; }
  int comp_comparison(const Word& a, const Word& b, const Word& c, int x,
                      int y) const override;
  int unit_comparison(const Word& a) const override;
};

BpMorPtr identity_morphism(const BpPtr& p);
// Diagrammatic composite: apply f, then g; comparisons are stacked pastings.
BpMorPtr compose_morphisms(const BpMorPtr& f, const BpMorPtr& g);
bool morphisms_equal(const BpMorPtr& f, const BpMorPtr& g,
                     const CheckCaps& caps);

// Laws for one morphism: hom functors, strict preservation of tensors, unit
// and composition comparisons (endpoints, invertibility, naturality), the
// hexagon against a, and the two unitor compatibilities.
report::Report validate_morphism(const BpMorPtr& f, const CheckCaps& caps);

// ---------------------------------------------------------------------------
// concrete instances

// Fully tabulated bicategory-level data (no tensors); the reference format
// for fixture files.  Asking for a tensor raises SchemaError.
class TabulatedBiprop final : public Biprop {
 public:
  struct HomEntry {
    Word a, b;
    CatPtr cat;
  };
  struct UnitEntry {
    Word a;
    int obj = 0;
  };
  // flat tables, first argument fastest: obj[x + |Ob(a;b)| * y], etc.
  struct MTable {
    Word a, b, c;
    std::vector<int> obj, mor;
  };
  struct AssocTable {
    Word a, b, c, d;
    std::vector<int> comp;  // x + |Ob(a;b)|*(y + |Ob(b;c)|*z)
  };
  struct UnitorTable {
    Word a, b;
    std::vector<int> comp;  // per object of hom(a;b)
  };
  struct Data {
    std::string name = "tabulated";
    int colours = 1;
    int max_word_len = 2;
    std::vector<HomEntry> homs;
    std::vector<UnitEntry> units;
    std::vector<MTable> m;
    std::vector<AssocTable> assoc;
    std::vector<UnitorTable> lunit, runit;
  };

  explicit TabulatedBiprop(Data d);

  std::string name() const override { return data_.name; }
  int colours() const override { return data_.colours; }
  int max_word_len() const override { return data_.max_word_len; }
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
  int tensor_obj(const FinMap&, const FinMap&, const Word&, const Word&,
                 const std::vector<int>&) const override;
  int tensor_mor(const FinMap&, const FinMap&, const Word&, const Word&,
                 const std::vector<int>&) const override;

  const Data& data() const { return data_; }

 private:
  const MTable& m_table(const Word& a, const Word& b, const Word& c) const;

  Data data_;
  std::map<std::vector<int>, int> hom_index_, unit_index_, m_index_,
      assoc_index_, lunit_index_, runit_index_;
};

// One colour; every hom is the one-object group {1, s}.  Composition and
// tensor add signs, associativity is the identity, and the unitor at a hom
// with source word of length p and target word of length q is s^p (left)
// resp. s^q (right).  Genuinely weak, yet all axioms hold.
class ParityBiprop final : public Biprop {
 public:
  explicit ParityBiprop(int max_word_len = 3);

  std::string name() const override { return "parity"; }
  int colours() const override { return 1; }
  int max_word_len() const override { return max_word_len_; }
  CatPtr hom(const Word& a, const Word& b) const override;
  int unit_object(const Word&) const override { return 0; }
  int compose_obj(const Word&, const Word&, const Word&, int, int)
      const override {
    return 0;
  }
  int compose_mor(const Word& a, const Word& b, const Word& c, int mx,
                  int my) const override;
  int assoc_component(const Word&, const Word&, const Word&, const Word&, int,
                      int, int) const override {
    return 0;
  }
  int lunit_component(const Word& a, const Word&, int) const override {
    return static_cast<int>(a.size()) & 1;
  }
  int runit_component(const Word&, const Word& b, int) const override {
    return static_cast<int>(b.size()) & 1;
  }
  int tensor_obj(const FinMap& f, const FinMap& g, const Word& a,
                 const Word& b, const std::vector<int>& xs) const override;
  int tensor_mor(const FinMap& f, const FinMap& g, const Word& a,
                 const Word& b, const std::vector<int>& xs) const override;

 private:
  void check_words(const Word& a, const Word& b) const;

  int max_word_len_;
  CatPtr hom_;
};

// Bicategory-level tables of the sign structure over words up to the given
// length, with a chosen associativity sign; corrupted fixtures set it to s.
TabulatedBiprop::Data sign_reference_data(int max_word_len, int assoc_sign);

}  // namespace bip::biprop
