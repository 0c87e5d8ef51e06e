#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "bip/error.hpp"

namespace bip::fincat {

// Fully tabulated finite category.  Objects and morphisms are dense integer
// ids; composition is stored per morphism against the outgoing list of its
// target object, which keeps the table linear for the discrete categories
// that dominate this library.  Construction validates the data eagerly:
// identity laws, endpoint compatibility of composites, totality of
// composition on composable pairs, and associativity.
class FinCat {
 public:
  struct Mor {
    int src = 0;
    int dst = 0;
    friend bool operator==(const Mor&, const Mor&) = default;
  };

  FinCat() = default;

  static FinCat build(int objects, std::vector<Mor> mors,
                      std::vector<int> identities,
                      const std::vector<std::array<int, 3>>& composites);

  // Discrete category on n objects.
  static FinCat discrete(int n);
  static FinCat terminal() { return discrete(1); }
  // Two objects 0 -> 1 with a single non-identity arrow.
  static FinCat walking_arrow();
  // Two objects with a single isomorphism between them.
  static FinCat walking_iso();
  // One object whose endomorphisms form the group Z/2.
  static FinCat group_z2();

  int objects() const { return n_obj_; }
  int morphisms() const { return static_cast<int>(mor_.size()); }
  int src(int m) const { return mor_[m].src; }
  int dst(int m) const { return mor_[m].dst; }
  int identity(int o) const { return id_of_[o]; }
  bool is_identity(int m) const { return id_of_[mor_[m].src] == m && mor_[m].src == mor_[m].dst; }

  // Diagrammatic composite "f then g"; requires dst(f) == src(g).
  int compose(int f, int g) const;

  const std::vector<int>& out_of(int o) const { return out_of_[o]; }

  // Two-sided inverse of m, or -1.
  int inverse_of(int m) const;
  bool is_iso(int m) const { return inverse_of(m) >= 0; }

  std::vector<std::array<int, 3>> composition_triples() const;

  friend bool operator==(const FinCat& a, const FinCat& b);

 private:
  int n_obj_ = 0;
  std::vector<Mor> mor_;
  std::vector<int> id_of_;
  std::vector<std::vector<int>> out_of_;  // object -> morphisms with that src
  std::vector<int> local_out_;            // morphism -> index in out_of_[src]
  std::vector<std::vector<int>> comp_;    // comp_[f][local_out_[g]] with src(g) == dst(f)

  void check_laws() const;
};

using CatPtr = std::shared_ptr<const FinCat>;

inline CatPtr share(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

// True when the two categories are the same table (pointer equality first).
bool same_cat(const CatPtr& a, const CatPtr& b);

// ---------------------------------------------------------------------------
// functors and natural transformations

class FinFunctor {
 public:
  FinFunctor() = default;
  // Validates endpoint, identity and composition preservation.
  FinFunctor(CatPtr src, CatPtr dst, std::vector<int> omap,
             std::vector<int> mmap);

  static FinFunctor identity(CatPtr c);
  // Constant functor at an object (morphisms go to its identity).
  static FinFunctor constant(CatPtr src, CatPtr dst, int obj);

  const CatPtr& src() const { return src_; }
  const CatPtr& dst() const { return dst_; }
  int obj(int o) const { return omap_[o]; }
  int mor(int m) const { return mmap_[m]; }
  const std::vector<int>& omap() const { return omap_; }
  const std::vector<int>& mmap() const { return mmap_; }

 private:
  CatPtr src_, dst_;
  std::vector<int> omap_, mmap_;
};

// Build a functor from callables on object / morphism ids.
template <class OF, class MF>
FinFunctor make_functor(CatPtr src, CatPtr dst, OF&& of, MF&& mf) {
  std::vector<int> omap(src->objects()), mmap(src->morphisms());
  for (int o = 0; o < src->objects(); ++o) omap[o] = of(o);
  for (int m = 0; m < src->morphisms(); ++m) mmap[m] = mf(m);
  return FinFunctor(std::move(src), std::move(dst), std::move(omap),
                    std::move(mmap));
}

FinFunctor compose(const FinFunctor& f, const FinFunctor& g);
bool equal_functors(const FinFunctor& f, const FinFunctor& g);

class FinNatTrans {
 public:
  FinNatTrans() = default;
  // Validates endpoints and naturality.
  FinNatTrans(FinFunctor src, FinFunctor dst, std::vector<int> components);

  static FinNatTrans identity(const FinFunctor& f);

  const FinFunctor& src() const { return src_; }
  const FinFunctor& dst() const { return dst_; }
  int at(int o) const { return comp_[o]; }
  const std::vector<int>& components() const { return comp_; }

  bool is_invertible() const;
  bool is_identity_transformation() const;

 private:
  FinFunctor src_, dst_;
  std::vector<int> comp_;
};

bool equal_nats(const FinNatTrans& a, const FinNatTrans& b);

// vertical composite (s then t), t.src must equal s.dst
FinNatTrans vcompose(const FinNatTrans& s, const FinNatTrans& t);
// horizontal composite of s : F -> F' (C -> D) and t : G -> G' (D -> E)
FinNatTrans hcompose(const FinNatTrans& s, const FinNatTrans& t);
// whisker a transformation with a functor on the left / right
FinNatTrans whisker_left(const FinFunctor& f, const FinNatTrans& t);
FinNatTrans whisker_right(const FinNatTrans& t, const FinFunctor& f);
FinNatTrans invert(const FinNatTrans& t);

// ---------------------------------------------------------------------------
// products and coproducts

// Product of finitely many categories with the mixed-radix tuple codec: the
// first factor is the fastest digit for both objects and morphisms.  The
// codec makes nested products literally equal to their flattened form, so no
// separate normalisation pass exists anywhere in the library.
struct ProductCat {
  CatPtr cat;
  std::vector<CatPtr> factors;

  int obj_rank(const std::vector<int>& tuple) const;
  std::vector<int> obj_tuple(int rank) const;
  int mor_rank(const std::vector<int>& tuple) const;
  std::vector<int> mor_tuple(int rank) const;
};

ProductCat product(std::vector<CatPtr> factors,
                   long long max_objects = 1 << 24);

// Coproduct with the tag codec: block b occupies a contiguous id range, in
// the order the parts are listed.
struct CoproductCat {
  CatPtr cat;
  std::vector<CatPtr> parts;
  std::vector<int> obj_offset;
  std::vector<int> mor_offset;

  int obj_in(int part, int local) const { return obj_offset[part] + local; }
  int mor_in(int part, int local) const { return mor_offset[part] + local; }
  std::pair<int, int> obj_part(int global) const;
  std::pair<int, int> mor_part(int global) const;
};

CoproductCat coproduct(std::vector<CatPtr> parts);

// ---------------------------------------------------------------------------
// functor categories

// The category of all functors dom -> cod and all natural transformations
// between them, enumerated in a fixed canonical order (object maps by
// mixed-radix rank, morphism images and components likewise).  Sizes are
// guarded: exceeding max_objects raises CapError.
struct FunctorCat {
  CatPtr cat;
  CatPtr dom, cod;
  std::vector<FinFunctor> objects;
  struct NatVal {
    int src = 0, dst = 0;
    std::vector<int> comps;
  };
  std::vector<NatVal> mors;

  int index_of(const FinFunctor& f) const;  // -1 when absent
  int nat_index(int src_f, int dst_f, const std::vector<int>& comps) const;

  std::map<std::vector<int>, int> obj_lookup;  // omap ++ mmap -> id
  std::map<std::vector<int>, int> mor_lookup;  // {src,dst} ++ comps -> id
};

FunctorCat functor_category(CatPtr dom, CatPtr cod,
                            long long max_objects = 1 << 20);

}  // namespace bip::fincat
