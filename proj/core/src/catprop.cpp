#include "bip/catprop.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "bip/error.hpp"
#include "bip/multicat.hpp"

namespace bip::catprop {

using fincat::FinFunctor;
using fincat::FinNatTrans;
using fincat::FunctorCat;
using fincat::ProductCat;

namespace {

std::string fmt_word(const Word& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

std::vector<int> hom_key(const Word& a, const Word& b) {
  std::vector<int> k(a);
  k.push_back(-1);
  k.insert(k.end(), b.begin(), b.end());
  return k;
}

// target factor p of the reordered product is source factor order[p]
FinFunctor reorder_functor(const ProductCat& src, const ProductCat& dst,
                           const std::vector<int>& order) {
  return fincat::make_functor(
      src.cat, dst.cat,
      [&](int x) {
        const auto t = src.obj_tuple(x);
        std::vector<int> u(order.size());
        for (size_t p = 0; p < order.size(); ++p) u[p] = t[order[p]];
        return dst.obj_rank(u);
      },
      [&](int m) {
        const auto t = src.mor_tuple(m);
        std::vector<int> u(order.size());
        for (size_t p = 0; p < order.size(); ++p) u[p] = t[order[p]];
        return dst.mor_rank(u);
      });
}

}  // namespace

std::vector<CatPtr> default_registry() {
  return {fincat::share(fincat::FinCat::terminal()),
          fincat::share(fincat::FinCat::discrete(2))};
}

struct CatValuedBiprop::TensorPlan {
  FinMap f, g;
  Word a, b;
  std::vector<Word> block_as, block_bs;     // per k, the fibre sub-words
  std::vector<std::vector<int>> fibres_f, fibres_g;
  Word af, bg;                              // words in fibre order
  FinFunctor into_blocks;                   // prod(a) -> prod(af)
  FinFunctor out_of_blocks;                 // prod(bg) -> prod(b)

  TensorPlan(FinMap f_, FinMap g_, Word a_, Word b_, const CatValuedBiprop& cp)
      : f(std::move(f_)), g(std::move(g_)), a(std::move(a_)), b(std::move(b_)),
        into_blocks(FinFunctor::identity(cp.word_product({}).cat)),
        out_of_blocks(into_blocks) {
    const auto df = finord::decompose(f);
    const auto dg = finord::decompose(g);
    fibres_f = df.fibers;
    fibres_g = dg.fibers;
    std::vector<int> in_order, out_order(g.dom());
    for (int k = 0; k < f.cod(); ++k) {
      Word wa, wb;
      for (int i : df.fibers[k]) {
        wa.push_back(a[i]);
        in_order.push_back(i);
      }
      for (int j : dg.fibers[k]) wb.push_back(b[j]);
      block_as.push_back(wa);
      block_bs.push_back(wb);
      af.insert(af.end(), wa.begin(), wa.end());
      bg.insert(bg.end(), wb.begin(), wb.end());
    }
    for (int j = 0; j < g.dom(); ++j) out_order[j] = dg.graph(j);
    if (cp.skip_input_reindex_)
      for (size_t p = 0; p < in_order.size(); ++p)
        in_order[p] = static_cast<int>(p);
    into_blocks =
        reorder_functor(cp.word_product(a), cp.word_product(af), in_order);
    out_of_blocks =
        reorder_functor(cp.word_product(bg), cp.word_product(b), out_order);
  }
};

CatValuedBiprop::CatValuedBiprop(std::vector<CatPtr> registry,
                                 int max_word_len, long long max_hom_objects,
                                 bool skip_input_reindex)
    : registry_(std::move(registry)),
      max_word_len_(max_word_len),
      max_hom_objects_(max_hom_objects),
      skip_input_reindex_(skip_input_reindex) {
  if (registry_.empty())
    throw SchemaError("cat-valued biprop: empty colour registry");
  for (const auto& c : registry_) {
    if (!c) throw SchemaError("cat-valued biprop: null colour category");
    if (c->objects() == 0)
      throw SchemaError("cat-valued biprop: colour category has no objects");
  }
  if (max_word_len_ < 0)
    throw SchemaError("cat-valued biprop: negative word bound");
  if (max_hom_objects_ <= 0)
    throw SchemaError("cat-valued biprop: non-positive hom cap");
}

CatValuedBiprop::~CatValuedBiprop() = default;

std::string CatValuedBiprop::name() const {
  return skip_input_reindex_ ? "cat-valued/unreindexed" : "cat-valued";
}

void CatValuedBiprop::check_word(const Word& a) const {
  if (static_cast<int>(a.size()) > max_word_len_)
    throw CapError("cat-valued biprop: word " + fmt_word(a) +
                   " exceeds the length bound");
  for (int c : a)
    if (c < 0 || c >= colours())
      throw SchemaError("cat-valued biprop: colour out of range in word " +
                        fmt_word(a));
}

const ProductCat& CatValuedBiprop::word_product(const Word& a) const {
  auto it = prods_.find(a);
  if (it != prods_.end()) return it->second;
  std::vector<CatPtr> factors;
  for (int c : a) factors.push_back(registry_[static_cast<size_t>(c)]);
  return prods_.emplace(a, fincat::product(std::move(factors))).first->second;
}

const FunctorCat& CatValuedBiprop::hom_data(const Word& a,
                                            const Word& b) const {
  check_word(a);
  check_word(b);
  auto key = hom_key(a, b);
  auto it = homs_.find(key);
  if (it != homs_.end()) return it->second;
  FunctorCat fc = fincat::functor_category(
      word_product(a).cat, word_product(b).cat, max_hom_objects_);
  return homs_.emplace(std::move(key), std::move(fc)).first->second;
}

CatPtr CatValuedBiprop::hom(const Word& a, const Word& b) const {
  return hom_data(a, b).cat;
}

int CatValuedBiprop::unit_object(const Word& a) const {
  const auto& fc = hom_data(a, a);
  return fc.index_of(FinFunctor::identity(word_product(a).cat));
}

FinFunctor CatValuedBiprop::functor_at(const Word& a, const Word& b,
                                       int x) const {
  const auto& fc = hom_data(a, b);
  if (x < 0 || x >= static_cast<int>(fc.objects.size()))
    throw SchemaError("cat-valued biprop: functor index out of range");
  return fc.objects[static_cast<size_t>(x)];
}

FinNatTrans CatValuedBiprop::nat_at(const Word& a, const Word& b,
                                    int m) const {
  const auto& fc = hom_data(a, b);
  if (m < 0 || m >= static_cast<int>(fc.mors.size()))
    throw SchemaError("cat-valued biprop: transformation index out of range");
  const auto& nv = fc.mors[static_cast<size_t>(m)];
  return FinNatTrans(fc.objects[static_cast<size_t>(nv.src)],
                     fc.objects[static_cast<size_t>(nv.dst)], nv.comps);
}

int CatValuedBiprop::compose_obj(const Word& a, const Word& b, const Word& c,
                                 int x, int y) const {
  return hom_data(a, c).index_of(
      fincat::compose(functor_at(a, b, x), functor_at(b, c, y)));
}

int CatValuedBiprop::compose_mor(const Word& a, const Word& b, const Word& c,
                                 int mx, int my) const {
  const auto h = fincat::hcompose(nat_at(a, b, mx), nat_at(b, c, my));
  const auto& fc = hom_data(a, c);
  return fc.nat_index(fc.index_of(h.src()), fc.index_of(h.dst()),
                      h.components());
}

int CatValuedBiprop::assoc_component(const Word& a, const Word& b,
                                     const Word& c, const Word& d, int x,
                                     int y, int z) const {
  const int xy = compose_obj(a, b, c, x, y);
  return hom_data(a, d).cat->identity(compose_obj(a, c, d, xy, z));
}

int CatValuedBiprop::lunit_component(const Word& a, const Word& b,
                                     int x) const {
  (void)functor_at(a, b, x);
  return hom_data(a, b).cat->identity(x);
}

int CatValuedBiprop::runit_component(const Word& a, const Word& b,
                                     int x) const {
  (void)functor_at(a, b, x);
  return hom_data(a, b).cat->identity(x);
}

const CatValuedBiprop::TensorPlan& CatValuedBiprop::tensor_plan(
    const FinMap& f, const FinMap& g, const Word& a, const Word& b) const {
  check_word(a);
  check_word(b);
  if (f.cod() != g.cod())
    throw SchemaError("cat-valued biprop: cospan feet disagree");
  if (f.dom() != static_cast<int>(a.size()) ||
      g.dom() != static_cast<int>(b.size()))
    throw SchemaError("cat-valued biprop: cospan legs do not match the words");
  std::vector<int> key(f.image());
  key.push_back(-1);
  key.insert(key.end(), g.image().begin(), g.image().end());
  key.push_back(f.cod());
  key.push_back(-1);
  for (int c : a) key.push_back(c);
  key.push_back(-1);
  for (int c : b) key.push_back(c);
  auto it = plans_.find(key);
  if (it == plans_.end())
    it = plans_
             .emplace(std::move(key),
                      std::make_unique<TensorPlan>(f, g, a, b, *this))
             .first;
  return *it->second;
}

int CatValuedBiprop::tensor_obj(const FinMap& f, const FinMap& g,
                                const Word& a, const Word& b,
                                const std::vector<int>& xs) const {
  const TensorPlan& pl = tensor_plan(f, g, a, b);
  if (static_cast<int>(xs.size()) != f.cod())
    throw SchemaError("cat-valued biprop: one block per foot required");
  std::vector<FinFunctor> blocks;
  blocks.reserve(xs.size());
  for (int k = 0; k < f.cod(); ++k)
    blocks.push_back(functor_at(pl.block_as[k], pl.block_bs[k], xs[k]));

  const ProductCat& paf = word_product(pl.af);
  const ProductCat& pbg = word_product(pl.bg);
  FinFunctor across = fincat::make_functor(
      paf.cat, pbg.cat,
      [&](int x) {
        const auto t = paf.obj_tuple(x);
        std::vector<int> out;
        size_t at = 0;
        for (int k = 0; k < f.cod(); ++k) {
          const ProductCat& bd = word_product(pl.block_as[k]);
          const ProductCat& bc = word_product(pl.block_bs[k]);
          const size_t n = pl.block_as[k].size();
          const int sub = bd.obj_rank(
              std::vector<int>(t.begin() + at, t.begin() + at + n));
          const auto img = bc.obj_tuple(blocks[k].obj(sub));
          out.insert(out.end(), img.begin(), img.end());
          at += n;
        }
        return pbg.obj_rank(out);
      },
      [&](int m) {
        const auto t = paf.mor_tuple(m);
        std::vector<int> out;
        size_t at = 0;
        for (int k = 0; k < f.cod(); ++k) {
          const ProductCat& bd = word_product(pl.block_as[k]);
          const ProductCat& bc = word_product(pl.block_bs[k]);
          const size_t n = pl.block_as[k].size();
          const int sub = bd.mor_rank(
              std::vector<int>(t.begin() + at, t.begin() + at + n));
          const auto img = bc.mor_tuple(blocks[k].mor(sub));
          out.insert(out.end(), img.begin(), img.end());
          at += n;
        }
        return pbg.mor_rank(out);
      });

  const int idx = hom_data(a, b).index_of(fincat::compose(
      fincat::compose(pl.into_blocks, across), pl.out_of_blocks));
  if (idx < 0)
    throw SchemaError("cat-valued biprop: tensor left the hom enumeration");
  return idx;
}

int CatValuedBiprop::tensor_mor(const FinMap& f, const FinMap& g,
                                const Word& a, const Word& b,
                                const std::vector<int>& xs) const {
  const TensorPlan& pl = tensor_plan(f, g, a, b);
  if (static_cast<int>(xs.size()) != f.cod())
    throw SchemaError("cat-valued biprop: one block per foot required");
  std::vector<FinNatTrans> blocks;
  std::vector<int> srcs, dsts;
  blocks.reserve(xs.size());
  for (int k = 0; k < f.cod(); ++k) {
    const auto& fc = hom_data(pl.block_as[k], pl.block_bs[k]);
    if (xs[k] < 0 || xs[k] >= static_cast<int>(fc.mors.size()))
      throw SchemaError(
          "cat-valued biprop: transformation index out of range");
    srcs.push_back(fc.mors[static_cast<size_t>(xs[k])].src);
    dsts.push_back(fc.mors[static_cast<size_t>(xs[k])].dst);
    blocks.push_back(nat_at(pl.block_as[k], pl.block_bs[k], xs[k]));
  }
  const int src_obj = tensor_obj(f, g, a, b, srcs);
  const int dst_obj = tensor_obj(f, g, a, b, dsts);

  // component at x: reorder in, take each block's component at its slice,
  // bundle the product morphism, reorder out
  const ProductCat& pa = word_product(a);
  const ProductCat& pbg = word_product(pl.bg);
  std::vector<int> comps(pa.cat->objects());
  for (int x = 0; x < pa.cat->objects(); ++x) {
    const int moved = pl.into_blocks.obj(x);
    const auto t = word_product(pl.af).obj_tuple(moved);
    std::vector<int> out;
    size_t at = 0;
    for (int k = 0; k < f.cod(); ++k) {
      const ProductCat& bd = word_product(pl.block_as[k]);
      const ProductCat& bc = word_product(pl.block_bs[k]);
      const size_t n = pl.block_as[k].size();
      const int sub = bd.obj_rank(
          std::vector<int>(t.begin() + at, t.begin() + at + n));
      const auto img = bc.mor_tuple(blocks[k].at(sub));
      out.insert(out.end(), img.begin(), img.end());
      at += n;
    }
    comps[x] = pl.out_of_blocks.mor(pbg.mor_rank(out));
  }
  const auto& fc = hom_data(a, b);
  const int idx = fc.nat_index(src_obj, dst_obj, comps);
  if (idx < 0)
    throw SchemaError("cat-valued biprop: tensor left the hom enumeration");
  return idx;
}

CvPtr cat_valued_biprop(int max_word_len) {
  return std::make_shared<const CatValuedBiprop>(default_registry(),
                                                 max_word_len);
}

CvPtr cat_valued_biprop(std::vector<CatPtr> registry, int max_word_len,
                        long long max_hom_objects) {
  return std::make_shared<const CatValuedBiprop>(std::move(registry),
                                                 max_word_len,
                                                 max_hom_objects);
}

// ---------------------------------------------------------------------------
// checker

namespace {

using report::CheckResult;

// Strictness witness: every structural 2-cell handed out is an identity.
// Unitors are swept over all word pairs.  The associator sweep keeps the two
// inner words at one letter: the object-triple count otherwise grows with the
// cube of hom sizes, and hom sizes grow exponentially in word length.
CheckResult law_identity_components(const CatValuedBiprop& cp, int cap) {
  CheckResult res;
  res.law = "identity-components";
  std::vector<Word> words, inner;
  for (int l = 0; l <= cap; ++l) {
    auto v = multicat::all_words(cp.colours(), l);
    if (l <= 1) inner.insert(inner.end(), v.begin(), v.end());
    words.insert(words.end(), v.begin(), v.end());
  }
  for (const auto& a : words)
    for (const auto& b : words) {
      const CatPtr h = cp.hom(a, b);
      for (int x = 0; x < h->objects(); ++x) {
        ++res.checked;
        if (!h->is_identity(cp.lunit_component(a, b, x)) ||
            !h->is_identity(cp.runit_component(a, b, x))) {
          res.pass = false;
          res.witness = "unitor not the identity at a=" + fmt_word(a) +
                        " b=" + fmt_word(b) + " x=" + std::to_string(x);
          return res;
        }
      }
    }
  for (const auto& a : words)
    for (const auto& b : inner)
      for (const auto& c : inner)
        for (const auto& d : words)
          for (int x = 0; x < cp.hom(a, b)->objects(); ++x)
            for (int y = 0; y < cp.hom(b, c)->objects(); ++y)
              for (int z = 0; z < cp.hom(c, d)->objects(); ++z) {
                ++res.checked;
                if (!cp.hom(a, d)->is_identity(
                        cp.assoc_component(a, b, c, d, x, y, z))) {
                  res.pass = false;
                  res.witness = "associator not the identity at a=" +
                                fmt_word(a) + " b=" + fmt_word(b) +
                                " c=" + fmt_word(c) + " d=" + fmt_word(d);
                  return res;
                }
              }
  return res;
}

CheckResult law_graph_compatibility(int cap) {
  CheckResult res;
  res.law = "graph-compatibility";
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; j <= cap; ++j)
      for (int k = 0; k <= cap; ++k) {
        const long long nf = finord::map_count(i, j);
        const long long nh = finord::map_count(j, k);
        for (long long rf = 0; rf < nf; ++rf)
          for (long long rh = 0; rh < nh; ++rh) {
            const FinMap f = FinMap::from_rank(i, j, rf);
            const FinMap h = FinMap::from_rank(j, k, rh);
            ++res.checked;
            if (!finord::check_graph_functoriality(f, h)) {
              res.pass = false;
              res.witness = "graph breaks at f=" + fmt_word(f.image()) +
                            ":" + std::to_string(i) + "->" +
                            std::to_string(j) + " h=" +
                            fmt_word(h.image()) + ":" + std::to_string(j) +
                            "->" + std::to_string(k);
              return res;
            }
          }
      }
  return res;
}

}  // namespace

report::Report check_catprop(const CvPtr& cp, const CheckCaps& caps) {
  if (!cp) throw SchemaError("cat-valued biprop: null biprop");
  // Hom categories here are functor categories, so their object counts grow
  // exponentially in word length.  Two law families enumerate triples of hom
  // objects across unrestricted words — the word-indexed composition laws and
  // the block-product tensor laws — and those run with the word bound,
  // respectively the multi-index bound, clamped to one letter.  Bijection
  // cospans keep all blocks at single letters, so the derived identities run
  // at the caller's caps and cover every permutation reindexing, and the
  // remaining tensor laws (functoriality, units, collapse) stay unclamped
  // as well.
  CheckCaps bicaps = caps;
  bicaps.max_word_len = std::min(caps.max_word_len, 1);
  CheckCaps tcaps = caps;
  tcaps.max_index_multi = std::min(caps.max_index_multi, 1);
  report::Report rep = biprop::check_bicategory(cp, bicaps);
  rep.merge(biprop::check_tensor_axioms(cp, tcaps));
  rep.merge(biprop::check_derived_identities(cp, caps));
  const int capw = std::min(caps.max_word_len, cp->max_word_len());
  const int capc = std::min(caps.max_index, capw);
  rep.add(law_identity_components(*cp, capc));
  rep.add(law_graph_compatibility(std::min(caps.max_index, 4)));
  return rep;
}

}  // namespace bip::catprop
