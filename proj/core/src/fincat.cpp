#include "bip/fincat.hpp"

#include <algorithm>
#include <string>

namespace bip::fincat {

namespace {

[[noreturn]] void bad(const std::string& what) { throw SchemaError(what); }

// odometer over mixed-radix digits; returns false when it wraps around
bool advance(std::vector<int>& digits, const std::vector<int>& radix) {
  for (size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

FinCat FinCat::build(int objects, std::vector<Mor> mors,
                     std::vector<int> identities,
                     const std::vector<std::array<int, 3>>& composites) {
  FinCat c;
  c.n_obj_ = objects;
  c.mor_ = std::move(mors);
  c.id_of_ = std::move(identities);
  if (objects < 0) bad("category: negative object count");
  if (static_cast<int>(c.id_of_.size()) != objects)
    bad("category: identity list length does not match object count");
  const int nm = c.morphisms();
  for (const auto& m : c.mor_)
    if (m.src < 0 || m.src >= objects || m.dst < 0 || m.dst >= objects)
      bad("category: morphism endpoint out of range");
  for (int o = 0; o < objects; ++o) {
    int i = c.id_of_[o];
    if (i < 0 || i >= nm || c.mor_[i].src != o || c.mor_[i].dst != o)
      bad("category: identity of object " + std::to_string(o) +
          " is not an endomorphism of it");
  }

  c.out_of_.assign(objects, {});
  c.local_out_.assign(nm, -1);
  for (int m = 0; m < nm; ++m) {
    c.local_out_[m] = static_cast<int>(c.out_of_[c.mor_[m].src].size());
    c.out_of_[c.mor_[m].src].push_back(m);
  }

  c.comp_.assign(nm, {});
  for (int f = 0; f < nm; ++f)
    c.comp_[f].assign(c.out_of_[c.mor_[f].dst].size(), -1);
  for (const auto& [f, g, h] : composites) {
    if (f < 0 || f >= nm || g < 0 || g >= nm || h < 0 || h >= nm)
      bad("category: composition triple out of range");
    if (c.mor_[f].dst != c.mor_[g].src)
      bad("category: composition triple (" + std::to_string(f) + "," +
          std::to_string(g) + "," + std::to_string(h) + ") is not composable");
    int& slot = c.comp_[f][c.local_out_[g]];
    if (slot != -1 && slot != h)
      bad("category: conflicting composites for (" + std::to_string(f) + "," +
          std::to_string(g) + ")");
    slot = h;
  }
  for (int f = 0; f < nm; ++f)
    for (size_t j = 0; j < c.comp_[f].size(); ++j)
      if (c.comp_[f][j] == -1)
        bad("category: missing composite for (" + std::to_string(f) + "," +
            std::to_string(c.out_of_[c.mor_[f].dst][j]) + ")");

  c.check_laws();
  return c;
}

void FinCat::check_laws() const {
  const int nm = morphisms();
  for (int f = 0; f < nm; ++f) {
    int h_id_l = compose(id_of_[mor_[f].src], f);
    int h_id_r = compose(f, id_of_[mor_[f].dst]);
    if (h_id_l != f || h_id_r != f)
      bad("category: identity law fails at morphism " + std::to_string(f));
    for (int g : out_of_[mor_[f].dst]) {
      int fg = compose(f, g);
      if (mor_[fg].src != mor_[f].src || mor_[fg].dst != mor_[g].dst)
        bad("category: composite endpoints wrong for (" + std::to_string(f) +
            "," + std::to_string(g) + ")");
      for (int h : out_of_[mor_[g].dst]) {
        if (compose(fg, h) != compose(f, compose(g, h)))
          bad("category: associativity fails at (" + std::to_string(f) + "," +
              std::to_string(g) + "," + std::to_string(h) + ")");
      }
    }
  }
}

int FinCat::compose(int f, int g) const {
  if (mor_[f].dst != mor_[g].src)
    bad("compose: morphisms " + std::to_string(f) + " and " +
        std::to_string(g) + " are not composable");
  return comp_[f][local_out_[g]];
}

int FinCat::inverse_of(int m) const {
  for (int g : out_of_[mor_[m].dst]) {
    if (mor_[g].dst != mor_[m].src) continue;
    if (compose(m, g) == id_of_[mor_[m].src] &&
        compose(g, m) == id_of_[mor_[m].dst])
      return g;
  }
  return -1;
}

std::vector<std::array<int, 3>> FinCat::composition_triples() const {
  std::vector<std::array<int, 3>> out;
  for (int f = 0; f < morphisms(); ++f)
    for (int g : out_of_[mor_[f].dst]) out.push_back({f, g, compose(f, g)});
  return out;
}

bool operator==(const FinCat& a, const FinCat& b) {
  return a.n_obj_ == b.n_obj_ && a.mor_ == b.mor_ && a.id_of_ == b.id_of_ &&
         a.comp_ == b.comp_;
}

FinCat FinCat::discrete(int n) {
  std::vector<Mor> mors(n);
  std::vector<int> ids(n);
  std::vector<std::array<int, 3>> comps(n);
  for (int i = 0; i < n; ++i) {
    mors[i] = {i, i};
    ids[i] = i;
    comps[i] = {i, i, i};
  }
  return build(n, std::move(mors), std::move(ids), comps);
}

FinCat FinCat::walking_arrow() {
  return build(2, {{0, 0}, {1, 1}, {0, 1}}, {0, 1},
               {{0, 0, 0}, {1, 1, 1}, {0, 2, 2}, {2, 1, 2}});
}

FinCat FinCat::walking_iso() {
  return build(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}, {0, 1},
               {{0, 0, 0},
                {0, 2, 2},
                {1, 1, 1},
                {1, 3, 3},
                {2, 1, 2},
                {2, 3, 0},
                {3, 0, 3},
                {3, 2, 1}});
}

FinCat FinCat::group_z2() {
  return build(1, {{0, 0}, {0, 0}}, {0},
               {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

bool same_cat(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------

FinFunctor::FinFunctor(CatPtr src, CatPtr dst, std::vector<int> omap,
                       std::vector<int> mmap)
    : src_(std::move(src)),
      dst_(std::move(dst)),
      omap_(std::move(omap)),
      mmap_(std::move(mmap)) {
  const FinCat& c = *src_;
  const FinCat& d = *dst_;
  if (static_cast<int>(omap_.size()) != c.objects() ||
      static_cast<int>(mmap_.size()) != c.morphisms())
    bad("functor: table sizes do not match the source");
  for (int v : omap_)
    if (v < 0 || v >= d.objects()) bad("functor: object image out of range");
  for (int m = 0; m < c.morphisms(); ++m) {
    int v = mmap_[m];
    if (v < 0 || v >= d.morphisms()) bad("functor: morphism image out of range");
    if (d.src(v) != omap_[c.src(m)] || d.dst(v) != omap_[c.dst(m)])
      bad("functor: morphism " + std::to_string(m) +
          " is not sent between the object images");
  }
  for (int o = 0; o < c.objects(); ++o)
    if (mmap_[c.identity(o)] != d.identity(omap_[o]))
      bad("functor: identity of object " + std::to_string(o) +
          " is not preserved");
  for (int f = 0; f < c.morphisms(); ++f)
    for (int g : c.out_of(c.dst(f)))
      if (mmap_[c.compose(f, g)] != d.compose(mmap_[f], mmap_[g]))
        bad("functor: composition not preserved at (" + std::to_string(f) +
            "," + std::to_string(g) + ")");
}

FinFunctor FinFunctor::identity(CatPtr c) {
  std::vector<int> omap(c->objects()), mmap(c->morphisms());
  for (int o = 0; o < c->objects(); ++o) omap[o] = o;
  for (int m = 0; m < c->morphisms(); ++m) mmap[m] = m;
  return FinFunctor(c, c, std::move(omap), std::move(mmap));
}

FinFunctor FinFunctor::constant(CatPtr src, CatPtr dst, int obj) {
  std::vector<int> omap(src->objects(), obj);
  std::vector<int> mmap(src->morphisms(), dst->identity(obj));
  return FinFunctor(std::move(src), std::move(dst), std::move(omap),
                    std::move(mmap));
}

FinFunctor compose(const FinFunctor& f, const FinFunctor& g) {
  if (!same_cat(f.dst(), g.src()))
    bad("compose: functors do not share the middle category");
  std::vector<int> omap(f.omap().size()), mmap(f.mmap().size());
  for (size_t o = 0; o < omap.size(); ++o) omap[o] = g.obj(f.omap()[o]);
  for (size_t m = 0; m < mmap.size(); ++m) mmap[m] = g.mor(f.mmap()[m]);
  return FinFunctor(f.src(), g.dst(), std::move(omap), std::move(mmap));
}

bool equal_functors(const FinFunctor& f, const FinFunctor& g) {
  return same_cat(f.src(), g.src()) && same_cat(f.dst(), g.dst()) &&
         f.omap() == g.omap() && f.mmap() == g.mmap();
}

// ---------------------------------------------------------------------------

FinNatTrans::FinNatTrans(FinFunctor src, FinFunctor dst,
                         std::vector<int> components)
    : src_(std::move(src)), dst_(std::move(dst)), comp_(std::move(components)) {
  if (!same_cat(src_.src(), dst_.src()) || !same_cat(src_.dst(), dst_.dst()))
    bad("transformation: endpoint functors have different endpoints");
  const FinCat& c = *src_.src();
  const FinCat& d = *src_.dst();
  if (static_cast<int>(comp_.size()) != c.objects())
    bad("transformation: component count does not match the source");
  for (int o = 0; o < c.objects(); ++o) {
    int t = comp_[o];
    if (t < 0 || t >= d.morphisms() || d.src(t) != src_.obj(o) ||
        d.dst(t) != dst_.obj(o))
      bad("transformation: component at object " + std::to_string(o) +
          " has the wrong endpoints");
  }
  for (int m = 0; m < c.morphisms(); ++m) {
    if (c.is_identity(m)) continue;  // automatic
    int x = c.src(m), y = c.dst(m);
    if (d.compose(src_.mor(m), comp_[y]) != d.compose(comp_[x], dst_.mor(m)))
      bad("transformation: naturality fails at morphism " + std::to_string(m));
  }
}

FinNatTrans FinNatTrans::identity(const FinFunctor& f) {
  std::vector<int> comps(f.src()->objects());
  for (int o = 0; o < f.src()->objects(); ++o)
    comps[o] = f.dst()->identity(f.obj(o));
  return FinNatTrans(f, f, std::move(comps));
}

bool FinNatTrans::is_invertible() const {
  const FinCat& d = *src_.dst();
  for (int t : comp_)
    if (!d.is_iso(t)) return false;
  return true;
}

bool FinNatTrans::is_identity_transformation() const {
  const FinCat& d = *src_.dst();
  for (size_t o = 0; o < comp_.size(); ++o)
    if (!d.is_identity(comp_[o])) return false;
  return true;
}

bool equal_nats(const FinNatTrans& a, const FinNatTrans& b) {
  return equal_functors(a.src(), b.src()) && equal_functors(a.dst(), b.dst()) &&
         a.components() == b.components();
}

FinNatTrans vcompose(const FinNatTrans& s, const FinNatTrans& t) {
  if (!equal_functors(s.dst(), t.src()))
    bad("vcompose: middle functors disagree");
  const FinCat& d = *s.src().dst();
  std::vector<int> comps(s.components().size());
  for (size_t o = 0; o < comps.size(); ++o)
    comps[o] = d.compose(s.at(static_cast<int>(o)), t.at(static_cast<int>(o)));
  return FinNatTrans(s.src(), t.dst(), std::move(comps));
}

FinNatTrans hcompose(const FinNatTrans& s, const FinNatTrans& t) {
  const FinFunctor& f = s.src();
  const FinFunctor& f2 = s.dst();
  const FinFunctor& g = t.src();
  const FinFunctor& g2 = t.dst();
  if (!same_cat(f.dst(), g.src())) bad("hcompose: middle category disagrees");
  const FinCat& e = *g.dst();
  std::vector<int> comps(f.src()->objects());
  for (int x = 0; x < f.src()->objects(); ++x)
    comps[x] = e.compose(g.mor(s.at(x)), t.at(f2.obj(x)));
  return FinNatTrans(compose(f, g), compose(f2, g2), std::move(comps));
}

FinNatTrans whisker_left(const FinFunctor& f, const FinNatTrans& t) {
  if (!same_cat(f.dst(), t.src().src()))
    bad("whisker_left: endpoints do not match");
  std::vector<int> comps(f.src()->objects());
  for (int x = 0; x < f.src()->objects(); ++x) comps[x] = t.at(f.obj(x));
  return FinNatTrans(compose(f, t.src()), compose(f, t.dst()),
                     std::move(comps));
}

FinNatTrans whisker_right(const FinNatTrans& t, const FinFunctor& f) {
  if (!same_cat(t.src().dst(), f.src()))
    bad("whisker_right: endpoints do not match");
  std::vector<int> comps(t.components().size());
  for (size_t x = 0; x < comps.size(); ++x) comps[x] = f.mor(t.at(static_cast<int>(x)));
  return FinNatTrans(compose(t.src(), f), compose(t.dst(), f),
                     std::move(comps));
}

FinNatTrans invert(const FinNatTrans& t) {
  const FinCat& d = *t.src().dst();
  std::vector<int> comps(t.components().size());
  for (size_t o = 0; o < comps.size(); ++o) {
    int inv = d.inverse_of(t.at(static_cast<int>(o)));
    if (inv < 0)
      bad("invert: component at object " + std::to_string(o) +
          " is not invertible");
    comps[o] = inv;
  }
  return FinNatTrans(t.dst(), t.src(), std::move(comps));
}

// ---------------------------------------------------------------------------

int ProductCat::obj_rank(const std::vector<int>& tuple) const {
  if (tuple.size() != factors.size()) bad("product: tuple arity mismatch");
  long long r = 0, radix = 1;
  for (size_t i = 0; i < factors.size(); ++i) {
    int v = tuple[i];
    if (v < 0 || v >= factors[i]->objects()) bad("product: tuple entry out of range");
    r += v * radix;
    radix *= factors[i]->objects();
  }
  return static_cast<int>(r);
}

std::vector<int> ProductCat::obj_tuple(int rank) const {
  std::vector<int> t(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    t[i] = rank % factors[i]->objects();
    rank /= factors[i]->objects();
  }
  return t;
}

int ProductCat::mor_rank(const std::vector<int>& tuple) const {
  if (tuple.size() != factors.size()) bad("product: tuple arity mismatch");
  long long r = 0, radix = 1;
  for (size_t i = 0; i < factors.size(); ++i) {
    int v = tuple[i];
    if (v < 0 || v >= factors[i]->morphisms())
      bad("product: tuple entry out of range");
    r += v * radix;
    radix *= factors[i]->morphisms();
  }
  return static_cast<int>(r);
}

std::vector<int> ProductCat::mor_tuple(int rank) const {
  std::vector<int> t(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    t[i] = rank % factors[i]->morphisms();
    rank /= factors[i]->morphisms();
  }
  return t;
}

ProductCat product(std::vector<CatPtr> factors, long long max_objects) {
  long long nob = 1, nmor = 1;
  for (const auto& f : factors) {
    nob *= f->objects();
    nmor *= f->morphisms();
    if (nob > max_objects || nmor > 4 * max_objects)
      throw CapError("product: size exceeds cap");
  }
  ProductCat p;
  p.factors = std::move(factors);

  const int n = static_cast<int>(p.factors.size());
  std::vector<FinCat::Mor> mors(static_cast<size_t>(nmor));
  std::vector<int> otup(n), stup(n), dtup(n);
  for (long long m = 0; m < nmor; ++m) {
    long long rest = m;
    for (int i = 0; i < n; ++i) {
      int mi = static_cast<int>(rest % p.factors[i]->morphisms());
      rest /= p.factors[i]->morphisms();
      stup[i] = p.factors[i]->src(mi);
      dtup[i] = p.factors[i]->dst(mi);
    }
    long long s = 0, d = 0, radix = 1;
    for (int i = 0; i < n; ++i) {
      s += stup[i] * radix;
      d += dtup[i] * radix;
      radix *= p.factors[i]->objects();
    }
    mors[static_cast<size_t>(m)] = {static_cast<int>(s), static_cast<int>(d)};
  }

  std::vector<int> ids(static_cast<size_t>(nob));
  for (long long o = 0; o < nob; ++o) {
    long long rest = o, r = 0, radix = 1;
    for (int i = 0; i < n; ++i) {
      int oi = static_cast<int>(rest % p.factors[i]->objects());
      rest /= p.factors[i]->objects();
      r += p.factors[i]->identity(oi) * radix;
      radix *= p.factors[i]->morphisms();
    }
    ids[static_cast<size_t>(o)] = static_cast<int>(r);
  }

  // composable pairs of the product are tuples of composable pairs
  std::vector<std::vector<std::array<int, 3>>> trip(n);
  long long pairs = 1;
  for (int i = 0; i < n; ++i) {
    trip[i] = p.factors[i]->composition_triples();
    pairs *= static_cast<long long>(trip[i].size());
    if (pairs > 16 * max_objects) throw CapError("product: composition table exceeds cap");
  }
  std::vector<std::array<int, 3>> comps;
  comps.reserve(static_cast<size_t>(pairs));
  if (pairs > 0) {
    std::vector<int> digits(n, 0);
    std::vector<int> radix(n);
    for (int i = 0; i < n; ++i) radix[i] = static_cast<int>(trip[i].size());
    std::vector<int> ft(n), gt(n), ht(n);
    do {
      for (int i = 0; i < n; ++i) {
        const auto& t = trip[i][digits[i]];
        ft[i] = t[0];
        gt[i] = t[1];
        ht[i] = t[2];
      }
      comps.push_back({p.mor_rank(ft), p.mor_rank(gt), p.mor_rank(ht)});
    } while (advance(digits, radix));
  }

  p.cat = share(FinCat::build(static_cast<int>(nob), std::move(mors),
                              std::move(ids), comps));
  return p;
}

// ---------------------------------------------------------------------------

std::pair<int, int> CoproductCat::obj_part(int global) const {
  if (global < 0 || global >= cat->objects()) bad("coproduct: object out of range");
  int p = static_cast<int>(std::upper_bound(obj_offset.begin(), obj_offset.end(),
                                            global) - obj_offset.begin()) - 1;
  return {p, global - obj_offset[p]};
}

std::pair<int, int> CoproductCat::mor_part(int global) const {
  if (global < 0 || global >= cat->morphisms())
    bad("coproduct: morphism out of range");
  int p = static_cast<int>(std::upper_bound(mor_offset.begin(), mor_offset.end(),
                                            global) - mor_offset.begin()) - 1;
  return {p, global - mor_offset[p]};
}

CoproductCat coproduct(std::vector<CatPtr> parts) {
  CoproductCat c;
  c.parts = std::move(parts);
  int nob = 0, nmor = 0;
  for (const auto& p : c.parts) {
    c.obj_offset.push_back(nob);
    c.mor_offset.push_back(nmor);
    nob += p->objects();
    nmor += p->morphisms();
  }
  std::vector<FinCat::Mor> mors;
  mors.reserve(nmor);
  std::vector<int> ids(nob);
  std::vector<std::array<int, 3>> comps;
  for (size_t i = 0; i < c.parts.size(); ++i) {
    const FinCat& p = *c.parts[i];
    int oo = c.obj_offset[i], mo = c.mor_offset[i];
    for (int m = 0; m < p.morphisms(); ++m)
      mors.push_back({p.src(m) + oo, p.dst(m) + oo});
    for (int o = 0; o < p.objects(); ++o) ids[o + oo] = p.identity(o) + mo;
    for (const auto& [f, g, h] : p.composition_triples())
      comps.push_back({f + mo, g + mo, h + mo});
  }
  c.cat = share(FinCat::build(nob, std::move(mors), std::move(ids), comps));
  return c;
}

// ---------------------------------------------------------------------------

int FunctorCat::index_of(const FinFunctor& f) const {
  std::vector<int> key = f.omap();
  key.insert(key.end(), f.mmap().begin(), f.mmap().end());
  auto it = obj_lookup.find(key);
  return it == obj_lookup.end() ? -1 : it->second;
}

int FunctorCat::nat_index(int src_f, int dst_f,
                          const std::vector<int>& comps) const {
  std::vector<int> key{src_f, dst_f};
  key.insert(key.end(), comps.begin(), comps.end());
  auto it = mor_lookup.find(key);
  return it == mor_lookup.end() ? -1 : it->second;
}

FunctorCat functor_category(CatPtr dom, CatPtr cod, long long max_objects) {
  FunctorCat fc;
  fc.dom = dom;
  fc.cod = cod;

  const FinCat& c = *dom;
  const FinCat& d = *cod;

  long long omaps = 1;
  for (int o = 0; o < c.objects(); ++o) {
    omaps *= d.objects();
    if (omaps > 64 * max_objects)
      throw CapError("functor_category: object map space exceeds cap");
  }
  if (c.objects() == 0) omaps = 1;

  // hom lists of the codomain, for candidate images and components
  std::vector<std::vector<std::vector<int>>> hom(
      d.objects(), std::vector<std::vector<int>>(d.objects()));
  for (int m = 0; m < d.morphisms(); ++m) hom[d.src(m)][d.dst(m)].push_back(m);

  std::vector<int> nonid;  // non-identity morphisms of the domain
  for (int m = 0; m < c.morphisms(); ++m)
    if (!c.is_identity(m)) nonid.push_back(m);

  for (long long orank = 0; orank < omaps; ++orank) {
    std::vector<int> omap(c.objects());
    long long rest = orank;
    for (int o = 0; o < c.objects(); ++o) {
      omap[o] = static_cast<int>(rest % d.objects());
      rest /= d.objects();
    }
    // candidate images per non-identity morphism
    std::vector<const std::vector<int>*> cand(nonid.size());
    bool feasible = true;
    for (size_t i = 0; i < nonid.size(); ++i) {
      cand[i] = &hom[omap[c.src(nonid[i])]][omap[c.dst(nonid[i])]];
      if (cand[i]->empty()) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;

    std::vector<int> digits(nonid.size(), 0);
    std::vector<int> radix(nonid.size());
    for (size_t i = 0; i < nonid.size(); ++i)
      radix[i] = static_cast<int>(cand[i]->size());
    bool more = true;
    while (more) {
      std::vector<int> mmap(c.morphisms());
      for (int o = 0; o < c.objects(); ++o)
        mmap[c.identity(o)] = d.identity(omap[o]);
      for (size_t i = 0; i < nonid.size(); ++i)
        mmap[nonid[i]] = (*cand[i])[digits[i]];
      bool ok = true;
      for (int f = 0; f < c.morphisms() && ok; ++f)
        for (int g : c.out_of(c.dst(f)))
          if (mmap[c.compose(f, g)] != d.compose(mmap[f], mmap[g])) {
            ok = false;
            break;
          }
      if (ok) {
        if (static_cast<long long>(fc.objects.size()) >= max_objects)
          throw CapError("functor_category: functor count exceeds cap");
        FinFunctor f(dom, cod, omap, mmap);
        std::vector<int> key = f.omap();
        key.insert(key.end(), f.mmap().begin(), f.mmap().end());
        fc.obj_lookup.emplace(std::move(key),
                              static_cast<int>(fc.objects.size()));
        fc.objects.push_back(std::move(f));
      }
      more = !digits.empty() && advance(digits, radix);
    }
  }

  // natural transformations between every ordered pair of functors
  const int nf = static_cast<int>(fc.objects.size());
  for (int a = 0; a < nf; ++a) {
    for (int b = 0; b < nf; ++b) {
      const FinFunctor& F = fc.objects[a];
      const FinFunctor& G = fc.objects[b];
      std::vector<const std::vector<int>*> cand(c.objects());
      bool feasible = true;
      for (int o = 0; o < c.objects(); ++o) {
        cand[o] = &hom[F.obj(o)][G.obj(o)];
        if (cand[o]->empty()) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      std::vector<int> digits(c.objects(), 0);
      std::vector<int> radix(c.objects());
      for (int o = 0; o < c.objects(); ++o)
        radix[o] = static_cast<int>(cand[o]->size());
      bool more = true;
      while (more) {
        std::vector<int> comps(c.objects());
        for (int o = 0; o < c.objects(); ++o) comps[o] = (*cand[o])[digits[o]];
        bool natural = true;
        for (int m = 0; m < c.morphisms() && natural; ++m) {
          if (c.is_identity(m)) continue;
          if (d.compose(F.mor(m), comps[c.dst(m)]) !=
              d.compose(comps[c.src(m)], G.mor(m)))
            natural = false;
        }
        if (natural) {
          if (static_cast<long long>(fc.mors.size()) > 16 * max_objects)
            throw CapError("functor_category: transformation count exceeds cap");
          std::vector<int> key{a, b};
          key.insert(key.end(), comps.begin(), comps.end());
          fc.mor_lookup.emplace(std::move(key),
                                static_cast<int>(fc.mors.size()));
          fc.mors.push_back({a, b, std::move(comps)});
        }
        more = !digits.empty() && advance(digits, radix);
      }
    }
  }

  // assemble the category table
  std::vector<FinCat::Mor> mors;
  mors.reserve(fc.mors.size());
  for (const auto& nv : fc.mors) mors.push_back({nv.src, nv.dst});
  std::vector<int> ids(nf, -1);
  for (int a = 0; a < nf; ++a) {
    std::vector<int> comps(c.objects());
    for (int o = 0; o < c.objects(); ++o)
      comps[o] = d.identity(fc.objects[a].obj(o));
    ids[a] = fc.nat_index(a, a, comps);
  }
  std::vector<std::array<int, 3>> comps;
  for (int s = 0; s < static_cast<int>(fc.mors.size()); ++s) {
    for (int t = 0; t < static_cast<int>(fc.mors.size()); ++t) {
      if (fc.mors[s].dst != fc.mors[t].src) continue;
      std::vector<int> cc(c.objects());
      for (int o = 0; o < c.objects(); ++o)
        cc[o] = d.compose(fc.mors[s].comps[o], fc.mors[t].comps[o]);
      comps.push_back({s, t, fc.nat_index(fc.mors[s].src, fc.mors[t].dst, cc)});
    }
  }
  fc.cat = share(FinCat::build(nf, std::move(mors), std::move(ids), comps));
  return fc;
}

}  // namespace bip::fincat
