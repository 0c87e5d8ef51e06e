#include "bip/envelope.hpp"

#include <sstream>
#include <utility>

#include "bip/error.hpp"

namespace bip::envelope {

namespace {

std::string fmt_word(const Word& w) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

std::vector<int> gather(const std::vector<int>& xs,
                        const std::vector<int>& elems) {
  std::vector<int> out;
  out.reserve(elems.size());
  for (int e : elems) out.push_back(xs[static_cast<size_t>(e)]);
  return out;
}

int tag_of(const FinMap& m) { return static_cast<int>(m.rank()); }

finord::IndexedUnion singletons(int n) {
  return finord::IndexedUnion::from_sizes(
      std::vector<int>(static_cast<size_t>(n), 1));
}

void append_word(std::vector<int>& key, const Word& w) {
  key.insert(key.end(), w.begin(), w.end());
  key.push_back(-1);
}

}  // namespace

// ---------------------------------------------------------------------------
// EnvHom codec

EnvHom::Split EnvHom::split_obj(int x) const {
  auto [part, local] = cop.obj_part(x);
  return {part, parts[static_cast<size_t>(part)].obj_tuple(local)};
}

EnvHom::Split EnvHom::split_mor(int m) const {
  auto [part, local] = cop.mor_part(m);
  return {part, parts[static_cast<size_t>(part)].mor_tuple(local)};
}

int EnvHom::join_obj(int tag, const std::vector<int>& comps) const {
  if (tag < 0 || tag >= static_cast<int>(parts.size()))
    throw SchemaError("envelope hom: summand tag out of range");
  return cop.obj_in(tag, parts[static_cast<size_t>(tag)].obj_rank(comps));
}

int EnvHom::join_mor(int tag, const std::vector<int>& comps) const {
  if (tag < 0 || tag >= static_cast<int>(parts.size()))
    throw SchemaError("envelope hom: summand tag out of range");
  return cop.mor_in(tag, parts[static_cast<size_t>(tag)].mor_rank(comps));
}

// ---------------------------------------------------------------------------
// Memoised evaluation plans.  Tags determine all the map bookkeeping of an
// operation, so the restricted maps, fibre subwords and gather indices are
// computed once per (words, tags) configuration and replayed afterwards.

struct EnvelopeBiprop::ComposePlan {
  int tag = 0;
  struct Fib {
    FinMap map;
    Word as, bs;
    std::vector<int> elems;
  };
  std::vector<Fib> fibs;
};

struct EnvelopeBiprop::ComposeCtx {
  const EnvHom* ab = nullptr;
  const EnvHom* bc = nullptr;
  const EnvHom* ac = nullptr;
  Word a, b, c;
  size_t nbc = 0;
  std::vector<std::unique_ptr<ComposePlan>> plans;
};

struct EnvelopeBiprop::AssocPlan {
  int tag = 0;
  struct Fib {
    FinMap f, g;
    Word as, bs, cs;
    std::vector<int> hs_elems, ms_elems;
  };
  std::vector<Fib> fibs;
};

struct EnvelopeBiprop::AssocCtx {
  const EnvHom* ab = nullptr;
  const EnvHom* bc = nullptr;
  const EnvHom* cd = nullptr;
  const EnvHom* ad = nullptr;
  Word a, b, c, d;
  size_t nbc = 0, ncd = 0;
  std::vector<std::unique_ptr<AssocPlan>> plans;
};

struct EnvelopeBiprop::TensorShape {
  std::vector<const EnvHom*> blocks;
  std::vector<std::pair<int, int>> sources;  // per j: (block, position)
  const EnvHom* target = nullptr;
  std::map<std::vector<int>, int> merged;    // block tag tuple -> summand tag
};

// ---------------------------------------------------------------------------
// EnvelopeBiprop

EnvelopeBiprop::EnvelopeBiprop(McPtr base, int max_word_len,
                               long long max_hom_objects)
    : mc_(std::move(base)),
      max_word_len_(max_word_len),
      max_hom_objects_(max_hom_objects) {
  if (!mc_) throw SchemaError("envelope: null base multicategory");
  if (max_word_len_ < 0) throw SchemaError("envelope: negative word bound");
  if (max_word_len_ > mc_->max_arity())
    throw SchemaError("envelope: word bound exceeds the base arity bound");
  if (max_hom_objects_ <= 0)
    throw SchemaError("envelope: hom object cap must be positive");
}

std::string EnvelopeBiprop::name() const { return "env(" + mc_->name() + ")"; }

const EnvHom& EnvelopeBiprop::hom_data(const Word& a, const Word& b) const {
  if (static_cast<int>(a.size()) > max_word_len_ ||
      static_cast<int>(b.size()) > max_word_len_)
    throw CapError("envelope: word longer than the configured bound");
  for (int c : a)
    if (c < 0 || c >= colours())
      throw SchemaError("envelope: colour out of range in " + fmt_word(a));
  for (int c : b)
    if (c < 0 || c >= colours())
      throw SchemaError("envelope: colour out of range in " + fmt_word(b));

  std::vector<int> key;
  key.reserve(a.size() + b.size() + 1);
  append_word(key, a);
  key.insert(key.end(), b.begin(), b.end());
  auto it = homs_.find(key);
  if (it != homs_.end()) return it->second;

  const int I = static_cast<int>(a.size());
  const int J = static_cast<int>(b.size());
  EnvHom eh;
  eh.a = a;
  eh.b = b;
  std::vector<CatPtr> cats;
  long long total = 0;
  const long long n = finord::map_count(I, J);
  for (long long r = 0; r < n; ++r) {
    FinMap phi = FinMap::from_rank(I, J, r);
    auto dec = finord::decompose(phi);
    std::vector<CatPtr> factors;
    factors.reserve(static_cast<size_t>(J));
    for (int j = 0; j < J; ++j)
      factors.push_back(
          mc_->hom(multicat::subword(a, dec.fibers[static_cast<size_t>(j)]),
                   b[static_cast<size_t>(j)]));
    auto part = fincat::product(std::move(factors), max_hom_objects_);
    total += part.cat->objects();
    if (total > max_hom_objects_)
      throw CapError("envelope: hom " + fmt_word(a) + ";" + fmt_word(b) +
                     " exceeds the object cap");
    cats.push_back(part.cat);
    eh.phis.push_back(std::move(phi));
    eh.decs.push_back(std::move(dec));
    eh.parts.push_back(std::move(part));
  }
  eh.cop = fincat::coproduct(std::move(cats));
  return homs_.emplace(std::move(key), std::move(eh)).first->second;
}

CatPtr EnvelopeBiprop::hom(const Word& a, const Word& b) const {
  return hom_data(a, b).cat();
}

int EnvelopeBiprop::unit_object(const Word& a) const {
  const EnvHom& H = hom_data(a, a);
  const int I = static_cast<int>(a.size());
  std::vector<int> comps(static_cast<size_t>(I));
  for (int i = 0; i < I; ++i)
    comps[static_cast<size_t>(i)] = mc_->unit_object(a[static_cast<size_t>(i)]);
  return H.join_obj(tag_of(FinMap::identity(I)), comps);
}

EnvelopeBiprop::ComposeCtx& EnvelopeBiprop::compose_ctx(const Word& a,
                                                        const Word& b,
                                                        const Word& c) const {
  std::vector<int> key;
  key.reserve(a.size() + b.size() + c.size() + 2);
  append_word(key, a);
  append_word(key, b);
  key.insert(key.end(), c.begin(), c.end());
  auto it = compose_ctxs_.find(key);
  if (it != compose_ctxs_.end()) return *it->second;

  auto ctx = std::make_unique<ComposeCtx>();
  ctx->ab = &hom_data(a, b);
  ctx->bc = &hom_data(b, c);
  ctx->ac = &hom_data(a, c);
  ctx->a = a;
  ctx->b = b;
  ctx->c = c;
  ctx->nbc = ctx->bc->phis.size();
  ctx->plans.resize(ctx->ab->phis.size() * ctx->nbc);
  return *compose_ctxs_.emplace(std::move(key), std::move(ctx)).first->second;
}

const EnvelopeBiprop::ComposePlan& EnvelopeBiprop::compose_plan(ComposeCtx& ctx,
                                                                int tx,
                                                                int ty) const {
  auto& slot = ctx.plans[static_cast<size_t>(tx) * ctx.nbc +
                         static_cast<size_t>(ty)];
  if (slot) return *slot;

  const FinMap& phi = ctx.ab->phis[static_cast<size_t>(tx)];
  const FinMap& psi = ctx.bc->phis[static_cast<size_t>(ty)];
  const FinMap comp = finord::compose(phi, psi);
  auto plan = std::make_unique<ComposePlan>();
  plan->tag = tag_of(comp);
  const int K = psi.cod();
  plan->fibs.reserve(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k) {
    auto r = finord::restrict(phi, comp, psi, k);
    plan->fibs.push_back({r.map, multicat::subword(ctx.a, r.dom_elems),
                          multicat::subword(ctx.b, r.cod_elems),
                          std::move(r.cod_elems)});
  }
  slot = std::move(plan);
  return *slot;
}

int EnvelopeBiprop::compose_impl(const Word& a, const Word& b, const Word& c,
                                 int x, int y, bool mor) const {
  ComposeCtx& ctx = compose_ctx(a, b, c);
  auto sx = mor ? ctx.ab->split_mor(x) : ctx.ab->split_obj(x);
  auto sy = mor ? ctx.bc->split_mor(y) : ctx.bc->split_obj(y);
  const ComposePlan& plan = compose_plan(ctx, sx.tag, sy.tag);
  const int K = static_cast<int>(c.size());
  std::vector<int> comps(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k) {
    const auto& fib = plan.fibs[static_cast<size_t>(k)];
    comps[static_cast<size_t>(k)] =
        mor ? mc_->compose_mor(fib.map, fib.as, fib.bs,
                               c[static_cast<size_t>(k)],
                               gather(sx.comps, fib.elems),
                               sy.comps[static_cast<size_t>(k)])
            : mc_->compose_obj(fib.map, fib.as, fib.bs,
                               c[static_cast<size_t>(k)],
                               gather(sx.comps, fib.elems),
                               sy.comps[static_cast<size_t>(k)]);
  }
  return mor ? ctx.ac->join_mor(plan.tag, comps)
             : ctx.ac->join_obj(plan.tag, comps);
}

int EnvelopeBiprop::compose_obj(const Word& a, const Word& b, const Word& c,
                                int x, int y) const {
  return compose_impl(a, b, c, x, y, false);
}

int EnvelopeBiprop::compose_mor(const Word& a, const Word& b, const Word& c,
                                int mx, int my) const {
  return compose_impl(a, b, c, mx, my, true);
}

EnvelopeBiprop::AssocCtx& EnvelopeBiprop::assoc_ctx(const Word& a,
                                                    const Word& b,
                                                    const Word& c,
                                                    const Word& d) const {
  std::vector<int> key;
  key.reserve(a.size() + b.size() + c.size() + d.size() + 3);
  append_word(key, a);
  append_word(key, b);
  append_word(key, c);
  key.insert(key.end(), d.begin(), d.end());
  auto it = assoc_ctxs_.find(key);
  if (it != assoc_ctxs_.end()) return *it->second;

  auto ctx = std::make_unique<AssocCtx>();
  ctx->ab = &hom_data(a, b);
  ctx->bc = &hom_data(b, c);
  ctx->cd = &hom_data(c, d);
  ctx->ad = &hom_data(a, d);
  ctx->a = a;
  ctx->b = b;
  ctx->c = c;
  ctx->d = d;
  ctx->nbc = ctx->bc->phis.size();
  ctx->ncd = ctx->cd->phis.size();
  ctx->plans.resize(ctx->ab->phis.size() * ctx->nbc * ctx->ncd);
  return *assoc_ctxs_.emplace(std::move(key), std::move(ctx)).first->second;
}

const EnvelopeBiprop::AssocPlan& EnvelopeBiprop::assoc_plan(AssocCtx& ctx,
                                                            int tx, int ty,
                                                            int tz) const {
  auto& slot =
      ctx.plans[(static_cast<size_t>(tx) * ctx.nbc + static_cast<size_t>(ty)) *
                    ctx.ncd +
                static_cast<size_t>(tz)];
  if (slot) return *slot;

  const FinMap& phi = ctx.ab->phis[static_cast<size_t>(tx)];
  const FinMap& psi = ctx.bc->phis[static_cast<size_t>(ty)];
  const FinMap& chi = ctx.cd->phis[static_cast<size_t>(tz)];
  const FinMap pc = finord::compose(psi, chi);
  const FinMap all = finord::compose(phi, pc);
  auto plan = std::make_unique<AssocPlan>();
  plan->tag = tag_of(all);
  const int L = chi.cod();
  plan->fibs.reserve(static_cast<size_t>(L));
  for (int l = 0; l < L; ++l) {
    auto s = finord::restrict(phi, all, pc, l);
    auto t = finord::restrict(psi, pc, chi, l);
    plan->fibs.push_back({s.map, t.map, multicat::subword(ctx.a, s.dom_elems),
                          multicat::subword(ctx.b, s.cod_elems),
                          multicat::subword(ctx.c, t.cod_elems),
                          std::move(s.cod_elems), std::move(t.cod_elems)});
  }
  slot = std::move(plan);
  return *slot;
}

int EnvelopeBiprop::assoc_component(const Word& a, const Word& b, const Word& c,
                                    const Word& d, int x, int y, int z) const {
  if (mc_->strict()) {
    // identity on the composite; the coherence laws verify the endpoints
    // against independent evaluations anyway
    const int xy = compose_impl(a, b, c, x, y, false);
    const int lhs = compose_impl(a, c, d, xy, z, false);
    return hom_data(a, d).cat()->identity(lhs);
  }
  AssocCtx& ctx = assoc_ctx(a, b, c, d);
  auto sx = ctx.ab->split_obj(x);
  auto sy = ctx.bc->split_obj(y);
  auto sz = ctx.cd->split_obj(z);
  const AssocPlan& plan = assoc_plan(ctx, sx.tag, sy.tag, sz.tag);
  const int L = static_cast<int>(d.size());
  std::vector<int> comps(static_cast<size_t>(L));
  for (int l = 0; l < L; ++l) {
    const auto& fib = plan.fibs[static_cast<size_t>(l)];
    comps[static_cast<size_t>(l)] = mc_->assoc_component(
        fib.f, fib.g, fib.as, fib.bs, fib.cs, d[static_cast<size_t>(l)],
        gather(sx.comps, fib.hs_elems), gather(sy.comps, fib.ms_elems),
        sz.comps[static_cast<size_t>(l)]);
  }
  return ctx.ad->join_mor(plan.tag, comps);
}

int EnvelopeBiprop::lunit_component(const Word& a, const Word& b, int x) const {
  const EnvHom& AB = hom_data(a, b);
  if (mc_->strict()) return AB.cat()->identity(x);
  auto sx = AB.split_obj(x);
  const auto& fibers = AB.decs[static_cast<size_t>(sx.tag)].fibers;
  const int J = static_cast<int>(b.size());
  std::vector<int> comps(static_cast<size_t>(J));
  for (int j = 0; j < J; ++j)
    comps[static_cast<size_t>(j)] = mc_->lunit_component(
        multicat::subword(a, fibers[static_cast<size_t>(j)]),
        b[static_cast<size_t>(j)], sx.comps[static_cast<size_t>(j)]);
  return AB.join_mor(sx.tag, comps);
}

int EnvelopeBiprop::runit_component(const Word& a, const Word& b, int x) const {
  const EnvHom& AB = hom_data(a, b);
  if (mc_->strict()) return AB.cat()->identity(x);
  auto sx = AB.split_obj(x);
  const auto& fibers = AB.decs[static_cast<size_t>(sx.tag)].fibers;
  const int J = static_cast<int>(b.size());
  std::vector<int> comps(static_cast<size_t>(J));
  for (int j = 0; j < J; ++j)
    comps[static_cast<size_t>(j)] = mc_->runit_component(
        multicat::subword(a, fibers[static_cast<size_t>(j)]),
        b[static_cast<size_t>(j)], sx.comps[static_cast<size_t>(j)]);
  return AB.join_mor(sx.tag, comps);
}

EnvelopeBiprop::TensorShape& EnvelopeBiprop::tensor_shape(const FinMap& f,
                                                          const FinMap& g,
                                                          const Word& a,
                                                          const Word& b) const {
  std::vector<int> key;
  key.reserve(a.size() + b.size() + 7);
  key.push_back(f.dom());
  key.push_back(g.dom());
  key.push_back(f.cod());
  key.push_back(static_cast<int>(f.rank()));
  key.push_back(static_cast<int>(g.rank()));
  key.push_back(-1);
  append_word(key, a);
  key.insert(key.end(), b.begin(), b.end());
  auto it = tensor_shapes_.find(key);
  if (it != tensor_shapes_.end()) return *it->second;

  auto df = finord::decompose(f);
  auto dg = finord::decompose(g);
  const int K = f.cod();
  auto sh = std::make_unique<TensorShape>();
  sh->blocks.reserve(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k)
    sh->blocks.push_back(
        &hom_data(multicat::subword(a, df.fibers[static_cast<size_t>(k)]),
                  multicat::subword(b, dg.fibers[static_cast<size_t>(k)])));
  sh->sources.resize(static_cast<size_t>(g.dom()));
  for (int k = 0; k < K; ++k) {
    const auto& fib = dg.fibers[static_cast<size_t>(k)];
    for (size_t jj = 0; jj < fib.size(); ++jj)
      sh->sources[static_cast<size_t>(fib[jj])] = {k, static_cast<int>(jj)};
  }
  sh->target = &hom_data(a, b);
  return *tensor_shapes_.emplace(std::move(key), std::move(sh)).first->second;
}

int EnvelopeBiprop::tensor_impl(const FinMap& f, const FinMap& g, const Word& a,
                                const Word& b, const std::vector<int>& xs,
                                bool mor) const {
  if (f.cod() != g.cod())
    throw SchemaError("envelope: tensor cospan feet disagree");
  if (f.dom() != static_cast<int>(a.size()) ||
      g.dom() != static_cast<int>(b.size()))
    throw SchemaError("envelope: tensor words do not match the cospan");
  const int K = f.cod();
  if (static_cast<int>(xs.size()) != K)
    throw SchemaError("envelope: tensor needs one argument per index");

  TensorShape& sh = tensor_shape(f, g, a, b);
  std::vector<int> tags(static_cast<size_t>(K));
  std::vector<std::vector<int>> blocks(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k) {
    auto s = mor ? sh.blocks[static_cast<size_t>(k)]->split_mor(
                       xs[static_cast<size_t>(k)])
                 : sh.blocks[static_cast<size_t>(k)]->split_obj(
                       xs[static_cast<size_t>(k)]);
    tags[static_cast<size_t>(k)] = s.tag;
    blocks[static_cast<size_t>(k)] = std::move(s.comps);
  }

  int tag;
  auto mit = sh.merged.find(tags);
  if (mit != sh.merged.end()) {
    tag = mit->second;
  } else {
    std::vector<FinMap> fam;
    fam.reserve(static_cast<size_t>(K));
    for (int k = 0; k < K; ++k)
      fam.push_back(sh.blocks[static_cast<size_t>(k)]
                        ->phis[static_cast<size_t>(tags[static_cast<size_t>(k)])]);
    tag = tag_of(finord::merge_family(fam, f, g, singletons(f.dom()),
                                      singletons(g.dom())));
    sh.merged.emplace(tags, tag);
  }

  const int J = g.dom();
  std::vector<int> comps(static_cast<size_t>(J));
  for (int j = 0; j < J; ++j) {
    const auto& src = sh.sources[static_cast<size_t>(j)];
    comps[static_cast<size_t>(j)] =
        blocks[static_cast<size_t>(src.first)][static_cast<size_t>(src.second)];
  }
  return mor ? sh.target->join_mor(tag, comps)
             : sh.target->join_obj(tag, comps);
}

int EnvelopeBiprop::tensor_obj(const FinMap& f, const FinMap& g, const Word& a,
                               const Word& b, const std::vector<int>& xs) const {
  return tensor_impl(f, g, a, b, xs, false);
}

int EnvelopeBiprop::tensor_mor(const FinMap& f, const FinMap& g, const Word& a,
                               const Word& b, const std::vector<int>& xs) const {
  return tensor_impl(f, g, a, b, xs, true);
}

EnvPtr envelope(const McPtr& base, int max_word_len,
                long long max_hom_objects) {
  return std::make_shared<EnvelopeBiprop>(base, max_word_len, max_hom_objects);
}

EnvPtr build_envelope(const McPtr& base, const CheckCaps& caps,
                      int max_word_len, report::Report* out,
                      long long max_hom_objects) {
  report::Report rep = multicat::validate_multicat(base, caps);
  if (out) *out = rep;
  if (!rep.all_pass()) return nullptr;
  return envelope(base, max_word_len, max_hom_objects);
}

// ---------------------------------------------------------------------------
// Envelope of a multifunctor

namespace {

class EnvelopeMorphism final : public biprop::BipropMorphism {
 public:
  EnvelopeMorphism(MfPtr f, EnvPtr src, EnvPtr dst)
      : f_(std::move(f)), src_(std::move(src)), dst_(std::move(dst)) {}

  std::string name() const override { return "env(" + f_->name() + ")"; }
  BpPtr src() const override { return src_; }
  BpPtr dst() const override { return dst_; }
  int colour_map(int c) const override { return f_->colour_map(c); }

  int obj(const Word& a, const Word& b, int x) const override {
    return map_impl(a, b, x, false);
  }

  int mor(const Word& a, const Word& b, int m) const override {
    return map_impl(a, b, m, true);
  }

  int unit_comparison(const Word& a) const override {
    const int I = static_cast<int>(a.size());
    std::vector<int> comps(static_cast<size_t>(I));
    for (int i = 0; i < I; ++i)
      comps[static_cast<size_t>(i)] =
          f_->unit_comparison(a[static_cast<size_t>(i)]);
    return dst_->hom_data(word_map(a), word_map(a))
        .join_mor(tag_of(FinMap::identity(I)), comps);
  }

  int comp_comparison(const Word& a, const Word& b, const Word& c, int x,
                      int y) const override {
    const EnvHom& AB = src_->hom_data(a, b);
    const EnvHom& BC = src_->hom_data(b, c);
    auto sx = AB.split_obj(x);
    auto sy = BC.split_obj(y);
    const FinMap& phi = AB.phis[static_cast<size_t>(sx.tag)];
    const FinMap& psi = BC.phis[static_cast<size_t>(sy.tag)];
    const FinMap comp = finord::compose(phi, psi);
    const int K = static_cast<int>(c.size());
    std::vector<int> comps(static_cast<size_t>(K));
    for (int k = 0; k < K; ++k) {
      auto r = finord::restrict(phi, comp, psi, k);
      comps[static_cast<size_t>(k)] = f_->subst_comparison(
          r.map, multicat::subword(a, r.dom_elems),
          multicat::subword(b, r.cod_elems), c[static_cast<size_t>(k)],
          gather(sx.comps, r.cod_elems), sy.comps[static_cast<size_t>(k)]);
    }
    return dst_->hom_data(word_map(a), word_map(c))
        .join_mor(tag_of(comp), comps);
  }

  bool strict() const override { return f_->strict(); }

 private:
  int map_impl(const Word& a, const Word& b, int x, bool mor) const {
    const EnvHom& S = src_->hom_data(a, b);
    auto s = mor ? S.split_mor(x) : S.split_obj(x);
    const auto& fibers = S.decs[static_cast<size_t>(s.tag)].fibers;
    const int J = static_cast<int>(b.size());
    std::vector<int> comps(static_cast<size_t>(J));
    for (int j = 0; j < J; ++j) {
      const Word as =
          multicat::subword(a, fibers[static_cast<size_t>(j)]);
      comps[static_cast<size_t>(j)] =
          mor ? f_->mor(as, b[static_cast<size_t>(j)],
                        s.comps[static_cast<size_t>(j)])
              : f_->obj(as, b[static_cast<size_t>(j)],
                        s.comps[static_cast<size_t>(j)]);
    }
    const EnvHom& D = dst_->hom_data(word_map(a), word_map(b));
    return mor ? D.join_mor(s.tag, comps) : D.join_obj(s.tag, comps);
  }

  MfPtr f_;
  EnvPtr src_;
  EnvPtr dst_;
};

}  // namespace

BpMorPtr envelope_morphism(const MfPtr& f, const EnvPtr& src,
                           const EnvPtr& dst) {
  if (!f || !src || !dst)
    throw SchemaError("envelope morphism: null argument");
  if (src->base() != f->src() || dst->base() != f->dst())
    throw SchemaError(
        "envelope morphism: envelope bases do not match the multifunctor");
  return std::make_shared<EnvelopeMorphism>(f, src, dst);
}

report::Report check_envelope_functoriality(const MfPtr& f, const MfPtr& g,
                                            const EnvPtr& ef, const EnvPtr& em,
                                            const EnvPtr& eg,
                                            const CheckCaps& caps) {
  if (!f || !g || !ef || !em || !eg)
    throw SchemaError("envelope functoriality: null argument");
  if (f->dst() != g->src())
    throw SchemaError("envelope functoriality: multifunctors not composable");
  if (ef->base() != f->src() || em->base() != f->dst() ||
      eg->base() != g->dst())
    throw SchemaError("envelope functoriality: envelope bases do not line up");

  report::Report rep;
  {
    report::CheckResult r{"envelope-identity", true, 0, ""};
    std::vector<EnvPtr> ends{ef};
    if (eg != ef) ends.push_back(eg);
    for (const EnvPtr& e : ends) {
      auto lhs =
          envelope_morphism(multicat::identity_multifunctor(e->base()), e, e);
      ++r.checked;
      if (!biprop::morphisms_equal(lhs, biprop::identity_morphism(e), caps)) {
        r.pass = false;
        r.witness =
            "envelope of the identity differs from the identity on " +
            e->name();
        break;
      }
    }
    rep.add(r);
  }
  {
    report::CheckResult r{"envelope-composition", true, 1, ""};
    auto lhs =
        envelope_morphism(multicat::compose_multifunctors(f, g), ef, eg);
    auto rhs = biprop::compose_morphisms(envelope_morphism(f, ef, em),
                                         envelope_morphism(g, em, eg));
    if (!biprop::morphisms_equal(lhs, rhs, caps)) {
      r.pass = false;
      r.witness = "envelope of " + f->name() + ";" + g->name() +
                  " differs from the composite of the envelopes";
    }
    rep.add(r);
  }
  return rep;
}

}  // namespace bip::envelope
