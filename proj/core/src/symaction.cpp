#include "bip/symaction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bip/error.hpp"
#include "bip/multicat.hpp"

namespace bip::symaction {

using fincat::CatPtr;

namespace {

std::string fmt_vec(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string fmt_perm(const FinMap& f) { return fmt_vec(f.image()); }

void need_perm(const FinMap& beta, const Word& b, const char* who) {
  if (beta.dom() != beta.cod() || !beta.is_bijection())
    throw SchemaError(std::string(who) + ": not a permutation");
  if (beta.dom() != static_cast<int>(b.size()))
    throw SchemaError(std::string(who) + ": degree does not match the word");
}

int inverse_or_throw(const CatPtr& cat, int m, const char* what) {
  int inv = cat->inverse_of(m);
  if (inv < 0) throw SchemaError(std::string(what) + " is not invertible");
  return inv;
}

}  // namespace

Word permute_word(const FinMap& beta, const Word& b) {
  need_perm(beta, b, "permute_word");
  Word out(b.size());
  for (size_t i = 0; i < b.size(); ++i) out[i] = b[beta(static_cast<int>(i))];
  return out;
}

int twist_object(const BpPtr& bp, const FinMap& beta, const Word& b) {
  need_perm(beta, b, "twist");
  const int n = beta.dom();
  std::vector<int> units(n);
  for (int k = 0; k < n; ++k) units[k] = bp->unit_object({b[k]});
  return bp->tensor_obj(beta, FinMap::identity(n), permute_word(beta, b), b,
                        units);
}

int twist_object_dual(const BpPtr& bp, const FinMap& beta, const Word& b) {
  need_perm(beta, b, "twist");
  const int n = beta.dom();
  std::vector<int> units(n);
  for (int k = 0; k < n; ++k) units[k] = bp->unit_object({b[beta(k)]});
  return bp->tensor_obj(FinMap::identity(n), beta.inverse(),
                        permute_word(beta, b), b, units);
}

namespace {

// Both factorisation forms tensor per-letter inverses of a unitor taken at
// the one-letter unit; only which unitor is inverted differs.
int factor_iso(const BpPtr& bp, const FinMap& alpha, const FinMap& beta,
               const Word& b, bool left) {
  need_perm(alpha, b, "twist factorisation");
  need_perm(beta, b, "twist factorisation");
  const FinMap ab = finord::compose(alpha, beta);
  const int n = ab.dom();
  std::vector<int> comps(n);
  for (int k = 0; k < n; ++k) {
    const Word letter{b[k]};
    const int u = bp->unit_object(letter);
    const int lr = left ? bp->lunit_component(letter, letter, u)
                        : bp->runit_component(letter, letter, u);
    comps[k] = inverse_or_throw(bp->hom(letter, letter), lr,
                                "twist factorisation: unitor");
  }
  return bp->tensor_mor(ab, FinMap::identity(n), permute_word(ab, b), b,
                        comps);
}

}  // namespace

int twist_factor_iso(const BpPtr& bp, const FinMap& alpha, const FinMap& beta,
                     const Word& b) {
  return factor_iso(bp, alpha, beta, b, true);
}

int twist_factor_iso_dual(const BpPtr& bp, const FinMap& alpha,
                          const FinMap& beta, const Word& b) {
  return factor_iso(bp, alpha, beta, b, false);
}

FinFunctor left_action(const BpPtr& bp, const FinMap& beta, const Word& b,
                       const Word& c) {
  need_perm(beta, b, "left action");
  const Word bw = permute_word(beta, b);
  const int u = twist_object(bp, beta, b);
  const int uu = bp->hom(bw, b)->identity(u);
  return fincat::make_functor(
      bp->hom(b, c), bp->hom(bw, c),
      [&](int x) { return bp->compose_obj(bw, b, c, u, x); },
      [&](int p) { return bp->compose_mor(bw, b, c, uu, p); });
}

FinFunctor right_action(const BpPtr& bp, const FinMap& delta, const Word& a,
                        const Word& c) {
  need_perm(delta, c, "right action");
  const Word cw = permute_word(delta, c);
  const int v = twist_object(bp, delta, c);
  const int vv = bp->hom(cw, c)->identity(v);
  return fincat::make_functor(
      bp->hom(a, cw), bp->hom(a, c),
      [&](int x) { return bp->compose_obj(a, cw, c, x, v); },
      [&](int p) { return bp->compose_mor(a, cw, c, p, vv); });
}

FinNatTrans left_cocycle(const BpPtr& bp, const FinMap& alpha,
                         const FinMap& beta, const Word& b, const Word& c) {
  const FinMap ab = finord::compose(alpha, beta);
  const Word bw = permute_word(beta, b);
  const Word abw = permute_word(ab, b);
  const int e = twist_factor_iso(bp, alpha, beta, b);
  const int ua = twist_object(bp, alpha, bw);
  const int ub = twist_object(bp, beta, b);
  const CatPtr src_hom = bp->hom(b, c);
  const CatPtr dst_hom = bp->hom(abw, c);
  std::vector<int> comps(src_hom->objects());
  for (int x = 0; x < src_hom->objects(); ++x) {
    const int xid = src_hom->identity(x);
    const int widen = bp->compose_mor(abw, b, c, e, xid);
    const int shuffle = bp->assoc_component(abw, bw, b, c, ua, ub, x);
    comps[x] = dst_hom->compose(widen, shuffle);
  }
  return FinNatTrans(
      left_action(bp, ab, b, c),
      fincat::compose(left_action(bp, beta, b, c), left_action(bp, alpha, bw, c)),
      std::move(comps));
}

FinNatTrans right_cocycle(const BpPtr& bp, const FinMap& alpha,
                          const FinMap& beta, const Word& a, const Word& c) {
  const FinMap ab = finord::compose(alpha, beta);
  const Word cw = permute_word(beta, c);
  const Word abw = permute_word(ab, c);
  const int e = twist_factor_iso(bp, alpha, beta, c);
  const int ua = twist_object(bp, alpha, cw);
  const int ub = twist_object(bp, beta, c);
  const CatPtr src_hom = bp->hom(a, abw);
  const CatPtr dst_hom = bp->hom(a, c);
  std::vector<int> comps(src_hom->objects());
  for (int x = 0; x < src_hom->objects(); ++x) {
    const int xid = src_hom->identity(x);
    const int widen = bp->compose_mor(a, abw, c, xid, e);
    const int shuffle = inverse_or_throw(
        dst_hom, bp->assoc_component(a, abw, cw, c, x, ua, ub),
        "right cocycle: associator");
    comps[x] = dst_hom->compose(widen, shuffle);
  }
  return FinNatTrans(
      right_action(bp, ab, a, c),
      fincat::compose(right_action(bp, alpha, a, cw), right_action(bp, beta, a, c)),
      std::move(comps));
}

FinNatTrans mixed_interchange(const BpPtr& bp, const FinMap& alpha,
                              const FinMap& beta, const Word& b,
                              const Word& c) {
  need_perm(alpha, b, "mixed interchange");
  need_perm(beta, c, "mixed interchange");
  const Word bw = permute_word(alpha, b);
  const Word cw = permute_word(beta, c);
  const int ua = twist_object(bp, alpha, b);
  const int vb = twist_object(bp, beta, c);
  const CatPtr src_hom = bp->hom(b, cw);
  std::vector<int> comps(src_hom->objects());
  for (int x = 0; x < src_hom->objects(); ++x)
    comps[x] = bp->assoc_component(bw, b, cw, c, ua, x, vb);
  return FinNatTrans(
      fincat::compose(left_action(bp, alpha, b, cw), right_action(bp, beta, bw, c)),
      fincat::compose(right_action(bp, beta, b, c), left_action(bp, alpha, b, c)),
      std::move(comps));
}

FinNatTrans left_unit_iso(const BpPtr& bp, const Word& b, const Word& c) {
  const FinMap idn = FinMap::identity(static_cast<int>(b.size()));
  const CatPtr h = bp->hom(b, c);
  std::vector<int> comps(h->objects());
  for (int x = 0; x < h->objects(); ++x) comps[x] = bp->lunit_component(b, c, x);
  return FinNatTrans(left_action(bp, idn, b, c), FinFunctor::identity(h),
                     std::move(comps));
}

FinNatTrans right_unit_iso(const BpPtr& bp, const Word& a, const Word& c) {
  const FinMap idn = FinMap::identity(static_cast<int>(c.size()));
  const CatPtr h = bp->hom(a, c);
  std::vector<int> comps(h->objects());
  for (int x = 0; x < h->objects(); ++x) comps[x] = bp->runit_component(a, c, x);
  return FinNatTrans(right_action(bp, idn, a, c), FinFunctor::identity(h),
                     std::move(comps));
}

FinNatTrans left_equivalence(const BpPtr& bp, const FinMap& beta,
                             const Word& b, const Word& c) {
  need_perm(beta, b, "left equivalence");
  return fincat::vcompose(fincat::invert(left_unit_iso(bp, b, c)),
                          left_cocycle(bp, beta.inverse(), beta, b, c));
}

FinNatTrans right_equivalence(const BpPtr& bp, const FinMap& beta,
                              const Word& a, const Word& c) {
  need_perm(beta, c, "right equivalence");
  return fincat::vcompose(fincat::invert(right_unit_iso(bp, a, c)),
                          right_cocycle(bp, beta.inverse(), beta, a, c));
}

int middle_shift_iso(const BpPtr& bp, const FinMap& beta, const Word& a,
                     const Word& b, const Word& c, int x, int y) {
  need_perm(beta, b, "middle shift");
  const Word bw = permute_word(beta, b);
  return bp->assoc_component(a, bw, b, c, x, twist_object(bp, beta, b), y);
}

int left_shift_iso(const BpPtr& bp, const FinMap& beta, const Word& b,
                   const Word& c, const Word& d, int x, int y) {
  need_perm(beta, b, "left shift");
  const Word bw = permute_word(beta, b);
  return bp->assoc_component(bw, b, c, d, twist_object(bp, beta, b), x, y);
}

int right_shift_iso(const BpPtr& bp, const FinMap& beta, const Word& a,
                    const Word& b, const Word& c, int x, int y) {
  need_perm(beta, c, "right shift");
  const Word cw = permute_word(beta, c);
  return bp->assoc_component(a, b, cw, c, x, y, twist_object(bp, beta, c));
}

// ---------------------------------------------------------------------------
// checker

namespace {

using report::CheckResult;

std::vector<FinMap> perms_of(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<FinMap> out;
  do {
    out.push_back(FinMap(n, n, img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Everything the law loops share: cap tiers, word lists, permutations by
// degree, and caches so a functor or cocycle is materialized once.
struct ActionScan {
  const BpPtr& bp;
  int capw, capn, capm;
  std::vector<std::vector<Word>> words;  // by length, up to capw
  std::vector<std::vector<FinMap>> perms;  // by degree, up to capn

  std::map<std::vector<int>, FinFunctor> lefts, rights;
  std::map<std::vector<int>, FinNatTrans> lco, rco;

  ActionScan(const BpPtr& bp_, const CheckCaps& caps) : bp(bp_) {
    capw = std::min(caps.max_word_len, bp->max_word_len());
    capn = std::min(caps.max_index, capw);
    capm = std::min(caps.max_index_multi, capn);
    for (int l = 0; l <= capw; ++l)
      words.push_back(multicat::all_words(bp->colours(), l));
    for (int n = 0; n <= capn; ++n) perms.push_back(perms_of(n));
  }

  static std::vector<int> key(std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> k;
    for (const auto* p : parts) {
      k.insert(k.end(), p->begin(), p->end());
      k.push_back(-1);
    }
    return k;
  }

  const FinFunctor& left(const FinMap& beta, const Word& b, const Word& c) {
    auto k = key({&beta.image(), &b, &c});
    auto it = lefts.find(k);
    if (it == lefts.end())
      it = lefts.emplace(std::move(k), left_action(bp, beta, b, c)).first;
    return it->second;
  }

  const FinFunctor& right(const FinMap& delta, const Word& a, const Word& c) {
    auto k = key({&delta.image(), &a, &c});
    auto it = rights.find(k);
    if (it == rights.end())
      it = rights.emplace(std::move(k), right_action(bp, delta, a, c)).first;
    return it->second;
  }

  const FinNatTrans& left_co(const FinMap& alpha, const FinMap& beta,
                             const Word& b, const Word& c) {
    auto k = key({&alpha.image(), &beta.image(), &b, &c});
    auto it = lco.find(k);
    if (it == lco.end())
      it = lco.emplace(std::move(k), left_cocycle(bp, alpha, beta, b, c)).first;
    return it->second;
  }

  const FinNatTrans& right_co(const FinMap& alpha, const FinMap& beta,
                              const Word& a, const Word& c) {
    auto k = key({&alpha.image(), &beta.image(), &a, &c});
    auto it = rco.find(k);
    if (it == rco.end())
      it = rco.emplace(std::move(k), right_cocycle(bp, alpha, beta, a, c)).first;
    return it->second;
  }
};

// Runs one law body, translating construction failures (invalid functor,
// transformation, or inversion) into a failed law rather than a throw.
template <typename Body>
CheckResult run_law(const std::string& name, Body&& body) {
  CheckResult res;
  res.law = name;
  try {
    body(res);
  } catch (const Error& e) {
    res.pass = false;
    res.witness = std::string("error: ") + e.what();
  }
  return res;
}

bool identity_components(const FinNatTrans& t) {
  const fincat::FinCat& d = *t.src().dst();
  for (int c : t.components())
    if (!d.is_identity(c)) return false;
  return true;
}

CheckResult law_twist_agreement(ActionScan& s) {
  return run_law("twist-agreement", [&](CheckResult& res) {
    for (int n = 0; n <= s.capn && res.pass; ++n)
      for (const auto& beta : s.perms[n]) {
        for (const auto& b : s.words[n]) {
          ++res.checked;
          if (twist_object(s.bp, beta, b) != twist_object_dual(s.bp, beta, b)) {
            res.pass = false;
            res.witness = "beta=" + fmt_perm(beta) + " b=" + fmt_vec(b);
            break;
          }
        }
        if (!res.pass) break;
      }
  });
}

CheckResult law_twist_unit(ActionScan& s) {
  return run_law("twist-unit", [&](CheckResult& res) {
    for (int n = 0; n <= s.capn && res.pass; ++n)
      for (const auto& b : s.words[n]) {
        ++res.checked;
        if (twist_object(s.bp, FinMap::identity(n), b) !=
            s.bp->unit_object(b)) {
          res.pass = false;
          res.witness = "b=" + fmt_vec(b);
          break;
        }
      }
  });
}

CheckResult law_twist_factorisation(ActionScan& s) {
  return run_law("twist-factorisation", [&](CheckResult& res) {
    for (int n = 0; n <= s.capn && res.pass; ++n)
      for (const auto& alpha : s.perms[n]) {
        for (const auto& beta : s.perms[n]) {
          for (const auto& b : s.words[n]) {
            ++res.checked;
            const FinMap ab = finord::compose(alpha, beta);
            const Word bw = permute_word(beta, b);
            const Word abw = permute_word(ab, b);
            const int e = twist_factor_iso(s.bp, alpha, beta, b);
            const CatPtr h = s.bp->hom(abw, b);
            const int paired =
                s.bp->compose_obj(abw, bw, b, twist_object(s.bp, alpha, bw),
                                  twist_object(s.bp, beta, b));
            const bool ok =
                e == twist_factor_iso_dual(s.bp, alpha, beta, b) &&
                h->src(e) == twist_object(s.bp, ab, b) &&
                h->dst(e) == paired && h->is_iso(e);
            if (!ok) {
              res.pass = false;
              res.witness = "alpha=" + fmt_perm(alpha) +
                            " beta=" + fmt_perm(beta) + " b=" + fmt_vec(b);
              break;
            }
          }
          if (!res.pass) break;
        }
        if (!res.pass) break;
      }
  });
}

CheckResult law_actions(ActionScan& s, bool left) {
  return run_law(left ? "left-action" : "right-action", [&](CheckResult& res) {
    for (int n = 0; n <= s.capn; ++n)
      for (const auto& beta : s.perms[n])
        for (const auto& moved : s.words[n])
          for (int lo = 0; lo <= s.capw; ++lo)
            for (const auto& other : s.words[lo]) {
              // The functor constructor re-derives identity and composite
              // preservation; reaching here means the action is functorial.
              const FinFunctor& f = left ? s.left(beta, moved, other)
                                         : s.right(beta, other, moved);
              res.checked += f.src()->objects() + f.src()->morphisms();
            }
  });
}

CheckResult law_cocycle(ActionScan& s, bool left) {
  return run_law(left ? "left-cocycle" : "right-cocycle",
                 [&](CheckResult& res) {
    for (int n = 0; n <= s.capm && res.pass; ++n)
      for (const auto& alpha : s.perms[n])
        for (const auto& beta : s.perms[n]) {
          for (const auto& gamma : s.perms[n]) {
            const FinMap abg =
                finord::compose(finord::compose(alpha, beta), gamma);
            for (const auto& moved : s.words[n]) {
              for (int lo = 0; lo <= s.capw; ++lo)
                for (const auto& other : s.words[lo]) {
                  FinNatTrans way1 = left
                      ? fincat::vcompose(
                            s.left_co(finord::compose(alpha, beta), gamma,
                                      moved, other),
                            fincat::whisker_left(
                                s.left(gamma, moved, other),
                                s.left_co(alpha, beta,
                                          permute_word(gamma, moved), other)))
                      : fincat::vcompose(
                            s.right_co(finord::compose(alpha, beta), gamma,
                                       other, moved),
                            fincat::whisker_right(
                                s.right_co(alpha, beta, other,
                                           permute_word(gamma, moved)),
                                s.right(gamma, other, moved)));
                  FinNatTrans way2 = left
                      ? fincat::vcompose(
                            s.left_co(alpha, finord::compose(beta, gamma),
                                      moved, other),
                            fincat::whisker_right(
                                s.left_co(beta, gamma, moved, other),
                                s.left(alpha,
                                       permute_word(finord::compose(beta, gamma),
                                                    moved),
                                       other)))
                      : fincat::vcompose(
                            s.right_co(alpha, finord::compose(beta, gamma),
                                       other, moved),
                            fincat::whisker_left(
                                s.right(alpha, other,
                                        permute_word(finord::compose(beta, gamma),
                                                     moved)),
                                s.right_co(beta, gamma, other, moved)));
                  res.checked += way1.components().size();
                  if (!fincat::equal_nats(way1, way2)) {
                    res.pass = false;
                    res.witness = "alpha=" + fmt_perm(alpha) +
                                  " beta=" + fmt_perm(beta) +
                                  " gamma=" + fmt_perm(gamma) + " moved=" +
                                  fmt_vec(moved) + " other=" + fmt_vec(other);
                    break;
                  }
                }
              if (!res.pass) break;
            }
            if (!res.pass) break;
          }
          if (!res.pass) break;
        }
  });
}

CheckResult law_unit(ActionScan& s, bool left) {
  return run_law(left ? "left-unit" : "right-unit", [&](CheckResult& res) {
    for (int n = 0; n <= s.capn && res.pass; ++n) {
      const FinMap idn = FinMap::identity(n);
      for (const auto& moved : s.words[n]) {
        for (int lo = 0; lo <= s.capw; ++lo)
          for (const auto& other : s.words[lo]) {
            const FinNatTrans u = left ? left_unit_iso(s.bp, moved, other)
                                       : right_unit_iso(s.bp, other, moved);
            ++res.checked;
            if (!u.is_invertible()) {
              res.pass = false;
              res.witness = "unitor not invertible at moved=" +
                            fmt_vec(moved) + " other=" + fmt_vec(other);
              break;
            }
            for (const auto& beta : s.perms[n]) {
              const Word bw = permute_word(beta, moved);
              // Absorbing the identity permutation on either side of the
              // cocycle must give back the identity transformation.
              FinNatTrans absorb_first = left
                  ? fincat::vcompose(
                        s.left_co(idn, beta, moved, other),
                        fincat::whisker_left(s.left(beta, moved, other),
                                             left_unit_iso(s.bp, bw, other)))
                  : fincat::vcompose(
                        s.right_co(idn, beta, other, moved),
                        fincat::whisker_right(right_unit_iso(s.bp, other, bw),
                                              s.right(beta, other, moved)));
              FinNatTrans absorb_second = left
                  ? fincat::vcompose(
                        s.left_co(beta, idn, moved, other),
                        fincat::whisker_right(left_unit_iso(s.bp, moved, other),
                                              s.left(beta, moved, other)))
                  : fincat::vcompose(
                        s.right_co(beta, idn, other, moved),
                        fincat::whisker_left(s.right(beta, other, moved),
                                             right_unit_iso(s.bp, other, moved)));
              res.checked += 2;
              if (!identity_components(absorb_first) ||
                  !identity_components(absorb_second)) {
                res.pass = false;
                res.witness = "beta=" + fmt_perm(beta) + " moved=" +
                              fmt_vec(moved) + " other=" + fmt_vec(other);
                break;
              }
            }
            if (!res.pass) break;
          }
        if (!res.pass) break;
      }
    }
  });
}

CheckResult law_mixed(ActionScan& s) {
  return run_law("mixed-interchange", [&](CheckResult& res) {
    for (int nb = 0; nb <= s.capn && res.pass; ++nb)
      for (int nc = 0; nc <= s.capn; ++nc) {
        for (const auto& alpha : s.perms[nb])
          for (const auto& beta : s.perms[nc]) {
            for (const auto& b : s.words[nb]) {
              for (const auto& c : s.words[nc]) {
                const FinNatTrans t = mixed_interchange(s.bp, alpha, beta, b, c);
                res.checked += t.components().size() + 1;
                if (!t.is_invertible()) {
                  res.pass = false;
                  res.witness = "alpha=" + fmt_perm(alpha) +
                                " beta=" + fmt_perm(beta) + " b=" + fmt_vec(b) +
                                " c=" + fmt_vec(c);
                  break;
                }
              }
              if (!res.pass) break;
            }
            if (!res.pass) break;
          }
        if (!res.pass) break;
      }
  });
}

// kind 0: m(r x, y) -> m(x, l y); kind 1: m(l x, y) -> l m(x, y);
// kind 2: r m(x, y) -> m(x, r y).  All three must land on the endpoints
// computed independently from the actions, and must be invertible.
CheckResult law_shift(ActionScan& s, int kind) {
  static const char* names[] = {"middle-shift", "left-shift", "right-shift"};
  return run_law(names[kind], [&](CheckResult& res) {
    for (int n = 0; n <= s.capm && res.pass; ++n)
      for (const auto& beta : s.perms[n])
        for (const auto& moved : s.words[n]) {
          const Word mw = permute_word(beta, moved);
          const int u = twist_object(s.bp, beta, moved);
          for (int l1 = 0; l1 <= s.capm; ++l1)
            for (const auto& w1 : s.words[l1]) {
              for (int l2 = 0; l2 <= s.capm; ++l2)
                for (const auto& w2 : s.words[l2]) {
                  // Words around the twisted slot, in composition order.
                  Word a, b, c, d;
                  CatPtr hx, hy, target;
                  if (kind == 0) {
                    a = w1, b = moved, c = w2;
                    hx = s.bp->hom(a, mw), hy = s.bp->hom(b, c);
                    target = s.bp->hom(a, c);
                  } else if (kind == 1) {
                    b = moved, c = w1, d = w2;
                    hx = s.bp->hom(b, c), hy = s.bp->hom(c, d);
                    target = s.bp->hom(mw, d);
                  } else {
                    a = w1, b = w2, c = moved;
                    hx = s.bp->hom(a, b), hy = s.bp->hom(b, mw);
                    target = s.bp->hom(a, c);
                  }
                  for (int x = 0; x < hx->objects() && res.pass; ++x)
                    for (int y = 0; y < hy->objects(); ++y) {
                      int iso, from, to;
                      if (kind == 0) {
                        iso = middle_shift_iso(s.bp, beta, a, moved, c, x, y);
                        const int rx = s.bp->compose_obj(a, mw, moved, x, u);
                        const int ly = s.bp->compose_obj(mw, moved, c, u, y);
                        from = s.bp->compose_obj(a, moved, c, rx, y);
                        to = s.bp->compose_obj(a, mw, c, x, ly);
                      } else if (kind == 1) {
                        iso = left_shift_iso(s.bp, beta, moved, c, d, x, y);
                        const int lx = s.bp->compose_obj(mw, moved, c, u, x);
                        const int xy = s.bp->compose_obj(moved, c, d, x, y);
                        from = s.bp->compose_obj(mw, c, d, lx, y);
                        to = s.bp->compose_obj(mw, moved, d, u, xy);
                      } else {
                        iso = right_shift_iso(s.bp, beta, a, b, moved, x, y);
                        const int xy = s.bp->compose_obj(a, b, mw, x, y);
                        const int ry = s.bp->compose_obj(b, mw, moved, y, u);
                        from = s.bp->compose_obj(a, mw, moved, xy, u);
                        to = s.bp->compose_obj(a, b, moved, x, ry);
                      }
                      ++res.checked;
                      if (target->src(iso) != from || target->dst(iso) != to ||
                          !target->is_iso(iso)) {
                        res.pass = false;
                        res.witness = "beta=" + fmt_perm(beta) + " moved=" +
                                      fmt_vec(moved) + " w1=" + fmt_vec(w1) +
                                      " w2=" + fmt_vec(w2) +
                                      " x=" + std::to_string(x) +
                                      " y=" + std::to_string(y);
                        break;
                      }
                    }
                  if (!res.pass) break;
                }
              if (!res.pass) break;
            }
          if (!res.pass) break;
        }
  });
}

CheckResult law_equivalence(ActionScan& s, bool left) {
  return run_law(left ? "left-equivalence" : "right-equivalence",
                 [&](CheckResult& res) {
    for (int n = 0; n <= s.capn && res.pass; ++n)
      for (const auto& beta : s.perms[n]) {
        for (const auto& moved : s.words[n]) {
          for (int lo = 0; lo <= s.capw; ++lo)
            for (const auto& other : s.words[lo]) {
              const FinNatTrans e = left
                  ? left_equivalence(s.bp, beta, moved, other)
                  : right_equivalence(s.bp, beta, other, moved);
              const CatPtr h =
                  left ? s.bp->hom(moved, other) : s.bp->hom(other, moved);
              const FinFunctor round_trip = left
                  ? fincat::compose(s.left(beta, moved, other),
                                    s.left(beta.inverse(),
                                           permute_word(beta, moved), other))
                  : fincat::compose(s.right(beta.inverse(), other,
                                            permute_word(beta, moved)),
                                    s.right(beta, other, moved));
              res.checked += e.components().size() + 1;
              if (!e.is_invertible() ||
                  !fincat::equal_functors(e.src(), FinFunctor::identity(h)) ||
                  !fincat::equal_functors(e.dst(), round_trip)) {
                res.pass = false;
                res.witness = "beta=" + fmt_perm(beta) + " moved=" +
                              fmt_vec(moved) + " other=" + fmt_vec(other);
                break;
              }
            }
          if (!res.pass) break;
        }
        if (!res.pass) break;
      }
  });
}

}  // namespace

report::Report check_symmetric_action(const BpPtr& bp,
                                      const CheckCaps& caps) {
  if (!bp) throw SchemaError("symmetric action: null biprop");
  ActionScan s(bp, caps);
  report::Report rep;
  rep.add(law_twist_agreement(s));
  rep.add(law_twist_unit(s));
  rep.add(law_twist_factorisation(s));
  rep.add(law_actions(s, true));
  rep.add(law_actions(s, false));
  rep.add(law_cocycle(s, true));
  rep.add(law_cocycle(s, false));
  rep.add(law_unit(s, true));
  rep.add(law_unit(s, false));
  rep.add(law_mixed(s));
  rep.add(law_shift(s, 0));
  rep.add(law_shift(s, 1));
  rep.add(law_shift(s, 2));
  rep.add(law_equivalence(s, true));
  rep.add(law_equivalence(s, false));
  return rep;
}

}  // namespace bip::symaction
