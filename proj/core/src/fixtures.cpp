#include "bip/fixtures.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "bip/error.hpp"
#include "bip/finord.hpp"

namespace bip::fixtures {

namespace {

using json = nlohmann::json;
using fincat::CatPtr;
using fincat::FinCat;
using finord::FinMap;
using multicat::Word;

// ---------------------------------------------------------------------------
// json access with key context

const json& need(const json& j, const char* key) {
  if (!j.is_object())
    throw SchemaError(std::string("fixture: expected an object around '") +
                      key + "'");
  auto it = j.find(key);
  if (it == j.end())
    throw SchemaError(std::string("fixture: missing key '") + key + "'");
  return *it;
}

int as_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer())
    throw SchemaError(std::string("fixture: '") + key + "' must be an integer");
  return v.get<int>();
}

bool as_bool(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_boolean())
    throw SchemaError(std::string("fixture: '") + key + "' must be a boolean");
  return v.get<bool>();
}

std::string as_str(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_string())
    throw SchemaError(std::string("fixture: '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<int> as_ints(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_array())
    throw SchemaError(std::string("fixture: '") + key +
                      "' must be an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number_integer())
      throw SchemaError(std::string("fixture: '") + key +
                        "' must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

// ---------------------------------------------------------------------------
// caps

FixtureCaps parse_caps(const json& j) {
  FixtureCaps caps;
  if (!j.contains("caps")) return caps;
  const json& c = j.at("caps");
  if (!c.is_object()) throw SchemaError("fixture: 'caps' must be an object");
  if (c.contains("max_word_len")) caps.max_word_len = as_int(c, "max_word_len");
  if (c.contains("max_index")) caps.max_index = as_int(c, "max_index");
  if (c.contains("max_hom")) caps.max_hom = as_int(c, "max_hom");
  if (caps.max_word_len <= 0 || caps.max_index <= 0 || caps.max_hom <= 0)
    throw SchemaError("fixture: caps must be positive");
  return caps;
}

json dump_caps(const FixtureCaps& caps) {
  return json{{"max_word_len", caps.max_word_len},
              {"max_index", caps.max_index},
              {"max_hom", caps.max_hom}};
}

void word_within(const Word& w, const FixtureCaps& caps, const char* what) {
  if (static_cast<int>(w.size()) > caps.max_word_len)
    throw CapError(std::string("fixture: ") + what +
                   " exceeds the word length cap");
}

// ---------------------------------------------------------------------------
// category tables

FinCat parse_cat(const json& j, const FixtureCaps& caps) {
  const int nobj = as_int(j, "objects");
  if (nobj > caps.max_hom)
    throw CapError("fixture: category exceeds the hom size cap");
  std::vector<FinCat::Mor> mors;
  const json& jm = need(j, "morphisms");
  if (!jm.is_array())
    throw SchemaError("fixture: 'morphisms' must be an array of [src, dst]");
  for (const auto& e : jm) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw SchemaError("fixture: 'morphisms' must be an array of [src, dst]");
    mors.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  std::vector<int> ids = as_ints(j, "identities");
  std::vector<std::array<int, 3>> comps;
  const json& jc = need(j, "composition");
  if (!jc.is_array())
    throw SchemaError("fixture: 'composition' must be an array of triples");
  for (const auto& e : jc) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer())
      throw SchemaError("fixture: 'composition' must be an array of triples");
    comps.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  return FinCat::build(nobj, std::move(mors), std::move(ids), comps);
}

json dump_cat(const FinCat& c) {
  json mors = json::array();
  for (int m = 0; m < c.morphisms(); ++m)
    mors.push_back(json::array({c.src(m), c.dst(m)}));
  json ids = json::array();
  for (int o = 0; o < c.objects(); ++o) ids.push_back(c.identity(o));
  json comps = json::array();
  for (const auto& t : c.composition_triples())
    comps.push_back(json::array({t[0], t[1], t[2]}));
  return json{{"objects", c.objects()},
              {"morphisms", std::move(mors)},
              {"identities", std::move(ids)},
              {"composition", std::move(comps)}};
}

// ---------------------------------------------------------------------------
// tabulated multicategory

std::vector<int> hom_key(const Word& w, int target) {
  std::vector<int> k(w);
  k.push_back(-1);
  k.push_back(target);
  return k;
}

std::vector<int> map_part(const FinMap& f) {
  std::vector<int> k(f.image());
  k.push_back(f.cod());
  return k;
}

std::vector<int> mu_key(const FinMap& phi, const Word& as, const Word& bs,
                        int c) {
  std::vector<int> k = map_part(phi);
  k.push_back(-1);
  k.insert(k.end(), as.begin(), as.end());
  k.push_back(-1);
  k.insert(k.end(), bs.begin(), bs.end());
  k.push_back(-1);
  k.push_back(c);
  return k;
}

std::vector<int> assoc_key(const FinMap& f, const FinMap& g, const Word& as,
                           const Word& bs, const Word& cs, int d) {
  std::vector<int> k = map_part(f);
  k.push_back(-1);
  auto gp = map_part(g);
  k.insert(k.end(), gp.begin(), gp.end());
  k.push_back(-1);
  k.insert(k.end(), as.begin(), as.end());
  k.push_back(-1);
  k.insert(k.end(), bs.begin(), bs.end());
  k.push_back(-1);
  k.insert(k.end(), cs.begin(), cs.end());
  k.push_back(-1);
  k.push_back(d);
  return k;
}

// flat rank with the first slot fastest
long long flat_rank(const std::vector<int>& digits,
                    const std::vector<int>& radix) {
  long long r = 0, stride = 1;
  for (size_t i = 0; i < digits.size(); ++i) {
    r += digits[i] * stride;
    stride *= radix[i];
  }
  return r;
}

struct MuEntry {
  std::vector<int> obj_radix, mor_radix;  // inner slots in j order, outer last
  std::vector<int> obj, mor;
};

struct McTables {
  std::string name;
  std::vector<std::string> labels;
  int max_arity = 0;
  std::vector<int> units;
  std::map<std::vector<int>, CatPtr> homs;
  std::map<std::vector<int>, MuEntry> mu;
  bool has_isos = false;
  std::map<std::vector<int>, std::vector<int>> assoc;
  std::map<std::vector<int>, std::vector<int>> lunit, runit;
};

class TabulatedMulticat final : public multicat::SWMulticat {
 public:
  explicit TabulatedMulticat(McTables t) : t_(std::move(t)) {}

  std::string name() const override { return t_.name; }
  int colours() const override { return static_cast<int>(t_.labels.size()); }
  int max_arity() const override { return t_.max_arity; }
  // Strictness never lives in this class: strict fixtures are loaded through
  // the strictifying wrapper instead of carrying component tables.
  bool strict() const override { return false; }

  CatPtr hom(const Word& as, int b) const override {
    check_word(as);
    check_colour(b);
    auto it = t_.homs.find(hom_key(as, b));
    if (it == t_.homs.end())
      throw SchemaError("fixture multicategory: no hom table for the query");
    return it->second;
  }

  int unit_object(int a) const override {
    check_colour(a);
    return t_.units[static_cast<size_t>(a)];
  }

  int compose_obj(const FinMap& phi, const Word& as, const Word& bs, int c,
                  const std::vector<int>& inner, int outer) const override {
    const MuEntry& e = mu_entry(phi, as, bs, c);
    return e.obj[static_cast<size_t>(
        subst_rank(e.obj_radix, inner, outer, "object"))];
  }

  int compose_mor(const FinMap& phi, const Word& as, const Word& bs, int c,
                  const std::vector<int>& inner, int outer) const override {
    const MuEntry& e = mu_entry(phi, as, bs, c);
    return e.mor[static_cast<size_t>(
        subst_rank(e.mor_radix, inner, outer, "morphism"))];
  }

  int assoc_component(const FinMap& f, const FinMap& g, const Word& as,
                      const Word& bs, const Word& cs, int d,
                      const std::vector<int>& hs, const std::vector<int>& ms,
                      int w) const override {
    need_isos();
    check_word(as);
    check_word(bs);
    check_word(cs);
    check_colour(d);
    auto it = t_.assoc.find(assoc_key(f, g, as, bs, cs, d));
    if (it == t_.assoc.end())
      throw SchemaError(
          "fixture multicategory: no associativity table for the query");
    auto dec_f = finord::decompose(f);
    auto dec_g = finord::decompose(g);
    std::vector<int> digits, radix;
    for (int j = 0; j < f.cod(); ++j) {
      digits.push_back(at(hs, j, "associativity argument"));
      radix.push_back(
          hom(multicat::subword(as, dec_f.fibers[j]), bs[j])->objects());
    }
    for (int k = 0; k < g.cod(); ++k) {
      digits.push_back(at(ms, k, "associativity argument"));
      radix.push_back(
          hom(multicat::subword(bs, dec_g.fibers[k]), cs[k])->objects());
    }
    digits.push_back(w);
    radix.push_back(hom(cs, d)->objects());
    check_digits(digits, radix, "associativity argument");
    return it->second[static_cast<size_t>(flat_rank(digits, radix))];
  }

  int lunit_component(const Word& as, int b, int x) const override {
    return unitor(t_.lunit, "left unit", as, b, x);
  }
  int runit_component(const Word& as, int b, int x) const override {
    return unitor(t_.runit, "right unit", as, b, x);
  }

  const McTables& tables() const { return t_; }

 private:
  void check_word(const Word& w) const {
    if (static_cast<int>(w.size()) > t_.max_arity)
      throw CapError("fixture multicategory: word beyond the tabulated arity");
    for (int c : w) check_colour(c);
  }
  void check_colour(int c) const {
    if (c < 0 || c >= colours())
      throw SchemaError("fixture multicategory: colour out of range");
  }
  void need_isos() const {
    if (!t_.has_isos)
      throw SchemaError(
          "fixture multicategory: no structural component tables");
  }
  static int at(const std::vector<int>& v, int i, const char* what) {
    if (i < 0 || i >= static_cast<int>(v.size()))
      throw SchemaError(std::string("fixture multicategory: missing ") + what);
    return v[static_cast<size_t>(i)];
  }
  static void check_digits(const std::vector<int>& digits,
                           const std::vector<int>& radix, const char* what) {
    for (size_t i = 0; i < digits.size(); ++i)
      if (digits[i] < 0 || digits[i] >= radix[i])
        throw SchemaError(std::string("fixture multicategory: ") + what +
                          " out of range");
  }

  int unitor(const std::map<std::vector<int>, std::vector<int>>& tab,
             const char* what, const Word& as, int b, int x) const {
    need_isos();
    check_word(as);
    check_colour(b);
    auto it = tab.find(hom_key(as, b));
    if (it == tab.end())
      throw SchemaError(std::string("fixture multicategory: no ") + what +
                        " table for the query");
    if (x < 0 || x >= static_cast<int>(it->second.size()))
      throw SchemaError(std::string("fixture multicategory: ") + what +
                        " argument out of range");
    return it->second[static_cast<size_t>(x)];
  }

  const MuEntry& mu_entry(const FinMap& phi, const Word& as, const Word& bs,
                          int c) const {
    if (phi.dom() != static_cast<int>(as.size()) ||
        phi.cod() != static_cast<int>(bs.size()))
      throw SchemaError(
          "fixture multicategory: substitution map does not match the words");
    check_word(as);
    check_word(bs);
    check_colour(c);
    auto it = t_.mu.find(mu_key(phi, as, bs, c));
    if (it == t_.mu.end())
      throw SchemaError(
          "fixture multicategory: no substitution table for the query");
    return it->second;
  }

  long long subst_rank(const std::vector<int>& radix,
                       const std::vector<int>& inner, int outer,
                       const char* what) const {
    if (inner.size() + 1 != radix.size())
      throw SchemaError(
          "fixture multicategory: one inner argument per target position "
          "required");
    std::vector<int> digits(inner);
    digits.push_back(outer);
    check_digits(digits, radix,
                 (std::string("substitution ") + what).c_str());
    return flat_rank(digits, radix);
  }

  McTables t_;
};

// The loader's completeness sweep: every hom, unit and substitution table a
// query within the tabulated arity could touch must be present and sized
// exactly; values must land in the right ranges.
void validate_mc_tables(const McTables& t) {
  const int n = static_cast<int>(t.labels.size());
  if (n <= 0) throw SchemaError("fixture: empty colour list");
  if (t.max_arity < 0) throw SchemaError("fixture: negative arity");

  std::vector<std::vector<Word>> words(static_cast<size_t>(t.max_arity) + 1);
  for (int l = 0; l <= t.max_arity; ++l)
    words[static_cast<size_t>(l)] = multicat::all_words(n, l);

  auto hom_of = [&](const Word& w, int target) -> const CatPtr& {
    auto it = t.homs.find(hom_key(w, target));
    if (it == t.homs.end())
      throw SchemaError("fixture: missing hom table for a word within arity");
    return it->second;
  };

  for (const auto& wl : words)
    for (const auto& w : wl)
      for (int b = 0; b < n; ++b) (void)hom_of(w, b);

  if (static_cast<int>(t.units.size()) != n)
    throw SchemaError("fixture: one unit object per colour required");
  for (int a = 0; a < n; ++a) {
    if (t.max_arity < 1)
      throw SchemaError("fixture: units need arity at least one");
    const CatPtr& h = hom_of({a}, a);
    if (t.units[static_cast<size_t>(a)] < 0 ||
        t.units[static_cast<size_t>(a)] >= h->objects())
      throw SchemaError("fixture: unit object out of range");
  }

  // substitution tables: every phi within arity, every word pair, every target
  for (int I = 0; I <= t.max_arity; ++I)
    for (int J = 0; J <= t.max_arity; ++J) {
      const long long nmaps = finord::map_count(I, J);
      for (long long r = 0; r < nmaps; ++r) {
        const FinMap phi = FinMap::from_rank(I, J, r);
        const auto dec = finord::decompose(phi);
        for (const auto& as : words[static_cast<size_t>(I)])
          for (const auto& bs : words[static_cast<size_t>(J)])
            for (int c = 0; c < n; ++c) {
              auto it = t.mu.find(mu_key(phi, as, bs, c));
              if (it == t.mu.end())
                throw SchemaError(
                    "fixture: missing substitution table within arity");
              const MuEntry& e = it->second;
              std::vector<int> obj_radix, mor_radix;
              for (int j = 0; j < J; ++j) {
                const CatPtr& h =
                    hom_of(multicat::subword(as, dec.fibers[j]), bs[j]);
                obj_radix.push_back(h->objects());
                mor_radix.push_back(h->morphisms());
              }
              const CatPtr& outer = hom_of(bs, c);
              obj_radix.push_back(outer->objects());
              mor_radix.push_back(outer->morphisms());
              if (e.obj_radix != obj_radix || e.mor_radix != mor_radix)
                throw SchemaError(
                    "fixture: substitution table radix mismatch");
              long long osz = 1, msz = 1;
              for (int v : obj_radix) osz *= v;
              for (int v : mor_radix) msz *= v;
              const CatPtr& target = hom_of(as, c);
              if (static_cast<long long>(e.obj.size()) != osz ||
                  static_cast<long long>(e.mor.size()) != msz)
                throw SchemaError(
                    "fixture: substitution table size does not match the "
                    "declared homs");
              for (int v : e.obj)
                if (v < 0 || v >= target->objects())
                  throw SchemaError(
                      "fixture: substitution object value out of range");
              for (int v : e.mor)
                if (v < 0 || v >= target->morphisms())
                  throw SchemaError(
                      "fixture: substitution morphism value out of range");
            }
      }
    }

  if (!t.has_isos) return;

  // component tables: associativity per composable map pair, unitors per hom
  for (int I = 0; I <= t.max_arity; ++I)
    for (int J = 0; J <= t.max_arity; ++J)
      for (int K = 0; K <= t.max_arity; ++K) {
        const long long nf = finord::map_count(I, J);
        const long long ng = finord::map_count(J, K);
        for (long long rf = 0; rf < nf; ++rf)
          for (long long rg = 0; rg < ng; ++rg) {
            const FinMap f = FinMap::from_rank(I, J, rf);
            const FinMap g = FinMap::from_rank(J, K, rg);
            const auto dec_f = finord::decompose(f);
            const auto dec_g = finord::decompose(g);
            for (const auto& as : words[static_cast<size_t>(I)])
              for (const auto& bs : words[static_cast<size_t>(J)])
                for (const auto& cs : words[static_cast<size_t>(K)])
                  for (int d = 0; d < n; ++d) {
                    auto it = t.assoc.find(assoc_key(f, g, as, bs, cs, d));
                    if (it == t.assoc.end())
                      throw SchemaError(
                          "fixture: missing associativity table within arity");
                    long long sz = 1;
                    for (int j = 0; j < J; ++j)
                      sz *= hom_of(multicat::subword(as, dec_f.fibers[j]),
                                   bs[j])
                                ->objects();
                    for (int k = 0; k < K; ++k)
                      sz *= hom_of(multicat::subword(bs, dec_g.fibers[k]),
                                   cs[k])
                                ->objects();
                    sz *= hom_of(cs, d)->objects();
                    const CatPtr& target = hom_of(as, d);
                    if (static_cast<long long>(it->second.size()) != sz)
                      throw SchemaError(
                          "fixture: associativity table size mismatch");
                    for (int v : it->second)
                      if (v < 0 || v >= target->morphisms())
                        throw SchemaError(
                            "fixture: associativity value out of range");
                  }
          }
      }

  auto check_unitors =
      [&](const std::map<std::vector<int>, std::vector<int>>& tab) {
        for (const auto& wl : words)
          for (const auto& w : wl)
            for (int b = 0; b < n; ++b) {
              auto it = tab.find(hom_key(w, b));
              if (it == tab.end())
                throw SchemaError("fixture: missing unitor table within arity");
              const CatPtr& h = hom_of(w, b);
              if (static_cast<int>(it->second.size()) != h->objects())
                throw SchemaError("fixture: unitor table size mismatch");
              for (int v : it->second)
                if (v < 0 || v >= h->morphisms())
                  throw SchemaError("fixture: unitor value out of range");
            }
      };
  check_unitors(t.lunit);
  check_unitors(t.runit);
}

multicat::McPtr load_multicat_payload(const json& j, const FixtureCaps& caps) {
  McTables t;
  t.name = as_str(j, "name");
  const json& jl = need(j, "colours");
  if (!jl.is_array() || jl.empty())
    throw SchemaError("fixture: 'colours' must be a non-empty array");
  for (const auto& e : jl) {
    if (!e.is_string())
      throw SchemaError("fixture: colour labels must be strings");
    t.labels.push_back(e.get<std::string>());
  }
  t.max_arity = as_int(j, "max_arity");
  if (t.max_arity < 0) throw SchemaError("fixture: negative arity");
  if (t.max_arity > caps.max_word_len || t.max_arity > caps.max_index)
    throw CapError("fixture: arity exceeds the declared caps");
  t.units = as_ints(j, "units");

  const json& jh = need(j, "homs");
  if (!jh.is_array()) throw SchemaError("fixture: 'homs' must be an array");
  for (const auto& e : jh) {
    Word w = as_ints(e, "word");
    word_within(w, caps, "hom word");
    int target = as_int(e, "target");
    auto cat = fincat::share(parse_cat(need(e, "cat"), caps));
    if (!t.homs.emplace(hom_key(w, target), std::move(cat)).second)
      throw SchemaError("fixture: duplicate hom table");
  }

  const json& jmu = need(j, "mu");
  if (!jmu.is_array()) throw SchemaError("fixture: 'mu' must be an array");
  for (const auto& e : jmu) {
    std::vector<int> image = as_ints(e, "phi");
    const int cod = as_int(e, "cod");
    const int dom = static_cast<int>(image.size());
    if (dom > caps.max_index || cod > caps.max_index)
      throw CapError("fixture: substitution map exceeds the index cap");
    FinMap phi(dom, cod, std::move(image));
    Word as = as_ints(e, "as"), bs = as_ints(e, "bs");
    const int c = as_int(e, "target");
    MuEntry entry;
    entry.obj = as_ints(e, "objects");
    entry.mor = as_ints(e, "morphisms");
    // radices recorded at load and revalidated against the homs below
    const auto dec = finord::decompose(phi);
    for (int jj = 0; jj < phi.cod(); ++jj) {
      auto it = t.homs.find(
          hom_key(multicat::subword(as, dec.fibers[jj]),
                  jj < static_cast<int>(bs.size()) ? bs[jj] : -1));
      if (it == t.homs.end())
        throw SchemaError(
            "fixture: substitution table references an undeclared hom");
      entry.obj_radix.push_back(it->second->objects());
      entry.mor_radix.push_back(it->second->morphisms());
    }
    auto it = t.homs.find(hom_key(bs, c));
    if (it == t.homs.end())
      throw SchemaError(
          "fixture: substitution table references an undeclared hom");
    entry.obj_radix.push_back(it->second->objects());
    entry.mor_radix.push_back(it->second->morphisms());
    if (!t.mu.emplace(mu_key(phi, as, bs, c), std::move(entry)).second)
      throw SchemaError("fixture: duplicate substitution table");
  }

  const bool declared_strict = as_bool(j, "strict");
  const bool any_iso =
      j.contains("assoc") || j.contains("lunit") || j.contains("runit");
  if (declared_strict && any_iso)
    throw SchemaError(
        "fixture: strict multicategory must not carry component tables");
  if (!declared_strict) {
    if (!(j.contains("assoc") && j.contains("lunit") && j.contains("runit")))
      throw SchemaError(
          "fixture: non-strict multicategory requires assoc, lunit and runit "
          "tables");
    t.has_isos = true;
    const json& ja = j.at("assoc");
    if (!ja.is_array())
      throw SchemaError("fixture: 'assoc' must be an array");
    for (const auto& e : ja) {
      std::vector<int> fi = as_ints(e, "f");
      const int fcod = as_int(e, "f_cod");
      std::vector<int> gi = as_ints(e, "g");
      const int gcod = as_int(e, "g_cod");
      const int fdom = static_cast<int>(fi.size());
      const int gdom = static_cast<int>(gi.size());
      if (fdom > caps.max_index || fcod > caps.max_index ||
          gcod > caps.max_index)
        throw CapError("fixture: associativity map exceeds the index cap");
      FinMap f(fdom, fcod, std::move(fi));
      FinMap g(gdom, gcod, std::move(gi));
      Word as = as_ints(e, "as"), bs = as_ints(e, "bs"), cs = as_ints(e, "cs");
      const int d = as_int(e, "target");
      if (!t.assoc
               .emplace(assoc_key(f, g, as, bs, cs, d), as_ints(e, "table"))
               .second)
        throw SchemaError("fixture: duplicate associativity table");
    }
    auto read_unitors = [&](const char* key,
                            std::map<std::vector<int>, std::vector<int>>& out) {
      const json& ju = j.at(key);
      if (!ju.is_array())
        throw SchemaError(std::string("fixture: '") + key +
                          "' must be an array");
      for (const auto& e : ju) {
        Word w = as_ints(e, "word");
        const int b = as_int(e, "target");
        if (!out.emplace(hom_key(w, b), as_ints(e, "table")).second)
          throw SchemaError("fixture: duplicate unitor table");
      }
    };
    read_unitors("lunit", t.lunit);
    read_unitors("runit", t.runit);
  }

  validate_mc_tables(t);
  auto core = std::make_shared<const TabulatedMulticat>(std::move(t));
  if (!declared_strict) return core;
  return multicat::strictify(core, check_caps(caps));
}

json multicat_payload(const multicat::McPtr& mc, const std::string& name,
                      const FixtureCaps& caps, bool as_strict) {
  const int n = mc->colours();
  const int arity =
      std::min({mc->max_arity(), caps.max_word_len, caps.max_index});
  json j;
  j["name"] = name;
  json labels = json::array();
  for (int c = 0; c < n; ++c) labels.push_back("c" + std::to_string(c));
  j["colours"] = std::move(labels);
  j["max_arity"] = arity;
  j["strict"] = as_strict;
  json units = json::array();
  for (int c = 0; c < n; ++c) units.push_back(mc->unit_object(c));
  j["units"] = std::move(units);

  std::vector<std::vector<Word>> words(static_cast<size_t>(arity) + 1);
  for (int l = 0; l <= arity; ++l)
    words[static_cast<size_t>(l)] = multicat::all_words(n, l);

  json homs = json::array();
  for (const auto& wl : words)
    for (const auto& w : wl)
      for (int b = 0; b < n; ++b) {
        const CatPtr h = mc->hom(w, b);
        if (h->objects() > caps.max_hom)
          throw CapError("fixture: hom exceeds the declared hom cap");
        homs.push_back(
            json{{"word", w}, {"target", b}, {"cat", dump_cat(*h)}});
      }
  j["homs"] = std::move(homs);

  json mu = json::array();
  json assoc = json::array();
  for (int I = 0; I <= arity; ++I)
    for (int J = 0; J <= arity; ++J) {
      const long long nmaps = finord::map_count(I, J);
      for (long long r = 0; r < nmaps; ++r) {
        const FinMap phi = FinMap::from_rank(I, J, r);
        const auto dec = finord::decompose(phi);
        for (const auto& as : words[static_cast<size_t>(I)])
          for (const auto& bs : words[static_cast<size_t>(J)])
            for (int c = 0; c < n; ++c) {
              std::vector<int> obj_radix, mor_radix;
              for (int jj = 0; jj < J; ++jj) {
                const CatPtr h =
                    mc->hom(multicat::subword(as, dec.fibers[jj]), bs[jj]);
                obj_radix.push_back(h->objects());
                mor_radix.push_back(h->morphisms());
              }
              const CatPtr outer = mc->hom(bs, c);
              obj_radix.push_back(outer->objects());
              mor_radix.push_back(outer->morphisms());
              json entry{{"phi", phi.image()}, {"cod", J},      {"as", as},
                         {"bs", bs},           {"target", c}};
              auto table = [&](const std::vector<int>& radix, bool objs) {
                long long total = 1;
                for (int v : radix) total *= v;
                json out = json::array();
                std::vector<int> cur(radix.size(), 0);
                for (long long i = 0; i < total; ++i) {
                  std::vector<int> inner(cur.begin(), cur.end() - 1);
                  const int outer_arg = cur.empty() ? 0 : cur.back();
                  out.push_back(objs ? mc->compose_obj(phi, as, bs, c, inner,
                                                       outer_arg)
                                     : mc->compose_mor(phi, as, bs, c, inner,
                                                       outer_arg));
                  for (size_t p = 0; p < cur.size(); ++p) {
                    if (++cur[p] < radix[p]) break;
                    cur[p] = 0;
                  }
                }
                return out;
              };
              entry["objects"] = table(obj_radix, true);
              entry["morphisms"] = table(mor_radix, false);
              mu.push_back(std::move(entry));
            }
      }
    }
  j["mu"] = std::move(mu);
  if (as_strict) return j;

  for (int I = 0; I <= arity; ++I)
    for (int J = 0; J <= arity; ++J)
      for (int K = 0; K <= arity; ++K) {
        const long long nf = finord::map_count(I, J);
        const long long ng = finord::map_count(J, K);
        for (long long rf = 0; rf < nf; ++rf)
          for (long long rg = 0; rg < ng; ++rg) {
            const FinMap f = FinMap::from_rank(I, J, rf);
            const FinMap g = FinMap::from_rank(J, K, rg);
            const auto dec_f = finord::decompose(f);
            const auto dec_g = finord::decompose(g);
            for (const auto& as : words[static_cast<size_t>(I)])
              for (const auto& bs : words[static_cast<size_t>(J)])
                for (const auto& cs : words[static_cast<size_t>(K)])
                  for (int d = 0; d < n; ++d) {
                    std::vector<int> radix;
                    for (int jj = 0; jj < J; ++jj)
                      radix.push_back(
                          mc->hom(multicat::subword(as, dec_f.fibers[jj]),
                                  bs[jj])
                              ->objects());
                    for (int k = 0; k < K; ++k)
                      radix.push_back(
                          mc->hom(multicat::subword(bs, dec_g.fibers[k]),
                                  cs[k])
                              ->objects());
                    radix.push_back(mc->hom(cs, d)->objects());
                    long long total = 1;
                    for (int v : radix) total *= v;
                    json table = json::array();
                    std::vector<int> cur(radix.size(), 0);
                    for (long long i = 0; i < total; ++i) {
                      std::vector<int> hs(cur.begin(), cur.begin() + J);
                      std::vector<int> ms(cur.begin() + J, cur.end() - 1);
                      table.push_back(mc->assoc_component(
                          f, g, as, bs, cs, d, hs, ms, cur.back()));
                      for (size_t p = 0; p < cur.size(); ++p) {
                        if (++cur[p] < radix[p]) break;
                        cur[p] = 0;
                      }
                    }
                    assoc.push_back(json{{"f", f.image()},
                                         {"f_cod", J},
                                         {"g", g.image()},
                                         {"g_cod", K},
                                         {"as", as},
                                         {"bs", bs},
                                         {"cs", cs},
                                         {"target", d},
                                         {"table", std::move(table)}});
                  }
          }
      }
  j["assoc"] = std::move(assoc);

  auto unitors = [&](bool left) {
    json out = json::array();
    for (const auto& wl : words)
      for (const auto& w : wl)
        for (int b = 0; b < n; ++b) {
          json table = json::array();
          const int sz = mc->hom(w, b)->objects();
          for (int x = 0; x < sz; ++x)
            table.push_back(left ? mc->lunit_component(w, b, x)
                                 : mc->runit_component(w, b, x));
          out.push_back(
              json{{"word", w}, {"target", b}, {"table", std::move(table)}});
        }
    return out;
  };
  j["lunit"] = unitors(true);
  j["runit"] = unitors(false);
  return j;
}

// ---------------------------------------------------------------------------
// multifunctor tables

class FixtureMultifunctor final : public multicat::SWMultifunctor {
 public:
  FixtureMultifunctor(std::string name, multicat::McPtr src,
                      multicat::McPtr dst, std::vector<int> cmap,
                      std::map<std::vector<int>, std::vector<int>> obj,
                      std::map<std::vector<int>, std::vector<int>> mor)
      : name_(std::move(name)),
        src_(std::move(src)),
        dst_(std::move(dst)),
        cmap_(std::move(cmap)),
        obj_(std::move(obj)),
        mor_(std::move(mor)) {}

  std::string name() const override { return name_; }
  multicat::McPtr src() const override { return src_; }
  multicat::McPtr dst() const override { return dst_; }
  bool strict() const override { return true; }

  int colour_map(int c) const override {
    if (c < 0 || c >= static_cast<int>(cmap_.size()))
      throw SchemaError("fixture multifunctor: colour out of range");
    return cmap_[static_cast<size_t>(c)];
  }

  int obj(const Word& as, int b, int x) const override {
    return lookup(obj_, as, b, x, "object");
  }
  int mor(const Word& as, int b, int m) const override {
    return lookup(mor_, as, b, m, "morphism");
  }

  // Comparisons are synthesized, not stored: the identity at the recomputed
  // composite.  Tables that break strictness then surface as failed
  // comparison endpoints in the validator rather than as load errors.
  int unit_comparison(int a) const override {
    const int fa = colour_map(a);
    return dst_->hom({fa}, fa)->identity(dst_->unit_object(fa));
  }

  int subst_comparison(const FinMap& phi, const Word& as, const Word& bs,
                       int c, const std::vector<int>& inner,
                       int outer) const override {
    const Word fas = word_map(as), fbs = word_map(bs);
    const int fc = colour_map(c);
    const auto dec = finord::decompose(phi);
    std::vector<int> finner(static_cast<size_t>(phi.cod()));
    for (int jj = 0; jj < phi.cod(); ++jj)
      finner[static_cast<size_t>(jj)] =
          obj(multicat::subword(as, dec.fibers[jj]), bs[jj],
              inner[static_cast<size_t>(jj)]);
    const int fouter = obj(bs, c, outer);
    const int lhs = dst_->compose_obj(phi, fas, fbs, fc, finner, fouter);
    return dst_->hom(fas, fc)->identity(lhs);
  }

 private:
  int lookup(const std::map<std::vector<int>, std::vector<int>>& tab,
             const Word& as, int b, int x, const char* what) const {
    if (static_cast<int>(as.size()) > src_->max_arity())
      throw CapError("fixture multifunctor: word beyond the tabulated arity");
    auto it = tab.find(hom_key(as, b));
    if (it == tab.end())
      throw SchemaError("fixture multifunctor: no table for the query");
    if (x < 0 || x >= static_cast<int>(it->second.size()))
      throw SchemaError(std::string("fixture multifunctor: ") + what +
                        " out of range");
    return it->second[static_cast<size_t>(x)];
  }

  std::string name_;
  multicat::McPtr src_, dst_;
  std::vector<int> cmap_;
  std::map<std::vector<int>, std::vector<int>> obj_, mor_;
};

multicat::MfPtr load_multifunctor_payload(const json& j,
                                          const FixtureCaps& caps,
                                          const std::string& name) {
  auto src = load_multicat_payload(need(j, "src"), caps);
  auto dst = load_multicat_payload(need(j, "dst"), caps);
  if (!as_bool(j, "strict"))
    throw SchemaError(
        "fixture: only strict multifunctors have a table representation");
  std::vector<int> cmap = as_ints(j, "colour_map");
  if (static_cast<int>(cmap.size()) != src->colours())
    throw SchemaError("fixture: colour map length must match the source");
  for (int v : cmap)
    if (v < 0 || v >= dst->colours())
      throw SchemaError("fixture: colour map value out of range");
  if (src->max_arity() > dst->max_arity())
    throw SchemaError(
        "fixture: destination arity too small for the source words");

  std::map<std::vector<int>, std::vector<int>> obj, mor;
  const json& jh = need(j, "homs");
  if (!jh.is_array()) throw SchemaError("fixture: 'homs' must be an array");
  for (const auto& e : jh) {
    Word w = as_ints(e, "word");
    const int target = as_int(e, "target");
    auto key = hom_key(w, target);
    if (!obj.emplace(key, as_ints(e, "objects")).second)
      throw SchemaError("fixture: duplicate multifunctor table");
    mor.emplace(std::move(key), as_ints(e, "morphisms"));
  }

  // completeness and range checks against both endpoints
  const int n = src->colours();
  for (int l = 0; l <= src->max_arity(); ++l)
    for (const auto& w : multicat::all_words(n, l))
      for (int b = 0; b < n; ++b) {
        auto it = obj.find(hom_key(w, b));
        if (it == obj.end())
          throw SchemaError(
              "fixture: missing multifunctor table within arity");
        Word fw;
        for (int c : w) fw.push_back(cmap[static_cast<size_t>(c)]);
        const CatPtr sh = src->hom(w, b);
        const CatPtr dh = dst->hom(fw, cmap[static_cast<size_t>(b)]);
        const auto& mt = mor.at(hom_key(w, b));
        if (static_cast<int>(it->second.size()) != sh->objects() ||
            static_cast<int>(mt.size()) != sh->morphisms())
          throw SchemaError("fixture: multifunctor table size mismatch");
        for (int v : it->second)
          if (v < 0 || v >= dh->objects())
            throw SchemaError("fixture: multifunctor object out of range");
        for (int v : mt)
          if (v < 0 || v >= dh->morphisms())
            throw SchemaError("fixture: multifunctor morphism out of range");
      }

  return std::make_shared<const FixtureMultifunctor>(
      name, std::move(src), std::move(dst), std::move(cmap), std::move(obj),
      std::move(mor));
}

// ---------------------------------------------------------------------------
// reference biprop tables

biprop::BpPtr load_reference_payload(const json& j, const FixtureCaps& caps,
                                     const std::string& name) {
  biprop::TabulatedBiprop::Data d;
  d.name = name;
  const json& jl = need(j, "colours");
  if (!jl.is_array() || jl.empty())
    throw SchemaError("fixture: 'colours' must be a non-empty array");
  d.colours = static_cast<int>(jl.size());
  d.max_word_len = as_int(j, "max_word_len");
  if (d.max_word_len > caps.max_word_len)
    throw CapError("fixture: word bound exceeds the declared caps");

  const json& jh = need(j, "homs");
  if (!jh.is_array()) throw SchemaError("fixture: 'homs' must be an array");
  for (const auto& e : jh) {
    biprop::TabulatedBiprop::HomEntry h;
    h.a = as_ints(e, "a");
    h.b = as_ints(e, "b");
    word_within(h.a, caps, "hom word");
    word_within(h.b, caps, "hom word");
    h.cat = fincat::share(parse_cat(need(e, "cat"), caps));
    d.homs.push_back(std::move(h));
  }
  for (const auto& e : need(j, "units")) {
    biprop::TabulatedBiprop::UnitEntry u;
    u.a = as_ints(e, "word");
    u.obj = as_int(e, "obj");
    d.units.push_back(std::move(u));
  }
  for (const auto& e : need(j, "m")) {
    biprop::TabulatedBiprop::MTable t;
    t.a = as_ints(e, "a");
    t.b = as_ints(e, "b");
    t.c = as_ints(e, "c");
    t.obj = as_ints(e, "objects");
    t.mor = as_ints(e, "morphisms");
    d.m.push_back(std::move(t));
  }
  for (const auto& e : need(j, "assoc")) {
    biprop::TabulatedBiprop::AssocTable t;
    t.a = as_ints(e, "a");
    t.b = as_ints(e, "b");
    t.c = as_ints(e, "c");
    t.d = as_ints(e, "d");
    t.comp = as_ints(e, "table");
    d.assoc.push_back(std::move(t));
  }
  auto unitors = [&](const char* key,
                     std::vector<biprop::TabulatedBiprop::UnitorTable>& out) {
    for (const auto& e : need(j, key)) {
      biprop::TabulatedBiprop::UnitorTable t;
      t.a = as_ints(e, "a");
      t.b = as_ints(e, "b");
      t.comp = as_ints(e, "table");
      out.push_back(std::move(t));
    }
  };
  unitors("lunit", d.lunit);
  unitors("runit", d.runit);
  return std::make_shared<const biprop::TabulatedBiprop>(std::move(d));
}

json reference_payload(const biprop::TabulatedBiprop::Data& d,
                       const FixtureCaps& caps) {
  if (d.max_word_len > caps.max_word_len)
    throw CapError("fixture: word bound exceeds the declared caps");
  json j;
  json labels = json::array();
  for (int c = 0; c < d.colours; ++c)
    labels.push_back("c" + std::to_string(c));
  j["colours"] = std::move(labels);
  j["max_word_len"] = d.max_word_len;
  json homs = json::array();
  for (const auto& h : d.homs) {
    if (h.cat->objects() > caps.max_hom)
      throw CapError("fixture: hom exceeds the declared hom cap");
    homs.push_back(json{{"a", h.a}, {"b", h.b}, {"cat", dump_cat(*h.cat)}});
  }
  j["homs"] = std::move(homs);
  json units = json::array();
  for (const auto& u : d.units)
    units.push_back(json{{"word", u.a}, {"obj", u.obj}});
  j["units"] = std::move(units);
  json m = json::array();
  for (const auto& t : d.m)
    m.push_back(json{{"a", t.a},
                     {"b", t.b},
                     {"c", t.c},
                     {"objects", t.obj},
                     {"morphisms", t.mor}});
  j["m"] = std::move(m);
  json assoc = json::array();
  for (const auto& t : d.assoc)
    assoc.push_back(json{
        {"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}, {"table", t.comp}});
  j["assoc"] = std::move(assoc);
  auto unitors = [&](const std::vector<biprop::TabulatedBiprop::UnitorTable>&
                         tabs) {
    json out = json::array();
    for (const auto& t : tabs)
      out.push_back(json{{"a", t.a}, {"b", t.b}, {"table", t.comp}});
    return out;
  };
  j["lunit"] = unitors(d.lunit);
  j["runit"] = unitors(d.runit);
  return j;
}

// ---------------------------------------------------------------------------
// registries

std::vector<CatPtr> load_registry_payload(const json& j,
                                          const FixtureCaps& caps) {
  const json& jc = need(j, "cats");
  if (!jc.is_array() || jc.empty())
    throw SchemaError("fixture: 'cats' must be a non-empty array");
  std::vector<CatPtr> out;
  for (const auto& e : jc) out.push_back(fincat::share(parse_cat(e, caps)));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// public interface

CheckCaps check_caps(const FixtureCaps& caps) {
  return CheckCaps{caps.max_word_len, caps.max_index, caps.max_index};
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::multicat: return "multicat";
    case Kind::multifunctor: return "multifunctor";
    case Kind::biprop_reference: return "biprop-reference";
    case Kind::registry: return "registry";
  }
  return "unknown";
}

Fixture parse_fixture(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("fixture parse: ") + e.what());
  }
  try {
    Fixture fx;
    fx.name = as_str(j, "name");
    fx.caps = parse_caps(j);
    const std::string kind = as_str(j, "kind");
    if (kind == "multicat") {
      fx.kind = Kind::multicat;
      fx.mc = load_multicat_payload(j, fx.caps);
    } else if (kind == "multifunctor") {
      fx.kind = Kind::multifunctor;
      fx.mf = load_multifunctor_payload(j, fx.caps, fx.name);
    } else if (kind == "biprop-reference") {
      fx.kind = Kind::biprop_reference;
      fx.reference = load_reference_payload(j, fx.caps, fx.name);
    } else if (kind == "registry") {
      fx.kind = Kind::registry;
      fx.registry = load_registry_payload(j, fx.caps);
      fx.registry_word_len = as_int(j, "max_word_len");
      if (fx.registry_word_len < 0)
        throw SchemaError("fixture: negative word bound");
      if (fx.registry_word_len > fx.caps.max_word_len)
        throw CapError("fixture: word bound exceeds the declared caps");
    } else {
      throw SchemaError("fixture: unknown kind '" + kind + "'");
    }
    return fx;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("fixture: ") + e.what());
  }
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    in.open(path + ".json", std::ios::binary);
    if (!in) throw SchemaError("fixture: cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

std::string serialize_multicat(const multicat::McPtr& mc,
                               const std::string& name,
                               const FixtureCaps& caps, bool as_strict) {
  if (!mc) throw SchemaError("fixture: null multicategory");
  json j = multicat_payload(mc, name, caps, as_strict);
  j["kind"] = "multicat";
  j["caps"] = dump_caps(caps);
  return j.dump(2) + "\n";
}

std::string serialize_multifunctor(const multicat::MfPtr& mf,
                                   const std::string& name,
                                   const FixtureCaps& caps) {
  if (!mf) throw SchemaError("fixture: null multifunctor");
  if (!mf->strict())
    throw SchemaError(
        "fixture: only strict multifunctors have a table representation");
  json j;
  j["kind"] = "multifunctor";
  j["name"] = name;
  j["caps"] = dump_caps(caps);
  j["strict"] = true;
  j["src"] = multicat_payload(mf->src(), mf->src()->name(), caps, true);
  j["dst"] = multicat_payload(mf->dst(), mf->dst()->name(), caps, true);
  std::vector<int> cmap;
  for (int c = 0; c < mf->src()->colours(); ++c)
    cmap.push_back(mf->colour_map(c));
  j["colour_map"] = std::move(cmap);

  const int n = mf->src()->colours();
  const int arity = std::min(
      {mf->src()->max_arity(), caps.max_word_len, caps.max_index});
  json homs = json::array();
  for (int l = 0; l <= arity; ++l)
    for (const auto& w : multicat::all_words(n, l))
      for (int b = 0; b < n; ++b) {
        const CatPtr h = mf->src()->hom(w, b);
        json objs = json::array(), mors = json::array();
        for (int x = 0; x < h->objects(); ++x) objs.push_back(mf->obj(w, b, x));
        for (int m = 0; m < h->morphisms(); ++m)
          mors.push_back(mf->mor(w, b, m));
        homs.push_back(json{{"word", w},
                            {"target", b},
                            {"objects", std::move(objs)},
                            {"morphisms", std::move(mors)}});
      }
  j["homs"] = std::move(homs);
  return j.dump(2) + "\n";
}

std::string serialize_reference_biprop(const biprop::TabulatedBiprop::Data& d,
                                       const std::string& name,
                                       const FixtureCaps& caps) {
  json j = reference_payload(d, caps);
  j["kind"] = "biprop-reference";
  j["name"] = name;
  j["caps"] = dump_caps(caps);
  return j.dump(2) + "\n";
}

std::string serialize_registry(const std::vector<fincat::CatPtr>& cats,
                               int max_word_len, const std::string& name,
                               const FixtureCaps& caps) {
  if (cats.empty()) throw SchemaError("fixture: empty registry");
  if (max_word_len < 0) throw SchemaError("fixture: negative word bound");
  if (max_word_len > caps.max_word_len)
    throw CapError("fixture: word bound exceeds the declared caps");
  json j;
  j["kind"] = "registry";
  j["name"] = name;
  j["caps"] = dump_caps(caps);
  j["max_word_len"] = max_word_len;
  json out = json::array();
  for (const auto& c : cats) {
    if (!c) throw SchemaError("fixture: null registry entry");
    if (c->objects() > caps.max_hom)
      throw CapError("fixture: category exceeds the hom size cap");
    out.push_back(dump_cat(*c));
  }
  j["cats"] = std::move(out);
  return j.dump(2) + "\n";
}

}  // namespace bip::fixtures
