// Acceptance sweep: the eleven binding checks for this library, one line
// each with a wall-clock budget.  Exit status 0 iff every line passes.
//
// The heavyweight suites (the envelope axiom sweep, the functor-category
// sweep, the action coherence sweep) each run once and are interrogated by
// the criteria that share them; the determinism criterion rebuilds
// everything from scratch and compares report bytes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bip/biprop.hpp"
#include "bip/catprop.hpp"
#include "bip/envelope.hpp"
#include "bip/finord.hpp"
#include "bip/fixtures.hpp"
#include "bip/multicat.hpp"
#include "bip/report.hpp"
#include "bip/symaction.hpp"

using namespace bip;
using biprop::Word;
using finord::FinMap;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
};

int g_failures = 0;

void criterion(const char* label, double budget_s,
               const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("error: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool in_budget = secs < budget_s;
  const bool pass = o.pass && in_budget;
  if (!pass) ++g_failures;
  std::printf("[%s] %s %.2fs (budget %.0fs)%s%s%s\n", pass ? "PASS" : "FAIL",
              label, secs, budget_s, o.note.empty() ? "" : " ",
              o.note.c_str(),
              !in_budget ? " [over budget]" : "");
  std::fflush(stdout);
}

// ---------------------------------------------------------------------------
// shared heavyweight artefacts

report::Report run_envelope_suite(std::string* text) {
  auto mc = multicat::finite_set_multicat({2}, 3);
  report::Report base;
  auto env = envelope::build_envelope(mc, CheckCaps{2, 2, 2}, 3, &base);
  if (!env) {
    report::Report rep;
    rep.add({"envelope-build", false, 0, "base validation failed"});
    return rep;
  }
  const CheckCaps caps{2, 2, 2};
  report::Report rep = biprop::check_bicategory(env, caps);
  rep.merge(biprop::check_tensor_axioms(env, caps));
  rep.merge(biprop::check_derived_identities(env, caps));
  if (text) *text = report::to_text(rep);
  return rep;
}

report::Report run_functor_suite(std::string* text) {
  auto fs2 = multicat::finite_set_multicat({2}, 2);
  auto e2 = envelope::envelope(fs2, 2);
  auto sw = multicat::fs_swap_conjugation(fs2);
  const CheckCaps caps{2, 2, 2};
  report::Report rep =
      envelope::check_envelope_functoriality(sw, sw, e2, e2, e2, caps);
  rep.merge(biprop::validate_morphism(envelope::envelope_morphism(sw, e2, e2),
                                      caps));
  if (text) *text = report::to_text(rep);
  return rep;
}

report::Report run_catprop_suite(std::string* text) {
  auto cv = std::make_shared<const catprop::CatValuedBiprop>(
      catprop::default_registry(), 2);
  report::Report rep = catprop::check_catprop(cv, CheckCaps{2, 2, 2});
  if (text) *text = report::to_text(rep);
  return rep;
}

report::Report run_action_suite(std::string* text) {
  auto parity = std::make_shared<const biprop::ParityBiprop>(3);
  report::Report rep =
      symaction::check_symmetric_action(parity, CheckCaps{3, 3, 3});
  auto env = envelope::envelope(multicat::finite_set_multicat({2}, 3), 3);
  rep.merge(symaction::check_symmetric_action(env, CheckCaps{2, 2, 2}));
  if (text) *text = report::to_text(rep);
  return rep;
}

bool law_passes(const report::Report& rep, const char* law, long long* n) {
  const auto* r = rep.find(law);
  if (!r) return false;
  if (n) *n += r->checked;
  return r->pass && r->checked > 0;
}

std::string count_note(const char* what, long long n) {
  return std::string(what) + "=" + std::to_string(n);
}

}  // namespace

int main() {
  report::Report env_suite;  // filled by criterion 3, read by 4 and 5
  std::string env_text, fun_text, cat_text, act_text;

  criterion("01 graph-functoriality", 5, [&] {
    long long pairs = 0;
    for (int I = 0; I <= 4; ++I)
      for (int K = 0; K <= 4; ++K)
        for (int L = 0; L <= 4; ++L) {
          const long long nf = finord::map_count(I, K);
          const long long nh = finord::map_count(K, L);
          for (long long rf = 0; rf < nf; ++rf)
            for (long long rh = 0; rh < nh; ++rh) {
              if (!finord::check_graph_functoriality(
                      FinMap::from_rank(I, K, rf), FinMap::from_rank(K, L, rh)))
                return Outcome{false, "failed at sizes " + std::to_string(I) +
                                          "," + std::to_string(K) + "," +
                                          std::to_string(L)};
              ++pairs;
            }
        }
    return Outcome{true, count_note("pairs", pairs)};
  });

  criterion("02 collapse-graph-identity", 1, [&] {
    for (int I = 0; I <= 6; ++I) {
      const FinMap nabla(I, 1, std::vector<int>(static_cast<size_t>(I), 0));
      const FinMap sigma = finord::graph_bijection(nabla);
      for (int i = 0; i < I; ++i)
        if (sigma.image()[static_cast<size_t>(i)] != i)
          return Outcome{false, "not the identity at size " +
                                    std::to_string(I)};
    }
    return Outcome{true, "sizes 0..6"};
  });

  criterion("03 envelope-axiom-suite", 120, [&] {
    env_suite = run_envelope_suite(&env_text);
    return Outcome{env_suite.all_pass(),
                   count_note("laws", static_cast<long long>(
                                          env_suite.results.size())) +
                       " " + count_note("instances", env_suite.total_checked())};
  });

  criterion("04 pentagon-reduction", 60, [&] {
    long long n = 0;
    const bool ok = law_passes(env_suite, "pentagon", &n);
    return Outcome{ok, count_note("instances", n) + " (from criterion 03)"};
  });

  criterion("05 unitor-triangles", 30, [&] {
    long long n = 0;
    bool ok = true;
    for (const char* law :
         {"triangle", "lunit-component", "runit-component", "unitor-agreement"})
      ok = law_passes(env_suite, law, &n) && ok;
    // naturality is vacuous here: the unit-adjacent homs are discrete
    for (const char* law : {"lunit-naturality", "runit-naturality"}) {
      const auto* r = env_suite.find(law);
      ok = ok && r && r->pass;
      if (r) n += r->checked;
    }
    return Outcome{ok, count_note("instances", n) + " (from criterion 03)"};
  });

  criterion("06 envelope-functoriality", 60, [&] {
    auto rep = run_functor_suite(&fun_text);
    long long n = 0;
    bool ok = rep.all_pass();
    ok = law_passes(rep, "envelope-identity", &n) && ok;
    ok = law_passes(rep, "envelope-composition", &n) && ok;
    return Outcome{ok, count_note("instances", rep.total_checked())};
  });

  criterion("07 morphism-algebra", 60, [&] {
    auto fs2 = multicat::finite_set_multicat({2}, 2);
    auto e2 = envelope::envelope(fs2, 2);
    auto f = envelope::envelope_morphism(multicat::fs_swap_conjugation(fs2),
                                         e2, e2);
    const CheckCaps caps{2, 2, 2};
    auto fg = biprop::compose_morphisms(f, f);
    const bool assoc = biprop::morphisms_equal(
        biprop::compose_morphisms(fg, f), biprop::compose_morphisms(f, fg),
        caps);
    auto id = biprop::identity_morphism(e2);
    const bool unital =
        biprop::morphisms_equal(biprop::compose_morphisms(id, f), f, caps) &&
        biprop::morphisms_equal(biprop::compose_morphisms(f, id), f, caps);
    std::string note;
    if (!assoc) note = "associativity failed";
    if (!unital) note += std::string(note.empty() ? "" : "; ") + "unit laws failed";
    return Outcome{assoc && unital, note};
  });

  criterion("08 functor-category-instance", 120, [&] {
    auto rep = run_catprop_suite(&cat_text);
    return Outcome{rep.all_pass(),
                   count_note("laws", static_cast<long long>(
                                          rep.results.size())) +
                       " " + count_note("instances", rep.total_checked())};
  });

  criterion("09 action-oracle", 30, [&] {
    auto env = envelope::envelope(multicat::finite_set_multicat({2}, 3), 3);
    long long checked = 0;
    const auto bit = [](int v, int j) { return (v >> j) & 1; };
    for (int n = 2; n <= 3; ++n) {
      const Word a(static_cast<size_t>(n), 0), b{0};
      const int points = 1 << n;
      std::vector<int> image(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) image[static_cast<size_t>(i)] = i;
      do {
        const FinMap beta(n, n, image);
        std::vector<int> binv(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) binv[static_cast<size_t>(image[static_cast<size_t>(i)])] = i;

        // the left action must permute the arguments of the underlying
        // function: new slot i carries old slot beta(i)
        const auto act = symaction::left_action(env, beta, a, b);
        for (int x = 0; x < act.src()->objects(); ++x) {
          int want = 0;
          for (int p = 0; p < points; ++p) {
            int q = 0;
            for (int j = 0; j < n; ++j)
              q |= bit(p, binv[static_cast<size_t>(j)]) << j;
            want |= bit(x, q) << p;
          }
          if (act.obj(x) != want || act.mor(x) != want)
            return Outcome{false, "left action disagrees at degree " +
                                      std::to_string(n)};
          ++checked;
        }

        // the right action must re-tag the output: the summand map gains
        // delta after it and the components move to the relabelled slots
        const Word c(static_cast<size_t>(n), 0), unit_a{0};
        const auto ract = symaction::right_action(env, beta, unit_a, c);
        const auto& hd = env->hom_data(unit_a, c);
        for (int x = 0; x < ract.src()->objects(); ++x) {
          const auto s = hd.split_obj(x);
          const FinMap& phi = hd.phis[static_cast<size_t>(s.tag)];
          const FinMap retag = finord::compose(phi, beta);
          std::vector<int> comps(s.comps.size());
          for (int j = 0; j < n; ++j)
            comps[static_cast<size_t>(image[static_cast<size_t>(j)])] =
                s.comps[static_cast<size_t>(j)];
          const int want =
              hd.join_obj(static_cast<int>(retag.rank()), comps);
          if (ract.obj(x) != want || ract.mor(x) != want)
            return Outcome{false, "right action disagrees at degree " +
                                      std::to_string(n)};
          ++checked;
        }
      } while (std::next_permutation(image.begin(), image.end()));
    }
    return Outcome{true, count_note("instances", checked)};
  });

  criterion("10 weak-action-coherence", 120, [&] {
    auto rep = run_action_suite(&act_text);
    return Outcome{rep.all_pass(),
                   count_note("laws", static_cast<long long>(
                                          rep.results.size())) +
                       " " + count_note("instances", rep.total_checked())};
  });

  criterion("11 determinism", 120, [&] {
    std::string t;
    run_envelope_suite(&t);
    if (t != env_text) return Outcome{false, "envelope suite not stable"};
    run_functor_suite(&t);
    if (t != fun_text) return Outcome{false, "functor suite not stable"};
    run_catprop_suite(&t);
    if (t != cat_text) return Outcome{false, "functor-category suite not stable"};
    run_action_suite(&t);
    if (t != act_text) return Outcome{false, "action suite not stable"};
    return Outcome{true, "4 suites byte-stable"};
  });

  std::printf("overall: %s %d/11\n", g_failures == 0 ? "PASS" : "FAIL",
              11 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
