// Command-line front end: loads fixtures, builds envelopes, runs the law
// suites, applies permutation actions, and prints deterministic reports.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 malformed input,
// 3 a cap was exceeded.  Report lines come straight from the report
// printers, so two runs on the same input are byte-identical.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bip/biprop.hpp"
#include "bip/catprop.hpp"
#include "bip/envelope.hpp"
#include "bip/error.hpp"
#include "bip/fixtures.hpp"
#include "bip/multicat.hpp"
#include "bip/report.hpp"
#include "bip/symaction.hpp"

namespace {

using namespace bip;
using biprop::Word;

std::string g_format = "text";

void print_report(const report::Report& rep) {
  std::cout << (g_format == "structured" ? report::to_json(rep)
                                         : report::to_text(rep));
}

int finish(const report::Report& rep) {
  print_report(rep);
  return rep.all_pass() ? 0 : 1;
}

// words are written as comma-separated colour indices; "-" is the empty word
Word parse_word(const std::string& s) {
  Word w;
  if (s == "-" || s.empty()) return w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      w.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw SchemaError("cannot parse word '" + s + "'");
    }
  }
  return w;
}

std::string show_word(const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string show_map(const finord::FinMap& f) {
  std::string out = "[";
  for (int i = 0; i < f.dom(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.image()[static_cast<size_t>(i)]);
  }
  out += "]:" + std::to_string(f.dom()) + "->" + std::to_string(f.cod());
  return out;
}

fixtures::Fixture load_kind(const std::string& path, fixtures::Kind kind) {
  auto fx = fixtures::load_fixture(path);
  if (fx.kind != kind)
    throw SchemaError("fixture " + fx.name + " is a " +
                      fixtures::kind_name(fx.kind) + ", expected " +
                      fixtures::kind_name(kind));
  return fx;
}

int cmd_validate_multicat(const std::string& file) {
  auto fx = load_kind(file, fixtures::Kind::multicat);
  return finish(
      multicat::validate_multicat(fx.mc, fixtures::check_caps(fx.caps)));
}

int cmd_envelope(const std::string& file, bool check,
                 const std::vector<std::string>& dump_hom) {
  auto fx = load_kind(file, fixtures::Kind::multicat);
  report::Report base_rep;
  auto env = envelope::build_envelope(fx.mc, fixtures::check_caps(fx.caps),
                                      fx.caps.max_word_len, &base_rep);
  if (!env) {
    std::cout << "base multicategory failed validation; envelope refused\n";
    print_report(base_rep);
    return 1;
  }
  std::cout << "envelope " << env->name() << " colours=" << env->colours()
            << " max-word-len=" << env->max_word_len() << "\n";

  if (!dump_hom.empty()) {
    const Word a = parse_word(dump_hom[0]);
    const Word b = parse_word(dump_hom[1]);
    const auto& hd = env->hom_data(a, b);
    std::cout << "hom (" << show_word(a) << ");(" << show_word(b)
              << ") objects=" << hd.cat()->objects()
              << " morphisms=" << hd.cat()->morphisms()
              << " summands=" << hd.phis.size() << "\n";
    int offset = 0;
    for (size_t k = 0; k < hd.phis.size(); ++k) {
      const int size = hd.parts[k].cat->objects();
      std::cout << "  phi=" << show_map(hd.phis[k]) << " offset=" << offset
                << " size=" << size << "\n";
      offset += size;
    }
  }

  if (check) {
    // the exhaustive suite runs at word length and index caps of two;
    // larger homs blow past desk scale
    const CheckCaps caps{2, 2, 2};
    report::Report rep = biprop::check_bicategory(env, caps);
    rep.merge(biprop::check_tensor_axioms(env, caps));
    rep.merge(biprop::check_derived_identities(env, caps));
    return finish(rep);
  }
  return 0;
}

int cmd_check_biprop(const std::string& file) {
  auto fx = load_kind(file, fixtures::Kind::biprop_reference);
  // reference fixtures carry no tensor data, so only the word-indexed
  // composition laws apply
  return finish(
      biprop::check_bicategory(fx.reference, fixtures::check_caps(fx.caps)));
}

int cmd_act(const std::string& file, const std::vector<std::string>& hom,
            const std::string& side, const std::string& perm) {
  auto fx = load_kind(file, fixtures::Kind::multicat);
  auto env = envelope::envelope(fx.mc, fx.caps.max_word_len);
  const Word a = parse_word(hom[0]);
  const Word b = parse_word(hom[1]);
  const Word image = parse_word(perm);
  const int n = static_cast<int>(image.size());
  const finord::FinMap beta(n, n, image);

  fincat::FinFunctor act;
  Word src_a = a, src_b = b;
  if (side == "l") {
    if (n != static_cast<int>(a.size()))
      throw SchemaError("permutation degree does not match the source word");
    act = symaction::left_action(env, beta, a, b);
    src_a = symaction::permute_word(beta, a);
    std::cout << "left action beta=" << show_map(beta) << " : hom ("
              << show_word(a) << ");(" << show_word(b) << ") -> hom ("
              << show_word(src_a) << ");(" << show_word(b) << ")\n";
  } else if (side == "r") {
    if (n != static_cast<int>(b.size()))
      throw SchemaError("permutation degree does not match the target word");
    act = symaction::right_action(env, beta, a, b);
    src_b = symaction::permute_word(beta, b);
    std::cout << "right action delta=" << show_map(beta) << " : hom ("
              << show_word(a) << ");(" << show_word(src_b) << ") -> hom ("
              << show_word(a) << ");(" << show_word(b) << ")\n";
  } else {
    throw SchemaError("side must be 'l' or 'r'");
  }

  std::cout << "objects=" << act.src()->objects()
            << " morphisms=" << act.src()->morphisms() << "\n";
  for (int x = 0; x < act.src()->objects(); ++x)
    std::cout << "obj " << x << " -> " << act.obj(x) << "\n";
  for (int m = 0; m < act.src()->morphisms(); ++m)
    std::cout << "mor " << m << " -> " << act.mor(m) << "\n";
  return 0;
}

int cmd_catprop_demo(bool check, const std::string& registry_file,
                     int word_len) {
  catprop::CvPtr cv;
  CheckCaps caps{2, 2, 2};
  if (!registry_file.empty()) {
    auto fx = load_kind(registry_file, fixtures::Kind::registry);
    cv = std::make_shared<const catprop::CatValuedBiprop>(
        fx.registry, fx.registry_word_len);
    caps = fixtures::check_caps(fx.caps);
  } else {
    cv = std::make_shared<const catprop::CatValuedBiprop>(
        catprop::default_registry(), word_len);
  }

  std::cout << "cat-valued biprop colours=" << cv->colours()
            << " max-word-len=" << cv->max_word_len() << "\n";
  const int wl = std::min(1, cv->max_word_len());
  std::vector<Word> words;
  for (int l = 0; l <= wl; ++l) {
    auto v = multicat::all_words(cv->colours(), l);
    words.insert(words.end(), v.begin(), v.end());
  }
  for (const auto& a : words)
    for (const auto& b : words) {
      auto h = cv->hom(a, b);
      std::cout << "hom (" << show_word(a) << ");(" << show_word(b)
                << ") objects=" << h->objects()
                << " morphisms=" << h->morphisms() << "\n";
    }
  for (const auto& a : words)
    std::cout << "unit (" << show_word(a) << ") = " << cv->unit_object(a)
              << "\n";

  if (check) return finish(catprop::check_catprop(cv, caps));
  return 0;
}

int cmd_compose_morphisms(const std::string& file_f, const std::string& file_g,
                          bool check) {
  auto fxf = load_kind(file_f, fixtures::Kind::multifunctor);
  auto fxg = load_kind(file_g, fixtures::Kind::multifunctor);
  const fixtures::FixtureCaps caps_fx{
      std::min(fxf.caps.max_word_len, fxg.caps.max_word_len),
      std::min(fxf.caps.max_index, fxg.caps.max_index),
      std::min(fxf.caps.max_hom, fxg.caps.max_hom)};
  const int wl = caps_fx.max_word_len;

  auto e_src = envelope::envelope(fxf.mf->src(), wl);
  auto e_mid_f = envelope::envelope(fxf.mf->dst(), wl);
  auto e_mid_g = envelope::envelope(fxg.mf->src(), wl);
  auto e_dst = envelope::envelope(fxg.mf->dst(), wl);
  auto ef = envelope::envelope_morphism(fxf.mf, e_src, e_mid_f);
  auto eg = envelope::envelope_morphism(fxg.mf, e_mid_g, e_dst);
  // composition checks the middle biprops agree structurally
  auto fg = biprop::compose_morphisms(ef, eg);

  std::cout << "composite " << fg->name() << "\n"
            << "src " << fg->src()->name() << " dst " << fg->dst()->name()
            << "\n";
  for (int c = 0; c < fg->src()->colours(); ++c)
    std::cout << "colour " << c << " -> " << fg->colour_map(c) << "\n";

  if (check) return finish(validate_morphism(fg, fixtures::check_caps(caps_fx)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"law checker for tabulated multicategory and biprop fixtures"};
  app.require_subcommand(1);
  app.add_option("--format", g_format, "report format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::string file, file_g, side, perm, registry_file;
  std::vector<std::string> dump_hom, hom;
  bool check = false;
  int word_len = 2;

  auto* c_validate = app.add_subcommand(
      "validate-multicat", "run the multicategory law suite on a fixture");
  c_validate->add_option("file", file, "fixture path")->required();

  auto* c_env = app.add_subcommand(
      "envelope", "build the enveloping biprop of a multicategory fixture");
  c_env->add_option("file", file, "fixture path")->required();
  c_env->add_flag("--check", check, "run the full biprop law suite");
  c_env->add_option("--dump-hom", dump_hom,
                    "two words (comma-separated colours, '-' for empty): "
                    "print the hom with its summand layout")
      ->expected(2);

  auto* c_bip = app.add_subcommand(
      "check-biprop", "run the word-indexed composition laws on a reference "
                      "biprop fixture");
  c_bip->add_option("file", file, "fixture path")->required();

  auto* c_act = app.add_subcommand(
      "act", "apply a permutation action to an envelope hom");
  c_act->add_option("file", file, "multicategory fixture path")->required();
  c_act->add_option("--hom", hom, "source and target word")
      ->expected(2)
      ->required();
  c_act->add_option("--side", side, "l (permute the source word) or r")
      ->required();
  c_act->add_option("--perm", perm, "permutation image, comma-separated")
      ->required();

  auto* c_cat = app.add_subcommand(
      "catprop-demo", "the functor-category biprop over a small registry");
  c_cat->add_flag("--check", check, "run the law suite");
  c_cat->add_option("--registry", registry_file,
                    "registry fixture (default: terminal plus the discrete "
                    "two-object category)");
  c_cat->add_option("--word-len", word_len, "word bound for the default registry")
      ->capture_default_str();

  auto* c_comp = app.add_subcommand(
      "compose-morphisms",
      "compose the envelope images of two multifunctor fixtures");
  c_comp->add_option("first", file, "multifunctor fixture path")->required();
  c_comp->add_option("second", file_g, "multifunctor fixture path")->required();
  c_comp->add_flag("--check", check, "validate the composite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_validate) return cmd_validate_multicat(file);
    if (*c_env) return cmd_envelope(file, check, dump_hom);
    if (*c_bip) return cmd_check_biprop(file);
    if (*c_act) return cmd_act(file, hom, side, perm);
    if (*c_cat) return cmd_catprop_demo(check, registry_file, word_len);
    if (*c_comp) return cmd_compose_morphisms(file, file_g, check);
  } catch (const CapError& e) {
    std::cerr << "cap error: " << e.what() << "\n";
    return 3;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
