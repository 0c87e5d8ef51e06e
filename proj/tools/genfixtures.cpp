// Regenerates the json fixture corpus under fixtures/.
//
// Honest fixtures are serialized straight from the library's own
// constructions, so they stay in sync with the code by construction.  The
// corrupt ones are honest serializations with one surgical edit each,
// applied to the parsed json so the damage is visible in the diff: a flipped
// associativity entry, and a transposed value table.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "bip/biprop.hpp"
#include "bip/error.hpp"
#include "bip/fincat.hpp"
#include "bip/fixtures.hpp"
#include "bip/multicat.hpp"

namespace {

using json = nlohmann::json;
using namespace bip;

// Includes the one-colour two-point finite-set multicategory into the
// two-colour one as the second colour.  Point counts agree slot by slot, so
// the function ranks carry over unchanged and the inclusion is strict.
class FsInclude final : public multicat::StrictMultifunctorBase {
 public:
  FsInclude(multicat::McPtr src, multicat::McPtr dst)
      : src_(std::move(src)), dst_(std::move(dst)) {}
  std::string name() const override { return "fs-include"; }
  multicat::McPtr src() const override { return src_; }
  multicat::McPtr dst() const override { return dst_; }
  int colour_map(int) const override { return 1; }
  int obj(const multicat::Word&, int, int x) const override { return x; }
  int mor(const multicat::Word&, int, int m) const override { return m; }

 private:
  multicat::McPtr src_, dst_;
};

void write_file(const std::filesystem::path& dir, const std::string& name,
                const std::string& text) {
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  std::cout << path.string() << " (" << text.size() << " bytes)\n";
}

std::string redump(const json& j) { return j.dump(2) + "\n"; }

// Flips the associativity component at the identity substitution pair, the
// smallest edit that leaves every component a well-formed isomorphism but
// breaks the pentagon.
std::string corrupt_nu(const std::string& honest) {
  json j = json::parse(honest);
  bool hit = false;
  for (auto& e : j.at("assoc")) {
    if (e.at("f") == json::array({0}) && e.at("f_cod") == 1 &&
        e.at("g") == json::array({0}) && e.at("g_cod") == 1 &&
        e.at("as") == json::array({0}) && e.at("bs") == json::array({0}) &&
        e.at("cs") == json::array({0}) && e.at("target") == 0) {
      e.at("table")[0] = 1 - e.at("table")[0].get<int>();
      hit = true;
    }
  }
  if (!hit) throw Error("corrupt-nu: target entry not found");
  return redump(j);
}

// Transposes two values in one hom table of the inclusion.  The unit object
// keeps its image, so the failure shows up in the substitution comparison
// rather than at the units.
std::string corrupt_multifunctor(const std::string& honest) {
  json j = json::parse(honest);
  j["name"] = "corrupt-multifunctor";
  bool hit = false;
  for (auto& e : j.at("homs")) {
    if (e.at("word") == json::array({0}) && e.at("target") == 0) {
      for (const char* key : {"objects", "morphisms"})
        std::swap(e.at(key)[0], e.at(key)[1]);
      hit = true;
    }
  }
  if (!hit) throw Error("corrupt-multifunctor: target entry not found");
  return redump(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regenerate the fixture corpus"};
  std::string out = "fixtures";
  app.add_option("--out", out, "output directory");
  CLI11_PARSE(app, argc, argv);

  try {
    const std::filesystem::path dir(out);
    std::filesystem::create_directories(dir);

    write_file(dir, "terminal.json",
               fixtures::serialize_multicat(multicat::terminal_multicat(),
                                            "terminal", {}, true));

    const fixtures::FixtureCaps fs_caps{2, 2, 16};
    write_file(dir, "finite-set.json",
               fixtures::serialize_multicat(
                   multicat::finite_set_multicat({2}, 2), "finite-set",
                   fs_caps, true));
    write_file(dir, "fs-small.json",
               fixtures::serialize_multicat(
                   multicat::finite_set_multicat({1, 2}, 2), "fs-small",
                   fs_caps, true));

    write_file(dir, "corrupt-nu.json",
               corrupt_nu(fixtures::serialize_multicat(
                   multicat::sign_multicat(2), "corrupt-nu", {2, 2, 4},
                   false)));

    write_file(dir, "corrupt-assoc.json",
               fixtures::serialize_reference_biprop(
                   biprop::sign_reference_data(2, 1), "corrupt-assoc",
                   {2, 2, 4}));

    // caps stripped: this one exercises the defaulting path in the loader
    {
      json j = json::parse(fixtures::serialize_registry(
          {fincat::share(fincat::FinCat::terminal()),
           fincat::share(fincat::FinCat::discrete(2))},
          2, "registry-basic", {}));
      j.erase("caps");
      write_file(dir, "registry-basic.json", redump(j));
    }

    const std::string include_json = fixtures::serialize_multifunctor(
        std::make_shared<const FsInclude>(
            multicat::finite_set_multicat({2}, 2),
            multicat::finite_set_multicat({1, 2}, 2)),
        "mf-include", fs_caps);
    write_file(dir, "mf-include.json", include_json);

    write_file(dir, "mf-swap.json",
               fixtures::serialize_multifunctor(
                   multicat::fs_swap_conjugation(
                       multicat::finite_set_multicat({2}, 2)),
                   "mf-swap", fs_caps));

    write_file(dir, "corrupt-multifunctor.json",
               corrupt_multifunctor(include_json));
  } catch (const std::exception& e) {
    std::cerr << "genfixtures: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
