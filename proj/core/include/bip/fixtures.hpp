#pragma once

#include <string>
#include <vector>

#include "bip/biprop.hpp"
#include "bip/caps.hpp"
#include "bip/fincat.hpp"
#include "bip/multicat.hpp"

// On-disk fixtures: JSON documents that tabulate desk-scale instances of the
// structures in this library.  Four kinds:
//
//   multicat         a symmetric weak multicategory given by tables
//   multifunctor     a map of multicategories, embedding src and dst payloads
//   biprop-reference a word-indexed composition structure given by tables
//   registry         a list of categories for the category-valued example
//
// Every fixture carries a caps block gating what it may declare: no word
// longer than max_word_len, no map touching an index set larger than
// max_index, no declared category with more than max_hom objects.  The block
// is the only part of the schema with defaults (3, 3, 4); everything else is
// explicit.  Exceeding the caps is a CapError, every other malformation a
// SchemaError.  docs/format.md documents the layouts; all flat tables rank
// their first argument fastest, like every codec in the library.
namespace bip::fixtures {

struct FixtureCaps {
  int max_word_len = 3;
  int max_index = 3;
  int max_hom = 4;
};

// The caps a checker derives from a fixture's declaration.
CheckCaps check_caps(const FixtureCaps& caps);

enum class Kind { multicat, multifunctor, biprop_reference, registry };

std::string kind_name(Kind k);

struct Fixture {
  Kind kind = Kind::multicat;
  std::string name;
  FixtureCaps caps;

  // exactly one of these is populated, per kind
  multicat::McPtr mc;
  multicat::MfPtr mf;
  biprop::BpPtr reference;
  std::vector<fincat::CatPtr> registry;
  int registry_word_len = 0;
};

// Parses and validates; eager about everything (table completeness, index
// ranges, category laws).  Multicategory payloads declared "strict" are
// loaded through the strictifying wrapper, so strictness is a schema-level
// promise: tables that break it fail the load, not the later checks.
Fixture parse_fixture(const std::string& text);

// parse_fixture on the file's contents; tries PATH then PATH.json.
Fixture load_fixture(const std::string& path);

// Tabulates a multicategory within caps.  With as_strict the payload declares
// "strict": true and carries no iso tables; otherwise the structural
// components are tabulated too (identities, for a strict source).
std::string serialize_multicat(const multicat::McPtr& mc,
                               const std::string& name,
                               const FixtureCaps& caps, bool as_strict);

// Embeds tabulated src and dst payloads.  Only strict multifunctors
// serialize: comparisons are never stored, the loader resynthesizes them as
// identities at the recomputed endpoint.
std::string serialize_multifunctor(const multicat::MfPtr& mf,
                                   const std::string& name,
                                   const FixtureCaps& caps);

std::string serialize_reference_biprop(const biprop::TabulatedBiprop::Data& d,
                                       const std::string& name,
                                       const FixtureCaps& caps);

std::string serialize_registry(const std::vector<fincat::CatPtr>& cats,
                               int max_word_len, const std::string& name,
                               const FixtureCaps& caps);

}  // namespace bip::fixtures
