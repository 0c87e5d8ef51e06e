#pragma once

#include <cstdint>

namespace bip {

// Enumeration bounds that keep exhaustive checks at desk scale.  Every checker
// walks only the configurations admitted here; asking a structure for data
// beyond its caps is an error rather than silent truncation.
struct Caps {
  int max_word_len = 3;          // longest colour word (tensor arity)
  int max_index = 3;             // largest indexing set |I| in cospans / maps
  long long max_hom_objects = 4; // largest hom category that may be materialised

  bool word_ok(int len) const { return len >= 0 && len <= max_word_len; }
  bool index_ok(int n) const { return n >= 0 && n <= max_index; }
};

// Bounds for a single checker run.  `max_index_multi` separately restricts the
// axioms quantified over several simultaneous index maps (the cospan cubes),
// whose configuration count grows much faster than the single-map ones.
struct CheckCaps {
  int max_word_len = 2;
  int max_index = 2;
  int max_index_multi = 2;
};

}  // namespace bip
