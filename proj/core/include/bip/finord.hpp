#pragma once

#include <utility>
#include <vector>

#include "bip/error.hpp"

namespace bip::finord {

// Everything here lives in the skeletal category of finite totally ordered
// sets: objects are {0, ..., n-1}, arrows are arbitrary maps.  The product
// {0..i-1} x {0..j-1} is ordered with the *second* coordinate as the primary
// key, so rank(i, j) = j*|I| + i and the first coordinate varies fastest.
// Every tuple/tag codec in the rest of the library follows the same rule.

struct FinOrd {
  int n = 0;
  friend bool operator==(const FinOrd&, const FinOrd&) = default;
};

// Arrow dom -> cod stored as its image sequence.
class FinMap {
 public:
  FinMap() = default;
  FinMap(int dom, int cod, std::vector<int> image);

  static FinMap identity(int n);
  // The unique map n -> 1.
  static FinMap to_point(int n);
  // Decode the map with the given rank in the canonical enumeration of all
  // maps dom -> cod (image value at position 0 is the least significant digit).
  static FinMap from_rank(int dom, int cod, long long rank);

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  int operator()(int i) const;
  const std::vector<int>& image() const { return image_; }

  long long rank() const;
  bool is_bijection() const;
  bool is_order_preserving() const;
  FinMap inverse() const;  // bijections only

  friend bool operator==(const FinMap&, const FinMap&) = default;

 private:
  int dom_ = 0;
  int cod_ = 0;
  std::vector<int> image_;
};

// Diagrammatic composite: (f . g)(i) = g(f(i)).
FinMap compose(const FinMap& f, const FinMap& g);

// Number of maps dom -> cod (cod^dom, with the empty map when dom = 0).
long long map_count(int dom, int cod);

// Rank of (i, j) in {0..size_i-1} x {0..size_j-1}: j*size_i + i.
int lex_index(int size_i, int size_j, int i, int j);
std::pair<int, int> lex_unindex(int size_i, int size_j, int rank);

// A family of finite sets (S_i) over an index set, realised as the ordered
// disjoint union with block b occupying positions [offset(b), offset(b)+size).
struct IndexedUnion {
  std::vector<int> sizes;
  std::vector<int> offsets;
  int total = 0;

  static IndexedUnion from_sizes(std::vector<int> sizes);
  int blocks() const { return static_cast<int>(sizes.size()); }
  int position(int block, int s) const;
  std::pair<int, int> block_of(int pos) const;
  // Map total -> blocks sending each element to the block containing it.
  FinMap projection() const;
};

// Fibre data of f : I -> L together with the graph bijection sigma(f): the
// permutation of I induced by ranking the pairs (i, f(i)) with f(i) as the
// primary key; equivalently, the position of i in the concatenation of the
// fibres f^-1(0), f^-1(1), ... (each fibre kept increasing).
struct FiberDecomposition {
  FinMap map;
  std::vector<std::vector<int>> fibers;
  FinMap graph;  // sigma(f), a bijection I -> I
};

FiberDecomposition decompose(const FinMap& f);
FinMap graph_bijection(const FinMap& f);

// The restriction of phi : I -> K to the fibre of h : K -> L over l, carried
// to skeletal form.  dom_elems / cod_elems record which elements of I and K
// the skeletal positions stand for (both kept in increasing order).
struct RestrictedMap {
  FinMap map;  // |phi^-1 h^-1 l| -> |h^-1 l|
  std::vector<int> dom_elems;
  std::vector<int> cod_elems;
};

RestrictedMap restrict_to_fiber(const FinMap& phi, const FinMap& h, int l);
// Same, but the composite f = phi . h is supplied and verified.
RestrictedMap restrict(const FinMap& phi, const FinMap& f, const FinMap& h,
                       int l);

// Merge/split calculus for the square
//
//   S --phi--> Q
//   |          |
//  pr          pr        with f : I -> K, g : J -> K.
//   v          v
//   I ---f---> K <--g--- J
//
// A family (phi_k)_{k in K}, where phi_k maps the union of the S_i with
// f(i) = k to the union of the Q_j with g(j) = k (blocks in increasing index
// order), corresponds to the unique phi : S -> Q compatible with the
// projections.  merge_family and split realise the two directions; split
// rejects a phi that crosses fibres.
FinMap merge_family(const std::vector<FinMap>& family, const FinMap& f,
                    const FinMap& g, const IndexedUnion& S,
                    const IndexedUnion& Q);
std::vector<FinMap> split(const FinMap& phi, const FinMap& f, const FinMap& g,
                          const IndexedUnion& S, const IndexedUnion& Q);

// Functoriality of the graph bijection: for composable f : I -> K and
// h : K -> L, sigma(f.h) followed by the blockwise graphs of the restrictions
// of f over the fibres of h equals sigma(f) followed by the block permutation
// of the fibres of f along sigma(h).  Returns true when the two sides agree.
bool check_graph_functoriality(const FinMap& f, const FinMap& h);

}  // namespace bip::finord
