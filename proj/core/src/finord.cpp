#include "bip/finord.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bip::finord {

namespace {

[[noreturn]] void bad(const std::string& what) { throw SchemaError(what); }

}  // namespace

FinMap::FinMap(int dom, int cod, std::vector<int> image)
    : dom_(dom), cod_(cod), image_(std::move(image)) {
  if (dom_ < 0 || cod_ < 0) bad("FinMap: negative cardinality");
  if (static_cast<int>(image_.size()) != dom_)
    bad("FinMap: image length " + std::to_string(image_.size()) +
        " does not match domain " + std::to_string(dom_));
  for (int v : image_)
    if (v < 0 || v >= cod_)
      bad("FinMap: image value " + std::to_string(v) + " outside codomain " +
          std::to_string(cod_));
}

FinMap FinMap::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return FinMap(n, n, std::move(im));
}

FinMap FinMap::to_point(int n) { return FinMap(n, 1, std::vector<int>(n, 0)); }

FinMap FinMap::from_rank(int dom, int cod, long long rank) {
  if (rank < 0 || rank >= map_count(dom, cod))
    bad("FinMap::from_rank: rank out of range");
  std::vector<int> im(dom);
  for (int i = 0; i < dom; ++i) {
    im[i] = static_cast<int>(rank % cod);
    rank /= cod;
  }
  return FinMap(dom, cod, std::move(im));
}

int FinMap::operator()(int i) const {
  if (i < 0 || i >= dom_) bad("FinMap: argument out of domain");
  return image_[i];
}

long long FinMap::rank() const {
  long long r = 0;
  for (int i = dom_ - 1; i >= 0; --i) r = r * cod_ + image_[i];
  return r;
}

bool FinMap::is_bijection() const {
  if (dom_ != cod_) return false;
  std::vector<char> seen(cod_, 0);
  for (int v : image_) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool FinMap::is_order_preserving() const {
  for (int i = 1; i < dom_; ++i)
    if (image_[i - 1] > image_[i]) return false;
  return true;
}

FinMap FinMap::inverse() const {
  if (!is_bijection()) bad("FinMap::inverse: not a bijection");
  std::vector<int> im(dom_);
  for (int i = 0; i < dom_; ++i) im[image_[i]] = i;
  return FinMap(cod_, dom_, std::move(im));
}

FinMap compose(const FinMap& f, const FinMap& g) {
  if (f.cod() != g.dom())
    bad("compose: codomain " + std::to_string(f.cod()) +
        " does not match domain " + std::to_string(g.dom()));
  std::vector<int> im(f.dom());
  for (int i = 0; i < f.dom(); ++i) im[i] = g(f(i));
  return FinMap(f.dom(), g.cod(), std::move(im));
}

long long map_count(int dom, int cod) {
  if (dom < 0 || cod < 0) bad("map_count: negative cardinality");
  if (dom == 0) return 1;
  if (cod == 0) return 0;
  long long n = 1;
  for (int i = 0; i < dom; ++i) n *= cod;
  return n;
}

int lex_index(int size_i, int size_j, int i, int j) {
  if (i < 0 || i >= size_i || j < 0 || j >= size_j)
    bad("lex_index: coordinates out of range");
  return j * size_i + i;
}

std::pair<int, int> lex_unindex(int size_i, int size_j, int rank) {
  if (size_i <= 0 || rank < 0 || rank >= size_i * size_j)
    bad("lex_unindex: rank out of range");
  return {rank % size_i, rank / size_i};
}

IndexedUnion IndexedUnion::from_sizes(std::vector<int> sizes) {
  IndexedUnion u;
  u.offsets.reserve(sizes.size());
  int acc = 0;
  for (int s : sizes) {
    if (s < 0) bad("IndexedUnion: negative block size");
    u.offsets.push_back(acc);
    acc += s;
  }
  u.sizes = std::move(sizes);
  u.total = acc;
  return u;
}

int IndexedUnion::position(int block, int s) const {
  if (block < 0 || block >= blocks() || s < 0 || s >= sizes[block])
    bad("IndexedUnion::position: out of range");
  return offsets[block] + s;
}

std::pair<int, int> IndexedUnion::block_of(int pos) const {
  if (pos < 0 || pos >= total) bad("IndexedUnion::block_of: out of range");
  // last block whose offset is <= pos; empty blocks tie with their successor,
  // so the last of a tie is the inhabited one
  int b = static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), pos) -
                           offsets.begin()) - 1;
  return {b, pos - offsets[b]};
}

FinMap IndexedUnion::projection() const {
  std::vector<int> im(total);
  for (int b = 0; b < blocks(); ++b)
    for (int s = 0; s < sizes[b]; ++s) im[offsets[b] + s] = b;
  return FinMap(total, blocks(), std::move(im));
}

FiberDecomposition decompose(const FinMap& f) {
  FiberDecomposition d;
  d.map = f;
  d.fibers.assign(f.cod(), {});
  for (int i = 0; i < f.dom(); ++i) d.fibers[f(i)].push_back(i);
  std::vector<int> graph(f.dom());
  int pos = 0;
  for (const auto& fib : d.fibers)
    for (int i : fib) graph[i] = pos++;
  d.graph = FinMap(f.dom(), f.dom(), std::move(graph));
  return d;
}

FinMap graph_bijection(const FinMap& f) { return decompose(f).graph; }

RestrictedMap restrict_to_fiber(const FinMap& phi, const FinMap& h, int l) {
  if (phi.cod() != h.dom()) bad("restrict: maps do not compose");
  if (l < 0 || l >= h.cod()) bad("restrict: fibre index out of range");
  RestrictedMap r;
  for (int k = 0; k < h.dom(); ++k)
    if (h(k) == l) r.cod_elems.push_back(k);
  std::vector<int> cod_pos(h.dom(), -1);
  for (int p = 0; p < static_cast<int>(r.cod_elems.size()); ++p)
    cod_pos[r.cod_elems[p]] = p;
  std::vector<int> im;
  for (int i = 0; i < phi.dom(); ++i)
    if (h(phi(i)) == l) {
      r.dom_elems.push_back(i);
      im.push_back(cod_pos[phi(i)]);
    }
  r.map = FinMap(static_cast<int>(r.dom_elems.size()),
                 static_cast<int>(r.cod_elems.size()), std::move(im));
  return r;
}

RestrictedMap restrict(const FinMap& phi, const FinMap& f, const FinMap& h,
                       int l) {
  if (compose(phi, h) != f)
    bad("restrict: configuration does not commute (f != phi.h)");
  return restrict_to_fiber(phi, h, l);
}

FinMap merge_family(const std::vector<FinMap>& family, const FinMap& f,
                    const FinMap& g, const IndexedUnion& S,
                    const IndexedUnion& Q) {
  if (f.cod() != g.cod()) bad("merge_family: cospan legs disagree");
  const int K = f.cod();
  if (static_cast<int>(family.size()) != K)
    bad("merge_family: family size does not match index set");
  if (S.blocks() != f.dom() || Q.blocks() != g.dom())
    bad("merge_family: block count does not match index set");

  auto fd = decompose(f);
  auto gd = decompose(g);
  std::vector<int> im(S.total, -1);
  for (int k = 0; k < K; ++k) {
    std::vector<int> dom_pos, cod_pos;
    for (int i : fd.fibers[k])
      for (int s = 0; s < S.sizes[i]; ++s) dom_pos.push_back(S.position(i, s));
    for (int j : gd.fibers[k])
      for (int t = 0; t < Q.sizes[j]; ++t) cod_pos.push_back(Q.position(j, t));
    const FinMap& phk = family[k];
    if (phk.dom() != static_cast<int>(dom_pos.size()) ||
        phk.cod() != static_cast<int>(cod_pos.size()))
      bad("merge_family: component " + std::to_string(k) +
          " has the wrong span");
    for (int a = 0; a < phk.dom(); ++a) im[dom_pos[a]] = cod_pos[phk(a)];
  }
  return FinMap(S.total, Q.total, std::move(im));
}

std::vector<FinMap> split(const FinMap& phi, const FinMap& f, const FinMap& g,
                          const IndexedUnion& S, const IndexedUnion& Q) {
  if (f.cod() != g.cod()) bad("split: cospan legs disagree");
  if (S.blocks() != f.dom() || Q.blocks() != g.dom())
    bad("split: block count does not match index set");
  if (phi.dom() != S.total || phi.cod() != Q.total)
    bad("split: map does not match the unions");

  // the square must commute: the fibre over k maps into the fibre over k
  for (int p = 0; p < S.total; ++p) {
    int i = S.block_of(p).first;
    int j = Q.block_of(phi(p)).first;
    if (f(i) != g(j))
      bad("split: map crosses fibres at position " + std::to_string(p));
  }

  auto fd = decompose(f);
  auto gd = decompose(g);
  std::vector<FinMap> family;
  family.reserve(f.cod());
  for (int k = 0; k < f.cod(); ++k) {
    std::vector<int> dom_pos, cod_pos;
    for (int i : fd.fibers[k])
      for (int s = 0; s < S.sizes[i]; ++s) dom_pos.push_back(S.position(i, s));
    std::vector<int> cod_local(Q.total, -1);
    for (int j : gd.fibers[k])
      for (int t = 0; t < Q.sizes[j]; ++t) {
        cod_local[Q.position(j, t)] = static_cast<int>(cod_pos.size());
        cod_pos.push_back(Q.position(j, t));
      }
    std::vector<int> im(dom_pos.size());
    for (size_t a = 0; a < dom_pos.size(); ++a) im[a] = cod_local[phi(dom_pos[a])];
    family.emplace_back(static_cast<int>(dom_pos.size()),
                        static_cast<int>(cod_pos.size()), std::move(im));
  }
  return family;
}

bool check_graph_functoriality(const FinMap& f, const FinMap& h) {
  if (f.cod() != h.dom()) bad("check_graph_functoriality: maps do not compose");
  const int I = f.dom();
  const FinMap fh = compose(f, h);
  const auto fhd = decompose(fh);
  const auto fd = decompose(f);
  const auto hd = decompose(h);

  // top-right: sigma(f.h), then per-fibre graphs of the restrictions of f
  IndexedUnion fh_blocks = IndexedUnion::from_sizes([&] {
    std::vector<int> sz;
    for (const auto& fib : fhd.fibers) sz.push_back(static_cast<int>(fib.size()));
    return sz;
  }());
  std::vector<FinMap> sigma_restr;
  for (int l = 0; l < h.cod(); ++l)
    sigma_restr.push_back(graph_bijection(restrict_to_fiber(f, h, l).map));
  std::vector<int> top(I);
  for (int i = 0; i < I; ++i) {
    auto [l, a] = fh_blocks.block_of(fhd.graph(i));
    top[i] = fh_blocks.position(l, sigma_restr[l](a));
  }

  // bottom-left: sigma(f), then permute the fibres of f along sigma(h)
  IndexedUnion f_blocks = IndexedUnion::from_sizes([&] {
    std::vector<int> sz;
    for (const auto& fib : fd.fibers) sz.push_back(static_cast<int>(fib.size()));
    return sz;
  }());
  // offset of block k once the blocks are rearranged so that block k sits at
  // rank sigma(h)(k)
  std::vector<int> order(h.dom());
  for (int k = 0; k < h.dom(); ++k) order[hd.graph(k)] = k;
  std::vector<int> new_offset(h.dom(), 0);
  int acc = 0;
  for (int rank = 0; rank < h.dom(); ++rank) {
    new_offset[order[rank]] = acc;
    acc += f_blocks.sizes[order[rank]];
  }
  std::vector<int> bottom(I);
  for (int i = 0; i < I; ++i) {
    auto [k, c] = f_blocks.block_of(fd.graph(i));
    bottom[i] = new_offset[k] + c;
  }

  return top == bottom;
}

}  // namespace bip::finord
