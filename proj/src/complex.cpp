#include "srcx/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace srcx {

static void check_label(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty vertex label");
  for (char c : s) {
    // commas stay legal: the cartesian products label vertices "(a,b)"
    if (c == '{' || c == '}' || c == '*' ||
        std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad character in vertex label: " + s);
  }
  if (s.find("->") != std::string::npos)
    throw std::invalid_argument("bad character in vertex label: " + s);
}

VertexSet::VertexSet() : d_(std::make_shared<Data>()) {}

VertexSet::VertexSet(std::vector<std::string> labels) {
  if (labels.size() > kMaxVertices)
    throw std::invalid_argument("vertex set exceeds 24 labels");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    check_label(l);
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate vertex label: " + l);
  }
  auto d = std::make_shared<Data>();
  d->labels = std::move(labels);
  d->sorted.resize(d->labels.size());
  std::iota(d->sorted.begin(), d->sorted.end(), 0);
  std::sort(d->sorted.begin(), d->sorted.end(),
            [&](int a, int b) { return d->labels[a] < d->labels[b]; });
  d_ = std::move(d);
}

int VertexSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < d_->labels.size(); ++i)
    if (d_->labels[i] == label) return static_cast<int>(i);
  return -1;
}

bool VertexSet::same_sequence(const VertexSet& o) const {
  return d_ == o.d_ || d_->labels == o.d_->labels;
}

bool VertexSet::operator==(const VertexSet& o) const {
  if (d_ == o.d_) return true;
  if (size() != o.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (d_->labels[d_->sorted[i]] != o.d_->labels[o.d_->sorted[i]]) return false;
  return true;
}

std::vector<std::string> VertexSet::mask_labels(Mask m) const {
  std::vector<std::string> out;
  for (int i : d_->sorted)
    if (m & bit(i)) out.push_back(d_->labels[i]);
  return out;
}

bool mask_less(const VertexSet& vs, Mask a, Mask b) {
  return vs.mask_labels(a) < vs.mask_labels(b);
}

Subset::Subset(VertexSet over, Mask bits) : over_(std::move(over)), bits_(bits) {
  if (bits_ & ~over_.full_mask())
    throw std::invalid_argument("subset bits outside vertex set");
}

Subset::Subset(const VertexSet& over, const std::vector<std::string>& members)
    : over_(over), bits_(0) {
  for (const auto& m : members) {
    int i = over_.index_of(m);
    if (i < 0) throw std::invalid_argument("unknown label in subset: " + m);
    bits_ |= bit(i);
  }
}

bool Subset::has(std::string_view label) const {
  int i = over_.index_of(label);
  return i >= 0 && (bits_ & bit(i));
}

static void require_same_universe(const VertexSet& a, const VertexSet& b) {
  if (!a.same_sequence(b))
    throw std::invalid_argument("subsets over different vertex sets");
}

bool Subset::operator==(const Subset& o) const {
  require_same_universe(over_, o.over_);
  return bits_ == o.bits_;
}

bool Subset::subset_of(const Subset& o) const {
  require_same_universe(over_, o.over_);
  return contains(o.bits_, bits_);
}

namespace detail {

std::vector<Mask> maximal_antichain(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    bool dominated = false;
    for (Mask t : sets)
      if (t != s && contains(t, s)) { dominated = true; break; }
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<Mask> minimal_antichain(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    bool dominates = false;
    for (Mask t : sets)
      if (t != s && contains(s, t)) { dominates = true; break; }
    if (!dominates) out.push_back(s);
  }
  return out;
}

std::vector<Mask> minimal_transversals(const std::vector<Mask>& family, int n) {
  (void)n;
  std::vector<Mask> trans = {0};
  for (Mask g : family) {
    std::vector<Mask> next;
    for (Mask t : trans) {
      if (t & g) { next.push_back(t); continue; }
      Mask rest = g;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        next.push_back(t | bit(v));
      }
    }
    trans = minimal_antichain(std::move(next));
  }
  return trans;
}

void canonical_sort(const VertexSet& vs, std::vector<Mask>& masks) {
  std::sort(masks.begin(), masks.end(),
            [&](Mask a, Mask b) { return mask_less(vs, a, b); });
}

}  // namespace detail

SimplicialComplex SimplicialComplex::from_facets(VertexSet vertices,
                                                 std::vector<Mask> sets) {
  Mask full = vertices.full_mask();
  for (Mask s : sets)
    if (s & ~full) throw std::invalid_argument("facet outside vertex set");
  SimplicialComplex x;
  x.vertices_ = std::move(vertices);
  x.facets_ = detail::maximal_antichain(std::move(sets));
  detail::canonical_sort(x.vertices_, x.facets_);
  return x;
}

SimplicialComplex SimplicialComplex::from_facets(const VertexSet& vertices,
                                                 const std::vector<Subset>& sets) {
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    if (!s.over().same_sequence(vertices))
      throw std::invalid_argument("facet over a different vertex set");
    masks.push_back(s.bits());
  }
  return from_facets(vertices, std::move(masks));
}

SimplicialComplex SimplicialComplex::from_cofacets(VertexSet vertices,
                                                   std::vector<Mask> cofacets) {
  // facets are the complements of the minimal transversals of the
  // minimal-non-face family
  Mask full = vertices.full_mask();
  auto mins = detail::minimal_antichain(std::move(cofacets));
  auto trans = detail::minimal_transversals(mins, static_cast<int>(vertices.size()));
  std::vector<Mask> facets;
  facets.reserve(trans.size());
  for (Mask t : trans) facets.push_back(full & ~t);
  return from_facets(std::move(vertices), std::move(facets));
}

std::vector<Subset> SimplicialComplex::facets() const {
  std::vector<Subset> out;
  out.reserve(facets_.size());
  for (Mask m : facets_) out.emplace_back(vertices_, m);
  return out;
}

bool SimplicialComplex::is_face(Mask s) const {
  for (Mask f : facets_)
    if (contains(f, s)) return true;
  return false;
}

bool SimplicialComplex::is_face(const Subset& s) const {
  if (!s.over().same_sequence(vertices_))
    throw std::invalid_argument("subset over a different vertex set");
  return is_face(s.bits());
}

std::vector<Mask> SimplicialComplex::face_masks() const {
  if (vertices_.size() > 20)
    throw std::invalid_argument("face enumeration limited to 20 vertices");
  std::vector<Mask> out;
  for (Mask f : facets_) {
    // all subsets of f
    Mask s = f;
    while (true) {
      out.push_back(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  detail::canonical_sort(vertices_, out);
  return out;
}

std::vector<Subset> SimplicialComplex::faces() const {
  std::vector<Subset> out;
  for (Mask m : face_masks()) out.emplace_back(vertices_, m);
  return out;
}

std::vector<Mask> SimplicialComplex::cofacet_masks() const {
  // brute-force minimal-non-face search; fine at <= 24 vertices
  std::vector<Mask> out;
  Mask full = vertices_.full_mask();
  for (Mask s = 0;; ++s) {
    if (!is_face(s)) {
      bool minimal = true;
      Mask rest = s;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (!is_face(s & ~bit(v))) { minimal = false; break; }
      }
      if (minimal) out.push_back(s);
    }
    if (s == full) break;
  }
  detail::canonical_sort(vertices_, out);
  return out;
}

std::vector<Subset> SimplicialComplex::cofacets() const {
  std::vector<Subset> out;
  for (Mask m : cofacet_masks()) out.emplace_back(vertices_, m);
  return out;
}

Subset SimplicialComplex::support() const {
  Mask m = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (is_face(bit(static_cast<int>(i)))) m |= bit(static_cast<int>(i));
  return Subset(vertices_, m);
}

Subset SimplicialComplex::cosupport() const {
  Mask full = vertices_.full_mask();
  Mask m = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (is_face(full & ~bit(static_cast<int>(i)))) m |= bit(static_cast<int>(i));
  return Subset(vertices_, m);
}

std::optional<int> SimplicialComplex::dimension() const {
  if (is_void()) return std::nullopt;
  int d = -1;
  for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
  return d;
}

bool SimplicialComplex::operator==(const SimplicialComplex& o) const {
  if (!(vertices_ == o.vertices_)) return false;
  if (facets_.size() != o.facets_.size()) return false;
  if (vertices_.same_sequence(o.vertices_)) return facets_ == o.facets_;
  // same label set in different orders: compare as label sets
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (vertices_.mask_labels(facets_[i]) != o.vertices_.mask_labels(o.facets_[i]))
      return false;
  return true;
}

SimplicialComplex simplex(const VertexSet& a) {
  return SimplicialComplex::from_facets(a, std::vector<Mask>{a.full_mask()});
}

SimplicialComplex boundary(const VertexSet& a) {
  if (a.size() == 0)
    return SimplicialComplex::from_facets(a, std::vector<Mask>{});
  std::vector<Mask> facets;
  Mask full = a.full_mask();
  for (std::size_t i = 0; i < a.size(); ++i)
    facets.push_back(full & ~bit(static_cast<int>(i)));
  return SimplicialComplex::from_facets(a, std::move(facets));
}

SimplicialComplex restriction(const SimplicialComplex& x, const Subset& e) {
  if (!e.over().same_sequence(x.vertices()))
    throw std::invalid_argument("restriction set over a different vertex set");
  VertexSet sub(e.members());
  std::vector<Mask> facets;
  for (Mask f : x.facet_masks()) {
    Mask fe = f & e.bits();
    Mask m = 0;
    for (std::size_t i = 0; i < sub.size(); ++i)
      if (fe & bit(x.vertices().index_of(sub.label(static_cast<int>(i)))))
        m |= bit(static_cast<int>(i));
    facets.push_back(m);
  }
  return SimplicialComplex::from_facets(std::move(sub), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& x, const Subset& e) {
  if (!e.over().same_sequence(x.vertices()))
    throw std::invalid_argument("link set over a different vertex set");
  std::vector<std::string> rest_labels;
  for (const auto& l : x.vertices().labels())
    if (!e.has(l)) rest_labels.push_back(l);
  VertexSet rest(rest_labels);
  std::vector<Mask> facets;
  for (Mask f : x.facet_masks()) {
    if (!contains(f, e.bits())) continue;
    Mask fe = f & ~e.bits();
    Mask m = 0;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (fe & bit(x.vertices().index_of(rest.label(static_cast<int>(i)))))
        m |= bit(static_cast<int>(i));
    facets.push_back(m);
  }
  return SimplicialComplex::from_facets(std::move(rest), std::move(facets));
}

VertexSet union_vertex_set(const VertexSet& a, const VertexSet& b) {
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) {
    if (a.index_of(l) >= 0)
      throw std::invalid_argument("vertex sets not disjoint: " + l);
    labels.push_back(l);
  }
  return VertexSet(std::move(labels));
}

SimplicialComplex rehouse(const SimplicialComplex& x, const VertexSet& target) {
  std::vector<Mask> facets;
  for (Mask f : x.facet_masks()) {
    Mask m = 0;
    Mask rest = f;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int j = target.index_of(x.vertices().label(v));
      if (j < 0) throw std::invalid_argument("target vertex set misses a label");
      m |= bit(j);
    }
    facets.push_back(m);
  }
  return SimplicialComplex::from_facets(target, std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
  VertexSet u = union_vertex_set(x.vertices(), y.vertices());
  auto xr = rehouse(x, u);
  auto yr = rehouse(y, u);
  std::vector<Mask> facets;
  for (Mask f : xr.facet_masks())
    for (Mask g : yr.facet_masks()) facets.push_back(f | g);
  return SimplicialComplex::from_facets(std::move(u), std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& x, const VertexSet& b) {
  return join(x, simplex(b));
}

SimplicialComplex alexander_dual(const SimplicialComplex& x) {
  Mask full = x.vertices().full_mask();
  std::vector<Mask> facets;
  for (Mask n : x.cofacet_masks()) facets.push_back(full & ~n);
  return SimplicialComplex::from_facets(x.vertices(), std::move(facets));
}

static void require_same_ground(const SimplicialComplex& x,
                                const SimplicialComplex& y) {
  if (!x.vertices().same_sequence(y.vertices()))
    throw std::invalid_argument("complexes over different vertex sets");
}

SimplicialComplex lattice_meet(const SimplicialComplex& x,
                               const SimplicialComplex& y) {
  require_same_ground(x, y);
  std::vector<Mask> facets;
  for (Mask f : x.facet_masks())
    for (Mask g : y.facet_masks()) facets.push_back(f & g);
  return SimplicialComplex::from_facets(x.vertices(), std::move(facets));
}

SimplicialComplex lattice_join(const SimplicialComplex& x,
                               const SimplicialComplex& y) {
  require_same_ground(x, y);
  std::vector<Mask> facets = x.facet_masks();
  const auto& g = y.facet_masks();
  facets.insert(facets.end(), g.begin(), g.end());
  return SimplicialComplex::from_facets(x.vertices(), std::move(facets));
}

bool subcomplex(const SimplicialComplex& x, const SimplicialComplex& y) {
  require_same_ground(x, y);
  for (Mask f : x.facet_masks())
    if (!y.is_face(f)) return false;
  return true;
}

}  // namespace srcx
