#ifndef SRCX_COMPLEX_HPP
#define SRCX_COMPLEX_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srcx {

// Subsets of a vertex set are bitmasks indexed by label position.
using Mask = std::uint32_t;

constexpr int kMaxVertices = 24;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool contains(Mask big, Mask small) { return (small & ~big) == 0; }
inline Mask bit(int i) { return Mask{1} << i; }

/// Ordered finite set of distinct string labels. Immutable and cheap to
/// copy (shared storage). Label order is the input order; canonical
/// serialization sorts lexicographically. Equality is order-insensitive.
class VertexSet {
public:
  VertexSet();
  explicit VertexSet(std::vector<std::string> labels);

  std::size_t size() const { return d_->labels.size(); }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::string& label(int i) const { return d_->labels[i]; }
  // -1 when the label is absent
  int index_of(std::string_view label) const;
  Mask full_mask() const { return size() == 0 ? 0 : (Mask{1} << size()) - 1; }

  // positions in lexicographic label order
  const std::vector<int>& sorted_order() const { return d_->sorted; }

  bool same_sequence(const VertexSet& o) const;
  bool operator==(const VertexSet& o) const;  // same label set, any order

  // labels of a mask, lexicographically sorted
  std::vector<std::string> mask_labels(Mask m) const;

private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<int> sorted;
  };
  std::shared_ptr<const Data> d_;
};

// canonical comparison of subsets: lexicographic on the sorted
// member-label lists
bool mask_less(const VertexSet& vs, Mask a, Mask b);

/// A subset of a vertex set. Two subsets combine only when they are over
/// vertex sets with the same label sequence.
class Subset {
public:
  Subset(VertexSet over, Mask bits);
  Subset(const VertexSet& over, const std::vector<std::string>& members);

  const VertexSet& over() const { return over_; }
  Mask bits() const { return bits_; }
  int size() const { return popcount(bits_); }
  bool has(std::string_view label) const;
  std::vector<std::string> members() const { return over_.mask_labels(bits_); }

  bool operator==(const Subset& o) const;
  bool subset_of(const Subset& o) const;

private:
  VertexSet over_;
  Mask bits_;
};

/// A simplicial complex given by its facet antichain. The void complex
/// has no facets; the complex {emptyset} has the single facet emptyset.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  // generated complex: antichain reduction of the given sets
  static SimplicialComplex from_facets(VertexSet vertices,
                                       std::vector<Mask> sets);
  static SimplicialComplex from_facets(const VertexSet& vertices,
                                       const std::vector<Subset>& sets);
  // complex whose minimal non-faces are the given antichain
  static SimplicialComplex from_cofacets(VertexSet vertices,
                                         std::vector<Mask> cofacets);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Mask>& facet_masks() const { return facets_; }
  std::vector<Subset> facets() const;

  bool is_void() const { return facets_.empty(); }
  // the complex {emptyset}
  bool is_empty_face_only() const {
    return facets_.size() == 1 && facets_[0] == 0;
  }

  bool is_face(Mask s) const;
  bool is_face(const Subset& s) const;

  // all faces, guarded at 20 vertices
  std::vector<Mask> face_masks() const;
  std::vector<Subset> faces() const;

  // minimal non-faces
  std::vector<Mask> cofacet_masks() const;
  std::vector<Subset> cofacets() const;

  Subset support() const;
  Subset cosupport() const;
  // nullopt for the void complex, -1 for {emptyset}
  std::optional<int> dimension() const;

  bool operator==(const SimplicialComplex& o) const;

private:
  VertexSet vertices_;
  std::vector<Mask> facets_;
};

SimplicialComplex simplex(const VertexSet& a);
SimplicialComplex boundary(const VertexSet& a);

SimplicialComplex restriction(const SimplicialComplex& x, const Subset& e);
SimplicialComplex link(const SimplicialComplex& x, const Subset& e);
SimplicialComplex cone(const SimplicialComplex& x, const VertexSet& b);
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);

SimplicialComplex alexander_dual(const SimplicialComplex& x);

SimplicialComplex lattice_meet(const SimplicialComplex& x,
                               const SimplicialComplex& y);
SimplicialComplex lattice_join(const SimplicialComplex& x,
                               const SimplicialComplex& y);

// X subcomplex of Y (same vertex set): every facet of X is a face of Y
bool subcomplex(const SimplicialComplex& x, const SimplicialComplex& y);

// disjoint union of label sequences; throws on a clash
VertexSet union_vertex_set(const VertexSet& a, const VertexSet& b);

// re-house a complex on a vertex set containing all its labels
SimplicialComplex rehouse(const SimplicialComplex& x, const VertexSet& target);

namespace detail {
// antichain of maximal elements
std::vector<Mask> maximal_antichain(std::vector<Mask> sets);
// antichain of minimal elements
std::vector<Mask> minimal_antichain(std::vector<Mask> sets);
// minimal transversals of a set family over n vertices (Berge multiplication)
std::vector<Mask> minimal_transversals(const std::vector<Mask>& family, int n);
void canonical_sort(const VertexSet& vs, std::vector<Mask>& masks);
}  // namespace detail

}  // namespace srcx

#endif
