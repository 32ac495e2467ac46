#ifndef SRCX_PRODUCTS_HPP
#define SRCX_PRODUCTS_HPP

#include "srcx/adjoints.hpp"
#include "srcx/complex.hpp"
#include "srcx/ideals.hpp"

namespace srcx {

/// The eight product constructions: four on the disjoint union A u B,
/// four on the cartesian product A x B (meet/join of the pushed or
/// pulled-back complexes along the inclusions/projections).
enum class ProductKind {
  DISJOINT_UNION,   // join of the image pushes
  EXTERNAL_JOIN,    // meet of the preimage pushes
  OR_UNION,         // join of the preimage pushes
  CONE_UNION,       // meet of the core pushes
  CART_MEET_LOWER,  // meet of the image pullbacks
  CART_JOIN_LOWER,  // join of the image pullbacks
  CART_MEET_UPPER,  // meet of the core pullbacks
  CART_JOIN_UPPER,  // join of the core pullbacks
};

const char* product_tag(ProductKind k);  // "disjoint-union", ...
bool parse_product_tag(std::string_view, ProductKind&);
bool is_union_kind(ProductKind k);

// Union products live on the disjoint union of the two label sets.
// Computed through the adjoint functors of the two inclusion maps and
// cross-checked against the direct face descriptions. Throws on a label
// clash.
SimplicialComplex union_product(ProductKind kind, const SimplicialComplex& x,
                                const SimplicialComplex& y);

// The matching ideal formulas, computed purely in ideal algebra:
//   disjoint-union  (I_X) + (I_Y) + (x+_A)(y+_B)
//   external-join   (I_X) + (I_Y)
//   or-union        (I_X) cap (I_Y)  ( = (I_X I_Y) )
//   cone-union      (I_X . y*_B) + (x*_A . I_Y)
SqfIdeal union_product_ideal(ProductKind kind, const SqfIdeal& ix,
                             const SqfIdeal& iy);

// ground set of the cartesian products: labels "(a,b)", a-major order
VertexSet pair_vertex_set(const VertexSet& a, const VertexSet& b);

// Cartesian products. Lower kinds are generated by faces D x C; upper
// kinds have non-face complements generated by U x V. Cross-checked
// against meet/join of the pullback functors along the projections.
SimplicialComplex cartesian_product(ProductKind kind,
                                    const SimplicialComplex& x,
                                    const SimplicialComplex& y);

// Ideal route: minimal generators among the z*_S of the corollary
// conditions, by enumeration over S (guard |A|.|B| <= 20).
SqfIdeal cartesian_product_ideal(ProductKind kind, const SqfIdeal& ix,
                                 const SqfIdeal& iy);

}  // namespace srcx

#endif
