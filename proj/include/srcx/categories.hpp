#ifndef SRCX_CATEGORIES_HPP
#define SRCX_CATEGORIES_HPP

#include <string>
#include <vector>

#include "srcx/adjoints.hpp"
#include "srcx/ideals.hpp"

namespace srcx {

/// The three categorical structures on simplicial complexes. SC0 and SC1
/// morphisms X -> Y carry a map f : A -> B; SC2 morphisms carry g : B -> A.
enum class Category { SC0, SC1, SC2 };

const char* category_tag(Category c);  // "sc0", "sc1", "sc2"
bool parse_category_tag(std::string_view, Category&);

// SC0: image of every face is a face; SC1: star_star(X) inside Y;
// SC2: X inside star_star(Y). Each condition is evaluated both directly
// and through its adjoint reformulation, which must agree.
bool is_morphism(Category cat, const SetMap& map, const SimplicialComplex& x,
                 const SimplicialComplex& y);

/// Formal descriptor of the ring homomorphism k[y_B] -> k[x_A] attached
/// to a morphism. Images are stored as variable supports; the flavor
/// fixes their reading:
///   SUM_OF_VARS        y_b -> sum over the fiber (empty support reads 0)
///   SQUAREFREE_MONOMIAL y_b -> product over the fiber (empty reads 1)
///   SINGLE_VARIABLE    y_b -> the one variable g(b)
struct RingHomDescriptor {
  enum class Flavor { SUM_OF_VARS, SQUAREFREE_MONOMIAL, SINGLE_VARIABLE };
  Flavor flavor;
  VertexSet source_ring;  // the y-variables (B)
  VertexSet target_ring;  // the x-variables (A)
  std::vector<Mask> images;  // per source-ring variable, support in target

  bool operator==(const RingHomDescriptor& o) const;
};

RingHomDescriptor ring_hom(Category cat, const SetMap& map);

// the formal image of every minimal generator of i_y must lie in i_x
bool verify_well_defined(const RingHomDescriptor& d, const SqfIdeal& i_y,
                         const SqfIdeal& i_x);

// substitution of descriptors: first applied, then second
RingHomDescriptor compose_descriptors(const RingHomDescriptor& second,
                                      const RingHomDescriptor& first);

std::string render_ring_hom(const RingHomDescriptor& d,
                            char source_prefix = 'y', char target_prefix = 'x');

/// A morphism candidate with its full data; validity is recomputed from
/// the fields, never cached.
struct MorphismWitness {
  Category category;
  SetMap map;  // A->B for SC0/SC1, B->A for SC2
  SimplicialComplex source;  // X on A
  SimplicialComplex target;  // Y on B

  bool valid() const { return is_morphism(category, map, source, target); }
};

MorphismWitness compose_morphisms(const MorphismWitness& m1,
                                  const MorphismWitness& m2);

}  // namespace srcx

#endif
