#ifndef SRCX_ADJOINTS_HPP
#define SRCX_ADJOINTS_HPP

#include "srcx/complex.hpp"
#include "srcx/setmap.hpp"

namespace srcx {

/// The five functors induced by a set map f : A -> B.
///   EE  pushes along images (left end of the adjoint chain)
///   SE  pulls back via images
///   SS  pushes along full preimages
///   SA  pulls back via cores
///   AA  pushes along cores (right end)
/// EE, SS, AA go from complexes on A to complexes on B; SE, SA the reverse.
enum class Functor { EE, SE, SS, SA, AA };

const char* functor_tag(Functor k);           // "ee", "se", ...
bool parse_functor_tag(std::string_view, Functor&);
// true for EE/SS/AA (domain-side argument), false for SE/SA
bool forward_direction(Functor k);

// Direct facet-level algorithms, valid for arbitrary f.

// facets are images of facets
SimplicialComplex shriek_shriek(const SetMap& f, const SimplicialComplex& x);
// facets are preimages of facets
SimplicialComplex star_shriek(const SetMap& f, const SimplicialComplex& y);
// facets are cores of facets
SimplicialComplex star_star(const SetMap& f, const SimplicialComplex& x);
// faces are the T whose core is a face; computed from cofacet preimages
SimplicialComplex star_upper(const SetMap& f, const SimplicialComplex& y);
// C is a face when every maximal D with core(D) = C is a face of X;
// enumeration over the codomain power set, guarded at 20
SimplicialComplex upper_upper(const SetMap& f, const SimplicialComplex& x);

/// Dispatch with injection/surjection fast paths; a general map is
/// factorized into a surjection followed by an injection and the functor
/// is applied along each factor.
SimplicialComplex apply(Functor kind, const SetMap& f,
                        const SimplicialComplex& z);

// Surjection vocabulary of lower/upper f-complexes.
SimplicialComplex lower_complex(const SetMap& f, const SimplicialComplex& y);
SimplicialComplex upper_complex(const SetMap& f, const SimplicialComplex& y);
bool is_lower(const SetMap& f, const SimplicialComplex& x);
bool is_upper(const SetMap& f, const SimplicialComplex& x);

/// Solution interval of a functor equation: the complexes Z with
/// middle(f, Z) = target lie between `lower` and `upper` when non-empty.
struct FiberInterval {
  SimplicialComplex lower;
  SimplicialComplex upper;
  bool empty = false;
};

// SE: solutions Y of star_shriek(f,Y) = X, bounds [ee(X), ss(X)]
// SA: solutions Y of star_upper(f,Y) = X, bounds [ss(X), aa(X)]
// SS: solutions X of star_star(f,X) = Y, bounds [se(Y), sa(Y)]
FiberInterval fiber_interval(Functor kind, const SetMap& f,
                             const SimplicialComplex& target);

// Transfer of Y along a section s of a surjection f, for EE/SS/AA.
SimplicialComplex section_transfer(const SetMap& s, Functor kind,
                                   const SimplicialComplex& y);

}  // namespace srcx

#endif
