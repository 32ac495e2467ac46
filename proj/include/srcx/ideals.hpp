#ifndef SRCX_IDEALS_HPP
#define SRCX_IDEALS_HPP

#include "srcx/adjoints.hpp"
#include "srcx/complex.hpp"
#include "srcx/setmap.hpp"

namespace srcx {

/// Squarefree monomial ideal, kept as the antichain of minimal generator
/// supports. The zero ideal has no generators; the unit ideal has the
/// single generator emptyset. No coefficient arithmetic anywhere.
class SqfIdeal {
public:
  SqfIdeal() = default;
  SqfIdeal(VertexSet ring, std::vector<Mask> generators);

  static SqfIdeal zero(VertexSet ring) { return SqfIdeal(std::move(ring), {}); }
  static SqfIdeal unit(VertexSet ring) {
    return SqfIdeal(std::move(ring), {Mask{0}});
  }

  const VertexSet& ring() const { return ring_; }
  const std::vector<Mask>& generator_masks() const { return gens_; }
  std::vector<Subset> generators() const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0] == 0; }

  // squarefree monomial membership: support contains a generator
  bool contains(Mask support) const;
  bool contains(const Subset& support) const;

  bool operator==(const SqfIdeal& o) const;

private:
  VertexSet ring_;
  std::vector<Mask> gens_;
};

// Stanley-Reisner round trip: generators of sr_ideal are the cofacets
SqfIdeal sr_ideal(const SimplicialComplex& x);
SimplicialComplex complex_of_ideal(const SqfIdeal& i);

SqfIdeal sum(const SqfIdeal& i, const SqfIdeal& j);
// pairwise support unions of generators; the paper's product formulas all
// have disjoint variable blocks, overlap falls back to the squarefree image
SqfIdeal product(const SqfIdeal& i, const SqfIdeal& j);
// pairwise lcms
SqfIdeal intersect(const SqfIdeal& i, const SqfIdeal& j);
// (I : x_E) = generators stripped of E, minimalized
SqfIdeal colon(const SqfIdeal& i, Mask monomial_support);

// keep generators supported inside sub, re-housed on sub
SqfIdeal contract(const SqfIdeal& i, const Subset& sub);
// re-house on a larger ring
SqfIdeal extend(const SqfIdeal& i, const VertexSet& ring);

/// Ideal-algebra route for an injective map: computes the ideal of the
/// functor image without touching the complex.
/// EE: extend(I_X) + (x_E); SS: extend(I_X); AA: extend(I_X) * (x_E);
/// SE: contract(I_Y, A); SA: contract(colon(I_Y, x_E), A).
SqfIdeal injection_dictionary(const SetMap& f, Functor kind,
                              const SqfIdeal& input);

// generator supports replaced by their full preimages; I of the upper
// f-complex of the corresponding Y
SqfIdeal fiber_substitute(const SqfIdeal& i, const SetMap& f);
// generator supports expanded to all fiber transversals; I of the lower
// f-complex
SqfIdeal fiber_expand(const SqfIdeal& i, const SetMap& f);

// generated by the f-cores of all monomials of I; equals the ideal of
// upper_upper applied to the complex of I
SqfIdeal core_ideal(const SqfIdeal& i, const SetMap& f);
// minimal C whose every fiber transversal lies in I; equals the ideal of
// shriek_shriek applied to the complex of I
SqfIdeal transversal_test_ideal(const SqfIdeal& i, const SetMap& f);

// rendering: "(x_a*x_b, x_c)"; "(0)"; "(1)"
std::string render_ideal(const SqfIdeal& i, char prefix = 'x');

}  // namespace srcx

#endif
