#include "srcx/adjoints.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace srcx {

const char* functor_tag(Functor k) {
  switch (k) {
    case Functor::EE: return "ee";
    case Functor::SE: return "se";
    case Functor::SS: return "ss";
    case Functor::SA: return "sa";
    case Functor::AA: return "aa";
  }
  return "?";
}

bool parse_functor_tag(std::string_view s, Functor& out) {
  if (s == "ee") out = Functor::EE;
  else if (s == "se") out = Functor::SE;
  else if (s == "ss") out = Functor::SS;
  else if (s == "sa") out = Functor::SA;
  else if (s == "aa") out = Functor::AA;
  else return false;
  return true;
}

bool forward_direction(Functor k) {
  return k == Functor::EE || k == Functor::SS || k == Functor::AA;
}

static void require_on_domain(const SetMap& f, const SimplicialComplex& x) {
  if (!x.vertices().same_sequence(f.domain()))
    throw std::invalid_argument("complex is not on the map domain");
}

static void require_on_codomain(const SetMap& f, const SimplicialComplex& y) {
  if (!y.vertices().same_sequence(f.codomain()))
    throw std::invalid_argument("complex is not on the map codomain");
}

SimplicialComplex shriek_shriek(const SetMap& f, const SimplicialComplex& x) {
  require_on_domain(f, x);
  std::vector<Mask> facets;
  for (Mask d : x.facet_masks()) facets.push_back(f.image_mask(d));
  return SimplicialComplex::from_facets(f.codomain(), std::move(facets));
}

SimplicialComplex star_shriek(const SetMap& f, const SimplicialComplex& y) {
  require_on_codomain(f, y);
  std::vector<Mask> facets;
  for (Mask c : y.facet_masks()) facets.push_back(f.preimage_mask(c));
  return SimplicialComplex::from_facets(f.domain(), std::move(facets));
}

SimplicialComplex star_star(const SetMap& f, const SimplicialComplex& x) {
  require_on_domain(f, x);
  std::vector<Mask> facets;
  for (Mask d : x.facet_masks()) facets.push_back(f.core_mask(d));
  return SimplicialComplex::from_facets(f.codomain(), std::move(facets));
}

SimplicialComplex star_upper(const SetMap& f, const SimplicialComplex& y) {
  require_on_codomain(f, y);
  // T is a non-face exactly when it contains the preimage of a non-face
  // of Y, so the minimal non-faces are the minimal cofacet preimages
  std::vector<Mask> cofacets;
  for (Mask n : y.cofacet_masks()) cofacets.push_back(f.preimage_mask(n));
  return SimplicialComplex::from_cofacets(f.domain(), std::move(cofacets));
}

SimplicialComplex upper_upper(const SetMap& f, const SimplicialComplex& x) {
  require_on_domain(f, x);
  const VertexSet& b = f.codomain();
  if (b.size() > 20)
    throw std::invalid_argument("upper_upper limited to 20 codomain vertices");
  Mask empty_fibers = b.full_mask() & ~f.range_mask();

  // every maximal D with core(D) = C must be a face of X; the maximal D
  // take the full preimage of C and all-but-one element of each other fiber
  auto all_maximal_in_x = [&](Mask c) {
    Mask base = f.preimage_mask(c);
    std::vector<Mask> others;
    Mask rest = f.range_mask() & ~c;
    while (rest) {
      int bi = std::countr_zero(rest);
      rest &= rest - 1;
      others.push_back(f.fiber(bi));
    }
    std::vector<int> omit(others.size(), 0);
    while (true) {
      Mask d = base;
      for (std::size_t i = 0; i < others.size(); ++i) {
        Mask fib = others[i];
        // drop the omit[i]-th element of the fiber
        Mask m = fib;
        for (int k = 0; k < omit[i]; ++k) m &= m - 1;
        d |= fib & ~bit(std::countr_zero(m));
      }
      if (!x.is_face(d)) return false;
      std::size_t i = others.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++omit[i] < popcount(others[i])) { done = false; break; }
        omit[i] = 0;
      }
      if (done) return true;
    }
  };

  Mask full = b.full_mask();
  std::vector<char> face(std::size_t{1} << b.size(), 0);
  for (Mask c = 0;; ++c) {
    // a C missing an empty-fiber element is the core of no D at all
    bool vacuous = !contains(c, empty_fibers);
    face[c] = static_cast<char>(vacuous || all_maximal_in_x(c));
    if (c == full) break;
  }
  std::vector<Mask> facets;
  for (Mask c = 0;; ++c) {
    if (face[c]) {
      bool maximal = true;
      for (std::size_t i = 0; i < b.size(); ++i) {
        Mask up = c | bit(static_cast<int>(i));
        if (up != c && face[up]) { maximal = false; break; }
      }
      if (maximal) facets.push_back(c);
    }
    if (c == full) break;
  }
  return SimplicialComplex::from_facets(b, std::move(facets));
}

// --- injection fast paths -------------------------------------------------

// remap a complex whose labels are codomain labels in f(A) back to the domain
static SimplicialComplex pull_labels(const SetMap& f, const SimplicialComplex& w) {
  std::vector<int> cod_to_dom(f.codomain().size(), -1);
  for (std::size_t a = 0; a < f.domain().size(); ++a)
    cod_to_dom[f.target(static_cast<int>(a))] = static_cast<int>(a);
  std::vector<Mask> facets;
  for (Mask m : w.facet_masks()) {
    Mask out = 0;
    Mask rest = m;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int bi = f.codomain().index_of(w.vertices().label(v));
      if (bi < 0 || cod_to_dom[bi] < 0)
        throw std::invalid_argument("label outside the map image");
      out |= bit(cod_to_dom[bi]);
    }
    facets.push_back(out);
  }
  return SimplicialComplex::from_facets(f.domain(), std::move(facets));
}

static SimplicialComplex apply_injective(Functor kind, const SetMap& f,
                                         const SimplicialComplex& z) {
  const VertexSet& b = f.codomain();
  Mask range = f.range_mask();
  Mask e_mask = b.full_mask() & ~range;
  VertexSet e_set(b.mask_labels(e_mask));
  VertexSet range_set(b.mask_labels(range));
  switch (kind) {
    case Functor::EE:
      return shriek_shriek(f, z);
    case Functor::SS: {
      auto x_r = rehouse(shriek_shriek(f, z), range_set);
      return rehouse(cone(x_r, e_set), b);
    }
    case Functor::AA: {
      auto x_r = rehouse(shriek_shriek(f, z), range_set);
      auto cone_x = rehouse(cone(x_r, e_set), b);
      auto other = rehouse(join(boundary(e_set), simplex(range_set)), b);
      return lattice_join(cone_x, other);
    }
    case Functor::SE:
      return pull_labels(f, restriction(z, Subset(b, range)));
    case Functor::SA:
      return pull_labels(f, link(z, Subset(b, e_mask)));
  }
  throw std::logic_error("unreachable");
}

SimplicialComplex apply(Functor kind, const SetMap& f,
                        const SimplicialComplex& z) {
  if (forward_direction(kind)) require_on_domain(f, z);
  else require_on_codomain(f, z);

  if (f.is_injective()) return apply_injective(kind, f, z);
  if (f.is_surjective()) {
    switch (kind) {
      case Functor::EE: return shriek_shriek(f, z);
      case Functor::SE: return star_shriek(f, z);
      case Functor::SS: return star_star(f, z);
      case Functor::SA: return star_upper(f, z);
      case Functor::AA: return upper_upper(f, z);
    }
  }
  auto [s, i] = f.factorize();
  if (forward_direction(kind)) return apply(kind, i, apply(kind, s, z));
  return apply(kind, s, apply(kind, i, z));
}

// --- surjection vocabulary --------------------------------------------------

static void require_surjective(const SetMap& f) {
  if (!f.is_surjective())
    throw std::invalid_argument("operation requires a surjective map");
}

SimplicialComplex lower_complex(const SetMap& f, const SimplicialComplex& y) {
  require_surjective(f);
  return star_shriek(f, y);
}

SimplicialComplex upper_complex(const SetMap& f, const SimplicialComplex& y) {
  require_surjective(f);
  return star_upper(f, y);
}

bool is_lower(const SetMap& f, const SimplicialComplex& x) {
  require_surjective(f);
  require_on_domain(f, x);
  for (Mask fa : x.facet_masks()) {
    for (std::size_t bi = 0; bi < f.codomain().size(); ++bi) {
      Mask fib = f.fiber(static_cast<int>(bi));
      Mask sec = fa & fib;
      if (sec != 0 && sec != fib) return false;
    }
  }
  return true;
}

bool is_upper(const SetMap& f, const SimplicialComplex& x) {
  require_surjective(f);
  require_on_domain(f, x);
  return x == upper_complex(f, star_star(f, x));
}

FiberInterval fiber_interval(Functor kind, const SetMap& f,
                             const SimplicialComplex& target) {
  FiberInterval out;
  Functor middle;
  switch (kind) {
    case Functor::SE:
      out.lower = apply(Functor::EE, f, target);
      out.upper = apply(Functor::SS, f, target);
      middle = Functor::SE;
      break;
    case Functor::SA:
      out.lower = apply(Functor::SS, f, target);
      out.upper = apply(Functor::AA, f, target);
      middle = Functor::SA;
      break;
    case Functor::SS:
      out.lower = apply(Functor::SE, f, target);
      out.upper = apply(Functor::SA, f, target);
      middle = Functor::SS;
      break;
    default:
      throw std::invalid_argument("fiber_interval supports se, sa, ss");
  }
  out.empty = !(apply(middle, f, out.lower) == target);
  return out;
}

SimplicialComplex section_transfer(const SetMap& s, Functor kind,
                                   const SimplicialComplex& y) {
  if (!s.is_injective())
    throw std::invalid_argument("section_transfer requires a section (injective map)");
  if (kind != Functor::EE && kind != Functor::SS && kind != Functor::AA)
    throw std::invalid_argument("section_transfer supports ee, ss, aa");
  return apply(kind, s, y);
}

}  // namespace srcx
