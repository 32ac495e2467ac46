#include "srcx/products.hpp"

#include <algorithm>
#include <stdexcept>

namespace srcx {

namespace {

const char* kTags[] = {"disjoint-union",  "external-join",   "or-union",
                       "cone-union",      "cart-meet-lower", "cart-join-lower",
                       "cart-meet-upper", "cart-join-upper"};

// direct facet-level reading of the four union face descriptions
SimplicialComplex union_direct(ProductKind kind, const SimplicialComplex& rx,
                               const SimplicialComplex& ry, Mask a_mask,
                               Mask b_mask) {
  const VertexSet& u = rx.vertices();
  std::vector<Mask> gens;
  switch (kind) {
    case ProductKind::DISJOINT_UNION:
      gens = rx.facet_masks();
      gens.insert(gens.end(), ry.facet_masks().begin(),
                  ry.facet_masks().end());
      break;
    case ProductKind::EXTERNAL_JOIN:
      for (Mask f : rx.facet_masks())
        for (Mask g : ry.facet_masks()) gens.push_back(f | g);
      break;
    case ProductKind::OR_UNION:
      for (Mask f : rx.facet_masks()) gens.push_back(f | b_mask);
      for (Mask g : ry.facet_masks()) gens.push_back(g | a_mask);
      break;
    case ProductKind::CONE_UNION:
      // proper-on-both-sides faces, plus full-B cones over X and full-A
      // cones over Y
      if (a_mask && b_mask) {
        Mask ra = a_mask;
        while (ra) {
          int i = std::countr_zero(ra);
          ra &= ra - 1;
          Mask rb = b_mask;
          while (rb) {
            int j = std::countr_zero(rb);
            rb &= rb - 1;
            gens.push_back((a_mask & ~bit(i)) | (b_mask & ~bit(j)));
          }
        }
      }
      for (Mask f : rx.facet_masks()) gens.push_back(f | b_mask);
      for (Mask g : ry.facet_masks()) gens.push_back(g | a_mask);
      // the full set A|B is a face only when A is a face of X and B a face
      // of Y; when only one side is a full simplex, the cones above overshoot
      // at that single corner, and the facets drop to its codimension-one
      // subsets on the full side
      if (!(rx.is_face(a_mask) && ry.is_face(b_mask))) {
        Mask full = a_mask | b_mask;
        bool had_full = !gens.empty() &&
                        std::find(gens.begin(), gens.end(), full) != gens.end();
        if (had_full) {
          std::erase(gens, full);
          Mask side = rx.is_face(a_mask) ? a_mask : b_mask;
          Mask r = side;
          while (r) {
            int i = std::countr_zero(r);
            r &= r - 1;
            gens.push_back(full & ~bit(i));
          }
        }
      }
      break;
    default:
      throw std::logic_error("not a union kind");
  }
  return SimplicialComplex::from_facets(u, std::move(gens));
}

struct PairGround {
  VertexSet ground;
  int nb;  // |B|, the minor index stride
};

int pair_index(const PairGround& pg, int ai, int bi) {
  return ai * pg.nb + bi;
}

Mask pair_mask(const PairGround& pg, Mask d, Mask c) {
  Mask out = 0;
  Mask rd = d;
  while (rd) {
    int ai = std::countr_zero(rd);
    rd &= rd - 1;
    Mask rc = c;
    while (rc) {
      int bi = std::countr_zero(rc);
      rc &= rc - 1;
      out |= bit(pair_index(pg, ai, bi));
    }
  }
  return out;
}

PairGround make_pair_ground(const VertexSet& a, const VertexSet& b) {
  if (a.size() * b.size() > static_cast<std::size_t>(kMaxVertices))
    throw std::invalid_argument("cartesian ground set exceeds " +
                                std::to_string(kMaxVertices) + " vertices");
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back("(" + la + "," + lb + ")");
  return PairGround{VertexSet(std::move(labels)), static_cast<int>(b.size())};
}

}  // namespace

const char* product_tag(ProductKind k) { return kTags[static_cast<int>(k)]; }

bool parse_product_tag(std::string_view s, ProductKind& out) {
  for (int i = 0; i < 8; ++i)
    if (s == kTags[i]) {
      out = static_cast<ProductKind>(i);
      return true;
    }
  return false;
}

bool is_union_kind(ProductKind k) {
  return static_cast<int>(k) < static_cast<int>(ProductKind::CART_MEET_LOWER);
}

SimplicialComplex union_product(ProductKind kind, const SimplicialComplex& x,
                                const SimplicialComplex& y) {
  if (!is_union_kind(kind))
    throw std::invalid_argument("union_product called with a cartesian kind");
  VertexSet u = union_vertex_set(x.vertices(), y.vertices());
  SetMap ia = SetMap::inclusion(x.vertices(), u);
  SetMap ib = SetMap::inclusion(y.vertices(), u);

  Functor push;
  bool meet;
  switch (kind) {
    case ProductKind::DISJOINT_UNION: push = Functor::EE; meet = false; break;
    case ProductKind::EXTERNAL_JOIN:  push = Functor::SS; meet = true;  break;
    case ProductKind::OR_UNION:       push = Functor::SS; meet = false; break;
    default:                          push = Functor::AA; meet = true;  break;
  }
  SimplicialComplex px = apply(push, ia, x);
  SimplicialComplex py = apply(push, ib, y);
  SimplicialComplex result = meet ? lattice_meet(px, py) : lattice_join(px, py);

  SimplicialComplex check =
      union_direct(kind, rehouse(x, u), rehouse(y, u),
                   ia.range_mask(), ib.range_mask());
  if (!(result == check))
    throw std::logic_error("union product route disagreement");
  return result;
}

SqfIdeal union_product_ideal(ProductKind kind, const SqfIdeal& ix,
                             const SqfIdeal& iy) {
  if (!is_union_kind(kind))
    throw std::invalid_argument("not a union kind");
  VertexSet u = union_vertex_set(ix.ring(), iy.ring());
  Mask a_mask = SetMap::inclusion(ix.ring(), u).range_mask();
  Mask b_mask = SetMap::inclusion(iy.ring(), u).range_mask();
  SqfIdeal ex = extend(ix, u);
  SqfIdeal ey = extend(iy, u);
  switch (kind) {
    case ProductKind::DISJOINT_UNION: {
      std::vector<Mask> va, vb;
      Mask ra = a_mask;
      while (ra) { va.push_back(ra & -ra); ra &= ra - 1; }
      Mask rb = b_mask;
      while (rb) { vb.push_back(rb & -rb); rb &= rb - 1; }
      // a void side contributes every one of its variables, not the unit
      // ideal: the union still keeps the other side's faces
      if (ex.is_unit() && ey.is_unit()) return SqfIdeal(u, {0});
      if (ex.is_unit()) return sum(SqfIdeal(u, va), ey);
      if (ey.is_unit()) return sum(ex, SqfIdeal(u, vb));
      SqfIdeal mixed = product(SqfIdeal(u, va), SqfIdeal(u, vb));
      return sum(sum(ex, ey), mixed);
    }
    case ProductKind::EXTERNAL_JOIN:
      return sum(ex, ey);
    case ProductKind::OR_UNION:
      return intersect(ex, ey);
    default:
      return sum(product(ex, SqfIdeal(u, {b_mask})),
                 product(SqfIdeal(u, {a_mask}), ey));
  }
}

VertexSet pair_vertex_set(const VertexSet& a, const VertexSet& b) {
  return make_pair_ground(a, b).ground;
}

SimplicialComplex cartesian_product(ProductKind kind,
                                    const SimplicialComplex& x,
                                    const SimplicialComplex& y) {
  if (is_union_kind(kind))
    throw std::invalid_argument("cartesian_product called with a union kind");
  const VertexSet& a = x.vertices();
  const VertexSet& b = y.vertices();
  PairGround pg = make_pair_ground(a, b);
  Mask am = a.full_mask();
  Mask bm = b.full_mask();

  SimplicialComplex result;
  switch (kind) {
    case ProductKind::CART_MEET_LOWER: {
      std::vector<Mask> gens;
      for (Mask f : x.facet_masks())
        for (Mask g : y.facet_masks()) gens.push_back(pair_mask(pg, f, g));
      result = SimplicialComplex::from_facets(pg.ground, std::move(gens));
      break;
    }
    case ProductKind::CART_JOIN_LOWER: {
      std::vector<Mask> gens;
      for (Mask f : x.facet_masks()) gens.push_back(pair_mask(pg, f, bm));
      for (Mask g : y.facet_masks()) gens.push_back(pair_mask(pg, am, g));
      result = SimplicialComplex::from_facets(pg.ground, std::move(gens));
      break;
    }
    case ProductKind::CART_MEET_UPPER: {
      // non-face complements generated by (A\N) x B and A x (B\M); the
      // minimal non-faces are their complements N x B and A x M
      std::vector<Mask> cof;
      for (Mask n : x.cofacet_masks()) cof.push_back(pair_mask(pg, n, bm));
      for (Mask m : y.cofacet_masks()) cof.push_back(pair_mask(pg, am, m));
      result = SimplicialComplex::from_cofacets(pg.ground,
                                                detail::minimal_antichain(cof));
      break;
    }
    default: {  // CART_JOIN_UPPER
      std::vector<Mask> cof;
      for (Mask n : x.cofacet_masks())
        for (Mask m : y.cofacet_masks())
          cof.push_back(pair_mask(pg, n, bm) | pair_mask(pg, am, m));
      result = SimplicialComplex::from_cofacets(pg.ground,
                                                detail::minimal_antichain(cof));
      break;
    }
  }

  // cross-check: meet/join of the pullback functors along the projections
  std::vector<int> ta(pg.ground.size()), tb(pg.ground.size());
  for (std::size_t i = 0; i < pg.ground.size(); ++i) {
    ta[i] = static_cast<int>(i) / pg.nb;
    tb[i] = static_cast<int>(i) % pg.nb;
  }
  SetMap pa(pg.ground, a, ta), pb(pg.ground, b, tb);
  bool lower = kind == ProductKind::CART_MEET_LOWER ||
               kind == ProductKind::CART_JOIN_LOWER;
  bool meet = kind == ProductKind::CART_MEET_LOWER ||
              kind == ProductKind::CART_MEET_UPPER;
  Functor pull = lower ? Functor::SE : Functor::SA;
  SimplicialComplex qx = apply(pull, pa, x);
  SimplicialComplex qy = apply(pull, pb, y);
  SimplicialComplex check = meet ? lattice_meet(qx, qy) : lattice_join(qx, qy);
  if (!(result == check))
    throw std::logic_error("cartesian product route disagreement");
  return result;
}

SqfIdeal cartesian_product_ideal(ProductKind kind, const SqfIdeal& ix,
                                 const SqfIdeal& iy) {
  if (is_union_kind(kind))
    throw std::invalid_argument("not a cartesian kind");
  const VertexSet& a = ix.ring();
  const VertexSet& b = iy.ring();
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  if (na * nb > 20)
    throw std::invalid_argument("cartesian ideal enumeration guard exceeded");
  PairGround pg = make_pair_ground(a, b);
  bool lower = kind == ProductKind::CART_MEET_LOWER ||
               kind == ProductKind::CART_JOIN_LOWER;
  bool meet = kind == ProductKind::CART_MEET_LOWER ||
              kind == ProductKind::CART_MEET_UPPER;

  std::vector<Mask> gens;
  Mask full = pg.ground.full_mask();
  for (Mask s = 0;; ++s) {
    Mask xa = 0, yb = 0;
    if (lower) {
      // projections of S
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          if (s & bit(pair_index(pg, i, j))) { xa |= bit(i); yb |= bit(j); }
    } else {
      // complements of the projections of the complement: full rows/columns
      xa = a.full_mask();
      yb = b.full_mask();
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          if (!(s & bit(pair_index(pg, i, j)))) {
            xa &= ~bit(i);
            yb &= ~bit(j);
          }
    }
    bool in_x = ix.contains(xa), in_y = iy.contains(yb);
    if (meet ? (in_x || in_y) : (in_x && in_y)) gens.push_back(s);
    if (s == full) break;
  }
  return SqfIdeal(pg.ground, detail::minimal_antichain(std::move(gens)));
}

}  // namespace srcx
