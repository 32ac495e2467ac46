#include "srcx/categories.hpp"

#include <stdexcept>

namespace srcx {

const char* category_tag(Category c) {
  switch (c) {
    case Category::SC0: return "sc0";
    case Category::SC1: return "sc1";
    case Category::SC2: return "sc2";
  }
  return "?";
}

bool parse_category_tag(std::string_view s, Category& out) {
  if (s == "sc0") out = Category::SC0;
  else if (s == "sc1") out = Category::SC1;
  else if (s == "sc2") out = Category::SC2;
  else return false;
  return true;
}

bool is_morphism(Category cat, const SetMap& map, const SimplicialComplex& x,
                 const SimplicialComplex& y) {
  switch (cat) {
    case Category::SC0: {
      if (!x.vertices().same_sequence(map.domain()) ||
          !y.vertices().same_sequence(map.codomain()))
        throw std::invalid_argument("sc0 morphism data on wrong ground sets");
      bool direct = subcomplex(apply(Functor::EE, map, x), y);
      bool adjoint = subcomplex(x, apply(Functor::SE, map, y));
      if (direct != adjoint)
        throw std::logic_error("sc0 adjoint reformulation disagrees");
      return direct;
    }
    case Category::SC1: {
      if (!x.vertices().same_sequence(map.domain()) ||
          !y.vertices().same_sequence(map.codomain()))
        throw std::invalid_argument("sc1 morphism data on wrong ground sets");
      bool direct = subcomplex(apply(Functor::SS, map, x), y);
      bool adjoint = subcomplex(x, apply(Functor::SA, map, y));
      if (direct != adjoint)
        throw std::logic_error("sc1 adjoint reformulation disagrees");
      return direct;
    }
    case Category::SC2: {
      // map is g : B -> A
      if (!x.vertices().same_sequence(map.codomain()) ||
          !y.vertices().same_sequence(map.domain()))
        throw std::invalid_argument("sc2 morphism data on wrong ground sets");
      bool direct = subcomplex(x, apply(Functor::SS, map, y));
      bool adjoint = subcomplex(apply(Functor::SE, map, x), y);
      if (direct != adjoint)
        throw std::logic_error("sc2 adjoint reformulation disagrees");
      return direct;
    }
  }
  throw std::logic_error("unreachable");
}

bool RingHomDescriptor::operator==(const RingHomDescriptor& o) const {
  return flavor == o.flavor && source_ring.same_sequence(o.source_ring) &&
         target_ring.same_sequence(o.target_ring) && images == o.images;
}

RingHomDescriptor ring_hom(Category cat, const SetMap& map) {
  RingHomDescriptor d;
  switch (cat) {
    case Category::SC0:
      d.flavor = RingHomDescriptor::Flavor::SUM_OF_VARS;
      break;
    case Category::SC1:
      d.flavor = RingHomDescriptor::Flavor::SQUAREFREE_MONOMIAL;
      break;
    case Category::SC2:
      d.flavor = RingHomDescriptor::Flavor::SINGLE_VARIABLE;
      break;
  }
  if (cat == Category::SC2) {
    // g : B -> A; y_b -> x_{g(b)}
    d.source_ring = map.domain();
    d.target_ring = map.codomain();
    d.images.resize(map.domain().size());
    for (std::size_t bi = 0; bi < map.domain().size(); ++bi)
      d.images[bi] = bit(map.target(static_cast<int>(bi)));
  } else {
    // f : A -> B; y_b -> fiber over b (empty reads 1 for SC1, 0 for SC0)
    d.source_ring = map.codomain();
    d.target_ring = map.domain();
    d.images.resize(map.codomain().size());
    for (std::size_t bi = 0; bi < map.codomain().size(); ++bi)
      d.images[bi] = map.fiber(static_cast<int>(bi));
  }
  return d;
}

bool verify_well_defined(const RingHomDescriptor& d, const SqfIdeal& i_y,
                         const SqfIdeal& i_x) {
  if (!d.source_ring.same_sequence(i_y.ring()))
    throw std::invalid_argument("descriptor source ring mismatch");
  if (!d.target_ring.same_sequence(i_x.ring()))
    throw std::invalid_argument("descriptor target ring mismatch");
  for (Mask c : i_y.generator_masks()) {
    switch (d.flavor) {
      case RingHomDescriptor::Flavor::SQUAREFREE_MONOMIAL:
      case RingHomDescriptor::Flavor::SINGLE_VARIABLE: {
        Mask image = 0;
        Mask rest = c;
        while (rest) {
          int bi = std::countr_zero(rest);
          rest &= rest - 1;
          image |= d.images[bi];
        }
        if (!i_x.contains(image)) return false;
        break;
      }
      case RingHomDescriptor::Flavor::SUM_OF_VARS: {
        // a variable with empty fiber maps to 0; then the image vanishes
        bool vanishes = false;
        std::vector<Mask> fibers;
        Mask rest = c;
        while (rest) {
          int bi = std::countr_zero(rest);
          rest &= rest - 1;
          if (d.images[bi] == 0) { vanishes = true; break; }
          fibers.push_back(d.images[bi]);
        }
        if (vanishes) break;
        // every transversal monomial of the expanded product must lie in I_X
        std::vector<std::size_t> pick(fibers.size(), 0);
        bool ok = true;
        while (ok) {
          Mask m = 0;
          for (std::size_t k = 0; k < fibers.size(); ++k) {
            Mask fr = fibers[k];
            for (std::size_t j = 0; j < pick[k]; ++j) fr &= fr - 1;
            m |= bit(std::countr_zero(fr));
          }
          if (!i_x.contains(m)) { ok = false; break; }
          std::size_t k = fibers.size();
          bool done = true;
          while (k > 0) {
            --k;
            if (++pick[k] < static_cast<std::size_t>(popcount(fibers[k]))) {
              done = false;
              break;
            }
            pick[k] = 0;
          }
          if (done) break;
        }
        if (!ok) return false;
        break;
      }
    }
  }
  return true;
}

RingHomDescriptor compose_descriptors(const RingHomDescriptor& second,
                                      const RingHomDescriptor& first) {
  if (second.flavor != first.flavor)
    throw std::invalid_argument("descriptor flavor mismatch");
  if (!first.target_ring.same_sequence(second.source_ring))
    throw std::invalid_argument("descriptor rings do not chain");
  RingHomDescriptor out;
  out.flavor = first.flavor;
  out.source_ring = first.source_ring;
  out.target_ring = second.target_ring;
  out.images.resize(first.images.size());
  for (std::size_t i = 0; i < first.images.size(); ++i) {
    Mask m = 0;
    Mask rest = first.images[i];
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      m |= second.images[v];
    }
    out.images[i] = m;
  }
  return out;
}

std::string render_ring_hom(const RingHomDescriptor& d, char source_prefix,
                            char target_prefix) {
  std::string out;
  for (int bi : d.source_ring.sorted_order()) {
    if (!out.empty()) out += "\n";
    out += source_prefix;
    out += "_" + d.source_ring.label(bi) + " -> ";
    Mask img = d.images[bi];
    if (img == 0) {
      out += d.flavor == RingHomDescriptor::Flavor::SUM_OF_VARS ? "0" : "1";
    } else {
      const char* sep =
          d.flavor == RingHomDescriptor::Flavor::SUM_OF_VARS ? "+" : "*";
      bool first = true;
      for (const auto& l : d.target_ring.mask_labels(img)) {
        if (!first) out += sep;
        first = false;
        out += target_prefix;
        out += "_" + l;
      }
    }
  }
  return out;
}

MorphismWitness compose_morphisms(const MorphismWitness& m1,
                                  const MorphismWitness& m2) {
  if (m1.category != m2.category)
    throw std::invalid_argument("morphism category mismatch");
  if (!(m1.target == m2.source))
    throw std::invalid_argument("morphism endpoints do not chain");
  SetMap composed = m1.category == Category::SC2
                        ? compose(m1.map, m2.map)  // maps run backwards
                        : compose(m2.map, m1.map);
  return MorphismWitness{m1.category, std::move(composed), m1.source,
                         m2.target};
}

}  // namespace srcx
