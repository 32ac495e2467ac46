#include "srcx/ideals.hpp"

#include <stdexcept>
#include <string>

namespace srcx {

SqfIdeal::SqfIdeal(VertexSet ring, std::vector<Mask> generators)
    : ring_(std::move(ring)) {
  Mask full = ring_.full_mask();
  for (Mask g : generators)
    if (g & ~full) throw std::invalid_argument("generator outside the ring");
  gens_ = detail::minimal_antichain(std::move(generators));
  detail::canonical_sort(ring_, gens_);
}

std::vector<Subset> SqfIdeal::generators() const {
  std::vector<Subset> out;
  out.reserve(gens_.size());
  for (Mask g : gens_) out.emplace_back(ring_, g);
  return out;
}

bool SqfIdeal::contains(Mask support) const {
  for (Mask g : gens_)
    if (srcx::contains(support, g)) return true;
  return false;
}

bool SqfIdeal::contains(const Subset& support) const {
  if (!support.over().same_sequence(ring_))
    throw std::invalid_argument("monomial over a different ring");
  return contains(support.bits());
}

bool SqfIdeal::operator==(const SqfIdeal& o) const {
  if (!(ring_ == o.ring_) || gens_.size() != o.gens_.size()) return false;
  if (ring_.same_sequence(o.ring_)) return gens_ == o.gens_;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (ring_.mask_labels(gens_[i]) != o.ring_.mask_labels(o.gens_[i]))
      return false;
  return true;
}

SqfIdeal sr_ideal(const SimplicialComplex& x) {
  return SqfIdeal(x.vertices(), x.cofacet_masks());
}

SimplicialComplex complex_of_ideal(const SqfIdeal& i) {
  return SimplicialComplex::from_cofacets(i.ring(), i.generator_masks());
}

static void require_same_ring(const SqfIdeal& i, const SqfIdeal& j) {
  if (!i.ring().same_sequence(j.ring()))
    throw std::invalid_argument("ideals over different rings");
}

SqfIdeal sum(const SqfIdeal& i, const SqfIdeal& j) {
  require_same_ring(i, j);
  std::vector<Mask> gens = i.generator_masks();
  const auto& g2 = j.generator_masks();
  gens.insert(gens.end(), g2.begin(), g2.end());
  return SqfIdeal(i.ring(), std::move(gens));
}

SqfIdeal product(const SqfIdeal& i, const SqfIdeal& j) {
  require_same_ring(i, j);
  std::vector<Mask> gens;
  for (Mask a : i.generator_masks())
    for (Mask b : j.generator_masks()) gens.push_back(a | b);
  return SqfIdeal(i.ring(), std::move(gens));
}

SqfIdeal intersect(const SqfIdeal& i, const SqfIdeal& j) {
  require_same_ring(i, j);
  std::vector<Mask> gens;
  for (Mask a : i.generator_masks())
    for (Mask b : j.generator_masks()) gens.push_back(a | b);  // lcm
  return SqfIdeal(i.ring(), std::move(gens));
}

SqfIdeal colon(const SqfIdeal& i, Mask monomial_support) {
  std::vector<Mask> gens;
  for (Mask g : i.generator_masks()) gens.push_back(g & ~monomial_support);
  return SqfIdeal(i.ring(), std::move(gens));
}

SqfIdeal contract(const SqfIdeal& i, const Subset& sub) {
  if (!sub.over().same_sequence(i.ring()))
    throw std::invalid_argument("contraction set over a different ring");
  VertexSet small(sub.members());
  std::vector<Mask> gens;
  for (Mask g : i.generator_masks()) {
    if (g & ~sub.bits()) continue;
    Mask m = 0;
    Mask rest = g;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      m |= bit(small.index_of(i.ring().label(v)));
    }
    gens.push_back(m);
  }
  return SqfIdeal(std::move(small), std::move(gens));
}

SqfIdeal extend(const SqfIdeal& i, const VertexSet& ring) {
  std::vector<Mask> gens;
  for (Mask g : i.generator_masks()) {
    Mask m = 0;
    Mask rest = g;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int j = ring.index_of(i.ring().label(v));
      if (j < 0) throw std::invalid_argument("extension ring misses a variable");
      m |= bit(j);
    }
    gens.push_back(m);
  }
  return SqfIdeal(ring, std::move(gens));
}

SqfIdeal injection_dictionary(const SetMap& f, Functor kind,
                              const SqfIdeal& input) {
  if (!f.is_injective())
    throw std::invalid_argument("injection_dictionary requires an injective map");
  const VertexSet& b = f.codomain();
  Mask range = f.range_mask();
  Mask e_mask = b.full_mask() & ~range;
  // re-house I_X on B with variables renamed along f
  auto push = [&](const SqfIdeal& ix) {
    std::vector<Mask> gens;
    for (Mask g : ix.generator_masks()) gens.push_back(f.image_mask(g));
    return SqfIdeal(b, std::move(gens));
  };
  // pull I over the image variables back to domain names
  auto pull = [&](const SqfIdeal& iy) {
    SqfIdeal over_range = contract(iy, Subset(b, range));
    std::vector<Mask> gens;
    for (Mask g : over_range.generator_masks()) {
      Mask m = 0;
      Mask rest = g;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int bi = b.index_of(over_range.ring().label(v));
        for (std::size_t a = 0; a < f.domain().size(); ++a)
          if (f.target(static_cast<int>(a)) == bi) m |= bit(static_cast<int>(a));
      }
      gens.push_back(m);
    }
    return SqfIdeal(f.domain(), std::move(gens));
  };
  switch (kind) {
    case Functor::EE: {
      // every vertex outside the range is individually a non-face
      std::vector<Mask> evars;
      Mask re = e_mask;
      while (re) { evars.push_back(re & -re); re &= re - 1; }
      return sum(push(input), SqfIdeal(b, std::move(evars)));
    }
    case Functor::SS:
      return push(input);
    case Functor::AA:
      return intersect(push(input), SqfIdeal(b, {e_mask}));
    case Functor::SE:
      return pull(input);
    case Functor::SA:
      return pull(colon(input, e_mask));
  }
  throw std::logic_error("unreachable");
}

static void require_surjective_onto(const SqfIdeal& i, const SetMap& f) {
  if (!f.is_surjective())
    throw std::invalid_argument("operation requires a surjective map");
  if (!i.ring().same_sequence(f.codomain()))
    throw std::invalid_argument("ideal is not over the map codomain");
}

SqfIdeal fiber_substitute(const SqfIdeal& i, const SetMap& f) {
  require_surjective_onto(i, f);
  std::vector<Mask> gens;
  for (Mask g : i.generator_masks()) gens.push_back(f.preimage_mask(g));
  return SqfIdeal(f.domain(), std::move(gens));
}

SqfIdeal fiber_expand(const SqfIdeal& i, const SetMap& f) {
  require_surjective_onto(i, f);
  std::vector<Mask> gens;
  for (Mask g : i.generator_masks()) {
    // all transversals: one element of each fiber over g
    std::vector<Mask> fibers;
    Mask rest = g;
    while (rest) {
      int bi = std::countr_zero(rest);
      rest &= rest - 1;
      fibers.push_back(f.fiber(bi));
    }
    std::vector<Mask> partial = {0};
    for (Mask fib : fibers) {
      std::vector<Mask> next;
      for (Mask p : partial) {
        Mask fr = fib;
        while (fr) {
          int v = std::countr_zero(fr);
          fr &= fr - 1;
          next.push_back(p | bit(v));
        }
      }
      partial = std::move(next);
    }
    gens.insert(gens.end(), partial.begin(), partial.end());
  }
  return SqfIdeal(f.domain(), std::move(gens));
}

SqfIdeal core_ideal(const SqfIdeal& i, const SetMap& f) {
  if (!f.is_surjective())
    throw std::invalid_argument("core_ideal requires a surjective map");
  if (!i.ring().same_sequence(f.domain()))
    throw std::invalid_argument("ideal is not over the map domain");
  // the core is monotone, so the core of each generator is minimal among
  // the cores of its multiples
  std::vector<Mask> gens;
  for (Mask g : i.generator_masks()) gens.push_back(f.core_mask(g));
  return SqfIdeal(f.codomain(), std::move(gens));
}

SqfIdeal transversal_test_ideal(const SqfIdeal& i, const SetMap& f) {
  if (!f.is_surjective())
    throw std::invalid_argument("transversal_test_ideal requires a surjective map");
  if (!i.ring().same_sequence(f.domain()))
    throw std::invalid_argument("ideal is not over the map domain");
  const VertexSet& b = f.codomain();
  if (b.size() > 20)
    throw std::invalid_argument("transversal_test_ideal limited to 20 codomain vertices");
  auto all_transversals_in = [&](Mask c) {
    std::vector<Mask> fibers;
    Mask rest = c;
    while (rest) {
      int bi = std::countr_zero(rest);
      rest &= rest - 1;
      fibers.push_back(f.fiber(bi));
    }
    std::vector<std::size_t> pick(fibers.size(), 0);
    while (true) {
      Mask m = 0;
      for (std::size_t k = 0; k < fibers.size(); ++k) {
        Mask fr = fibers[k];
        for (std::size_t j = 0; j < pick[k]; ++j) fr &= fr - 1;
        m |= bit(std::countr_zero(fr));
      }
      if (!i.contains(m)) return false;
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
      if (done) return true;
    }
  };
  std::vector<Mask> gens;
  Mask full = b.full_mask();
  for (Mask c = 0;; ++c) {
    if (all_transversals_in(c)) gens.push_back(c);
    if (c == full) break;
  }
  return SqfIdeal(b, std::move(gens));
}

std::string render_ideal(const SqfIdeal& i, char prefix) {
  if (i.is_zero()) return "(0)";
  if (i.is_unit()) return "(1)";
  std::string out = "(";
  bool first_gen = true;
  for (Mask g : i.generator_masks()) {
    if (!first_gen) out += ", ";
    first_gen = false;
    bool first_var = true;
    for (const auto& l : i.ring().mask_labels(g)) {
      if (!first_var) out += "*";
      first_var = false;
      out += prefix;
      out += "_";
      out += l;
    }
  }
  out += ")";
  return out;
}

}  // namespace srcx
