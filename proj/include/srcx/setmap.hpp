#ifndef SRCX_SETMAP_HPP
#define SRCX_SETMAP_HPP

#include <string>
#include <utility>
#include <vector>

#include "srcx/complex.hpp"

namespace srcx {

/// A total function between two vertex sets. Fibers over labels outside
/// the image are empty and first-class: they matter for cores.
class SetMap {
public:
  SetMap(VertexSet domain, VertexSet codomain, std::vector<int> targets);
  // assignment given as domain-label -> codomain-label pairs; must be total
  SetMap(VertexSet domain, VertexSet codomain,
         const std::vector<std::pair<std::string, std::string>>& assignment);

  static SetMap identity(const VertexSet& a);
  // the inclusion of a into b (every label of a must appear in b)
  static SetMap inclusion(const VertexSet& a, const VertexSet& b);

  const VertexSet& domain() const { return domain_; }
  const VertexSet& codomain() const { return codomain_; }
  int target(int i) const { return targets_[i]; }

  Mask image_mask(Mask d) const;
  Mask preimage_mask(Mask c) const;
  // largest C with f^{-1}(C) contained in D; contains every empty fiber
  Mask core_mask(Mask d) const;
  Mask fiber(int b) const { return fibers_[b]; }
  Mask range_mask() const { return range_; }  // f(A) as a subset of B

  Subset image(const Subset& d) const;
  Subset preimage(const Subset& c) const;
  Subset core(const Subset& d) const;

  bool is_injective() const;
  bool is_surjective() const { return range_ == codomain_.full_mask(); }

  // (surjection onto the image, inclusion of the image); recomposes to *this
  std::pair<SetMap, SetMap> factorize() const;

  // all sections s with f o s = id, for surjective f; lexicographic in
  // codomain label order, fiber elements taken in domain label order
  std::vector<SetMap> sections() const;
  bool is_section_of(const SetMap& f) const;

private:
  VertexSet domain_;
  VertexSet codomain_;
  std::vector<int> targets_;
  std::vector<Mask> fibers_;
  Mask range_ = 0;
};

// g after f
SetMap compose(const SetMap& g, const SetMap& f);

}  // namespace srcx

#endif
