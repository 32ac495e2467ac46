#ifndef SRCX_TEST_HELPERS_HPP
#define SRCX_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "srcx/complex.hpp"
#include "srcx/setmap.hpp"

namespace srcx::testing {

inline VertexSet vs(std::vector<std::string> labels) {
  return VertexSet(std::move(labels));
}

// facets by label; {} = void, {{}} = {emptyset}
inline SimplicialComplex cx(const VertexSet& v,
                            const std::vector<std::vector<std::string>>& fs) {
  std::vector<Mask> masks;
  for (const auto& f : fs) {
    Mask m = 0;
    for (const auto& l : f) m |= bit(v.index_of(l));
    masks.push_back(m);
  }
  return SimplicialComplex::from_facets(v, std::move(masks));
}

inline SetMap mk_map(
    const VertexSet& dom, const VertexSet& cod,
    const std::vector<std::pair<std::string, std::string>>& assignment) {
  return SetMap(dom, cod, assignment);
}

// every simplicial complex on v (down-set enumeration); |v| <= 4
inline std::vector<SimplicialComplex> all_complexes(const VertexSet& v) {
  int n = static_cast<int>(v.size());
  int subsets = 1 << n;
  std::vector<SimplicialComplex> out;
  for (std::uint32_t ind = 0; ind < (std::uint32_t{1} << subsets); ++ind) {
    bool closed = true;
    for (int s = 0; s < subsets && closed; ++s) {
      if (!(ind & (std::uint32_t{1} << s))) continue;
      for (int i = 0; i < n; ++i)
        if ((s & (1 << i)) && !(ind & (std::uint32_t{1} << (s & ~(1 << i))))) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    std::vector<Mask> members;
    for (int s = 0; s < subsets; ++s)
      if (ind & (std::uint32_t{1} << s)) members.push_back(static_cast<Mask>(s));
    out.push_back(SimplicialComplex::from_facets(v, std::move(members)));
  }
  return out;
}

// every set map between the two vertex sets
inline std::vector<SetMap> all_maps(const VertexSet& a, const VertexSet& b) {
  std::vector<SetMap> out;
  std::vector<int> targets(a.size(), 0);
  while (true) {
    out.emplace_back(a, b, targets);
    std::size_t k = 0;
    for (; k < targets.size(); ++k) {
      if (++targets[k] < static_cast<int>(b.size())) break;
      targets[k] = 0;
    }
    if (k == targets.size()) break;
  }
  return out;
}

inline VertexSet numbered(const char* stem, int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(stem + std::to_string(i));
  return VertexSet(std::move(labels));
}

}  // namespace srcx::testing

#endif
