#include "srcx/setmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace srcx {

SetMap::SetMap(VertexSet domain, VertexSet codomain, std::vector<int> targets)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      targets_(std::move(targets)) {
  if (targets_.size() != domain_.size())
    throw std::invalid_argument("map is not total on the domain");
  fibers_.assign(codomain_.size(), 0);
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    int t = targets_[i];
    if (t < 0 || t >= static_cast<int>(codomain_.size()))
      throw std::invalid_argument("map target out of range");
    fibers_[t] |= bit(static_cast<int>(i));
    range_ |= bit(t);
  }
}

static std::vector<int> targets_from_pairs(
    const VertexSet& domain, const VertexSet& codomain,
    const std::vector<std::pair<std::string, std::string>>& assignment) {
  std::vector<int> targets(domain.size(), -1);
  for (const auto& [from, to] : assignment) {
    int i = domain.index_of(from);
    if (i < 0) throw std::invalid_argument("unknown domain label: " + from);
    int j = codomain.index_of(to);
    if (j < 0) throw std::invalid_argument("unknown codomain label: " + to);
    if (targets[i] != -1)
      throw std::invalid_argument("label mapped twice: " + from);
    targets[i] = j;
  }
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (targets[i] == -1)
      throw std::invalid_argument("map misses domain label: " +
                                  domain.label(static_cast<int>(i)));
  return targets;
}

SetMap::SetMap(VertexSet domain, VertexSet codomain,
               const std::vector<std::pair<std::string, std::string>>& assignment)
    : SetMap(domain, codomain, targets_from_pairs(domain, codomain, assignment)) {}

SetMap SetMap::identity(const VertexSet& a) {
  std::vector<int> t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) t[i] = static_cast<int>(i);
  return SetMap(a, a, std::move(t));
}

SetMap SetMap::inclusion(const VertexSet& a, const VertexSet& b) {
  std::vector<int> t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    int j = b.index_of(a.label(static_cast<int>(i)));
    if (j < 0)
      throw std::invalid_argument("inclusion target misses label: " +
                                  a.label(static_cast<int>(i)));
    t[i] = j;
  }
  return SetMap(a, b, std::move(t));
}

Mask SetMap::image_mask(Mask d) const {
  Mask out = 0;
  while (d) {
    int v = std::countr_zero(d);
    d &= d - 1;
    out |= bit(targets_[v]);
  }
  return out;
}

Mask SetMap::preimage_mask(Mask c) const {
  Mask out = 0;
  Mask rest = c;
  while (rest) {
    int b = std::countr_zero(rest);
    rest &= rest - 1;
    out |= fibers_[b];
  }
  return out;
}

Mask SetMap::core_mask(Mask d) const {
  Mask out = 0;
  for (std::size_t b = 0; b < codomain_.size(); ++b)
    if (contains(d, fibers_[b])) out |= bit(static_cast<int>(b));
  return out;
}

Subset SetMap::image(const Subset& d) const {
  if (!d.over().same_sequence(domain_))
    throw std::invalid_argument("subset not over the domain");
  return Subset(codomain_, image_mask(d.bits()));
}

Subset SetMap::preimage(const Subset& c) const {
  if (!c.over().same_sequence(codomain_))
    throw std::invalid_argument("subset not over the codomain");
  return Subset(domain_, preimage_mask(c.bits()));
}

Subset SetMap::core(const Subset& d) const {
  if (!d.over().same_sequence(domain_))
    throw std::invalid_argument("subset not over the domain");
  return Subset(codomain_, core_mask(d.bits()));
}

bool SetMap::is_injective() const {
  for (Mask f : fibers_)
    if (popcount(f) > 1) return false;
  return true;
}

std::pair<SetMap, SetMap> SetMap::factorize() const {
  std::vector<std::string> image_labels;
  for (std::size_t b = 0; b < codomain_.size(); ++b)
    if (range_ & bit(static_cast<int>(b)))
      image_labels.push_back(codomain_.label(static_cast<int>(b)));
  VertexSet image_set(image_labels);
  std::vector<int> s_targets(domain_.size());
  for (std::size_t i = 0; i < domain_.size(); ++i)
    s_targets[i] = image_set.index_of(codomain_.label(targets_[i]));
  SetMap s(domain_, image_set, std::move(s_targets));
  SetMap incl = SetMap::inclusion(image_set, codomain_);
  return {std::move(s), std::move(incl)};
}

std::vector<SetMap> SetMap::sections() const {
  if (!is_surjective())
    throw std::invalid_argument("sections require a surjective map");
  std::size_t m = codomain_.size();
  // fiber elements in domain label order, per codomain label
  std::vector<std::vector<int>> choices(m);
  for (std::size_t b = 0; b < m; ++b) {
    Mask f = fibers_[b];
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      choices[b].push_back(v);
    }
  }
  std::vector<SetMap> out;
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    std::vector<int> t(m);
    for (std::size_t b = 0; b < m; ++b) t[b] = choices[b][pick[b]];
    out.emplace_back(codomain_, domain_, std::move(t));
    // odometer increment, least significant at the last codomain label
    std::size_t b = m;
    bool done = true;
    while (b > 0) {
      --b;
      if (++pick[b] < choices[b].size()) { done = false; break; }
      pick[b] = 0;
    }
    if (done) return out;
  }
}

bool SetMap::is_section_of(const SetMap& f) const {
  if (!domain_.same_sequence(f.codomain()) ||
      !codomain_.same_sequence(f.domain()))
    return false;
  for (std::size_t b = 0; b < domain_.size(); ++b)
    if (f.target(targets_[b]) != static_cast<int>(b)) return false;
  return true;
}

SetMap compose(const SetMap& g, const SetMap& f) {
  if (!f.codomain().same_sequence(g.domain()))
    throw std::invalid_argument("composition endpoint mismatch");
  std::vector<int> t(f.domain().size());
  for (std::size_t i = 0; i < f.domain().size(); ++i)
    t[i] = g.target(f.target(static_cast<int>(i)));
  return SetMap(f.domain(), g.codomain(), std::move(t));
}

}  // namespace srcx
