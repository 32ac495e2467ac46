#ifndef SRCX_ORACLE_HPP
#define SRCX_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "srcx/adjoints.hpp"
#include "srcx/complex.hpp"
#include "srcx/setmap.hpp"

namespace srcx::oracle {

/// Brute-force reference layer. Everything here works on explicit
/// indicator vectors over the full power set and shares no shortcuts with
/// the facet-level algorithms; it exists to cross-examine them.

// splitmix64 finalizer; the seed policy everywhere: draw k for stream
// item i as mix64(seed ^ (golden * (i + 1)))
std::uint64_t mix64(std::uint64_t x);

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next();
  // uniform in [0, 1)
  double next_unit();
  // uniform in [0, n)
  std::uint32_t next_below(std::uint32_t n);
};

/// A down-set in the Boolean lattice of a vertex set, as a full indicator
/// over all 2^n subsets. Guarded at 12 vertices.
class DownSetFamily {
public:
  explicit DownSetFamily(VertexSet ground);
  static DownSetFamily of_complex(const SimplicialComplex& x);

  const VertexSet& ground() const { return ground_; }
  bool member(Mask s) const { return member_[s]; }
  void insert_downward(Mask s);  // s and all its subsets

  bool is_down_closed() const;
  SimplicialComplex to_complex() const;

  bool operator==(const DownSetFamily& o) const;

private:
  VertexSet ground_;
  std::vector<bool> member_;
};

// Literal definitional reading of the five functors: filters and
// generated down-sets over the whole power set, no facet shortcuts.
DownSetFamily definitional_functor(Functor kind, const SetMap& f,
                                   const DownSetFamily& z);

/// One single-hat functor of a set map, as a monotone map on subsets:
/// SHRIEK is the image, STAR the preimage, UPPER the core.
enum class Hat { SHRIEK, STAR, UPPER };

// The composite (f^p)^q obtained by running the cut construction one hat
// level up on the subset map f^p. Input lives on the domain of the
// q-lift: on A for q in {SHRIEK, UPPER} when p is SHRIEK/UPPER (output on
// B), and so on; directions compose like the five-sequence.
DownSetFamily singlehat_composite(Hat p, Hat q, const SetMap& f,
                                  const DownSetFamily& z);

// deterministic pseudo-random complex: subset S enters with probability
// density^(|S|+1), then the family is closed downward; density 0 gives
// the void complex, density 1 the full simplex
SimplicialComplex random_complex(const VertexSet& a, std::uint64_t seed,
                                 double density);

struct AuditReport {
  int trials = 0;
  int failures = 0;
  std::string first_failure;  // empty when clean

  bool clean() const { return failures == 0; }
};

// Samples (X, Y) pairs and checks the four adjunction biconditionals,
// the unit/counit inclusions, and the solution intervals of the middle
// functors. `corrupt` perturbs one functor output per trial; the report
// must then show failures (harness self-test).
AuditReport adjunction_audit(const SetMap& f, int trials, std::uint64_t seed,
                             bool corrupt = false);

}  // namespace srcx::oracle

#endif
