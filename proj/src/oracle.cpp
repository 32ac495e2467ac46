#include "srcx/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace srcx::oracle {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr int kOracleGuard = 12;
}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t SplitMix::next() {
  state += kGolden;
  std::uint64_t x = state;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double SplitMix::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint32_t SplitMix::next_below(std::uint32_t n) {
  return static_cast<std::uint32_t>(next() % n);
}

DownSetFamily::DownSetFamily(VertexSet ground) : ground_(std::move(ground)) {
  if (ground_.size() > kOracleGuard)
    throw std::invalid_argument("oracle ground set exceeds 12 vertices");
  member_.assign(std::size_t{1} << ground_.size(), false);
}

DownSetFamily DownSetFamily::of_complex(const SimplicialComplex& x) {
  DownSetFamily f(x.vertices());
  Mask full = x.vertices().full_mask();
  for (Mask s = 0;; ++s) {
    f.member_[s] = x.is_face(s);
    if (s == full) break;
  }
  return f;
}

void DownSetFamily::insert_downward(Mask s) {
  // iterate all subsets of s
  Mask sub = s;
  while (true) {
    member_[sub] = true;
    if (sub == 0) break;
    sub = (sub - 1) & s;
  }
}

bool DownSetFamily::is_down_closed() const {
  Mask full = ground_.full_mask();
  for (Mask s = 0;; ++s) {
    if (member_[s]) {
      Mask r = s;
      while (r) {
        int i = std::countr_zero(r);
        r &= r - 1;
        if (!member_[s & ~bit(i)]) return false;
      }
    }
    if (s == full) break;
  }
  return true;
}

SimplicialComplex DownSetFamily::to_complex() const {
  std::vector<Mask> members;
  Mask full = ground_.full_mask();
  for (Mask s = 0;; ++s) {
    if (member_[s]) members.push_back(s);
    if (s == full) break;
  }
  return SimplicialComplex::from_facets(ground_, std::move(members));
}

bool DownSetFamily::operator==(const DownSetFamily& o) const {
  return ground_.same_sequence(o.ground_) && member_ == o.member_;
}

DownSetFamily definitional_functor(Functor kind, const SetMap& f,
                                   const DownSetFamily& z) {
  const VertexSet& a = f.domain();
  const VertexSet& b = f.codomain();
  const VertexSet& in = forward_direction(kind) ? a : b;
  const VertexSet& out = forward_direction(kind) ? b : a;
  if (!z.ground().same_sequence(in))
    throw std::invalid_argument("family on the wrong ground set");
  DownSetFamily r(out);
  Mask in_full = in.full_mask();
  Mask out_full = out.full_mask();
  switch (kind) {
    case Functor::EE:
      for (Mask d = 0;; ++d) {
        if (z.member(d)) r.insert_downward(f.image_mask(d));
        if (d == in_full) break;
      }
      break;
    case Functor::SE:
      for (Mask t = 0;; ++t) {
        if (z.member(f.image_mask(t))) r.insert_downward(t);
        if (t == out_full) break;
      }
      break;
    case Functor::SS:
      for (Mask c = 0;; ++c) {
        if (z.member(f.preimage_mask(c))) r.insert_downward(c);
        if (c == out_full) break;
      }
      break;
    case Functor::SA:
      for (Mask t = 0;; ++t) {
        if (z.member(f.core_mask(t))) r.insert_downward(t);
        if (t == out_full) break;
      }
      break;
    case Functor::AA: {
      // C fails exactly when some D with core(D) = C is missing from X
      std::vector<bool> bad(std::size_t{1} << out.size(), false);
      for (Mask d = 0;; ++d) {
        if (!z.member(d)) bad[f.core_mask(d)] = true;
        if (d == in_full) break;
      }
      for (Mask c = 0;; ++c) {
        if (!bad[c]) r.insert_downward(c);
        if (c == out_full) break;
      }
      break;
    }
  }
  return r;
}

DownSetFamily singlehat_composite(Hat p, Hat q, const SetMap& f,
                                  const DownSetFamily& z) {
  // the subset-level map g = f^p with its (domain, codomain) grounds
  std::function<Mask(Mask)> g;
  const VertexSet* gdom;
  const VertexSet* gcod;
  switch (p) {
    case Hat::SHRIEK:
      g = [&f](Mask s) { return f.image_mask(s); };
      gdom = &f.domain();
      gcod = &f.codomain();
      break;
    case Hat::STAR:
      g = [&f](Mask s) { return f.preimage_mask(s); };
      gdom = &f.codomain();
      gcod = &f.domain();
      break;
    case Hat::UPPER:
      g = [&f](Mask s) { return f.core_mask(s); };
      gdom = &f.domain();
      gcod = &f.codomain();
      break;
  }
  const VertexSet& in = q == Hat::STAR ? *gcod : *gdom;
  const VertexSet& out = q == Hat::STAR ? *gdom : *gcod;
  if (!z.ground().same_sequence(in))
    throw std::invalid_argument("family on the wrong ground set");
  DownSetFamily r(out);
  Mask in_full = in.full_mask();
  switch (q) {
    case Hat::SHRIEK:
      // down-set generated by the images of the members
      for (Mask s = 0;; ++s) {
        if (z.member(s)) r.insert_downward(g(s));
        if (s == in_full) break;
      }
      break;
    case Hat::STAR: {
      // pullback: s ranges over the codomain of the lifted operator
      Mask out_full = out.full_mask();
      for (Mask s = 0;; ++s) {
        if (z.member(g(s))) r.insert_downward(s);
        if (s == out_full) break;
      }
      break;
    }
    case Hat::UPPER: {
      // complement of the up-set generated by the images of non-members
      std::vector<bool> excluded(std::size_t{1} << out.size(), false);
      for (Mask s = 0;; ++s) {
        if (!z.member(s)) excluded[g(s)] = true;
        if (s == in_full) break;
      }
      Mask out_full = out.full_mask();
      for (Mask t = 0;; ++t) {
        bool above = false;
        Mask sub = t;
        while (true) {
          if (excluded[sub]) { above = true; break; }
          if (sub == 0) break;
          sub = (sub - 1) & t;
        }
        if (!above) r.insert_downward(t);
        if (t == out_full) break;
      }
      break;
    }
  }
  return r;
}

SimplicialComplex random_complex(const VertexSet& a, std::uint64_t seed,
                                 double density) {
  if (a.size() > kOracleGuard)
    throw std::invalid_argument("random_complex ground set exceeds 12");
  if (density < 0.0) density = 0.0;
  if (density > 1.0) density = 1.0;
  std::vector<Mask> picked;
  Mask full = a.full_mask();
  for (Mask s = 0;; ++s) {
    double u = static_cast<double>(mix64(seed ^ (kGolden * (s + 1))) >> 11) *
               0x1.0p-53;
    if (density == 1.0 || u < std::pow(density, popcount(s) + 1))
      picked.push_back(s);
    if (s == full) break;
  }
  return SimplicialComplex::from_facets(a, std::move(picked));
}

namespace {

// grow the complex by one facet when possible, else shrink it; either way
// the result differs from the input
SimplicialComplex mutate_complex(const SimplicialComplex& x, SplitMix& rng) {
  std::vector<Mask> cofs = x.cofacet_masks();
  if (!cofs.empty()) {
    std::vector<Mask> facets = x.facet_masks();
    facets.push_back(cofs[rng.next_below(static_cast<std::uint32_t>(cofs.size()))]);
    return SimplicialComplex::from_facets(x.vertices(), std::move(facets));
  }
  return boundary(x.vertices());  // x was the full simplex
}

struct AuditContext {
  const SetMap& f;
  AuditReport& report;
  int trial;

  void fail(const std::string& what) {
    ++report.failures;
    if (report.first_failure.empty())
      report.first_failure = "trial " + std::to_string(trial) + ": " + what;
  }

  // left adjoint output and right adjoint must satisfy the biconditional
  // L(p) <= q  iff  p <= R(q), plus the unit/counit inclusions
  void check_pair(Functor l, Functor r, const SimplicialComplex& p,
                  const SimplicialComplex& q) {
    SimplicialComplex lp = apply(l, f, p);
    SimplicialComplex rq = apply(r, f, q);
    if (subcomplex(lp, q) != subcomplex(p, rq))
      fail(std::string(functor_tag(l)) + "/" + functor_tag(r) +
           " biconditional");
    if (!subcomplex(apply(l, f, rq), q))
      fail(std::string(functor_tag(l)) + "/" + functor_tag(r) + " counit");
    if (!subcomplex(p, apply(r, f, lp)))
      fail(std::string(functor_tag(l)) + "/" + functor_tag(r) + " unit");
  }

  // the solutions of middle(Z) = target form [lower, upper]
  void check_interval(Functor middle, const SimplicialComplex& z) {
    SimplicialComplex target = apply(middle, f, z);
    FiberInterval iv = fiber_interval(middle, f, target);
    if (iv.empty) {
      fail(std::string(functor_tag(middle)) + " interval empty");
      return;
    }
    if (!subcomplex(iv.lower, z) || !subcomplex(z, iv.upper))
      fail(std::string(functor_tag(middle)) + " interval membership");
    if (!(apply(middle, f, iv.lower) == target) ||
        !(apply(middle, f, iv.upper) == target))
      fail(std::string(functor_tag(middle)) + " interval endpoints");
  }
};

}  // namespace

AuditReport adjunction_audit(const SetMap& f, int trials, std::uint64_t seed,
                             bool corrupt) {
  AuditReport report;
  SplitMix rng{seed};
  for (int t = 0; t < trials; ++t) {
    ++report.trials;
    SimplicialComplex x =
        random_complex(f.domain(), rng.next(), rng.next_unit());
    SimplicialComplex y =
        random_complex(f.codomain(), rng.next(), rng.next_unit());
    AuditContext ctx{f, report, t};
    if (corrupt) {
      // feed a falsified left-adjoint value through the ee/se law; the
      // audit must notice
      SimplicialComplex eex = apply(Functor::EE, f, x);
      SimplicialComplex fake = mutate_complex(eex, rng);
      bool grew = !subcomplex(fake, eex);
      const SimplicialComplex& probe = grew ? eex : fake;
      if (subcomplex(fake, probe) != subcomplex(x, apply(Functor::SE, f, probe)))
        ctx.fail("corrupted ee detected");
      continue;
    }
    ctx.check_pair(Functor::EE, Functor::SE, x, y);
    ctx.check_pair(Functor::SE, Functor::SS, y, x);
    ctx.check_pair(Functor::SS, Functor::SA, x, y);
    ctx.check_pair(Functor::SA, Functor::AA, y, x);
    ctx.check_interval(Functor::SE, y);
    ctx.check_interval(Functor::SS, x);
    ctx.check_interval(Functor::SA, y);
  }
  return report;
}

}  // namespace srcx::oracle
