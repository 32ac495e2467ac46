#include <doctest.h>

#include "helpers.hpp"
#include "srcx/complex.hpp"
#include "srcx/oracle.hpp"

using namespace srcx;
using testing::all_complexes;
using testing::cx;
using testing::vs;

TEST_CASE("from_facets reduces to the maximal antichain") {
  VertexSet v = vs({"1", "2", "3"});
  SimplicialComplex x = cx(v, {{"1", "2"}, {"1"}, {"3"}});
  CHECK(x.facet_masks().size() == 2);
  CHECK(x.is_face(Subset(v, {"1", "2"})));
  CHECK(x.is_face(Subset(v, {"3"})));
  CHECK_FALSE(x.is_face(Subset(v, {"1", "3"})));

  CHECK(cx(v, {}).is_void());
  CHECK(cx(v, {{}}).is_empty_face_only());
}

TEST_CASE("void complex has no faces at all") {
  VertexSet v = vs({"1"});
  SimplicialComplex x = cx(v, {});
  CHECK_FALSE(x.is_face(Mask{0}));
  CHECK(x.faces().empty());
  CHECK_FALSE(x.dimension().has_value());
  CHECK(cx(v, {{}}).dimension() == -1);
}

TEST_CASE("faces enumerates the down-set in canonical order") {
  VertexSet v = vs({"1", "2", "3"});
  SimplicialComplex x = cx(v, {{"1", "2"}, {"3"}});
  auto faces = x.face_masks();
  CHECK(faces.size() == 5);  // {}, 1, 2, 3, 12
  for (Mask f : faces)
    for (int i = 0; i < 3; ++i)
      if (f & bit(i)) CHECK(x.is_face(f & ~bit(i)));
  CHECK(cx(v, {{}}).face_masks().size() == 1);
}

TEST_CASE("cofacets are the minimal non-faces") {
  VertexSet v = vs({"1", "2", "3"});
  SimplicialComplex x = cx(v, {{"1", "2"}, {"3"}});
  auto cof = x.cofacets();
  REQUIRE(cof.size() == 2);
  CHECK(cof[0] == Subset(v, {"1", "3"}));
  CHECK(cof[1] == Subset(v, {"2", "3"}));
  CHECK(simplex(v).cofacet_masks().empty());
  VertexSet v2 = vs({"1", "2"});
  auto c2 = cx(v2, {{}}).cofacet_masks();
  REQUIRE(c2.size() == 2);  // every vertex
  CHECK(popcount(c2[0]) == 1);
  CHECK(popcount(c2[1]) == 1);
}

TEST_CASE("simplex and boundary") {
  VertexSet v = vs({"1", "2"});
  CHECK(simplex(v).facet_masks() == std::vector<Mask>{0b11});
  SimplicialComplex b = boundary(v);
  CHECK(b == cx(v, {{"1"}, {"2"}}));
  CHECK(boundary(vs({"3"})).is_empty_face_only());
  CHECK(boundary(VertexSet()).is_void());
}

TEST_CASE("restriction filters faces into the sub-vertex set") {
  VertexSet v = vs({"1", "2", "3"});
  SimplicialComplex y = cx(v, {{"1", "3"}, {"2"}});
  SimplicialComplex r = restriction(y, Subset(v, {"1", "2"}));
  CHECK(r == cx(vs({"1", "2"}), {{"1"}, {"2"}}));
  CHECK(restriction(y, Subset(v, v.full_mask())) == y);
  CHECK(restriction(cx(v, {}), Subset(v, {"1"})).is_void());
}

TEST_CASE("link") {
  VertexSet v = vs({"1", "2", "3"});
  SimplicialComplex y = cx(v, {{"1", "3"}, {"2"}});
  CHECK(link(y, Subset(v, {"3"})) == cx(vs({"1", "2"}), {{"1"}}));
  CHECK(link(y, Subset(v, Mask{0})) == y);
  // E a non-face: the link is void
  CHECK(link(y, Subset(v, {"2", "3"})).is_void());
}

TEST_CASE("link identity F in lk <=> F u E in X, exhaustively") {
  VertexSet v = vs({"1", "2", "3", "4"});
  for (const auto& x : all_complexes(v)) {
    for (Mask e = 0; e <= v.full_mask(); ++e) {
      SimplicialComplex lk = link(x, Subset(v, e));
      Mask rest = v.full_mask() & ~e;
      // enumerate F inside the complement of E
      for (Mask f = rest;; f = (f - 1) & rest) {
        Mask lifted = 0;
        // re-house f onto lk's vertex set by labels
        for (int i = 0; i < 4; ++i)
          if (f & bit(i)) lifted |= bit(lk.vertices().index_of(v.label(i)));
        CHECK(lk.is_face(lifted) == x.is_face(f | e));
        if (f == 0) break;
      }
    }
  }
}

TEST_CASE("cone and join") {
  VertexSet v12 = vs({"1", "2"});
  SimplicialComplex j = join(boundary(v12), boundary(vs({"3", "4"})));
  CHECK(j == cx(vs({"1", "2", "3", "4"}),
                {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}}));

  SimplicialComplex c = cone(cx(v12, {{"1"}}), vs({"3"}));
  CHECK(c == cx(vs({"1", "2", "3"}), {{"1", "3"}}));

  // {emptyset} is the join unit; void is absorbing
  SimplicialComplex x = cx(v12, {{"1"}});
  CHECK(join(x, cx(vs({"3"}), {{}})) == cx(vs({"1", "2", "3"}), {{"1"}}));
  CHECK(join(x, cx(vs({"3"}), {})).is_void());
  CHECK_THROWS(join(x, cx(vs({"1"}), {{"1"}})));  // label clash
}

TEST_CASE("alexander dual") {
  VertexSet v = vs({"1", "2", "3"});
  SimplicialComplex x = cx(v, {{"1", "2"}, {"3"}});
  CHECK(alexander_dual(x) == cx(v, {{"1"}, {"2"}}));
  CHECK(alexander_dual(cx(v, {{}})) == boundary(v));
  CHECK(alexander_dual(simplex(v)).is_void());
  CHECK(alexander_dual(cx(v, {})) == simplex(v));
}

TEST_CASE("alexander dual is an involution and flips membership") {
  VertexSet v = vs({"1", "2", "3", "4"});
  for (const auto& x : all_complexes(v)) {
    SimplicialComplex d = alexander_dual(x);
    CHECK(alexander_dual(d) == x);
    for (Mask s = 0; s <= v.full_mask(); ++s)
      CHECK(d.is_face(s) == !x.is_face(v.full_mask() & ~s));
  }
}

TEST_CASE("lattice meet and join") {
  VertexSet v = vs({"1", "2"});
  SimplicialComplex pts = cx(v, {{"1"}});
  CHECK(lattice_meet(simplex(v), pts) == pts);
  CHECK(lattice_join(cx(v, {{"1"}}), cx(v, {{"2"}})) == cx(v, {{"1"}, {"2"}}));
  CHECK(lattice_meet(simplex(v), cx(v, {})).is_void());
}

TEST_CASE("lattice axioms on random triples") {
  oracle::SplitMix rng{2024};
  VertexSet v = testing::numbered("v", 5);
  for (int t = 0; t < 60; ++t) {
    auto x = oracle::random_complex(v, rng.next(), rng.next_unit());
    auto y = oracle::random_complex(v, rng.next(), rng.next_unit());
    auto z = oracle::random_complex(v, rng.next(), rng.next_unit());
    CHECK(lattice_meet(x, x) == x);
    CHECK(lattice_join(x, x) == x);
    CHECK(lattice_meet(x, y) == lattice_meet(y, x));
    CHECK(lattice_join(x, y) == lattice_join(y, x));
    CHECK(lattice_meet(x, lattice_join(x, y)) == x);
    CHECK(lattice_join(x, lattice_meet(x, y)) == x);
    CHECK(lattice_meet(x, lattice_meet(y, z)) ==
          lattice_meet(lattice_meet(x, y), z));
    // meet/join really are face-set intersection/union
    for (Mask s = 0; s <= v.full_mask(); ++s) {
      CHECK(lattice_meet(x, y).is_face(s) == (x.is_face(s) && y.is_face(s)));
      CHECK(lattice_join(x, y).is_face(s) == (x.is_face(s) || y.is_face(s)));
    }
  }
}

TEST_CASE("support, cosupport, dimension") {
  VertexSet v = vs({"1", "2", "3"});
  SimplicialComplex x = cx(v, {{"1", "2"}, {"3"}});
  CHECK(x.support() == Subset(v, {"1", "2", "3"}));
  CHECK(x.dimension() == 1);
  CHECK(simplex(v).cosupport() == Subset(v, v.full_mask()));
  CHECK(cx(v, {{}}).support() == Subset(v, Mask{0}));
}

TEST_CASE("facets/cofacets determine each other through the dual") {
  VertexSet v = vs({"1", "2", "3", "4"});
  oracle::SplitMix rng{77};
  for (int t = 0; t < 50; ++t) {
    auto x = oracle::random_complex(v, rng.next(), rng.next_unit());
    CHECK(SimplicialComplex::from_cofacets(v, x.cofacet_masks()) == x);
    // facets of the dual are complements of cofacets
    std::vector<Mask> comp;
    for (Mask c : x.cofacet_masks()) comp.push_back(v.full_mask() & ~c);
    detail::canonical_sort(v, comp);
    CHECK(alexander_dual(x).facet_masks() == comp);
  }
}

TEST_CASE("vertex set validation") {
  CHECK_THROWS(vs({"a", "a"}));
  CHECK_THROWS(vs({""}));
  CHECK_THROWS(vs({"a b"}));
  CHECK_THROWS(vs({"x->y"}));
  CHECK_NOTHROW(vs({"(1,a)"}));  // cartesian pair labels are legal
  std::vector<std::string> big(25, "");
  for (int i = 0; i < 25; ++i) big[i] = "v" + std::to_string(i);
  CHECK_THROWS(VertexSet(big));
}

TEST_CASE("rehouse keeps faces, mask_less orders canonically") {
  VertexSet small = vs({"b", "a"});
  VertexSet big = vs({"a", "b", "c"});
  SimplicialComplex x = cx(small, {{"b"}});
  SimplicialComplex r = rehouse(x, big);
  CHECK(r.is_face(Subset(big, {"b"})));
  CHECK_FALSE(r.is_face(Subset(big, {"c"})));
  // lexicographic member-list order: {a c} < {b}
  Mask ac = bit(big.index_of("a")) | bit(big.index_of("c"));
  CHECK(mask_less(big, ac, bit(big.index_of("b"))));
}
