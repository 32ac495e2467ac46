#include <doctest.h>

#include "helpers.hpp"
#include "srcx/categories.hpp"
#include "srcx/oracle.hpp"

using namespace srcx;
using testing::cx;
using testing::mk_map;
using testing::vs;

namespace {
SetMap two_fiber_map() {
  return mk_map(vs({"1", "2", "3"}), vs({"a", "b"}),
                {{"1", "a"}, {"2", "a"}, {"3", "b"}});
}
}  // namespace

TEST_CASE("morphism validation per category") {
  SetMap f = two_fiber_map();
  SimplicialComplex x = cx(f.domain(), {{"1", "2"}, {"3"}});
  SimplicialComplex y = cx(f.codomain(), {{"a"}, {"b"}});

  CHECK(is_morphism(Category::SC1, f, x, y));
  CHECK(is_morphism(Category::SC0, f, x, y));

  // the boundary join of the fibers maps to {emptyset} in SC1
  SimplicialComplex bj = cx(f.domain(), {{"1"}, {"2"}});
  SimplicialComplex pt = cx(f.codomain(), {{}});
  CHECK(is_morphism(Category::SC1, f, bj, pt));
  CHECK_FALSE(bj.is_void());
  CHECK_FALSE(is_morphism(Category::SC0, f, bj, pt));

  SetMap id = SetMap::identity(f.domain());
  SimplicialComplex bigger = cx(f.domain(), {{"1", "2"}, {"2", "3"}});
  CHECK(is_morphism(Category::SC0, id, x, bigger));
  CHECK(is_morphism(Category::SC1, id, x, bigger));
  CHECK(is_morphism(Category::SC2, id, x, bigger));

  // SC2 carries g : B -> A; X on A must sit inside g^{**}(Y)
  SetMap g = mk_map(f.codomain(), f.domain(), {{"a", "1"}, {"b", "3"}});
  CHECK(is_morphism(Category::SC2, g, x, y));

  CHECK_THROWS(is_morphism(Category::SC1, f, y, y));
}

TEST_CASE("ring homomorphism descriptors") {
  SetMap f = two_fiber_map();

  RingHomDescriptor sc1 = ring_hom(Category::SC1, f);
  CHECK(sc1.flavor == RingHomDescriptor::Flavor::SQUAREFREE_MONOMIAL);
  CHECK(render_ring_hom(sc1) == "y_a -> x_1*x_2\ny_b -> x_3");

  RingHomDescriptor sc0 = ring_hom(Category::SC0, f);
  CHECK(render_ring_hom(sc0) == "y_a -> x_1+x_2\ny_b -> x_3");

  SetMap g = mk_map(vs({"a", "b"}), vs({"1"}), {{"a", "1"}, {"b", "1"}});
  RingHomDescriptor sc2 = ring_hom(Category::SC2, g);
  CHECK(sc2.flavor == RingHomDescriptor::Flavor::SINGLE_VARIABLE);
  CHECK(render_ring_hom(sc2) == "y_a -> x_1\ny_b -> x_1");

  // variables over empty fibers: 1 for the monomial flavor, 0 for sums
  SetMap e = mk_map(vs({"1"}), vs({"p", "q"}), {{"1", "p"}});
  CHECK(render_ring_hom(ring_hom(Category::SC1, e)) == "y_p -> x_1\ny_q -> 1");
  CHECK(render_ring_hom(ring_hom(Category::SC0, e)) == "y_p -> x_1\ny_q -> 0");
}

TEST_CASE("well-definedness of descriptors") {
  SetMap f = two_fiber_map();
  VertexSet a = f.domain(), b = f.codomain();
  SqfIdeal iy(b, {b.full_mask()});           // (y_a y_b)
  SqfIdeal ix(a, {Mask{0b101}, Mask{0b110}});  // (x_1 x_3, x_2 x_3)

  CHECK(verify_well_defined(ring_hom(Category::SC1, f), iy, ix));
  // both transversals 1,3 and 2,3 land in I_X, so the sum flavor works too
  CHECK(verify_well_defined(ring_hom(Category::SC0, f), iy, ix));
  // but (x_1 x_3) alone misses the transversal {2,3}
  CHECK_FALSE(verify_well_defined(ring_hom(Category::SC0, f), iy,
                                  SqfIdeal(a, {Mask{0b101}})));
}

TEST_CASE("duality: morphism validity equals ring-hom well-definedness") {
  oracle::SplitMix rng(700);
  VertexSet a = testing::numbered("u", 4);
  VertexSet b = testing::numbered("v", 3);
  for (int t = 0; t < 150; ++t) {
    std::vector<int> ft;
    for (int i = 0; i < 4; ++i) ft.push_back(static_cast<int>(rng.next_below(3)));
    SetMap f(a, b, ft);
    SimplicialComplex x = oracle::random_complex(a, rng.next(), 0.55);
    SimplicialComplex y = oracle::random_complex(b, rng.next(), 0.55);
    for (Category c : {Category::SC0, Category::SC1}) {
      bool m = is_morphism(c, f, x, y);
      bool w = verify_well_defined(ring_hom(c, f), sr_ideal(y), sr_ideal(x));
      CHECK(m == w);
    }
    std::vector<int> gt;
    for (int i = 0; i < 3; ++i) gt.push_back(static_cast<int>(rng.next_below(4)));
    SetMap g(b, a, gt);
    // SC2 morphism X -> Y with g : B -> A; rings follow the map direction
    bool m = is_morphism(Category::SC2, g, x, y);
    bool w = verify_well_defined(ring_hom(Category::SC2, g), sr_ideal(y),
                                 sr_ideal(x));
    CHECK(m == w);
  }
}

TEST_CASE("composition of morphisms and descriptors") {
  oracle::SplitMix rng(701);
  VertexSet a = testing::numbered("u", 4);
  VertexSet b = testing::numbered("v", 3);
  VertexSet c = testing::numbered("w", 3);
  for (int t = 0; t < 80; ++t) {
    std::vector<int> ft, gt;
    for (int i = 0; i < 4; ++i) ft.push_back(static_cast<int>(rng.next_below(3)));
    for (int i = 0; i < 3; ++i) gt.push_back(static_cast<int>(rng.next_below(3)));
    SetMap f(a, b, ft), g(b, c, gt);

    SimplicialComplex x = oracle::random_complex(a, rng.next(), 0.6);
    for (Category cat : {Category::SC0, Category::SC1}) {
      Functor mid = cat == Category::SC0 ? Functor::EE : Functor::SS;
      SimplicialComplex y = apply(mid, f, x);
      SimplicialComplex z = apply(mid, g, y);
      MorphismWitness m1{cat, f, x, y}, m2{cat, g, y, z};
      REQUIRE(m1.valid());
      REQUIRE(m2.valid());
      MorphismWitness m = compose_morphisms(m1, m2);
      CHECK(m.valid());
      CHECK(ring_hom(cat, m.map) ==
            compose_descriptors(ring_hom(cat, f), ring_hom(cat, g)));
    }

    // SC2: maps point backwards, composition of witnesses reverses the
    // set-map composition
    std::vector<int> ht, kt;
    for (int i = 0; i < 3; ++i) ht.push_back(static_cast<int>(rng.next_below(4)));
    for (int i = 0; i < 3; ++i) kt.push_back(static_cast<int>(rng.next_below(3)));
    SetMap h(b, a, ht);  // X on A -> Y on B
    SetMap k(c, b, kt);  // Y on B -> Z on C
    SimplicialComplex z2 = oracle::random_complex(c, rng.next(), 0.6);
    SimplicialComplex y2 = star_star(k, z2);
    SimplicialComplex x2 = star_star(h, y2);
    MorphismWitness s1{Category::SC2, h, x2, y2};
    MorphismWitness s2{Category::SC2, k, y2, z2};
    REQUIRE(s1.valid());
    REQUIRE(s2.valid());
    MorphismWitness s = compose_morphisms(s1, s2);
    CHECK(s.map.domain() == c);
    CHECK(s.map.codomain() == a);
    CHECK(s.valid());
  }

  SetMap f = two_fiber_map();
  SimplicialComplex x = cx(f.domain(), {{"1"}});
  MorphismWitness bad{Category::SC1, f, x, shriek_shriek(f, x)};
  MorphismWitness mismatched{Category::SC0, f, x, shriek_shriek(f, x)};
  CHECK_THROWS(compose_morphisms(bad, mismatched));
}

TEST_CASE("non-face transport (small enumeration)") {
  VertexSet a = testing::numbered("u", 3);
  VertexSet b = testing::numbered("v", 2);
  for (const SetMap& f : testing::all_maps(a, b)) {
    // with Y = f^{**}(X), images of non-faces of X are non-faces of Y
    for (const SimplicialComplex& x : testing::all_complexes(a)) {
      SimplicialComplex y = star_star(f, x);
      for (Mask n = 0; n <= a.full_mask(); ++n)
        if (!x.is_face(n)) CHECK_FALSE(y.is_face(f.image_mask(n)));
    }
    // with X = star_upper(Y), preimages of non-faces of Y are non-faces of X
    for (const SimplicialComplex& yy : testing::all_complexes(b)) {
      SimplicialComplex xx = star_upper(f, yy);
      for (Mask c = 0; c <= b.full_mask(); ++c)
        if (!yy.is_face(c)) CHECK_FALSE(xx.is_face(f.preimage_mask(c)));
    }
  }
}

TEST_CASE("category tags") {
  CHECK(category_tag(Category::SC2) == std::string("sc2"));
  Category c;
  CHECK(parse_category_tag("sc0", c));
  CHECK(c == Category::SC0);
  CHECK_FALSE(parse_category_tag("sc3", c));
}
