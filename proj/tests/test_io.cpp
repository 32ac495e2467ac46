#include <doctest.h>

#include "helpers.hpp"
#include "srcx/io.hpp"
#include "srcx/oracle.hpp"

using namespace srcx;
using testing::cx;
using testing::vs;

TEST_CASE("complex parsing") {
  SimplicialComplex x = io::parse_complex(
      "# the r1/r2 example\n"
      "vertices: a b x y r1 r2\n"
      "facets: {a r1 x y} {b r1 x y} {r1 r2 x} {r1 r2 y}\n");
  CHECK(x.vertices() == vs({"a", "b", "x", "y", "r1", "r2"}));
  CHECK(x.facet_masks().size() == 4);

  CHECK(io::parse_complex("vertices: a b\nfacets: -\n").is_void());
  CHECK(io::parse_complex("vertices: a b\nfacets: {}\n").is_empty_face_only());

  // non-maximal inputs are reduced
  SimplicialComplex r = io::parse_complex("vertices: a b\nfacets: {a} {a b}\n");
  CHECK(r == cx(vs({"a", "b"}), {{"a", "b"}}));
}

TEST_CASE("complex parse errors carry positions") {
  auto expect_error = [](std::string_view text, int line) {
    try {
      io::parse_complex(text);
      FAIL("expected a parse error for: ", text);
    } catch (const io::ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.col >= 1);
    }
  };
  expect_error("facets: {a}\n", 1);                      // no vertices line
  expect_error("vertices: a a\nfacets: {}\n", 1);        // duplicate label
  expect_error("vertices: a\nfacets: {b}\n", 2);         // unknown label
  expect_error("vertices: a\nfacets: {a\n", 2);          // unbalanced brace
  expect_error("vertices: a\nfacets: - {a}\n", 2);       // void mixed with sets
  expect_error("vertices: a\nnonsense\n", 2);            // not key: value
}

TEST_CASE("map parsing") {
  SetMap f = io::parse_map(
      "domain: a b x y r1 r2\n"
      "codomain: a b x y r\n"
      "map: a->a b->b x->x y->y r1->r r2->r\n");
  CHECK(f.domain().size() == 6);
  CHECK(f.is_surjective());
  CHECK(f.target(f.domain().index_of("r2")) == f.codomain().index_of("r"));

  // empty fibers are representable because the codomain is explicit
  SetMap g = io::parse_map("domain: a\ncodomain: p q\nmap: a->p\n");
  CHECK(g.fiber(g.codomain().index_of("q")) == 0);

  auto name_in_error = [](std::string_view text, std::string_view label) {
    try {
      io::parse_map(text);
      FAIL("expected a parse error");
    } catch (const io::ParseError& e) {
      CHECK(std::string(e.what()).find(label) != std::string::npos);
    }
  };
  name_in_error("domain: a b\ncodomain: p\nmap: a->p\n", "b");   // missing
  name_in_error("domain: a\ncodomain: p\nmap: a->p a->p\n", "a");  // duplicate
  name_in_error("domain: a\ncodomain: p\nmap: a->z\n", "z");  // unknown target
}

TEST_CASE("ideal parsing") {
  VertexSet r = vs({"a", "b", "r"});
  SqfIdeal i = io::parse_ideal("ring: a b r\nideal: (x_a*x_r, x_b)\n");
  CHECK(i == SqfIdeal(r, {Mask{0b101}, Mask{0b010}}));
  CHECK(io::parse_ideal("ring: a b r\nideal: (0)\n").is_zero());
  CHECK(io::parse_ideal("ring: a b r\nideal: (1)\n").is_unit());

  // pair labels contain commas and parentheses; the outer parentheses
  // and generator commas still split correctly
  SqfIdeal p = io::parse_ideal(
      "ring: (1,a) (2,a)\nideal: (z_(1,a)*z_(2,a))\n");
  CHECK(p.generator_masks() == std::vector<Mask>{0b11});

  CHECK_THROWS_AS(io::parse_ideal("ring: a\nideal: x_a\n"), io::ParseError);
  CHECK_THROWS_AS(io::parse_ideal("ring: a\nideal: (x_q)\n"), io::ParseError);
}

TEST_CASE("serialization is canonical and round-trips") {
  SimplicialComplex x = io::parse_complex(
      "vertices: r2 r1 y x b a\n"
      "facets: {r1 r2 y} {a r1 x y} {r1 r2 x} {b r1 x y}\n");
  std::string s = io::serialize_complex(x);
  CHECK(s ==
        "vertices: a b r1 r2 x y\n"
        "facets: {a r1 x y} {b r1 x y} {r1 r2 x} {r1 r2 y}\n");
  CHECK(io::parse_complex(s) == x);
  CHECK(io::serialize_complex(io::parse_complex(s)) == s);

  CHECK(io::serialize_complex(
            SimplicialComplex::from_facets(vs({"b", "a"}), std::vector<Mask>{})) ==
        "vertices: a b\nfacets: -\n");
  CHECK(io::serialize_complex(cx(vs({"a"}), {{}})) ==
        "vertices: a\nfacets: {}\n");

  SetMap f = io::parse_map("domain: b a\ncodomain: q p\nmap: b->q a->p\n");
  std::string m = io::serialize_map(f);
  CHECK(m == "domain: a b\ncodomain: p q\nmap: a->p b->q\n");
  SetMap f2 = io::parse_map(m);
  CHECK(io::serialize_map(f2) == m);

  SqfIdeal i = io::parse_ideal("ring: c b a\nideal: (x_b*x_a, x_c)\n");
  std::string t = io::serialize_ideal(i);
  CHECK(t == "ring: a b c\nideal: (x_a*x_b, x_c)\n");
  CHECK(io::serialize_ideal(io::parse_ideal(t)) == t);

  // property: parse(serialize()) identity on random complexes
  oracle::SplitMix rng(41);
  VertexSet a = testing::numbered("u", 5);
  for (int t2 = 0; t2 < 100; ++t2) {
    SimplicialComplex rc = oracle::random_complex(a, rng.next(), rng.next_unit());
    CHECK(io::parse_complex(io::serialize_complex(rc)) == rc);
    CHECK(io::parse_ideal(io::serialize_ideal(sr_ideal(rc))) == sr_ideal(rc));
  }
}
