#ifndef SRCX_IO_HPP
#define SRCX_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "srcx/complex.hpp"
#include "srcx/ideals.hpp"
#include "srcx/setmap.hpp"

namespace srcx::io {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what);
  int line;  // 1-based
  int col;   // 1-based
};

/// Text formats. `#` starts a comment; blank lines are skipped.
///
/// complex:      vertices: a b x y r
///               facets: {a x y} {b x y}      (- = void, {} = {emptyset})
/// map:          domain: a b
///               codomain: c
///               map: a->c b->c
/// ideal:        ring: a b r
///               ideal: (x_a*x_r, x_b)        ((0) zero, (1) unit)
SimplicialComplex parse_complex(std::string_view text);
SetMap parse_map(std::string_view text);
SqfIdeal parse_ideal(std::string_view text);

// canonical forms: labels and facet/generator lists sorted
// lexicographically; parse(serialize(v)) == v
std::string serialize_complex(const SimplicialComplex& x);
std::string serialize_map(const SetMap& f);
std::string serialize_ideal(const SqfIdeal& i, char prefix = 'x');

}  // namespace srcx::io

#endif
