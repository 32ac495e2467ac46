#include "srcx/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <vector>

namespace srcx::io {

ParseError::ParseError(int line_, int col_, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_) + ", col " +
                         std::to_string(col_) + ": " + what),
      line(line_),
      col(col_) {}

namespace {

struct Line {
  int number;           // 1-based position in the input
  std::string key;      // text before the first ':'
  std::string rest;     // text after it
  int rest_col;         // 1-based column where `rest` starts
};

// split into keyed lines, dropping comments and blanks
std::vector<Line> scan(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t begin = raw.find_first_not_of(" \t\r");
    if (begin != std::string_view::npos) {
      std::size_t colon = raw.find(':', begin);
      if (colon == std::string_view::npos)
        throw ParseError(number, static_cast<int>(begin) + 1,
                         "expected 'key: value'");
      Line l;
      l.number = number;
      l.key = std::string(raw.substr(begin, colon - begin));
      while (!l.key.empty() && std::isspace(static_cast<unsigned char>(l.key.back())))
        l.key.pop_back();
      l.rest = std::string(raw.substr(colon + 1));
      l.rest_col = static_cast<int>(colon) + 2;
      out.push_back(std::move(l));
    }
    pos = eol + 1;
    if (eol == text.size()) break;
  }
  return out;
}

const Line& expect(const std::vector<Line>& lines, std::size_t i,
                   const std::string& key) {
  if (i >= lines.size())
    throw ParseError(lines.empty() ? 1 : lines.back().number + 1, 1,
                     "missing '" + key + ":' line");
  if (lines[i].key != key)
    throw ParseError(lines[i].number, 1,
                     "expected '" + key + ":', got '" + lines[i].key + ":'");
  return lines[i];
}

void no_extra(const std::vector<Line>& lines, std::size_t used) {
  if (lines.size() > used)
    throw ParseError(lines[used].number, 1,
                     "unexpected line '" + lines[used].key + ":'");
}

std::vector<std::string> split_words(const Line& l) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < l.rest.size()) {
    if (std::isspace(static_cast<unsigned char>(l.rest[i]))) { ++i; continue; }
    std::size_t j = i;
    while (j < l.rest.size() &&
           !std::isspace(static_cast<unsigned char>(l.rest[j])))
      ++j;
    out.push_back(l.rest.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexSet parse_vertex_line(const Line& l) {
  std::vector<std::string> labels = split_words(l);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw ParseError(l.number, l.rest_col,
                         "duplicate label '" + labels[i] + "'");
  try {
    return VertexSet(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(l.number, l.rest_col, e.what());
  }
}

int label_index(const VertexSet& vs, const std::string& label, const Line& l,
                int col) {
  int idx = vs.index_of(label);
  if (idx < 0)
    throw ParseError(l.number, col, "unknown label '" + label + "'");
  return idx;
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
  std::vector<Line> lines = scan(text);
  VertexSet vs = parse_vertex_line(expect(lines, 0, "vertices"));
  const Line& fl = expect(lines, 1, "facets");
  no_extra(lines, 2);

  const std::string& r = fl.rest;
  std::vector<Mask> facets;
  bool void_marker = false;
  std::size_t i = 0;
  auto col = [&](std::size_t k) { return fl.rest_col + static_cast<int>(k); };
  while (i < r.size()) {
    if (std::isspace(static_cast<unsigned char>(r[i]))) { ++i; continue; }
    if (r[i] == '-') {
      void_marker = true;
      ++i;
      continue;
    }
    if (r[i] != '{')
      throw ParseError(fl.number, col(i), "expected '{' or '-'");
    ++i;
    Mask m = 0;
    while (true) {
      while (i < r.size() && std::isspace(static_cast<unsigned char>(r[i])))
        ++i;
      if (i >= r.size())
        throw ParseError(fl.number, col(r.size()), "unterminated facet");
      if (r[i] == '}') { ++i; break; }
      std::size_t j = i;
      while (j < r.size() && r[j] != '}' &&
             !std::isspace(static_cast<unsigned char>(r[j])))
        ++j;
      std::string label = r.substr(i, j - i);
      m |= bit(label_index(vs, label, fl, col(i)));
      i = j;
    }
    facets.push_back(m);
  }
  if (void_marker && !facets.empty())
    throw ParseError(fl.number, fl.rest_col, "'-' mixed with facets");
  return SimplicialComplex::from_facets(std::move(vs), std::move(facets));
}

SetMap parse_map(std::string_view text) {
  std::vector<Line> lines = scan(text);
  VertexSet dom = parse_vertex_line(expect(lines, 0, "domain"));
  VertexSet cod = parse_vertex_line(expect(lines, 1, "codomain"));
  const Line& ml = expect(lines, 2, "map");
  no_extra(lines, 3);

  std::vector<int> targets(dom.size(), -1);
  for (const std::string& word : split_words(ml)) {
    std::size_t arrow = word.find("->");
    if (arrow == std::string::npos)
      throw ParseError(ml.number, ml.rest_col,
                       "expected 'a->b', got '" + word + "'");
    std::string from = word.substr(0, arrow);
    std::string to = word.substr(arrow + 2);
    int di = label_index(dom, from, ml, ml.rest_col);
    int ci = label_index(cod, to, ml, ml.rest_col);
    if (targets[di] >= 0)
      throw ParseError(ml.number, ml.rest_col,
                       "label '" + from + "' mapped twice");
    targets[di] = ci;
  }
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (targets[i] < 0)
      throw ParseError(ml.number, ml.rest_col,
                       "label '" + dom.label(static_cast<int>(i)) +
                           "' has no assignment");
  return SetMap(std::move(dom), std::move(cod), std::move(targets));
}

SqfIdeal parse_ideal(std::string_view text) {
  std::vector<Line> lines = scan(text);
  VertexSet ring = parse_vertex_line(expect(lines, 0, "ring"));
  const Line& il = expect(lines, 1, "ideal");
  no_extra(lines, 2);

  const std::string& r = il.rest;
  auto col = [&](std::size_t k) { return il.rest_col + static_cast<int>(k); };
  std::size_t i = r.find_first_not_of(" \t");
  if (i == std::string::npos || r[i] != '(')
    throw ParseError(il.number, col(i == std::string::npos ? 0 : i),
                     "expected '('");
  // labels may themselves contain parentheses ("(a,b)"), so match depth
  std::size_t close = i;
  int depth = 0;
  for (;; ++close) {
    if (close >= r.size())
      throw ParseError(il.number, col(r.size()), "missing ')'");
    if (r[close] == '(') ++depth;
    if (r[close] == ')' && --depth == 0) break;
  }
  std::string inner = r.substr(i + 1, close - i - 1);
  std::size_t tail = r.find_first_not_of(" \t", close + 1);
  if (tail != std::string::npos)
    throw ParseError(il.number, col(tail), "trailing text after ')'");

  // strip spaces, then split generators on commas
  std::string flat;
  for (char c : inner)
    if (!std::isspace(static_cast<unsigned char>(c))) flat += c;
  if (flat == "0") return SqfIdeal::zero(std::move(ring));
  if (flat == "1") return SqfIdeal::unit(std::move(ring));
  std::vector<Mask> gens;
  if (!flat.empty()) {
    // split on commas outside label parentheses, then on '*'
    std::vector<std::string> parts{""};
    int d = 0;
    for (char c : flat) {
      if (c == '(') ++d;
      if (c == ')') --d;
      if (c == ',' && d == 0)
        parts.emplace_back();
      else
        parts.back() += c;
    }
    for (const std::string& gen : parts) {
      Mask m = 0;
      std::size_t k = 0;
      while (k < gen.size()) {
        std::size_t star = gen.find('*', k);
        std::string var = gen.substr(k, star - k);
        if (var.size() < 3 || var[1] != '_')
          throw ParseError(il.number, il.rest_col,
                           "expected variable like x_a, got '" + var + "'");
        m |= bit(label_index(ring, var.substr(2), il, il.rest_col));
        if (star == std::string::npos) break;
        k = star + 1;
      }
      gens.push_back(m);
    }
  }
  gens = detail::minimal_antichain(std::move(gens));
  detail::canonical_sort(ring, gens);
  return SqfIdeal(std::move(ring), std::move(gens));
}

namespace {

std::string label_list(const VertexSet& vs) {
  std::string out;
  bool first = true;
  for (const auto& l : vs.mask_labels(vs.full_mask())) {
    if (!first) out += ' ';
    first = false;
    out += l;
  }
  return out;
}

}  // namespace

std::string serialize_complex(const SimplicialComplex& x) {
  std::string out = "vertices: " + label_list(x.vertices()) + "\n";
  out += "facets:";
  if (x.is_void()) {
    out += " -";
  } else {
    for (Mask f : x.facet_masks()) {
      out += " {";
      bool first = true;
      for (const auto& l : x.vertices().mask_labels(f)) {
        if (!first) out += ' ';
        first = false;
        out += l;
      }
      out += '}';
    }
  }
  out += '\n';
  return out;
}

std::string serialize_map(const SetMap& f) {
  std::string out = "domain: " + label_list(f.domain()) + "\n";
  out += "codomain: " + label_list(f.codomain()) + "\n";
  out += "map:";
  for (int i : f.domain().sorted_order())
    out += " " + f.domain().label(i) + "->" + f.codomain().label(f.target(i));
  out += '\n';
  return out;
}

std::string serialize_ideal(const SqfIdeal& i, char prefix) {
  return "ring: " + label_list(i.ring()) + "\nideal: " +
         render_ideal(i, prefix) + "\n";
}

}  // namespace srcx::io
