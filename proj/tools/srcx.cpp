// srcx: simplicial-complex functor calculator.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "srcx/adjoints.hpp"
#include "srcx/categories.hpp"
#include "srcx/complex.hpp"
#include "srcx/ideals.hpp"
#include "srcx/io.hpp"
#include "srcx/oracle.hpp"
#include "srcx/products.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

srcx::SimplicialComplex load_complex(const std::string& path) {
  return srcx::io::parse_complex(slurp(path));
}

srcx::SetMap load_map(const std::string& path) {
  return srcx::io::parse_map(slurp(path));
}

std::string render_set(const srcx::VertexSet& vs, srcx::Mask m) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : vs.mask_labels(m)) {
    if (!first) out += ' ';
    first = false;
    out += l;
  }
  return out + "}";
}

int run(int argc, char** argv) {
  CLI::App app{"adjoint functors of set maps on simplicial complexes"};
  app.require_subcommand(1);

  std::string functor_tag, map_path, category_tag, kind_tag;
  std::string file1, file2;
  int trials = 100, max_vertices = 4;
  std::uint64_t seed = 0;

  CLI::App* apply_cmd = app.add_subcommand("apply", "apply a functor");
  apply_cmd->add_option("--functor", functor_tag, "ee|se|ss|sa|aa")
      ->required();
  apply_cmd->add_option("--map", map_path, "map file")->required();
  apply_cmd->add_option("complex", file1, "complex file")->required();

  CLI::App* ideal_cmd = app.add_subcommand("ideal", "Stanley-Reisner ideal");
  ideal_cmd->add_option("complex", file1)->required();

  CLI::App* coi_cmd =
      app.add_subcommand("complex-of-ideal", "complex of a squarefree ideal");
  coi_cmd->add_option("ideal", file1)->required();

  CLI::App* dual_cmd = app.add_subcommand("dual", "Alexander dual");
  dual_cmd->add_option("complex", file1)->required();

  CLI::App* product_cmd = app.add_subcommand("product", "product of two complexes");
  product_cmd
      ->add_option("--kind", kind_tag,
                   "disjoint-union|external-join|or-union|cone-union|"
                   "cart-meet-lower|cart-join-lower|cart-meet-upper|"
                   "cart-join-upper")
      ->required();
  product_cmd->add_option("x", file1)->required();
  product_cmd->add_option("y", file2)->required();

  CLI::App* morphism_cmd =
      app.add_subcommand("morphism", "validate a morphism candidate");
  morphism_cmd->add_option("--category", category_tag, "sc0|sc1|sc2")
      ->required();
  morphism_cmd->add_option("--map", map_path)->required();
  morphism_cmd->add_option("x", file1)->required();
  morphism_cmd->add_option("y", file2)->required();

  CLI::App* check_cmd = app.add_subcommand("check", "run the adjunction audit");
  check_cmd->add_option("--trials", trials);
  check_cmd->add_option("--max-vertices", max_vertices)
      ->check(CLI::Range(1, 6));
  check_cmd->add_option("--seed", seed);

  CLI::App* info_cmd = app.add_subcommand("info", "summary of a complex");
  info_cmd->add_option("complex", file1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (apply_cmd->parsed()) {
    srcx::Functor kind;
    if (!srcx::parse_functor_tag(functor_tag, kind))
      throw std::runtime_error("unknown functor tag '" + functor_tag + "'");
    std::cout << srcx::io::serialize_complex(
        srcx::apply(kind, load_map(map_path), load_complex(file1)));
    return 0;
  }
  if (ideal_cmd->parsed()) {
    std::cout << srcx::render_ideal(srcx::sr_ideal(load_complex(file1)))
              << "\n";
    return 0;
  }
  if (coi_cmd->parsed()) {
    std::cout << srcx::io::serialize_complex(
        srcx::complex_of_ideal(srcx::io::parse_ideal(slurp(file1))));
    return 0;
  }
  if (dual_cmd->parsed()) {
    std::cout << srcx::io::serialize_complex(
        srcx::alexander_dual(load_complex(file1)));
    return 0;
  }
  if (product_cmd->parsed()) {
    srcx::ProductKind kind;
    if (!srcx::parse_product_tag(kind_tag, kind))
      throw std::runtime_error("unknown product kind '" + kind_tag + "'");
    srcx::SimplicialComplex x = load_complex(file1);
    srcx::SimplicialComplex y = load_complex(file2);
    std::cout << srcx::io::serialize_complex(
        srcx::is_union_kind(kind) ? srcx::union_product(kind, x, y)
                                  : srcx::cartesian_product(kind, x, y));
    return 0;
  }
  if (morphism_cmd->parsed()) {
    srcx::Category cat;
    if (!srcx::parse_category_tag(category_tag, cat))
      throw std::runtime_error("unknown category '" + category_tag + "'");
    srcx::SetMap f = load_map(map_path);
    srcx::SimplicialComplex x = load_complex(file1);
    srcx::SimplicialComplex y = load_complex(file2);
    bool valid = srcx::is_morphism(cat, f, x, y);
    if (valid) {
      std::cout << "VALID category=" << srcx::category_tag(cat) << "\n";
    } else {
      // witness: a facet of the pushed complex outside the target
      srcx::SimplicialComplex pushed;
      const srcx::SimplicialComplex* bound;
      switch (cat) {
        case srcx::Category::SC0:
          pushed = srcx::apply(srcx::Functor::EE, f, x);
          bound = &y;
          break;
        case srcx::Category::SC1:
          pushed = srcx::apply(srcx::Functor::SS, f, x);
          bound = &y;
          break;
        default:
          pushed = x;
          bound = nullptr;  // compared against g**(Y) below
          break;
      }
      srcx::SimplicialComplex limit =
          cat == srcx::Category::SC2 ? srcx::apply(srcx::Functor::SS, f, y)
                                     : *bound;
      std::string reason = "void";
      for (srcx::Mask m : pushed.facet_masks())
        if (!limit.is_face(m)) {
          reason = render_set(pushed.vertices(), m);
          break;
        }
      std::cout << "INVALID category=" << srcx::category_tag(cat)
                << " reason=" << reason << "\n";
    }
    std::cout << srcx::render_ring_hom(srcx::ring_hom(cat, f)) << "\n";
    return valid ? 0 : 1;
  }
  if (check_cmd->parsed()) {
    if (const char* env = std::getenv("SRCX_SEED")) seed = std::strtoull(env, nullptr, 10);
    srcx::oracle::SplitMix rng{seed};
    int failures = 0;
    std::string first;
    for (int t = 0; t < trials; ++t) {
      auto ground = [&](const char* stem) {
        int n = 1 + static_cast<int>(rng.next_below(
                        static_cast<std::uint32_t>(max_vertices)));
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i)
          labels.push_back(stem + std::to_string(i + 1));
        return srcx::VertexSet(std::move(labels));
      };
      srcx::VertexSet a = ground("a"), b = ground("b");
      std::vector<int> targets(a.size());
      for (auto& tgt : targets)
        tgt = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(b.size())));
      srcx::SetMap f(a, b, targets);
      srcx::oracle::AuditReport r = srcx::oracle::adjunction_audit(f, 1, rng.next());
      failures += r.failures;
      if (!r.first_failure.empty() && first.empty())
        first = "map " + std::to_string(t) + ", " + r.first_failure;
    }
    std::cout << "audit trials=" << trials << " failures=" << failures
              << " seed=" << seed << "\n";
    if (failures) std::cout << "first failure: " << first << "\n";
    return failures == 0 ? 0 : 1;
  }
  // info
  srcx::SimplicialComplex x = load_complex(file1);
  std::cout << "vertices: " << x.vertices().size() << "\n";
  std::cout << "facets: " << x.facet_masks().size() << "\n";
  std::cout << "cofacets: " << x.cofacet_masks().size() << "\n";
  std::cout << "dimension: ";
  if (auto d = x.dimension())
    std::cout << *d << "\n";
  else
    std::cout << "void\n";
  std::cout << "support: " << render_set(x.vertices(), x.support().bits())
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
