// Command-line front end: parse algebra/graph files, dispatch to the library,
// print deterministic reports. Exit codes: 0 success, 1 input error, 2 budget
// exceeded, 3 internal assertion failure.

#include "gaussalg/gaussalg.hpp"
#include "reproduce_paper.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

using namespace gaussalg;

namespace {

struct Options {
  std::string input;
  std::uint64_t limit_subsets = 10'000'000;
  int level_bound = 3;
  int threads = 1;
  std::string format = "string";
  bool emit_alg = false;

  MonomialFormat monomial_format() const {
    if (format == "string") return MonomialFormat::product_string;
    if (format == "expvec") return MonomialFormat::exponent_vector;
    throw input_error("unknown --format '" + format + "' (expected string or expvec)");
  }
  EnumLimits enum_limits() const {
    EnumLimits l;
    l.subset_budget = limit_subsets;
    l.threads = threads;
    return l;
  }
};

/// Load either file kind as a monomial algebra (graphs go through the edge
/// ring). Duplicate generators are dropped with a warning on stderr.
MonomialAlgebra load_algebra(const std::string& path) {
  ParsedInput in = parse_input_file(path);
  if (std::holds_alternative<LoopedGraph>(in)) return edge_ring(std::get<LoopedGraph>(in));
  const AlgebraFile& f = std::get<AlgebraFile>(in);
  MonomialAlgebra a(f.d, f.monomials);
  if (a.duplicates_dropped() > 0)
    std::cerr << "warning: " << path << ": dropped " << a.duplicates_dropped()
              << " duplicate generator(s)\n";
  return a;
}

/// The monomial sequence itself, order preserved (algebra files only make
/// sense here, but a graph file contributes its edge-ring generators).
MonomialSet load_monomials(const std::string& path) {
  ParsedInput in = parse_input_file(path);
  if (std::holds_alternative<LoopedGraph>(in)) return edge_ring(std::get<LoopedGraph>(in)).generators();
  return std::get<AlgebraFile>(in).monomials;
}

LoopedGraph load_graph(const std::string& path) {
  ParsedInput in = parse_input_file(path);
  if (!std::holds_alternative<LoopedGraph>(in))
    throw input_error(path + ": expected a graph file (header 'vertices <d>')");
  return std::get<LoopedGraph>(in);
}

void print_monomials(const MonomialSet& set, const Options& opt) {
  if (opt.emit_alg && !set.empty()) std::cout << "dim " << set.front().ambient() << "\n";
  for (const Monomial& m : set) std::cout << format_monomial(m, opt.monomial_format()) << "\n";
}

std::string format_witness(const RelationReport& rep) {
  if (!rep.witness) return "none";
  auto side = [](const std::vector<std::pair<int, Integer>>& part) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, e] : part) {
      if (!first) os << "*";
      os << "y" << (idx + 1);
      if (e > 1) os << "^" << e;
      first = false;
    }
    return first ? std::string("1") : os.str();
  };
  return side(rep.witness_positive()) + " - " + side(rep.witness_negative());
}

std::string format_edges(const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, b] : edges) {
    if (!first) os << ",";
    os << (a + 1) << "-" << (b + 1);
    first = false;
  }
  return first ? std::string("-") : os.str();
}

void cmd_gauss(const Options& opt) {
  const GaussResult g = gauss_generators(load_algebra(opt.input), opt.enum_limits());
  print_monomials(g.gens, opt);
  std::cerr << g.gens.size() << " generators, " << g.subsets_examined << " partial subsets examined\n";
}

void cmd_dim(const Options& opt) { std::cout << algebra_dimension(load_algebra(opt.input)) << "\n"; }

void cmd_borel_closure(const Options& opt) {
  print_monomials(BorelSet::closure(load_monomials(opt.input)).members(), opt);
}

void cmd_borel_gens(const Options& opt) {
  print_monomials(borel_generators(BorelSet::from_stable(load_monomials(opt.input))), opt);
}

void cmd_principal(const Options& opt) {
  const ParsedInput in = parse_input_file(opt.input);
  if (!std::holds_alternative<AlgebraFile>(in))
    throw input_error(opt.input + ": expected an algebra file with one monomial");
  const AlgebraFile& f = std::get<AlgebraFile>(in);
  if (f.monomials.size() != 1)
    throw input_error(opt.input + ": the principal command expects exactly one monomial, got " +
                      std::to_string(f.monomials.size()));
  std::cout << format_monomial(principal_gauss_generator(f.monomials.front(), f.d), opt.monomial_format())
            << "\n";
}

void cmd_veronese_check(int d, const Options& opt) {
  const GaussResult g = gauss_generators(MonomialAlgebra(d, squarefree_veronese(2, d)), opt.enum_limits());
  const MonomialSet want = expected_gauss_squarefree2(d);
  if (g.gens == want) {
    std::cout << "ok d=" << d << ": " << g.gens.size() << " gauss generators match the predicted family\n";
    return;
  }
  std::cout << "MISMATCH d=" << d << ": computed " << g.gens.size() << " generators, predicted "
            << want.size() << "\n";
  throw internal_error("squarefree 2-Veronese structure check failed for d=" + std::to_string(d));
}

void cmd_exchange(const Options& opt) {
  const auto witness = polymatroid_exchange_check(load_monomials(opt.input));
  if (!witness) {
    std::cout << "ok\n";
    return;
  }
  std::cout << "witness u=" << format_monomial(witness->u, opt.monomial_format())
            << " v=" << format_monomial(witness->v, opt.monomial_format()) << " i=" << (witness->var + 1)
            << "\n";
}

void cmd_edge_ring(const Options& opt) {
  for (const Monomial& m : edge_ring(load_graph(opt.input)).generators())
    std::cout << format_monomial(m, opt.monomial_format()) << "\n";
}

void cmd_forests(const Options& opt) { print_monomials(gauss_from_forests(load_graph(opt.input)), opt); }

void cmd_tree_count(const Options& opt) {
  const LoopedGraph g = load_graph(opt.input);
  std::cout << spanning_tree_count(LoopedGraph::make(g.d, g.edges)) << "\n";
}

void cmd_birational(const Options& opt) {
  const MonomialAlgebra a = load_algebra(opt.input);
  const GaussResult g = gauss_generators(a, opt.enum_limits());
  std::cout << (is_birational(a, g.gens) ? "true" : "false") << "\n";
}

void cmd_normality(const Options& opt) {
  const NormalityProbe probe = normality_probe(load_algebra(opt.input), opt.level_bound);
  if (probe.clean) {
    std::cout << "clean up to level " << opt.level_bound << " (not a proof of normality)\n";
    return;
  }
  std::cout << "gap at level " << probe.gap_level << ": point";
  for (int e : probe.gap_point) std::cout << " " << e;
  std::cout << " (algebra is not normal)\n";
}

void cmd_hypersurface(const Options& opt) {
  const RelationReport rep = relation_report(load_monomials(opt.input));
  std::cout << "dim " << rep.dim << "\n";
  std::cout << "edim " << rep.edim << "\n";
  std::cout << "kernel_rank " << rep.kernel_rank << "\n";
  std::cout << "hypersurface " << (rep.kernel_rank == 1 ? "yes" : "no") << "\n";
  std::cout << "witness " << format_witness(rep) << "\n";
}

void cmd_lambda(int d) { std::cout << path_lambda(d) << "\n"; }

void cmd_conjecture_scan(int max_d) {
  const ScanReport report = conjecture_scan(max_d);
  for (const ScanRow& row : report.rows) {
    std::cout << "d=" << row.d << " edges=" << format_edges(row.edges) << " loop=" << (row.loop + 1)
              << " dim=" << row.dim << " edim=" << row.edim << " kernel_rank=" << row.kernel_rank
              << " trees=" << row.tree_count
              << " hypersurface_dim_d-1=" << (row.hypersurface_dim_d_minus_1 ? "yes" : "no")
              << " even_cycle=" << (row.even_cycle ? "yes" : "no") << "\n";
  }
  if (report.counterexample_candidates.empty()) {
    std::cout << "counterexample candidates: none (" << report.rows.size() << " instances scanned)\n";
  } else {
    std::cout << "counterexample candidates:\n";
    for (std::size_t idx : report.counterexample_candidates) {
      const ScanRow& row = report.rows[idx];
      std::cout << "  d=" << row.d << " edges=" << format_edges(row.edges) << " loop=" << (row.loop + 1)
                << "\n";
    }
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss algebras of monomial algebras: exact computation and verification toolkit"};
  app.require_subcommand(1);

  Options opt;
  std::function<void()> action;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", opt.input, "input file (.alg or .graph)")->required();
  };
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--limit-subsets", opt.limit_subsets, "subset enumeration budget (default 10^7)");
    cmd->add_option("--threads", opt.threads, "worker threads for the subset enumeration (default 1)");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "monomial output format: string | expvec");
    cmd->add_flag("--emit-alg", opt.emit_alg, "prepend a 'dim <d>' header so the output is a valid .alg file");
  };

  {
    auto* c = app.add_subcommand("gauss", "Gauss algebra generating set of the input algebra");
    add_input(c);
    add_limits(c);
    add_format(c);
    c->callback([&] { action = [&] { cmd_gauss(opt); }; });
  }
  {
    auto* c = app.add_subcommand("dim", "dimension (log-matrix rank) of the input algebra");
    add_input(c);
    c->callback([&] { action = [&] { cmd_dim(opt); }; });
  }
  {
    auto* c = app.add_subcommand("borel-closure", "smallest Borel set containing the input monomials");
    add_input(c);
    add_format(c);
    c->callback([&] { action = [&] { cmd_borel_closure(opt); }; });
  }
  {
    auto* c = app.add_subcommand("borel-gens", "Borel generators of a strongly stable input set");
    add_input(c);
    add_format(c);
    c->callback([&] { action = [&] { cmd_borel_gens(opt); }; });
  }
  {
    auto* c = app.add_subcommand("principal",
                                 "closed-form Gauss Borel generator of a principal Borel algebra");
    add_input(c);
    add_format(c);
    c->callback([&] { action = [&] { cmd_principal(opt); }; });
  }
  int veronese_d = 4;
  {
    auto* c = app.add_subcommand("veronese-check",
                                 "verify the squarefree 2-Veronese structure theorem for one d");
    c->add_option("d", veronese_d, "number of variables (>= 4)")->required();
    add_limits(c);
    c->callback([&] { action = [&] { cmd_veronese_check(veronese_d, opt); }; });
  }
  {
    auto* c = app.add_subcommand("exchange-check", "polymatroid exchange property of the input set");
    add_input(c);
    add_format(c);
    c->callback([&] { action = [&] { cmd_exchange(opt); }; });
  }
  {
    auto* c = app.add_subcommand("edge-ring", "edge ring generators of the input graph");
    add_input(c);
    add_format(c);
    c->callback([&] { action = [&] { cmd_edge_ring(opt); }; });
  }
  {
    auto* c = app.add_subcommand("forests",
                                 "Gauss generators of a looped bipartite graph via rooted spanning forests");
    add_input(c);
    add_format(c);
    c->callback([&] { action = [&] { cmd_forests(opt); }; });
  }
  {
    auto* c = app.add_subcommand("tree-count", "number of spanning trees (matrix-tree determinant)");
    add_input(c);
    c->callback([&] { action = [&] { cmd_tree_count(opt); }; });
  }
  {
    auto* c = app.add_subcommand("birational", "is the Gauss map of the input algebra birational?");
    add_input(c);
    add_limits(c);
    c->callback([&] { action = [&] { cmd_birational(opt); }; });
  }
  {
    auto* c = app.add_subcommand("normality", "bounded-level non-normality probe");
    add_input(c);
    c->add_option("--level-bound", opt.level_bound, "levels to probe (default 3)");
    c->callback([&] { action = [&] { cmd_normality(opt); }; });
  }
  {
    auto* c = app.add_subcommand("hypersurface", "relation report of the input generating set");
    add_input(c);
    c->callback([&] { action = [&] { cmd_hypersurface(opt); }; });
  }
  int lambda_d = 1;
  {
    auto* c = app.add_subcommand("lambda", "generator count of the fully looped path graph");
    c->add_option("d", lambda_d, "path length (>= 1)")->required();
    c->callback([&] { action = [&] { cmd_lambda(lambda_d); }; });
  }
  int scan_d = 5;
  {
    auto* c = app.add_subcommand("conjecture-scan",
                                 "survey bipartite graphs with one loop for the even-cycle question");
    c->add_option("max_d", scan_d, "largest vertex count (<= 7)")->required();
    c->callback([&] { action = [&] { cmd_conjecture_scan(scan_d); }; });
  }
  {
    auto* c = app.add_subcommand("reproduce-paper", "re-run every worked example; nonzero exit on mismatch");
    add_limits(c);
    c->callback([&] {
      action = [&] {
        if (gaussalg_cli::run_reproduce_paper(opt.limit_subsets) != 0)
          throw internal_error("paper example reproduction failed");
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    action();
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
