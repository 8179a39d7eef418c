#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "stpec/commands.hpp"
#include "stpec/generate.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for st-planar edge completion"};
  app.require_subcommand(1);

  stpec::SolveCommand solve;
  std::vector<int> ref_edge;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum completion with at most k edges");
  solve_cmd->add_option("--input", solve.input, "Instance file")->required();
  solve_cmd->add_option("-k", solve.k, "Edge budget")->required();
  solve_cmd->add_flag("--witness", solve.witness, "Print the added edges");
  solve_cmd->add_flag("--oracle-check", solve.oracle_check, "Cross-check with brute force (n <= 10)");
  solve_cmd->add_option("--ref-edge", ref_edge, "Only root at the edge between U and V")->expected(2);
  solve_cmd->add_flag("--fixed-embedding", solve.fixed_embedding, "Keep the embedding found by the planarity test");
  solve_cmd->add_flag("--trace", solve.trace, "Dump the DP tables");
  solve_cmd->add_option("--jobs", solve.jobs, "Worker threads over reference edges")->check(CLI::PositiveNumber);

  stpec::GenerateCommand gen;
  gen.seed = stpec::default_seed();
  auto* gen_cmd = app.add_subcommand("generate", "Write an instance");
  gen_cmd->add_option("--family", gen.family, "alt-cycle or random-planar")
      ->required()
      ->check(CLI::IsMember({"alt-cycle", "random-planar"}));
  gen_cmd->add_option("--m", gen.m, "Half the cycle length (alt-cycle)");
  gen_cmd->add_option("--n", gen.n, "Vertex count (random-planar)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed (default: $STPEC_SEED or 1)");
  gen_cmd->add_option("--output", gen.output, "Output path, '-' for stdout")->required();

  std::string input;
  std::string edges;
  auto* verify_cmd = app.add_subcommand("verify", "Check that the added edges give an st-planar graph");
  verify_cmd->add_option("--input", input, "Instance file")->required();
  verify_cmd->add_option("--edges", edges, "Added edges")->required();

  std::string dot_input;
  std::string dot_edges;
  auto* dot_cmd = app.add_subcommand("export-dot", "Print the instance as DOT");
  dot_cmd->add_option("--input", dot_input, "Instance file")->required();
  auto* dot_edges_opt = dot_cmd->add_option("--edges", dot_edges, "Added edges, drawn dashed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), stpec::exit_code::kParseError);
  }

  if (*solve_cmd) {
    if (!ref_edge.empty()) solve.ref_edge = std::make_pair(ref_edge[0], ref_edge[1]);
    return stpec::cmd_solve(solve, std::cout, std::cerr);
  }
  if (*gen_cmd) return stpec::cmd_generate(gen, std::cout, std::cerr);
  if (*verify_cmd) return stpec::cmd_verify(input, edges, std::cout, std::cerr);
  std::optional<std::string> maybe_edges;
  if (*dot_edges_opt) maybe_edges = dot_edges;
  return stpec::cmd_export_dot(dot_input, maybe_edges, std::cout, std::cerr);
}
