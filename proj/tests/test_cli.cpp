#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "stpec/commands.hpp"
#include "stpec/generate.hpp"
#include "stpec/io.hpp"

using namespace stpec;
using fixtures::temp_file;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome solve_file(const std::string& path, int k, bool witness = false, bool oracle = false) {
  SolveCommand cmd;
  cmd.input = path;
  cmd.k = k;
  cmd.witness = witness;
  cmd.oracle_check = oracle;
  std::ostringstream out;
  std::ostringstream err;
  const int code = cmd_solve(cmd, out, err);
  return {code, out.str(), err.str()};
}

Outcome verify_files(const std::string& input, const std::string& edges) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cmd_verify(input, edges, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Io, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph g = random_planar(3 + static_cast<int>(seed % 8), seed);
    EXPECT_EQ(parse_instance(emit_instance(g, "seed " + std::to_string(seed))), g);
    EXPECT_EQ(parse_instance_json(emit_instance_json(g)), g);
  }
  std::vector<Edge> edges{{3, 1}, {0, 2}};
  EXPECT_EQ(parse_edges(emit_edges(edges)), edges);
  EXPECT_EQ(parse_edges(emit_edges({})), std::vector<Edge>{});
}

TEST(Io, CommentsAreSkipped) {
  Digraph g = parse_instance("# diamond\n4 4\n0 1\n# middle\n0 2\n1 3\n2 3\n");
  EXPECT_EQ(g, fixtures::diamond());
  EXPECT_EQ(emit_instance(fixtures::diamond(), "hello").rfind("# hello\n", 0), 0U);
}

TEST(Io, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("3 2\n0 1\n1 1\n"), 3);       // self-loop
  EXPECT_EQ(line_of("3 2\n0 1\n0 1\n"), 3);       // duplicate
  EXPECT_EQ(line_of("3 2\n0 1\n# c\n1 7\n"), 4);  // out of range
  EXPECT_EQ(line_of("3 2\n0 x\n1 2\n"), 2);
  EXPECT_EQ(line_of("abc\n"), 1);
  EXPECT_NE(line_of("3 3\n0 1\n1 2\n"), -1);  // too few edges
  EXPECT_THROW(parse_instance_json("{\"n\": 2}"), ParseError);
  EXPECT_THROW(parse_instance_json("{\"n\": 2, \"edges\": [[0, 0]]}"), ParseError);
}

TEST(Io, LoadChoosesJsonByExtension) {
  auto path = temp_file("diamond.json", emit_instance_json(fixtures::diamond()));
  EXPECT_EQ(load_instance(path), fixtures::diamond());
  EXPECT_THROW(load_instance("/nonexistent/stpec/file.txt"), std::exception);
}

TEST(Generate, AltCycles) {
  EXPECT_EQ(alt_cycle(2), Digraph(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}}));
  Digraph a3 = alt_cycle(3);
  EXPECT_EQ(a3.vertex_count(), 6);
  auto sw = classify_switches(a3);
  int sources = 0;
  int sinks = 0;
  for (Vertex v = 0; v < 6; ++v) {
    sources += a3.in_degree(v) == 0 ? 1 : 0;
    sinks += a3.out_degree(v) == 0 ? 1 : 0;
    EXPECT_TRUE(sw.is_switch(v));
  }
  EXPECT_EQ(sources, 3);
  EXPECT_EQ(sinks, 3);
  EXPECT_THROW(alt_cycle(1), GraphError);
}

TEST(Generate, RandomPlanarIsDeterministicAndValid) {
  for (std::uint64_t seed = 1; seed < 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    Digraph g = random_planar(n, seed);
    EXPECT_EQ(g, random_planar(n, seed));
    EXPECT_EQ(g.vertex_count(), n);
    EXPECT_TRUE(is_acyclic(g));
    EXPECT_TRUE(is_biconnected(g));
    EXPECT_TRUE(is_planar(g));
  }
  EXPECT_NE(random_planar(8, 1), random_planar(8, 2));
}

TEST(Generate, CommandOutputIsByteStable) {
  GenerateCommand cmd;
  cmd.family = "random-planar";
  cmd.n = 6;
  cmd.seed = 1;
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream err;
  ASSERT_EQ(cmd_generate(cmd, a, err), 0);
  ASSERT_EQ(cmd_generate(cmd, b, err), 0);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("seed 1"), std::string::npos);

  cmd.output = (std::filesystem::temp_directory_path() / "stpec_tests" / "gen.txt").string();
  std::filesystem::create_directories(std::filesystem::path(cmd.output).parent_path());
  ASSERT_EQ(cmd_generate(cmd, a, err), 0);
  EXPECT_EQ(read_file(cmd.output), b.str());

  cmd.family = "alt-cycle";
  cmd.m = 2;
  cmd.output = "-";
  std::ostringstream c;
  ASSERT_EQ(cmd_generate(cmd, c, err), 0);
  EXPECT_EQ(parse_instance(c.str()), alt_cycle(2));

  cmd.family = "nope";
  EXPECT_EQ(cmd_generate(cmd, c, err), exit_code::kParseError);
}

TEST(Solve, ExitCodesAndReports) {
  auto d = temp_file("d.txt", emit_instance(fixtures::diamond()));
  auto z = temp_file("z.txt", emit_instance(fixtures::zigzag()));
  auto c3 = temp_file("c3.txt", emit_instance(fixtures::triangle_cycle()));

  Outcome r = solve_file(d, 0);
  EXPECT_EQ(r.code, exit_code::kYes);
  EXPECT_EQ(r.out, "YES 0\n");

  r = solve_file(c3, 9);
  EXPECT_EQ(r.code, exit_code::kRejected);
  EXPECT_EQ(r.out, "Reject(DirectedCycle)\n");

  r = solve_file(z, 1);
  EXPECT_EQ(r.code, exit_code::kNo);
  EXPECT_EQ(r.out, "NO\n");

  r = solve_file(z, 2, true, true);
  EXPECT_EQ(r.code, exit_code::kYes);
  EXPECT_EQ(r.out.rfind("YES 2\n2\n", 0), 0U);
  EXPECT_NE(r.out.find("oracle agrees"), std::string::npos);

  r = solve_file(temp_file("bad.txt", "2 1\n0 0\n"), 0);
  EXPECT_EQ(r.code, exit_code::kParseError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Solve, TraceAndRefEdge) {
  SolveCommand cmd;
  cmd.input = temp_file("d.txt", emit_instance(fixtures::diamond()));
  cmd.trace = true;
  cmd.ref_edge = std::make_pair(Vertex{0}, Vertex{1});
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_solve(cmd, out, err), exit_code::kYes);
  EXPECT_NE(out.str().find("ref 0->1: 0"), std::string::npos);

  cmd.ref_edge = std::make_pair(Vertex{1}, Vertex{2});
  EXPECT_EQ(cmd_solve(cmd, out, err), exit_code::kParseError);
}

TEST(Solve, WitnessPassesVerify) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto path = temp_file("w.txt", emit_instance(random_planar(5 + static_cast<int>(seed % 3), seed)));
    Outcome r = solve_file(path, 3, true);
    if (r.code != exit_code::kYes) continue;
    auto edges = temp_file("w_edges.txt", r.out.substr(r.out.find('\n') + 1));
    Outcome v = verify_files(path, edges);
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_EQ(v.out, "OK\n");
  }
}

TEST(Verify, Examples) {
  auto z = temp_file("z.txt", emit_instance(fixtures::zigzag()));
  auto c3 = temp_file("c3.txt", emit_instance(fixtures::triangle_cycle()));
  auto none = temp_file("none.txt", emit_edges({}));

  Outcome r = verify_files(z, none);
  EXPECT_NE(r.code, 0);
  EXPECT_EQ(r.out.rfind("FAIL (2)", 0), 0U);

  r = verify_files(c3, none);
  EXPECT_NE(r.code, 0);
  EXPECT_EQ(r.out.rfind("FAIL (1)", 0), 0U);

  // t1 -> t2 and s2 -> s1 leave the single source 2 and the single sink 3.
  r = verify_files(z, temp_file("zw.txt", emit_edges({{1, 3}, {2, 0}})));
  EXPECT_EQ(r.code, 0) << r.out;

  // One edge between a sink and a source is always anti-parallel here.
  r = verify_files(z, temp_file("anti.txt", emit_edges({{1, 2}})));
  EXPECT_NE(r.code, 0);

  // Octahedron with antipodal source and sink: no face holds both.
  Digraph oct(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4},
                  {1, 5}, {2, 5}, {3, 5}, {4, 5}});
  std::ostringstream out;
  EXPECT_NE(verify_completion(oct, {}, out), 0);
  EXPECT_EQ(out.str().rfind("FAIL (3)", 0), 0U);

  r = verify_files(z, temp_file("range.txt", emit_edges({{1, 9}})));
  EXPECT_EQ(r.code, exit_code::kParseError);
}

TEST(ExportDot, Examples) {
  Digraph d = fixtures::diamond();
  std::string dot = to_dot(d, {});
  EXPECT_EQ(dot,
            "digraph G {\n  0;\n  1;\n  2;\n  3;\n"
            "  0 -> 1;\n  0 -> 2;\n  1 -> 3;\n  2 -> 3;\n}\n");
  std::string zw = to_dot(fixtures::zigzag(), {{1, 3}});
  EXPECT_NE(zw.find("1 -> 3 [style=dashed];"), std::string::npos);
  size_t dashed = 0;
  for (size_t p = zw.find("dashed"); p != std::string::npos; p = zw.find("dashed", p + 1)) ++dashed;
  EXPECT_EQ(dashed, 1U);

  auto path = temp_file("d.txt", emit_instance(d));
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream err;
  EXPECT_EQ(cmd_export_dot(path, std::nullopt, a, err), 0);
  EXPECT_EQ(cmd_export_dot(path, std::nullopt, b, err), 0);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(), dot);
  EXPECT_EQ(cmd_export_dot("/nonexistent/stpec", std::nullopt, a, err), exit_code::kParseError);
}
