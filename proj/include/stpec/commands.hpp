#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "stpec/dp.hpp"

namespace stpec {

namespace exit_code {
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kParseError = 2;
inline constexpr int kRejected = 3;
inline constexpr int kOracleDisagrees = 4;
}  // namespace exit_code

struct SolveCommand {
  std::string input;
  int k = 0;
  bool witness = false;
  bool oracle_check = false;
  std::optional<std::pair<Vertex, Vertex>> ref_edge;
  bool fixed_embedding = false;
  bool trace = false;
  int jobs = 1;
};

int cmd_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err);

/// One-line report of a solve result, e.g. "YES 1" or "NO".
std::string render_result(const SolveResult& result);

struct GenerateCommand {
  std::string family;  // "alt-cycle" or "random-planar"
  int m = 2;
  int n = 6;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_generate(const GenerateCommand& cmd, std::ostream& out, std::ostream& err);

/// Exit 0 iff g plus the edges is st-planar; otherwise names the failed
/// condition: (1) acyclic, (2) one source and one sink, (3) both on one face.
int verify_completion(const Digraph& g, const std::vector<Edge>& added, std::ostream& out);
int cmd_verify(const std::string& input, const std::string& edges, std::ostream& out, std::ostream& err);

/// Original edges solid, added edges dashed.
std::string to_dot(const Digraph& g, const std::vector<Edge>& added);
int cmd_export_dot(const std::string& input, const std::optional<std::string>& edges, std::ostream& out,
                   std::ostream& err);

}  // namespace stpec
