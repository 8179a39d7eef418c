#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stpec/digraph.hpp"

namespace stpec {

/// Malformed input; `line` is 1-based (0 when no single line is at fault).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// "n m" header, then m lines "u v". Lines starting with '#' are skipped.
Digraph parse_instance(const std::string& text);
/// {"n": 4, "edges": [[0, 1], ...]}
Digraph parse_instance_json(const std::string& text);
std::string emit_instance(const Digraph& g, const std::string& comment = "");
std::string emit_instance_json(const Digraph& g);

/// "m" header, then m lines "u v".
std::vector<Edge> parse_edges(const std::string& text);
std::string emit_edges(const std::vector<Edge>& edges);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Reads an instance, choosing the JSON reader for paths ending in ".json".
Digraph load_instance(const std::string& path);

}  // namespace stpec
