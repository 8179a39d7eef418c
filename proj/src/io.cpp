#include "stpec/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace stpec {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

// Non-comment, non-blank lines with their line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

std::vector<long long> read_ints(int number, const std::string& line, size_t count) {
  std::istringstream in(line);
  std::vector<long long> values;
  long long x = 0;
  while (in >> x) values.push_back(x);
  if (!in.eof()) throw ParseError(number, "expected integers, got '" + line + "'");
  if (values.size() != count) {
    throw ParseError(number, "expected " + std::to_string(count) + " integers, got " +
                                 std::to_string(values.size()));
  }
  return values;
}

Edge checked_edge(int number, long long u, long long v, long long n) {
  if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(number, "vertex id out of range");
  if (u == v) throw ParseError(number, "self-loop " + std::to_string(u));
  return Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

}  // namespace

Digraph parse_instance(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header 'n m'");
  const auto header = read_ints(lines[0].first, lines[0].second, 2);
  const long long n = header[0];
  const long long m = header[1];
  if (n < 1 || m < 0) throw ParseError(lines[0].first, "bad header");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const int at = lines.size() > static_cast<size_t>(m) + 1 ? lines[static_cast<size_t>(m) + 1].first : 0;
    throw ParseError(at, "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, int>> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, line] = lines[i];
    const auto uv = read_ints(number, line, 2);
    const Edge e = checked_edge(number, uv[0], uv[1], n);
    for (const auto& [other, where] : seen) {
      if (other == e) throw ParseError(number, "duplicate edge (first on line " + std::to_string(where) + ")");
    }
    seen.emplace_back(e, number);
    edges.push_back(e);
  }
  return Digraph(static_cast<int>(n), edges);
}

Digraph parse_instance_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    const long long n = doc.at("n").get<long long>();
    if (n < 1) throw ParseError(0, "bad vertex count");
    std::vector<Edge> edges;
    for (const auto& pair : doc.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError(0, "edge must be [u, v]");
      edges.push_back(checked_edge(0, pair[0].get<long long>(), pair[1].get<long long>(), n));
    }
    return Digraph(static_cast<int>(n), edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
}

std::string emit_instance(const Digraph& g, const std::string& comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << '\n';
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.tail << ' ' << e.head << '\n';
  return os.str();
}

std::string emit_instance_json(const Digraph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.tail, e.head});
  return doc.dump() + "\n";
}

std::vector<Edge> parse_edges(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header 'm'");
  const long long m = read_ints(lines[0].first, lines[0].second, 1)[0];
  if (m < 0 || static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError(lines[0].first, "header says " + std::to_string(m) + " edges, found " +
                                         std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto uv = read_ints(lines[i].first, lines[i].second, 2);
    edges.push_back(checked_edge(lines[i].first, uv[0], uv[1], 1LL << 30));
  }
  return edges;
}

std::string emit_edges(const std::vector<Edge>& edges) {
  std::ostringstream os;
  os << edges.size() << '\n';
  for (const Edge& e : edges) os << e.tail << ' ' << e.head << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Digraph load_instance(const std::string& path) {
  const std::string text = read_file(path);
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return json ? parse_instance_json(text) : parse_instance(text);
}

}  // namespace stpec
