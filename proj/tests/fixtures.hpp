#pragma once

#include <filesystem>
#include <string>

#include "stpec/digraph.hpp"
#include "stpec/io.hpp"

namespace fixtures {

using stpec::Digraph;
using stpec::Edge;

// Diamond: s=0, a=1, b=2, t=3.
inline Digraph diamond() { return Digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// Zigzag 4-cycle: s1=0, t1=1, s2=2, t2=3.
inline Digraph zigzag() { return Digraph(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}}); }

inline Digraph triangle_cycle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

// s=0, a=1, b=2, t=3.
inline Digraph k4() { return Digraph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 3}}); }

// u=0, v=1 joined directly and by three paths through 2, 3, 4.
inline Digraph theta3() { return Digraph(5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}); }

inline std::string temp_file(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "stpec_tests";
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  stpec::write_file(path, text);
  return path;
}

}  // namespace fixtures
