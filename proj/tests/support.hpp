#pragma once

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "bandforge/tri.hpp"

namespace bandforge::test {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string fixture_path(const std::string& which) {
  return std::string(BANDFORGE_TEST_FIXTURE_DIR) + (which == "A" ? "/appendix_a.tri" : "/appendix_b.tri");
}

inline std::string fixture_text(const std::string& which) { return read_text(fixture_path(which)); }

inline tri::Triangulation fixture(const std::string& which) { return tri::parse_triangulation(fixture_text(which)); }

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

inline std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

inline std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

}  // namespace bandforge::test
