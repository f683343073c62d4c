#pragma once

#include <charconv>
#include <cstdio>
#include <string>

#include "bandforge/tri/triangulation.hpp"

namespace bandforge::tri {

namespace detail {

// Fixed-point text with `decimals` digits when that round-trips exactly,
// otherwise the shortest round-trip representation. `width` pads on the left.
inline std::string format_real(double x, int decimals, int width = 0) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%*.*f", width, decimals, x);
  double back = 0;
  const char* begin = buf;
  while (*begin == ' ') ++begin;
  std::from_chars(begin, buf + std::char_traits<char>::length(buf), back);
  if (back == x) return buf;
  char shortest[64];
  const auto res = std::to_chars(shortest, shortest + sizeof shortest, x);
  std::string s(shortest, res.ptr);
  if (static_cast<int>(s.size()) < width) s.insert(0, width - s.size(), ' ');
  return s;
}

inline std::string format_int(int x, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%*d", width, x);
  return buf;
}

}  // namespace detail

/// Writes the SnapPea text layout. The appendix files round-trip byte for
/// byte; in general parse(serialize(t)) == t.
inline std::string serialize_triangulation(const Triangulation& t) {
  using detail::format_int;
  using detail::format_real;
  std::string out;
  if (t.percent_header) out += "% Triangulation\n";
  out += t.name + "\n";
  out += std::string(to_string(t.solution_type));
  if (t.volume_hint) out += "  " + format_real(*t.volume_hint, 8);
  out += "\n";
  out += std::string(to_string(t.orientability)) + "\n";
  out += t.cs_flag + "\n\n";
  out += std::to_string(t.cusp_count) + " " + std::to_string(t.fake_cusp_count) + "\n";
  for (const auto& c : t.cusps)
    out += "    " + std::string(to_string(c.topology)) + " " + format_real(c.filling_m, 12, 16) + " " +
           format_real(c.filling_l, 12, 16) + "\n";
  out += "\n" + std::to_string(t.tet_count()) + "\n";
  for (const auto& tet : t.tets) {
    for (const int n : tet.neighbors) out += format_int(n, 4) + " ";
    out += "\n";
    for (const auto& g : tet.gluings) out += " " + g.str();
    out += "\n";
    for (const int c : tet.vertex_cusp) out += format_int(c, 4) + " ";
    out += "\n";
    for (const auto& row : tet.peripheral) {
      for (const int x : row) out += " " + format_int(x, 2);
      out += "\n";
    }
    out += format_real(tet.shape_hint.real(), 12, 16) + " " + format_real(tet.shape_hint.imag(), 12, 16) + "\n\n";
  }
  return out;
}

}  // namespace bandforge::tri
