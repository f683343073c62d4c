#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "bandforge/error.hpp"
#include "bandforge/tri/permutation.hpp"
#include "bandforge/tri/triangulation.hpp"
#include "bandforge/tri/validate.hpp"

namespace bandforge::tri {

enum class ParseErrorKind {
  missing_header,
  bad_header,
  bad_number,
  token_count,
  bad_permutation,
  neighbor_range,
  involution,
  cusp_range,
  invalid,  // any other validation diagnostic
  trailing_data,
};

inline std::string_view to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::missing_header: return "missing_header";
    case ParseErrorKind::bad_header: return "bad_header";
    case ParseErrorKind::bad_number: return "bad_number";
    case ParseErrorKind::token_count: return "token_count";
    case ParseErrorKind::bad_permutation: return "bad_permutation";
    case ParseErrorKind::neighbor_range: return "neighbor_range";
    case ParseErrorKind::involution: return "involution";
    case ParseErrorKind::cusp_range: return "cusp_range";
    case ParseErrorKind::invalid: return "invalid";
    case ParseErrorKind::trailing_data: return "trailing_data";
  }
  return "unknown";
}

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), kind_(kind), line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  // 1-based; 0 when the error has no single line.
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

namespace detail {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return at_ >= lines_.size(); }
  int line_number() const { return done() ? (lines_.empty() ? 0 : lines_.back().number) : lines_[at_].number; }

  const Line& next(std::string_view what) {
    if (done())
      throw ParseError(ParseErrorKind::token_count, line_number(), "unexpected end of input, expected " + std::string(what));
    return lines_[at_++];
  }

  const Line& next(std::string_view what, std::size_t tokens) {
    const Line& l = next(what);
    if (l.tokens.size() != tokens)
      throw ParseError(ParseErrorKind::token_count, l.number,
                       std::string(what) + ": expected " + std::to_string(tokens) + " tokens, found " +
                           std::to_string(l.tokens.size()));
    return l;
  }

  const Line& peek() const { return lines_[at_]; }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

inline int to_int(std::string_view tok, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(ParseErrorKind::bad_number, line, "expected an integer, found '" + std::string(tok) + "'");
  return value;
}

inline double to_double(std::string_view tok, int line) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(ParseErrorKind::bad_number, line, "expected a number, found '" + std::string(tok) + "'");
  return value;
}

inline std::string join(const std::vector<std::string_view>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace detail

/// Parses the SnapPea text format. Every tetrahedron block must be exactly
/// 4 neighbors, 4 gluings, 4 cusp indices, 4 rows of 16 peripheral
/// entries and a 2-token shape, one group per line. The result is validated;
/// the first diagnostic becomes a ParseError.
inline Triangulation parse_triangulation(std::string_view text) {
  using detail::to_double;
  using detail::to_int;
  detail::Cursor in(detail::split_lines(text));
  if (in.done()) throw ParseError(ParseErrorKind::missing_header, 0, "missing header");

  Triangulation t;
  if (in.peek().tokens.size() >= 1 && in.peek().tokens[0] == "%") {
    if (detail::join(in.peek().tokens) != "% Triangulation")
      throw ParseError(ParseErrorKind::bad_header, in.peek().number, "unrecognized '%' line");
    t.percent_header = true;
    in.next("marker");
    if (in.done()) throw ParseError(ParseErrorKind::missing_header, 0, "missing header");
  }
  t.name = detail::join(in.next("name").tokens);

  {
    const auto& l = in.next("solution type");
    bool known = false;
    for (std::size_t i = 0; i < kSolutionTypeNames.size(); ++i)
      if (l.tokens[0] == kSolutionTypeNames[i]) {
        t.solution_type = static_cast<SolutionType>(i);
        known = true;
      }
    if (!known)
      throw ParseError(ParseErrorKind::bad_header, l.number, "unknown solution type '" + std::string(l.tokens[0]) + "'");
    if (l.tokens.size() == 2)
      t.volume_hint = to_double(l.tokens[1], l.number);
    else if (l.tokens.size() != 1)
      throw ParseError(ParseErrorKind::token_count, l.number, "solution line: expected 1 or 2 tokens");
  }
  {
    const auto& l = in.next("orientability", 1);
    bool known = false;
    for (std::size_t i = 0; i < kOrientabilityNames.size(); ++i)
      if (l.tokens[0] == kOrientabilityNames[i]) {
        t.orientability = static_cast<Orientability>(i);
        known = true;
      }
    if (!known)
      throw ParseError(ParseErrorKind::bad_header, l.number, "unknown orientability '" + std::string(l.tokens[0]) + "'");
  }
  {
    const auto& l = in.next("Chern-Simons flag");
    if (l.tokens[0] != "CS_unknown" && l.tokens[0] != "CS_known")
      throw ParseError(ParseErrorKind::bad_header, l.number, "expected CS_unknown or CS_known");
    t.cs_flag = detail::join(l.tokens);
  }
  int cusp_header_line = 0;
  {
    const auto& l = in.next("cusp counts", 2);
    cusp_header_line = l.number;
    t.cusp_count = to_int(l.tokens[0], l.number);
    t.fake_cusp_count = to_int(l.tokens[1], l.number);
    if (t.cusp_count < 0 || t.fake_cusp_count < 0)
      throw ParseError(ParseErrorKind::bad_header, l.number, "negative cusp count");
  }
  for (int c = 0; c < t.cusp_count + t.fake_cusp_count; ++c) {
    const auto& l = in.next("cusp", 3);
    CuspInfo cusp;
    if (l.tokens[0] == "torus")
      cusp.topology = CuspTopology::torus;
    else if (l.tokens[0] == "Klein" || l.tokens[0] == "klein")
      cusp.topology = CuspTopology::klein;
    else
      throw ParseError(ParseErrorKind::bad_header, l.number, "unknown cusp topology '" + std::string(l.tokens[0]) + "'");
    cusp.filling_m = to_double(l.tokens[1], l.number);
    cusp.filling_l = to_double(l.tokens[2], l.number);
    t.cusps.push_back(cusp);
  }
  const int count = [&] {
    const auto& l = in.next("tetrahedron count", 1);
    const int n = to_int(l.tokens[0], l.number);
    if (n < 0) throw ParseError(ParseErrorKind::bad_header, l.number, "negative tetrahedron count");
    return n;
  }();

  // Line numbers of each tetrahedron's neighbor, gluing, cusp and first
  // peripheral lines, for diagnostics raised by validate().
  std::vector<std::array<int, 4>> block_line(count);
  t.tets.resize(count);
  for (int i = 0; i < count; ++i) {
    Tetrahedron& tet = t.tets[i];
    const std::string label = "tetrahedron " + std::to_string(i);
    const auto& nb = in.next(label + " neighbors", 4);
    block_line[i][0] = nb.number;
    for (int f = 0; f < 4; ++f) tet.neighbors[f] = to_int(nb.tokens[f], nb.number);
    const auto& gl = in.next(label + " gluings", 4);
    block_line[i][1] = gl.number;
    for (int f = 0; f < 4; ++f) {
      const auto perm = Permutation::parse(gl.tokens[f]);
      if (!perm)
        throw ParseError(ParseErrorKind::bad_permutation, gl.number,
                         label + ": '" + std::string(gl.tokens[f]) + "' is not a permutation of 0123");
      tet.gluings[f] = *perm;
    }
    const auto& cu = in.next(label + " cusp indices", 4);
    block_line[i][2] = cu.number;
    for (int v = 0; v < 4; ++v) tet.vertex_cusp[v] = to_int(cu.tokens[v], cu.number);
    for (int row = 0; row < 4; ++row) {
      const auto& pr = in.next(label + " peripheral row " + std::to_string(row), 16);
      if (row == 0) block_line[i][3] = pr.number;
      for (int k = 0; k < 16; ++k) tet.peripheral[row][k] = to_int(pr.tokens[k], pr.number);
    }
    const auto& sh = in.next(label + " shape", 2);
    tet.shape_hint = {to_double(sh.tokens[0], sh.number), to_double(sh.tokens[1], sh.number)};
  }
  if (!in.done())
    throw ParseError(ParseErrorKind::trailing_data, in.peek().number, "unexpected data after the last tetrahedron");

  const auto diagnostics = validate(t);
  if (!diagnostics.empty()) {
    const Diagnostic& d = diagnostics.front();
    ParseErrorKind kind = ParseErrorKind::invalid;
    if (d.kind == DiagnosticKind::neighbor_range) kind = ParseErrorKind::neighbor_range;
    if (d.kind == DiagnosticKind::involution) kind = ParseErrorKind::involution;
    if (d.kind == DiagnosticKind::cusp_range) kind = ParseErrorKind::cusp_range;
    int part = 0;
    switch (d.kind) {
      case DiagnosticKind::involution: part = 1; break;
      case DiagnosticKind::cusp_range:
      case DiagnosticKind::cusp_mismatch: part = 2; break;
      case DiagnosticKind::peripheral_sheet:
      case DiagnosticKind::peripheral_flow: part = 3; break;
      default: break;
    }
    const int line = d.tet >= 0 ? block_line[d.tet][part] : cusp_header_line;
    throw ParseError(kind, line, d.message);
  }
  return t;
}

}  // namespace bandforge::tri
