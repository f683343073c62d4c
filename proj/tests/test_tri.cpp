#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bandforge/tri.hpp"
#include "support.hpp"

using namespace bandforge;
using namespace bandforge::tri;
using bandforge::test::fixture;
using bandforge::test::fixture_text;
using bandforge::test::join_lines;
using bandforge::test::lines_of;
using bandforge::test::tokens_of;

namespace {

constexpr const char* kOneTet =
    "one_tet.tri\n"
    "not_attempted  0.00000000\n"
    "oriented_manifold\n"
    "CS_unknown\n"
    "\n"
    "1 0\n"
    "    torus   0.000000000000   0.000000000000\n"
    "\n"
    "1\n"
    "   0    0    0    0 \n"
    " 1032 1032 1032 1032\n"
    "   0    0    0    0 \n"
    "  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0\n"
    "  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0\n"
    "  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0\n"
    "  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0\n"
    "  0.500000000000   0.866025403784\n"
    "\n";

// Line index (0-based) of the neighbor line of tetrahedron 0.
int first_tet_line(const std::vector<std::string>& lines) {
  for (std::size_t i = 0; i + 1 < lines.size(); ++i)
    if (tokens_of(lines[i]).size() == 4 && tokens_of(lines[i + 1]).size() == 4 && tokens_of(lines[i + 1])[0].size() == 4)
      return static_cast<int>(i);
  return -1;
}

ParseErrorKind parse_kind(const std::string& text) {
  try {
    parse_triangulation(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parse unexpectedly succeeded";
  return ParseErrorKind::invalid;
}

// Relabels tetrahedra by `order` and vertices of each tetrahedron by `relabel`.
Triangulation relabeled(const Triangulation& t, const std::vector<int>& order, const std::vector<Permutation>& relabel) {
  Triangulation out = t;
  for (int old = 0; old < t.tet_count(); ++old) {
    const Tetrahedron& src = t.tets[old];
    Tetrahedron& dst = out.tets[order[old]];
    const Permutation& s = relabel[old];
    for (int f = 0; f < 4; ++f) {
      const int n = src.neighbors[f];
      dst.neighbors[s[f]] = order[n];
      dst.gluings[s[f]] = relabel[n] * src.gluings[f] * s.inverse();
      dst.vertex_cusp[s[f]] = src.vertex_cusp[f];
    }
  }
  return out;
}

}  // namespace

TEST(Permutation, Basics) {
  const Permutation p = *Permutation::parse("2031");
  EXPECT_EQ(p[0], 2);
  EXPECT_EQ(p.str(), "2031");
  EXPECT_EQ(p * p.inverse(), Permutation());
  EXPECT_EQ(Permutation::all().size(), 24u);
  int even = 0;
  for (const auto& q : Permutation::all()) even += q.sign() == 1;
  EXPECT_EQ(even, 12);
  EXPECT_FALSE(Permutation::parse("0133").has_value());
  EXPECT_FALSE(Permutation::parse("013").has_value());
  EXPECT_FALSE(Permutation::parse("01a3").has_value());
}

TEST(Parse, AppendixA) {
  const auto t = fixture("A");
  EXPECT_EQ(t.name, "positive_NewExDoubleBranchedCover.tri");
  EXPECT_EQ(t.tet_count(), 12);
  EXPECT_EQ(t.cusp_count, 1);
  ASSERT_TRUE(t.volume_hint);
  EXPECT_DOUBLE_EQ(*t.volume_hint, 10.01776364);
  EXPECT_EQ(t.solution_type, SolutionType::geometric_solution);
  EXPECT_EQ(t.orientability, Orientability::oriented);
  EXPECT_EQ(t.tets[0].neighbors, (std::array<int, 4>{9, 7, 1, 2}));
  EXPECT_EQ(t.tets[0].gluings[1].str(), "2031");
}

TEST(Parse, AppendixB) {
  const auto t = fixture("B");
  EXPECT_EQ(t.tet_count(), 26);
  EXPECT_EQ(t.cusp_count, 7);
  EXPECT_DOUBLE_EQ(*t.volume_hint, 17.66121174);
  EXPECT_EQ(std::count_if(t.cusps.begin(), t.cusps.end(), [](const CuspInfo& c) { return c.is_complete(); }), 1);
  EXPECT_EQ(t.cusps[0].filling_m, 3.0);
  EXPECT_EQ(t.cusps[0].filling_l, 2.0);
}

TEST(Parse, ShapeHintsAreGeometric) {
  for (const char* which : {"A", "B"})
    for (const auto& z : fixture(which).shape_hints()) EXPECT_GT(z.imag(), 0.0);
}

TEST(Parse, OrientablePeripheralSheetsVanish) {
  for (const char* which : {"A", "B"})
    for (const auto& tet : fixture(which).tets)
      for (int row : {1, 3})
        for (int x : tet.peripheral[row]) ASSERT_EQ(x, 0);
}

TEST(Parse, EmbeddedFixturesMatchFiles) {
  EXPECT_EQ(std::string(kAppendixA), fixture_text("A"));
  EXPECT_EQ(std::string(kAppendixB), fixture_text("B"));
  EXPECT_EQ(embedded_fixture("A"), kAppendixA);
  EXPECT_FALSE(embedded_fixture("C").has_value());
}

TEST(Parse, EmptyInput) {
  try {
    parse_triangulation("");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::missing_header);
    EXPECT_NE(std::string(e.what()).find("missing header"), std::string::npos);
  }
}

TEST(Parse, AcceptsPercentMarker) {
  const auto t = parse_triangulation("% Triangulation\n" + fixture_text("A"));
  EXPECT_TRUE(t.percent_header);
  EXPECT_EQ(t.tet_count(), 12);
}

TEST(Corruption, SwappedGluingDigitIsInvolutionFailure) {
  auto lines = lines_of(fixture_text("A"));
  const int at = first_tet_line(lines) + 1;
  ASSERT_EQ(lines[at], " 0132 2031 3120 2031");
  lines[at] = " 0132 2031 3120 2013";
  try {
    parse_triangulation(join_lines(lines));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::involution);
    EXPECT_GT(e.line(), 0);
  }
}

TEST(Corruption, CuspIndexEqualToCuspCount) {
  auto lines = lines_of(fixture_text("A"));
  const int at = first_tet_line(lines) + 2;
  lines[at] = "   1    0    0    0 ";
  EXPECT_EQ(parse_kind(join_lines(lines)), ParseErrorKind::cusp_range);
  Triangulation t = fixture("A");
  t.tets[3].vertex_cusp[2] = t.cusp_count;
  const auto diags = validate(t);
  ASSERT_FALSE(diags.empty());
  EXPECT_EQ(diags.front().kind, DiagnosticKind::cusp_range);
  EXPECT_EQ(diags.front().tet, 3);
}

TEST(Corruption, MalformedPermutation) {
  auto lines = lines_of(fixture_text("B"));
  const int at = first_tet_line(lines) + 1;
  auto toks = tokens_of(lines[at]);
  lines[at] = " " + toks[0] + " 3311 " + toks[2] + " " + toks[3];
  EXPECT_EQ(parse_kind(join_lines(lines)), ParseErrorKind::bad_permutation);
}

TEST(Corruption, NeighborOutOfRange) {
  auto lines = lines_of(fixture_text("A"));
  const int at = first_tet_line(lines);
  lines[at] = "  12    7    1    2 ";
  EXPECT_EQ(parse_kind(join_lines(lines)), ParseErrorKind::neighbor_range);
}

TEST(Corruption, WrongTokenCount) {
  auto lines = lines_of(fixture_text("A"));
  const int at = first_tet_line(lines) + 3;
  lines[at] += "  0";
  EXPECT_EQ(parse_kind(join_lines(lines)), ParseErrorKind::token_count);
  lines = lines_of(fixture_text("A"));
  lines[first_tet_line(lines) + 1] = " 0132 2031 3120";
  EXPECT_EQ(parse_kind(join_lines(lines)), ParseErrorKind::token_count);
}

TEST(Corruption, BadNumbersAndHeaders) {
  auto lines = lines_of(fixture_text("A"));
  lines[1] = "geometric_solution  ten";
  EXPECT_EQ(parse_kind(join_lines(lines)), ParseErrorKind::bad_number);
  lines = lines_of(fixture_text("A"));
  lines[6] = "    torus   1.500000000000   0.000000000000";
  EXPECT_EQ(parse_kind(join_lines(lines)), ParseErrorKind::invalid);
  EXPECT_EQ(parse_kind(fixture_text("A") + "extra\n"), ParseErrorKind::trailing_data);
}

TEST(Corruption, DistinctDiagnosticsCarryLineContext) {
  auto lines = lines_of(fixture_text("A"));
  const int at = first_tet_line(lines);
  lines[at] = "  -1    7    1    2 ";
  try {
    parse_triangulation(join_lines(lines));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), at + 1);
    EXPECT_NE(std::string(e.what()).find("line " + std::to_string(at + 1)), std::string::npos);
  }
}

TEST(Validate, FixturesAreClean) {
  EXPECT_TRUE(validate(fixture("A")).empty());
  EXPECT_TRUE(validate(fixture("B")).empty());
}

TEST(Validate, DetectsBrokenPeripheralCurve) {
  Triangulation t = fixture("A");
  t.tets[0].peripheral[0][1] += 1;
  const auto diags = validate(t);
  ASSERT_FALSE(diags.empty());
  EXPECT_EQ(diags.front().kind, DiagnosticKind::peripheral_flow);
}

TEST(Serialize, ByteAndTokenIdenticalRoundTrip) {
  for (const char* which : {"A", "B"}) {
    const std::string text = fixture_text(which);
    const std::string out = serialize_triangulation(parse_triangulation(text));
    EXPECT_EQ(tokens_of(out), tokens_of(text)) << which;
    EXPECT_EQ(out, text) << which;
    EXPECT_EQ(parse_triangulation(out), parse_triangulation(text));
  }
}

TEST(Serialize, SingleTetrahedronHandFixture) {
  const auto t = parse_triangulation(kOneTet);
  EXPECT_EQ(t.tet_count(), 1);
  EXPECT_EQ(serialize_triangulation(t), kOneTet);
}

TEST(Serialize, NonRoundNumbersSurvive) {
  Triangulation t = fixture("A");
  t.tets[0].shape_hint = {0.1 + 0.2, 1.0 / 3.0};
  t.volume_hint = 10.0177636425177;
  EXPECT_EQ(parse_triangulation(serialize_triangulation(t)), t);
}

TEST(Isomorphism, Basics) {
  const auto a = fixture("A"), b = fixture("B");
  EXPECT_TRUE(combinatorial_isomorphic(a, a));
  EXPECT_TRUE(combinatorial_isomorphic(b, b));
  EXPECT_FALSE(combinatorial_isomorphic(a, b));
}

TEST(Isomorphism, RelabeledCopies) {
  std::mt19937 rng(3);
  const auto all = Permutation::all();
  for (const char* which : {"A", "B"}) {
    const auto t = fixture(which);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> order(t.tet_count());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<Permutation> relabel(t.tet_count());
      for (auto& p : relabel) p = all[rng() % all.size()];
      const auto copy = relabeled(t, order, relabel);
      const auto iso = find_isomorphism(t, copy);
      ASSERT_TRUE(iso.has_value()) << which;
      for (int i = 0; i < t.tet_count(); ++i) EXPECT_EQ(iso->tet_map[i], order[i]);
    }
  }
}

TEST(Isomorphism, DetectsRewiring) {
  // Swap the partners of two face pairings: same tet count, different gluing.
  Triangulation t = fixture("A");
  Triangulation u = t;
  auto& x = u.tets[0];
  std::swap(x.neighbors[0], x.neighbors[1]);
  std::swap(x.gluings[0], x.gluings[1]);
  EXPECT_FALSE(combinatorial_isomorphic(t, u));
}
