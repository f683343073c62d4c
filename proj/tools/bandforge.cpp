// Command-line front end: triangulation solving/certification, two-bridge
// arithmetic and surgery bookkeeping. Every command prints a Report (JSON
// by default, --text for humans) and exits with a code from ExitCode.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bandforge/gluing.hpp"
#include "bandforge/surgery.hpp"
#include "bandforge/tangle.hpp"
#include "bandforge/tri.hpp"
#include "bandforge/verified.hpp"
#include "report.hpp"

namespace fs = std::filesystem;
using namespace bandforge;
using cli::json;
using cli::Report;

namespace {

// Thrown for argument problems; maps to kUsage.
struct UsageError : Error {
  using Error::Error;
};

// Failure with an explicit exit code.
struct CommandError : Error {
  CommandError(int code, const std::string& what) : Error(what), code(code) {}
  int code;
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("'" + text + "' is not a comma-separated list of integers");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const std::int64_t p = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {p, 1};
    }
    const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    const std::int64_t p = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const std::int64_t q = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {p, q};
  } catch (const std::logic_error&) {
    throw UsageError("'" + text + "' is not of the form p/q");
  }
}

tangle::TwoBridge parse_two_bridge(const std::string& text) {
  const auto [p, q] = parse_pair(text);
  return tangle::normalize_two_bridge(p, q);
}

surgery::LensSpace parse_lens(const std::string& text) {
  const auto [p, q] = parse_pair(text);
  return surgery::LensSpace(p, q);
}

surgery::Slope parse_slope(const std::string& text) {
  const auto [p, q] = parse_pair(text);
  return surgery::Slope(p, q);
}

// ---------------------------------------------------------------- tri

struct TriOptions {
  std::string path;
  std::string fixture;
  double tol = 1e-12;
  int max_iter = 50;
  double radius = 0;  // 0: use the radius ladder
  bool all_fixtures = false;
  bool reserialize = false;
};

struct NamedText {
  std::string label;
  std::string text;
};

std::optional<fs::path> fixture_dir() {
  if (const char* dir = std::getenv("BANDFORGE_FIXTURE_DIR"); dir && *dir) return fs::path(dir);
  return std::nullopt;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError(cli::kParse, "cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

NamedText load_input(const TriOptions& o) {
  if (!o.path.empty() && o.path != "-") return {o.path, read_file(o.path)};
  if (!o.fixture.empty()) {
    if (auto dir = fixture_dir()) {
      for (const auto& candidate : {*dir / o.fixture, *dir / (o.fixture + ".tri")})
        if (fs::is_regular_file(candidate)) return {candidate.string(), read_file(candidate)};
    }
    if (auto text = tri::embedded_fixture(o.fixture)) return {"fixture " + o.fixture, std::string(*text)};
    throw UsageError("unknown fixture '" + o.fixture + "' (expected A or B)");
  }
  return {"<stdin>", {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()}};
}

tri::Triangulation parse_or_fail(const NamedText& input) {
  try {
    return tri::parse_triangulation(input.text);
  } catch (const tri::ParseError& e) {
    throw CommandError(cli::kParse, input.label + ": " + std::string(tri::to_string(e.kind())) + ": " + e.what());
  }
}

json shapes_json(const gluing::ShapeVector& z) {
  json out = json::array();
  for (const auto& w : z) out.push_back({w.real(), w.imag()});
  return out;
}

json certificate_json(const verified::Certificate& c) {
  json enclosures = json::array();
  for (const auto& e : c.enclosures) enclosures.push_back({e.re().lo(), e.re().hi(), e.im().lo(), e.im().hi()});
  return {{"name", c.manifold_name},
          {"valid", c.valid()},
          {"contracted", c.contracted},
          {"all_imag_positive", c.all_imag_positive},
          {"radius", c.radius_used},
          {"center_residual", c.approx_residual},
          {"enclosures", enclosures},
          {"volume_enclosure", {c.volume_enclosure.lo(), c.volume_enclosure.hi()}}};
}

// Reals that print as the header's 8-decimal volume.
bool agrees_with_header(const verified::RealInterval& v, double header) {
  return v.lo() <= header + 5e-9 && v.hi() >= header - 5e-9;
}

void add_tri_inputs(Report& r, const TriOptions& o, const std::string& label) {
  r.inputs = {{"source", label}, {"tol", o.tol}, {"max_iter", o.max_iter}};
  if (o.radius > 0) r.inputs["radius"] = o.radius;
}

verified::Certificate certify_one(const tri::Triangulation& t, const TriOptions& o) {
  gluing::NewtonOptions newton{o.tol, o.max_iter};
  if (o.radius <= 0) {
    try {
      return verified::certify_hyperbolic(t, newton);
    } catch (const verified::CertifyError& e) {
      const int code = e.stage() == "validate" ? cli::kParse : e.stage() == "krawczyk" ? cli::kCertify : cli::kSolve;
      throw CommandError(code, e.what());
    }
  }
  gluing::GluingSystem sys;
  gluing::NewtonResult solved;
  try {
    sys = gluing::build_equations(t);
    solved = gluing::newton_solve(sys, t.shape_hints(), newton);
  } catch (const Error& e) {
    throw CommandError(cli::kSolve, e.what());
  }
  try {
    return verified::krawczyk_test(sys, solved.shapes, o.radius, t.name);
  } catch (const Error& e) {
    throw CommandError(cli::kCertify, e.what());
  }
}

void add_certificate_checks(Report& r, const tri::Triangulation& t, const verified::Certificate& c) {
  r.check(t.name + ": certificate valid", c.valid(),
          "contracted=" + std::to_string(c.contracted) + " all_imag_positive=" + std::to_string(c.all_imag_positive));
  if (t.volume_hint)
    r.check(t.name + ": volume enclosure agrees with header", agrees_with_header(c.volume_enclosure, *t.volume_hint));
}

int run_tri(const std::string& sub, const TriOptions& o, bool as_json) {
  Report r;
  r.command = "tri " + sub;

  if (sub == "certify" && o.all_fixtures) {
    std::vector<NamedText> inputs;
    if (auto dir = fixture_dir()) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(*dir))
        if (entry.is_regular_file() && entry.path().extension() == ".tri") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) inputs.push_back({f.string(), read_file(f)});
      if (inputs.empty()) throw UsageError("no .tri files in " + dir->string());
    } else {
      inputs = {{"fixture A", std::string(tri::kAppendixA)}, {"fixture B", std::string(tri::kAppendixB)}};
    }
    std::vector<tri::Triangulation> tris;
    for (const auto& in : inputs) tris.push_back(parse_or_fail(in));
    std::vector<std::future<verified::Certificate>> jobs;
    for (const auto& t : tris) jobs.push_back(std::async(std::launch::async, [&t, &o] { return certify_one(t, o); }));
    r.inputs = {{"all_fixtures", true}};
    json certs = json::array();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      const auto cert = jobs[i].get();
      certs.push_back(certificate_json(cert));
      add_certificate_checks(r, tris[i], cert);
    }
    r.results["certificates"] = certs;
    r.print(std::cout, as_json);
    return r.ok() ? cli::kOk : cli::kCertify;
  }

  const NamedText input = load_input(o);
  const tri::Triangulation t = parse_or_fail(input);
  if (o.reserialize) {
    std::cout << tri::serialize_triangulation(t);
    return cli::kOk;
  }
  add_tri_inputs(r, o, input.label);
  r.results["name"] = t.name;
  r.results["tet_count"] = t.tet_count();

  if (sub == "parse") {
    json cusps = json::array();
    for (const auto& c : t.cusps)
      cusps.push_back({{"topology", tri::to_string(c.topology)}, {"m", c.filling_m}, {"l", c.filling_l}});
    r.results["solution_type"] = tri::to_string(t.solution_type);
    r.results["volume_hint"] = t.volume_hint ? json(*t.volume_hint) : json(nullptr);
    r.results["orientability"] = tri::to_string(t.orientability);
    r.results["cusp_count"] = t.cusp_count;
    r.results["fake_cusp_count"] = t.fake_cusp_count;
    r.results["cusps"] = cusps;
    r.check("validates", tri::validate(t).empty());
    r.check("serialization round trip", tri::parse_triangulation(tri::serialize_triangulation(t)) == t);
  } else if (sub == "volume") {
    const double vol = gluing::volume(t.shape_hints());
    r.results["volume"] = vol;
    r.results["volume_hint"] = t.volume_hint ? json(*t.volume_hint) : json(nullptr);
    if (t.volume_hint) r.check("volume matches header within 5e-7", std::abs(vol - *t.volume_hint) <= 5e-7);
  } else if (sub == "solve") {
    gluing::NewtonResult res;
    gluing::GluingSystem sys;
    try {
      sys = gluing::build_equations(t);
      res = gluing::newton_solve(sys, t.shape_hints(), {o.tol, o.max_iter});
    } catch (const Error& e) {
      throw CommandError(cli::kSolve, e.what());
    }
    const double vol = gluing::volume(res.shapes);
    r.results["shapes"] = shapes_json(res.shapes);
    r.results["residual_max"] = res.max_residual;
    r.results["volume"] = vol;
    r.results["iterations"] = res.iterations;
    r.results["selected_rows"] = res.selected_rows;
    r.results["edge_rows"] = sys.edge_row_count();
    r.results["cusp_rows"] = static_cast<int>(sys.rows.size()) - sys.edge_row_count();
    r.check("residual below tolerance", res.max_residual < o.tol);
    r.check("geometric (all Im z > 0)", gluing::is_geometric(res.shapes));
    if (t.volume_hint) r.check("volume matches header within 5e-7", std::abs(vol - *t.volume_hint) <= 5e-7);
  } else if (sub == "certify") {
    const auto cert = certify_one(t, o);
    r.results["certificate"] = certificate_json(cert);
    add_certificate_checks(r, t, cert);
    r.print(std::cout, as_json);
    return r.ok() ? cli::kOk : cli::kCertify;
  }
  r.print(std::cout, as_json);
  return r.ok() ? cli::kOk : cli::kAssertion;
}

// ---------------------------------------------------------------- twobridge

int run_twobridge(const std::string& sub, const std::vector<std::string>& args, bool as_json) {
  Report r;
  r.command = "twobridge " + sub;
  r.inputs["args"] = args;
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw UsageError("twobridge " + sub + " expects " + std::to_string(n) + " argument(s), got " +
                       std::to_string(args.size()));
  };

  if (sub == "eval") {
    need(1);
    const tangle::ConwayForm cf(parse_int_list(args[0]));
    const auto f = tangle::eval_conway(cf);
    r.results["fraction"] = f.str();
    if (boost::multiprecision::abs(f.num()) >= 2) r.results["schubert"] = tangle::to_two_bridge(f).str();
  } else if (sub == "expand") {
    need(1);
    const auto [p, q] = parse_pair(args[0]);
    const auto cf = tangle::conway_expand(p, q);
    r.results["conway"] = cf.entries();
    const auto back = tangle::to_two_bridge(tangle::eval_conway(cf));
    r.check("expansion evaluates to an equivalent form",
            tangle::two_bridge_equivalent(back, tangle::normalize_two_bridge(p, q)), back.str());
  } else if (sub == "equal") {
    need(2);
    const auto a = parse_two_bridge(args[0]), b = parse_two_bridge(args[1]);
    r.results["a"] = a.str();
    r.results["b"] = b.str();
    r.results["equivalent"] = tangle::two_bridge_equivalent(a, b);
  } else if (sub == "mirror") {
    need(1);
    const auto tb = parse_two_bridge(args[0]);
    r.results["input"] = tb.str();
    r.results["mirror"] = tangle::mirror_two_bridge(tb).str();
  } else if (sub == "unlink1") {
    need(1);
    const auto tb = parse_two_bridge(args[0]);
    const auto w = tangle::is_unlinking_number_one(tb);
    r.results["input"] = tb.str();
    r.results["witness"] = w ? json{{"n", w->first}, {"m", w->second}} : json(nullptr);
  } else if (sub == "cosmetic") {
    need(1);
    const tangle::ConwayForm cf(parse_int_list(args[0]));
    const auto partner = tangle::cosmetic_band_partner(cf);
    const auto before = tangle::to_two_bridge(tangle::eval_conway(cf));
    const auto after = tangle::to_two_bridge(tangle::eval_conway(partner));
    const bool chiral = tangle::verify_chirally_cosmetic(cf);
    r.results["partner"] = partner.str();
    r.results["before"] = before.str();
    r.results["after"] = after.str();
    r.results["mirror_of_before"] = tangle::mirror_two_bridge(before).str();
    r.results["chirally_cosmetic"] = chiral;
    r.check("partner is the mirror image", chiral);
  } else if (sub == "signature") {
    need(1);
    const auto tb = parse_two_bridge(args[0]);
    r.results["input"] = tb.str();
    r.results["signature"] = tangle::signature_two_bridge(tb);
  } else if (sub == "fourmove") {
    need(2);
    const auto a = parse_two_bridge(args[0]), b = parse_two_bridge(args[1]);
    r.results["a"] = a.str();
    r.results["b"] = b.str();
    r.results["signature_a"] = tangle::signature_two_bridge(a);
    r.results["signature_b"] = tangle::signature_two_bridge(b);
    r.results["obstructed"] = tangle::four_move_signature_obstruction(a, b);
  } else {
    throw UsageError("unknown twobridge subcommand " + sub);
  }
  r.print(std::cout, as_json);
  return r.ok() ? cli::kOk : cli::kAssertion;
}

// ---------------------------------------------------------------- surgery

int run_surgery(const std::string& sub, const std::vector<std::string>& args, bool as_json) {
  Report r;
  r.command = "surgery " + sub;
  r.inputs["args"] = args;
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw UsageError("surgery " + sub + " expects " + std::to_string(n) + " argument(s), got " +
                       std::to_string(args.size()));
  };

  if (sub == "distance") {
    need(2);
    const auto a = parse_slope(args[0]), b = parse_slope(args[1]);
    const auto d = surgery::slope_distance(a, b);
    r.results["distance"] = d;
    r.check("distance is symmetric", d == surgery::slope_distance(b, a));
  } else if (sub == "amphi") {
    need(1);
    r.results["distance"] = surgery::amphicheiral_pair_distance(parse_slope(args[0]));
  } else if (sub == "lens-equal") {
    need(2);
    const auto a = parse_lens(args[0]), b = parse_lens(args[1]);
    r.results["a"] = a.str();
    r.results["b"] = b.str();
    r.results["oriented"] = surgery::lens_equivalent(a, b, true);
    r.results["unoriented"] = surgery::lens_equivalent(a, b, false);
  } else if (sub == "lens-mirror") {
    need(1);
    const auto l = parse_lens(args[0]);
    r.results["input"] = l.str();
    r.results["mirror"] = surgery::lens_mirror(l).str();
  } else if (sub == "dbc") {
    need(1);
    const auto tb = parse_two_bridge(args[0]);
    r.results["input"] = tb.str();
    r.results["cover"] = surgery::double_branched_cover(tb).str();
  } else if (sub == "matignon") {
    need(2);
    const auto m = parse_pair(args[0]).first, n = parse_pair(args[1]).first;
    const auto [lens, link] = surgery::matignon_family(m, n);
    r.results["lens"] = lens.str();
    r.results["link"] = link.str();
    const auto w = tangle::is_unlinking_number_one(link);
    r.results["witness"] = w ? json{{"n", w->first}, {"m", w->second}} : json(nullptr);
    r.check("branched cover matches", surgery::double_branched_cover(link) == lens);
    r.check("unlinking number one", w.has_value());
  } else if (sub == "bhw") {
    need(0);
    for (const auto& c : surgery::bhw_example_report()) r.assertions.push_back(c);
    r.results["passed"] = std::count_if(r.assertions.begin(), r.assertions.end(), [](const Check& c) { return c.pass; });
    r.results["total"] = r.assertions.size();
  } else {
    throw UsageError("unknown surgery subcommand " + sub);
  }
  r.print(std::cout, as_json);
  return r.ok() ? cli::kOk : cli::kAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bandforge: two-bridge banding calculus, surgery bookkeeping and certified hyperbolic structures"};
  app.require_subcommand(1);
  bool text = false;
  app.add_flag("--text", text, "Human-readable output instead of JSON");
  app.add_flag("--json", "JSON output (default)");
  app.fallthrough();

  TriOptions tri_opts;
  auto* tri_cmd = app.add_subcommand("tri", "Triangulation files: parse, solve, volume, certify");
  tri_cmd->require_subcommand(1);
  for (const char* name : {"parse", "solve", "volume", "certify"}) {
    auto* sub = tri_cmd->add_subcommand(name);
    sub->add_option("path", tri_opts.path, "Triangulation file ('-' or omitted: standard input)");
    sub->add_option("--fixture", tri_opts.fixture, "Bundled fixture A or B (or a name in $BANDFORGE_FIXTURE_DIR)");
    sub->add_option("--tol", tri_opts.tol, "Newton residual tolerance")->capture_default_str();
    sub->add_option("--max-iter", tri_opts.max_iter, "Newton iteration limit")->capture_default_str();
    sub->add_option("--radius", tri_opts.radius, "Krawczyk box half-width (default: ladder 1e-10, 1e-8, 1e-6)");
    sub->add_flag("--reserialize", tri_opts.reserialize, "Print the parsed triangulation back in file format");
    if (std::string(name) == "certify")
      sub->add_flag("--all-fixtures", tri_opts.all_fixtures,
                    "Certify every fixture concurrently (embedded, or *.tri in $BANDFORGE_FIXTURE_DIR)");
  }

  std::vector<std::string> tb_args;
  auto* tb_cmd = app.add_subcommand("twobridge", "Two-bridge links: Conway forms p,q,r and Schubert pairs p/q");
  tb_cmd->require_subcommand(1);
  for (const char* name : {"eval", "expand", "equal", "mirror", "unlink1", "cosmetic", "signature", "fourmove"})
    tb_cmd->add_subcommand(name)->add_option("args", tb_args);

  std::vector<std::string> sg_args;
  auto* sg_cmd = app.add_subcommand("surgery", "Slopes p/q and lens spaces p/q");
  sg_cmd->require_subcommand(1);
  for (const char* name : {"distance", "amphi", "lens-equal", "lens-mirror", "dbc", "matignon", "bhw"})
    sg_cmd->add_subcommand(name)->add_option("args", sg_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsage;
  }

  const bool as_json = !text;
  try {
    if (tri_cmd->parsed()) return run_tri(tri_cmd->get_subcommands().front()->get_name(), tri_opts, as_json);
    if (tb_cmd->parsed()) return run_twobridge(tb_cmd->get_subcommands().front()->get_name(), tb_args, as_json);
    if (sg_cmd->parsed()) return run_surgery(sg_cmd->get_subcommands().front()->get_name(), sg_args, as_json);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsage;
  }
  return cli::kUsage;
}
