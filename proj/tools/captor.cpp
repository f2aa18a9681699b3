// Command-line front end: exact ellipsoid functionals, theorem constants,
// family sweeps, walk-on-spheres estimates, extremal search, and the
// acceptance suite. Human tables by default, CSV/JSON on request.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "captor/bounds.hpp"
#include "captor/constructions.hpp"
#include "captor/errors.hpp"
#include "captor/exact.hpp"
#include "captor/geometry.hpp"
#include "captor/john.hpp"
#include "captor/montecarlo.hpp"
#include "captor/optimize.hpp"
#include "captor/verify.hpp"

namespace {

using nlohmann::json;
namespace bounds = captor::bounds;
namespace constructions = captor::constructions;
namespace exact = captor::exact;
namespace geometry = captor::geometry;
namespace montecarlo = captor::montecarlo;
namespace optimize = captor::optimize;
namespace verify = captor::verify;
using geometry::AxisVector;
using geometry::Body;

// Default capacity of the closed unit cube from a 10^7-walker run recorded
// in data/cap_cube_d3.json (std error 3.3e-3); overridable with
// --cube-capacity.
constexpr double kCubeCapacityD3 = 8.304563823917212;

std::string fmt12(double v) {
  char b[64];
  std::snprintf(b, sizeof b, "%.12g", v);
  return b;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string join_axes(const AxisVector& a) {
  std::string out;
  for (int i = 0; i < a.dim(); ++i) {
    if (i) out += ' ';
    out += fmt12(a[i]);
  }
  return out;
}

struct Row {
  std::string name;
  std::string display;
  json value;  // number, string, or {"log10": ...}
  std::string provenance;
};

Row num_row(std::string name, double v, std::string provenance) {
  return {std::move(name), fmt12(v), v, std::move(provenance)};
}

Row log_row(std::string name, const bounds::LogValue& v,
            std::string provenance) {
  return {std::move(name), v.str(), json{{"log10", v.log10()}},
          std::move(provenance)};
}

Row text_row(std::string name, std::string text, std::string provenance) {
  json j = text;
  return {std::move(name), std::move(text), std::move(j),
          std::move(provenance)};
}

struct Output {
  bool as_json = false;
  bool as_csv = false;
  std::string command_line;
  json config = json::object();
  std::optional<std::uint64_t> seed;
};

void print_rows(const Output& out, const std::vector<Row>& rows) {
  if (out.as_json) {
    json j;
    j["artifact"] = {{"name", "captor"}, {"version", verify::kVersion}};
    j["command_line"] = out.command_line;
    j["config"] = out.config;
    if (out.seed) j["seed"] = *out.seed;
    // constant so that identical inputs give byte-identical documents
    j["timestamp"] = "";
    json rs = json::array();
    for (const auto& r : rows)
      rs.push_back({{"name", r.name},
                    {"value", r.value},
                    {"provenance", r.provenance}});
    j["results"] = std::move(rs);
    std::printf("%s\n", j.dump(2).c_str());
  } else if (out.as_csv) {
    std::printf("name,value,provenance\n");
    for (const auto& r : rows)
      std::printf("%s,%s,%s\n", csv_field(r.name).c_str(),
                  csv_field(r.display).c_str(),
                  csv_field(r.provenance).c_str());
  } else {
    for (const auto& r : rows)
      std::printf("%-18s %s  [%s]\n", r.name.c_str(), r.display.c_str(),
                  r.provenance.c_str());
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
      ++pos;
    if (pos != tok.size())
      throw captor::GeometryError("malformed number in list: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw captor::GeometryError("empty number list");
  return out;
}

// "A..B" expands to a log-spaced grid (one point per decade when the
// endpoints are decades apart, otherwise `points` of them); a comma list is
// taken as-is and sorted ascending.
std::vector<double> parse_grid(const std::string& text, int points) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    std::vector<double> v = parse_list(text);
    std::sort(v.begin(), v.end());
    return v;
  }
  const double a = std::stod(text.substr(0, dots));
  const double b = std::stod(text.substr(dots + 2));
  if (!(a > 0.0) || !(b > 0.0) || a == b)
    throw captor::GeometryError("range endpoints must be positive and distinct");
  int n = points;
  if (n <= 0) {
    const double decades = std::abs(std::log10(b / a));
    n = (std::abs(decades - std::round(decades)) < 1e-9)
            ? int(std::round(decades)) + 1
            : 7;
  }
  if (n < 2) n = 2;
  std::vector<double> out(static_cast<std::size_t>(n));
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i)
    out[std::size_t(i)] = std::exp(la + (lb - la) * i / (n - 1));
  out.front() = a;
  out.back() = b;
  return out;
}

Body named_body(const std::string& name, int d) {
  if (name == "ball") return Body::ball(d, 1.0);
  if (name == "cube") return Body::unit_cube(d);
  std::ifstream in(name);
  if (!in)
    throw captor::GeometryError("body must be ball, cube, or a readable JSON file: " +
                                name);
  std::stringstream buf;
  buf << in.rdbuf();
  return geometry::body_from_json(buf.str());
}

std::vector<Row> planar_rows(double a1, double a2, double q) {
  if (a2 > a1) std::swap(a1, a2);
  std::vector<Row> rows;
  rows.push_back(num_row("logcap", exact::ellipse_logcap(a1, a2), "exact"));
  rows.push_back(num_row("rigidity",
                         exact::ellipsoid_torsion(AxisVector{a1, a2}),
                         "exact"));
  rows.push_back(num_row(
      "area", geometry::unit_ball_volume(2) * a1 * a2, "exact"));
  rows.push_back(num_row("h_q", exact::h_q_ellipse(a1, a2, q), "exact"));
  return rows;
}

std::vector<Row> ellipsoid_rows(const AxisVector& a, double q,
                                const exact::QuadratureConfig& cfg) {
  const auto fv = exact::g_q_ellipsoid(a, q, cfg);
  std::vector<Row> rows;
  rows.push_back(num_row("capacity", fv.cap, "quadrature"));
  rows.push_back(num_row("rigidity", fv.torsion, "exact"));
  rows.push_back(num_row("measure", fv.measure, "exact"));
  rows.push_back(num_row("g_q", fv.g_q, "quadrature"));
  return rows;
}

std::vector<Row> ball_rows(int d, double r, double q) {
  const auto bc = geometry::ball_constants(d);
  std::vector<Row> rows;
  const double cap = bc.kappa * std::pow(r, d - 2);
  const double tor = bc.tau * std::pow(r, d + 2);
  const double vol = bc.omega * std::pow(r, d);
  rows.push_back(num_row("capacity", cap, "exact"));
  rows.push_back(num_row("rigidity", tor, "exact"));
  rows.push_back(num_row("measure", vol, "exact"));
  rows.push_back(num_row("g_q", exact::g_q(cap, tor, vol, q, d).g_q, "exact"));
  return rows;
}

std::vector<Row> polytope_rows(const Body& body, double q,
                               const exact::QuadratureConfig& cfg) {
  const auto sw = bounds::sandwich_g_q(body, q, cfg);
  std::vector<Row> rows;
  rows.push_back(num_row("measure", geometry::volume(body), "exact"));
  rows.push_back(num_row("g_q_lower", sw.lower, "bound"));
  rows.push_back(num_row("g_q_upper", sw.upper, "bound"));
  rows.push_back(text_row("inner_axes", join_axes(sw.inner_axes), "bound"));
  rows.push_back(text_row("outer_axes", join_axes(sw.outer_axes), "bound"));
  return rows;
}

struct EvalArgs {
  std::string ellipsoid, ellipse, body;
  int d = 3;
  double q = 1.0;
  double tol = 1e-11;
};

int cmd_eval(const EvalArgs& a, Output out) {
  out.config = {{"d", a.d}, {"q", a.q}, {"tol", a.tol}};
  const exact::QuadratureConfig qc{a.tol, 2000};
  std::vector<Row> rows;
  if (!a.ellipse.empty()) {
    const std::vector<double> ax = parse_list(a.ellipse);
    if (ax.size() != 2)
      throw captor::GeometryError("--ellipse takes exactly two semi-axes");
    rows = planar_rows(ax[0], ax[1], a.q);
  } else if (!a.ellipsoid.empty()) {
    const AxisVector ax(parse_list(a.ellipsoid));
    if (ax.dim() < 3)
      throw captor::GeometryError(
          "Newtonian capacity requires d >= 3; use --ellipse for the planar "
          "functional");
    rows = ellipsoid_rows(ax, a.q, qc);
  } else {
    const Body body = named_body(a.body, a.d);
    if (const auto* b = body.as<geometry::Ball>()) {
      if (body.dim() == 2)
        rows = planar_rows(b->radius, b->radius, a.q);
      else
        rows = ball_rows(body.dim(), b->radius, a.q);
    } else if (const auto* e = body.as<geometry::Ellipsoid>()) {
      if (body.dim() == 2)
        rows = planar_rows(e->axes[0], e->axes[1], a.q);
      else
        rows = ellipsoid_rows(e->axes, a.q, qc);
    } else if (body.as<geometry::VPolytope>()) {
      rows = polytope_rows(body, a.q, qc);
    } else {
      throw captor::GeometryError(
          "eval handles convex bodies; use mc for disjoint unions");
    }
  }
  print_rows(out, rows);
  return 0;
}

struct BoundsArgs {
  int d = 3;
  double q = 1.0;
};

int cmd_bounds(const BoundsArgs& a, Output out) {
  out.config = {{"d", a.d}, {"q", a.q}};
  std::vector<Row> rows;
  if (a.d == 2) {
    const auto pc = bounds::planar_constants(a.q);
    rows.push_back(num_row("q", pc.q, "exact"));
    if (pc.sup_bound)
      rows.push_back(log_row("sup_bound", *pc.sup_bound, "exact"));
    if (pc.sup_diam_ratio)
      rows.push_back(log_row("sup_diam_ratio", *pc.sup_diam_ratio, "exact"));
    if (pc.inf_bound)
      rows.push_back(log_row("inf_bound", *pc.inf_bound, "exact"));
    if (pc.inf_diam_ratio)
      rows.push_back(log_row("inf_diam_ratio", *pc.inf_diam_ratio, "exact"));
  } else {
    const auto tc = bounds::theorem_constants(a.d, a.q);
    rows.push_back(num_row("q_critical", tc.q_critical, "exact"));
    if (tc.sup_coeff)
      rows.push_back(log_row("sup_coefficient", *tc.sup_coeff, "exact"));
    if (tc.sup_diam_ratio)
      rows.push_back(log_row("sup_diam_ratio", *tc.sup_diam_ratio, "exact"));
    if (tc.sup_diam_ratio_d3q1)
      rows.push_back(
          log_row("sup_diam_ratio_boundary", *tc.sup_diam_ratio_d3q1,
                  "exact"));
    if (tc.inf_coeff)
      rows.push_back(log_row("inf_coefficient", *tc.inf_coeff, "exact"));
    if (tc.inf_diam_ratio)
      rows.push_back(log_row("inf_diam_ratio", *tc.inf_diam_ratio, "exact"));
  }
  print_rows(out, rows);
  return 0;
}

struct SequenceArgs {
  std::string family;
  double q = 1.0;
  int d = 3;
  int k = 3;
  std::string eps = "1e-1..1e-6";
  std::string n = "1,2,4,8,16,32";
  int points = 0;
  double cube_capacity = kCubeCapacityD3;
  double tol = 1e-10;
};

int cmd_sequence(const SequenceArgs& a, Output out) {
  out.config = {{"family", a.family}, {"d", a.d},   {"q", a.q},
                {"k", a.k},           {"tol", a.tol}};
  constructions::Family fam;
  std::vector<double> params;
  if (a.family == "pancake") {
    fam = constructions::Family::pancake;
    params = parse_grid(a.eps, a.points);
  } else if (a.family == "packing") {
    fam = constructions::Family::ball_packing;
    params = parse_list(a.n);
    std::sort(params.begin(), params.end());
    out.config["cube_capacity"] = a.cube_capacity;
  } else if (a.family == "prolate") {
    fam = constructions::Family::prolate;
    params = parse_grid(a.eps, a.points);
  } else if (a.family == "oblate") {
    fam = constructions::Family::oblate;
    params = parse_grid(a.eps, a.points);
  } else if (a.family == "multi") {
    fam = constructions::Family::multi_collapse;
    params = parse_grid(a.eps, a.points);
  } else {
    throw captor::GeometryError(
        "family must be one of pancake, packing, prolate, oblate, multi");
  }

  constructions::SweepOptions opt;
  opt.q = a.q;
  opt.d = a.d;
  opt.k = a.k;
  opt.cube_capacity = a.cube_capacity;
  opt.quadrature = exact::QuadratureConfig{a.tol, 2000};
  const auto rows = constructions::sweep(fam, params, opt);

  auto cell = [](const std::optional<double>& v) {
    return v ? fmt12(*v) : std::string();
  };
  if (out.as_json) {
    json j;
    j["artifact"] = {{"name", "captor"}, {"version", verify::kVersion}};
    j["command_line"] = out.command_line;
    j["config"] = out.config;
    j["timestamp"] = "";
    json rs = json::array();
    for (const auto& r : rows) {
      json o;
      o["parameter"] = r.parameter;
      if (r.exact) o["exact"] = *r.exact;
      if (r.bound) o["bound"] = *r.bound;
      o["bound_kind"] = constructions::bound_kind_name(r.bound_kind);
      if (r.asymptote) o["asymptote"] = *r.asymptote;
      if (r.ratio) o["ratio"] = *r.ratio;
      rs.push_back(std::move(o));
    }
    j["rows"] = std::move(rs);
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("parameter,exact,bound,bound_kind,asymptote,ratio\n");
    for (const auto& r : rows)
      std::printf("%s,%s,%s,%s,%s,%s\n", fmt12(r.parameter).c_str(),
                  cell(r.exact).c_str(), cell(r.bound).c_str(),
                  constructions::bound_kind_name(r.bound_kind),
                  cell(r.asymptote).c_str(), cell(r.ratio).c_str());
  }
  return 0;
}

struct McArgs {
  std::string body = "ball";
  int d = 3;
  double q = 1.0;
  bool q_given = false;
  long long walkers = 100000;
  std::uint64_t seed = 1;
  double eps_shell = 0.0;
  int threads = 1;
};

Row estimate_row(const std::string& name, const montecarlo::Estimate& e) {
  Row r;
  r.name = name;
  r.display = fmt12(e.value) + " +- " + fmt12(e.std_error);
  r.value = json{{"value", e.value},
                 {"std_error", e.std_error},
                 {"walkers", e.walkers},
                 {"shell_eps", e.shell_eps},
                 {"truncated_fraction", e.truncated_fraction}};
  if (!e.bias_note.empty()) r.value["bias_note"] = e.bias_note;
  r.provenance = "monte-carlo";
  return r;
}

int cmd_mc(const McArgs& a, Output out) {
  out.config = {{"body", a.body},       {"d", a.d},
                {"walkers", a.walkers}, {"eps-shell", a.eps_shell},
                {"threads", a.threads}};
  out.seed = a.seed;
  const Body body = named_body(a.body, a.d);
  montecarlo::WosConfig cfg;
  cfg.walkers = a.walkers;
  cfg.seed = a.seed;
  cfg.shell_eps = a.eps_shell;
  cfg.threads = a.threads;

  std::vector<Row> rows;
  if (a.q_given && body.dim() >= 3) {
    const auto g = montecarlo::g_q_monte_carlo(body, a.q, cfg);
    rows.push_back(estimate_row("capacity", g.capacity));
    rows.push_back(estimate_row("rigidity", g.torsion));
    rows.push_back(num_row("measure", g.volume, "exact"));
    Row gq;
    gq.name = "g_q";
    gq.display = fmt12(g.value) + " +- " + fmt12(g.std_error);
    gq.value = json{{"value", g.value}, {"std_error", g.std_error},
                    {"q", g.q}};
    gq.provenance = "monte-carlo";
    rows.push_back(std::move(gq));
  } else {
    if (body.dim() >= 3)
      rows.push_back(
          estimate_row("capacity", montecarlo::wos_capacity(body, cfg)));
    rows.push_back(
        estimate_row("rigidity", montecarlo::wos_torsion(body, cfg)));
    rows.push_back(num_row("measure", geometry::volume(body), "exact"));
  }
  print_rows(out, rows);
  return 0;
}

struct OptimizeArgs {
  double q = 1.0;
  int d = 3;
  std::string direction = "max";
  double wall = 1e4;
  std::uint64_t seed = 12345;
  double tol = 1e-12;
};

int cmd_optimize(const OptimizeArgs& a, Output out) {
  out.config = {{"d", a.d},       {"q", a.q}, {"direction", a.direction},
                {"wall", a.wall}, {"tol", a.tol}};
  out.seed = a.seed;
  optimize::Direction dir;
  if (a.direction == "max")
    dir = optimize::Direction::maximize;
  else if (a.direction == "min")
    dir = optimize::Direction::minimize;
  else
    throw captor::GeometryError("direction must be max or min");

  optimize::OptimizeConfig cfg;
  cfg.seed = a.seed;
  cfg.quadrature = exact::QuadratureConfig{a.tol, 4000};
  const auto rep = (a.d == 2)
                       ? optimize::optimize_ellipse_planar(a.q, dir, a.wall,
                                                           cfg)
                       : optimize::optimize_ellipsoid(a.q, a.d, dir, a.wall,
                                                      cfg);

  const char* prov = (a.d == 2) ? "exact" : "quadrature";
  std::vector<Row> rows;
  rows.push_back(text_row("direction", optimize::direction_name(dir),
                          "exact"));
  rows.push_back(text_row("best_axes", join_axes(rep.best_axes), prov));
  rows.push_back(num_row("best_value", rep.best_value, prov));
  rows.push_back(
      text_row("degenerated", rep.degenerated ? "true" : "false", prov));
  rows.push_back(num_row("wall", rep.wall, "exact"));
  const auto chk = optimize::check_extremal_diam_ratio(rep);
  if (chk.applicable) {
    rows.push_back(
        text_row("aspect_certificate", chk.within ? "within" : "violated",
                 "bound"));
    rows.push_back(num_row("log_aspect", chk.log_ratio, prov));
    rows.push_back(num_row("log_aspect_bound", chk.log_bound, "bound"));
  }
  if (out.as_json) {
    // re-emit with the trace attached
    json j;
    j["artifact"] = {{"name", "captor"}, {"version", verify::kVersion}};
    j["command_line"] = out.command_line;
    j["config"] = out.config;
    j["seed"] = *out.seed;
    j["timestamp"] = "";
    json rs = json::array();
    for (const auto& r : rows)
      rs.push_back({{"name", r.name},
                    {"value", r.value},
                    {"provenance", r.provenance}});
    j["results"] = std::move(rs);
    json tr = json::array();
    for (const auto& t : rep.trace)
      tr.push_back({{"start", t.start},
                    {"axes", t.axes.values()},
                    {"value", t.value}});
    j["trace"] = std::move(tr);
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
  }
  print_rows(out, rows);
  return 0;
}

struct VerifyArgs {
  std::uint64_t seed = 7;
  long long walkers = 100000;
  std::string manifest_path;
};

int cmd_verify(const VerifyArgs& a, const Output& out) {
  verify::VerifyOptions opt;
  opt.seed = a.seed;
  opt.walkers = a.walkers;
  const auto run = verify::run_acceptance_with_determinism(opt);
  if (out.as_json) {
    std::fputs(run.manifest.c_str(), stdout);
  } else {
    for (const auto& r : run.results) {
      std::string line = r.detail;
      if (!line.empty()) line += "  ";
      std::printf("criterion %2d %-32s %s  %s(%.1fs)\n", r.index,
                  r.name.c_str(), r.passed ? "PASS" : "FAIL", line.c_str(),
                  r.seconds);
    }
    std::printf("%s\n", run.all_passed ? "all criteria passed"
                                       : "ACCEPTANCE FAILURE");
  }
  if (!a.manifest_path.empty()) {
    std::ofstream f(a.manifest_path, std::ios::binary);
    if (!f) throw captor::GeometryError("cannot write " + a.manifest_path);
    f << run.manifest;
  }
  return run.all_passed ? 0 : 1;
}

std::string assemble_command_line(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    const std::string arg = argv[i];
    out += (arg.find(' ') == std::string::npos) ? arg : "'" + arg + "'";
  }
  return out;
}

// Comma lists are kept as strings so command line and config file agree:
// the config reader hands "2,1,1" over as separate tokens, the command line
// as one, and both join back to the same text.
CLI::Option* add_list_option(CLI::App* cmd, const std::string& name,
                             std::string& target, const std::string& desc) {
  return cmd->add_option_function<std::vector<std::string>>(
      name,
      [&target](const std::vector<std::string>& parts) {
        target.clear();
        for (const auto& p : parts) {
          if (!target.empty()) target += ',';
          target += p;
        }
      },
      desc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "capacity-torsion shape functionals: exact ellipsoid values, "
      "certified bounds, collapse-family sweeps, walk-on-spheres "
      "estimates, and extremal search"};
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);
  app.fallthrough();  // --json/--csv may follow the subcommand

  bool as_json = false, as_csv = false;
  app.add_flag("--json", as_json, "emit a JSON document");
  app.add_flag("--csv", as_csv, "emit CSV rows");

  EvalArgs ev;
  auto* eval = app.add_subcommand(
      "eval", "capacity, rigidity, measure, and the shape functional");
  auto* opt_ellipsoid = add_list_option(
      eval, "--ellipsoid", ev.ellipsoid, "semi-axes a1,a2,...,ad (d >= 3)");
  auto* opt_ellipse =
      add_list_option(eval, "--ellipse", ev.ellipse, "planar semi-axes a1,a2");
  auto* opt_body = eval->add_option(
      "--body", ev.body, "ball | cube | path to a body JSON file");
  opt_ellipsoid->excludes(opt_ellipse)->excludes(opt_body);
  opt_ellipse->excludes(opt_body);
  eval->add_option("--d", ev.d, "dimension for named bodies")
      ->check(CLI::Range(2, 20));
  eval->add_option("--q", ev.q, "rigidity exponent");
  eval->add_option("--tol", ev.tol, "quadrature relative tolerance");

  BoundsArgs bo;
  auto* bnd = app.add_subcommand(
      "bounds", "closed-form bound coefficients for (d, q)");
  bnd->add_option("--d", bo.d, "dimension (2 for the planar functional)")
      ->check(CLI::Range(2, 20));
  bnd->add_option("--q", bo.q, "rigidity exponent");

  SequenceArgs se;
  auto* seq = app.add_subcommand(
      "sequence", "sweep a collapse family and emit plot-ready rows");
  seq->add_option("--family", se.family,
                  "pancake | packing | prolate | oblate | multi")
      ->required();
  seq->add_option("--q", se.q, "rigidity exponent");
  seq->add_option("--d", se.d, "dimension")->check(CLI::Range(3, 20));
  seq->add_option("--k", se.k, "collapsing axes (multi only)");
  add_list_option(seq, "--eps", se.eps, "grid: comma list or range A..B");
  add_list_option(seq, "--n", se.n, "packing grid counts, comma list");
  seq->add_option("--points", se.points, "points for A..B ranges");
  seq->add_option("--cube-capacity", se.cube_capacity,
                  "capacity of the closed unit cube (packing only)");
  seq->add_option("--tol", se.tol, "quadrature relative tolerance");

  McArgs mc;
  auto* mcs = app.add_subcommand(
      "mc", "walk-on-spheres capacity and rigidity estimates");
  mcs->add_option("--body", mc.body, "ball | cube | path to a body JSON file");
  mcs->add_option("--d", mc.d, "dimension for named bodies")
      ->check(CLI::Range(2, 20));
  auto* mc_q = mcs->add_option("--q", mc.q,
                               "also estimate the shape functional");
  mcs->add_option("--walkers", mc.walkers, "number of walkers")
      ->check(CLI::PositiveNumber);
  mcs->add_option("--seed", mc.seed, "random stream seed");
  mcs->add_option("--eps-shell", mc.eps_shell,
                  "absorbing shell width (0 = auto)");
  mcs->add_option("--threads", mc.threads, "worker threads")
      ->check(CLI::PositiveNumber);

  OptimizeArgs op;
  auto* ops = app.add_subcommand(
      "optimize", "search for extremal ellipsoids at fixed (d, q)");
  ops->add_option("--q", op.q, "rigidity exponent")->required();
  ops->add_option("--d", op.d, "dimension")->check(CLI::Range(2, 20));
  ops->add_option("--direction", op.direction, "max | min");
  ops->add_option("--wall", op.wall, "aspect-ratio wall")
      ->check(CLI::Range(10.0, 1e12));
  ops->add_option("--seed", op.seed, "multi-start seed");
  ops->add_option("--tol", op.tol, "quadrature relative tolerance");

  VerifyArgs ve;
  auto* ver = app.add_subcommand("verify", "run the acceptance suite");
  ver->add_option("--seed", ve.seed, "random stream seed");
  ver->add_option("--walkers", ve.walkers, "walkers per estimate")
      ->check(CLI::PositiveNumber);
  ver->add_option("--manifest", ve.manifest_path,
                  "write the run manifest to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  out.as_json = as_json;
  out.as_csv = as_csv;
  out.command_line = assemble_command_line(argc, argv);

  try {
    mc.q_given = mc_q->count() > 0;
    if (eval->parsed()) {
      if (ev.ellipsoid.empty() && ev.ellipse.empty() && ev.body.empty())
        throw captor::GeometryError(
            "eval needs one of --ellipsoid, --ellipse, --body");
      return cmd_eval(ev, out);
    }
    if (bnd->parsed()) return cmd_bounds(bo, out);
    if (seq->parsed()) return cmd_sequence(se, out);
    if (mcs->parsed()) return cmd_mc(mc, out);
    if (ops->parsed()) return cmd_optimize(op, out);
    if (ver->parsed()) return cmd_verify(ve, out);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
