#include "captor/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>

#include "captor/bounds.hpp"
#include "captor/errors.hpp"
#include "captor/exact.hpp"
#include "captor/rng.hpp"

namespace captor::optimize {

using captor::GeometryError;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Orthonormal basis (row-major d x (d-1)) of the zero-sum hyperplane;
// Helmert columns (1,...,1,-j,0,...,0) / sqrt(j(j+1)).
std::vector<double> zero_sum_basis(int d) {
  std::vector<double> b(std::size_t(d) * (d - 1), 0.0);
  for (int j = 1; j < d; ++j) {
    const double norm = 1.0 / std::sqrt(double(j) * (j + 1));
    for (int i = 0; i < j; ++i) b[std::size_t(i) * (d - 1) + (j - 1)] = norm;
    b[std::size_t(j) * (d - 1) + (j - 1)] = -double(j) * norm;
  }
  return b;
}

struct Evaluation {
  double f = kInf;       // objective (negated for maximize)
  double g = 0.0;        // functional value
  double aspect = 1.0;
  bool failed = false;
};

class Objective {
 public:
  Objective(double q, int d, Direction dir,
            const exact::QuadratureConfig& quad)
      : q_(q), d_(d), dir_(dir), quad_(quad), basis_(zero_sum_basis(d)) {}

  AxisVector axes(const std::vector<double>& y) const {
    std::vector<double> a(static_cast<std::size_t>(d_));
    for (int i = 0; i < d_; ++i) {
      double x = 0.0;
      for (int j = 0; j < d_ - 1; ++j)
        x += basis_[std::size_t(i) * (d_ - 1) + j] * y[std::size_t(j)];
      a[std::size_t(i)] = std::exp(x);
    }
    return AxisVector(std::move(a));
  }

  Evaluation operator()(const std::vector<double>& y) const {
    Evaluation e;
    AxisVector a = axes(y);
    e.aspect = a.aspect_ratio();
    try {
      e.g = exact::g_q_ellipsoid(a, q_, quad_).g_q;
    } catch (const QuadratureError&) {
      e.failed = true;  // keeps f at +inf; the step is simply rejected
      return e;
    }
    e.f = dir_ == Direction::maximize ? -e.g : e.g;
    return e;
  }

 private:
  double q_;
  int d_;
  Direction dir_;
  exact::QuadratureConfig quad_;
  std::vector<double> basis_;
};

struct StartOutcome {
  std::vector<double> y;
  Evaluation at;
  bool wall_hit = false;
  bool valid = false;  // at least one finite evaluation
};

double simplex_extent(const std::vector<std::vector<double>>& pts) {
  double ext = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[i].size(); ++j)
      ext = std::max(ext, std::abs(pts[i][j] - pts[0][j]));
  return ext;
}

// One multi-start run: Nelder-Mead with standard coefficients, two
// shrunk-simplex restarts once tolerances are met, stop-and-flag when the
// accepted best crosses the wall.
StartOutcome run_start(const Objective& obj, std::vector<double> y0,
                       double wall, const OptimizeConfig& cfg,
                       int start_index, std::vector<TracePoint>* trace) {
  const int n = int(y0.size());
  StartOutcome out;
  out.y = y0;
  out.at = obj(y0);
  out.valid = !out.at.failed;
  if (trace && out.valid)
    trace->push_back({start_index, obj.axes(y0), out.at.g});

  double step = 0.5;  // log-axis units
  int restarts = 0;

  std::vector<std::vector<double>> pts;
  std::vector<Evaluation> vals;
  auto rebuild = [&](const std::vector<double>& around) {
    pts.assign(1, around);
    for (int j = 0; j < n; ++j) {
      std::vector<double> p = around;
      p[std::size_t(j)] += step;
      pts.push_back(std::move(p));
    }
    vals.clear();
    for (const auto& p : pts) vals.push_back(obj(p));
  };
  rebuild(y0);

  auto record_best = [&](std::size_t idx) {
    if (vals[idx].f < out.at.f) {
      out.y = pts[idx];
      out.at = vals[idx];
      out.valid = true;
      if (trace) trace->push_back({start_index, obj.axes(out.y), out.at.g});
    }
  };

  std::vector<std::size_t> order(std::size_t(n) + 1);
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                     std::size_t b) {
      return vals[a].f < vals[b].f;
    });
    record_best(order[0]);

    if (!out.valid && vals[order[0]].failed) {
      // the whole simplex failed to evaluate: extreme axes everywhere,
      // treated as running into the wall
      out.wall_hit = true;
      return out;
    }
    if (out.valid && out.at.aspect >= wall) {
      out.wall_hit = true;
      return out;
    }

    const double fbest = vals[order[0]].f;
    const double fworst = vals[order[std::size_t(n)]].f;
    const bool fclose =
        std::isfinite(fworst) &&
        fworst - fbest <= cfg.value_tol * (1.0 + std::abs(fbest));
    if (fclose && simplex_extent(pts) <= cfg.axis_tol) {
      if (restarts >= 2) return out;
      ++restarts;
      step *= 0.2;
      // copy first: rebuild reassigns pts, which would invalidate a
      // reference into it
      const std::vector<double> anchor = pts[order[0]];
      rebuild(anchor);
      continue;
    }

    // centroid of all but the worst
    std::vector<double> centroid(std::size_t(n), 0.0);
    for (int i = 0; i <= n; ++i) {
      if (order[std::size_t(i)] == order[std::size_t(n)]) continue;
      for (int j = 0; j < n; ++j)
        centroid[std::size_t(j)] += pts[order[std::size_t(i)]][std::size_t(j)];
    }
    for (double& c : centroid) c /= double(n);
    const std::size_t worst = order[std::size_t(n)];
    const std::size_t second = order[std::size_t(n) - 1];

    auto blend = [&](double t) {
      std::vector<double> p(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j)
        p[std::size_t(j)] = centroid[std::size_t(j)] +
                            t * (pts[worst][std::size_t(j)] -
                                 centroid[std::size_t(j)]);
      return p;
    };

    std::vector<double> refl = blend(-1.0);
    Evaluation frefl = obj(refl);
    if (frefl.f < vals[order[0]].f) {
      std::vector<double> expa = blend(-2.0);
      Evaluation fexpa = obj(expa);
      if (fexpa.f < frefl.f) {
        pts[worst] = std::move(expa);
        vals[worst] = fexpa;
      } else {
        pts[worst] = std::move(refl);
        vals[worst] = frefl;
      }
      continue;
    }
    if (frefl.f < vals[second].f) {
      pts[worst] = std::move(refl);
      vals[worst] = frefl;
      continue;
    }
    const bool outside = frefl.f < vals[worst].f;
    std::vector<double> contr = blend(outside ? -0.5 : 0.5);
    Evaluation fcontr = obj(contr);
    if (fcontr.f < std::min(frefl.f, vals[worst].f)) {
      pts[worst] = std::move(contr);
      vals[worst] = fcontr;
      continue;
    }
    // shrink toward the best vertex
    for (int i = 0; i <= n; ++i) {
      const std::size_t k = order[std::size_t(i)];
      if (k == order[0]) continue;
      for (int j = 0; j < n; ++j)
        pts[k][std::size_t(j)] =
            0.5 * (pts[k][std::size_t(j)] + pts[order[0]][std::size_t(j)]);
      vals[k] = obj(pts[k]);
    }
  }
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return vals[a].f < vals[b].f;
                   });
  record_best(order[0]);
  if (out.valid && out.at.aspect >= wall) out.wall_hit = true;
  return out;
}

bool better(const StartOutcome& a, const StartOutcome& b, Direction dir) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  return dir == Direction::maximize ? a.at.g > b.at.g : a.at.g < b.at.g;
}

}  // namespace

const char* direction_name(Direction dir) {
  return dir == Direction::maximize ? "maximize" : "minimize";
}

RegimeReport optimize_ellipsoid(double q, int d, Direction direction,
                                double wall, const OptimizeConfig& cfg) {
  if (d < 3) throw GeometryError("optimize_ellipsoid needs d >= 3");
  if (!(wall >= 10.0)) throw GeometryError("wall must be >= 10");
  if (cfg.random_starts < 0 || cfg.max_iterations < 1)
    throw GeometryError("optimize: bad configuration");

  const Objective obj(q, d, direction, cfg.quadrature);
  const int n = d - 1;

  RegimeReport report;
  report.q = q;
  report.d = d;
  report.direction = direction;
  report.wall = wall;

  std::optional<StartOutcome> winner;
  auto run_one = [&](std::vector<double> y0, int index) {
    StartOutcome out =
        run_start(obj, std::move(y0), wall, cfg, index, &report.trace);
    if (!winner || better(out, *winner, direction)) winner = std::move(out);
  };

  run_one(std::vector<double>(std::size_t(n), 0.0), 0);

  // Random starts on a deterministic radius ladder reaching most of the way
  // to the wall. The landscape can hold a local optimum at the ball with the
  // true escape beyond a dip (q between q_critical and 1 does exactly this),
  // so near-ball starts alone would be trapped.
  const double reach = 0.45 * std::log(wall);
  for (int s = 1; s <= cfg.random_starts; ++s) {
    std::vector<double> y0(std::size_t(n), 0.0);
    montecarlo::RngStream rng(cfg.seed, std::uint64_t(s));
    double norm2 = 0.0;
    for (double& v : y0) {
      v = rng.next_gaussian();
      norm2 += v * v;
    }
    const double f =
        reach * double(s) / double(cfg.random_starts) /
        std::sqrt(std::max(norm2, 1e-12));
    for (double& v : y0) v *= f;
    run_one(std::move(y0), s);
  }

  // Canonical collapse rays near the wall: one axis dominant (needle) and
  // one axis vanishing (pancake), the two directions the degeneration
  // regimes are proven along.
  const std::vector<double> basis = zero_sum_basis(d);
  const double t = 0.9 * std::log(wall) * double(d - 1) / double(d);
  for (int ray = 0; ray < 2; ++ray) {
    std::vector<double> x(std::size_t(d), 0.0);
    if (ray == 0) {
      x[0] = t;
      for (int i = 1; i < d; ++i) x[std::size_t(i)] = -t / double(d - 1);
    } else {
      for (int i = 0; i + 1 < d; ++i) x[std::size_t(i)] = t / double(d - 1);
      x[std::size_t(d - 1)] = -t;
    }
    std::vector<double> y0(std::size_t(n), 0.0);
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int i = 0; i < d; ++i)
        acc += basis[std::size_t(i) * (d - 1) + j] * x[std::size_t(i)];
      y0[std::size_t(j)] = acc;
    }
    run_one(std::move(y0), cfg.random_starts + 1 + ray);
  }
  if (!winner || !winner->valid)
    throw ConvergenceError("optimize_ellipsoid: no start produced a value");

  report.best_axes = obj.axes(winner->y);
  report.best_value = exact::g_q_ellipsoid(report.best_axes, q,
                                           cfg.quadrature).g_q;
  report.degenerated = winner->wall_hit;
  return report;
}

RegimeReport optimize_ellipse_planar(double q, Direction direction,
                                     double wall, const OptimizeConfig&) {
  // the planar search is closed-form plus golden section; nothing in the
  // config applies
  if (!(wall >= 10.0)) throw GeometryError("wall must be >= 10");

  RegimeReport report;
  report.q = q;
  report.d = 2;
  report.direction = direction;
  report.wall = wall;

  const double tmax = std::log(wall);
  auto value_at = [&](double t) {
    return exact::h_q_ellipse(std::exp(0.5 * t), std::exp(-0.5 * t), q);
  };
  auto objective = [&](double t) {
    const double h = value_at(t);
    return direction == Direction::maximize ? -h : h;
  };

  const int m = 257;
  int ibest = 0;
  double fbest = kInf;
  for (int i = 0; i < m; ++i) {
    const double t = tmax * double(i) / double(m - 1);
    const double f = objective(t);
    if (f < fbest) {
      fbest = f;
      ibest = i;
      report.trace.push_back(
          {0, AxisVector{std::exp(0.5 * t), std::exp(-0.5 * t)},
           value_at(t)});
    }
  }

  double tstar;
  if (ibest == m - 1) {
    report.degenerated = true;  // the optimum ran into the ratio wall
    tstar = tmax;
  } else {
    // golden-section on the bracketing grid cells
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = tmax * double(std::max(0, ibest - 1)) / double(m - 1);
    double hi = tmax * double(std::min(m - 1, ibest + 1)) / double(m - 1);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = objective(x1), f2 = objective(x2);
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = objective(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = objective(x2);
      }
    }
    tstar = 0.5 * (lo + hi);
    // snap an essentially-round optimum to the ball exactly
    if (tstar <= 1e-9) tstar = 0.0;
  }

  report.best_axes = AxisVector{std::exp(0.5 * tstar), std::exp(-0.5 * tstar)};
  report.best_value = value_at(tstar);
  report.trace.push_back({0, report.best_axes, report.best_value});
  return report;
}

DiamRatioCheck check_extremal_diam_ratio(const RegimeReport& report) {
  DiamRatioCheck out;
  out.log_ratio = std::log(report.best_axes.aspect_ratio());
  if (report.degenerated) return out;  // certificate only covers extremisers

  std::optional<bounds::LogValue> bound;
  if (report.d >= 3) {
    const auto tc = bounds::theorem_constants(report.d, report.q);
    if (report.direction == Direction::maximize) {
      bound = tc.sup_diam_ratio;
      if (!bound) bound = tc.sup_diam_ratio_d3q1;
    } else {
      bound = tc.inf_diam_ratio;
    }
  } else if (report.d == 2) {
    const auto pc = bounds::planar_constants(report.q);
    bound = report.direction == Direction::maximize ? pc.sup_diam_ratio
                                                    : pc.inf_diam_ratio;
  }
  if (!bound) return out;
  out.applicable = true;
  out.log_bound = bound->log();
  out.within = out.log_ratio <= out.log_bound;
  return out;
}

}  // namespace captor::optimize
