#include "captor/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <thread>
#include <vector>

#include "captor/distance.hpp"
#include "captor/errors.hpp"
#include "captor/hull.hpp"
#include "captor/rng.hpp"

namespace captor::montecarlo {

using geometry::Body;
using captor::GeometryError;

namespace {

// Walkers are reduced in fixed blocks so the result is a pure function of
// (body, config), not of how blocks were scheduled across threads.
constexpr long long kBlock = 4096;

std::string format_note(const char* fmt, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return std::string(buf);
}

// ---- uniform interior sampling ------------------------------------------

void flatten(const Body& b, std::vector<const Body*>& out) {
  if (const auto* u = b.as<geometry::DisjointUnion>()) {
    for (const auto& p : u->parts) flatten(p, out);
  } else {
    out.push_back(&b);
  }
}

struct PartSampler {
  std::vector<double> center;           // ball / ellipsoid
  std::vector<double> axes;             // empty for polytopes
  std::unique_ptr<geometry::ConvexHull> hull;  // polytope only
  geometry::Aabb box;                   // polytope only
  double volume = 0.0;

  void sample(RngStream& rng, std::vector<double>& x) const {
    const int d = int(x.size());
    if (!axes.empty()) {
      // uniform point of the unit ball pushed through the axis scaling;
      // the Jacobian is constant so uniformity is preserved
      rng.fill_unit_vector(x);
      const double r = std::pow(rng.next_double(), 1.0 / d);
      for (int i = 0; i < d; ++i) x[i] = center[i] + axes[i] * r * x[i];
      return;
    }
    for (;;) {
      for (int i = 0; i < d; ++i)
        x[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * rng.next_double();
      if (hull->contains(x, 0.0)) return;
    }
  }
};

struct InteriorSampler {
  std::vector<PartSampler> parts;
  std::vector<double> cumulative;  // running volume totals
  double total = 0.0;

  explicit InteriorSampler(const Body& body) {
    std::vector<const Body*> leaves;
    flatten(body, leaves);
    const int d = body.dim();
    for (const Body* leaf : leaves) {
      PartSampler s;
      if (const auto* b = leaf->as<geometry::Ball>()) {
        s.center = b->center;
        s.axes.assign(d, b->radius);
      } else if (const auto* e = leaf->as<geometry::Ellipsoid>()) {
        s.center = e->center;
        s.axes = e->axes.values();
      } else {
        const auto* p = leaf->as<geometry::VPolytope>();
        s.hull = std::make_unique<geometry::ConvexHull>(p->vertices);
        s.box = geometry::bounding_box(*leaf);
      }
      s.volume = geometry::volume(*leaf);
      total += s.volume;
      cumulative.push_back(total);
      parts.push_back(std::move(s));
    }
  }

  void sample(RngStream& rng, std::vector<double>& x) const {
    std::size_t k = 0;
    if (parts.size() > 1) {
      const double u = rng.next_double() * total;
      k = std::upper_bound(cumulative.begin(), cumulative.end(), u) -
          cumulative.begin();
      if (k >= parts.size()) k = parts.size() - 1;
    }
    parts[k].sample(rng, x);
  }
};

// ---- fixed-shape reduction ----------------------------------------------

struct BlockSums {
  double sum = 0.0;
  double sumsq = 0.0;
  long long truncated = 0;
};

double pairwise(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 4) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise(v, lo, mid) + pairwise(v, mid, hi);
}

// Runs `walkers` independent walks. kernel(rng, truncated) -> per-walker
// score. Blocks are summed in walker order and then combined pairwise, so
// any thread count produces bit-identical output.
template <class Kernel>
Estimate reduce_walkers(long long walkers, std::uint64_t seed,
                        std::uint64_t stream_tag, int threads,
                        const Kernel& kernel) {
  const long long nblocks = (walkers + kBlock - 1) / kBlock;
  std::vector<BlockSums> blocks(static_cast<std::size_t>(nblocks));

  auto run_range = [&](long long b0, long long b1) {
    for (long long b = b0; b < b1; ++b) {
      BlockSums acc;
      const long long end = std::min(walkers, (b + 1) * kBlock);
      for (long long i = b * kBlock; i < end; ++i) {
        RngStream rng(seed, (stream_tag << 48) | std::uint64_t(i));
        bool truncated = false;
        const double v = kernel(rng, truncated);
        acc.sum += v;
        acc.sumsq += v * v;
        if (truncated) ++acc.truncated;
      }
      blocks[std::size_t(b)] = acc;
    }
  };

  const int nthreads =
      int(std::min<long long>(std::max(threads, 1), nblocks));
  if (nthreads <= 1) {
    run_range(0, nblocks);
  } else {
    std::vector<std::thread> pool;
    const long long chunk = (nblocks + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      const long long b0 = t * chunk;
      const long long b1 = std::min(nblocks, b0 + chunk);
      if (b0 < b1) pool.emplace_back(run_range, b0, b1);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<double> sums(blocks.size()), sqs(blocks.size());
  long long truncated = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    sums[b] = blocks[b].sum;
    sqs[b] = blocks[b].sumsq;
    truncated += blocks[b].truncated;
  }
  const double total = pairwise(sums, 0, sums.size());
  const double totalsq = pairwise(sqs, 0, sqs.size());

  Estimate est;
  est.walkers = walkers;
  est.value = total / double(walkers);
  if (walkers > 1) {
    double var =
        (totalsq - double(walkers) * est.value * est.value) /
        double(walkers - 1);
    if (var < 0.0) var = 0.0;
    est.std_error = std::sqrt(var / double(walkers));
  }
  est.truncated_fraction = double(truncated) / double(walkers);
  return est;
}

double resolve_shell(const WosConfig& c, const DistanceQuery& dq) {
  if (!(c.shell_eps >= 0.0))
    throw GeometryError("shell width must be nonnegative");
  const double shell =
      c.shell_eps > 0.0 ? c.shell_eps : 1e-3 * dq.enclosing_radius();
  // largest box extent is a diameter lower bound, so this check only errs
  // on the strict side
  double extent = 0.0;
  const auto& box = dq.box();
  for (std::size_t i = 0; i < box.lo.size(); ++i)
    extent = std::max(extent, box.hi[i] - box.lo[i]);
  if (shell > 1e-2 * extent)
    throw GeometryError("shell width exceeds 1e-2 x body extent");
  return shell;
}

void validate_common(const WosConfig& c) {
  if (c.walkers < 1) throw GeometryError("walker count must be positive");
  if (c.max_steps < 1) throw GeometryError("max_steps must be positive");
  if (!(c.start_factor >= 1.5))
    throw GeometryError("start_factor must be >= 1.5");
  if (!(c.escape_factor >= 2.0) || !(c.escape_factor > c.start_factor))
    throw GeometryError("escape_factor must be >= 2 and exceed start_factor");
}

}  // namespace

Estimate wos_torsion(const Body& body, const WosConfig& config) {
  validate_common(config);
  const int d = body.dim();
  const DistanceQuery dq(body);
  const double shell = resolve_shell(config, dq);
  const InteriorSampler sampler(body);
  const double vol = sampler.total;
  const double inv2d = 1.0 / (2.0 * d);

  struct Buffers {
    std::vector<double> x, dir;
  };
  thread_local Buffers buf;

  auto kernel = [&](RngStream& rng, bool& truncated) -> double {
    buf.x.assign(std::size_t(d), 0.0);
    buf.dir.assign(std::size_t(d), 0.0);
    sampler.sample(rng, buf.x);
    double score = 0.0;
    for (long long step = 0;; ++step) {
      const double r = dq.boundary_distance_inside(buf.x);
      if (r <= shell) break;
      if (step >= config.max_steps) {
        truncated = true;
        break;
      }
      score += r * r * inv2d;
      rng.fill_unit_vector(buf.dir);
      for (int i = 0; i < d; ++i) buf.x[i] += r * buf.dir[i];
    }
    return vol * score;
  };

  Estimate est = reduce_walkers(config.walkers, config.seed, 1,
                                config.threads, kernel);
  est.shell_eps = shell;
  est.bias_note = format_note(
      "absorbing shell %.6g biases rigidity low by O(shell); "
      "%.0f-step cap, capped walks keep their partial score",
      shell, double(config.max_steps));
  return est;
}

Estimate wos_capacity(const Body& body, const WosConfig& config) {
  validate_common(config);
  const int d = body.dim();
  if (d < 3)
    throw GeometryError("capacity walk needs dimension >= 3");
  const DistanceQuery dq(body);
  const double r_enc = dq.enclosing_radius();
  const double shell = resolve_shell(config, dq);
  const double R = config.start_factor * r_enc;   // start sphere
  const double rho = config.escape_factor * r_enc;  // survival-coin radius
  const double kappa = geometry::unit_ball_capacity(d);
  const double weight = kappa * std::pow(R, d - 2);

  struct Buffers {
    std::vector<double> x, dir, ystar;
  };
  thread_local Buffers buf;

  auto kernel = [&](RngStream& rng, bool& truncated) -> double {
    auto& x = buf.x;
    auto& dir = buf.dir;
    auto& ystar = buf.ystar;
    x.assign(std::size_t(d), 0.0);
    dir.assign(std::size_t(d), 0.0);
    ystar.assign(std::size_t(d), 0.0);

    rng.fill_unit_vector(x);
    for (int i = 0; i < d; ++i) x[i] *= R;

    for (long long step = 0; step < config.max_steps; ++step) {
      double s2 = 0.0;
      for (int i = 0; i < d; ++i) s2 += x[i] * x[i];
      const double s = std::sqrt(s2);

      if (s >= rho) {
        // Transience coin: a walker at radius s returns to the start
        // sphere with probability (R/s)^{d-2}, else it escapes to
        // infinity. Exact for Brownian motion, so no truncation bias.
        if (rng.next_double() >= std::pow(R / s, d - 2)) return 0.0;
        // Conditioned on return, the entry point on the start sphere has
        // the harmonic-measure density seen from the inverted point
        // y* = R^2 x / |x|^2; rejection from the uniform proposal with
        // the bound attained at the near pole.
        const double f = R * R / s2;
        for (int i = 0; i < d; ++i) ystar[i] = f * x[i];
        const double t = R * R / s;
        const double edge = R - t;
        for (;;) {
          rng.fill_unit_vector(dir);
          double dist2 = 0.0;
          for (int i = 0; i < d; ++i) {
            const double diff = R * dir[i] - ystar[i];
            dist2 += diff * diff;
          }
          if (rng.next_double() <
              std::pow(edge * edge / dist2, 0.5 * d)) {
            for (int i = 0; i < d; ++i) x[i] = R * dir[i];
            break;
          }
        }
        continue;
      }

      const double dist = dq.distance_to_set(x);
      if (dist <= shell) return weight;
      rng.fill_unit_vector(dir);
      for (int i = 0; i < d; ++i) x[i] += dist * dir[i];
    }
    truncated = true;  // counted as an escape; reported, not hidden
    return 0.0;
  };

  Estimate est = reduce_walkers(config.walkers, config.seed, 2,
                                config.threads, kernel);
  est.shell_eps = shell;
  est.bias_note = format_note(
      "hit test within shell %.6g biases capacity high by O(shell); "
      "survival coin beyond radius %.6g replaces any hard cutoff",
      shell, rho);
  return est;
}

GqEstimate g_q_monte_carlo(const Body& body, double q,
                           const WosConfig& config) {
  GqEstimate out;
  out.q = q;
  out.capacity = wos_capacity(body, config);
  out.torsion = wos_torsion(body, config);
  out.volume = geometry::volume(body);
  if (out.capacity.value <= 0.0 || out.torsion.value <= 0.0)
    throw ConvergenceError(
        "monte carlo estimate vanished; increase the walker count");

  const int d = body.dim();
  const double expo = 1.0 + q + 2.0 * (q - 1.0) / d;
  out.value = std::exp(std::log(out.capacity.value) +
                       q * std::log(out.torsion.value) -
                       expo * std::log(out.volume));
  // first-order error propagation; the two walks use disjoint rng streams
  const double rc = out.capacity.std_error / out.capacity.value;
  const double rt = out.torsion.std_error / out.torsion.value;
  out.std_error = out.value * std::sqrt(rc * rc + q * q * rt * rt);
  return out;
}

}  // namespace captor::montecarlo
