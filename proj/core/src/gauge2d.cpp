#include "moreau/gauge2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "moreau/errors.hpp"
#include "moreau/function_io.hpp"

namespace moreau {

namespace {

constexpr double kHomogeneityRelTol = 1e-9;
constexpr double kKernelEps = 1e-12;

double max_norm_eval(Vec2 p) { return std::max(std::fabs(p.x), std::fabs(p.y)); }
double l1_norm_eval(Vec2 p) { return std::fabs(p.x) + std::fabs(p.y); }

}  // namespace

Gauge2D Gauge2D::max_norm() { return Gauge2D(Kind::MaxNorm, 1.0, max_norm_eval); }
Gauge2D Gauge2D::l1_norm() { return Gauge2D(Kind::L1Norm, 1.0, l1_norm_eval); }

Gauge2D Gauge2D::scaled_euclidean(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw BadParam("scaled_euclidean: scale must be finite and > 0");
  }
  return Gauge2D(Kind::ScaledEuclidean, scale, [scale](Vec2 p) { return scale * p.norm(); });
}

Gauge2D Gauge2D::custom(std::function<double(Vec2)> eval) {
  if (std::fabs(eval({0.0, 0.0})) > kKernelEps) {
    throw BadParam("custom gauge: evaluator must vanish at the origin");
  }
  // Sampled validation: positive homogeneity and segment convexity.
  std::mt19937_64 rng(0x9a6e);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    Vec2 v{coord(rng), coord(rng)};
    double gv = eval(v);
    if (gv < -kKernelEps) throw BadParam("custom gauge: negative value sampled");
    for (double alpha : {0.5, 2.0}) {
      double lhs = eval(alpha * v);
      if (std::fabs(lhs - alpha * gv) > kHomogeneityRelTol * (1.0 + std::fabs(alpha * gv))) {
        throw BadParam("custom gauge: positive homogeneity violated");
      }
    }
    Vec2 w{coord(rng), coord(rng)};
    double mid = eval(0.5 * (v + w));
    if (mid > 0.5 * (gv + eval(w)) + 1e-9) {
      throw BadParam("custom gauge: midpoint convexity violated");
    }
  }
  return Gauge2D(Kind::Custom, 1.0, std::move(eval));
}

double Gauge2D::operator()(Vec2 p) const { return eval_(p); }

const char* region_name(Region r) {
  switch (r) {
    case Region::R1: return "R1";
    case Region::R2: return "R2";
    case Region::R3: return "R3";
    case Region::R4: return "R4";
  }
  return "?";
}

Region classify_max(double r, Vec2 p) {
  check_prox_config({r});
  const double t = r / (r + 2.0);  // in (0, 1)
  const double x = p.x, y = p.y;
  if (std::fabs(y) <= t * std::fabs(x)) return Region::R1;
  if (std::fabs(x) <= t * std::fabs(y)) return Region::R2;
  // Same-sign sector between the lines y = t*x and x = t*y.
  if ((t * y <= x && x <= y / t) || (y / t <= x && x <= t * y)) return Region::R3;
  return Region::R4;
}

GaugeProx smooth_max(double r, Vec2 p) {
  check_prox_config({r});
  const double x = p.x, y = p.y;
  Region reg = classify_max(r, p);
  double g;
  Vec2 prox;
  switch (reg) {
    case Region::R1:
      g = r * x * x / (r + 2.0);
      prox = {r * x / (r + 2.0), y};
      break;
    case Region::R2:
      g = r * y * y / (r + 2.0);
      prox = {x, r * y / (r + 2.0)};
      break;
    case Region::R3: {
      g = (r * r * (x - y) * (x - y) + 2.0 * r * (x * x + y * y)) / (4.0 * (r + 1.0));
      double m = r * (x + y) / (2.0 * (r + 1.0));
      prox = {m, m};
      break;
    }
    case Region::R4:
    default: {
      g = (r * r * (x + y) * (x + y) + 2.0 * r * (x * x + y * y)) / (4.0 * (r + 1.0));
      double m = r * (x - y) / (2.0 * (r + 1.0));
      prox = {m, -m};
      break;
    }
  }
  return {std::sqrt(std::max(0.0, g)), prox, reg};
}

GaugeProx smooth_l1(double r, Vec2 p) {
  check_prox_config({r});
  const double x = p.x, y = p.y;
  // Candidate proximal points per region; the smallest objective wins
  // (region inequalities are equivalent but messier).
  const std::array<Vec2, 4> candidates = {
      Vec2{((r + 2.0) * x - 2.0 * y) / (r + 4.0), (-2.0 * x + (r + 2.0) * y) / (r + 4.0)},
      Vec2{((r + 2.0) * x + 2.0 * y) / (r + 4.0), (2.0 * x + (r + 2.0) * y) / (r + 4.0)},
      Vec2{r * x / (r + 2.0), 0.0},
      Vec2{0.0, r * y / (r + 2.0)},
  };
  auto objective = [&](Vec2 v) {
    double f = l1_norm_eval(v);
    return f * f + 0.5 * r * (v - p).norm2();
  };
  std::size_t best = 0;
  double best_val = objective(candidates[0]);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    double v = objective(candidates[i]);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  return {std::sqrt(std::max(0.0, best_val)), candidates[best], static_cast<Region>(best)};
}

double smooth_custom(const Gauge2D& g, double r, Vec2 p, const OracleSettings& s) {
  auto squared = [&g](Vec2 v) {
    double f = g(v);
    return f * f;
  };
  return std::sqrt(std::max(0.0, envelope_oracle_2d(squared, {r}, p, s).value));
}

double pasch_hausdorff(const Gauge2D& g, double r, Vec2 p, const OracleSettings& s) {
  check_prox_config({r});
  auto objective = [&](Vec2 y) { return g(y) + r * (y - p).norm(); };
  // g >= 0 keeps the minimizer within g(p)/r of the centre.
  double radius = g(p) / r + 1.0;
  return detail::nested_min_2d(objective, p, radius, s).value;
}

SmoothedGauge::SmoothedGauge(Gauge2D base, double r, OracleSettings settings)
    : base_(std::move(base)), r_(r), settings_(settings) {
  check_prox_config({r_});
}

double SmoothedGauge::value(Vec2 p) const {
  switch (base_.kind()) {
    case Gauge2D::Kind::MaxNorm: return smooth_max(r_, p).h;
    case Gauge2D::Kind::L1Norm: return smooth_l1(r_, p).h;
    case Gauge2D::Kind::ScaledEuclidean: {
      double s = base_.scale();
      return s * std::sqrt(r_ / (r_ + 2.0 * s * s)) * p.norm();
    }
    case Gauge2D::Kind::Custom:
    default: return smooth_custom(base_, r_, p, settings_);
  }
}

Vec2 SmoothedGauge::prox(Vec2 p) const {
  switch (base_.kind()) {
    case Gauge2D::Kind::MaxNorm: return smooth_max(r_, p).prox;
    case Gauge2D::Kind::L1Norm: return smooth_l1(r_, p).prox;
    case Gauge2D::Kind::ScaledEuclidean: {
      double s = base_.scale();
      return (r_ / (r_ + 2.0 * s * s)) * p;
    }
    case Gauge2D::Kind::Custom:
    default: {
      auto squared = [this](Vec2 v) {
        double f = base_(v);
        return f * f;
      };
      return envelope_oracle_2d(squared, {r_}, p, settings_).argmin;
    }
  }
}

std::optional<Vec2> SmoothedGauge::gradient(Vec2 p) const {
  double h = value(p);
  if (h <= kKernelEps) return std::nullopt;  // kernel point
  Vec2 g = r_ * (p - prox(p));               // grad of g_r = e_r(f^2)
  return Vec2{g.x / (2.0 * h), g.y / (2.0 * h)};
}

std::vector<Vec2> unit_circle(const SmoothedGauge& sg, int samples) {
  if (samples < 8) throw BadParam("unit_circle: samples must be >= 8");
  std::vector<Vec2> points;
  points.reserve(static_cast<std::size_t>(samples));
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int i = 0; i < samples; ++i) {
    double theta = two_pi * i / samples;
    Vec2 dir{std::cos(theta), std::sin(theta)};
    double h = sg.value(dir);
    // Oracle-backed gauges report ~sqrt(tol^2 * r/2) on a zero ray, so the
    // degeneracy threshold sits above that noise floor.
    if (h <= 1e-8) {
      throw DegenerateRay("unit_circle: h_r vanishes along a sampled ray");
    }
    points.push_back((1.0 / h) * dir);
  }
  return points;
}

void write_gauge_grid_csv(std::ostream& os, const SmoothedGauge& sg,
                          double lo, double hi, int n) {
  os << "x,y,f,h_r,prox_x,prox_y,region\n";
  for (int i = 0; i < n; ++i) {
    double x = lo + (hi - lo) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      double y = lo + (hi - lo) * j / (n - 1);
      Vec2 p{x, y};
      double f = sg.base()(p);
      double h;
      Vec2 q;
      std::string region = "-";
      if (sg.base().kind() == Gauge2D::Kind::MaxNorm) {
        GaugeProx gp = smooth_max(sg.r(), p);
        h = gp.h;
        q = gp.prox;
        region = region_name(gp.region);
      } else if (sg.base().kind() == Gauge2D::Kind::L1Norm) {
        GaugeProx gp = smooth_l1(sg.r(), p);
        h = gp.h;
        q = gp.prox;
        region = region_name(gp.region);
      } else {
        h = sg.value(p);
        q = sg.prox(p);
      }
      os << format_roundtrip(x) << ',' << format_roundtrip(y) << ',' << format_roundtrip(f)
         << ',' << format_roundtrip(h) << ',' << format_roundtrip(q.x) << ','
         << format_roundtrip(q.y) << ',' << region << '\n';
    }
  }
}

}  // namespace moreau
