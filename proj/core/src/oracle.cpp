#include "moreau/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace moreau {

namespace {

constexpr double kBracketLimit = 1e12;

// Sign of the optimality map df(y) + r*(y - x): -1 below the crossing,
// +1 above, 0 when zero lies in the subgradient interval (y is the prox).
int optimality_sign(const PiecewiseCubic& f, double r, double x, double y) {
  SubgradientInterval g = f.subgradient(y);
  double shift = r * (y - x);
  if (g.lo + shift > 0.0) return 1;
  if (g.hi + shift < 0.0) return -1;
  return 0;
}

}  // namespace

Oracle1DResult prox_oracle_1d(const PiecewiseCubic& f, const ProxConfig& cfg, double x,
                              const OracleSettings& s) {
  check_prox_config(cfg);
  const double r = cfg.r;
  const double dlo = f.lower_bound();
  const double dhi = f.upper_bound();

  auto finish = [&](double y) -> Oracle1DResult {
    return {y, f(y) + 0.5 * r * (y - x) * (y - x)};
  };

  double a = std::clamp(x - 1.0, dlo, dhi);
  double b = std::clamp(x + 1.0, dlo, dhi);
  double w = 1.0;
  while (optimality_sign(f, r, x, a) > 0 && a > dlo) {
    w *= s.bracket_growth;
    if (w > kBracketLimit) throw NoBracket("prox_oracle_1d: no sign change to the left");
    a = std::clamp(x - w, dlo, dhi);
  }
  while (optimality_sign(f, r, x, b) < 0 && b < dhi) {
    w *= s.bracket_growth;
    if (w > kBracketLimit) throw NoBracket("prox_oracle_1d: no sign change to the right");
    b = std::clamp(x + w, dlo, dhi);
  }

  int sa = optimality_sign(f, r, x, a);
  int sb = optimality_sign(f, r, x, b);
  if (sa == 0) return finish(a);
  if (sb == 0) return finish(b);
  if (sa > 0) return finish(a);  // clamped at the lower bound
  if (sb < 0) return finish(b);  // clamped at the upper bound

  for (int i = 0; i < s.max_iter && b - a > s.tol; ++i) {
    double mid = 0.5 * (a + b);
    int sm = optimality_sign(f, r, x, mid);
    if (sm == 0) return finish(mid);
    if (sm < 0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return finish(0.5 * (a + b));
}

namespace detail {

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol, double* value) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  double best = fc < fd ? c : d;
  if (value) *value = std::min(fc, fd);
  return best;
}

Envelope2DResult nested_min_2d(const std::function<double(Vec2)>& objective,
                               Vec2 centre, double radius, const OracleSettings& s) {
  int evals = 0;
  auto guarded = [&](Vec2 v) {
    if (++evals > s.max_evals_2d) {
      throw MaxIterExceeded("nested_min_2d: 2D evaluation budget exceeded");
    }
    return objective(v);
  };

  Envelope2DResult result{};
  double inner_tol = s.tol / 10.0;

  // Partial minimization over y of a jointly convex objective is convex in
  // x, so both golden-section levels act on unimodal functions.
  double best_y = centre.y;
  auto profile = [&](double x) {
    double v;
    best_y = golden_min([&](double y) { return guarded({x, y}); }, centre.y - radius,
                        centre.y + radius, inner_tol, &v);
    if (result.trace.empty() || v < result.trace.back()) {
      result.trace.push_back(v);
    } else {
      result.trace.push_back(result.trace.back());
    }
    return v;
  };

  double value;
  double best_x =
      golden_min(profile, centre.x - radius, centre.x + radius, s.tol, &value);
  // Re-resolve the inner coordinate at the winning abscissa.
  double v2;
  double y = golden_min([&](double yy) { return guarded({best_x, yy}); },
                        centre.y - radius, centre.y + radius, inner_tol, &v2);
  if (v2 <= value) {
    value = v2;
    best_y = y;
  }
  result.value = value;
  result.argmin = {best_x, best_y};
  return result;
}

}  // namespace detail

Envelope2DResult envelope_oracle_2d(const std::function<double(Vec2)>& f2,
                                    const ProxConfig& cfg, Vec2 point,
                                    const OracleSettings& s) {
  check_prox_config(cfg);
  const double r = cfg.r;
  double at_centre = f2(point);
  // f2 >= 0 puts the minimizer within sqrt(2 f2(p)/r) of the prox-centre.
  double radius = std::sqrt(std::max(0.0, 2.0 * at_centre / r)) + 1.0;
  auto objective = [&](Vec2 y) { return f2(y) + 0.5 * r * (y - point).norm2(); };
  return detail::nested_min_2d(objective, point, radius, s);
}

}  // namespace moreau
