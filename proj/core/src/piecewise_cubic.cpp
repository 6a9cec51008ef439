#include "moreau/piecewise_cubic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>

namespace moreau {

namespace {

constexpr double kContinuityRelTol = 1e-9;
constexpr double kCurvatureSlack = 1e-12;
constexpr double kSlopeSlack = 1e-12;

std::string msg(const char* fmt, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, ap);
  va_end(ap);
  return buf;
}

bool finite_coeffs(const CubicPiece& p) {
  return std::isfinite(p.a) && std::isfinite(p.b) && std::isfinite(p.c) && std::isfinite(p.d);
}

// Convexity of one cubic on [lo, hi] (either end may be infinite). The
// second derivative 6a x + 2b is linear, so checking the endpoints suffices;
// an infinite end forces the matching sign of a.
void check_piece_convexity(const CubicPiece& p, double lo, double hi, std::size_t i) {
  auto fail = [&](const char* detail) {
    throw ValidationError(ValidationFault::NotConvexPiece, i,
                          msg("NotConvexPiece at piece %zu: %s", i, detail));
  };
  if (lo == -kInf) {
    if (p.a > 0.0) fail("cubic coefficient > 0 on a left-unbounded subdomain");
    if (p.a == 0.0 && p.b < -kCurvatureSlack) fail("negative curvature");
  } else if (p.second_deriv(lo) < -kCurvatureSlack) {
    fail("second derivative negative at left endpoint");
  }
  if (hi == kInf) {
    if (p.a < 0.0) fail("cubic coefficient < 0 on a right-unbounded subdomain");
    if (p.a == 0.0 && p.b < -kCurvatureSlack) fail("negative curvature");
  } else if (p.second_deriv(hi) < -kCurvatureSlack) {
    fail("second derivative negative at right endpoint");
  }
}

}  // namespace

PiecewiseCubic PiecewiseCubic::validate(std::vector<CubicPiece> pieces,
                                        std::vector<double> breakpoints,
                                        std::optional<std::pair<double, double>> bounds) {
  if (pieces.empty() || breakpoints.size() + 1 != pieces.size()) {
    throw ValidationError(ValidationFault::BadBreakpoints, 0,
                          msg("BadBreakpoints: %zu pieces need %zu breakpoints, got %zu",
                              pieces.size(),
                              pieces.empty() ? std::size_t{0} : pieces.size() - 1,
                              breakpoints.size()));
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!finite_coeffs(pieces[i])) {
      throw ValidationError(ValidationFault::NotConvexPiece, i,
                            msg("piece %zu has non-finite coefficients", i));
    }
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      throw ValidationError(ValidationFault::BadBreakpoints, i + 1,
                            msg("BadBreakpoints: x_%zu=%g >= x_%zu=%g", i + 1, breakpoints[i],
                                i + 2, breakpoints[i + 1]));
    }
  }

  double lo = -kInf, hi = kInf;
  if (bounds) {
    lo = bounds->first;
    hi = bounds->second;
    if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) {
      throw ValidationError(ValidationFault::EmptyDomain, 0,
                            msg("EmptyDomain: bounds [%g, %g]", lo, hi));
    }
    if (!breakpoints.empty() && (breakpoints.front() <= lo || breakpoints.back() >= hi)) {
      throw ValidationError(ValidationFault::BadBreakpoints, 0,
                            "BadBreakpoints: breakpoints must lie strictly inside the bounds");
    }
  }

  // Continuity at every breakpoint, relative tolerance.
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    double xi = breakpoints[i];
    double left = pieces[i].value(xi);
    double right = pieces[i + 1].value(xi);
    double scale = 1.0 + std::max(std::fabs(left), std::fabs(right));
    if (std::fabs(left - right) > kContinuityRelTol * scale) {
      throw ValidationError(ValidationFault::NotContinuous, i + 1,
                            msg("NotContinuous at x_%zu=%g: f_%zu(%g)=%g != f_%zu(%g)=%g", i + 1,
                                xi, i + 1, xi, left, i + 2, xi, right));
    }
  }

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    double plo = i == 0 ? lo : breakpoints[i - 1];
    double phi = i + 1 == pieces.size() ? hi : breakpoints[i];
    check_piece_convexity(pieces[i], plo, phi, i);
  }

  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    double xi = breakpoints[i];
    double dl = pieces[i].deriv(xi);
    double dr = pieces[i + 1].deriv(xi);
    if (dl > dr + kSlopeSlack) {
      throw ValidationError(ValidationFault::SlopeDecrease, i + 1,
                            msg("SlopeDecrease at x_%zu=%g: f_%zu'(%g)=%g > f_%zu'(%g)=%g", i + 1,
                                xi, i + 1, xi, dl, i + 2, xi, dr));
    }
  }

  return PiecewiseCubic(std::move(pieces), std::move(breakpoints), lo, hi);
}

std::size_t PiecewiseCubic::piece_index(double x) const {
  // Left-piece convention at breakpoints: first breakpoint >= x.
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<std::size_t>(it - breakpoints_.begin());
}

double PiecewiseCubic::operator()(double x) const {
  if (!in_domain(x)) {
    throw OutOfDomain("eval: x outside the function domain");
  }
  return pieces_[piece_index(x)].value(x);
}

SubgradientInterval PiecewiseCubic::subgradient(double x) const {
  if (!in_domain(x)) {
    throw OutOfDomain("subgradient: x outside the function domain");
  }
  std::size_t i = piece_index(x);
  double lo = pieces_[i].deriv(x);
  double hi = lo;
  if (i < breakpoints_.size() && x == breakpoints_[i]) {
    hi = pieces_[i + 1].deriv(x);
  }
  if (x == lo_) lo = -kInf;  // normal cone at a finite lower bound
  if (x == hi_) hi = kInf;
  return {lo, hi};
}

bool PiecewiseCubic::is_even() const {
  if (lo_ != -hi_) return false;
  std::size_t m = pieces_.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (breakpoints_[i] != -breakpoints_[m - 2 - i]) return false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const CubicPiece& p = pieces_[i];
    const CubicPiece& q = pieces_[m - 1 - i];
    if (p.a != -q.a || p.b != q.b || p.c != -q.c || p.d != q.d) return false;
  }
  return true;
}

}  // namespace moreau
