#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "moreau/errors.hpp"

namespace moreau {

/// One cubic a*x^3 + b*x^2 + c*x + d.
struct CubicPiece {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double value(double x) const { return ((a * x + b) * x + c) * x + d; }
  double deriv(double x) const { return (3.0 * a * x + 2.0 * b) * x + c; }
  double second_deriv(double x) const { return 6.0 * a * x + 2.0 * b; }
};

/// Closed interval of supporting slopes; a singleton where f is differentiable.
/// lo/hi may be -inf/+inf at a finite domain endpoint (normal cone ray).
struct SubgradientInterval {
  double lo;
  double hi;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A validated convex piecewise-cubic function on the real line.
///
/// Pieces are indexed 0..m-1; piece i lives on [x_{i-1}, x_i] with
/// x_{-1} = lo (or -inf) and x_{m-1} = hi (or +inf). Breakpoints belong to
/// both adjacent pieces; evaluation uses the left piece (values agree).
class PiecewiseCubic {
 public:
  /// Validates continuity, per-subdomain convexity and slope monotonicity.
  /// Throws ValidationError on the first violated condition.
  static PiecewiseCubic validate(std::vector<CubicPiece> pieces,
                                 std::vector<double> breakpoints,
                                 std::optional<std::pair<double, double>> bounds = std::nullopt);

  double operator()(double x) const;
  SubgradientInterval subgradient(double x) const;

  /// Index of the piece active at x (left piece at a breakpoint).
  std::size_t piece_index(double x) const;

  std::size_t piece_count() const { return pieces_.size(); }
  const std::vector<CubicPiece>& pieces() const { return pieces_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  double lower_bound() const { return lo_; }
  double upper_bound() const { return hi_; }
  bool bounded_below() const { return lo_ != -kInf; }
  bool bounded_above() const { return hi_ != kInf; }
  bool in_domain(double x) const { return x >= lo_ && x <= hi_; }

  /// Left endpoint of piece i's subdomain (lo or -inf for i == 0).
  double piece_lo(std::size_t i) const { return i == 0 ? lo_ : breakpoints_[i - 1]; }
  /// Right endpoint of piece i's subdomain (hi or +inf for the last piece).
  double piece_hi(std::size_t i) const {
    return i + 1 == pieces_.size() ? hi_ : breakpoints_[i];
  }

  /// True if the pieces are a structural mirror image around 0
  /// (f(-x) = f(x) by coefficient symmetry).
  bool is_even() const;

 private:
  PiecewiseCubic(std::vector<CubicPiece> pieces, std::vector<double> breakpoints,
                 double lo, double hi)
      : pieces_(std::move(pieces)), breakpoints_(std::move(breakpoints)), lo_(lo), hi_(hi) {}

  std::vector<CubicPiece> pieces_;
  std::vector<double> breakpoints_;
  double lo_;
  double hi_;
};

}  // namespace moreau
