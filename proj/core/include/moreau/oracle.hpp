#pragma once

#include <functional>
#include <vector>

#include "moreau/piecewise_cubic.hpp"
#include "moreau/prox.hpp"
#include "moreau/vec2.hpp"

namespace moreau {

struct OracleSettings {
  double tol = 1e-10;          ///< solution tolerance on the argument
  int max_iter = 200;          ///< 1D bisection iterations
  double bracket_growth = 2.0; ///< > 1
  int max_evals_2d = 100000;   ///< objective evaluation budget for 2D searches
};

struct Oracle1DResult {
  double prox;
  double envelope;
};

/// Brute-force prox by bisection on the monotone map y -> df(y) + r*(y - x).
/// Independent of the closed-form path; used only for cross-validation.
Oracle1DResult prox_oracle_1d(const PiecewiseCubic& f, const ProxConfig& cfg, double x,
                              const OracleSettings& s = {});

struct Envelope2DResult {
  double value;
  Vec2 argmin;
  /// Best objective value after each outer localization step (nonincreasing).
  std::vector<double> trace;
};

/// Brute-force 2D Moreau envelope: minimizes f2(y) + (r/2)|y - point|^2 by
/// nested per-coordinate golden-section searches.
Envelope2DResult envelope_oracle_2d(const std::function<double(Vec2)>& f2,
                                    const ProxConfig& cfg, Vec2 point,
                                    const OracleSettings& s = {});

namespace detail {

/// Golden-section minimization of a convex function on [lo, hi].
/// Returns the best evaluated point; *value receives its objective.
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol, double* value = nullptr);

/// Nested per-coordinate golden-section minimization of a jointly convex
/// objective over a square of the given radius around the centre.
Envelope2DResult nested_min_2d(const std::function<double(Vec2)>& objective,
                               Vec2 centre, double radius, const OracleSettings& s);

}  // namespace detail

}  // namespace moreau
