#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "moreau/oracle.hpp"
#include "moreau/vec2.hpp"

namespace moreau {

/// A 2D gauge: nonnegative, positively homogeneous, convex, zero at the origin.
class Gauge2D {
 public:
  enum class Kind { MaxNorm, L1Norm, ScaledEuclidean, Custom };

  static Gauge2D max_norm();
  static Gauge2D l1_norm();
  static Gauge2D scaled_euclidean(double scale);
  /// Validates the evaluator by sampling (zero at origin, homogeneity,
  /// convexity along segments). Throws BadParam on failure.
  static Gauge2D custom(std::function<double(Vec2)> eval);

  double operator()(Vec2 p) const;
  Kind kind() const { return kind_; }
  double scale() const { return scale_; }

 private:
  Gauge2D(Kind kind, double scale, std::function<double(Vec2)> eval)
      : kind_(kind), scale_(scale), eval_(std::move(eval)) {}

  Kind kind_;
  double scale_ = 1.0;
  std::function<double(Vec2)> eval_;
};

enum class Region { R1, R2, R3, R4 };

const char* region_name(Region r);

/// Region of the max-norm smoothing partition containing p.
/// Boundary ties break in the order R1 < R2 < R3 < R4.
Region classify_max(double r, Vec2 p);

struct GaugeProx {
  double h;     ///< h_r(p) = sqrt(e_r(f^2)(p))
  Vec2 prox;    ///< minimizer of f^2 + (r/2)|.-p|^2
  Region region;
};

/// Closed-form smoothing of the max-norm.
GaugeProx smooth_max(double r, Vec2 p);

/// Closed-form smoothing of the l1-norm. Region membership is derived from
/// the proximal-point table: the candidate with the smallest objective wins.
GaugeProx smooth_l1(double r, Vec2 p);

/// Oracle-backed smoothing of an arbitrary gauge: sqrt(e_r(g^2)(p)).
double smooth_custom(const Gauge2D& g, double r, Vec2 p, const OracleSettings& s = {});

/// Pasch-Hausdorff envelope inf{ g(y) + r|y - p| } (Euclidean norm).
double pasch_hausdorff(const Gauge2D& g, double r, Vec2 p, const OracleSettings& s = {});

/// A gauge paired with a smoothing parameter; evaluates h_r via the closed
/// forms where available and the 2D oracle otherwise.
class SmoothedGauge {
 public:
  SmoothedGauge(Gauge2D base, double r, OracleSettings settings = {});

  double value(Vec2 p) const;
  /// Minimizer of f^2 + (r/2)|.-p|^2 at p.
  Vec2 prox(Vec2 p) const;
  /// Gradient of h_r via grad g_r = r(p - prox) and the chain rule;
  /// nullopt on the kernel (h_r = 0).
  std::optional<Vec2> gradient(Vec2 p) const;

  const Gauge2D& base() const { return base_; }
  double r() const { return r_; }

 private:
  Gauge2D base_;
  double r_;
  OracleSettings settings_;
};

/// Points t*(cos th, sin th) with h_r = 1 at `samples` equally spaced angles;
/// exact via homogeneity (t = 1/h_r(direction)). Throws DegenerateRay when
/// h_r vanishes along a sampled ray.
std::vector<Vec2> unit_circle(const SmoothedGauge& sg, int samples);

/// CSV grid export with header "x,y,f,h_r,prox_x,prox_y,region"; the region
/// column is "-" for gauges without a closed-form partition.
void write_gauge_grid_csv(std::ostream& os, const SmoothedGauge& sg,
                          double lo, double hi, int n);

}  // namespace moreau
