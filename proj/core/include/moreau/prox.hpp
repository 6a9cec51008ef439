#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "moreau/piecewise_cubic.hpp"

namespace moreau {

struct ProxConfig {
  double r;  ///< prox-parameter, must be finite and > 0
};

void check_prox_config(const ProxConfig& cfg);

enum class CellKind { Piece, Breakpoint, Bound };

/// One subdomain of prox-centres. Piece cells are open, breakpoint and
/// bound cells are closed; adjacent formulas agree at shared endpoints.
struct PartitionCell {
  double lo;
  double hi;
  CellKind kind;
  std::size_t index;  ///< piece index, breakpoint index, or 0/1 for lo/hi bound
  double pin;         ///< the pinned proximal point (breakpoint/bound cells only)
};

/// The subdomains of e_rf along the prox-centre axis, tiling the real line.
class EnvelopePartition {
 public:
  EnvelopePartition(std::vector<PartitionCell> cells, double r)
      : cells_(std::move(cells)), r_(r) {}

  const std::vector<PartitionCell>& cells() const { return cells_; }
  double r() const { return r_; }

  /// Index of the cell containing x; boundary points go to the closed
  /// (breakpoint/bound) neighbour.
  std::size_t locate(double x) const;

  /// Interior boundaries, ascending.
  std::vector<double> boundaries() const;

  /// Stable textual rendering, one cell per line: "interval kind index formula".
  std::string render(const PiecewiseCubic& f) const;

 private:
  std::vector<PartitionCell> cells_;
  double r_;
};

struct ProxResult {
  double prox;
  double envelope;
  double gradient;    ///< always r*(x - prox)
  std::size_t cell;   ///< index into the EnvelopePartition
};

/// Proximal point of a single full-domain cubic piece at prox-centre x,
/// valid on the piece's cell. Throws NegativeDiscriminant outside it.
double prox_piece_candidate(const CubicPiece& piece, const ProxConfig& cfg, double x);

/// Prox and envelope of f(x) = a|x|^3 + b x^2 + c x + d with a, b >= 0.
/// The cell index reports the branch: 0 for x < c/r, 1 for x >= c/r.
ProxResult prox_symmetric_cubic(double a, double b, double c, double d,
                                const ProxConfig& cfg, double x);

EnvelopePartition partition(const PiecewiseCubic& f, const ProxConfig& cfg);

ProxResult prox(const PiecewiseCubic& f, const EnvelopePartition& part,
                const ProxConfig& cfg, double x);
ProxResult prox(const PiecewiseCubic& f, const ProxConfig& cfg, double x);
double envelope(const PiecewiseCubic& f, const ProxConfig& cfg, double x);

/// g = f - slope * x; convexity is unaffected.
PiecewiseCubic affine_tilt(const PiecewiseCubic& f, double slope);

/// Restriction of f to [lo, hi]; pieces wholly outside are dropped.
PiecewiseCubic restrict(const PiecewiseCubic& f, double lo, double hi);

}  // namespace moreau
