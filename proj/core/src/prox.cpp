#include "moreau/prox.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace moreau {

namespace {

constexpr double kTinyCubic = 1e-14;       // |a| below this * scale is quadratic
constexpr double kDiscriminantSlack = 1e-10;

bool cubic_negligible(const CubicPiece& p) {
  return std::fabs(p.a) <= kTinyCubic * std::max({1.0, std::fabs(p.b), std::fabs(p.c)});
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string endpoint(double v) { return std::isinf(v) ? (v > 0 ? "+inf" : "-inf") : fmt(v); }

}  // namespace

void check_prox_config(const ProxConfig& cfg) {
  if (!(cfg.r > 0.0) || !std::isfinite(cfg.r)) {
    throw BadParam("prox-parameter r must be finite and > 0");
  }
}

double prox_piece_candidate(const CubicPiece& piece, const ProxConfig& cfg, double x) {
  check_prox_config(cfg);
  const double r = cfg.r;
  if (cubic_negligible(piece)) {
    return (r * x - piece.c) / (2.0 * piece.b + r);
  }
  const double q = 2.0 * piece.b + r;
  double disc = q * q - 12.0 * piece.a * (piece.c - r * x);
  const double scale = std::max({q * q, std::fabs(12.0 * piece.a * (piece.c - r * x)), 1.0});
  if (disc < -kDiscriminantSlack * scale) {
    throw NegativeDiscriminant("prox_piece_candidate: x outside the cell of this piece");
  }
  if (disc < 0.0) disc = 0.0;  // perfect square analytically at cell boundaries
  // Positive-root branch over 6a; the denominator sign makes it correct for
  // a < 0 end pieces as well.
  return (-q + std::sqrt(disc)) / (6.0 * piece.a);
}

ProxResult prox_symmetric_cubic(double a, double b, double c, double d,
                                const ProxConfig& cfg, double x) {
  check_prox_config(cfg);
  if (a < 0.0 || b < 0.0 || !std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(d)) {
    throw BadParam("prox_symmetric_cubic requires a >= 0, b >= 0 and finite coefficients");
  }
  const double r = cfg.r;
  const bool left = x < c / r;
  double p;
  if (a <= kTinyCubic * std::max({1.0, b, std::fabs(c)})) {
    p = (r * x - c) / (r + 2.0 * b);  // quadratic limit, both branches
  } else {
    const double q = r + 2.0 * b;
    const double rad = std::sqrt(std::max(0.0, q * q + (left ? -1.0 : 1.0) * 12.0 * a * (r * x - c)));
    p = left ? (q - rad) / (6.0 * a) : (-q + rad) / (6.0 * a);
  }
  const double value = a * std::fabs(p * p * p) + b * p * p + c * p + d;
  return {p, value + 0.5 * r * (p - x) * (p - x), r * (x - p), left ? std::size_t{0} : std::size_t{1}};
}

EnvelopePartition partition(const PiecewiseCubic& f, const ProxConfig& cfg) {
  check_prox_config(cfg);
  const double r = cfg.r;
  const auto& pieces = f.pieces();
  const auto& bps = f.breakpoints();
  std::vector<PartitionCell> cells;
  cells.reserve(2 * pieces.size() + 1);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  double left = -kInf;

  if (f.bounded_below()) {
    double a = f.lower_bound();
    double edge = a + pieces.front().deriv(a) / r;
    cells.push_back({-kInf, edge, CellKind::Bound, 0, a});
    left = edge;
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i + 1 < pieces.size()) {
      double xi = bps[i];
      double bl = xi + pieces[i].deriv(xi) / r;
      double bh = xi + pieces[i + 1].deriv(xi) / r;
      cells.push_back({left, bl, CellKind::Piece, i, nan});
      cells.push_back({bl, bh, CellKind::Breakpoint, i, xi});
      left = bh;
    } else if (f.bounded_above()) {
      double b = f.upper_bound();
      double edge = b + pieces[i].deriv(b) / r;
      cells.push_back({left, edge, CellKind::Piece, i, nan});
      cells.push_back({edge, kInf, CellKind::Bound, 1, b});
    } else {
      cells.push_back({left, kInf, CellKind::Piece, i, nan});
    }
  }
  return EnvelopePartition(std::move(cells), r);
}

std::size_t EnvelopePartition::locate(double x) const {
  // Boundaries are ascending; piece cells are open, the rest closed.
  std::size_t lo = 0, hi = cells_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (x > cells_[mid].hi) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  // x <= cells_[lo].hi; on an exact boundary prefer the closed neighbour.
  if (x == cells_[lo].hi && cells_[lo].kind == CellKind::Piece && lo + 1 < cells_.size()) {
    return lo + 1;
  }
  return lo;
}

std::vector<double> EnvelopePartition::boundaries() const {
  std::vector<double> b;
  b.reserve(cells_.size() - 1);
  for (std::size_t i = 0; i + 1 < cells_.size(); ++i) b.push_back(cells_[i].hi);
  return b;
}

std::string EnvelopePartition::render(const PiecewiseCubic& f) const {
  std::ostringstream os;
  for (const auto& cell : cells_) {
    const bool closed = cell.kind != CellKind::Piece;
    os << (closed && !std::isinf(cell.lo) ? '[' : '(') << endpoint(cell.lo) << ','
       << endpoint(cell.hi) << (closed && !std::isinf(cell.hi) ? ']' : ')') << ' ';
    switch (cell.kind) {
      case CellKind::Piece: {
        const CubicPiece& p = f.pieces()[cell.index];
        os << "piece " << cell.index << " ";
        if (cubic_negligible(p)) {
          os << "p=(r*x-(" << fmt(p.c) << "))/(2*(" << fmt(p.b) << ")+r)";
        } else {
          os << "p=(-(2*(" << fmt(p.b) << ")+r)+sqrt((2*(" << fmt(p.b) << ")+r)^2-12*("
             << fmt(p.a) << ")*((" << fmt(p.c) << ")-r*x)))/(6*(" << fmt(p.a) << "))";
        }
        break;
      }
      case CellKind::Breakpoint:
        os << "breakpoint " << cell.index << " p=" << fmt(cell.pin);
        break;
      case CellKind::Bound:
        os << "bound " << cell.index << " p=" << fmt(cell.pin);
        break;
    }
    os << '\n';
  }
  return os.str();
}

ProxResult prox(const PiecewiseCubic& f, const EnvelopePartition& part,
                const ProxConfig& cfg, double x) {
  const double r = cfg.r;
  std::size_t ci = part.locate(x);
  const PartitionCell& cell = part.cells()[ci];
  double p;
  std::size_t piece;
  if (cell.kind == CellKind::Piece) {
    piece = cell.index;
    p = prox_piece_candidate(f.pieces()[piece], cfg, x);
    // Keep the root inside the piece's closed subdomain against roundoff.
    p = std::clamp(p, f.piece_lo(piece), f.piece_hi(piece));
  } else {
    p = cell.pin;
    piece = f.piece_index(p);
  }
  const double env = f.pieces()[piece].value(p) + 0.5 * r * (p - x) * (p - x);
  return {p, env, r * (x - p), ci};
}

ProxResult prox(const PiecewiseCubic& f, const ProxConfig& cfg, double x) {
  return prox(f, partition(f, cfg), cfg, x);
}

double envelope(const PiecewiseCubic& f, const ProxConfig& cfg, double x) {
  return prox(f, cfg, x).envelope;
}

PiecewiseCubic affine_tilt(const PiecewiseCubic& f, double slope) {
  std::vector<CubicPiece> pieces = f.pieces();
  for (auto& p : pieces) p.c -= slope;
  std::optional<std::pair<double, double>> bounds;
  if (f.bounded_below() || f.bounded_above()) {
    bounds = std::make_pair(f.lower_bound(), f.upper_bound());
  }
  return PiecewiseCubic::validate(std::move(pieces), f.breakpoints(), bounds);
}

PiecewiseCubic restrict(const PiecewiseCubic& f, double lo, double hi) {
  if (!(lo < hi)) {
    throw ValidationError(ValidationFault::EmptyDomain, 0, "EmptyDomain: lo >= hi");
  }
  lo = std::max(lo, f.lower_bound());
  hi = std::min(hi, f.upper_bound());
  if (!(lo < hi)) {
    throw ValidationError(ValidationFault::EmptyDomain, 0,
                          "EmptyDomain: restriction does not intersect the domain");
  }
  std::vector<CubicPiece> pieces;
  std::vector<double> bps;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    if (f.piece_hi(i) <= lo || f.piece_lo(i) >= hi) continue;  // wholly outside
    pieces.push_back(f.pieces()[i]);
    double bp = f.piece_hi(i);
    if (bp < hi && i + 1 < f.piece_count() && f.piece_lo(i + 1) < hi) bps.push_back(bp);
  }
  return PiecewiseCubic::validate(std::move(pieces), std::move(bps),
                                  std::make_pair(lo, hi));
}

}  // namespace moreau
