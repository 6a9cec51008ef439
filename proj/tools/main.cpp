// moreau: prox mappings and Moreau envelopes of convex piecewise cubics,
// with gauge smoothing and an independent brute-force cross-check.

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moreau/function_io.hpp"
#include "moreau/gauge2d.hpp"
#include "moreau/oracle.hpp"
#include "moreau/prox.hpp"
#include "svg_chart.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCompareFail = 3;
constexpr int kExitDegenerate = 4;

struct Range {
  double lo;
  double hi;
};

Range parse_range(const std::string& text) {
  auto pos = text.find(':');
  if (pos == std::string::npos) throw CLI::ValidationError("--range", "expected LO:HI");
  try {
    return {std::stod(text.substr(0, pos)), std::stod(text.substr(pos + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--range", "expected LO:HI");
  }
}

struct GridSpec {
  double lo;
  double hi;
  int n;
};

GridSpec parse_grid(const std::string& text) {
  auto p1 = text.find(':');
  auto p2 = text.rfind(':');
  if (p1 == std::string::npos || p2 == p1) {
    throw CLI::ValidationError("--grid", "expected LO:HI:N");
  }
  try {
    return {std::stod(text.substr(0, p1)), std::stod(text.substr(p1 + 1, p2 - p1 - 1)),
            std::stoi(text.substr(p2 + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid", "expected LO:HI:N");
  }
}

std::vector<double> parse_r_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw CLI::ValidationError("--r", "needs at least one value");
  for (double r : out) {
    if (!(r > 0) || !std::isfinite(r)) throw CLI::ValidationError("--r", "values must be > 0");
  }
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw moreau::ParseError("cannot open output file " + path);
  return out;
}

int cmd_validate(const std::string& input) {
  try {
    moreau::PiecewiseCubic f = moreau::load_function_spec(input);
    std::cout << "valid (" << f.piece_count() << " pieces)\n";
    return kExitOk;
  } catch (const moreau::ValidationError& e) {
    std::cout << e.what() << "\n";
    return kExitInvalid;
  }
}

int cmd_eval(const std::string& input, double r, double x) {
  moreau::PiecewiseCubic f = moreau::load_function_spec(input);
  moreau::ProxResult res = moreau::prox(f, {r}, x);
  std::cout << "prox=" << moreau::format_short(res.prox)
            << " envelope=" << moreau::format_short(res.envelope)
            << " gradient=" << moreau::format_short(res.gradient) << " cell=" << res.cell
            << "\n";
  return kExitOk;
}

int cmd_partition(const std::string& input, double r) {
  moreau::PiecewiseCubic f = moreau::load_function_spec(input);
  std::cout << moreau::partition(f, {r}).render(f);
  return kExitOk;
}

int cmd_compare(const std::string& input, double r, int samples, std::uint64_t seed,
                double perturb) {
  moreau::PiecewiseCubic f = moreau::load_function_spec(input);
  moreau::ProxConfig cfg{r};
  moreau::EnvelopePartition part = moreau::partition(f, cfg);

  std::vector<double> bounds = part.boundaries();
  double lo, hi;
  if (bounds.empty()) {
    lo = -10.0;
    hi = 10.0;
  } else {
    double w = std::max(1.0, bounds.back() - bounds.front());
    lo = bounds.front() - 3.0 * w;
    hi = bounds.back() + 3.0 * w;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  double max_prox_err = 0.0, max_env_err = 0.0;
  for (int i = 0; i < samples; ++i) {
    double x = dist(rng);
    moreau::ProxResult closed = moreau::prox(f, part, cfg, x);
    moreau::Oracle1DResult oracle = moreau::prox_oracle_1d(f, cfg, x);
    double pe = std::fabs(closed.prox + perturb - oracle.prox);
    double ee = std::fabs(closed.envelope + perturb - oracle.envelope) /
                (1.0 + std::fabs(oracle.envelope));
    max_prox_err = std::max(max_prox_err, pe);
    max_env_err = std::max(max_env_err, ee);
  }
  std::cout << "samples=" << samples << " range=[" << moreau::format_short(lo) << ","
            << moreau::format_short(hi) << "] seed=" << seed << " r=" << moreau::format_short(r)
            << "\n";
  std::cout << "max |prox - oracle| = " << moreau::format_short(max_prox_err) << "\n";
  std::cout << "max |envelope - oracle| (rel) = " << moreau::format_short(max_env_err) << "\n";
  if (max_prox_err <= 1e-7 && max_env_err <= 1e-9) {
    std::cout << "OK\n";
    return kExitOk;
  }
  std::cout << "FAIL\n";
  return kExitCompareFail;
}

int cmd_plot(const std::string& input, const std::vector<double>& rs, Range range, int samples,
             const std::string& output, const std::string& format) {
  moreau::PiecewiseCubic f = moreau::load_function_spec(input);
  std::vector<double> xs(samples);
  for (int i = 0; i < samples; ++i) {
    xs[i] = range.lo + (range.hi - range.lo) * i / (samples - 1);
  }
  auto f_at = [&](double x) {
    return f.in_domain(x) ? f(x) : moreau::kInf;
  };

  std::ofstream out = open_output(output);
  if (format == "csv") {
    out << "x,f";
    for (double r : rs) out << ",e_rf(r=" << moreau::format_short(r) << ")";
    out << "\n";
    for (double x : xs) {
      out << moreau::format_roundtrip(x) << ',' << moreau::format_roundtrip(f_at(x));
      for (double r : rs) {
        out << ',' << moreau::format_roundtrip(moreau::envelope(f, {r}, x));
      }
      out << "\n";
    }
  } else {
    std::vector<moreau::svg::Series> series;
    moreau::svg::Series sf{"f", {}};
    for (double x : xs) sf.points.push_back({x, f_at(x)});
    series.push_back(std::move(sf));
    for (double r : rs) {
      moreau::svg::Series se{"e_rf(r=" + moreau::format_short(r) + ")", {}};
      for (double x : xs) se.points.push_back({x, moreau::envelope(f, {r}, x)});
      series.push_back(std::move(se));
    }
    moreau::svg::write_chart(out, series, "f and its Moreau envelopes");
  }
  return kExitOk;
}

int cmd_gauge(const std::string& kind, double r, const std::string& grid_text, int samples,
              double scale, const std::string& output, const std::string& format) {
  moreau::Gauge2D base = kind == "max"  ? moreau::Gauge2D::max_norm()
                         : kind == "l1" ? moreau::Gauge2D::l1_norm()
                                        : moreau::Gauge2D::scaled_euclidean(scale);
  moreau::SmoothedGauge sg(base, r);
  std::ofstream out = open_output(output);
  if (!grid_text.empty()) {
    GridSpec g = parse_grid(grid_text);
    moreau::write_gauge_grid_csv(out, sg, g.lo, g.hi, g.n);
    return kExitOk;
  }
  std::vector<moreau::Vec2> circle = moreau::unit_circle(sg, samples);
  const double two_pi = 2.0 * std::acos(-1.0);
  if (format == "csv") {
    out << "theta,x,y\n";
    for (int i = 0; i < samples; ++i) {
      double theta = two_pi * i / samples;
      out << moreau::format_roundtrip(theta) << ',' << moreau::format_roundtrip(circle[i].x)
          << ',' << moreau::format_roundtrip(circle[i].y) << "\n";
    }
  } else {
    moreau::svg::Series s{"rho_r(r=" + moreau::format_short(r) + ")", circle};
    s.points.push_back(circle.front());  // close the curve
    moreau::svg::write_chart(out, {s}, "unit circle of h_r");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact proximal mappings and Moreau envelopes of convex piecewise-cubic "
               "functions, and gauge smoothing via sqrt(e_r(f^2))"};
  app.require_subcommand(1);

  std::string input, output = "out.csv", format = "csv", r_text = "1", gauge_kind, grid_text;
  double x = 0.0, scale = 1.0, perturb = 0.0;
  std::string range_text = "-1:1";
  int samples = 201;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "check a function-spec file");
  validate->add_option("--input", input, "function-spec JSON file")->required();

  auto* eval = app.add_subcommand("eval", "prox/envelope/gradient at one prox-centre");
  eval->add_option("--input", input)->required();
  eval->add_option("--r", r_text, "prox-parameter");
  eval->add_option("--x", x, "prox-centre")->required();

  auto* part = app.add_subcommand("partition", "print the envelope subdomains");
  part->add_option("--input", input)->required();
  part->add_option("--r", r_text);

  auto* compare = app.add_subcommand("compare", "closed form vs brute-force oracle");
  compare->add_option("--input", input)->required();
  compare->add_option("--r", r_text);
  compare->add_option("--samples", samples, "number of prox-centres")->default_val(200);
  compare->add_option("--seed", seed, "64-bit RNG seed");
  compare->add_option("--perturb", perturb, "bias injected into the closed form (harness self-test)")
      ->group("");

  auto* plot = app.add_subcommand("plot", "export f and e_rf curves (csv or svg)");
  plot->add_option("--input", input)->required();
  plot->add_option("--r", r_text, "comma-separated prox-parameters");
  plot->add_option("--range", range_text, "LO:HI")->required();
  plot->add_option("--samples", samples);
  plot->add_option("--output", output)->required();
  plot->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));

  auto* gauge = app.add_subcommand("gauge", "smoothed-gauge grid or unit-circle export");
  gauge->add_option("kind", gauge_kind)->required()->check(CLI::IsMember({"max", "l1", "custom"}));
  gauge->add_option("--r", r_text);
  gauge->add_option("--grid", grid_text, "LO:HI:N (grid mode; omit for circle mode)");
  gauge->add_option("--samples", samples, "circle-mode sample count")->default_val(360);
  gauge->add_option("--scale", scale, "scale of the custom (scaled Euclidean) gauge");
  gauge->add_option("--output", output)->required();
  gauge->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize CLI11's exit codes: 0 for --help, kExitParse otherwise.
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (validate->parsed()) return cmd_validate(input);
    std::vector<double> rs = parse_r_list(r_text);
    if (eval->parsed()) return cmd_eval(input, rs.front(), x);
    if (part->parsed()) return cmd_partition(input, rs.front());
    if (compare->parsed()) return cmd_compare(input, rs.front(), samples, seed, perturb);
    if (plot->parsed()) return cmd_plot(input, rs, parse_range(range_text), samples, output, format);
    if (gauge->parsed())
      return cmd_gauge(gauge_kind, rs.front(), grid_text, samples, scale, output, format);
  } catch (const moreau::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const moreau::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const moreau::DegenerateRay& e) {
    std::cerr << e.what() << "\n";
    return kExitDegenerate;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
