#include <doctest.h>

#include <cmath>
#include <sstream>

#include "moreau/gauge2d.hpp"

using moreau::classify_max;
using moreau::Gauge2D;
using moreau::Region;
using moreau::SmoothedGauge;
using moreau::smooth_l1;
using moreau::smooth_max;
using moreau::Vec2;

TEST_CASE("gauge factories and custom validation") {
  CHECK(Gauge2D::max_norm()({-2.0, 1.0}) == 2.0);
  CHECK(Gauge2D::l1_norm()({-2.0, 1.0}) == 3.0);
  CHECK(Gauge2D::scaled_euclidean(2.0)({3.0, 4.0}) == doctest::Approx(10.0));
  CHECK_THROWS_AS(Gauge2D::scaled_euclidean(0.0), moreau::BadParam);

  SUBCASE("a half-plane support function is accepted") {
    CHECK_NOTHROW(Gauge2D::custom([](Vec2 v) { return std::max(0.0, v.x); }));
  }
  SUBCASE("nonzero at the origin") {
    CHECK_THROWS_AS(Gauge2D::custom([](Vec2 v) { return v.norm() + 1.0; }),
                    moreau::BadParam);
  }
  SUBCASE("negative values") {
    CHECK_THROWS_AS(Gauge2D::custom([](Vec2 v) { return v.x; }), moreau::BadParam);
  }
  SUBCASE("wrong homogeneity degree") {
    CHECK_THROWS_AS(Gauge2D::custom([](Vec2 v) { return v.norm2(); }),
                    moreau::BadParam);
  }
  SUBCASE("homogeneous but not convex") {
    CHECK_THROWS_AS(Gauge2D::custom([](Vec2 v) {
                      return std::min(std::fabs(v.x), std::fabs(v.y));
                    }),
                    moreau::BadParam);
  }
}

TEST_CASE("max-norm region classification and tie-break order") {
  const double r = 1.0;
  const double t = r / (r + 2.0);
  CHECK(classify_max(r, {2.0, 0.1}) == Region::R1);
  CHECK(classify_max(r, {0.1, -2.0}) == Region::R2);
  CHECK(classify_max(r, {2.0, 2.0}) == Region::R3);
  CHECK(classify_max(r, {-2.0, -2.1}) == Region::R3);
  CHECK(classify_max(r, {2.0, -2.0}) == Region::R4);
  CHECK(classify_max(r, {0.0, 0.0}) == Region::R1);
  // exact boundary lines resolve to the lower-numbered region
  CHECK(classify_max(r, {3.0, t * 3.0}) == Region::R1);
  CHECK(classify_max(r, {t * 3.0, 3.0}) == Region::R2);
  CHECK(std::string(moreau::region_name(Region::R4)) == "R4");
}

TEST_CASE("max-norm closed-form smoothing") {
  SUBCASE("flat region keeps the far coordinate") {
    auto gp = smooth_max(1.0, {3.0, 0.5});
    CHECK(gp.region == Region::R1);
    CHECK(gp.h == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(gp.prox.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gp.prox.y == 0.5);
  }
  SUBCASE("diagonal ridge") {
    auto gp = smooth_max(1.0, {2.0, 2.0});
    CHECK(gp.region == Region::R3);
    CHECK(gp.h == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(gp.prox.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gp.prox.y == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("formulas of adjacent regions agree on the shared boundary") {
    for (double r : {0.5, 1.0, 5.0}) {
      const double t = r / (r + 2.0);
      for (double x : {0.5, 1.0, 2.5}) {
        double y = t * x;  // R1/R3 boundary
        double g1 = r * x * x / (r + 2.0);
        double g3 = (r * r * (x - y) * (x - y) + 2.0 * r * (x * x + y * y)) /
                    (4.0 * (r + 1.0));
        CHECK(std::fabs(std::sqrt(g1) - std::sqrt(g3)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("l1-norm closed-form smoothing") {
  SUBCASE("axis point") {
    auto gp = smooth_l1(1.0, {5.0, 0.0});
    CHECK(gp.h == doctest::Approx(std::sqrt(25.0 / 3.0)).epsilon(1e-14));
    CHECK(gp.prox.x == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
    CHECK(gp.prox.y == 0.0);
  }
  SUBCASE("interior of the positive quadrant") {
    auto gp = smooth_l1(1.0, {1.0, 1.0});
    CHECK(gp.h * gp.h == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(gp.prox.x == doctest::Approx(0.2).epsilon(1e-13));
    CHECK(gp.prox.y == doctest::Approx(0.2).epsilon(1e-13));
  }
  SUBCASE("candidates tie on the axis-cell boundary") {
    for (double r : {0.5, 1.0, 5.0}) {
      for (double x : {0.5, 1.5, 3.0}) {
        Vec2 p{x, 2.0 * x / (r + 2.0)};
        Vec2 interior{((r + 2.0) * p.x - 2.0 * p.y) / (r + 4.0),
                      (-2.0 * p.x + (r + 2.0) * p.y) / (r + 4.0)};
        Vec2 axis{r * p.x / (r + 2.0), 0.0};
        auto obj = [&](Vec2 v) {
          double f = std::fabs(v.x) + std::fabs(v.y);
          return f * f + 0.5 * r * (v - p).norm2();
        };
        CHECK(std::fabs(std::sqrt(obj(interior)) - std::sqrt(obj(axis))) <= 1e-10);
      }
    }
  }
}

TEST_CASE("closed forms match the 2d oracle at spot points") {
  Gauge2D mx = Gauge2D::max_norm();
  Gauge2D l1 = Gauge2D::l1_norm();
  for (double r : {0.5, 2.0}) {
    for (Vec2 p : {Vec2{1.3, -0.2}, Vec2{-1.0, -1.1}, Vec2{0.4, 2.0}}) {
      CHECK(std::fabs(smooth_max(r, p).h - moreau::smooth_custom(mx, r, p)) <= 1e-7);
      CHECK(std::fabs(smooth_l1(r, p).h - moreau::smooth_custom(l1, r, p)) <= 1e-7);
    }
  }
}

TEST_CASE("scaled Euclidean smoothing is exactly radial") {
  for (double s : {0.5, 2.0}) {
    SmoothedGauge sg(Gauge2D::scaled_euclidean(s), 1.5);
    Vec2 p{2.0, -1.0};
    double expected = s * std::sqrt(1.5 / (1.5 + 2.0 * s * s)) * p.norm();
    CHECK(sg.value(p) == doctest::Approx(expected).epsilon(1e-14));
    double via_oracle =
        moreau::smooth_custom(Gauge2D::custom([s](Vec2 v) { return s * v.norm(); }),
                              1.5, p);
    CHECK(std::fabs(sg.value(p) - via_oracle) <= 1e-7);
    Vec2 q = sg.prox(p);
    CHECK(q.x == doctest::Approx(1.5 / (1.5 + 2.0 * s * s) * p.x).epsilon(1e-13));
  }
}

TEST_CASE("smoothed gauge gradient") {
  SmoothedGauge sg(Gauge2D::l1_norm(), 1.0);
  SUBCASE("matches the closed form on the axis") {
    auto g = sg.gradient({5.0, 0.0});
    REQUIRE(g.has_value());
    CHECK(g->x == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
    CHECK(g->y == 0.0);
  }
  SUBCASE("matches finite differences") {
    for (Vec2 p : {Vec2{1.0, 1.0}, Vec2{-0.7, 2.2}, Vec2{3.0, -0.4}}) {
      auto g = sg.gradient(p);
      REQUIRE(g.has_value());
      const double h = 1e-6;
      double fx = (sg.value({p.x + h, p.y}) - sg.value({p.x - h, p.y})) / (2.0 * h);
      double fy = (sg.value({p.x, p.y + h}) - sg.value({p.x, p.y - h})) / (2.0 * h);
      CHECK(std::fabs(fx - g->x) <= 1e-6);
      CHECK(std::fabs(fy - g->y) <= 1e-6);
    }
  }
  SUBCASE("undefined on the kernel") {
    CHECK(!sg.gradient({0.0, 0.0}).has_value());
  }
}

TEST_CASE("unit circle lies on the level set h_r = 1") {
  SmoothedGauge sg(Gauge2D::max_norm(), 2.0);
  auto pts = unit_circle(sg, 24);
  REQUIRE(pts.size() == 24);
  for (const Vec2& q : pts) {
    CHECK(sg.value(q) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(unit_circle(sg, 4), moreau::BadParam);
}

TEST_CASE("unit circle reports degenerate rays") {
  // max(0, x) vanishes on the left half-plane, so h_r does too.
  SmoothedGauge sg(Gauge2D::custom([](Vec2 v) { return std::max(0.0, v.x); }), 1.0);
  CHECK_THROWS_AS(unit_circle(sg, 8), moreau::DegenerateRay);
}

TEST_CASE("pasch-hausdorff envelope") {
  Gauge2D mx = Gauge2D::max_norm();
  SUBCASE("recovers a 1-Lipschitz gauge once r reaches the Lipschitz constant") {
    for (Vec2 p : {Vec2{1.0, 0.2}, Vec2{-2.0, 1.5}}) {
      CHECK(std::fabs(moreau::pasch_hausdorff(mx, 1.5, p) - mx(p)) <= 1e-6);
    }
  }
  SUBCASE("never exceeds either endpoint of the infimal convolution") {
    for (double r : {0.2, 0.8}) {
      Vec2 p{2.0, -1.0};
      double v = moreau::pasch_hausdorff(mx, r, p);
      CHECK(v <= mx(p) + 1e-8);
      CHECK(v <= r * p.norm() + 1e-8);
      CHECK(v >= -1e-10);
    }
  }
}

TEST_CASE("grid csv export") {
  std::ostringstream max_csv;
  moreau::write_gauge_grid_csv(max_csv, SmoothedGauge(Gauge2D::max_norm(), 1.0),
                               -1.0, 1.0, 3);
  std::istringstream in(max_csv.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,f,h_r,prox_x,prox_y,region");
  int rows = 0;
  bool saw_region = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line.size() > 2 && line.substr(line.size() - 2) == "R3") saw_region = true;
  }
  CHECK(rows == 9);
  CHECK(saw_region);

  std::ostringstream custom_csv;
  moreau::write_gauge_grid_csv(
      custom_csv,
      SmoothedGauge(Gauge2D::custom([](Vec2 v) { return 2.0 * v.norm(); }), 1.0),
      -1.0, 1.0, 2);
  std::istringstream in2(custom_csv.str());
  std::getline(in2, line);
  while (std::getline(in2, line)) {
    CHECK(line.substr(line.size() - 2) == ",-");
  }
}
