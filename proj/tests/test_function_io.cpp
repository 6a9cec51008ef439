#include <doctest.h>

#include <cstdlib>
#include <random>

#include "moreau/function_io.hpp"

using moreau::parse_function_spec;
using moreau::ParseError;

TEST_CASE("parses pieces with defaulted coefficients") {
  auto f = parse_function_spec(R"({"pieces":[{"b":1}]})");
  CHECK(f.piece_count() == 1);
  CHECK(f(2.0) == 4.0);
  CHECK(!f.bounded_below());
}

TEST_CASE("parses breakpoints and null bounds") {
  auto f = parse_function_spec(
      R"({"pieces":[{"c":-1},{"c":1}],"breakpoints":[0],"bounds":[null,5]})");
  CHECK(f.piece_count() == 2);
  CHECK(!f.bounded_below());
  CHECK(f.bounded_above());
  CHECK(f.upper_bound() == 5.0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_function_spec("not json"), ParseError);
  CHECK_THROWS_AS(parse_function_spec("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_function_spec(R"({"pieces":[]})"), ParseError);
  CHECK_THROWS_AS(parse_function_spec(R"({"pieces":[1]})"), ParseError);
  CHECK_THROWS_AS(parse_function_spec(R"({"pieces":[{}],"breakpoints":5})"), ParseError);
  CHECK_THROWS_AS(parse_function_spec(R"({"pieces":[{}],"bounds":[1]})"), ParseError);
  CHECK_THROWS_AS(parse_function_spec(R"({"pieces":[{}],"bounds":["a",1]})"), ParseError);
  CHECK_THROWS_AS(moreau::load_function_spec("/nonexistent/path.json"), ParseError);
}

TEST_CASE("invalid function content surfaces as ValidationError, not ParseError") {
  CHECK_THROWS_AS(
      parse_function_spec(R"({"pieces":[{"c":1},{"c":-1}],"breakpoints":[0]})"),
      moreau::ValidationError);
}

TEST_CASE("fixture files load") {
  auto f = moreau::load_function_spec(std::string(DATA_DIR) + "/three_piece.json");
  CHECK(f.piece_count() == 3);
  auto g = moreau::load_function_spec(std::string(DATA_DIR) + "/linear_restricted.json");
  CHECK(g.bounded_below());
  CHECK(g.bounded_above());
}

TEST_CASE("round-trip formatting preserves doubles exactly") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    double v = dist(rng);
    CHECK(std::strtod(moreau::format_roundtrip(v).c_str(), nullptr) == v);
  }
  CHECK(moreau::format_short(0.5) == "0.5");
}
