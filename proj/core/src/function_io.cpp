#include "moreau/function_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace moreau {

namespace {

double bound_or_inf(const nlohmann::json& v, double inf_sign) {
  if (v.is_null()) return inf_sign * kInf;
  if (!v.is_number()) throw ParseError("bounds entries must be numbers or null");
  return v.get<double>();
}

}  // namespace

PiecewiseCubic parse_function_spec(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("pieces") || !doc["pieces"].is_array()) {
    throw ParseError("function spec must be an object with a \"pieces\" array");
  }
  if (doc["pieces"].empty()) {
    throw ParseError("\"pieces\" must be nonempty");
  }

  std::vector<CubicPiece> pieces;
  for (const auto& jp : doc["pieces"]) {
    if (!jp.is_object()) throw ParseError("each piece must be an object {a,b,c,d}");
    CubicPiece p;
    p.a = jp.value("a", 0.0);
    p.b = jp.value("b", 0.0);
    p.c = jp.value("c", 0.0);
    p.d = jp.value("d", 0.0);
    pieces.push_back(p);
  }

  std::vector<double> breakpoints;
  if (doc.contains("breakpoints")) {
    if (!doc["breakpoints"].is_array()) throw ParseError("\"breakpoints\" must be an array");
    for (const auto& b : doc["breakpoints"]) {
      if (!b.is_number()) throw ParseError("breakpoints must be numbers");
      breakpoints.push_back(b.get<double>());
    }
  }

  std::optional<std::pair<double, double>> bounds;
  if (doc.contains("bounds") && !doc["bounds"].is_null()) {
    if (!doc["bounds"].is_array() || doc["bounds"].size() != 2) {
      throw ParseError("\"bounds\" must be [lo, hi] with null for unbounded");
    }
    double lo = bound_or_inf(doc["bounds"][0], -1.0);
    double hi = bound_or_inf(doc["bounds"][1], 1.0);
    if (lo != -kInf || hi != kInf) bounds = std::make_pair(lo, hi);
  }

  return PiecewiseCubic::validate(std::move(pieces), std::move(breakpoints), bounds);
}

PiecewiseCubic load_function_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_function_spec(ss.str());
}

std::string format_roundtrip(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace moreau
