#include "j3/cli/format.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace j3::cli {
namespace {

using nlohmann::json;

double clean(double x) { return x == 0.0 ? 0.0 : x; }

json j3_json(const J3& x) {
  return {{"type", "j3"}, {"u", clean(x.u())}, {"v", clean(x.v())}, {"w", clean(x.w())}};
}

json cyl_json(const CylCoords& c) {
  return {{"type", "cyl"}, {"r", clean(c.r)}, {"theta", clean(c.theta)}, {"a", clean(c.a)}};
}

J3 j3_from(const json& j) {
  if (j.at("type") != "j3") throw std::invalid_argument("expected a j3 object");
  return {j.at("u").get<double>(), j.at("v").get<double>(), j.at("w").get<double>()};
}

CylCoords cyl_from(const json& j) {
  return {j.at("r").get<double>(), j.at("theta").get<double>(), j.at("a").get<double>()};
}

J3Class class_from(const std::string& s) {
  for (auto c : {J3Class::Zero, J3Class::Invertible, J3Class::ZeroDivisorL, J3Class::ZeroDivisorM}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown class '" + s + "'");
}

SolutionKind kind_from(const std::string& s) {
  for (auto k : {SolutionKind::Empty, SolutionKind::Unique, SolutionKind::Finite, SolutionKind::Line,
                 SolutionKind::Plane}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown solution kind '" + s + "'");
}

std::string signed_term(double x, const char* suffix, int precision) {
  const std::string mag = format_real(std::abs(x), precision);
  return (std::signbit(x) && x != 0.0 ? " - " : " + ") + mag + suffix;
}

std::string format_solutions(const SolutionSet& s, int p) {
  std::string out;
  switch (s.kind) {
    case SolutionKind::Empty:
      return "no solutions";
    case SolutionKind::Unique:
    case SolutionKind::Finite:
      out = std::to_string(s.values.size()) + (s.values.size() == 1 ? " solution:" : " solutions:");
      for (const J3& x : s.values) out += "\n  " + format_j3(x, p);
      break;
    case SolutionKind::Line:
      out = "line: " + format_j3(s.values[0], p) + " + t*(" + format_j3(s.directions[0], p) + ")";
      break;
    case SolutionKind::Plane:
      out = "plane: " + format_j3(s.values[0], p) + " + s*(" + format_j3(s.directions[0], p) +
            ") + t*(" + format_j3(s.directions[1], p) + ")";
      break;
  }
  if (s.generator) out += "\n  each + t*(" + format_j3(*s.generator, p) + ") for real t";
  return out;
}

}  // namespace

std::string format_real(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, clean(x));
  return buf;
}

std::string format_j3(const J3& x, int precision) {
  return format_real(x.u(), precision) + signed_term(x.v(), "j", precision) +
         signed_term(x.w(), "jj", precision);
}

std::string format_text(const Value& v, int p) {
  return std::visit(
      [p](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(x, p);
        } else if constexpr (std::is_same_v<T, J3>) {
          return format_j3(x, p);
        } else if constexpr (std::is_same_v<T, J3Class>) {
          return std::string(to_string(x));
        } else if constexpr (std::is_same_v<T, SolutionSet>) {
          return format_solutions(x, p);
        } else if constexpr (std::is_same_v<T, CylCoords>) {
          return "r = " + format_real(x.r, p) + ", theta = " + format_real(x.theta, p) +
                 ", a = " + format_real(x.a, p);
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          return "(" + format_real(x.r, p) + ", " + format_real(x.zx, p) + signed_term(x.zy, "i", p) + ")";
        } else if constexpr (std::is_same_v<T, AbgCoords>) {
          return "abg(" + format_real(x.a, p) + ", " + format_real(x.b, p) + ", " + format_real(x.c, p) + ")";
        } else {
          return "p = " + format_j3(x.polar.p, p) + "\nu = " + format_j3(x.polar.u_dir, p) +
                 "\nr = " + format_real(x.cyl.r, p) + ", theta = " + format_real(x.cyl.theta, p) +
                 ", a = " + format_real(x.cyl.a, p);
        }
      },
      v);
}

json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return {{"type", "real"}, {"value", clean(x)}};
        } else if constexpr (std::is_same_v<T, J3>) {
          return j3_json(x);
        } else if constexpr (std::is_same_v<T, J3Class>) {
          return {{"type", "class"}, {"value", to_string(x)}};
        } else if constexpr (std::is_same_v<T, SolutionSet>) {
          json out = {{"type", "solutions"}, {"kind", to_string(x.kind)}, {"values", json::array()}};
          for (const J3& s : x.values) out["values"].push_back(j3_json(s));
          if (!x.directions.empty()) {
            out["directions"] = json::array();
            for (const J3& d : x.directions) out["directions"].push_back(j3_json(d));
          }
          if (x.generator) out["generator"] = j3_json(*x.generator);
          return out;
        } else if constexpr (std::is_same_v<T, CylCoords>) {
          return cyl_json(x);
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          return {{"type", "dsum"}, {"r", clean(x.r)}, {"x", clean(x.zx)}, {"y", clean(x.zy)}};
        } else if constexpr (std::is_same_v<T, AbgCoords>) {
          return {{"type", "abg"}, {"a", clean(x.a)}, {"b", clean(x.b)}, {"c", clean(x.c)}};
        } else {
          return {{"type", "polar"},
                  {"p", j3_json(x.polar.p)},
                  {"u", j3_json(x.polar.u_dir)},
                  {"cyl", cyl_json(x.cyl)}};
        }
      },
      v);
}

json to_json(const EvalResult& r) {
  json out = to_json(r.value);
  if (r.oracle_delta) out["oracle_delta"] = *r.oracle_delta;
  return out;
}

Value value_from_json(const json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "real") return j.at("value").get<double>();
    if (type == "j3") return j3_from(j);
    if (type == "class") return class_from(j.at("value").get<std::string>());
    if (type == "cyl") return cyl_from(j);
    if (type == "dsum") {
      return DirectSum{j.at("r").get<double>(), j.at("x").get<double>(), j.at("y").get<double>()};
    }
    if (type == "abg") {
      return AbgCoords{j.at("a").get<double>(), j.at("b").get<double>(), j.at("c").get<double>()};
    }
    if (type == "polar") {
      return Decomposition{{j3_from(j.at("p")), j3_from(j.at("u"))}, cyl_from(j.at("cyl"))};
    }
    if (type == "solutions") {
      SolutionSet s;
      s.kind = kind_from(j.at("kind").get<std::string>());
      for (const auto& x : j.at("values")) s.values.push_back(j3_from(x));
      if (j.contains("directions")) {
        for (const auto& d : j.at("directions")) s.directions.push_back(j3_from(d));
      }
      if (j.contains("generator")) s.generator = j3_from(j.at("generator"));
      return s;
    }
    throw std::invalid_argument("unknown value type '" + type + "'");
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

json error_json(const std::string& code, const std::string& message, std::optional<std::size_t> column) {
  json err = {{"code", code}, {"message", message}};
  if (column) err["column"] = *column;
  return {{"error", err}};
}

}  // namespace j3::cli
