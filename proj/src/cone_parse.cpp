#include <sstream>

#include "json.hpp"
#include "nestrec/bounding.hpp"

namespace nestrec {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) parts.push_back(item);
  return parts;
}

std::vector<Value> parse_ints(const std::string& text) {
  std::vector<Value> out;
  for (const auto& item : split(text, ',')) {
    const Rational r = parse_rational(item);
    if (r.denominator() != 1) throw InputError("table entries must be integers: '" + item + "'");
    out.push_back(r.numerator());
  }
  return out;
}

ConeSpec from_kind(const std::string& kind, const std::vector<Rational>& p) {
  if (p.size() != 2) throw InputError("cone kind '" + kind + "' takes two parameters");
  if (kind == "linear") return linear_cone(p[0], p[1]);
  if (kind == "sqrt-in") return sqrt_inside_cone(p[0], p[1]);
  if (kind == "sqrt-out") return sqrt_outside_cone(p[0], p[1]);
  if (kind == "affine-sqrt") return affine_sqrt_cone(p[0], p[1]);
  throw InputError("unknown cone kind '" + kind + "' (linear, sqrt-in, sqrt-out, affine-sqrt, table)");
}

}  // namespace

ConeSpec parse_cone(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("cone spec must look like kind:params, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (kind == "table") {
    const auto halves = split(body, ';');
    if (halves.size() != 2) throw InputError("table cone needs 'l1,l2,...;u1,u2,...'");
    return table_cone("table", parse_ints(halves[0]), parse_ints(halves[1]));
  }
  std::vector<Rational> params;
  for (const auto& item : split(body, ',')) params.push_back(parse_rational(item));
  return from_kind(kind, params);
}

ConeSpec parse_cone_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("cone file is not valid JSON: ") + e.what());
  }
  try {
    const std::string kind = j.at("kind").get<std::string>();
    ConeSpec cone;
    if (kind == "table") {
      cone = table_cone("table", j.at("lower").get<std::vector<Value>>(),
                        j.at("upper").get<std::vector<Value>>());
    } else {
      std::vector<Rational> params;
      for (const auto& p : j.at("params")) params.push_back(parse_rational(p.get<std::string>()));
      cone = from_kind(kind, params);
    }
    if (j.contains("name")) cone.name = j["name"].get<std::string>();
    return cone;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed cone file: ") + e.what());
  }
}

}  // namespace nestrec
