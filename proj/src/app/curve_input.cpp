#include <cctype>
#include <string>

#include "polyknot/app.hpp"
#include "polyknot/error.hpp"

namespace polyknot::app {

namespace {

RealPoly from_json(const nlohmann::json& j, const char* key) {
  if (!j.is_array()) throw DataError(std::string("\"") + key + "\" must be an array of numbers");
  std::vector<double> c;
  for (const auto& v : j) {
    if (!v.is_number()) throw DataError(std::string("\"") + key + "\" must hold only numbers");
    c.push_back(v.get<double>());
  }
  return RealPoly(std::move(c));
}

}  // namespace

SpaceKnot CurveInput::knot() const {
  if (!z) throw DomainError("a height polynomial z is required");
  return {x, y, *z};
}

RealPoly parse_coefficients(std::string_view text) {
  std::string s(text);
  for (char& ch : s)
    if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
  std::vector<double> c;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw DataError("bad coefficient near '" + s.substr(pos, 12) + "'");
    }
    c.push_back(v);
    pos += used;
  }
  if (c.empty()) throw DataError("no coefficients given");
  return RealPoly(std::move(c));
}

CurveInput make_curve(RealPoly x, RealPoly y, std::optional<RealPoly> z) {
  CurveInput in{std::move(x), std::move(y), std::move(z)};
  if (in.x.degree() < 1 || in.y.degree() < 1)
    throw DomainError("x and y must be nonconstant polynomials");
  if (in.x.degree() >= in.y.degree())
    throw DomainError("degrees must increase strictly: deg x < deg y (got " +
                      std::to_string(in.x.degree()) + " and " + std::to_string(in.y.degree()) +
                      ")");
  if (in.z && in.z->degree() <= in.y.degree())
    throw DomainError("degrees must increase strictly: deg y < deg z (got " +
                      std::to_string(in.y.degree()) + " and " + std::to_string(in.z->degree()) +
                      ")");
  return in;
}

CurveInput parse_curve(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("curve input is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("x") || !j.contains("y"))
    throw DataError("curve input needs \"x\" and \"y\" coefficient arrays");
  std::optional<RealPoly> z;
  if (j.contains("z")) z = from_json(j["z"], "z");
  return make_curve(from_json(j["x"], "x"), from_json(j["y"], "y"), std::move(z));
}

}  // namespace polyknot::app
