#include "cubic/serialize.hpp"

namespace cubic {

using nlohmann::json;

json to_json(const Series& a) {
  json j = json::array();
  for (const auto& q : a.coeffs()) j.push_back(to_fraction_string(q));
  return j;
}

json to_json(const UPoly& p) {
  json j = json::array();
  for (const auto& q : p.coeffs()) j.push_back(to_fraction_string(q));
  return j;
}

json to_json(const BivarSeries& a) {
  json j = json::array();
  for (const auto& p : a.coeffs()) j.push_back(to_json(p));
  return j;
}

Series series_from_json(const json& j) {
  std::vector<Rat> v;
  for (const auto& e : j) v.push_back(parse_rat(e.get<std::string>()));
  return Series(std::move(v));
}

UPoly upoly_from_json(const json& j) {
  std::vector<Rat> v;
  for (const auto& e : j) v.push_back(parse_rat(e.get<std::string>()));
  return UPoly(std::move(v));
}

BivarSeries bivar_from_json(const json& j) {
  std::vector<UPoly> v;
  for (const auto& e : j) v.push_back(upoly_from_json(e));
  return BivarSeries(std::move(v));
}

}  // namespace cubic
