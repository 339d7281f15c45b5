#pragma once

#include "json.hpp"

#include "cubic/series.hpp"

namespace cubic {

// Series <-> JSON as arrays of "num/den" strings (nested for Q[u] coefficients).
nlohmann::json to_json(const Series& a);
nlohmann::json to_json(const UPoly& p);
nlohmann::json to_json(const BivarSeries& a);
Series series_from_json(const nlohmann::json& j);
UPoly upoly_from_json(const nlohmann::json& j);
BivarSeries bivar_from_json(const nlohmann::json& j);

}  // namespace cubic
