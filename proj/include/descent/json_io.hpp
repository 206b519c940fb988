#ifndef DESCENT_JSON_IO_HPP
#define DESCENT_JSON_IO_HPP

#include <descent/maxwell.hpp>

#include <json.hpp>

#include <string>

namespace descent {

// EMConfig object with keys Ex, Ey, Ez, Bx, By, Bz, rho, jx, jy, jz holding
// polynomial strings in (t, x, y, z). Missing keys default to zero; unknown
// keys are rejected.
EMConfig emconfig_from_json(const nlohmann::json& j);
nlohmann::json emconfig_to_json(const EMConfig& c);

// Either an EMConfig object or {"dimension": m, "form": "<canonical text>"}.
bool json_is_emconfig(const nlohmann::json& j);
Form form_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const SectorReport& rep, const std::string& mode);
std::string report_to_text(const SectorReport& rep);

nlohmann::json single_decomposition_to_json(const SingleDecomposition& d, const std::string& axis_label);
nlohmann::json double_decomposition_to_json(const DoubleDecomposition& d);

}  // namespace descent

#endif
