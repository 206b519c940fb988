#include <descent/json_io.hpp>

#include <sstream>

namespace descent {

namespace {

const char* kConfigKeys[] = {"Ex", "Ey", "Ez", "Bx", "By", "Bz", "rho", "jx", "jy", "jz"};

Poly* field_by_name(EMConfig& c, const std::string& name) {
  if (name == "Ex") return &c.Ex;
  if (name == "Ey") return &c.Ey;
  if (name == "Ez") return &c.Ez;
  if (name == "Bx") return &c.Bx;
  if (name == "By") return &c.By;
  if (name == "Bz") return &c.Bz;
  if (name == "rho") return &c.rho;
  if (name == "jx") return &c.jx;
  if (name == "jy") return &c.jy;
  if (name == "jz") return &c.jz;
  return nullptr;
}

}  // namespace

EMConfig emconfig_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("configuration: expected a JSON object");
  EMConfig c;
  for (const auto& [key, value] : j.items()) {
    Poly* field = field_by_name(c, key);
    if (!field) throw std::invalid_argument("configuration: unknown key '" + key + "'");
    if (!value.is_string()) throw std::invalid_argument("configuration: '" + key + "' must be a string");
    *field = Poly::parse(4, value.get<std::string>());
  }
  return c;
}

nlohmann::json emconfig_to_json(const EMConfig& c) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, poly] : c.components()) j[name] = poly->str();
  return j;
}

bool json_is_emconfig(const nlohmann::json& j) {
  if (!j.is_object() || j.contains("form")) return false;
  for (const char* key : kConfigKeys) {
    if (j.contains(key)) return true;
  }
  return j.empty();
}

Form form_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("form")) throw std::invalid_argument("expected a 'form' entry");
  const int dim = j.value("dimension", 4);
  return Form::parse(dim, j.at("form").get<std::string>());
}

nlohmann::json report_to_json(const SectorReport& rep, const std::string& mode) {
  nlohmann::json j;
  j["mode"] = mode;
  nlohmann::json res = nlohmann::json::object();
  for (const auto& [id, form] : rep.residuals) res[id] = form.str();
  j["residuals"] = res;
  nlohmann::json cc = nlohmann::json::object();
  for (const auto& [id, poly] : rep.crosscheck) cc[id] = poly.str();
  j["crosscheck"] = cc;
  j["all_zero"] = rep.all_zero();
  return j;
}

std::string report_to_text(const SectorReport& rep) {
  std::ostringstream out;
  for (const auto& [id, form] : rep.residuals) out << id << ": " << form.str() << "\n";
  for (const auto& [id, poly] : rep.crosscheck) out << id << ": " << poly.str() << "\n";
  out << (rep.all_zero() ? "all residuals zero\n" : "nonzero residuals present\n");
  return out.str();
}

nlohmann::json single_decomposition_to_json(const SingleDecomposition& d, const std::string& axis_label) {
  nlohmann::json j;
  j["mode"] = "single";
  j["axis"] = axis_label;
  j["(0)"] = d.scalar_part.str();
  j["(1)"] = d.vector_part.str();
  j["tags"] = {{"(0)", "1"}, {"(1)", d.pair.label()}};
  return j;
}

nlohmann::json double_decomposition_to_json(const DoubleDecomposition& d) {
  nlohmann::json j;
  j["mode"] = "double";
  j["(0,0)"] = d.part(0, 0).str();
  j["(1,0)"] = d.part(1, 0).str();
  j["(0,1)"] = d.part(0, 1).str();
  j["(1,1)"] = d.part(1, 1).str();
  j["tags"] = {{"(0,0)", "1"},
               {"(1,0)", d.pair_y.label()},
               {"(0,1)", d.pair_z.label()},
               {"(1,1)", d.pair_y.label() + "^" + d.pair_z.label()}};
  return j;
}

}  // namespace descent
