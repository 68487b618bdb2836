#include "mie/molecule.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mie/errors.hpp"

namespace mie {

namespace {

[[noreturn]] void fail(const std::string& record, const std::string& detail) {
  throw parse_error("molecule record '" + record + "': " + detail);
}

double positive_number(const nlohmann::json& j, const std::string& record,
                       const char* field) {
  if (!j.contains(field)) fail(record, std::string("missing field '") + field + "'");
  const auto& v = j.at(field);
  if (!v.is_number()) fail(record, std::string("field '") + field + "' must be a number");
  const double x = v.get<double>();
  if (!(std::isfinite(x) && x > 0.0))
    fail(record, std::string("field '") + field + "' must be finite and > 0");
  return x;
}

std::string unit_string(const nlohmann::json& j, const std::string& record,
                        const char* field, std::initializer_list<const char*> allowed) {
  if (!j.contains(field)) fail(record, std::string("missing field '") + field + "'");
  const auto& v = j.at(field);
  if (!v.is_string()) fail(record, std::string("field '") + field + "' must be a string");
  const std::string s = v.get<std::string>();
  for (const char* ok : allowed)
    if (s == ok) return s;
  fail(record, std::string("field '") + field + "' has unknown unit '" + s + "'");
}

MoleculeRecord parse_record(const nlohmann::json& j, std::size_t index) {
  if (!j.is_object())
    throw parse_error("molecule record #" + std::to_string(index) +
                      ": expected a JSON object");
  std::string name = "#" + std::to_string(index);
  if (!j.contains("name") || !j.at("name").is_string() ||
      j.at("name").get<std::string>().empty())
    fail(name, "missing or empty field 'name'");
  name = j.at("name").get<std::string>();

  MoleculeRecord rec;
  rec.name = name;
  rec.D0 = positive_number(j, name, "D0");
  rec.D0_unit = unit_string(j, name, "D0_unit", {"hartree", "eV"});
  rec.r0 = positive_number(j, name, "r0");
  rec.r0_unit = unit_string(j, name, "r0_unit", {"bohr", "angstrom"});
  rec.mass = positive_number(j, name, "mass");
  rec.mass_unit = unit_string(j, name, "mass_unit", {"me", "amu"});
  if (j.contains("dim_N")) {
    const auto& v = j.at("dim_N");
    if (!v.is_number_integer()) fail(name, "field 'dim_N' must be an integer");
    rec.dim_N = v.get<int>();
    if (rec.dim_N < 2) fail(name, "field 'dim_N' must be >= 2");
  }
  return rec;
}

}  // namespace

PotentialSpec MoleculeRecord::to_spec() const {
  PotentialSpec spec;
  spec.units = UnitSystem::atomic;
  spec.exp_m = 2;
  spec.exp_k = 1;
  spec.D0 = D0_unit == "eV" ? D0 / constants::hartree_ev : D0;
  spec.r0 = r0_unit == "angstrom" ? r0 / constants::bohr_angstrom : r0;
  spec.reduced_mass = mass_unit == "amu" ? mass / constants::electron_mass_amu : mass;
  spec.validate();
  return spec;
}

double MoleculeRecord::gamma_sq() const { return gamma_sq_of(to_spec()); }

double MoleculeRecord::declared_energy_factor() const {
  return D0_unit == "eV" ? constants::hartree_ev : 1.0;
}

std::vector<MoleculeRecord> load_molecules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open molecule file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error("molecule file " + path.string() + ": " + e.what());
  }

  const nlohmann::json* list = nullptr;
  if (doc.is_array()) {
    list = &doc;
  } else if (doc.is_object() && doc.contains("molecules") &&
             doc.at("molecules").is_array()) {
    list = &doc.at("molecules");
  } else {
    throw parse_error("molecule file " + path.string() +
                      ": expected an array of records or {\"molecules\": [...]}");
  }

  std::vector<MoleculeRecord> out;
  std::set<std::string> seen;
  out.reserve(list->size());
  for (std::size_t i = 0; i < list->size(); ++i) {
    MoleculeRecord rec = parse_record((*list)[i], i);
    if (!seen.insert(rec.name).second) fail(rec.name, "duplicate record name");
    rec.to_spec();  // unit conversion sanity (throws on bad values)
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace mie
