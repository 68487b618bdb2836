#include "mie/table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "mie/errors.hpp"
#include "mie/spectrum.hpp"
#include "mie/version.hpp"

namespace mie {

std::string format_sig12(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::scientific, 11);
  if (res.ec != std::errc{}) throw std::runtime_error("format_sig12: conversion failed");
  return std::string(buf, res.ptr);
}

namespace {

std::vector<SpectrumRow> build_rows(const DimensionlessModel& model, int n_max, int l_max,
                                    int dim_N, double to_unit) {
  if (n_max < 0 || l_max < 0)
    throw std::domain_error("spectrum table: n_max and l_max must be >= 0");
  std::vector<SpectrumRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max + 1) * (l_max + 1));
  for (int l = 0; l <= l_max; ++l) {
    for (int n = 0; n <= n_max; ++n) {
      const QuantumState state{n, l, dim_N};
      const BoundLevel lv = bound_energy(model, state);
      const ExpansionTerms terms = expand_energy(model, state, 3);
      SpectrumRow row;
      row.n = n;
      row.l = l;
      row.N = dim_N;
      row.E_exact = lv.energy_dimensionless * to_unit;
      row.E_expand3 = model.gamma_sq * terms.sum() * to_unit;
      row.beta = lv.beta;
      row.q = lv.q_exponent;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace

SpectrumTable build_spectrum_table(const MoleculeRecord& mol, int n_max, int l_max,
                                   std::optional<int> dim_override) {
  const PotentialSpec spec = mol.to_spec();
  const int dim = dim_override.value_or(mol.dim_N);
  const DimensionlessModel model = reduce(spec, dim);
  const double to_unit = energy_unit(spec) * mol.declared_energy_factor();
  const HarmonicParams hp = harmonic_params(spec);

  SpectrumTable table;
  table.molecule = mol.name;
  table.energy_unit = mol.D0_unit;
  table.gamma_sq = model.gamma_sq;
  table.omega = hp.omega;      // atomic units (hbar = 1)
  table.inertia = hp.inertia;  // atomic units
  table.version = version;
  table.rows = build_rows(model, n_max, l_max, dim, to_unit);
  return table;
}

SpectrumTable build_spectrum_table_dimensionless(double gamma_sq, int n_max, int l_max,
                                                 int dim_N) {
  const DimensionlessModel model = DimensionlessModel::special(gamma_sq, dim_N);
  SpectrumTable table;
  table.molecule = "dimensionless";
  table.energy_unit = "dimensionless";
  table.gamma_sq = gamma_sq;
  // Unit-well equivalents: r0 = 1, mu = 1, D0 = gamma_sq/2 in hbar = 1 units.
  table.omega = std::sqrt(gamma_sq);
  table.inertia = 1.0;
  table.version = version;
  table.rows = build_rows(model, n_max, l_max, dim_N, 1.0);
  return table;
}

std::string to_csv(const SpectrumTable& table) {
  std::string out = "n,l,N,E_exact,E_expand3,beta,q\n";
  for (const SpectrumRow& r : table.rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.l);
    out += ',';
    out += std::to_string(r.N);
    out += ',';
    out += format_sig12(r.E_exact);
    out += ',';
    out += format_sig12(r.E_expand3);
    out += ',';
    out += format_sig12(r.beta);
    out += ',';
    out += format_sig12(r.q);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const SpectrumTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SpectrumRow& r : table.rows) {
    rows.push_back({{"n", r.n},
                    {"l", r.l},
                    {"N", r.N},
                    {"E_exact", r.E_exact},
                    {"E_expand3", r.E_expand3},
                    {"beta", r.beta},
                    {"q", r.q}});
  }
  return nlohmann::json{{"molecule", table.molecule},
                        {"energy_unit", table.energy_unit},
                        {"gamma_sq", table.gamma_sq},
                        {"omega", table.omega},
                        {"inertia", table.inertia},
                        {"version", table.version},
                        {"rows", std::move(rows)}};
}

SpectrumTable table_from_json(const nlohmann::json& j) {
  try {
    SpectrumTable table;
    table.molecule = j.at("molecule").get<std::string>();
    table.energy_unit = j.at("energy_unit").get<std::string>();
    table.gamma_sq = j.at("gamma_sq").get<double>();
    table.omega = j.at("omega").get<double>();
    table.inertia = j.at("inertia").get<double>();
    table.version = j.at("version").get<std::string>();
    for (const auto& rj : j.at("rows")) {
      SpectrumRow r;
      r.n = rj.at("n").get<int>();
      r.l = rj.at("l").get<int>();
      r.N = rj.at("N").get<int>();
      r.E_exact = rj.at("E_exact").get<double>();
      r.E_expand3 = rj.at("E_expand3").get<double>();
      r.beta = rj.at("beta").get<double>();
      r.q = rj.at("q").get<double>();
      table.rows.push_back(r);
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("spectrum table JSON: ") + e.what());
  }
}

}  // namespace mie
