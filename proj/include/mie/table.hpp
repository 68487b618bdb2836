#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mie/core.hpp"
#include "mie/molecule.hpp"

namespace mie {

struct SpectrumRow {
  int n = 0;
  int l = 0;
  int N = 3;
  double E_exact = 0.0;    // declared energy unit (dimensionless in gamma-only mode)
  double E_expand3 = 0.0;  // order-3 deep-well expansion, same unit
  double beta = 0.0;
  double q = 0.0;
};

struct SpectrumTable {
  std::string molecule;     // record name, or "dimensionless"
  std::string energy_unit;  // "hartree", "eV" or "dimensionless"
  double gamma_sq = 0.0;
  double omega = 0.0;
  double inertia = 0.0;
  std::string version;
  std::vector<SpectrumRow> rows;  // sorted by (l, n)
};

/// Rows for n = 0..n_max, l = 0..l_max at fixed N, sorted by (l, n).
SpectrumTable build_spectrum_table(const MoleculeRecord& mol, int n_max, int l_max,
                                   std::optional<int> dim_override);
SpectrumTable build_spectrum_table_dimensionless(double gamma_sq, int n_max, int l_max,
                                                 int dim_N);

/// CSV with header n,l,N,E_exact,E_expand3,beta,q; 12 significant digits,
/// \n line endings, locale-independent.
std::string to_csv(const SpectrumTable& table);

/// Full-precision JSON; floats survive a parse/serialize round trip
/// bit-exactly.
nlohmann::json to_json(const SpectrumTable& table);
SpectrumTable table_from_json(const nlohmann::json& j);

/// Locale-independent scientific formatting with 12 significant digits.
std::string format_sig12(double v);

}  // namespace mie
