#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mie/core.hpp"

namespace mie {

/// One record of the molecule input file. Units are tagged per field:
/// D0_unit in {"hartree", "eV"}, r0_unit in {"bohr", "angstrom"},
/// mass_unit in {"me", "amu"}; dim_N defaults to 3.
struct MoleculeRecord {
  std::string name;
  double D0 = 0.0;
  std::string D0_unit;
  double r0 = 0.0;
  std::string r0_unit;
  double mass = 0.0;
  std::string mass_unit;
  int dim_N = 3;

  /// Spec in atomic units, regardless of the declared input units.
  PotentialSpec to_spec() const;
  double gamma_sq() const;
  /// Factor taking a physical atomic-unit energy to the declared D0_unit.
  double declared_energy_factor() const;
};

/// Loads a molecule file: either {"schema": 1, "molecules": [...]} or a
/// bare array of records. An empty or whitespace-only file yields an empty
/// list (callers warn). Unknown units, non-positive parameters, missing
/// fields and duplicate names raise parse_error naming record and field.
std::vector<MoleculeRecord> load_molecules(const std::filesystem::path& path);

}  // namespace mie
