#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mie/core.hpp"
#include "mie/errors.hpp"
#include "mie/molecule.hpp"
#include "mie/oracle.hpp"
#include "mie/spectrum.hpp"
#include "mie/table.hpp"
#include "mie/validation.hpp"
#include "mie/version.hpp"
#include "mie/wavefunction.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
  std::string molecule_file;
  std::string name;
  bool dimensionless = false;
  double gamma_sq = 0.0;
  int dim = 0;  // 0: not given
  std::string out_path;
};

struct Problem {
  mie::DimensionlessModel model;
  std::string unit_name;  // energy unit label of displayed values
  double to_unit = 1.0;   // dimensionless energy -> displayed energy
  std::optional<mie::MoleculeRecord> record;
  std::optional<mie::PotentialSpec> spec;
};

int dim_or_default(const CommonOpts& opts, int fallback) {
  if (opts.dim == 0) return fallback;
  if (opts.dim < 2) throw std::domain_error("--dim must be >= 2");
  return opts.dim;
}

/// Unit well with the requested gamma_sq: r0 = 1 bohr, mu = 1 electron
/// mass, D0 = gamma_sq/2 hartree. Lets the spectroscopic-form machinery
/// run in dimensionless mode.
mie::PotentialSpec synthetic_spec(double gamma_sq) {
  mie::PotentialSpec spec;
  spec.D0 = 0.5 * gamma_sq;
  spec.r0 = 1.0;
  spec.reduced_mass = 1.0;
  spec.units = mie::UnitSystem::atomic;
  return spec;
}

Problem resolve(const CommonOpts& opts, bool coulomb = false) {
  Problem p;
  if (coulomb) {
    const int dim = dim_or_default(opts, 3);
    p.model = mie::DimensionlessModel::generalized(2.0, 0.0, dim);
    p.unit_name = "hartree";
    p.to_unit = 0.5;  // hbar^2/(2 mu r0^2) at mu = 1, r0 = 1 bohr
    return p;
  }
  if (opts.dimensionless) {
    if (!(opts.gamma_sq > 0.0))
      throw std::domain_error("--dimensionless requires --gamma-sq > 0");
    const int dim = dim_or_default(opts, 3);
    p.model = mie::DimensionlessModel::special(opts.gamma_sq, dim);
    p.unit_name = "dimensionless";
    p.to_unit = 1.0;
    p.spec = synthetic_spec(opts.gamma_sq);
    return p;
  }
  if (opts.molecule_file.empty() || opts.name.empty())
    throw std::domain_error(
        "provide --molecule-file and --name, or --dimensionless with --gamma-sq");
  const auto records = mie::load_molecules(opts.molecule_file);
  const auto it = std::find_if(records.begin(), records.end(),
                               [&](const auto& r) { return r.name == opts.name; });
  if (it == records.end())
    throw mie::parse_error("molecule '" + opts.name + "' not found in " +
                           opts.molecule_file);
  p.record = *it;
  p.spec = it->to_spec();
  const int dim = dim_or_default(opts, it->dim_N);
  p.model = mie::reduce(*p.spec, dim);
  p.unit_name = it->D0_unit;
  p.to_unit = mie::energy_unit(*p.spec) * it->declared_energy_factor();
  return p;
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
  out << text;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const CommonOpts& opts, int n_max, int l_max,
                 const std::string& format) {
  if (n_max < 0 || l_max < 0) throw std::domain_error("--nmax and --lmax must be >= 0");
  mie::SpectrumTable table;
  if (opts.dimensionless) {
    if (!(opts.gamma_sq > 0.0))
      throw std::domain_error("--dimensionless requires --gamma-sq > 0");
    table = mie::build_spectrum_table_dimensionless(opts.gamma_sq, n_max, l_max,
                                                    dim_or_default(opts, 3));
  } else {
    const Problem p = resolve(opts);
    std::optional<int> dim_override;
    if (opts.dim != 0) dim_override = dim_or_default(opts, 3);
    table = mie::build_spectrum_table(*p.record, n_max, l_max, dim_override);
  }
  if (format == "csv")
    emit(opts, mie::to_csv(table));
  else
    emit(opts, mie::to_json(table).dump(2) + "\n");
  return kExitOk;
}

// ------------------------------------------------------------ wavefunction

int cmd_wavefunction(const CommonOpts& opts, int n, int l, double x_min, double x_max,
                     int points, const std::string& format) {
  const Problem p = resolve(opts);
  const mie::QuantumState state{n, l, p.model.dim_N};
  const double r0 = p.spec ? p.spec->r0 : 1.0;
  mie::RadialFunction rf = mie::radial_bound(p.model, state, r0);
  if (x_max <= 0.0) {
    // Auto window: past every Laguerre root plus ~15 decay lengths.
    x_max = (4.0 * n + 2.0 * rf.laguerre_factor.alpha + 30.0) / (2.0 * rf.level.beta);
  }
  rf.sample(x_min, x_max, points);

  if (format == "csv") {
    std::string text = "x,R\n";
    for (const auto& [x, v] : rf.samples)
      text += mie::format_sig12(x) + "," + mie::format_sig12(v) + "\n";
    emit(opts, text);
  } else {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& [x, v] : rf.samples) samples.push_back({x, v});
    const nlohmann::json doc{{"n", n},
                             {"l", l},
                             {"N", p.model.dim_N},
                             {"gamma_sq", p.model.gamma_sq},
                             {"beta", rf.level.beta},
                             {"q", rf.level.q_exponent},
                             {"norm_constant", rf.norm_constant},
                             {"r0", r0},
                             {"samples", std::move(samples)}};
    emit(opts, doc.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyRow {
  int n = 0;
  int l = 0;
  double e_exact = 0.0;   // dimensionless
  double e_oracle = 0.0;  // dimensionless, Richardson-extrapolated
  double rel_err = 0.0;
  double norm_dev = 0.0;
  int nodes_found = 0;
  bool pass = false;
};

std::vector<VerifyRow> verify_block(const mie::DimensionlessModel& model, int l,
                                    int n_max, std::optional<mie::Grid> grid_override,
                                    double tolerance) {
  const int count = n_max + 1;
  const mie::Grid grid =
      grid_override ? *grid_override : mie::default_grid(model, l, count);
  const mie::OracleResult res = mie::richardson(model, l, grid, count);
  if (static_cast<int>(res.richardson.size()) < count) {
    std::ostringstream msg;
    msg << "oracle found " << res.richardson.size() << " of " << count
        << " levels for l=" << l
        << "; enlarge the box (--xmax) or refine the grid (--points)";
    throw mie::numerical_error(msg.str());
  }
  std::vector<VerifyRow> rows;
  rows.reserve(count);
  for (int n = 0; n < count; ++n) {
    const mie::QuantumState state{n, l, model.dim_N};
    VerifyRow row;
    row.n = n;
    row.l = l;
    row.e_exact = mie::bound_energy(model, state).energy_dimensionless;
    row.e_oracle = res.richardson[n].value;
    row.rel_err = std::abs(row.e_oracle - row.e_exact) / std::abs(row.e_exact);
    row.norm_dev = std::abs(mie::norm_integral(model, state) - 1.0);
    row.nodes_found = mie::count_nodes(model, state);
    row.pass = row.rel_err <= tolerance && row.norm_dev <= 1e-6 && row.nodes_found == n;
    rows.push_back(row);
  }
  return rows;
}

int cmd_verify(const CommonOpts& opts, int n_max, int l_max, double tolerance,
               bool coulomb, double x_min, double x_max, int points) {
  if (n_max < 0 || l_max < 0) throw std::domain_error("--nmax and --lmax must be >= 0");
  if (!(tolerance > 0.0)) throw std::domain_error("--tolerance must be > 0");
  const Problem p = resolve(opts, coulomb);

  std::optional<mie::Grid> grid_override;
  if (x_min > 0.0 || x_max > 0.0 || points > 0) {
    mie::Grid g;
    if (x_min > 0.0) g.x_min = x_min;
    if (x_max > 0.0) g.x_max = x_max;
    if (points > 0) g.points = points;
    g.validate();
    grid_override = g;
  }

  // One task per l block; assembly order is fixed by the loop, not by
  // completion order.
  std::vector<std::future<std::vector<VerifyRow>>> blocks;
  blocks.reserve(l_max + 1);
  for (int l = 0; l <= l_max; ++l) {
    const mie::DimensionlessModel model = p.model;
    blocks.push_back(std::async(std::launch::async, [model, l, n_max, grid_override,
                                                     tolerance]() {
      return verify_block(model, l, n_max, grid_override, tolerance);
    }));
  }

  std::ostringstream report;
  report << "verify: gamma_sq=" << mie::format_sig12(p.model.gamma_sq)
         << " N=" << p.model.dim_N << " tolerance=" << tolerance << " unit="
         << p.unit_name << "\n";
  report << "  l  n  E_exact              E_oracle             rel_err    norm_dev   "
            "nodes  result\n";
  int failures = 0;
  int total = 0;
  for (auto& fut : blocks) {
    for (const VerifyRow& row : fut.get()) {
      ++total;
      if (!row.pass) ++failures;
      std::ostringstream line;
      line << "  " << row.l << "  " << row.n << "  " << std::setw(20) << std::left
           << mie::format_sig12(row.e_exact * p.to_unit) << " " << std::setw(20)
           << std::left << mie::format_sig12(row.e_oracle * p.to_unit) << " "
           << std::scientific << std::setprecision(2) << row.rel_err << "   "
           << row.norm_dev << "   " << row.nodes_found << "/" << row.n << "    "
           << (row.pass ? "PASS" : "FAIL");
      report << line.str() << "\n";
    }
  }
  report << "summary: " << (total - failures) << "/" << total
         << " levels PASS (tolerance " << tolerance << ")\n";
  emit(opts, report.str());
  return failures == 0 ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------- expand

int cmd_expand(const CommonOpts& opts, int n, int l) {
  const Problem p = resolve(opts);
  const mie::QuantumState state{n, l, p.model.dim_N};
  const mie::ExpansionTerms terms = mie::expand_energy(p.model, state, 3);
  const mie::SpectroscopicTerms spectro = mie::spectroscopic_terms(*p.spec, state);

  // Display scale: declared unit for molecules, the dimensionless energy
  // quantum for --dimensionless (where the synthetic spec has unit 1/2).
  const double per_spec_unit =
      p.record ? p.record->declared_energy_factor() : 1.0 / mie::energy_unit(*p.spec);
  const double d0_display = p.spec->D0 * per_spec_unit;

  static const char* kLabels[5] = {
      "-D0 (well depth)", "+hbar*omega*(n+1/2)", "+(hbar^2/2I)*lambda^2",
      "-(3hbar^2/2I)*(n+1/2)^2", "-(3hbar^3/2I^2w)*(n+1/2)*lambda^2"};

  std::ostringstream out;
  out << "expansion: gamma_sq=" << mie::format_sig12(p.model.gamma_sq) << " n=" << n
      << " l=" << l << " N=" << p.model.dim_N << " unit=" << p.unit_name << "\n";
  out << "  #  order  D0-power form         spectroscopic form    cumulative sum        "
         "term\n";
  double cumulative = 0.0;
  double worst_rel = 0.0;
  for (std::size_t i = 0; i < terms.terms.size(); ++i) {
    const double d0_form = terms.terms[i] * d0_display;
    const double s_form = spectro.terms[i] * per_spec_unit;
    cumulative += d0_form;
    const double scale = std::max(std::abs(d0_form), std::abs(s_form));
    if (scale > 0.0) worst_rel = std::max(worst_rel, std::abs(d0_form - s_form) / scale);
    out << "  " << i << "  1/g^" << mie::ExpansionTerms::orders[i] << "  " << std::setw(21)
        << std::left << mie::format_sig12(d0_form) << " " << std::setw(21) << std::left
        << mie::format_sig12(s_form) << " " << std::setw(21) << std::left
        << mie::format_sig12(cumulative) << " " << kLabels[i] << "\n";
  }
  const double e_exact =
      mie::bound_energy(p.model, state).energy_dimensionless * p.to_unit;
  const double residual = e_exact - cumulative;
  out << "exact energy:        " << mie::format_sig12(e_exact) << "\n";
  out << "order-3 sum:         " << mie::format_sig12(cumulative) << "\n";
  out << "residual (exact-sum): " << mie::format_sig12(residual) << "  relative "
      << std::scientific << std::setprecision(3) << std::abs(residual / e_exact) << "\n";
  out << "form agreement: max relative difference " << std::scientific
      << std::setprecision(3) << worst_rel << "\n";
  emit(opts, out.str());
  return kExitOk;
}

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--molecule-file", opts.molecule_file,
                  "JSON molecule file (array of records or {\"molecules\": [...]})");
  sub->add_option("--name", opts.name, "molecule name inside the file");
  sub->add_flag("--dimensionless", opts.dimensionless,
                "operate on gamma_sq directly, skipping unit conversion");
  sub->add_option("--gamma-sq", opts.gamma_sq, "dimensionless well depth 2*mu*r0^2*D0/hbar^2");
  sub->add_option("--dim", opts.dim, "spatial dimension N >= 2 (default 3 or record value)");
  sub->add_option("--out", opts.out_path, "write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound states of the two-term inverse-power (Coulomb + inverse-square) "
               "potential in N dimensions"};
  app.set_version_flag("--version", mie::version);
  app.require_subcommand(1);

  CommonOpts spectrum_opts;
  int spectrum_nmax = 3, spectrum_lmax = 2;
  std::string spectrum_format = "csv";
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "emit the (n,l) bound-level table as CSV or JSON");
  add_common(spectrum, spectrum_opts);
  spectrum->add_option("--nmax", spectrum_nmax, "largest radial quantum number");
  spectrum->add_option("--lmax", spectrum_lmax, "largest angular quantum number");
  spectrum->add_option("--format", spectrum_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CommonOpts wf_opts;
  int wf_n = 0, wf_l = 0, wf_points = 501;
  double wf_xmin = 1e-3, wf_xmax = 0.0;
  std::string wf_format = "csv";
  CLI::App* wavefunction = app.add_subcommand(
      "wavefunction", "sample the normalized radial eigenfunction R(x), x = r/r0");
  add_common(wavefunction, wf_opts);
  wavefunction->add_option("--n", wf_n, "radial quantum number");
  wavefunction->add_option("--l", wf_l, "angular quantum number");
  wavefunction->add_option("--xmin", wf_xmin, "first sample point (> 0)");
  wavefunction->add_option("--xmax", wf_xmax, "last sample point (default: auto)");
  wavefunction->add_option("--points", wf_points, "number of samples (>= 2)");
  wavefunction->add_option("--format", wf_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CommonOpts verify_opts;
  int verify_nmax = 1, verify_lmax = 1, verify_points = 0;
  double verify_tol = 1e-6, verify_xmin = 0.0, verify_xmax = 0.0;
  bool verify_coulomb = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "compare closed-form levels against the finite-difference solver");
  add_common(verify, verify_opts);
  verify->add_option("--nmax", verify_nmax, "largest radial quantum number");
  verify->add_option("--lmax", verify_lmax, "largest angular quantum number");
  verify->add_option("--tolerance", verify_tol, "relative-error threshold (default 1e-6)");
  verify->add_flag("--coulomb", verify_coulomb,
                   "pure Coulomb reference (a1=2, a2=0, atomic units)");
  verify->add_option("--xmin", verify_xmin, "override solver grid x_min");
  verify->add_option("--xmax", verify_xmax, "override solver grid x_max");
  verify->add_option("--points", verify_points, "override solver grid points");

  CommonOpts expand_opts;
  int expand_n = 0, expand_l = 0;
  CLI::App* expand = app.add_subcommand(
      "expand", "deep-well 1/gamma expansion terms and spectroscopic equivalents");
  add_common(expand, expand_opts);
  expand->add_option("--n", expand_n, "radial quantum number");
  expand->add_option("--l", expand_l, "angular quantum number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (spectrum->parsed())
      return cmd_spectrum(spectrum_opts, spectrum_nmax, spectrum_lmax, spectrum_format);
    if (wavefunction->parsed())
      return cmd_wavefunction(wf_opts, wf_n, wf_l, wf_xmin, wf_xmax, wf_points,
                              wf_format);
    if (verify->parsed())
      return cmd_verify(verify_opts, verify_nmax, verify_lmax, verify_tol,
                        verify_coulomb, verify_xmin, verify_xmax, verify_points);
    if (expand->parsed()) return cmd_expand(expand_opts, expand_n, expand_l);
  } catch (const mie::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const mie::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
