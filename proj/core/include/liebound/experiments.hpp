#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "liebound/bounds.hpp"
#include "liebound/lorentz.hpp"

namespace liebound {

enum class ExperimentKind { so_compare, trotter_compare, bound_sweep, lorentz_demo };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::so_compare;
  int m = 2;                     // group size parameter
  double j = 0.5;                // spin
  int n = 0;                     // su11 sector
  double mass = 1.0;             // lorentz
  double sigma = 1.0;            // lorentz packet width
  Eigen::Vector3d pbar = Eigen::Vector3d::Zero();
  std::vector<double> grid;      // a-values, L-values or boost parameters
  double t = 1.0;                // trotter time
  std::string gen_x = "Omega";
  std::string gen_y = "Omega*sigma_x";
  bool apply_omega = false;      // alternative reading of the product formula
  double energy = 2.0;
  int cutoff = 64;
  std::uint64_t seed = 0;
  std::string rep = "spin";      // bound_sweep representation family
  int sweep_samples = 1000;
  std::string out;               // CSV path; empty = no file
};

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string provenance;  // "config=<hash> seed=<seed>"

  int column(const std::string& name) const;
};

void validate(const ExperimentConfig& cfg);
std::uint64_t config_hash(const ExperimentConfig& cfg);

// Full-precision decimal formatting (17 significant digits).
std::string format_full(double x);
void write_csv(const ResultTable& table, std::ostream& os);
void write_csv(const ResultTable& table, const std::string& path);

// Named sp(2) generators accepted by the trotter experiment:
// "Omega", "Omega*sigma_x", "sigma_x", "sigma_z".
AlgebraElement named_sp2_generator(const GroupPtr& sp, const std::string& name);

// Comparison bound for SO(2m) channels: 2m ||g - h||_inf.
double oszmaniec_bound(int m, const GroupElement& g, const GroupElement& h);

// sqrt(m(2m-1)/2) ||log(g^-1 h)||_2, falling back to
// (pi / (2 sqrt 2)) sqrt(m(2m-1)) ||g - h||_2 when the log fails.
double our_so_bound(int m, const GroupElement& g, const GroupElement& h);

struct TrotterWords {
  std::vector<AlgebraElement> g_word;  // single exponential of -t(X+Y)
  std::vector<AlgebraElement> h_word;  // L repetitions of -tX/L, -tY/L
  GroupElement g;
  GroupElement h;
};
TrotterWords trotter_word(double t, int steps, const AlgebraElement& x,
                          const AlgebraElement& y);

// Comparison ECD bound for symplectic channels (literal evaluation).
double becker_bound(const GroupElement& g, const GroupElement& h, int m,
                    double energy);

// 2 sqrt(E + 3m/8) (pi/(||g^-1 h||_inf + 1) + 2 ||g^-1 h||_inf) ||g^-1 h - 1||_2.
double our_symplectic_bound(const GroupElement& g, const GroupElement& h, int m,
                            double energy);

// The sharper 2 sqrt(E + 3m/8) d_best(g, h) form.
double our_symplectic_ecd_bound(const GroupElement& g, const GroupElement& h,
                                int m, double energy);

// Least-squares slope of log y against log x over the top half of the grid.
double fit_loglog_slope(const ResultTable& table, const std::string& x_col,
                        const std::string& y_col);

struct SweepOutcome {
  ResultTable table;
  int violations = 0;  // oracle exceeded bound beyond tolerance
};

// Deterministic random soundness sweep for one representation family.
SweepOutcome run_bound_sweep(const ExperimentConfig& cfg);

ResultTable run_experiment(const ExperimentConfig& cfg);

}  // namespace liebound
