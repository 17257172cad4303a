#pragma once

#include <string>

#include "liebound/reps.hpp"

namespace liebound {

enum class EnergyKind { nelson, improved_k, closed_form };

// A positive reference operator certifying ||A(X) psi|| <= ||X|| sqrt(<K>).
struct EnergyOperator {
  RepPtr rep;
  SpMat mat;
  EnergyKind kind = EnergyKind::nelson;
  std::string inner_product_tag;
  double spectral_floor = 0.0;  // min eigenvalue where computable

  Mat dense() const { return Mat(mat); }
};

// sum_j A(X_j)^2 over the stored orthonormal basis.
EnergyOperator nelson_basis_sum(const RepPtr& rep);

// The analytic forms: spin j(j+1) 1; flo m(2m-1)/8 1; displacement
// 1 + sum(Q^2 + P^2); metaplectic H^2 + 3m/8 1; su11 sector
// 2 K0^2 + (1-n^2)/4 1.
EnergyOperator nelson_closed_form(const RepPtr& rep);

// Smaller certified operators where known: spin j^2 1, displacement 2H.
// Throws NotApplicable for representations without one.
EnergyOperator improved_k(const RepPtr& rep);

struct RescaledBounds {
  EnergyOperator delta_prime;
  double c = 1.0;
  double C = 1.0;
  // worst eigenvalue violations of Delta - c Delta' >= 0 and
  // C Delta' - Delta >= 0 (restricted to the sub-cutoff block for
  // truncated representations)
  double violation_lower = 0.0;
  double violation_upper = 0.0;
};

// Nelson Laplacian of the diagonally rescaled inner product
// <X,Y>' = sum_j w_j x_j y_j, with the sandwich constants c = min w,
// C = max w verified eigenvalue-wise.
RescaledBounds rescaled_laplacian_bounds(const RepPtr& rep, const RVec& weights);

double energy_expectation(const EnergyOperator& op, const Vec& psi);

// Columns of the identity restricted to the sub-cutoff block used for
// truncated-representation comparisons (all states for exact reps).
std::vector<Eigen::Index> sub_cutoff_indices(const Representation& rep,
                                             int max_total = -1);

}  // namespace liebound
