#pragma once

#include <Eigen/Dense>

#include "glt/regression.hpp"
#include "glt/rng.hpp"

namespace glt {

/// Simulation environment: n observations, p predictors, q unit signals, common
/// column correlation rho and signal-to-noise ratio snr.
struct SimEnv {
  int n = 100;
  int p = 500;
  int q = 5;
  double rho = 0.0;
  double snr = 5.0;

  void validate() const;
};

struct SimResult {
  RegressionData data;
  Eigen::VectorXd truth;  // q leading ones, then zeros
  double sigma0 = 0.0;
  Eigen::VectorXd noise;  // the standard-normal eps used for y
};

/// n x p rows from N(0, rho J + (1 - rho) I) through one shared normal per row.
Eigen::MatrixXd draw_equicorrelated_design(int n, int p, double rho, Rng& rng);

/// Centres each column and scales it to unit Euclidean norm. Throws DataError on a
/// constant column.
void standardize_columns(Eigen::MatrixXd& X);

/// Draws a dataset: design (resampled if a column comes out constant), centred and
/// unit-norm columns, y = X beta0 + sigma0 eps with
/// sigma0^2 = var(X beta0) / (snr var(eps)).
SimResult simulate(const SimEnv& env, Rng& rng);

/// z_j = Phi^{-1}(F_df(t_j)), clamped to |z| <= 40.
Eigen::VectorXd quantile_transform(const Eigen::VectorXd& t, double df = 100.0);

/// K(i, j) = exp(-(x_i - x_j)^2 / (2 h^2)).
Eigen::MatrixXd gaussian_kernel_design(const Eigen::VectorXd& x, double bandwidth = 1.0);

}  // namespace glt
