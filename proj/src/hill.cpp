#include "glt/hill.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "glt/error.hpp"

namespace glt {

HillWindow HillWindow::default_for(int p) {
  const int lo = std::max(2, p / 10);
  const int hi = std::max(lo, (9 * p) / 10);
  return {lo, hi};
}

void HillWindow::validate(int p) const {
  if (!(2 <= k_lo && k_lo <= k_hi && k_hi <= p)) throw DomainError("HillWindow: need 2 <= k_lo <= k_hi <= p");
}

std::vector<double> hill_estimates(const std::vector<double>& lambdas) {
  const std::size_t p = lambdas.size();
  if (p < 2) throw DomainError("hill_estimates: need at least two values");
  std::vector<double> logs(p);
  for (std::size_t i = 0; i < p; ++i) {
    if (!(lambdas[i] > 0.0) || !std::isfinite(lambdas[i])) {
      throw DomainError("hill_estimates: values must be positive and finite");
    }
    logs[i] = std::log(lambdas[i]);
  }
  std::stable_sort(logs.begin(), logs.end(), std::greater<double>());
  std::vector<double> out(p - 1);
  double prefix = logs[0];  // sum of the k-1 largest logs
  for (std::size_t k = 2; k <= p; ++k) {
    const double km1 = static_cast<double>(k - 1);
    out[k - 2] = std::max(0.0, prefix / km1 - logs[k - 1]);
    prefix += logs[k - 1];
  }
  return out;
}

double calibrated_mu(const std::vector<double>& lambdas, const HillWindow& window) {
  const int p = static_cast<int>(lambdas.size());
  window.validate(p);
  const std::vector<double> est = hill_estimates(lambdas);
  double sum = 0.0;
  for (int k = window.k_lo; k <= window.k_hi; ++k) sum += est[k - 2];
  const double mean = sum / (window.k_hi - window.k_lo + 1);
  return std::log(std::max(mean, kHillFloor));
}

double calibrated_mu(const std::vector<double>& lambdas) {
  if (lambdas.size() < 2) throw DomainError("calibrated_mu: need at least two values");
  return calibrated_mu(lambdas, HillWindow::default_for(static_cast<int>(lambdas.size())));
}

}  // namespace glt
