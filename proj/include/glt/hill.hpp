#pragma once

#include <vector>

namespace glt {

/// Inclusive range of upper order statistics [k_lo, k_hi] averaged by calibrated_mu.
struct HillWindow {
  int k_lo;
  int k_hi;

  /// (max(2, floor(p/10)), floor(9p/10)), with k_hi clamped to at least k_lo.
  static HillWindow default_for(int p);
  /// Throws DomainError unless 2 <= k_lo <= k_hi <= p.
  void validate(int p) const;
};

/// Hill estimates xi_k = (1/(k-1)) sum_{j<k} log(lambda_(j) / lambda_(k)) for
/// k = 2..p (descending order statistics). Element i of the result is k = i + 2.
/// One sort plus prefix sums: O(p log p).
std::vector<double> hill_estimates(const std::vector<double>& lambdas);

/// Floor applied to the window average before taking logs.
inline constexpr double kHillFloor = 1e-8;

/// log of the window-averaged Hill estimate, floored at log(1e-8).
double calibrated_mu(const std::vector<double>& lambdas, const HillWindow& window);
double calibrated_mu(const std::vector<double>& lambdas);

}  // namespace glt
