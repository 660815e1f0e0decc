#pragma once

#include <vector>

#include "mubeam/csi.hpp"

namespace mubeam {

struct UtilityConfig {
  Utility kind = Utility::SR;
  double p_circuit = 0.5;  // W, used by EE only; must be > 0 there

  static UtilityConfig for_task(const TaskSpec& t) { return {t.util, t.p_circuit}; }
};

// R_k = log2(1 + |h_k^H w_k|^2 / (sum_{i != k} |h_k^H w_i|^2 + sigma_k^2)).
double rate(const CsiSample& sample, const BeamMatrix& w, int k);

std::vector<double> rates(const CsiSample& sample, const BeamMatrix& w);

// SR = sum_k R_k, MR = min_k R_k, EE = SR / (sum_k ||w_k||^2 + P_C).
double system_utility(const CsiSample& sample, const BeamMatrix& w, const UtilityConfig& cfg);

// 100 * mean(nn_utils) / mean(cvx_utils).
double performance_ratio(const std::vector<double>& nn_utils,
                         const std::vector<double>& cvx_utils);

// Power adapter behavior. `cap` rescales to power exactly p_max whenever the
// raw Frobenius norm exceeds 1; `sqrt_scale` keeps the sqrt(p/||W||_F) factor
// of that branch for A/B measurement (it can exceed the budget and is never
// used in training).
enum class GpaRule { cap, sqrt_scale };

// ||W||_F^2 <= 1: sqrt(p)*W;  otherwise sqrt(p)*W/||W||_F (rule `cap`).
BeamMatrix gpa(const CMat& w_raw, double p_max, GpaRule rule = GpaRule::cap);

}  // namespace mubeam
