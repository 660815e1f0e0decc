#pragma once

#include <cstdint>
#include <vector>

#include "mubeam/csi.hpp"

namespace mubeam {

// Rayleigh CSI: every h[k][j] ~ CN(0,1), re/im independent N(0, 1/2).
// Sample i draws from the sub-stream derive_stream(seed, i), so output is
// independent of generation order and thread count.
std::vector<CsiSample> generate_rayleigh(uint64_t seed, const TaskSpec& task, int count,
                                         double noise_power = 0.1, int threads = 1);

// Replaces h_k by h_k + e_k with an isotropic complex Gaussian direction
// rescaled so that ||e_k||^2 = 10^(mu_db/10) * ||h_k||^2 exactly.
// mu_db = -inf is the "no error" sentinel. Labels are dropped.
CsiSample inject_csi_error(const CsiSample& sample, double mu_db, uint64_t seed);

}  // namespace mubeam
