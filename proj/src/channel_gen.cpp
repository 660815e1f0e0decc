#include "mubeam/channel_gen.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mubeam/parallel.hpp"
#include "mubeam/rng.hpp"

namespace mubeam {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;

void fill_sample(CsiSample& s, uint64_t seed, const TaskSpec& task, double noise_power,
                 uint64_t id) {
  CounterRng rng(derive_stream(seed, id));
  s.id = id;
  s.k_users = task.k_users;
  s.n_antennas = task.n_antennas;
  s.h = CMat(task.k_users, task.n_antennas);
  for (cplx& v : s.h.a) {
    auto [re, im] = rng.next_gaussian_pair();
    v = cplx(re * kInvSqrt2, im * kInvSqrt2);
  }
  s.noise_power.assign(task.k_users, noise_power);
  s.p_max = task.p_max;
}
}  // namespace

std::vector<CsiSample> generate_rayleigh(uint64_t seed, const TaskSpec& task, int count,
                                         double noise_power, int threads) {
  if (count < 1) throw std::invalid_argument("generate_rayleigh: count must be >= 1");
  if (task.k_users < 1 || task.n_antennas < 1)
    throw std::invalid_argument("generate_rayleigh: task dims must be >= 1");
  if (!(noise_power > 0.0))
    throw std::invalid_argument("generate_rayleigh: noise power must be > 0");
  if (!(task.p_max > 0.0))
    throw std::invalid_argument("generate_rayleigh: p_max must be > 0");

  std::vector<CsiSample> out(count);
  parallel_for(count, threads, [&](int i) {
    fill_sample(out[i], seed, task, noise_power, static_cast<uint64_t>(i));
  });
  return out;
}

CsiSample inject_csi_error(const CsiSample& sample, double mu_db, uint64_t seed) {
  if (std::isnan(mu_db) || mu_db == std::numeric_limits<double>::infinity())
    throw std::invalid_argument("inject_csi_error: mu_db must be finite or -inf");
  if (mu_db == -std::numeric_limits<double>::infinity()) return sample;

  const double mu = std::pow(10.0, mu_db / 10.0);
  CounterRng rng(derive_stream(seed, sample.id));
  CsiSample out = sample;
  out.labels = {};  // perturbed channels invalidate stored labels
  for (int k = 0; k < sample.k_users; ++k) {
    std::vector<cplx> dir(sample.n_antennas);
    double norm_sq = 0.0;
    for (cplx& v : dir) {
      auto [re, im] = rng.next_gaussian_pair();
      v = cplx(re, im);
      norm_sq += std::norm(v);
    }
    const double target = mu * row_norm_sq(sample.h, k);
    const double scale = norm_sq > 0.0 ? std::sqrt(target / norm_sq) : 0.0;
    for (int j = 0; j < sample.n_antennas; ++j) out.h(k, j) += dir[j] * scale;
  }
  return out;
}

}  // namespace mubeam
