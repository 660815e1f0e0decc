#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mubeam/cmat.hpp"

namespace mubeam {

// Task ordering is fixed (EE, SR, MR) and carried through checkpoints and
// dataset label blocks; do not reorder.
enum class Utility : int { EE = 0, SR = 1, MR = 2 };

inline constexpr int kNumUtilities = 3;

inline const char* utility_name(Utility u) {
  switch (u) {
    case Utility::EE: return "EE";
    case Utility::SR: return "SR";
    case Utility::MR: return "MR";
  }
  return "?";
}

inline Utility utility_from_name(const std::string& s) {
  if (s == "EE" || s == "ee") return Utility::EE;
  if (s == "SR" || s == "sr") return Utility::SR;
  if (s == "MR" || s == "mr") return Utility::MR;
  throw std::invalid_argument("unknown utility: " + s);
}

// A beamforming task: objective plus system scale and power figures.
struct TaskSpec {
  Utility util = Utility::SR;
  int k_users = 1;
  int n_antennas = 1;
  double p_max = 1.0;      // W
  double p_circuit = 0.5;  // W, enters EE only
};

// One channel realization with optional per-utility beamforming labels.
struct CsiSample {
  uint64_t id = 0;
  int k_users = 0;
  int n_antennas = 0;
  CMat h;                            // K x N_T, row k = channel of user k
  std::vector<double> noise_power;   // sigma_k^2, length K
  double p_max = 1.0;
  std::array<std::optional<BeamMatrix>, kNumUtilities> labels;

  bool has_label(Utility u) const { return labels[static_cast<int>(u)].has_value(); }
  const BeamMatrix& label(Utility u) const {
    const auto& l = labels[static_cast<int>(u)];
    if (!l) throw std::runtime_error("sample " + std::to_string(id) + " lacks " +
                                     utility_name(u) + " label");
    return *l;
  }

  void validate() const;
  // Power-checks the label before storing it (budget violation is a data error).
  void set_label(Utility u, BeamMatrix w);
};

struct DatasetManifest {
  uint64_t seed = 0;
  std::string generator_version;
  std::string split;  // "train", "val", "test" or "all"
  uint64_t records = 0;
  uint64_t count_train = 0, count_val = 0, count_test = 0;
  double ratio_train = 0.8, ratio_val = 0.1, ratio_test = 0.1;
  TaskSpec task;
  double noise_power = 0.1;
  std::optional<double> error_level_db;
  // Solver version per utility, set when labels are attached.
  std::array<std::string, kNumUtilities> solver_version;

  void validate() const;
};

inline void CsiSample::validate() const {
  if (k_users < 1 || n_antennas < 1)
    throw std::invalid_argument("sample dims must be >= 1");
  if (h.rows != k_users || h.cols != n_antennas)
    throw std::invalid_argument("channel matrix shape mismatch");
  if (!h.all_finite()) throw std::invalid_argument("channel has non-finite entries");
  if (static_cast<int>(noise_power.size()) != k_users)
    throw std::invalid_argument("noise vector length mismatch");
  for (double s : noise_power)
    if (!(s > 0.0)) throw std::invalid_argument("noise power must be > 0");
  if (!(p_max > 0.0)) throw std::invalid_argument("p_max must be > 0");
  for (const auto& l : labels) {
    if (!l) continue;
    if (l->rows != k_users || l->cols != n_antennas)
      throw std::invalid_argument("label shape mismatch");
    if (beam_power(*l) > p_max + 1e-9)
      throw std::invalid_argument("label violates power budget");
  }
}

inline void CsiSample::set_label(Utility u, BeamMatrix w) {
  if (w.rows != k_users || w.cols != n_antennas)
    throw std::invalid_argument("label shape mismatch");
  if (!w.all_finite()) throw std::invalid_argument("label has non-finite entries");
  if (beam_power(w) > p_max + 1e-9)
    throw std::invalid_argument("label violates power budget by more than 1e-9");
  labels[static_cast<int>(u)] = std::move(w);
}

inline void DatasetManifest::validate() const {
  const double s = ratio_train + ratio_val + ratio_test;
  if (std::abs(s - 1.0) > 1e-9)
    throw std::invalid_argument("split ratio must sum to 1");
}

}  // namespace mubeam
