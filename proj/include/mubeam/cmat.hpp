#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mubeam {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Beamforming matrices are K x N_T with
// row k holding user k's beamformer.
struct CMat {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> a;

  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  cplx& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const cplx& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool same_shape(const CMat& o) const { return rows == o.rows && cols == o.cols; }

  bool all_finite() const {
    for (const cplx& v : a)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }
};

using BeamMatrix = CMat;

inline double fro_norm_sq(const CMat& m) {
  double s = 0.0;
  for (const cplx& v : m.a) s += std::norm(v);
  return s;
}

// Total transmit power of a beamforming matrix: sum_k ||w_k||^2.
inline double beam_power(const BeamMatrix& w) { return fro_norm_sq(w); }

inline double row_norm_sq(const CMat& m, int r) {
  double s = 0.0;
  for (int c = 0; c < m.cols; ++c) s += std::norm(m(r, c));
  return s;
}

// <row r of a, row s of b> with the conjugate on a: sum_j conj(a[r,j]) * b[s,j].
inline cplx row_inner(const CMat& a, int r, const CMat& b, int s) {
  if (a.cols != b.cols) throw std::invalid_argument("row_inner: width mismatch");
  cplx acc = 0.0;
  for (int c = 0; c < a.cols; ++c) acc += std::conj(a(r, c)) * b(s, c);
  return acc;
}

inline bool approx_equal(const CMat& a, const CMat& b, double tol) {
  if (!a.same_shape(b)) return false;
  for (size_t i = 0; i < a.a.size(); ++i)
    if (std::abs(a.a[i] - b.a[i]) > tol) return false;
  return true;
}

}  // namespace mubeam
