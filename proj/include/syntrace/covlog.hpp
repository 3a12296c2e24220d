#pragma once

#include <cmath>
#include <vector>

#include "syntrace/eig.hpp"
#include "syntrace/matrix.hpp"

namespace syntrace {

// Low-rank spectral factorization of a shrunken token covariance
//   C = (1/(L-1)) X^T X + eps I,   X = row-centered map vectors (L x dim).
// The sample part has rank <= L-1 << dim, so the spectrum is r "signal"
// eigenpairs (mu_k + eps, u_k) plus the eigenvalue eps on the orthogonal
// complement. The signal pairs come from the L x L Gram matrix, which makes
// log / log-adjoint evaluations cheap enough for the training inner loop.
// The dense-Jacobi route in eig.hpp stays as the reference implementation;
// tests and the benchmark compare the two.
template <class T>
struct CovFactor {
  int dim = 0;
  int count = 0;  // L
  T eps = T(0);
  Mat<T> x_centered;        // L x dim
  Mat<T> basis;             // dim x r, orthonormal columns
  std::vector<T> lam;       // r signal eigenvalues of C (mu_k + eps), descending
  std::vector<T> log_gain;  // log(lam_k) - log(eps)
};

template <class T>
CovFactor<T> cov_factor_from_rows(const Mat<T>& rows, T eps) {
  if (rows.rows < 2) raise(Err::PromptTooShort, "cov_factor: need at least 2 rows");
  if (eps <= T(0)) raise(Err::BadArgument, "cov_factor: eps must be positive");
  const int L = rows.rows;
  const int dim = rows.cols;

  CovFactor<T> f;
  f.dim = dim;
  f.count = L;
  f.eps = eps;
  f.x_centered = Mat<T>(L, dim);
  for (int j = 0; j < dim; ++j) {
    double mean = 0.0;
    for (int i = 0; i < L; ++i) mean += rows(i, j);
    mean /= L;
    for (int i = 0; i < L; ++i) f.x_centered(i, j) = static_cast<T>(rows(i, j) - mean);
  }

  Mat<T> gram = matmul_nt(f.x_centered, f.x_centered);  // L x L
  const double inv = 1.0 / (L - 1);
  for (auto& v : gram.a) v = static_cast<T>(v * inv);

  const SymEig<T> e = sym_eig(gram);
  const double mu_max = std::max(static_cast<double>(e.values.front()), 0.0);
  const double tol = mu_max * 16 * std::numeric_limits<T>::epsilon();

  int r = 0;
  while (r < L && static_cast<double>(e.values[r]) > tol) ++r;

  f.basis = Mat<T>(dim, r);
  f.lam.resize(r);
  f.log_gain.resize(r);
  for (int k = 0; k < r; ++k) {
    const double mu = e.values[k];
    f.lam[k] = static_cast<T>(mu + eps);
    f.log_gain[k] = static_cast<T>(std::log(mu + eps) - std::log(static_cast<double>(eps)));
    const double scale = 1.0 / std::sqrt(mu * (L - 1));
    for (int j = 0; j < dim; ++j) {
      double acc = 0.0;
      for (int i = 0; i < L; ++i) acc += static_cast<double>(f.x_centered(i, j)) * e.vectors(i, k);
      f.basis(j, k) = static_cast<T>(acc * scale);
    }
  }
  return f;
}

template <class T>
Spd<T> dense_cov(const CovFactor<T>& f) {
  Spd<T> out;
  out.eps = f.eps;
  out.m = Mat<T>(f.dim, f.dim);
  const int r = static_cast<int>(f.lam.size());
  for (int i = 0; i < f.dim; ++i) {
    for (int j = i; j < f.dim; ++j) {
      double acc = (i == j) ? static_cast<double>(f.eps) : 0.0;
      for (int k = 0; k < r; ++k)
        acc += (static_cast<double>(f.lam[k]) - f.eps) * f.basis(i, k) * f.basis(j, k);
      out.m(i, j) = static_cast<T>(acc);
      out.m(j, i) = static_cast<T>(acc);
    }
  }
  return out;
}

// log C = log(eps) I + B diag(log_gain) B^T
template <class T>
Mat<T> dense_log(const CovFactor<T>& f) {
  const double log_eps = std::log(static_cast<double>(f.eps));
  Mat<T> out(f.dim, f.dim);
  const int r = static_cast<int>(f.lam.size());
  for (int i = 0; i < f.dim; ++i) {
    for (int j = i; j < f.dim; ++j) {
      double acc = (i == j) ? log_eps : 0.0;
      for (int k = 0; k < r; ++k)
        acc += static_cast<double>(f.log_gain[k]) * f.basis(i, k) * f.basis(j, k);
      out(i, j) = static_cast<T>(acc);
      out(j, i) = static_cast<T>(acc);
    }
  }
  return out;
}

namespace detail {

inline double log_divided_difference(double li, double lj, double lmax) {
  if (std::abs(li - lj) < 1e-8 * lmax) return 1.0 / li;
  return (std::log(li) - std::log(lj)) / (li - lj);
}

}  // namespace detail

// Adjoint of C -> log C at the factored point, applied to symmetric G.
// Uses the block structure of the spectrum: with V the signal basis, Q the
// complement projector and f_i the divided difference between lam_i and eps,
//   adj = V (F o V^T G V) V^T
//       + sum_i f_i (v_i (Q G v_i)^T + (Q G v_i) v_i^T)
//       + (1/eps) Q G Q.
template <class T>
Mat<T> log_vjp_factor(const CovFactor<T>& f, const Mat<T>& G) {
  if (G.rows != f.dim || G.cols != f.dim) raise(Err::ShapeMismatch, "log_vjp_factor: dim mismatch");
  const int n = f.dim;
  const int r = static_cast<int>(f.lam.size());
  const double eps = f.eps;
  const double inv_eps = 1.0 / eps;

  if (r == 0) {
    Mat<T> out = G;
    for (auto& v : out.a) v = static_cast<T>(v * inv_eps);
    return out;
  }

  const double lmax = std::max(static_cast<double>(f.lam[0]), eps);

  Mat<T> gv = matmul(G, f.basis);              // n x r
  Mat<T> svv = matmul_tn(f.basis, gv);         // r x r
  Mat<T> qgv = gv;                             // becomes Q G v_k
  Mat<T> b_svv = matmul(f.basis, svv);         // n x r, = V S_VV
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k) qgv(i, k) -= b_svv(i, k);

  Mat<T> out(n, n);
  // (1/eps) Q G Q = (1/eps) (G - V(GV)^T' - (GV)V^T + V S_VV V^T)
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double acc = G(i, j);
      for (int k = 0; k < r; ++k) {
        acc -= f.basis(i, k) * static_cast<double>(gv(j, k));
        acc -= static_cast<double>(gv(i, k)) * f.basis(j, k);
        acc += f.basis(i, k) * static_cast<double>(b_svv(j, k));
      }
      acc *= inv_eps;
      out(i, j) = static_cast<T>(acc);
    }
  }
  // V (F o S_VV) V^T
  Mat<T> fs(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      fs(a, b) = static_cast<T>(
          svv(a, b) * detail::log_divided_difference(f.lam[a], f.lam[b], lmax));
  Mat<T> vfs = matmul(f.basis, fs);  // n x r
  std::vector<double> fmix(r);
  for (int k = 0; k < r; ++k) fmix[k] = detail::log_divided_difference(f.lam[k], eps, lmax);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double acc = out(i, j);
      for (int k = 0; k < r; ++k) {
        acc += static_cast<double>(vfs(i, k)) * f.basis(j, k);
        acc += fmix[k] * (f.basis(i, k) * static_cast<double>(qgv(j, k)) +
                          static_cast<double>(qgv(i, k)) * f.basis(j, k));
      }
      out(i, j) = static_cast<T>(acc);
      out(j, i) = static_cast<T>(acc);
    }
  }
  return out;
}

}  // namespace syntrace
