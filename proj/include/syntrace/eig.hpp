#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "syntrace/matrix.hpp"

namespace syntrace {

// Shrunken symmetric positive-definite matrix. `eps` is the shrinkage added
// at construction; the smallest eigenvalue is >= eps by construction when the
// base covariance is PSD.
template <class T>
struct Spd {
  Mat<T> m;
  T eps = T(0);

  int dim() const { return m.rows; }
};

using SpdF = Spd<float>;
using SpdD = Spd<double>;

template <class T>
struct SymEig {
  std::vector<T> values;  // descending
  Mat<T> vectors;         // orthonormal columns, aligned with values
};

namespace detail {

template <class T>
void check_symmetric(const Mat<T>& S, const char* who) {
  if (S.rows != S.cols) raise(Err::NotSymmetric, std::string(who) + ": matrix not square");
  const double scale = std::max(1.0, frob_norm(S));
  if (max_sym_violation(S) > 1e-6 * scale)
    raise(Err::NotSymmetric, std::string(who) + ": matrix not symmetric within 1e-6");
}

template <class T>
double offdiag_norm2(const Mat<T>& A) {
  double acc = 0.0;
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (i != j) acc += static_cast<double>(A(i, j)) * A(i, j);
  return acc;
}

}  // namespace detail

// Cyclic Jacobi for symmetric matrices (dims <= 256 here). Eigenvalues come
// back descending with matching orthonormal eigenvector columns.
template <class T>
SymEig<T> sym_eig(const Mat<T>& S, int max_sweeps = 64) {
  detail::check_symmetric(S, "sym_eig");
  const int n = S.rows;
  Mat<T> A = S;
  Mat<T> V = Mat<T>::identity(n);

  const double norm = frob_norm(A);
  const double tol = std::max(norm, 1.0) * n * std::numeric_limits<T>::epsilon();

  bool converged = (n <= 1) || detail::offdiag_norm2(A) <= tol * tol;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) <= std::numeric_limits<T>::min()) continue;
        const double app = A(p, p);
        const double aqq = A(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = static_cast<T>(c * akp - s * akq);
          A(k, q) = static_cast<T>(s * akp + c * akq);
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k);
          const double aqk = A(q, k);
          A(p, k) = static_cast<T>(c * apk - s * aqk);
          A(q, k) = static_cast<T>(s * apk + c * aqk);
        }
        // Pin the rotated 2x2 block; rounding would otherwise leave residue.
        A(p, q) = T(0);
        A(q, p) = T(0);
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p);
          const double vkq = V(k, q);
          V(k, p) = static_cast<T>(c * vkp - s * vkq);
          V(k, q) = static_cast<T>(s * vkp + c * vkq);
        }
      }
    }
    converged = detail::offdiag_norm2(A) <= tol * tol;
  }
  if (!converged) raise(Err::NoConvergence, "sym_eig: Jacobi did not converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return A(i, i) > A(j, j); });

  SymEig<T> out;
  out.values.resize(n);
  out.vectors = Mat<T>(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = A(order[j], order[j]);
    for (int i = 0; i < n; ++i) out.vectors(i, j) = V(i, order[j]);
  }
  return out;
}

namespace detail {

template <class T, class Fn>
Mat<T> sym_apply(const SymEig<T>& e, Fn&& f) {
  const int n = e.vectors.rows;
  Mat<T> out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += f(static_cast<double>(e.values[k])) * e.vectors(i, k) * e.vectors(j, k);
      out(i, j) = static_cast<T>(acc);
      out(j, i) = static_cast<T>(acc);
    }
  }
  return out;
}

}  // namespace detail

// Matrix logarithm of an SPD matrix: U log(Lambda) U^T.
template <class T>
Mat<T> spd_log(const Spd<T>& C) {
  const SymEig<T> e = sym_eig(C.m);
  if (e.values.back() <= T(0)) raise(Err::NotSpd, "spd_log: nonpositive eigenvalue");
  return detail::sym_apply(e, [](double x) { return std::log(x); });
}

// Matrix exponential of a symmetric matrix (round-trip checks).
template <class T>
Mat<T> spd_exp(const Mat<T>& S) {
  const SymEig<T> e = sym_eig(S);
  return detail::sym_apply(e, [](double x) { return std::exp(x); });
}

// Adjoint of spd_log at C applied to a symmetric cotangent G:
//   C = U Lambda U^T, adjoint = U (F o (U^T G U)) U^T,
//   F_ij = (log l_i - log l_j)/(l_i - l_j), F_ii = 1/l_i,
// with the F_ij -> 1/l_i limit for near-degenerate pairs.
template <class T>
Mat<T> spd_log_vjp(const Spd<T>& C, const Mat<T>& G) {
  detail::check_symmetric(G, "spd_log_vjp");
  if (G.rows != C.dim()) raise(Err::ShapeMismatch, "spd_log_vjp: dim mismatch");
  const SymEig<T> e = sym_eig(C.m);
  if (e.values.back() <= T(0)) raise(Err::NotSpd, "spd_log_vjp: nonpositive eigenvalue");

  const int n = C.dim();
  const double lmax = e.values.front();
  Mat<T> inner = matmul_tn(e.vectors, matmul(G, e.vectors));  // U^T G U
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double li = e.values[i];
      const double lj = e.values[j];
      double f;
      if (std::abs(li - lj) < 1e-8 * lmax) {
        f = 1.0 / li;
      } else {
        f = (std::log(li) - std::log(lj)) / (li - lj);
      }
      inner(i, j) = static_cast<T>(inner(i, j) * f);
    }
  }
  Mat<T> out = matmul(e.vectors, matmul_nt(inner, e.vectors));
  // symmetrize against rounding
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const T v = static_cast<T>(0.5 * (out(i, j) + out(j, i)));
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

}  // namespace syntrace
