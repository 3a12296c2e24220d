#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "syntrace/error.hpp"

namespace syntrace {

// Dense row-major matrix. Instantiated with float in the production path
// (32-bit storage) and with double for gradient-check shadows; reductions
// accumulate in double either way.
template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}

  T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  T operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  T* row(int i) { return a.data() + static_cast<size_t>(i) * cols; }
  const T* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }
  size_t size() const { return a.size(); }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

using MatF = Mat<float>;
using MatD = Mat<double>;

template <class T>
double dot(const T* x, const T* y, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += static_cast<double>(x[i]) * static_cast<double>(y[i]);
  return acc;
}

// C = A * B
template <class T>
Mat<T> matmul(const Mat<T>& A, const Mat<T>& B) {
  if (A.cols != B.rows) raise(Err::ShapeMismatch, "matmul: inner dims differ");
  Mat<T> C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int k = 0; k < A.cols; ++k) {
      const double aik = A(i, k);
      const T* brow = B.row(k);
      T* crow = C.row(i);
      for (int j = 0; j < B.cols; ++j) crow[j] += static_cast<T>(aik * brow[j]);
    }
  }
  return C;
}

// C = A^T * B
template <class T>
Mat<T> matmul_tn(const Mat<T>& A, const Mat<T>& B) {
  if (A.rows != B.rows) raise(Err::ShapeMismatch, "matmul_tn: row counts differ");
  Mat<T> C(A.cols, B.cols);
  for (int k = 0; k < A.rows; ++k) {
    const T* arow = A.row(k);
    const T* brow = B.row(k);
    for (int i = 0; i < A.cols; ++i) {
      const double aki = arow[i];
      T* crow = C.row(i);
      for (int j = 0; j < B.cols; ++j) crow[j] += static_cast<T>(aki * brow[j]);
    }
  }
  return C;
}

// C = A * B^T
template <class T>
Mat<T> matmul_nt(const Mat<T>& A, const Mat<T>& B) {
  if (A.cols != B.cols) raise(Err::ShapeMismatch, "matmul_nt: col counts differ");
  Mat<T> C(A.rows, B.rows);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < B.rows; ++j) {
      C(i, j) = static_cast<T>(dot(A.row(i), B.row(j), A.cols));
    }
  }
  return C;
}

template <class T>
Mat<T> transpose(const Mat<T>& A) {
  Mat<T> B(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) B(j, i) = A(i, j);
  return B;
}

// X += alpha * Y
template <class T>
void axpy(Mat<T>& X, double alpha, const Mat<T>& Y) {
  if (!X.same_shape(Y)) raise(Err::ShapeMismatch, "axpy: shape mismatch");
  for (size_t i = 0; i < X.a.size(); ++i) X.a[i] += static_cast<T>(alpha * Y.a[i]);
}

template <class T>
double frob_norm2(const Mat<T>& A) {
  double acc = 0.0;
  for (T v : A.a) acc += static_cast<double>(v) * v;
  return acc;
}

template <class T>
double frob_norm(const Mat<T>& A) {
  return std::sqrt(frob_norm2(A));
}

template <class T>
double frob_dist2(const Mat<T>& A, const Mat<T>& B) {
  if (!A.same_shape(B)) raise(Err::ShapeMismatch, "frob_dist2: shape mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < A.a.size(); ++i) {
    const double d = static_cast<double>(A.a[i]) - B.a[i];
    acc += d * d;
  }
  return acc;
}

template <class T>
bool all_finite(const Mat<T>& A) {
  for (T v : A.a)
    if (!std::isfinite(static_cast<double>(v))) return false;
  return true;
}

template <class T>
double max_sym_violation(const Mat<T>& A) {
  double worst = 0.0;
  for (int i = 0; i < A.rows; ++i)
    for (int j = i + 1; j < A.cols; ++j)
      worst = std::max(worst, std::abs(static_cast<double>(A(i, j)) - A(j, i)));
  return worst;
}

}  // namespace syntrace
