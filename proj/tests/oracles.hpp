#pragma once

// Independent reference implementations for tests: plain loops over explicit
// index formulas, no shared code with the library beyond the matrix type.

#include "bidepo/tensor_core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace oracle {

using bidepo::CMatrix;
using bidepo::Complex;
using bidepo::CVector;
using bidepo::RVector;

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index k = 0; k < b.size(); ++k) out(i * b.size() + k) = a(i) * b(k);
  return out;
}

inline CVector basis(int d, int k) {
  CVector v = CVector::Zero(d);
  v(k) = 1.0;
  return v;
}

inline CVector eps(int d) {
  CVector v = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(double(d));
  return v;
}

inline CMatrix proj(const CVector& v) { return v * v.adjoint(); }

// <i k| M^{T_2} |j l> = <i l| M |j k>
inline CMatrix ptranspose_second(const CMatrix& m, int d1, int d2) {
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d2; ++k)
      for (int j = 0; j < d1; ++j)
        for (int l = 0; l < d2; ++l) out(i * d2 + k, j * d2 + l) = m(i * d2 + l, j * d2 + k);
  return out;
}

inline CMatrix ptranspose_first(const CMatrix& m, int d1, int d2) {
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d2; ++k)
      for (int j = 0; j < d1; ++j)
        for (int l = 0; l < d2; ++l) out(i * d2 + k, j * d2 + l) = m(j * d2 + k, i * d2 + l);
  return out;
}

// Tr_2
inline CMatrix trace_second(const CMatrix& m, int d1, int d2) {
  CMatrix out = CMatrix::Zero(d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
  return out;
}

// Tr_1
inline CMatrix trace_first(const CMatrix& m, int d1, int d2) {
  CMatrix out = CMatrix::Zero(d2, d2);
  for (int k = 0; k < d2; ++k)
    for (int l = 0; l < d2; ++l)
      for (int i = 0; i < d1; ++i) out(k, l) += m(i * d2 + k, i * d2 + l);
  return out;
}

// Four tensor factors: output factor k is input factor perm[k].
inline CMatrix permute4(const CMatrix& m, std::array<int, 4> dims, std::array<int, 4> perm) {
  std::array<int, 4> od{};
  for (int k = 0; k < 4; ++k) od[k] = dims[perm[k]];
  auto in_index = [&](std::array<int, 4> digits_out) {
    std::array<int, 4> digits_in{};
    for (int k = 0; k < 4; ++k) digits_in[perm[k]] = digits_out[k];
    int idx = 0;
    for (int k = 0; k < 4; ++k) idx = idx * dims[k] + digits_in[k];
    return idx;
  };
  auto digits = [&](int idx) {
    std::array<int, 4> d{};
    for (int k = 3; k >= 0; --k) {
      d[k] = idx % od[k];
      idx /= od[k];
    }
    return d;
  };
  CMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      out(r, c) = m(in_index(digits(int(r))), in_index(digits(int(c))));
  return out;
}

/// Eigenvalues from the general (non-Hermitian) complex solver, real parts, ascending.
inline RVector general_spectrum(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  std::vector<double> v;
  for (Eigen::Index i = 0; i < m.rows(); ++i) v.push_back(es.eigenvalues()(i).real());
  std::sort(v.begin(), v.end());
  return Eigen::Map<RVector>(v.data(), Eigen::Index(v.size()));
}

inline double min_eig(const CMatrix& m) { return general_spectrum(m)(0); }

/// 1 Tr X + alpha 1_A (x) Tr_A X + beta Tr_B X (x) 1_B + gamma X.
inline CMatrix phi(double a, double b, double g, int dA, int dB, const CMatrix& x) {
  const CMatrix ia = CMatrix::Identity(dA, dA), ib = CMatrix::Identity(dB, dB);
  CMatrix out = x.trace() * CMatrix::Identity(dA * dB, dA * dB);
  out += a * kron(ia, trace_first(x, dA, dB));
  out += b * kron(trace_second(x, dA, dB), ib);
  out += g * x;
  return out;
}

/// R = (Phi (x) I)(|E><E|), built block by block from |E> in A B A' B' order.
inline CMatrix choi_by_action(double a, double b, double g, int dA, int dB) {
  const int d = dA * dB;
  const CVector e = kron(eps(dA), eps(dB));  // A A' B B'
  const CMatrix ee = permute4(proj(e), {dA, dA, dB, dB}, {0, 2, 1, 3});
  CMatrix out(d * d, d * d);
  // Block (x', y') over the primed index acts on the unprimed operator.
  for (int xp = 0; xp < d; ++xp)
    for (int yp = 0; yp < d; ++yp) {
      CMatrix block(d, d);
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) block(x, y) = ee(x * d + xp, y * d + yp);
      const CMatrix img = phi(a, b, g, dA, dB, block);
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) out(x * d + xp, y * d + yp) = img(x, y);
    }
  return out;
}

}  // namespace oracle
