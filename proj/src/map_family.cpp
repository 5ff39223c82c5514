#include "bidepo/map_family.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bidepo {

namespace {

void check_square(const CMatrix& x, Eigen::Index size, const char* what) {
  if (x.rows() != size || x.cols() != size) {
    throw DimensionError(std::string(what) + ": expected a " +
                         std::to_string(size) + "x" + std::to_string(size) +
                         " operator, got " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()));
  }
}

bool near(double x, double target) { return std::abs(x - target) <= 1e-15; }

}  // namespace

CMatrix phi_apply(const PhiCoefficients& c, Dims dims, const CMatrix& x) {
  const int dA = dims.dA;
  const int dB = dims.dB;
  check_square(x, dims.total(), "phi_apply");
  const Complex tr = x.trace();
  const CMatrix red_b = partial_trace(x, dA, dB, Side::second);  // Tr_A X
  const CMatrix red_a = partial_trace(x, dA, dB, Side::first);   // Tr_B X

  CMatrix out = c.gamma * x;
  for (int a = 0; a < dA; ++a) {
    for (int b = 0; b < dB; ++b) {
      for (int b2 = 0; b2 < dB; ++b2) out(a * dB + b, a * dB + b2) += c.alpha * red_b(b, b2);
    }
  }
  for (int a = 0; a < dA; ++a) {
    for (int a2 = 0; a2 < dA; ++a2) {
      for (int b = 0; b < dB; ++b) out(a * dB + b, a2 * dB + b) += c.beta * red_a(a, a2);
    }
  }
  out.diagonal().array() += c.trace * tr;
  return out;
}

CMatrix phi_apply(const PhiParams& p, const CMatrix& x) {
  return phi_apply(PhiCoefficients::from(p), p.dims, x);
}

LinearMap phi_map(const PhiParams& p) {
  return [p](const CMatrix& x) { return phi_apply(p, x); };
}

CMatrix chi_apply(const ChiParams& p, const CMatrix& x) {
  check_square(x, p.n, "chi_apply");
  CMatrix out = p.c * x;
  out.diagonal() += p.a * x.diagonal();
  out.diagonal().array() += x.trace();
  return out;
}

SuperOp phi_choi(const PhiCoefficients& c, Dims dims) {
  const int dA = dims.dA;
  const int dB = dims.dB;
  const int d = dims.total();
  const double norm = 1.0 / d;
  // Row index (x, x') = x * d + x' with x = a * dB + b on AB.
  auto idx = [&](int a, int b, int a2, int b2) {
    return Eigen::Index(a * dB + b) * d + (a2 * dB + b2);
  };
  CMatrix r = CMatrix::Zero(Eigen::Index(d) * d, Eigen::Index(d) * d);
  r.diagonal().setConstant(c.trace * norm);
  // alpha 1_AA'/dA (x) |e><e|_BB'
  for (int a = 0; a < dA; ++a)
    for (int a2 = 0; a2 < dA; ++a2)
      for (int b = 0; b < dB; ++b)
        for (int e = 0; e < dB; ++e) r(idx(a, b, a2, b), idx(a, e, a2, e)) += c.alpha * norm;
  // beta |e><e|_AA' (x) 1_BB'/dB
  for (int a = 0; a < dA; ++a)
    for (int e = 0; e < dA; ++e)
      for (int b = 0; b < dB; ++b)
        for (int b2 = 0; b2 < dB; ++b2) r(idx(a, b, a, b2), idx(e, b, e, b2)) += c.beta * norm;
  // gamma |e><e|_AA' (x) |e><e|_BB'
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) r(Eigen::Index(x) * d + x, Eigen::Index(y) * d + y) += c.gamma * norm;
  return SuperOp{std::move(r), d};
}

SuperOp phi_choi(const PhiParams& p) {
  return phi_choi(PhiCoefficients::from(p), p.dims);
}

std::array<double, 4> phi_choi_distinct_eigenvalues(const PhiCoefficients& c,
                                                    Dims dims) {
  const double base = c.trace / dims.total();
  const double a = c.alpha / dims.dA;
  const double b = c.beta / dims.dB;
  return {base, base + a, base + b, base + a + b + c.gamma};
}

RVector phi_choi_spectrum(const PhiParams& p) {
  const auto ev = phi_choi_distinct_eigenvalues(PhiCoefficients::from(p), p.dims);
  const int a2 = p.dims.dA * p.dims.dA;
  const int b2 = p.dims.dB * p.dims.dB;
  const int mult[4] = {(a2 - 1) * (b2 - 1), a2 - 1, b2 - 1, 1};
  std::vector<double> all;
  all.reserve(std::size_t(a2) * b2);
  for (int k = 0; k < 4; ++k) all.insert(all.end(), mult[k], ev[k]);
  std::sort(all.begin(), all.end());
  return Eigen::Map<RVector>(all.data(), Eigen::Index(all.size()));
}

ComposeResult compose_local(const PhiParams& p, Side side, double u, double v) {
  ComposeResult out;
  out.params.dims = p.dims;
  if (side == Side::second) {
    const double dB = p.dims.dB;
    out.raw = {u * dB + v + u * p.alpha, v * p.alpha, (u * dB + v) * p.beta + u * p.gamma,
               v * p.gamma};
  } else {
    const double dA = p.dims.dA;
    out.raw = {u * dA + v + u * p.beta, (u * dA + v) * p.alpha + u * p.gamma, v * p.beta,
               v * p.gamma};
  }
  out.scale = out.raw.trace;
  if (std::abs(out.scale) <= 1e-12) {
    out.degenerate = true;
    return out;
  }
  out.params.alpha = out.raw.alpha / out.scale;
  out.params.beta = out.raw.beta / out.scale;
  out.params.gamma = out.raw.gamma / out.scale;
  return out;
}

LinearMap trace_plus_identity(double u, double v, int d) {
  return [u, v, d](const CMatrix& x) {
    check_square(x, d, "trace_plus_identity");
    CMatrix out = v * x;
    out.diagonal().array() += u * x.trace();
    return out;
  };
}

LinearMap depolarizing_map(DepolParams p) {
  return trace_plus_identity((1.0 - p.lambda) / p.d, p.lambda, p.d);
}

SuperOp depolarizing_choi(DepolParams p) {
  return choi_of(depolarizing_map(p), p.d);
}

LocalProductForm local_product_as_phi(double q1, double q2, int d) {
  LocalProductForm out;
  out.params.dims = Dims(d, d);
  if (near(q1, 0.0) || near(q1, 1.0) || near(q2, 0.0) || near(q2, 1.0)) {
    out.degenerate = true;
    return out;
  }
  // Coefficient of 1 Tr in the expanded product.
  out.scale = (1.0 - q1) * (1.0 - q2) / (double(d) * d);
  out.params.alpha = d * q2 / (1.0 - q2);
  out.params.beta = d * q1 / (1.0 - q1);
  out.params.gamma = double(d) * d * q1 * q2 / ((1.0 - q1) * (1.0 - q2));
  return out;
}

LinearMap local_product_map(double q1, double q2, int d) {
  const LinearMap first = depolarizing_map({q1, d});
  const LinearMap second = depolarizing_map({q2, d});
  return [=](const CMatrix& x) {
    return apply_on_factor(second, apply_on_factor(first, x, d, d, Side::first), d, d,
                           Side::second);
  };
}

CMatrix HadamardChannel::operator()(const CMatrix& x) const {
  if (x.rows() != multiplier.rows() || x.cols() != multiplier.cols()) {
    throw DimensionError("Hadamard channel shape mismatch");
  }
  return multiplier.cwiseProduct(x);
}

HadamardChannel hadamard_channel(CMatrix a) {
  if (a.rows() != a.cols()) throw DimensionError("Hadamard multiplier must be square");
  HadamardChannel ch;
  ch.completely_positive = is_hermitian(a, 1e-10) && min_eigenvalue(a) >= -1e-10;
  ch.multiplier = std::move(a);
  return ch;
}

CMatrix apply_on_factor(const LinearMap& map, const CMatrix& m, int d1, int d2,
                        Side side) {
  if (m.rows() != m.cols() || m.rows() != Eigen::Index(d1) * d2) {
    throw DimensionError("apply_on_factor: operator does not act on d1 x d2");
  }
  CMatrix out(m.rows(), m.cols());
  if (side == Side::first) {
    CMatrix block(d1, d1);
    for (int k = 0; k < d2; ++k) {
      for (int l = 0; l < d2; ++l) {
        for (int i = 0; i < d1; ++i)
          for (int j = 0; j < d1; ++j) block(i, j) = m(i * d2 + k, j * d2 + l);
        const CMatrix mapped = map(block);
        for (int i = 0; i < d1; ++i)
          for (int j = 0; j < d1; ++j) out(i * d2 + k, j * d2 + l) = mapped(i, j);
      }
    }
  } else {
    for (int i = 0; i < d1; ++i) {
      for (int j = 0; j < d1; ++j) {
        out.block(i * d2, j * d2, d2, d2) = map(m.block(i * d2, j * d2, d2, d2));
      }
    }
  }
  return out;
}

SuperOp choi_of(const LinearMap& map, int dim) {
  CMatrix r = CMatrix::Zero(Eigen::Index(dim) * dim, Eigen::Index(dim) * dim);
  CMatrix unit = CMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      unit(i, j) = 1.0;
      const CMatrix image = map(unit);
      unit(i, j) = 0.0;
      for (int o = 0; o < dim; ++o)
        for (int o2 = 0; o2 < dim; ++o2) r(Eigen::Index(o) * dim + i, Eigen::Index(o2) * dim + j) = image(o, o2) / double(dim);
    }
  }
  return SuperOp{std::move(r), dim};
}

CMatrix apply_via_choi(const SuperOp& op, const CMatrix& x) {
  const int d = op.dim;
  check_square(x, d, "apply_via_choi");
  // phi(X)_{o o'} = d sum_{ij} R_{(o,i),(o',j)} X_{ij}
  CMatrix out = CMatrix::Zero(d, d);
  for (int o = 0; o < d; ++o)
    for (int o2 = 0; o2 < d; ++o2)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out(o, o2) += op.choi(Eigen::Index(o) * d + i, Eigen::Index(o2) * d + j) * x(i, j);
  return double(d) * out;
}

}  // namespace bidepo
