#include "bidepo/special_states.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bidepo {

CVector max_entangled(int d) {
  CVector v = CVector::Zero(Eigen::Index(d) * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0;
  return v / std::sqrt(double(d));
}

CVector tilde_entangled(int dA, int dB) {
  if (dA > dB) throw DimensionError("tilde_entangled requires dA <= dB");
  CVector v = CVector::Zero(Eigen::Index(dA) * dB);
  for (int i = 0; i < dA; ++i) v(i * dB + i) = 1.0;
  return v / std::sqrt(double(dA));
}

namespace {

constexpr std::array<int, 4> kSwapMiddle{0, 2, 1, 3};

CMatrix eps_projector(int d) { return projector(max_entangled(d)); }

}  // namespace

CVector doubled_entangled(Dims dims) {
  const CVector aabb = kron(max_entangled(dims.dA), max_entangled(dims.dB));
  const std::array<int, 4> d{dims.dA, dims.dA, dims.dB, dims.dB};
  return permute_subsystems(aabb, d, kSwapMiddle);
}

CMatrix aabb_to_abab(const CMatrix& m, Dims dims) {
  const std::array<int, 4> d{dims.dA, dims.dA, dims.dB, dims.dB};
  return permute_subsystems(m, d, kSwapMiddle);
}

CMatrix abab_to_aabb(const CMatrix& m, Dims dims) {
  const std::array<int, 4> d{dims.dA, dims.dB, dims.dA, dims.dB};
  return permute_subsystems(m, d, kSwapMiddle);
}

CMatrix isotropic_twirl(int d, const CMatrix& x) {
  const Eigen::Index size = Eigen::Index(d) * d;
  if (x.rows() != size || x.cols() != size) {
    throw DimensionError("isotropic_twirl: operator is not on d x d");
  }
  const CVector e = max_entangled(d);
  const CMatrix pe = projector(e);
  const Complex fid = e.dot(x * e);  // <e|X|e>
  const Complex rest = x.trace() - fid;
  CMatrix out = fid * pe;
  CMatrix comp = -pe;
  comp.diagonal().array() += 1.0;
  out += rest / double(size - 1) * comp;
  return out;
}

PptEntangledState ppt_entangled_state(int dA, int dB, bool unit_trace) {
  const Dims dims(dA, dB);
  if (dA > dB) throw DimensionError("ppt_entangled_state requires dA <= dB");
  const CMatrix ea = eps_projector(dA);
  const CMatrix eb = eps_projector(dB);
  const CMatrix ia = CMatrix::Identity(dA * dA, dA * dA);
  const CMatrix ib = CMatrix::Identity(dB * dB, dB * dB);
  const double coeff = double(dA) * dB - dB + dA;
  CMatrix aabb = kron(ia, ib) - kron(ia, eb) - kron(ea, ib) + coeff * kron(ea, eb);
  PptEntangledState out{aabb_to_abab(aabb, dims), dims, dA < dB};
  if (unit_trace) out.state /= out.state.trace().real();
  return out;
}

CMatrix flag_plus_eps(int n) {
  if (n < 2) throw DimensionError("flag_plus_eps needs n >= 2");
  const Eigen::Index size = Eigen::Index(n) * n;
  CMatrix m = CMatrix::Identity(size, size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m(i * n + i, j * n + j) = 1.0;
  return m;
}

std::string to_string(PieceKind kind) {
  switch (kind) {
    case PieceKind::twirl_of_product: return "twirl_of_product";
    case PieceKind::product_state: return "product_state";
    case PieceKind::hadamard_flag_image: return "hadamard_flag_image";
  }
  return "unknown";
}

CMatrix SeparableCertificate::reconstruct() const {
  CMatrix sum = CMatrix::Zero(target.rows(), target.cols());
  for (const auto& p : pieces) sum += p.weight * p.op;
  return sum;
}

bool SeparableCertificate::valid(double tol) const {
  return residual <= tol && min_psd_margin >= -tol && weights_nonnegative;
}

void finalize(SeparableCertificate& cert) {
  cert.residual = max_abs(cert.reconstruct() - cert.target);
  cert.min_psd_margin = std::numeric_limits<double>::infinity();
  cert.weights_nonnegative = true;
  for (const auto& p : cert.pieces) {
    if (p.weight < -1e-12) cert.weights_nonnegative = false;
    for (const auto& f : p.psd_factors) {
      cert.min_psd_margin = std::min(cert.min_psd_margin, min_eigenvalue(f));
    }
  }
}

PhiParams eb_vertex(int vertex_id, Dims dims) {
  const double dA = dims.dA, dB = dims.dB;
  switch (vertex_id) {
    case 1: return {-1.0 / dB, -1.0 / dB, 1.0, dims};
    case 2: return {1.0, -1.0 / dA, -1.0 / dA, dims};
    case 3: return {-1.0 / dB, 1.0, -1.0 / dB, dims};
    case 4: return {-1.0 / dB, -1.0 / dA, 1.0 / (dA * dB), dims};
    case 5: return {1.0, 1.0, 1.0, dims};
    default: throw std::invalid_argument("EB vertex id must be in 1..5");
  }
}

namespace {

// (P_AA' (x) P_BB')(sigma_AB (x) tau_A'B') in A B A' B' ordering.
CMatrix twirl_product(const CMatrix& sigma, const CMatrix& tau, Dims dims) {
  const int a2 = dims.dA * dims.dA;
  const int b2 = dims.dB * dims.dB;
  CMatrix m = abab_to_aabb(kron(sigma, tau), dims);
  m = apply_on_factor([&](const CMatrix& x) { return isotropic_twirl(dims.dA, x); }, m,
                      a2, b2, Side::first);
  m = apply_on_factor([&](const CMatrix& x) { return isotropic_twirl(dims.dB, x); }, m,
                      a2, b2, Side::second);
  return aabb_to_abab(m, dims);
}

CVector basis_vector(int d, int k) {
  CVector v = CVector::Zero(d);
  v(k) = 1.0;
  return v;
}

// Choi matrix of 1 Tr + s I on a d-dimensional system is (d + s) times the
// twirl of |x>|y> with |<e|xy>|^2 = (1/d + s)/(d + s); s = 1 gives
// x = y = |0>, s = -1/d gives x = |0>, y = |1>.
struct LocalFactor {
  double weight;
  CVector out;  // lands in the AB copy
  CVector ref;  // lands in the A'B' copy
};

LocalFactor local_factor(double s, int d) {
  const bool same = s > 0.0;
  return {d + s, basis_vector(d, 0), basis_vector(d, same ? 0 : 1)};
}

}  // namespace

SeparableCertificate vertex_certificate(int vertex_id, Dims dims) {
  if (dims.dA > dims.dB) throw DimensionError("vertex certificates assume dA <= dB");
  const PhiParams v = eb_vertex(vertex_id, dims);
  SeparableCertificate cert;
  cert.label = "eb_vertex_" + std::to_string(vertex_id);
  cert.target = phi_choi(v).choi;

  CertificatePiece piece;
  piece.kind = PieceKind::twirl_of_product;
  piece.cited = true;
  piece.note =
      "twirl is a mixture of (U_A (x) V_B) (x) (U*_A' (x) V*_B') conjugations, "
      "local across AB|A'B'";
  if (vertex_id == 1) {
    const double dA = dims.dA, dB = dims.dB;
    const CMatrix t = projector(tilde_entangled(dims.dA, dims.dB));
    piece.weight = dA * (dB * dB - 1.0) / dB;
    piece.op = twirl_product(t, t, dims);
    piece.psd_factors = {t, t};
  } else {
    // Product of local maps: beta is the A-side coefficient, alpha the B-side.
    const LocalFactor fa = local_factor(v.beta, dims.dA);
    const LocalFactor fb = local_factor(v.alpha, dims.dB);
    const CMatrix sigma = projector(kron(fa.out, fb.out));
    const CMatrix tau = projector(kron(fa.ref, fb.ref));
    piece.weight = fa.weight * fb.weight;
    piece.op = twirl_product(sigma, tau, dims);
    piece.psd_factors = {sigma, tau};
  }
  cert.pieces.push_back(std::move(piece));
  finalize(cert);
  return cert;
}

EaDecomposition ea_decomposition(const CVector& psi, int n) {
  const SchmidtDecomposition sd = schmidt(psi, n, n);
  const Eigen::Index size = Eigen::Index(n) * n;

  EaDecomposition out;
  out.lambda = sd.weights;

  const CMatrix pp = projector(psi);
  const CMatrix rho_a = partial_trace(pp, n, n, Side::first);
  const CMatrix rho_b = partial_trace(pp, n, n, Side::second);
  const CMatrix id_n = CMatrix::Identity(n, n);
  SeparableCertificate& cert = out.certificate;
  cert.label = "ea_decomposition";
  cert.target = 2.0 * CMatrix::Identity(size, size) - 2.0 * kron(id_n, rho_b) -
                kron(rho_a, id_n) + pp;

  CVector root(n);
  for (int i = 0; i < n; ++i) root(i) = std::sqrt(std::max(0.0, out.lambda(i)));
  out.multiplier = id_n + projector(root);
  out.multiplier.diagonal() -= 2.0 * out.lambda.cast<Complex>();
  out.multiplier_min_eigenvalue = min_eigenvalue(out.multiplier);

  const HadamardChannel zeta = hadamard_channel(out.multiplier);
  const CMatrix local = kron(sd.basis_first, sd.basis_second);
  const CMatrix image =
      apply_on_factor([&](const CMatrix& x) { return zeta(x); }, flag_plus_eps(n), n, n,
                      Side::second);

  CertificatePiece main;
  main.kind = PieceKind::hadamard_flag_image;
  main.weight = 1.0;
  main.op = local * image * local.adjoint();
  main.psd_factors = {out.multiplier};
  main.cited = true;
  main.note = "F + n|e><e| is separable; zeta_A is a local CP map; U (x) V is local";
  cert.pieces.push_back(std::move(main));

  out.remainder.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double c = 1.0 - out.lambda(i) - out.lambda(j) + (i == j ? out.lambda(i) : 0.0);
      out.remainder(i, j) = c;
      CertificatePiece prod;
      prod.kind = PieceKind::product_state;
      prod.weight = c;
      prod.op = projector(kron(CVector(sd.basis_first.col(i)), CVector(sd.basis_second.col(j))));
      cert.pieces.push_back(std::move(prod));
    }
  }
  finalize(cert);
  return out;
}

}  // namespace bidepo
