#include "bidepo/hadamard_tools.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace bidepo;

namespace {

CMatrix random_separable(int dA, int dB, Rng& rng) {
  CMatrix s = CMatrix::Zero(dA * dB, dA * dB);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double total = 0.0;
  for (int k = 0; k < 5; ++k) {
    const double w = u(rng);
    s += w * oracle::kron(random_density(dA, rng), random_density(dB, rng));
    total += w;
  }
  return s / total;
}

// Projector identity written out on A A' B B' without the library permutation.
CMatrix compressed_by_hand(const CMatrix& rho, const CMatrix& sigma, int dA, int dB) {
  CMatrix out(dA * dB, dA * dB);
  for (int a = 0; a < dA; ++a)
    for (int b = 0; b < dB; ++b)
      for (int a2 = 0; a2 < dA; ++a2)
        for (int b2 = 0; b2 < dB; ++b2) {
          const int x = a * dB + b, y = a2 * dB + b2;
          out(x, y) = rho(x, y) * sigma(x, y);
        }
  return out;
}

}  // namespace

TEST(LoccHadamard, DiagonalStates) {
  CMatrix rho = CMatrix::Zero(4, 4), sigma = CMatrix::Zero(4, 4);
  rho.diagonal() << 0.1, 0.2, 0.3, 0.4;
  sigma.diagonal() << 0.4, 0.3, 0.2, 0.1;
  const LoccHadamard h = locc_hadamard(rho, sigma, Dims(2, 2));
  CMatrix expected = CMatrix::Zero(4, 4);
  expected.diagonal() << 0.04, 0.06, 0.06, 0.04;
  EXPECT_LE(max_abs(h.compressed - expected), 1e-15);
  EXPECT_NEAR(h.probability, 0.2, 1e-15);
}

TEST(LoccHadamard, RandomStates) {
  Rng rng(1);
  for (const Dims dims : {Dims(2, 2), Dims(2, 3), Dims(3, 2)}) {
    for (int t = 0; t < 20; ++t) {
      const CMatrix rho = random_density(dims.total(), rng);
      const CMatrix sigma = random_density(dims.total(), rng);
      const LoccHadamard h = locc_hadamard(rho, sigma, dims);
      EXPECT_LE(max_abs(h.compressed - compressed_by_hand(rho, sigma, dims.dA, dims.dB)), 1e-12);
      // Stochastic implementation: success probability at most one.
      EXPECT_LE(h.probability, 1.0 + 1e-12);
      EXPECT_GE(h.probability, 0.0);
      EXPECT_NEAR(h.projected.trace().real(), h.probability, 1e-12);
      // The projected operator is supported on |ii>|jj> only.
      EXPECT_NEAR(h.projected.cwiseAbs().sum(), h.compressed.cwiseAbs().sum(), 1e-12);
    }
  }
  EXPECT_THROW(locc_hadamard(CMatrix::Identity(4, 4), CMatrix::Identity(6, 6), Dims(2, 2)),
               DimensionError);
}

TEST(LoccHadamard, SeparableInputsGivePptOutput) {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const int dB = 2 + t % 2;
    const CMatrix rho = random_separable(2, dB, rng);
    const CMatrix sigma = random_separable(2, dB, rng);
    const CMatrix h = locc_hadamard(rho, sigma, Dims(2, dB)).compressed;
    EXPECT_GE(oracle::min_eig(oracle::ptranspose_second(h, 2, dB)), -1e-12);
  }
}

TEST(SchurProduct, PreservesPositivity) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + t % 11;
    const CMatrix a = random_density(d, rng), b = random_density(d, rng);
    EXPECT_GE(oracle::min_eig(a.cwiseProduct(b)), -1e-10);
  }
}

TEST(CocpHadamard, SquareOfTraceMinusIdentity) {
  for (int d = 2; d <= 4; ++d) {
    const SuperOp m = choi_of(trace_plus_identity(1.0, -1.0, d), d);
    const SuperOp sq = cocp_hadamard_product(m, m);
    const SuperOp chi = choi_of([&](const CMatrix& x) { return chi_apply({-2.0, 1.0, d}, x); }, d);
    EXPECT_LE(max_abs(sq.choi - chi.choi), 1e-14) << d;
    // 1 Tr - I is coCP, so its square is too.
    EXPECT_GE(oracle::min_eig(oracle::ptranspose_second(sq.choi, d, d)), -1e-12);
  }
}

TEST(CocpHadamard, IdentityAndDiagonalProjection) {
  for (int d = 2; d <= 4; ++d) {
    const LinearMap id = [](const CMatrix& x) { return x; };
    const SuperOp ci = choi_of(id, d);
    EXPECT_LE(max_abs(choi_hadamard_product(ci, ci).choi - ci.choi), 1e-15);

    const SuperOp ct = choi_of(trace_plus_identity(1.0, 0.0, d), d);
    const SuperOp diag = choi_hadamard_product(ct, ci);
    Rng rng(d);
    const CMatrix x = random_density(d, rng);
    const CMatrix expected = x.diagonal().asDiagonal();
    EXPECT_LE(max_abs(apply_via_choi(diag, x) - expected), 1e-14);
  }
}

TEST(CocpHadamard, RandomCocpPairs) {
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    const int d = 2 + t % 3;
    const SuperOp a{oracle::ptranspose_second(random_density(d * d, rng), d, d), d};
    const SuperOp b{oracle::ptranspose_second(random_density(d * d, rng), d, d), d};
    const SuperOp c = cocp_hadamard_product(a, b);
    EXPECT_GE(oracle::min_eig(oracle::ptranspose_second(c.choi, d, d)), -1e-10);
  }
  EXPECT_THROW(cocp_hadamard_product(SuperOp{CMatrix::Identity(4, 4), 2},
                                     SuperOp{CMatrix::Identity(9, 9), 3}),
               DimensionError);
}

TEST(CocpHadamard, ActsAsSchurProductOfImagesOnMatrixUnits) {
  // (phi1 o phi2)(E_ij) = phi1(E_ij) o phi2(E_ij).
  Rng rng(5);
  const int d = 3;
  const SuperOp a{random_density(d * d, rng), d}, b{random_density(d * d, rng), d};
  const SuperOp c = choi_hadamard_product(a, b);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      CMatrix e = CMatrix::Zero(d, d);
      e(i, j) = 1.0;
      EXPECT_LE(max_abs(apply_via_choi(c, e) -
                        apply_via_choi(a, e).cwiseProduct(apply_via_choi(b, e))),
                1e-14);
    }
}

TEST(SchmidtRank, Examples) {
  EXPECT_EQ(schmidt_rank(oracle::kron(oracle::basis(3, 0), oracle::basis(3, 2)), 3, 3), 1);
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(schmidt_rank(oracle::eps(n), n, n), n);
  EXPECT_EQ(schmidt_rank(oracle::kron(oracle::eps(2), oracle::basis(2, 1)), 2, 4), 2);
  EXPECT_EQ(schmidt_rank(CVector::Zero(4), 2, 2), 0);
  EXPECT_THROW(schmidt_rank(CVector::Zero(5), 2, 2), DimensionError);
}

TEST(SchmidtRank, HadamardBound) {
  Rng rng(6);
  std::uniform_int_distribution<int> dim(2, 5);
  for (int t = 0; t < 200; ++t) {
    const int n = dim(rng);
    // Random ranks: mix a few product vectors.
    auto low_rank = [&](int r) {
      CVector v = CVector::Zero(n * n);
      for (int k = 0; k < r; ++k) v += oracle::kron(random_pure(n, rng), random_pure(n, rng));
      return CVector(v.normalized());
    };
    const int r = 1 + t % n, s = 1 + (t / n) % n;
    const CVector psi = low_rank(r), phi = low_rank(s);
    const int rp = schmidt_rank(psi, n, n), rf = schmidt_rank(phi, n, n);
    EXPECT_EQ(rp, r);
    EXPECT_EQ(rf, s);
    EXPECT_LE(schmidt_rank(hadamard(psi, phi), n, n), rp * rf);
  }
  EXPECT_THROW(hadamard(CVector::Zero(2), CVector::Zero(3)), DimensionError);
}

TEST(Vandermonde, Examples) {
  const struct {
    VandermondeSpec spec;
    int r, s, h;
  } cases[] = {{{6, 2, 3, 12}, 2, 3, 6},
               {{4, 1, 1, 0}, 1, 1, 1},
               {{4, 2, 2, 8}, 2, 2, 4},
               {{6, 2, 3, 0}, 2, 3, 6},
               {{5, 3, 3, 0}, 3, 3, 5},
               {{5, 2, 2, 0}, 2, 2, 4}};
  for (const auto& c : cases) {
    const VandermondePair v = vandermonde_states(c.spec);
    const int n = c.spec.n;
    EXPECT_NEAR(v.psi.norm(), 1.0, 1e-14);
    EXPECT_NEAR(v.phi.norm(), 1.0, 1e-14);
    EXPECT_EQ(schmidt_rank(v.psi, n, n), c.r);
    EXPECT_EQ(schmidt_rank(v.phi, n, n), c.s);
    EXPECT_EQ(schmidt_rank(hadamard(v.psi, v.phi), n, n), c.h);
  }
}

TEST(Vandermonde, MatchesDefinition) {
  const VandermondeSpec spec{4, 2, 2, 8};
  const VandermondePair v = vandermonde_states(spec);
  const double pi = std::acos(-1.0);
  const Complex w = std::polar(1.0, 2 * pi / 8);
  CVector psi = CVector::Zero(16);
  for (int i = 0; i < 2; ++i) {
    CVector a(4);
    for (int l = 0; l < 4; ++l) a(l) = std::pow(w, i * l);
    psi += oracle::kron(a, CVector(a.conjugate()));
  }
  psi.normalize();
  EXPECT_LE((v.psi - psi).norm(), 1e-13);
}

TEST(Vandermonde, InvalidSpecs) {
  EXPECT_THROW(vandermonde_states({4, 0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(vandermonde_states({4, 5, 1, 0}), std::invalid_argument);
  EXPECT_THROW(vandermonde_states({4, 2, 3, 5}), std::invalid_argument);
  EXPECT_EQ((VandermondeSpec{4, 2, 3, 0}).order(), 6);
  EXPECT_EQ((VandermondeSpec{6, 1, 2, 0}).order(), 6);
}

TEST(GeometricSlack, NonNegative) {
  Rng rng(7);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> len(1, 8);
  double worst = 1e300;
  for (int t = 0; t < 100000; ++t) {
    Complex z[8];
    const int n = len(rng);
    for (int i = 0; i < n; ++i) z[i] = Complex(g(rng), g(rng));
    worst = std::min(worst, geometric_slack(std::span<const Complex>(z, n)));
  }
  EXPECT_GE(worst, -1e-12);
  // Equality for one entry and for opposite pairs.
  const Complex one[1] = {Complex(0.3, -2.0)};
  EXPECT_NEAR(geometric_slack(one), 0.0, 1e-14);
  const Complex pair[2] = {Complex(1.0, 1.0), Complex(-1.0, -1.0)};
  EXPECT_NEAR(geometric_slack(pair), 0.0, 1e-14);
  const Complex three[3] = {1.0, 2.0, 0.5};
  EXPECT_NEAR(geometric_slack(three), 7.0, 1e-12);
}
