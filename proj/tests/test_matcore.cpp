#include <cmath>

#include <gtest/gtest.h>

#include "isoclinic/matcore.hpp"
#include "isoclinic/subspaces.hpp"

using namespace isoclinic;
using namespace isoclinic::matcore;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix d = ComplexMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                                        static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (double v : values) d(k, k) = v, ++k;
  return d;
}

double projection_defect(const ComplexMatrix& p) {
  return (p * p - p).norm() + (p - p.adjoint()).norm();
}

}  // namespace

TEST(Svd, IdentityAndDiagonal) {
  const auto id = svd(ComplexMatrix::Identity(2, 2));
  EXPECT_NEAR(id.singular(0), 1.0, 1e-15);
  EXPECT_NEAR(id.singular(1), 1.0, 1e-15);

  const auto d = svd(diag({3.0, 0.0}));
  EXPECT_NEAR(d.singular(0), 3.0, 1e-15);
  EXPECT_NEAR(d.singular(1), 0.0, 1e-15);
}

TEST(Svd, ReconstructsRandomMatrices) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Eigen::Index rows = 1 + static_cast<Eigen::Index>(seed % 16);
    const Eigen::Index cols = 1 + static_cast<Eigen::Index>((seed * 7) % 16);
    const ComplexMatrix a = subspaces::random_gaussian(rows, cols, seed);
    const auto f = svd(a);
    const ComplexMatrix back = f.left * f.singular.cast<Complex>().asDiagonal() * f.right.adjoint();
    EXPECT_LE((a - back).norm(), 1e-12 * std::max(1.0, a.norm())) << rows << "x" << cols;
    for (Eigen::Index k = 1; k < f.singular.size(); ++k) {
      EXPECT_GE(f.singular(k - 1), f.singular(k));
    }
    const auto l = f.singular.size();
    EXPECT_LE((f.left.adjoint() * f.left - ComplexMatrix::Identity(l, l)).norm(), 1e-12);
    EXPECT_LE((f.right.adjoint() * f.right - ComplexMatrix::Identity(l, l)).norm(), 1e-12);
  }
}

TEST(Svd, RejectsEmpty) { EXPECT_THROW(svd(ComplexMatrix(0, 3)), DomainError); }

TEST(HermitianEig, KnownSpectra) {
  const auto d = hermitian_eig(diag({1.0, 0.0}));
  EXPECT_DOUBLE_EQ(d.values(0), 1.0);
  EXPECT_DOUBLE_EQ(d.values(1), 0.0);

  const auto x = hermitian_eig(pauli_x());
  EXPECT_NEAR(x.values(0), 1.0, 1e-15);
  EXPECT_NEAR(x.values(1), -1.0, 1e-15);
}

TEST(HermitianEig, ReconstructsRandomHermitian) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ComplexMatrix g = subspaces::random_gaussian(3, 3, seed);
    const ComplexMatrix h = g + g.adjoint();
    const auto e = hermitian_eig(h);
    const ComplexMatrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LE((h - back).norm(), 1e-12 * std::max(1.0, h.norm()));
    EXPECT_GE(e.values(0), e.values(1));
    EXPECT_GE(e.values(1), e.values(2));
  }
}

TEST(HermitianEig, RejectsNonHermitian) {
  ComplexMatrix a(2, 2);
  a << 0.0, 1.0, 0.0, 0.0;
  EXPECT_THROW(hermitian_eig(a), DomainError);
  EXPECT_THROW(hermitian_eig(ComplexMatrix::Zero(2, 3)), DomainError);
}

TEST(Polar, ExamplesFromDefinition) {
  const Tolerance tol;
  EXPECT_LE((polar_partial_isometry(2.0 * ComplexMatrix::Identity(2, 2), tol) -
             ComplexMatrix::Identity(2, 2))
                .norm(),
            1e-14);
  EXPECT_EQ(polar_partial_isometry(ComplexMatrix::Zero(2, 2), tol).norm(), 0.0);
  // sqrt(p) X has |a| = sqrt(p) I, so U = X.
  EXPECT_LE((polar_partial_isometry(std::sqrt(0.3) * pauli_x(), tol) - pauli_x()).norm(), 1e-14);
}

TEST(Polar, PartialIsometryProperties) {
  const Tolerance tol;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    // Rank-deficient square matrices: product of n x r and r x n factors.
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(seed % 6);
    const Eigen::Index r = 1 + static_cast<Eigen::Index>(seed % static_cast<std::uint64_t>(n));
    const ComplexMatrix a =
        subspaces::random_gaussian(n, r, seed) * subspaces::random_gaussian(r, n, seed + 1000);
    const ComplexMatrix u = polar_partial_isometry(a, tol);
    EXPECT_LE((a - u * (u.adjoint() * a)).norm(), 1e-10 * a.norm());
    EXPECT_LE(projection_defect(u.adjoint() * u), 1e-10);
    EXPECT_LE(projection_defect(u * u.adjoint()), 1e-10);
    // |a| = U* a is positive semidefinite.
    const ComplexMatrix abs_a = u.adjoint() * a;
    EXPECT_GE(hermitian_eig(abs_a, Tolerance(1e-9, true)).values.minCoeff(), -1e-10);
    EXPECT_NEAR((u.adjoint() * u).trace().real(), static_cast<double>(r), 1e-9);
  }
}

TEST(ScalarMultiple, Examples) {
  const Tolerance tol;
  ComplexMatrix p = diag({1.0, 1.0, 0.0, 0.0});
  auto alpha = is_scalar_multiple_of(0.7 * p, p, 2, tol);
  ASSERT_TRUE(alpha.has_value());
  EXPECT_NEAR(alpha->real(), 0.7, 1e-15);
  EXPECT_NEAR(alpha->imag(), 0.0, 1e-15);

  EXPECT_FALSE(is_scalar_multiple_of(diag({1.0, 0.0}), ComplexMatrix::Identity(2, 2), 2, tol));

  // P X_2 P on span{|00>, |01>} swaps the two code vectors.
  const ComplexMatrix x2 = kron(ComplexMatrix::Identity(2, 2), pauli_x());
  EXPECT_FALSE(is_scalar_multiple_of(p * x2 * p, p, 2, tol));

  EXPECT_THROW(is_scalar_multiple_of(p, ComplexMatrix::Zero(4, 4), 0, tol), DomainError);
  EXPECT_THROW(is_scalar_multiple_of(ComplexMatrix::Zero(3, 3), p, 2, tol), DomainError);
}

TEST(ScalarMultiple, StableUnderHalfTolerancePerturbation) {
  const Tolerance tol(1e-6);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Subspace s = subspaces::random_subspace(5, 1 + static_cast<Eigen::Index>(seed % 4), seed);
    const ComplexMatrix p = s.basis() * s.basis().adjoint();
    const std::size_t rank = static_cast<std::size_t>(s.dim());
    const Complex alpha0(0.3 + 0.01 * static_cast<double>(seed), -0.2);
    const auto alpha = is_scalar_multiple_of(alpha0 * p, p, rank, tol);
    ASSERT_TRUE(alpha.has_value());

    ComplexMatrix delta = subspaces::random_gaussian(5, 5, seed + 77);
    delta *= 0.5 * tol.abs_eps / delta.norm();
    const auto perturbed = is_scalar_multiple_of(alpha0 * p + delta, p, rank, tol);
    ASSERT_TRUE(perturbed.has_value()) << "seed " << seed;
    EXPECT_LE(std::abs(*perturbed - *alpha), tol.abs_eps);
  }
}

TEST(QrOrthonormalize, KeepsColumnOrderAndDetectsRank) {
  const Tolerance tol;
  ComplexMatrix a(4, 2);
  a << 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, -1.0;
  const ComplexMatrix q = qr_orthonormalize(a, tol);
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix expected(4, 2);
  expected << h, 0.0, 0.0, h, h, 0.0, 0.0, -h;
  EXPECT_LE((q - expected).norm(), 1e-15);

  ComplexMatrix deficient(3, 3);
  deficient << 1.0, 2.0, 0.0, 1.0, 2.0, 0.0, 0.0, 0.0, 1.0;
  const ComplexMatrix qd = qr_orthonormalize(deficient, tol);
  ASSERT_EQ(qd.cols(), 2);
  // Spans the column space: projecting the input leaves it unchanged.
  EXPECT_LE((qd * (qd.adjoint() * deficient) - deficient).norm(), 1e-12);
  EXPECT_EQ(numerical_rank(deficient, tol), 2u);
}

TEST(Plumbing, KronTraceAndHpdSolve) {
  const ComplexMatrix x1 = kron(pauli_x(), ComplexMatrix::Identity(2, 2));
  // X_1 |00> = |10>
  EXPECT_EQ(x1(2, 0), Complex(1.0, 0.0));
  EXPECT_EQ(x1.col(0).norm(), 1.0);
  EXPECT_EQ(trace(x1), Complex(0.0, 0.0));
  EXPECT_THROW(trace(ComplexMatrix::Zero(2, 3)), DomainError);

  const ComplexMatrix g = subspaces::random_gaussian(3, 3, 5);
  const ComplexMatrix h = g.adjoint() * g + ComplexMatrix::Identity(3, 3);
  EXPECT_LE((h * inverse_hpd(h) - ComplexMatrix::Identity(3, 3)).norm(), 1e-12);
  const ComplexMatrix r = inverse_sqrt_hpd(h);
  EXPECT_LE((r * h * r - ComplexMatrix::Identity(3, 3)).norm(), 1e-12);
  EXPECT_THROW(solve_hpd(-h, ComplexMatrix::Identity(3, 3)), DomainError);
  EXPECT_THROW(matmul(g, ComplexMatrix::Zero(2, 2)), DomainError);
}

TEST(Tolerance, BoundScaling) {
  EXPECT_DOUBLE_EQ(Tolerance(1e-9).bound(100.0), 1e-9);
  EXPECT_DOUBLE_EQ(Tolerance(1e-9, true).bound(100.0), 1e-7);
  EXPECT_DOUBLE_EQ(Tolerance(1e-9, true).bound(0.5), 1e-9);
  EXPECT_THROW(Tolerance(-1.0), DomainError);
}
