#include "isoclinic/matcore.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace isoclinic {

Tolerance::Tolerance(double eps, bool relative) : abs_eps(eps), rel(relative) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw DomainError("tolerance must be a finite nonnegative number");
  }
}

double Tolerance::bound(double scale) const {
  return rel ? abs_eps * std::max(1.0, scale) : abs_eps;
}

namespace matcore {

Svd svd(const ComplexMatrix& a) {
  if (a.size() == 0) {
    throw DomainError("svd: empty matrix");
  }
  if (!all_finite(a)) {
    throw DomainError("svd: matrix has non-finite entries");
  }
  Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success) {
    throw FactorizationError("svd: Jacobi SVD failed to converge");
  }
  // JacobiSVD already sorts descending.
  return Svd{solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

HermitianEig hermitian_eig(const ComplexMatrix& a, const Tolerance& tol) {
  if (a.rows() != a.cols() || a.size() == 0) {
    throw DomainError("hermitian_eig: matrix must be square and nonempty");
  }
  if (!is_hermitian(a, tol)) {
    throw DomainError("hermitian_eig: matrix is not Hermitian");
  }
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw FactorizationError("hermitian_eig: eigensolver failed to converge");
  }
  // Eigen returns ascending order.
  const Eigen::Index n = a.rows();
  HermitianEig out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

std::size_t numerical_rank(const RealVector& singular_desc, const Tolerance& tol) {
  if (singular_desc.size() == 0) return 0;
  const double cutoff = tol.abs_eps * std::max(1.0, singular_desc(0));
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < singular_desc.size(); ++k) {
    if (singular_desc(k) > cutoff) ++r;
  }
  return r;
}

std::size_t numerical_rank(const ComplexMatrix& a, const Tolerance& tol) {
  return numerical_rank(svd(a).singular, tol);
}

ComplexMatrix polar_partial_isometry(const ComplexMatrix& a, const Tolerance& tol) {
  const Svd f = svd(a);
  const auto r = static_cast<Eigen::Index>(numerical_rank(f.singular, tol));
  if (r == 0) {
    return ComplexMatrix::Zero(a.rows(), a.cols());
  }
  return f.left.leftCols(r) * f.right.leftCols(r).adjoint();
}

ComplexMatrix qr_orthonormalize(const ComplexMatrix& a, const Tolerance& tol) {
  const auto r = static_cast<Eigen::Index>(numerical_rank(a, tol));
  if (r == 0) {
    return ComplexMatrix(a.rows(), 0);
  }
  if (r == a.cols()) {
    ComplexMatrix q = a;
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index i = 0; i < j; ++i) {
          const Complex c = q.col(i).dot(q.col(j));
          q.col(j) -= c * q.col(i);
        }
      }
      q.col(j) /= q.col(j).norm();
    }
    return q;
  }
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(a);
  const ComplexMatrix full = qr.householderQ();
  return full.leftCols(r);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("matmul: inner dimensions differ");
  }
  return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

Complex trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DomainError("trace: matrix must be square");
  }
  return a.trace();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix solve_hpd(const ComplexMatrix& h, const ComplexMatrix& b) {
  if (h.rows() != h.cols() || h.rows() != b.rows()) {
    throw DomainError("solve_hpd: shape mismatch");
  }
  Eigen::LLT<ComplexMatrix> llt(0.5 * (h + h.adjoint()));
  if (llt.info() != Eigen::Success) {
    throw DomainError("solve_hpd: matrix is not Hermitian positive definite");
  }
  return llt.solve(b);
}

ComplexMatrix inverse_hpd(const ComplexMatrix& h) {
  return solve_hpd(h, ComplexMatrix::Identity(h.rows(), h.cols()));
}

ComplexMatrix inverse_sqrt_hpd(const ComplexMatrix& h) {
  const HermitianEig e = hermitian_eig(h);
  if (e.values.minCoeff() <= 0.0) {
    throw DomainError("inverse_sqrt_hpd: matrix is not positive definite");
  }
  const RealVector scale = e.values.cwiseSqrt().cwiseInverse();
  return e.vectors * scale.cast<Complex>().asDiagonal() * e.vectors.adjoint();
}

bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).norm() <= tol.bound(a.norm());
}

bool all_finite(const ComplexMatrix& a) { return a.allFinite(); }

ScalarFit scalar_fit(const ComplexMatrix& b, const ComplexMatrix& projection,
                     std::size_t rank) {
  if (b.rows() != b.cols() || b.rows() != projection.rows() ||
      projection.rows() != projection.cols()) {
    throw DomainError("scalar test: b and projection must be square of equal size");
  }
  if (rank == 0) {
    throw DomainError("scalar test: projection has rank 0");
  }
  const Complex alpha = (projection * b).trace() / static_cast<double>(rank);
  return ScalarFit{alpha, (b - alpha * projection).norm()};
}

std::optional<Complex> is_scalar_multiple_of(const ComplexMatrix& b,
                                             const ComplexMatrix& projection,
                                             std::size_t rank,
                                             const Tolerance& tol) {
  const ScalarFit fit = scalar_fit(b, projection, rank);
  if (fit.residual <= tol.bound(b.norm())) {
    return fit.alpha;
  }
  return std::nullopt;
}

ComplexMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

ComplexMatrix pauli_y() {
  ComplexMatrix y(2, 2);
  y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return y;
}

ComplexMatrix pauli_z() {
  ComplexMatrix z(2, 2);
  z << 1.0, 0.0, 0.0, -1.0;
  return z;
}

}  // namespace matcore
}  // namespace isoclinic
