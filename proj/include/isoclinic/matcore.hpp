#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace isoclinic {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Input violates an operation's domain (shape, rank, hermiticity, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A factorization did not converge. Signals defective numerics, not bad input.
class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comparison tolerance.
///
/// With `rel` set, the threshold is scaled by max(1, ||object||_F) of the
/// object being tested; otherwise `abs_eps` is used as is.
struct Tolerance {
  double abs_eps = 1e-9;
  bool rel = false;

  Tolerance() = default;
  explicit Tolerance(double eps, bool relative = false);

  double bound(double scale = 1.0) const;
};

namespace matcore {

struct Svd {
  ComplexMatrix left;   // m x l, orthonormal columns
  RealVector singular;  // l values, descending
  ComplexMatrix right;  // n x l, orthonormal columns
};

struct HermitianEig {
  RealVector values;  // descending
  ComplexMatrix vectors;
};

/// Thin SVD with descending singular values.
Svd svd(const ComplexMatrix& a);

/// Spectral decomposition of a Hermitian matrix, eigenvalues descending.
/// Throws DomainError when `a` is not square or not Hermitian within `tol`.
HermitianEig hermitian_eig(const ComplexMatrix& a,
                           const Tolerance& tol = Tolerance(1e-9, true));

/// Numerical rank: singular values <= abs_eps * max(1, sigma_max) count as zero.
std::size_t numerical_rank(const RealVector& singular_desc, const Tolerance& tol);
std::size_t numerical_rank(const ComplexMatrix& a, const Tolerance& tol);

/// Partial isometry U of the polar decomposition a = U |a|, built from the
/// SVD with the numerically-zero singular values discarded.
ComplexMatrix polar_partial_isometry(const ComplexMatrix& a, const Tolerance& tol);

/// Orthonormal basis of the column span of `a`. Full-rank input keeps column
/// order (modified Gram-Schmidt, two passes); rank-deficient input falls back
/// to column-pivoted Householder QR.
ComplexMatrix qr_orthonormalize(const ComplexMatrix& a, const Tolerance& tol);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Solves h x = b for Hermitian positive definite h (Cholesky).
ComplexMatrix solve_hpd(const ComplexMatrix& h, const ComplexMatrix& b);
ComplexMatrix inverse_hpd(const ComplexMatrix& h);

/// Inverse square root of a Hermitian positive definite matrix.
ComplexMatrix inverse_sqrt_hpd(const ComplexMatrix& h);

bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol);
bool all_finite(const ComplexMatrix& a);

/// Tests whether `b` equals alpha * `projection` for a scalar alpha.
///
/// The candidate is the least-squares optimum alpha = tr(P b) / rank(P); it
/// reduces to tr(b) / rank(P) whenever b = P b P. Returns alpha when
/// ||b - alpha P||_F <= tol.bound(||b||_F). `rank` must be the rank of
/// `projection`; rank 0 throws DomainError.
std::optional<Complex> is_scalar_multiple_of(const ComplexMatrix& b,
                                             const ComplexMatrix& projection,
                                             std::size_t rank,
                                             const Tolerance& tol);

/// Least-squares scalar fit and its Frobenius residual, without a verdict.
struct ScalarFit {
  Complex alpha;
  double residual;
};
ScalarFit scalar_fit(const ComplexMatrix& b, const ComplexMatrix& projection,
                     std::size_t rank);

/// Pauli matrices.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace matcore
}  // namespace isoclinic
