#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "isoclinic/matcore.hpp"

namespace isoclinic {

class OrthProjection;

/// Subspace of C^n represented by an n x m isometry whose columns are an
/// orthonormal basis.
class Subspace {
 public:
  /// Wraps `basis` after checking basis* basis = I_m within `tol`.
  explicit Subspace(ComplexMatrix basis, const Tolerance& tol = Tolerance(1e-9));

  const ComplexMatrix& basis() const { return basis_; }
  Eigen::Index ambient_dim() const { return basis_.rows(); }
  Eigen::Index dim() const { return basis_.cols(); }

  OrthProjection projection() const;

 private:
  ComplexMatrix basis_;
};

/// Orthogonal projection: Hermitian, idempotent, integer trace.
class OrthProjection {
 public:
  explicit OrthProjection(ComplexMatrix matrix, const Tolerance& tol = Tolerance(1e-9, true));

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return rank_; }
  Eigen::Index ambient_dim() const { return matrix_.rows(); }

  /// Orthonormal basis of the range, taken from the eigenvectors with
  /// eigenvalue near 1.
  Subspace range() const;
  /// Orthonormal basis of the kernel; empty (n x 0) matrix when P = I.
  ComplexMatrix kernel_basis() const;

 private:
  ComplexMatrix matrix_;
  std::size_t rank_ = 0;
};

namespace matcore {
std::optional<Complex> is_scalar_multiple_of(const ComplexMatrix& b, const OrthProjection& p,
                                             const Tolerance& tol);
}  // namespace matcore

namespace subspaces {

/// Canonical angles, ascending, with the matching cosines (singular values
/// of Q_V* Q_W) descending.
struct CanonicalAngles {
  std::vector<double> angles;
  std::vector<double> cosines;
};

struct IsoclinicResiduals {
  double unitary_multiple = 0.0;  // ||M M* - lambda I||_F, M = Q_V* Q_W
  double compression_v = 0.0;     // ||P_V P_W P_V - lambda P_V||_F
  double compression_w = 0.0;     // ||P_W P_V P_W - lambda P_W||_F
};

struct IsoclinicReport {
  bool isoclinic = false;
  double lambda = 0.0;
  /// arccos of the common singular value (cos theta = sqrt(lambda)).
  double canonical_angle = 0.0;
  /// arccos(lambda), the convention in which the isoclinic scalar itself is
  /// the cosine.
  double lambda_angle = 0.0;
  double spread = 0.0;
  IsoclinicResiduals residuals;
  bool equal_angles = false;
  bool unitary_multiple = false;
  bool compressions = false;
};

struct PairReport {
  std::size_t i = 0;
  std::size_t j = 0;
  IsoclinicReport report;
};

struct FamilyReport {
  bool isoclinic = true;
  std::vector<PairReport> pairs;
};

struct RatioRange {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double spread() const { return max_ratio - min_ratio; }
};

/// Orthonormalized span of the columns of `raw`. Throws DomainError naming
/// the numerical rank when `raw` is column-rank deficient.
Subspace subspace_from_columns(const ComplexMatrix& raw, const Tolerance& tol = Tolerance());

/// Canonical angles via the singular values of Q_V* Q_W, clamped to [0, 1].
CanonicalAngles canonical_angles(const Subspace& v, const Subspace& w);

/// Evaluates the equal-angle, scaled-unitary and compression criteria for an
/// equal-dimensional pair. lambda is estimated as tr(P_V P_W P_V) / m.
IsoclinicReport isoclinic_check(const Subspace& v, const Subspace& w,
                                const Tolerance& tol = Tolerance());

/// Extremes of ||P_W x|| / ||x|| over `samples` random unit vectors x in V.
RatioRange ratio_probe(const Subspace& v, const Subspace& w, std::size_t samples,
                       std::uint64_t seed);

/// Random isoclinic pair in C^n: V = span{u_j}, W = span{sqrt(lambda) u_j +
/// sqrt(1 - lambda) v_j} with {u_j} and {v_j} mutually orthogonal.
std::pair<Subspace, Subspace> make_isoclinic_pair(Eigen::Index n, Eigen::Index m,
                                                  double lambda, std::uint64_t seed);

FamilyReport family_isoclinic_check(const std::vector<Subspace>& family,
                                    const Tolerance& tol = Tolerance());

/// Random Gaussian complex matrix; used by fixtures and the sampling probes.
ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed);

/// Random unitary (QR of a Gaussian matrix with the phases of R removed).
ComplexMatrix random_unitary(Eigen::Index n, std::uint64_t seed);

/// Random m-dimensional subspace of C^n.
Subspace random_subspace(Eigen::Index n, Eigen::Index m, std::uint64_t seed);

}  // namespace subspaces
}  // namespace isoclinic
