#include "isoclinic/subspaces.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace isoclinic {

Subspace::Subspace(ComplexMatrix basis, const Tolerance& tol) : basis_(std::move(basis)) {
  const Eigen::Index n = basis_.rows();
  const Eigen::Index m = basis_.cols();
  if (m < 1 || m > n) {
    throw DomainError("subspace: basis must be n x m with 1 <= m <= n, got " +
                      std::to_string(n) + " x " + std::to_string(m));
  }
  if (!matcore::all_finite(basis_)) {
    throw DomainError("subspace: basis has non-finite entries");
  }
  const double defect = (basis_.adjoint() * basis_ - ComplexMatrix::Identity(m, m)).norm();
  if (defect > tol.bound(std::sqrt(static_cast<double>(m)))) {
    throw DomainError("subspace: basis columns are not orthonormal (defect " +
                      std::to_string(defect) + ")");
  }
}

OrthProjection Subspace::projection() const {
  return OrthProjection(basis_ * basis_.adjoint());
}

OrthProjection::OrthProjection(ComplexMatrix matrix, const Tolerance& tol)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.size() == 0) {
    throw DomainError("projection: matrix must be square and nonempty");
  }
  if (!matcore::all_finite(matrix_)) {
    throw DomainError("projection: matrix has non-finite entries");
  }
  const double scale = matrix_.norm();
  if (!matcore::is_hermitian(matrix_, tol)) {
    throw DomainError("projection: matrix is not Hermitian");
  }
  const double idem = (matrix_ * matrix_ - matrix_).norm();
  if (idem > tol.bound(scale)) {
    throw DomainError("projection: matrix is not idempotent (residual " +
                      std::to_string(idem) + ")");
  }
  const Complex tr = matrix_.trace();
  const double rounded = std::round(tr.real());
  const double slack = tol.bound(scale) * std::sqrt(static_cast<double>(matrix_.rows()));
  if (std::abs(tr.real() - rounded) > slack || std::abs(tr.imag()) > slack) {
    throw DomainError("projection: trace is not an integer");
  }
  rank_ = static_cast<std::size_t>(rounded);
}

Subspace OrthProjection::range() const {
  const auto e = matcore::hermitian_eig(matrix_);
  return Subspace(e.vectors.leftCols(static_cast<Eigen::Index>(rank_)));
}

ComplexMatrix OrthProjection::kernel_basis() const {
  const auto e = matcore::hermitian_eig(matrix_);
  return e.vectors.rightCols(matrix_.rows() - static_cast<Eigen::Index>(rank_));
}

namespace matcore {
std::optional<Complex> is_scalar_multiple_of(const ComplexMatrix& b, const OrthProjection& p,
                                             const Tolerance& tol) {
  return is_scalar_multiple_of(b, p.matrix(), p.rank(), tol);
}
}  // namespace matcore

namespace subspaces {

namespace {

void require_same_ambient(const Subspace& v, const Subspace& w, const char* op) {
  if (v.ambient_dim() != w.ambient_dim()) {
    throw DomainError(std::string(op) + ": ambient dimensions differ (" +
                      std::to_string(v.ambient_dim()) + " vs " +
                      std::to_string(w.ambient_dim()) + ")");
  }
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix random_unitary(Eigen::Index n, std::uint64_t seed) {
  const ComplexMatrix g = random_gaussian(n, n, seed);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

Subspace random_subspace(Eigen::Index n, Eigen::Index m, std::uint64_t seed) {
  return subspace_from_columns(random_gaussian(n, m, seed));
}

Subspace subspace_from_columns(const ComplexMatrix& raw, const Tolerance& tol) {
  if (raw.size() == 0) {
    throw DomainError("subspace_from_columns: empty matrix");
  }
  const std::size_t rank = matcore::numerical_rank(raw, tol);
  if (rank < static_cast<std::size_t>(raw.cols())) {
    throw DomainError("subspace_from_columns: columns are rank deficient (numerical rank " +
                      std::to_string(rank) + " of " + std::to_string(raw.cols()) + ")");
  }
  return Subspace(matcore::qr_orthonormalize(raw, tol));
}

CanonicalAngles canonical_angles(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w, "canonical_angles");
  const auto f = matcore::svd(v.basis().adjoint() * w.basis());
  CanonicalAngles out;
  out.cosines.reserve(static_cast<std::size_t>(f.singular.size()));
  out.angles.reserve(static_cast<std::size_t>(f.singular.size()));
  for (Eigen::Index k = 0; k < f.singular.size(); ++k) {
    const double c = clamp_unit(f.singular(k));
    out.cosines.push_back(c);
    out.angles.push_back(std::acos(c));
  }
  return out;
}

IsoclinicReport isoclinic_check(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  require_same_ambient(v, w, "isoclinic_check");
  if (v.dim() != w.dim()) {
    throw DomainError("isoclinic_check: subspace dimensions differ (" +
                      std::to_string(v.dim()) + " vs " + std::to_string(w.dim()) + ")");
  }
  const Eigen::Index m = v.dim();
  const ComplexMatrix cross = v.basis().adjoint() * w.basis();
  const RealVector sigma = matcore::svd(cross).singular;

  const ComplexMatrix pv = v.basis() * v.basis().adjoint();
  const ComplexMatrix pw = w.basis() * w.basis().adjoint();
  const ComplexMatrix pvpwpv = pv * pw * pv;
  const ComplexMatrix pwpvpw = pw * pv * pw;

  IsoclinicReport rep;
  rep.lambda = std::clamp(pvpwpv.trace().real() / static_cast<double>(m), 0.0, 1.0);
  rep.spread = sigma.maxCoeff() - sigma.minCoeff();

  const ComplexMatrix gram = cross * cross.adjoint();
  rep.residuals.unitary_multiple = (gram - rep.lambda * ComplexMatrix::Identity(m, m)).norm();
  rep.residuals.compression_v = (pvpwpv - rep.lambda * pv).norm();
  rep.residuals.compression_w = (pwpvpw - rep.lambda * pw).norm();

  rep.equal_angles = rep.spread <= tol.bound(sigma.norm());
  rep.unitary_multiple = rep.residuals.unitary_multiple <= tol.bound(gram.norm());
  rep.compressions = rep.residuals.compression_v <= tol.bound(pvpwpv.norm()) &&
                     rep.residuals.compression_w <= tol.bound(pwpvpw.norm());
  rep.isoclinic = rep.equal_angles && rep.unitary_multiple && rep.compressions;

  rep.canonical_angle = std::acos(clamp_unit(sigma.mean()));
  rep.lambda_angle = std::acos(rep.lambda);
  return rep;
}

RatioRange ratio_probe(const Subspace& v, const Subspace& w, std::size_t samples,
                       std::uint64_t seed) {
  require_same_ambient(v, w, "ratio_probe");
  if (samples < 1) {
    throw DomainError("ratio_probe: need at least one sample");
  }
  const ComplexMatrix coeffs = random_gaussian(v.dim(), static_cast<Eigen::Index>(samples), seed);
  const ComplexMatrix cross = w.basis().adjoint() * v.basis();
  RatioRange out{1.0, 0.0};
  for (Eigen::Index s = 0; s < coeffs.cols(); ++s) {
    // ||P_W x|| = ||Q_W* Q_V c|| and ||x|| = ||c|| for x = Q_V c.
    const ComplexVector c = coeffs.col(s).normalized();
    const double ratio = (cross * c).norm();
    out.min_ratio = std::min(out.min_ratio, ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  return out;
}

std::pair<Subspace, Subspace> make_isoclinic_pair(Eigen::Index n, Eigen::Index m,
                                                  double lambda, std::uint64_t seed) {
  if (m < 1 || 2 * m > n) {
    throw DomainError("make_isoclinic_pair: need 1 <= m and 2m <= n, got n=" +
                      std::to_string(n) + " m=" + std::to_string(m));
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("make_isoclinic_pair: lambda must lie in [0, 1]");
  }
  const ComplexMatrix q = matcore::qr_orthonormalize(random_gaussian(n, 2 * m, seed), Tolerance());
  const ComplexMatrix u = q.leftCols(m);
  const ComplexMatrix w = std::sqrt(lambda) * u + std::sqrt(1.0 - lambda) * q.rightCols(m);
  return {Subspace(u), Subspace(w)};
}

FamilyReport family_isoclinic_check(const std::vector<Subspace>& family, const Tolerance& tol) {
  FamilyReport out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      PairReport pr{i, j, isoclinic_check(family[i], family[j], tol)};
      out.isoclinic = out.isoclinic && pr.report.isoclinic;
      out.pairs.push_back(pr);
    }
  }
  return out;
}

}  // namespace subspaces
}  // namespace isoclinic
