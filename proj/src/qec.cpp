#include "isoclinic/qec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace isoclinic {

ErrorModel::ErrorModel(std::vector<ComplexMatrix> kraus, const Tolerance& tol)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) {
    throw DomainError("error model: no operators");
  }
  const Eigen::Index n = kraus_.front().rows();
  ComplexMatrix total = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < kraus_.size(); ++i) {
    const ComplexMatrix& e = kraus_[i];
    if (e.rows() != n || e.cols() != n) {
      throw DomainError("error model: operator " + std::to_string(i) + " is not " +
                        std::to_string(n) + " x " + std::to_string(n));
    }
    if (!matcore::all_finite(e)) {
      throw DomainError("error model: operator " + std::to_string(i) + " has non-finite entries");
    }
    total += e.adjoint() * e;
  }
  const double top = matcore::hermitian_eig(total, Tolerance(1e-9, true)).values(0);
  if (top > 1.0 + tol.abs_eps) {
    throw DomainError("error model: sum E_i* E_i exceeds the identity (largest eigenvalue " +
                      std::to_string(top) + ")");
  }
}

namespace qec {

KLReport kl_check(const Subspace& code, const ErrorModel& model, const Tolerance& tol) {
  if (code.ambient_dim() != model.dim()) {
    throw DomainError("kl_check: code lives in C^" + std::to_string(code.ambient_dim()) +
                      " but operators act on C^" + std::to_string(model.dim()));
  }
  const OrthProjection pc = code.projection();
  if (pc.rank() == 0) {
    throw DomainError("kl_check: code has rank 0");
  }
  const ComplexMatrix& p = pc.matrix();
  const auto k = static_cast<Eigen::Index>(model.size());

  std::vector<ComplexMatrix> restricted;
  restricted.reserve(model.size());
  for (const auto& e : model.kraus()) restricted.push_back(e * p);

  KLReport rep;
  rep.tolerance = tol.abs_eps;
  rep.alpha = ComplexMatrix::Zero(k, k);
  rep.residuals = Eigen::MatrixXd::Zero(k, k);
  rep.correctable = true;
  ComplexMatrix gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const ComplexMatrix block = restricted[i].adjoint() * restricted[j];
      const auto fit = matcore::scalar_fit(block, p, pc.rank());
      rep.alpha(i, j) = fit.alpha;
      rep.residuals(i, j) = fit.residual;
      if (fit.residual > tol.bound(block.norm())) rep.correctable = false;
      // <vec(E_i P), vec(E_j P)> = tr(P E_i* E_j P)
      gram(i, j) = block.trace();
    }
  }

  const auto gram_eig = matcore::hermitian_eig(gram, Tolerance(1e-9, true));
  rep.gram_spectrum.assign(gram_eig.values.data(), gram_eig.values.data() + k);
  const double top = gram_eig.values(0);
  const double bottom = gram_eig.values(k - 1);
  rep.nondegenerate = top > 0.0 && bottom > tol.abs_eps * top;

  const auto alpha_eig = matcore::hermitian_eig(rep.alpha, Tolerance(1e-6, true));
  rep.alpha_psd = alpha_eig.values(k - 1) >= -tol.bound(rep.alpha.norm());
  return rep;
}

ExtractionResult extract_isoclinic_family(const Subspace& code, const ErrorModel& model,
                                          const Tolerance& tol) {
  const KLReport kl = kl_check(code, model, tol);
  if (!kl.correctable) {
    throw PreconditionError("extract_isoclinic_family: code is not correctable for the model");
  }
  if (!kl.nondegenerate) {
    throw DegeneracyError(
        "extract_isoclinic_family: restricted error operators are linearly dependent");
  }
  const auto k = static_cast<Eigen::Index>(model.size());
  for (Eigen::Index i = 0; i < k; ++i) {
    if (kl.alpha(i, i).real() <= tol.abs_eps) {
      throw DegeneracyError("extract_isoclinic_family: alpha_" + std::to_string(i) + std::to_string(i) +
                            " vanishes");
    }
  }

  const ComplexMatrix p = code.projection().matrix();
  ExtractionResult out;
  std::vector<ComplexMatrix> range_projections;
  for (const auto& e : model.kraus()) {
    const ComplexMatrix restricted = e * p;
    out.partial_isometries.push_back(matcore::polar_partial_isometry(restricted, tol));
    out.subspaces.emplace_back(matcore::qr_orthonormalize(restricted, tol));
    const ComplexMatrix& q = out.subspaces.back().basis();
    range_projections.push_back(q * q.adjoint());
  }

  out.lambda_matrix = ComplexMatrix(k, k);
  out.pairwise_lambda = Eigen::MatrixXd(k, k);
  out.identity_residuals = Eigen::MatrixXd::Zero(k, k);
  out.identities_hold = true;
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const double norm = std::sqrt(kl.alpha(i, i).real() * kl.alpha(j, j).real());
      out.lambda_matrix(i, j) = kl.alpha(i, j) / norm;
      out.pairwise_lambda(i, j) = std::norm(out.lambda_matrix(i, j));
      const ComplexMatrix& pi = range_projections[i];
      const ComplexMatrix lhs = pi * range_projections[j] * pi;
      out.identity_residuals(i, j) = (lhs - out.pairwise_lambda(i, j) * pi).norm();
      if (out.identity_residuals(i, j) > tol.bound(lhs.norm())) out.identities_hold = false;
    }
  }
  out.family = subspaces::family_isoclinic_check(out.subspaces, tol);
  out.family_isoclinic = out.family.isoclinic;
  return out;
}

ComplexMatrix rotation_matrix(double phi) {
  ComplexMatrix u(2, 2);
  u << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return u;
}

ErrorModel rotate_model(const ErrorModel& model, double phi) {
  if (model.size() != 2) {
    throw DomainError("rotate_model: model must have exactly 2 operators, got " +
                      std::to_string(model.size()));
  }
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const ComplexMatrix& e1 = model.kraus()[0];
  const ComplexMatrix& e2 = model.kraus()[1];
  return ErrorModel({c * e1 + s * e2, -s * e1 + c * e2});
}

std::pair<KLReport, KLReport> converse_check(const OrthProjection& p1, const OrthProjection& p2,
                                             const Tolerance& tol) {
  if (p1.ambient_dim() != p2.ambient_dim()) {
    throw DomainError("converse_check: projections act on different spaces");
  }
  if (p1.rank() != p2.rank() || p1.rank() == 0) {
    throw DomainError("converse_check: projections must have equal nonzero rank");
  }
  const Subspace v1 = p1.range();
  const Subspace v2 = p2.range();
  if (!subspaces::isoclinic_check(v1, v2, tol).isoclinic) {
    throw PreconditionError("converse_check: ranges are not isoclinic");
  }
  const double h = 1.0 / std::sqrt(2.0);
  const ErrorModel model({h * p1.matrix(), h * p2.matrix()});
  return {kl_check(v1, model, tol), kl_check(v2, model, tol)};
}

}  // namespace qec
}  // namespace isoclinic
