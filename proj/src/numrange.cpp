#include "isoclinic/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace isoclinic::numrange {

NumRangeInterval hermitian_rank_k_range(const ComplexMatrix& a, std::size_t k,
                                        const Tolerance& tol) {
  if (a.rows() != a.cols() || a.size() == 0) {
    throw DomainError("hermitian_rank_k_range: matrix must be square and nonempty");
  }
  const auto n = static_cast<std::size_t>(a.rows());
  if (k < 1 || k > n) {
    throw DomainError("hermitian_rank_k_range: k must satisfy 1 <= k <= " + std::to_string(n));
  }
  const auto eig = matcore::hermitian_eig(a, tol);
  // 1-based a_{n-k+1} and a_k of the descending spectrum.
  const double lower = eig.values(static_cast<Eigen::Index>(n - k));
  const double upper = eig.values(static_cast<Eigen::Index>(k - 1));
  NumRangeInterval out{k, lower, upper, false};
  const double slack = tol.bound(eig.values.cwiseAbs().maxCoeff());
  if (lower > upper + slack) {
    out.empty = true;
  } else if (lower > upper) {
    // Equal eigenvalues split by roundoff.
    out.lower = out.upper = 0.5 * (lower + upper);
  }
  return out;
}

OrthProjection projection_witness(const OrthProjection& p, std::size_t k, double lambda) {
  const std::size_t l = p.rank();
  const auto n = static_cast<std::size_t>(p.ambient_dim());
  if (k < 1 || k > std::min(l, n - l)) {
    throw DomainError("projection_witness: need 1 <= k <= min(rank, n - rank) = " +
                      std::to_string(std::min(l, n - l)));
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("projection_witness: lambda must lie in [0, 1]");
  }
  const auto kk = static_cast<Eigen::Index>(k);
  const ComplexMatrix range = p.range().basis().leftCols(kk);
  const ComplexMatrix kernel = p.kernel_basis().leftCols(kk);
  const ComplexMatrix w = std::sqrt(lambda) * range + std::sqrt(1.0 - lambda) * kernel;
  return OrthProjection(w * w.adjoint());
}

PairSymmetryReport pair_symmetry_check(const OrthProjection& p, const OrthProjection& q,
                                       const Tolerance& tol) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw DomainError("pair_symmetry_check: projections act on different spaces");
  }
  if (p.rank() != q.rank()) {
    throw DomainError("pair_symmetry_check: ranks differ (" + std::to_string(p.rank()) + " vs " +
                      std::to_string(q.rank()) + ")");
  }
  const ComplexMatrix& pm = p.matrix();
  const ComplexMatrix& qm = q.matrix();
  const ComplexMatrix pqp = pm * qm * pm;
  const ComplexMatrix qpq = qm * pm * qm;

  PairSymmetryReport rep;
  const auto fit_p = matcore::scalar_fit(pqp, pm, p.rank());
  const auto fit_q = matcore::scalar_fit(qpq, qm, q.rank());
  rep.mu_pqp = fit_p.alpha.real();
  rep.mu_qpq = fit_q.alpha.real();
  rep.residual_pqp = fit_p.residual;
  rep.residual_qpq = fit_q.residual;
  rep.pqp_holds = matcore::is_scalar_multiple_of(pqp, p, tol).has_value();
  rep.qpq_holds = matcore::is_scalar_multiple_of(qpq, q, tol).has_value();
  rep.verdicts_agree = rep.pqp_holds == rep.qpq_holds;
  rep.mu_agree = !(rep.pqp_holds && rep.qpq_holds) ||
                 std::abs(rep.mu_pqp - rep.mu_qpq) <= tol.bound(1.0);
  if (rep.pqp_holds && rep.qpq_holds && rep.mu_qpq > tol.abs_eps) {
    rep.trace_identity_gap = qpq.trace().real() / rep.mu_qpq - pm.trace().real();
  }
  return rep;
}

}  // namespace isoclinic::numrange
