#pragma once

#include "isoclinic/matcore.hpp"
#include "isoclinic/subspaces.hpp"

namespace isoclinic::numrange {

/// Rank-k numerical range of a Hermitian matrix: the closed interval
/// [a_{n-k+1}, a_k] of its descending eigenvalues, empty when the ends cross.
struct NumRangeInterval {
  std::size_t k = 0;
  double lower = 0.0;
  double upper = 0.0;
  bool empty = false;
};

NumRangeInterval hermitian_rank_k_range(const ComplexMatrix& a, std::size_t k,
                                        const Tolerance& tol = Tolerance(1e-9, true));

/// Rank-k projection R with R P R = lambda R, spanned by
/// sqrt(lambda) u_j + sqrt(1 - lambda) v_j for u_j in range(P), v_j in ker(P).
OrthProjection projection_witness(const OrthProjection& p, std::size_t k, double lambda);

struct PairSymmetryReport {
  bool pqp_holds = false;
  bool qpq_holds = false;
  double mu_pqp = 0.0;  // best fit, reported whether or not the test holds
  double mu_qpq = 0.0;
  double residual_pqp = 0.0;
  double residual_qpq = 0.0;
  bool verdicts_agree = false;
  bool mu_agree = false;  // vacuously true unless both hold
  /// Tr(mu^-1 QPQ) - Tr(P); only meaningful when both hold with mu > 0.
  double trace_identity_gap = 0.0;
};

/// Tests PQP = mu P and QPQ = mu Q independently and compares the outcomes.
PairSymmetryReport pair_symmetry_check(const OrthProjection& p, const OrthProjection& q,
                                       const Tolerance& tol = Tolerance());

}  // namespace isoclinic::numrange
