#pragma once

#include <utility>
#include <vector>

#include "isoclinic/matcore.hpp"
#include "isoclinic/subspaces.hpp"

namespace isoclinic {

/// Extraction was requested on a code that fails the Knill-Laflamme test,
/// or a converse check on a non-isoclinic pair.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The restricted error operators are linearly dependent, or some alpha_ii
/// vanishes.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered Kraus operators E_i on C^n with sum E_i* E_i <= I.
class ErrorModel {
 public:
  explicit ErrorModel(std::vector<ComplexMatrix> kraus, const Tolerance& tol = Tolerance());

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  std::size_t size() const { return kraus_.size(); }
  Eigen::Index dim() const { return kraus_.front().rows(); }

 private:
  std::vector<ComplexMatrix> kraus_;
};

namespace qec {

struct KLReport {
  bool correctable = false;
  ComplexMatrix alpha;        // best-fit alpha_ij = tr(P E_i* E_j P) / rank
  Eigen::MatrixXd residuals;  // ||P E_i* E_j P - alpha_ij P||_F
  bool nondegenerate = false;
  std::vector<double> gram_spectrum;  // descending
  bool alpha_psd = false;
  double tolerance = 0.0;
};

struct ExtractionResult {
  std::vector<Subspace> subspaces;
  std::vector<ComplexMatrix> partial_isometries;
  ComplexMatrix lambda_matrix;       // alpha_ij / sqrt(alpha_ii alpha_jj)
  Eigen::MatrixXd pairwise_lambda;   // |lambda_ij|^2
  Eigen::MatrixXd identity_residuals;  // ||P_i P_j P_i - |lambda_ij|^2 P_i||_F
  bool identities_hold = false;
  subspaces::FamilyReport family;
  bool family_isoclinic = false;
};

/// Knill-Laflamme test: P E_i* E_j P = alpha_ij P for every ordered pair.
KLReport kl_check(const Subspace& code, const ErrorModel& model,
                  const Tolerance& tol = Tolerance());

/// Range subspaces of E_i restricted to the code, their polar partial
/// isometries, and the induced isoclinic parameters. Requires a correctable,
/// nondegenerate code.
ExtractionResult extract_isoclinic_family(const Subspace& code, const ErrorModel& model,
                                          const Tolerance& tol = Tolerance());

/// F_1 = cos(phi) E_1 + sin(phi) E_2, F_2 = -sin(phi) E_1 + cos(phi) E_2.
ErrorModel rotate_model(const ErrorModel& model, double phi);

/// 2 x 2 real rotation [[c, -s], [s, c]] with [F_1 F_2] = [E_1 E_2] U.
ComplexMatrix rotation_matrix(double phi);

/// KL reports for both ranges against the model {P_1 / sqrt 2, P_2 / sqrt 2}.
std::pair<KLReport, KLReport> converse_check(const OrthProjection& p1, const OrthProjection& p2,
                                             const Tolerance& tol = Tolerance());

}  // namespace qec
}  // namespace isoclinic
