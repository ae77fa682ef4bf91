#pragma once

#include <ostream>
#include <vector>

#include "isoclinic/matcore.hpp"
#include "isoclinic/qec.hpp"
#include "isoclinic/subspaces.hpp"

// Two-qubit objects use the basis ordering |00>, |01>, |10>, |11>, so that
// X_1 = X (x) I_2 flips the first (most significant) qubit.
namespace isoclinic::gallery {

struct BitFlipParams {
  double p = 0.5;
  double phi = 0.0;

  BitFlipParams(double probability, double rotation);
};

/// {sqrt(1-p) I_4, sqrt(p) X_1}.
ErrorModel bitflip_model(double p);

/// span{|00>, |11>}
Subspace code_c1();
/// span{|10>, |01>}
Subspace code_c2();

/// Isoclinic angle of the rotated bit-flip model, with cos(theta) = |lambda_12|^2.
double theta_formula(const BitFlipParams& params);

/// Closed-form KL coefficients of the rotated model on C_1.
ComplexMatrix rotated_alpha_closed_form(const BitFlipParams& params);

struct SurfacePoint {
  double p;
  double phi;
  double theta;
};

/// Grid p_i = (i+1)/(p_steps+1), phi_j = 2 pi j / phi_steps; rows ordered by
/// p, then phi.
std::vector<SurfacePoint> theta_surface(std::size_t p_steps, std::size_t phi_steps);

/// CSV with header "p,phi,theta", shortest round-trip number formatting.
void write_surface_csv(std::ostream& os, const std::vector<SurfacePoint>& surface);

/// Graph {(x, Mx)} of a 2 x 2 matrix in C^4.
struct GraphSubspaceSpec {
  ComplexMatrix m;

  explicit GraphSubspaceSpec(ComplexMatrix matrix);
};

Subspace graph_subspace(const GraphSubspaceSpec& spec);

/// Block formula [I; M] (I + M* M)^-1 [I  M*].
OrthProjection graph_projection(const GraphSubspaceSpec& spec);

struct WongReport {
  /// tr(L) / tr(I + A* A) for L = (I + A* B)(I + B* B)^-1 (I + B* A).
  double lambda_bestfit = 0.0;
  /// ||L - lambda_bestfit (I + A* A)||_F
  double residual = 0.0;
  bool holds = false;
  /// Same equation after congruence by S^{-1/2}, S = I + A* A. This is the
  /// compression of P_B onto the graph of A, so these two numbers coincide
  /// with the best-fit lambda and residual of P_A P_B P_A = lambda P_A.
  double projector_lambda = 0.0;
  double projector_residual = 0.0;
  /// isoclinic_check on the two graph subspaces.
  subspaces::IsoclinicReport isoclinic;
  bool consistent = false;  // holds == isoclinic.isoclinic
};

WongReport wong_equation_check(const GraphSubspaceSpec& a, const GraphSubspaceSpec& b,
                               const Tolerance& tol = Tolerance());

/// The pair A = diag(1, -1), B = diag((sqrt3 + 1)/(sqrt3 - 1), 0).
std::pair<GraphSubspaceSpec, GraphSubspaceSpec> wong_example_pair();

}  // namespace isoclinic::gallery
