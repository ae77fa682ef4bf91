#include "isoclinic/gallery.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace isoclinic::gallery {

namespace {

ComplexMatrix basis_vectors(std::initializer_list<Eigen::Index> indices) {
  ComplexMatrix q = ComplexMatrix::Zero(4, static_cast<Eigen::Index>(indices.size()));
  Eigen::Index col = 0;
  for (const auto idx : indices) q(idx, col++) = 1.0;
  return q;
}

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

ComplexMatrix stacked(const ComplexMatrix& m) {
  ComplexMatrix block(4, 2);
  block.topRows(2) = ComplexMatrix::Identity(2, 2);
  block.bottomRows(2) = m;
  return block;
}

}  // namespace

BitFlipParams::BitFlipParams(double probability, double rotation) : p(probability), phi(rotation) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("bit-flip probability must lie in (0, 1)");
  }
  if (!std::isfinite(phi)) {
    throw DomainError("rotation angle must be finite");
  }
}

ErrorModel bitflip_model(double p) {
  const BitFlipParams params(p, 0.0);
  const ComplexMatrix x1 = matcore::kron(matcore::pauli_x(), ComplexMatrix::Identity(2, 2));
  return ErrorModel({std::sqrt(1.0 - params.p) * ComplexMatrix::Identity(4, 4),
                     std::sqrt(params.p) * x1});
}

Subspace code_c1() { return Subspace(basis_vectors({0, 3})); }

Subspace code_c2() { return Subspace(basis_vectors({2, 1})); }

ComplexMatrix rotated_alpha_closed_form(const BitFlipParams& params) {
  const double c = std::cos(params.phi);
  const double s = std::sin(params.phi);
  const double p = params.p;
  ComplexMatrix alpha(2, 2);
  alpha(0, 0) = c * c * (1.0 - p) + s * s * p;
  alpha(1, 1) = s * s * (1.0 - p) + c * c * p;
  alpha(0, 1) = alpha(1, 0) = c * s * (2.0 * p - 1.0);
  return alpha;
}

double theta_formula(const BitFlipParams& params) {
  const ComplexMatrix alpha = rotated_alpha_closed_form(params);
  const double num = std::norm(alpha(0, 1));
  const double den = alpha(0, 0).real() * alpha(1, 1).real();
  return std::acos(std::clamp(num / den, 0.0, 1.0));
}

std::vector<SurfacePoint> theta_surface(std::size_t p_steps, std::size_t phi_steps) {
  if (p_steps == 0 || phi_steps == 0) {
    throw DomainError("theta_surface: step counts must be positive");
  }
  std::vector<SurfacePoint> out;
  out.reserve(p_steps * phi_steps);
  for (std::size_t i = 0; i < p_steps; ++i) {
    const double p = static_cast<double>(i + 1) / static_cast<double>(p_steps + 1);
    for (std::size_t j = 0; j < phi_steps; ++j) {
      const double phi =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(phi_steps);
      out.push_back({p, phi, theta_formula(BitFlipParams(p, phi))});
    }
  }
  return out;
}

void write_surface_csv(std::ostream& os, const std::vector<SurfacePoint>& surface) {
  os << "p,phi,theta\n";
  for (const auto& pt : surface) {
    os << shortest(pt.p) << ',' << shortest(pt.phi) << ',' << shortest(pt.theta) << '\n';
  }
}

GraphSubspaceSpec::GraphSubspaceSpec(ComplexMatrix matrix) : m(std::move(matrix)) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw DomainError("graph subspace: M must be 2 x 2");
  }
  if (!matcore::all_finite(m)) {
    throw DomainError("graph subspace: M has non-finite entries");
  }
}

Subspace graph_subspace(const GraphSubspaceSpec& spec) {
  return subspaces::subspace_from_columns(stacked(spec.m));
}

OrthProjection graph_projection(const GraphSubspaceSpec& spec) {
  const ComplexMatrix block = stacked(spec.m);
  const ComplexMatrix gram = ComplexMatrix::Identity(2, 2) + spec.m.adjoint() * spec.m;
  return OrthProjection(block * matcore::solve_hpd(gram, block.adjoint()));
}

WongReport wong_equation_check(const GraphSubspaceSpec& a, const GraphSubspaceSpec& b,
                               const Tolerance& tol) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix& am = a.m;
  const ComplexMatrix& bm = b.m;
  const ComplexMatrix lhs =
      (id + am.adjoint() * bm) * matcore::solve_hpd(id + bm.adjoint() * bm, id + bm.adjoint() * am);
  const ComplexMatrix s = id + am.adjoint() * am;

  WongReport rep;
  rep.lambda_bestfit = lhs.trace().real() / s.trace().real();
  rep.residual = (lhs - rep.lambda_bestfit * s).norm();
  rep.holds = rep.residual <= tol.bound(lhs.norm());

  const ComplexMatrix s_inv_half = matcore::inverse_sqrt_hpd(s);
  const ComplexMatrix compressed = s_inv_half * lhs * s_inv_half;
  rep.projector_lambda = compressed.trace().real() / 2.0;
  rep.projector_residual = (compressed - rep.projector_lambda * id).norm();

  rep.isoclinic = subspaces::isoclinic_check(graph_subspace(a), graph_subspace(b), tol);
  rep.consistent = rep.holds == rep.isoclinic.isoclinic;
  return rep;
}

std::pair<GraphSubspaceSpec, GraphSubspaceSpec> wong_example_pair() {
  const double r3 = std::sqrt(3.0);
  ComplexMatrix a(2, 2);
  a << 1.0, 0.0, 0.0, -1.0;
  ComplexMatrix b(2, 2);
  b << (r3 + 1.0) / (r3 - 1.0), 0.0, 0.0, 0.0;
  return {GraphSubspaceSpec(a), GraphSubspaceSpec(b)};
}

}  // namespace isoclinic::gallery
