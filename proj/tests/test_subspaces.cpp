#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "isoclinic/gallery.hpp"
#include "isoclinic/qec.hpp"
#include "isoclinic/subspaces.hpp"

using namespace isoclinic;
using namespace isoclinic::subspaces;

namespace {

constexpr double kPi = std::numbers::pi;

Subspace span_of(Eigen::Index n, std::initializer_list<Eigen::Index> axes) {
  ComplexMatrix q = ComplexMatrix::Zero(n, static_cast<Eigen::Index>(axes.size()));
  Eigen::Index col = 0;
  for (auto a : axes) q(a, col++) = 1.0;
  return Subspace(q);
}

// Eigenvalues of Q_V* P_W Q_V, descending. Independent of the SVD route.
std::vector<double> compression_eigenvalues(const Subspace& v, const Subspace& w) {
  const ComplexMatrix pw = w.basis() * w.basis().adjoint();
  const auto e = matcore::hermitian_eig(v.basis().adjoint() * pw * v.basis());
  return {e.values.data(), e.values.data() + e.values.size()};
}

}  // namespace

TEST(SubspaceType, RejectsNonOrthonormalBasis) {
  ComplexMatrix q(3, 2);
  q << 1.0, 1.0, 0.0, 0.0, 0.0, 0.0;
  EXPECT_THROW(Subspace{q}, DomainError);
  EXPECT_THROW(Subspace{ComplexMatrix(3, 0)}, DomainError);
}

TEST(SubspaceFromColumns, Examples) {
  const Subspace e12 = subspace_from_columns(span_of(4, {0, 1}).basis());
  EXPECT_LE((e12.basis() - span_of(4, {0, 1}).basis()).norm(), 1e-15);

  ComplexMatrix raw(4, 2);
  raw << 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, -1.0;
  const Subspace s = subspace_from_columns(raw);
  EXPECT_LE((s.basis() - raw / std::sqrt(2.0)).norm(), 1e-15);

  ComplexMatrix proportional(3, 2);
  proportional << 1.0, 2.0, 1.0, 2.0, 0.0, 0.0;
  try {
    subspace_from_columns(proportional);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("numerical rank 1"), std::string::npos);
  }
}

TEST(CanonicalAngles, Examples) {
  const Subspace v = span_of(3, {0, 1});
  for (double a : canonical_angles(v, v).angles) EXPECT_NEAR(a, 0.0, 1e-7);

  const auto ortho = canonical_angles(span_of(2, {0}), span_of(2, {1}));
  ASSERT_EQ(ortho.angles.size(), 1u);
  EXPECT_NEAR(ortho.angles[0], kPi / 2, 1e-15);

  ComplexMatrix diag_line(2, 1);
  diag_line << 1.0, 1.0;
  const auto quarter = canonical_angles(span_of(2, {0}), subspace_from_columns(diag_line));
  EXPECT_NEAR(quarter.angles[0], kPi / 4, 1e-15);

  EXPECT_THROW(canonical_angles(span_of(3, {0}), span_of(4, {0})), DomainError);
}

TEST(CanonicalAngles, UnequalDimensionsReturnMinCount) {
  const auto a = canonical_angles(span_of(4, {0, 1, 2}), span_of(4, {1}));
  ASSERT_EQ(a.angles.size(), 1u);
  EXPECT_NEAR(a.angles[0], 0.0, 1e-7);
}

TEST(CanonicalAngles, WongPrintedPairMatchesCompressionOracle) {
  const auto [a, b] = gallery::wong_example_pair();
  const Subspace va = gallery::graph_subspace(a);
  const Subspace vb = gallery::graph_subspace(b);
  const auto angles = canonical_angles(va, vb);
  const auto oracle = compression_eigenvalues(va, vb);
  ASSERT_EQ(angles.cosines.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_NEAR(angles.cosines[k] * angles.cosines[k], oracle[k], 1e-12);
  }
  // Frozen from an independent numpy evaluation: eigenvalues 3/4 and 1/2.
  EXPECT_NEAR(oracle[0], 0.75, 1e-12);
  EXPECT_NEAR(oracle[1], 0.5, 1e-12);
  EXPECT_NEAR(angles.angles[0], kPi / 6, 1e-12);
  EXPECT_NEAR(angles.angles[1], kPi / 4, 1e-12);
}

TEST(CanonicalAngles, AnglesAscendingAndCosinesConsistent) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Subspace v = random_subspace(7, 3, seed);
    const Subspace w = random_subspace(7, 3, seed + 500);
    const auto a = canonical_angles(v, w);
    for (std::size_t k = 0; k < a.angles.size(); ++k) {
      EXPECT_NEAR(std::cos(a.angles[k]), a.cosines[k], 1e-12);
      EXPECT_GE(a.angles[k], 0.0);
      EXPECT_LE(a.angles[k], kPi / 2);
      if (k > 0) EXPECT_LE(a.angles[k - 1], a.angles[k]);
    }
  }
}

TEST(CanonicalAngles, OracleEquivalenceWithCompression) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(seed % 11);
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(seed % static_cast<std::uint64_t>(n));
    const Subspace v = random_subspace(n, m, seed);
    const Subspace w = random_subspace(n, m, seed + 10000);
    const auto a = canonical_angles(v, w);
    const auto oracle = compression_eigenvalues(v, w);
    for (std::size_t k = 0; k < a.cosines.size(); ++k) {
      EXPECT_NEAR(a.cosines[k] * a.cosines[k], oracle[k], 1e-10);
    }
  }
}

TEST(CanonicalAngles, UnitaryAndBasisInvariance) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Subspace v = random_subspace(6, 2, seed);
    const Subspace w = random_subspace(6, 2, seed + 1);
    const auto base = canonical_angles(v, w);

    const ComplexMatrix g = random_unitary(6, seed + 2);
    const auto rotated = canonical_angles(Subspace(g * v.basis()), Subspace(g * w.basis()));

    const ComplexMatrix mix = random_unitary(2, seed + 3);
    const auto rebased = canonical_angles(Subspace(v.basis() * mix), w);

    ComplexMatrix swapped = v.basis();
    swapped.col(0).swap(swapped.col(1));
    const auto reordered = canonical_angles(subspace_from_columns(swapped), w);

    for (std::size_t k = 0; k < base.angles.size(); ++k) {
      EXPECT_NEAR(base.cosines[k], rotated.cosines[k], 1e-10);
      EXPECT_NEAR(base.cosines[k], rebased.cosines[k], 1e-10);
      EXPECT_NEAR(base.cosines[k], reordered.cosines[k], 1e-10);
    }
  }
}

TEST(IsoclinicCheck, Examples) {
  const Subspace v = span_of(4, {0, 1});
  const auto same = isoclinic_check(v, v);
  EXPECT_TRUE(same.isoclinic);
  EXPECT_NEAR(same.lambda, 1.0, 1e-15);
  EXPECT_NEAR(same.lambda_angle, 0.0, 1e-7);

  const auto ortho = isoclinic_check(v, span_of(4, {2, 3}));
  EXPECT_TRUE(ortho.isoclinic);
  EXPECT_EQ(ortho.lambda, 0.0);
  EXPECT_NEAR(ortho.lambda_angle, kPi / 2, 1e-15);
  EXPECT_NEAR(ortho.canonical_angle, kPi / 2, 1e-15);

  const auto skew = isoclinic_check(v, span_of(4, {0, 2}));
  EXPECT_FALSE(skew.isoclinic);
  EXPECT_FALSE(skew.equal_angles);
  EXPECT_FALSE(skew.unitary_multiple);
  EXPECT_FALSE(skew.compressions);
  EXPECT_NEAR(skew.spread, 1.0, 1e-15);

  EXPECT_THROW(isoclinic_check(v, span_of(4, {0})), DomainError);
}

TEST(IsoclinicCheck, SymmetricLambda) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Subspace v = random_subspace(8, 3, seed);
    const Subspace w = random_subspace(8, 3, seed + 99);
    EXPECT_NEAR(isoclinic_check(v, w).lambda, isoclinic_check(w, v).lambda, 1e-12);
  }
}

TEST(IsoclinicCheck, ReportsBothAngleConventions) {
  const auto [v, w] = make_isoclinic_pair(6, 2, 0.25, 4);
  const auto rep = isoclinic_check(v, w);
  ASSERT_TRUE(rep.isoclinic);
  EXPECT_NEAR(rep.lambda, 0.25, 1e-12);
  EXPECT_NEAR(rep.canonical_angle, std::acos(0.5), 1e-9);
  EXPECT_NEAR(rep.lambda_angle, std::acos(0.25), 1e-9);
  const double mean_cos = std::cos(rep.canonical_angle);
  EXPECT_NEAR(rep.lambda, mean_cos * mean_cos, 1e-9);
}

TEST(MakeIsoclinicPair, Examples) {
  const auto [v1, w1] = make_isoclinic_pair(6, 2, 1.0, 3);
  EXPECT_LE((v1.basis() - w1.basis()).norm(), 1e-15);

  const auto [v0, w0] = make_isoclinic_pair(6, 2, 0.0, 3);
  EXPECT_LE((v0.basis().adjoint() * w0.basis()).norm(), 1e-14);

  const auto [v, w] = make_isoclinic_pair(6, 2, 0.5, 11);
  const auto rep = isoclinic_check(v, w);
  EXPECT_TRUE(rep.isoclinic);
  EXPECT_NEAR(rep.lambda, 0.5, 1e-10);

  EXPECT_THROW(make_isoclinic_pair(5, 3, 0.5, 0), DomainError);
  EXPECT_THROW(make_isoclinic_pair(6, 2, 1.5, 0), DomainError);
}

TEST(RatioProbe, Examples) {
  const Subspace v = span_of(4, {0, 1});
  const auto same = ratio_probe(v, v, 32, 1);
  EXPECT_NEAR(same.min_ratio, 1.0, 1e-15);
  EXPECT_NEAR(same.max_ratio, 1.0, 1e-15);

  const auto ortho = ratio_probe(v, span_of(4, {2, 3}), 32, 1);
  EXPECT_EQ(ortho.max_ratio, 0.0);

  // Ratios range over [0, 1] on span{e1,e2} vs span{e1,e3}.
  const auto skew = ratio_probe(v, span_of(4, {0, 2}), 200, 5);
  EXPECT_GE(skew.spread(), 0.5);

  EXPECT_THROW(ratio_probe(v, v, 0, 1), DomainError);
}

TEST(RatioProbe, DeterministicAndConstantOnIsoclinicPairs) {
  const auto [v, w] = make_isoclinic_pair(8, 3, 0.64, 21);
  const auto a = ratio_probe(v, w, 100, 9);
  const auto b = ratio_probe(v, w, 100, 9);
  EXPECT_EQ(a.min_ratio, b.min_ratio);
  EXPECT_EQ(a.max_ratio, b.max_ratio);
  EXPECT_LE(a.spread(), 1e-8);
  EXPECT_NEAR(a.min_ratio, 0.8, 1e-10);
}

TEST(FamilyCheck, Examples) {
  EXPECT_TRUE(family_isoclinic_check({span_of(3, {0})}).isoclinic);
  EXPECT_TRUE(family_isoclinic_check({span_of(3, {0})}).pairs.empty());

  const auto fam = family_isoclinic_check({span_of(4, {0, 1}), span_of(4, {2, 3})});
  EXPECT_TRUE(fam.isoclinic);
  ASSERT_EQ(fam.pairs.size(), 1u);
  EXPECT_EQ(fam.pairs[0].report.lambda, 0.0);

  const auto mixed =
      family_isoclinic_check({span_of(4, {0, 1}), span_of(4, {2, 3}), span_of(4, {0, 2})});
  EXPECT_FALSE(mixed.isoclinic);
  EXPECT_EQ(mixed.pairs.size(), 3u);
}

TEST(FamilyCheck, RotatedBitFlipExtractionIsIsoclinic) {
  const auto model = qec::rotate_model(gallery::bitflip_model(0.3), 0.7);
  const auto res = qec::extract_isoclinic_family(gallery::code_c1(), model);
  EXPECT_TRUE(family_isoclinic_check(res.subspaces).isoclinic);
}

TEST(ProjectionType, ValidatesAndRecoversRange) {
  const Subspace v = random_subspace(5, 2, 8);
  const OrthProjection p = v.projection();
  EXPECT_EQ(p.rank(), 2u);
  EXPECT_EQ(p.kernel_basis().cols(), 3);
  EXPECT_NEAR(isoclinic_check(p.range(), v).lambda, 1.0, 1e-12);

  ComplexMatrix not_idem = ComplexMatrix::Identity(2, 2) * 0.5;
  EXPECT_THROW(OrthProjection{not_idem}, DomainError);
  ComplexMatrix not_herm(2, 2);
  not_herm << 1.0, 1.0, 0.0, 0.0;
  EXPECT_THROW(OrthProjection{not_herm}, DomainError);
}
