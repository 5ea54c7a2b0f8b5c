#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rindler_ferm/entanglement.hpp"
#include "rindler_ferm/errors.hpp"

namespace rindler_ferm {
namespace {

constexpr double kQuarterPi = std::numbers::pi / 4;

std::vector<std::pair<Scenario, FieldKind>> small_cases() {
  return {{Scenario::vac_one_dirac(), FieldKind::dirac(1)},   {Scenario::vac_one_dirac({2, Spin::Down}), FieldKind::dirac(2)},
          {Scenario::bell_dirac(), FieldKind::dirac(1)},      {Scenario::bell_dirac({2, Spin::Up}, {1, Spin::Up}), FieldKind::dirac(2)},
          {Scenario::vac_one_spinless(), FieldKind::spinless(1)}, {Scenario::vac_one_spinless(2), FieldKind::spinless(4)}};
}

std::map<int, Count> census_of(const Scenario& scenario, const FieldKind& field, double r) {
  const auto rho = analytic_density(scenario, field, SqueezeParam(r));
  return block_census(scenario, field, extract_blocks(partial_transpose_alice(rho)));
}

TEST(PartialTranspose, DiagonalUnchanged) {
  BipartiteMatrix rho(2);
  rho.add(0, 0, 0.25);
  rho.add(5, 5, 0.75);
  const auto pt = partial_transpose_alice(rho);
  EXPECT_EQ(pt.entries(), rho.entries());
}

TEST(PartialTranspose, Involution) {
  for (const auto& [scenario, field] : small_cases()) {
    const auto rho = analytic_density(scenario, field, SqueezeParam(0.5));
    EXPECT_EQ(partial_transpose_alice(partial_transpose_alice(rho)).max_abs_difference(rho), 0.0);
    const auto pt = partial_transpose_alice(rho);
    EXPECT_NEAR(pt.trace(), rho.trace(), 1e-15);
    EXPECT_LT(pt.hermiticity_error(), 1e-15);
  }
}

TEST(PartialTranspose, InertialSpectrumIsBellReference) {
  for (const auto& [scenario, field] : small_cases()) {
    const auto values = partial_transpose_alice(analytic_density(scenario, field, SqueezeParam(0.0))).eigenvalues();
    std::vector<double> nonzero;
    for (double v : values)
      if (std::abs(v) > 1e-12) nonzero.push_back(v);
    ASSERT_EQ(nonzero.size(), 4U);
    EXPECT_NEAR(nonzero[0], -0.5, 1e-12);
    for (int i = 1; i < 4; ++i) EXPECT_NEAR(nonzero[static_cast<std::size_t>(i)], 0.5, 1e-12);
  }
}

TEST(NegativityBruteforce, Examples) {
  for (const auto& [scenario, field] : small_cases())
    EXPECT_NEAR(negativity_bruteforce(analytic_density(scenario, field, SqueezeParam(0.0))), 0.5, 1e-12);

  BipartiteMatrix separable(2);
  separable.add(0, 0, 0.5);
  separable.add(6, 6, 0.5);
  EXPECT_EQ(negativity_bruteforce(separable), 0.0);

  const auto field = FieldKind::dirac(2);
  const auto scenario = Scenario::vac_one_dirac();
  const SqueezeParam r(0.3);
  const auto rho = trace_out_region_iv(build_joint_state(scenario, field, r), field);
  EXPECT_NEAR(negativity_bruteforce(rho), 0.5 * std::pow(std::cos(0.3), 2), 1e-10);
  EXPECT_NEAR(negativity_bruteforce(rho), 0.456334, 5e-7);
}

TEST(NegativityBlocks, InfiniteAccelerationLimit) {
  for (const auto& [scenario, field] : small_cases())
    EXPECT_NEAR(negativity_blocks(scenario, field, SqueezeParam(kQuarterPi)).value, 0.25, 1e-12);
}

TEST(NegativityBlocks, SpinlessSingleMode) {
  const double r = 0.42;
  const auto result = negativity_blocks(Scenario::vac_one_spinless(), FieldKind::spinless(1), SqueezeParam(r));
  ASSERT_EQ(result.blocks.size(), 1U);
  EXPECT_EQ(result.blocks[0].m, 0);
  EXPECT_EQ(result.blocks[0].form, BlockForm::DiagCoupled);
  EXPECT_NEAR(result.value, 0.5 * std::pow(std::cos(r), 2), 1e-15);
}

TEST(NegativityBlocks, BellSingleMode) {
  const double r = 0.61;
  const auto result = negativity_blocks(Scenario::bell_dirac(), FieldKind::dirac(1), SqueezeParam(r));
  ASSERT_EQ(result.blocks.size(), 1U);
  EXPECT_EQ(result.blocks[0].multiplicity, Count{1});
  EXPECT_EQ(result.blocks[0].form, BlockForm::OffDiagOnly);
  EXPECT_NEAR(result.blocks[0].negative_eigenvalue, 0.5 * std::pow(std::cos(r), 2), 1e-15);
}

TEST(NegativityBlocks, PerBlockEigenvaluesMatchClosedForms) {
  const double r = 0.5;
  const double c = std::cos(r);
  const double t = std::tan(r);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& b : negativity_blocks(Scenario::vac_one_dirac(), FieldKind::dirac(n), SqueezeParam(r)).blocks)
      EXPECT_NEAR(b.negative_eigenvalue, 0.5 * std::pow(c, 4 * n) * std::pow(t, 2 * b.m), 1e-15);
    for (const auto& b : negativity_blocks(Scenario::bell_dirac(), FieldKind::dirac(n), SqueezeParam(r)).blocks)
      EXPECT_NEAR(b.negative_eigenvalue, 0.5 * std::pow(c, 4 * n - 2) * std::pow(t, 2 * b.m), 1e-15);
    for (const auto& b : negativity_blocks(Scenario::vac_one_spinless(), FieldKind::spinless(n), SqueezeParam(r)).blocks)
      EXPECT_NEAR(b.negative_eigenvalue, 0.5 * std::pow(c, 2 * n) * std::pow(t, 2 * b.m), 1e-15);
  }
}

TEST(NegativityBlocks, AgreesWithBruteForce) {
  for (const auto& [scenario, field] : small_cases()) {
    for (double r : oracle::r_grid(9)) {
      const SqueezeParam sp(r);
      const double brute = negativity_bruteforce(trace_out_region_iv(build_joint_state(scenario, field, sp), field));
      EXPECT_NEAR(negativity_blocks(scenario, field, sp).value, brute, 1e-10);
    }
  }
}

TEST(NegativityBlocks, StrictlyDecreasingInR) {
  for (const auto& [scenario, field] : small_cases()) {
    double previous = 1.0;
    for (double r : oracle::r_grid(33)) {
      const double value = negativity_blocks(scenario, field, SqueezeParam(r)).value;
      EXPECT_LT(value, previous);
      previous = value;
    }
  }
}

TEST(ExtractBlocks, VacOneDiracSingleMode) {
  const auto census = census_of(Scenario::vac_one_dirac(), FieldKind::dirac(1), 0.5);
  EXPECT_EQ(census, (std::map<int, Count>{{0, 1}, {1, 1}}));
}

TEST(ExtractBlocks, BellDiracTwoModes) {
  const auto census = census_of(Scenario::bell_dirac(), FieldKind::dirac(2), 0.5);
  EXPECT_EQ(census, (std::map<int, Count>{{0, 1}, {1, 2}, {2, 1}}));
}

TEST(ExtractBlocks, DiagonalInputHasOnlyScalars) {
  BipartiteMatrix diag(2);
  for (std::uint64_t i = 0; i < 8; ++i) diag.add(i, i, 0.125);
  const auto blocks = extract_blocks(diag);
  EXPECT_TRUE(blocks.pairs.empty());
  EXPECT_EQ(blocks.singles.size(), 8U);
}

TEST(ExtractBlocks, ThreeStateComponentIsStructuralViolation) {
  BipartiteMatrix chain(2);
  chain.add_hermitian(0, 1, 0.1);
  chain.add_hermitian(1, 2, 0.1);
  EXPECT_THROW(extract_blocks(chain), StructuralError);
}

TEST(ExtractBlocks, CensusMatchesMultiplicities) {
  for (int n = 1; n <= 4; ++n) {
    for (auto kind : {ScenarioKind::VacOneDirac, ScenarioKind::BellDirac, ScenarioKind::VacOneSpinless}) {
      const Scenario scenario = Scenario::standard(kind);
      const FieldKind field(field_type_of(kind), n);
      const auto census = census_of(scenario, field, 0.5);
      for (int m = 0; m <= max_block_excitation(kind, n); ++m) {
        const auto it = census.find(m);
        EXPECT_EQ(it == census.end() ? Count{0} : it->second, block_multiplicity(kind, n, m))
            << to_string(kind) << " n=" << n << " m=" << m;
      }
      EXPECT_EQ(census.size(), static_cast<std::size_t>(max_block_excitation(kind, n) + 1));
    }
  }
}

TEST(ExtractBlocks, PairedBlocksReproduceNegativity) {
  const auto field = FieldKind::dirac(3);
  const auto scenario = Scenario::vac_one_dirac({2, Spin::Up});
  const SqueezeParam r(0.35);
  const auto blocks = extract_blocks(partial_transpose_alice(analytic_density(scenario, field, r)));
  double sum = 0.0;
  for (const auto& b : blocks.pairs) sum += b.negative_eigenvalue();
  EXPECT_NEAR(sum, closed_form_negativity(r), 1e-14);
}

TEST(Universality, LargeModeCountsOnAnalyticPath) {
  for (double r : oracle::r_grid(33)) {
    const SqueezeParam sp(r);
    for (int n = 1; n <= 12; ++n) {
      EXPECT_NEAR(negativity_blocks(Scenario::vac_one_dirac(), FieldKind::dirac(n), sp).value,
                  closed_form_negativity(sp), 1e-12);
      EXPECT_NEAR(negativity_blocks(Scenario::bell_dirac(), FieldKind::dirac(n), sp).value,
                  closed_form_negativity(sp), 1e-12);
    }
    for (int n = 1; n <= 64; ++n)
      EXPECT_NEAR(negativity_blocks(Scenario::vac_one_spinless(), FieldKind::spinless(n), sp).value,
                  closed_form_negativity(sp), 1e-12);
  }
}

}  // namespace
}  // namespace rindler_ferm
