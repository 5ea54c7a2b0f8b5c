#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "rindler_ferm/errors.hpp"
#include "rindler_ferm/rindler.hpp"

namespace rindler_ferm {
namespace {

constexpr ModeLabel kUp1{1, Spin::Up};
constexpr ModeLabel kDown1{1, Spin::Down};

std::vector<FieldKind> oracle_fields() {
  std::vector<FieldKind> out;
  for (int n = 1; n <= 4; ++n) out.push_back(FieldKind::dirac(n));
  for (int n = 1; n <= 6; ++n) out.push_back(FieldKind::spinless(n));
  return out;
}

TEST(SqueezeParam, Domain) {
  EXPECT_NO_THROW(SqueezeParam(0.0));
  EXPECT_NO_THROW(SqueezeParam(std::numbers::pi / 4));
  EXPECT_THROW(SqueezeParam(-0.01), DomainError);
  EXPECT_THROW(SqueezeParam(0.8), DomainError);
  EXPECT_THROW(SqueezeParam(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_EQ(SqueezeParam(std::numbers::pi / 4).tan(), 1.0);
}

TEST(FromAcceleration, Examples) {
  EXPECT_EQ(from_acceleration(std::numeric_limits<double>::infinity(), 1.0, 1.0).value(), std::numbers::pi / 4);
  // k0 c / a = ln 2 / pi, so tan r = 1/2.
  const double a = std::numbers::pi / std::numbers::ln2;
  EXPECT_NEAR(from_acceleration(a, 1.0, 1.0).value(), std::atan(0.5), 1e-15);
  EXPECT_NEAR(from_acceleration(1e-6, 1.0, 1.0).value(), 0.0, 1e-300);
  EXPECT_NEAR(from_acceleration(1e12, 1.0, 1.0).value(), std::numbers::pi / 4, 1e-11);
}

TEST(FromAcceleration, StrictlyIncreasingInAcceleration) {
  double previous = -1.0;
  for (double a = 0.5; a < 200.0; a *= 1.3) {
    const double r = from_acceleration(a, 2.0, 1.0).value();
    EXPECT_GT(r, previous);
    previous = r;
  }
}

TEST(FromAcceleration, RejectsNonPositiveInput) {
  EXPECT_THROW(from_acceleration(0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(from_acceleration(1.0, -1.0, 1.0), DomainError);
  EXPECT_THROW(from_acceleration(1.0, 1.0, 0.0), DomainError);
}

TEST(VacuumCoefficients, Invariants) {
  const SqueezeParam r(0.37);
  const auto dirac = vacuum_coefficients(FieldKind::dirac(3), r);
  const auto spinless = vacuum_coefficients(FieldKind::spinless(3), r);
  EXPECT_NEAR(dirac.c0, std::pow(std::cos(0.37), 6), 1e-15);
  EXPECT_NEAR(spinless.c0, std::pow(std::cos(0.37), 3), 1e-15);
  for (int m = 0; m < 6; ++m) {
    EXPECT_NEAR(dirac.cm(m), dirac.c0 * std::pow(std::tan(0.37), m), 1e-15);
    EXPECT_NEAR(dirac.am(m), dirac.c0 * std::pow(std::tan(0.37), m) / std::cos(0.37), 1e-15);
  }
}

TEST(BuildVacuum, DiracSingleMode) {
  const auto field = FieldKind::dirac(1);
  const SqueezeParam r(0.4);
  const StateVector vac = build_vacuum(field, r);
  const double c2 = std::pow(std::cos(0.4), 2);
  const double t = std::tan(0.4);
  const OccupationSet up = OccupationSet::of(field, std::vector{kUp1});
  const OccupationSet down = OccupationSet::of(field, std::vector{kDown1});
  const OccupationSet both = up.with(1);
  ASSERT_EQ(vac.size(), 4U);
  EXPECT_NEAR(vac.amplitude({0, {}, {}}).real(), c2, 1e-15);
  EXPECT_NEAR(std::abs(vac.amplitude({0, up, up})), c2 * t, 1e-15);
  EXPECT_NEAR(std::abs(vac.amplitude({0, down, down})), c2 * t, 1e-15);
  EXPECT_NEAR(std::abs(vac.amplitude({0, both, both})), c2 * t * t, 1e-15);
  EXPECT_NEAR(norm(vac), 1.0, 1e-12);
}

TEST(BuildVacuum, InertialLimitIsBareVacuum) {
  for (const auto& field : oracle_fields()) {
    const StateVector vac = build_vacuum(field, SqueezeParam(0.0));
    ASSERT_EQ(vac.size(), 1U);
    EXPECT_EQ(vac.amplitude({}), Amplitude(1.0));
  }
}

TEST(BuildVacuum, SpinlessTwoModes) {
  const SqueezeParam r(0.25);
  const StateVector vac = build_vacuum(FieldKind::spinless(2), r);
  const double c2 = std::pow(std::cos(0.25), 2);
  const double t = std::tan(0.25);
  std::multiset<long> magnitudes;
  for (const auto& [basis, amp] : vac) {
    EXPECT_EQ(basis.region_i, basis.region_iv);
    magnitudes.insert(std::lround(std::abs(amp) / c2 * 1e12));
  }
  EXPECT_EQ(magnitudes, (std::multiset<long>{std::lround(1e12), std::lround(t * 1e12), std::lround(t * 1e12),
                                              std::lround(t * t * 1e12)}));
}

TEST(BuildVacuum, MatchesJordanWignerSqueezedProduct) {
  for (const auto& field : {FieldKind::dirac(1), FieldKind::dirac(2), FieldKind::spinless(3), FieldKind::spinless(4)}) {
    const int slots = field.slot_count();
    for (double r : {0.2, 0.6, std::numbers::pi / 4}) {
      const SqueezeParam sp(r);
      const oracle::Vector expected = oracle::squeezed_vacuum(slots, r, vacuum_coefficients(field, sp).c0);
      const oracle::Vector actual = oracle::to_dense(build_vacuum(field, sp), slots);
      EXPECT_LT((expected - actual).norm(), 1e-13) << to_string(field.type()) << field.mode_count();
    }
  }
}

TEST(BuildVacuum, PairAmplitudeDependsOnlyOnExcitationNumber) {
  const SqueezeParam r(0.5);
  for (const auto& field : {FieldKind::dirac(3), FieldKind::spinless(5)}) {
    std::map<int, double> by_m;
    for (const auto& [basis, amp] : build_vacuum(field, r)) {
      const auto [it, inserted] = by_m.try_emplace(basis.region_i.size(), std::abs(amp));
      if (!inserted) EXPECT_NEAR(it->second, std::abs(amp), 1e-15);
    }
  }
}

TEST(AnnihilationOracle, VacuumIsAnnihilatedByEveryMinkowskiMode) {
  for (const auto& field : oracle_fields()) {
    for (double r : oracle::r_grid(9)) {
      const SqueezeParam sp(r);
      const StateVector vac = build_vacuum(field, sp);
      for (const auto& mode : field.labels())
        EXPECT_LT(norm(minkowski_annihilation(field, mode, sp, vac)), 1e-10)
            << to_string(field.type()) << " n=" << field.mode_count() << " r=" << r << " mode=" << to_string(mode);
    }
  }
}

TEST(AnnihilationOracle, FlippedPairSignIsDetected) {
  const auto field = FieldKind::dirac(2);
  const SqueezeParam r(0.5);
  StateVector vac = build_vacuum(field, r);
  StateVector flipped;
  bool done = false;
  for (const auto& [basis, amp] : vac) {
    const bool flip = !done && basis.region_i.size() == 2;
    done = done || flip;
    flipped.add(basis, flip ? -amp : amp);
  }
  double worst = 0.0;
  for (const auto& mode : field.labels()) worst = std::max(worst, norm(minkowski_annihilation(field, mode, r, flipped)));
  EXPECT_GT(worst, 0.1 * std::sin(0.5) * vacuum_coefficients(field, r).cm(2));
}

TEST(MinkowskiAnnihilation, InertialLimitIsRegionOneAnnihilator) {
  const auto field = FieldKind::dirac(1);
  const StateVector one(BasisState{0, OccupationSet::of(field, std::vector{kUp1}), {}}, 1.0);
  const StateVector out = minkowski_annihilation(field, kUp1, SqueezeParam(0.0), one);
  EXPECT_LT(norm(out - StateVector(BasisState{}, 1.0)), 1e-15);
}

TEST(MinkowskiAnnihilation, UndoesOneParticleExcitation) {
  for (const auto& field : {FieldKind::dirac(2), FieldKind::spinless(3)}) {
    for (double r : {0.0, 0.3, std::numbers::pi / 4}) {
      const SqueezeParam sp(r);
      const StateVector vac = build_vacuum(field, sp);
      for (const auto& mode : field.labels()) {
        const StateVector back = minkowski_annihilation(field, mode, sp, build_one_particle(field, sp, mode));
        EXPECT_LT(phase_insensitive_distance(back, vac), 1e-10);
        EXPECT_NEAR(norm(back), 1.0, 1e-12);
      }
    }
  }
}

TEST(Normalization, UnnormalizedVacuumNormClosedForm) {
  for (const auto& field : oracle_fields()) {
    const int power = field.is_dirac() ? 2 * field.mode_count() : field.mode_count();
    for (double r : oracle::r_grid(9)) {
      const double expected = 1.0 / std::pow(std::cos(r), power);
      EXPECT_NEAR(norm(build_unnormalized_vacuum(field, SqueezeParam(r))) / expected, 1.0, 1e-12);
    }
  }
}

TEST(Normalization, DiracSingleModeGeometricSeries) {
  const double r = 0.45;
  EXPECT_NEAR(norm(build_unnormalized_vacuum(FieldKind::dirac(1), SqueezeParam(r))), 1.0 / std::pow(std::cos(r), 2),
              1e-13);
}

TEST(BuildOneParticle, InertialLimit) {
  const auto field = FieldKind::dirac(3);
  const ModeLabel excited{2, Spin::Down};
  const StateVector one = build_one_particle(field, SqueezeParam(0.0), excited);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one.amplitude({0, OccupationSet::of(field, std::vector{excited}), {}}), Amplitude(1.0));
}

TEST(BuildOneParticle, DiracSingleMode) {
  const auto field = FieldKind::dirac(1);
  const double r = 0.3;
  const StateVector one = build_one_particle(field, SqueezeParam(r), kUp1);
  const OccupationSet up = OccupationSet::of(field, std::vector{kUp1});
  const OccupationSet down = OccupationSet::of(field, std::vector{kDown1});
  ASSERT_EQ(one.size(), 2U);
  EXPECT_NEAR(one.amplitude({0, up, {}}).real(), std::cos(r), 1e-15);
  EXPECT_NEAR(std::abs(one.amplitude({0, up.with(1), down})), std::cos(r) * std::tan(r), 1e-15);
}

TEST(BuildOneParticle, UnitNormOnGrid) {
  for (const auto& field : oracle_fields())
    for (double r : oracle::r_grid(5))
      for (const auto& mode : field.labels()) EXPECT_NEAR(norm(build_one_particle(field, SqueezeParam(r), mode)), 1.0, 1e-12);
}

TEST(BuildOneParticle, AgreesWithMinkowskiCreationOnVacuum) {
  for (const auto& field : oracle_fields()) {
    for (double r : oracle::r_grid(5)) {
      const SqueezeParam sp(r);
      const StateVector vac = build_vacuum(field, sp);
      for (const auto& mode : field.labels()) {
        const StateVector expected = normalized(minkowski_creation(field, mode, sp, vac));
        EXPECT_LT(phase_insensitive_distance(build_one_particle(field, sp, mode), expected), 1e-10);
      }
    }
  }
}

TEST(BuildOneParticle, MatchesJordanWignerCreationExactly) {
  for (const auto& field : {FieldKind::dirac(2), FieldKind::spinless(3)}) {
    const int slots = field.slot_count();
    const double r = 0.55;
    const SqueezeParam sp(r);
    const oracle::Vector vac = oracle::squeezed_vacuum(slots, r, vacuum_coefficients(field, sp).c0);
    for (const auto& mode : field.labels()) {
      const oracle::Vector expected = oracle::minkowski_creation(field.slot_of(mode), slots, r, vac);
      const oracle::Vector actual = oracle::to_dense(build_one_particle(field, sp, mode), slots);
      EXPECT_LT((expected - actual).norm(), 1e-13);
    }
  }
}

TEST(BuildVacuum, RefusesOversizedEnumeration) {
  EXPECT_THROW(build_vacuum(FieldKind::dirac(12), SqueezeParam(0.1)), CapacityError);
}

}  // namespace
}  // namespace rindler_ferm
