#include "rindler_ferm/density.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_map>

#include "rindler_ferm/errors.hpp"
#include "rindler_ferm/format.hpp"

namespace rindler_ferm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

BasisState with_alice(BasisState state, std::uint8_t alice) {
  state.alice = alice;
  return state;
}

void require_joint_capacity(const FieldKind& field) {
  const int bits = 1 + 2 * field.slot_count();
  if (bits > 24)
    throw CapacityError("joint Alice x I x IV space of 2^" + std::to_string(bits) +
                        " amplitudes exceeds the brute-force limit of 2^24; use the analytic path");
}

}  // namespace

Scenario Scenario::vac_one_dirac(ModeLabel rob) { return {ScenarioKind::VacOneDirac, {rob}}; }

Scenario Scenario::bell_dirac(ModeLabel first, ModeLabel second) {
  return {ScenarioKind::BellDirac, {first, second}};
}

Scenario Scenario::vac_one_spinless(int rob_momentum) {
  return {ScenarioKind::VacOneSpinless, {{rob_momentum, Spin::None}}};
}

Scenario Scenario::standard(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::VacOneDirac:
      return vac_one_dirac();
    case ScenarioKind::BellDirac:
      return bell_dirac();
    case ScenarioKind::VacOneSpinless:
      return vac_one_spinless();
  }
  return vac_one_dirac();
}

void validate(const Scenario& scenario, const FieldKind& field) {
  if (scenario.field_type() != field.type())
    throw ValidationError("scenario " + to_string(scenario.kind) + " needs a " + to_string(scenario.field_type()) +
                          " field, got " + to_string(field.type()));
  const std::size_t expected = scenario.kind == ScenarioKind::BellDirac ? 2 : 1;
  if (scenario.rob_modes.size() != expected)
    throw ValidationError("scenario " + to_string(scenario.kind) + " needs " + std::to_string(expected) +
                          " Rob mode(s)");
  for (const auto& mode : scenario.rob_modes) field.require_valid(mode);
  if (!xi_admissible(scenario.rob_modes))
    throw ValidationError("Bell scenario needs two distinct Rob modes, got " + to_string(scenario.rob_modes[0]) +
                          " twice");
}

BipartiteMatrix::BipartiteMatrix(int rob_slots) : rob_slots_(rob_slots) {
  if (rob_slots < 0 || rob_slots > 62) throw CapacityError("region-I sector too large to index");
}

void BipartiteMatrix::add(Index row, Index col, Amplitude value) {
  auto [it, inserted] = entries_.try_emplace(Key{row, col}, value);
  if (!inserted) it->second += value;
}

void BipartiteMatrix::add_hermitian(Index row, Index col, Amplitude value) {
  add(row, col, value);
  if (row != col) add(col, row, std::conj(value));
}

Amplitude BipartiteMatrix::at(Index row, Index col) const {
  auto it = entries_.find(Key{row, col});
  return it == entries_.end() ? Amplitude{} : it->second;
}

double BipartiteMatrix::trace() const {
  double sum = 0.0;
  for (const auto& [key, value] : entries_)
    if (key.first == key.second) sum += value.real();
  return sum;
}

double BipartiteMatrix::hermiticity_error() const {
  double worst = 0.0;
  for (const auto& [key, value] : entries_)
    worst = std::max(worst, std::abs(value - std::conj(at(key.second, key.first))));
  return worst;
}

double BipartiteMatrix::purity() const {
  double sum = 0.0;
  for (const auto& kv : entries_) sum += std::norm(kv.second);
  return sum;
}

double BipartiteMatrix::max_abs_difference(const BipartiteMatrix& other) const {
  if (other.rob_slots_ != rob_slots_) throw ValidationError("matrices live on different spaces");
  double worst = 0.0;
  for (const auto& [key, value] : entries_)
    worst = std::max(worst, std::abs(value - other.at(key.first, key.second)));
  for (const auto& [key, value] : other.entries_)
    if (!entries_.contains(key)) worst = std::max(worst, std::abs(value));
  return worst;
}

std::vector<double> BipartiteMatrix::eigenvalues() const {
  const Index side = dimension();
  if (side > kMaxDenseSide)
    throw CapacityError("dense eigensolve of side " + std::to_string(side) + " exceeds the limit of " +
                        std::to_string(kMaxDenseSide) + "; use the analytic block path");
  const auto n = static_cast<Eigen::Index>(side);
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [key, value] : entries_)
    dense(static_cast<Eigen::Index>(key.first), static_cast<Eigen::Index>(key.second)) = value;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver did not converge");
  const Eigen::VectorXd& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

void BipartiteMatrix::write_csv(std::ostream& out) const {
  out << "row,col,re,im\n";
  for (const auto& [key, value] : entries_)
    out << key.first << ',' << key.second << ',' << format_real(value.real()) << ',' << format_real(value.imag())
        << '\n';
}

DCoefficients DCoefficients::of(const FieldKind& field, const SqueezeParam& r) {
  const auto coeffs = vacuum_coefficients(field, r);
  return {coeffs.c0, coeffs.tan_r, coeffs.cos_r};
}

double DCoefficients::d(int i, int m) const {
  if (i < 0 || i > 2 || m < 0) throw DomainError("D_i^m needs i in {0,1,2} and m >= 0");
  return c0 * c0 * std::pow(tan_r, 2 * m) / std::pow(cos_r, i);
}

StateVector build_joint_state(const Scenario& scenario, const FieldKind& field, const SqueezeParam& r) {
  validate(scenario, field);
  require_joint_capacity(field);

  const StateVector first = scenario.kind == ScenarioKind::BellDirac
                                ? build_one_particle(field, r, scenario.rob_modes[0])
                                : build_vacuum(field, r);
  const StateVector second = build_one_particle(field, r, scenario.rob_modes.back());

  StateVector joint;
  for (const auto& [basis, amp] : first) joint.add(with_alice(basis, 0), kInvSqrt2 * amp);
  for (const auto& [basis, amp] : second) joint.add(with_alice(basis, 1), kInvSqrt2 * amp);
  return joint.prune();
}

DensityMatrix trace_out_region_iv(const StateVector& joint, const FieldKind& field) {
  DensityMatrix rho(field.slot_count());
  std::unordered_map<std::uint64_t, std::vector<std::pair<BipartiteMatrix::Index, Amplitude>>> by_region_iv;
  for (const auto& [basis, amp] : joint)
    by_region_iv[basis.region_iv.bits()].emplace_back(rho.index(basis.alice, basis.region_i), amp);

  for (const auto& [iv, column] : by_region_iv)
    for (const auto& [row, amp_row] : column)
      for (const auto& [col, amp_col] : column) rho.add(row, col, amp_row * std::conj(amp_col));
  return rho;
}

DensityMatrix analytic_density(const Scenario& scenario, const FieldKind& field, const SqueezeParam& r) {
  validate(scenario, field);
  if (field.slot_count() > kMaxEnumeratedSlots)
    throw CapacityError("analytic density enumeration over " + std::to_string(field.slot_count()) +
                        " slots is too large");
  const DCoefficients d = DCoefficients::of(field, r);
  const std::uint64_t count = std::uint64_t{1} << field.slot_count();
  DensityMatrix rho(field.slot_count());

  auto add = [&rho](std::uint8_t alice_row, OccupationSet row, std::uint8_t alice_col, OccupationSet col,
                    double value) {
    if (value != 0.0) rho.add_hermitian(rho.index(alice_row, row), rho.index(alice_col, col), value);
  };

  if (scenario.kind == ScenarioKind::BellDirac) {
    const int k1 = field.slot_of(scenario.rob_modes[0]);
    const int k2 = field.slot_of(scenario.rob_modes[1]);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      const OccupationSet s(bits);
      const int m = s.size();
      const double half_d2 = 0.5 * d.d(2, m);
      if (!s.contains(k1)) add(0, s.with(k1), 0, s.with(k1), half_d2);
      if (!s.contains(k2)) add(1, s.with(k2), 1, s.with(k2), half_d2);
      if (!s.contains(k1) && !s.contains(k2)) {
        const int sign = one_particle_sign(field, s, k1) * one_particle_sign(field, s, k2);
        add(0, s.with(k1), 1, s.with(k2), sign * half_d2);
      }
    }
    return rho;
  }

  const int k = field.slot_of(scenario.rob_modes[0]);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const OccupationSet s(bits);
    const int m = s.size();
    add(0, s, 0, s, 0.5 * d.d(0, m));
    if (s.contains(k)) continue;
    const int sign = pair_sign(field, s) * one_particle_sign(field, s, k);
    add(0, s, 1, s.with(k), sign * 0.5 * d.d(1, m));
    add(1, s.with(k), 1, s.with(k), 0.5 * d.d(2, m));
  }
  return rho;
}

DensityDiagnostics diagnose(const DensityMatrix& rho) {
  DensityDiagnostics out;
  out.trace_error = std::abs(rho.trace() - 1.0);
  out.hermiticity_error = rho.hermiticity_error();
  const auto values = rho.eigenvalues();
  out.min_eigenvalue = values.empty() ? 0.0 : values.front();
  return out;
}

}  // namespace rindler_ferm
