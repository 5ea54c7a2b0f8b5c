#include "rindler_ferm/rindler.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "rindler_ferm/errors.hpp"

namespace rindler_ferm {

namespace {

void require_enumerable(const FieldKind& field) {
  if (field.slot_count() > kMaxEnumeratedSlots)
    throw CapacityError("state enumeration over " + std::to_string(field.slot_count()) +
                        " slots per sector exceeds the limit of " + std::to_string(kMaxEnumeratedSlots));
}

// Applies `ops` right to left to the bare vacuum and returns the sign picked up.
int string_sign(const FieldKind& field, const std::vector<LadderOp>& ops) {
  BasisState state;
  int sign = 1;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    auto hit = apply_ladder(field, *it, state);
    if (!hit) throw StructuralError("operator string hits Pauli exclusion");
    state = hit->state;
    sign *= hit->sign;
  }
  return sign;
}

std::vector<LadderOp> pair_string(const FieldKind& field, OccupationSet pairs) {
  std::vector<LadderOp> ops;
  for (int slot : pairs.slots()) {
    const ModeLabel mode = field.label_of(slot);
    ops.push_back(LadderOp::create_i(mode));
    ops.push_back(LadderOp::create_iv(mirror(mode)));
  }
  return ops;
}

StateVector vacuum_with_c0(const FieldKind& field, const SqueezeParam& r, double c0) {
  require_enumerable(field);
  const VacuumCoefficients coeffs{c0, r.tan(), r.cos()};
  const std::uint64_t count = std::uint64_t{1} << field.slot_count();
  StateVector out;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const OccupationSet pairs(bits);
    const double amp = coeffs.cm(pairs.size());
    if (amp == 0.0) continue;
    out.add(BasisState{0, pairs, pairs}, pair_sign(field, pairs) * amp);
  }
  return out.prune();
}

}  // namespace

SqueezeParam::SqueezeParam(double r) : r_(r) {
  // Small slack so that grids built as k * (pi/4) / N land on the endpoint.
  constexpr double slack = 1e-15;
  if (!(r >= 0.0) || r > kMax + slack) throw DomainError("r must lie in [0, pi/4], got " + std::to_string(r));
  if (r_ > kMax) r_ = kMax;
}

double SqueezeParam::tan() const noexcept { return r_ == kMax ? 1.0 : std::tan(r_); }
double SqueezeParam::cos() const noexcept { return std::cos(r_); }
double SqueezeParam::sin() const noexcept { return std::sin(r_); }

SqueezeParam from_acceleration(double a, double k0, double c) {
  if (!(a > 0.0) || !(k0 > 0.0) || !(c > 0.0))
    throw DomainError("acceleration, frequency and speed of light must be positive");
  if (std::isinf(a)) return SqueezeParam(SqueezeParam::kMax);
  const double exponent = -std::numbers::pi * k0 * c / a;
  return SqueezeParam(std::atan(std::exp(exponent)));
}

double VacuumCoefficients::cm(int m) const {
  if (m < 0) throw DomainError("negative excitation number");
  return c0 * std::pow(tan_r, m);
}

double VacuumCoefficients::am(int m) const {
  const double sin_r = tan_r * cos_r;
  return cm(m) * cos_r + cm(m + 1) * sin_r;
}

VacuumCoefficients vacuum_coefficients(const FieldKind& field, const SqueezeParam& r) {
  const int power = field.is_dirac() ? 2 * field.mode_count() : field.mode_count();
  return {std::pow(r.cos(), power), r.tan(), r.cos()};
}

int pair_sign(const FieldKind& field, OccupationSet pairs) { return string_sign(field, pair_string(field, pairs)); }

int one_particle_sign(const FieldKind& field, OccupationSet pairs, int excited_slot) {
  if (pairs.contains(excited_slot)) throw DomainError("excited mode is already paired");
  std::vector<LadderOp> ops;
  ops.push_back(LadderOp::create_i(field.label_of(excited_slot)));
  for (const auto& op : pair_string(field, pairs)) ops.push_back(op);
  return string_sign(field, ops);
}

StateVector build_vacuum(const FieldKind& field, const SqueezeParam& r) {
  return vacuum_with_c0(field, r, vacuum_coefficients(field, r).c0);
}

StateVector build_unnormalized_vacuum(const FieldKind& field, const SqueezeParam& r) {
  return vacuum_with_c0(field, r, 1.0);
}

StateVector build_one_particle(const FieldKind& field, const SqueezeParam& r, const ModeLabel& excited) {
  require_enumerable(field);
  const int slot = field.slot_of(excited);
  const VacuumCoefficients coeffs = vacuum_coefficients(field, r);
  const std::uint64_t count = std::uint64_t{1} << field.slot_count();
  StateVector out;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const OccupationSet pairs(bits);
    if (pairs.contains(slot)) continue;
    const double amp = coeffs.am(pairs.size());
    if (amp == 0.0) continue;
    out.add(BasisState{0, pairs.with(slot), pairs}, one_particle_sign(field, pairs, slot) * amp);
  }
  return out.prune();
}

StateVector minkowski_annihilation(const FieldKind& field, const ModeLabel& mode, const SqueezeParam& r,
                                   const StateVector& state) {
  StateVector out = r.cos() * apply_ladder(field, LadderOp::annihilate_i(mode), state);
  out -= r.sin() * apply_ladder(field, LadderOp::create_iv(mirror(mode)), state);
  return out;
}

StateVector minkowski_creation(const FieldKind& field, const ModeLabel& mode, const SqueezeParam& r,
                               const StateVector& state) {
  StateVector out = r.cos() * apply_ladder(field, LadderOp::create_i(mode), state);
  out -= r.sin() * apply_ladder(field, LadderOp::annihilate_iv(mirror(mode)), state);
  return out;
}

}  // namespace rindler_ferm
