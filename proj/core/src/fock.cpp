#include "rindler_ferm/fock.hpp"

#include <algorithm>
#include <cmath>

#include "rindler_ferm/errors.hpp"

namespace rindler_ferm {

OccupationSet OccupationSet::of(const FieldKind& field, std::span<const ModeLabel> labels) {
  if (!xi_admissible(labels)) throw ValidationError("occupation set with a repeated mode violates Pauli exclusion");
  if (field.slot_count() > kMaxSlots) throw CapacityError("more than 64 single-particle slots per sector");
  OccupationSet out;
  for (const auto& label : labels) out = out.with(field.slot_of(label));
  return out;
}

std::vector<int> OccupationSet::slots() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

std::vector<ModeLabel> OccupationSet::labels(const FieldKind& field) const {
  std::vector<ModeLabel> out;
  for (int slot : slots()) out.push_back(field.label_of(slot));
  return out;
}

StateVector::StateVector(const BasisState& state, Amplitude amplitude) { amps_.emplace(state, amplitude); }

void StateVector::add(const BasisState& state, Amplitude amplitude) {
  auto [it, inserted] = amps_.try_emplace(state, amplitude);
  if (!inserted) it->second += amplitude;
}

StateVector& StateVector::prune(double threshold) {
  std::erase_if(amps_, [threshold](const auto& kv) { return std::abs(kv.second) < threshold; });
  return *this;
}

Amplitude StateVector::amplitude(const BasisState& state) const {
  auto it = amps_.find(state);
  return it == amps_.end() ? Amplitude{} : it->second;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  for (const auto& [state, amp] : other.amps_) add(state, amp);
  return prune();
}

StateVector& StateVector::operator-=(const StateVector& other) {
  for (const auto& [state, amp] : other.amps_) add(state, -amp);
  return prune();
}

StateVector& StateVector::operator*=(Amplitude scale) {
  for (auto& kv : amps_) kv.second *= scale;
  return prune();
}

std::optional<LadderResult> apply_ladder(const FieldKind& field, const LadderOp& op, const BasisState& state) {
  const int slot = field.slot_of(op.mode);
  LadderResult out{state, 1};
  OccupationSet& sector = op.sector == Sector::ParticleI ? out.state.region_i : out.state.region_iv;
  if (sector.contains(slot) == op.dagger) return std::nullopt;

  int preceding = sector.count_below(slot);
  if (op.sector == Sector::AntiparticleIV) preceding += state.region_i.size();
  out.sign = (preceding % 2 == 0) ? 1 : -1;
  sector = op.dagger ? sector.with(slot) : sector.without(slot);
  return out;
}

StateVector apply_ladder(const FieldKind& field, const LadderOp& op, const StateVector& state) {
  field.require_valid(op.mode);
  StateVector out;
  for (const auto& [basis, amp] : state) {
    if (auto hit = apply_ladder(field, op, basis)) out.add(hit->state, static_cast<double>(hit->sign) * amp);
  }
  return out.prune();
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  const StateVector& small = a.size() <= b.size() ? a : b;
  const StateVector& large = a.size() <= b.size() ? b : a;
  Amplitude sum{};
  for (const auto& [basis, amp] : small) {
    const Amplitude other = large.amplitude(basis);
    if (other == Amplitude{}) continue;
    sum += (&small == &a) ? std::conj(amp) * other : std::conj(other) * amp;
  }
  return sum;
}

double norm(const StateVector& a) {
  double sum = 0.0;
  for (const auto& [basis, amp] : a) sum += std::norm(amp);
  return std::sqrt(sum);
}

StateVector normalized(const StateVector& a) {
  const double len = norm(a);
  if (len == 0.0) throw DomainError("cannot normalize the zero vector");
  StateVector out = a;
  out *= 1.0 / len;
  return out;
}

double phase_insensitive_distance(const StateVector& a, const StateVector& b) {
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) return (na == nb) ? 0.0 : 1.0;
  const Amplitude overlap = inner_product(b, a);
  const Amplitude phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Amplitude(1.0);
  // || a/|a| - phase b/|b| || with the optimal global phase.
  StateVector diff = (1.0 / na) * a;
  diff -= (phase / nb) * b;
  return norm(diff);
}

}  // namespace rindler_ferm
