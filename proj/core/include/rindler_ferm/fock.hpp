#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rindler_ferm/modes.hpp"

namespace rindler_ferm {

using Amplitude = std::complex<double>;

/// Magnitude below which stored amplitudes are dropped after a linear combination.
inline constexpr double kPruneThreshold = 1e-14;

/// Occupied single-particle slots of one sector, one bit per slot. Iterating
/// set bits in increasing order yields the labels in canonical order.
class OccupationSet {
 public:
  static constexpr int kMaxSlots = 64;

  constexpr OccupationSet() noexcept = default;
  constexpr explicit OccupationSet(std::uint64_t bits) noexcept : bits_(bits) {}

  static OccupationSet of(const FieldKind& field, std::span<const ModeLabel> labels);

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int slot) const noexcept { return (bits_ >> slot) & 1U; }
  constexpr OccupationSet with(int slot) const noexcept { return OccupationSet(bits_ | (std::uint64_t{1} << slot)); }
  constexpr OccupationSet without(int slot) const noexcept { return OccupationSet(bits_ & ~(std::uint64_t{1} << slot)); }
  /// Number of occupied slots strictly below `slot`.
  constexpr int count_below(int slot) const noexcept {
    return slot == 0 ? 0 : std::popcount(bits_ & ((std::uint64_t{1} << slot) - 1));
  }

  std::vector<int> slots() const;
  std::vector<ModeLabel> labels(const FieldKind& field) const;

  friend constexpr auto operator<=>(const OccupationSet&, const OccupationSet&) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// |alice> (x) |particles>_I (x) |antiparticles>_IV.
///
/// The ket is c^dag_{p1} ... c^dag_{pk} |0> with p1 < ... < pk over the global
/// slot order: every region-I slot first, then every region-IV slot. The Alice
/// level is an abstract two-level label that carries no fermionic sign.
struct BasisState {
  std::uint8_t alice = 0;
  OccupationSet region_i;
  OccupationSet region_iv;

  friend constexpr auto operator<=>(const BasisState&, const BasisState&) = default;
};

enum class Sector : std::uint8_t { ParticleI, AntiparticleIV };

/// c_{I,mode}, c^dag_{I,mode}, d_{IV,mode} or d^dag_{IV,mode}.
struct LadderOp {
  Sector sector = Sector::ParticleI;
  ModeLabel mode;
  bool dagger = false;

  static LadderOp create_i(ModeLabel m) { return {Sector::ParticleI, m, true}; }
  static LadderOp annihilate_i(ModeLabel m) { return {Sector::ParticleI, m, false}; }
  static LadderOp create_iv(ModeLabel m) { return {Sector::AntiparticleIV, m, true}; }
  static LadderOp annihilate_iv(ModeLabel m) { return {Sector::AntiparticleIV, m, false}; }
};

/// Sparse amplitude map over basis states.
class StateVector {
 public:
  using Map = std::map<BasisState, Amplitude>;

  StateVector() = default;
  StateVector(const BasisState& state, Amplitude amplitude);

  /// Accumulates without pruning; call prune() once the combination is done.
  void add(const BasisState& state, Amplitude amplitude);
  StateVector& prune(double threshold = kPruneThreshold);

  Amplitude amplitude(const BasisState& state) const;
  std::size_t size() const noexcept { return amps_.size(); }
  bool empty() const noexcept { return amps_.empty(); }
  Map::const_iterator begin() const noexcept { return amps_.begin(); }
  Map::const_iterator end() const noexcept { return amps_.end(); }

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(Amplitude scale);

  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(Amplitude s, StateVector a) { return a *= s; }

 private:
  Map amps_;
};

struct LadderResult {
  BasisState state;
  int sign = 1;
};

/// Single basis-state action. Empty when Pauli exclusion kills the term.
std::optional<LadderResult> apply_ladder(const FieldKind& field, const LadderOp& op, const BasisState& state);

/// Linear extension of the basis-state action.
StateVector apply_ladder(const FieldKind& field, const LadderOp& op, const StateVector& state);

/// <a|b>, antilinear in the first argument.
Amplitude inner_product(const StateVector& a, const StateVector& b);

double norm(const StateVector& a);

StateVector normalized(const StateVector& a);

/// Distance between the normalized states after removing the best global phase.
double phase_insensitive_distance(const StateVector& a, const StateVector& b);

}  // namespace rindler_ferm
