#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "rindler_ferm/fock.hpp"
#include "rindler_ferm/rindler.hpp"

namespace rindler_ferm {

/// Which Minkowski state Alice and Rob share, and which modes Rob holds.
///
/// Alice is a two-level system in every scenario. Level 0 is her vacuum
/// (VacOne*) or her first Bell mode; level 1 is her excitation or second
/// Bell mode.
struct Scenario {
  ScenarioKind kind = ScenarioKind::VacOneDirac;
  std::vector<ModeLabel> rob_modes;

  static Scenario vac_one_dirac(ModeLabel rob = {1, Spin::Up});
  static Scenario bell_dirac(ModeLabel first = {1, Spin::Up}, ModeLabel second = {1, Spin::Down});
  static Scenario vac_one_spinless(int rob_momentum = 1);
  /// The default Rob modes for `kind`.
  static Scenario standard(ScenarioKind kind);

  FieldType field_type() const noexcept { return field_type_of(kind); }
};

/// Throws ValidationError when the scenario does not fit the field (wrong
/// field type, wrong number of Rob modes, coincident Bell modes, invalid label).
void validate(const Scenario& scenario, const FieldKind& field);

/// Joint space sizes above this refuse the brute-force path.
inline constexpr std::uint64_t kMaxJointAmplitudes = std::uint64_t{1} << 24;

/// Largest side handed to the dense Hermitian eigensolver.
inline constexpr std::uint64_t kMaxDenseSide = std::uint64_t{1} << 13;

/// Sparse Hermitian operator on Alice (x) region I.
///
/// Basis index = alice * 2^S + occupation bits, i.e. Alice level major and
/// occupation bitset ascending.
class BipartiteMatrix {
 public:
  using Index = std::uint64_t;
  using Key = std::pair<Index, Index>;
  using Map = std::map<Key, Amplitude>;

  explicit BipartiteMatrix(int rob_slots);

  int rob_slots() const noexcept { return rob_slots_; }
  Index dimension() const noexcept { return Index{2} << rob_slots_; }

  Index index(std::uint8_t alice, OccupationSet rob) const noexcept {
    return (Index{alice} << rob_slots_) | rob.bits();
  }
  std::uint8_t alice_of(Index i) const noexcept { return static_cast<std::uint8_t>(i >> rob_slots_); }
  OccupationSet rob_of(Index i) const noexcept { return OccupationSet(i & ((Index{1} << rob_slots_) - 1)); }

  void add(Index row, Index col, Amplitude value);
  /// Adds `value` at (row, col) and its conjugate at (col, row); once on the diagonal.
  void add_hermitian(Index row, Index col, Amplitude value);

  Amplitude at(Index row, Index col) const;
  const Map& entries() const noexcept { return entries_; }

  double trace() const;
  /// max |A_ij - conj(A_ji)|.
  double hermiticity_error() const;
  /// Tr(A^2) for Hermitian A.
  double purity() const;
  /// max |A_ij - B_ij| over the union of stored entries.
  double max_abs_difference(const BipartiteMatrix& other) const;

  /// Ascending eigenvalues by dense diagonalization. CapacityError above kMaxDenseSide.
  std::vector<double> eigenvalues() const;

  /// "row,col,re,im" lines in (row, col) order, 17 significant digits, LF endings.
  void write_csv(std::ostream& out) const;

 private:
  int rob_slots_;
  Map entries_;
};

using DensityMatrix = BipartiteMatrix;

/// D_i^m = |C^0|^2 tan^{2m} r / cos^i r.
struct DCoefficients {
  double c0 = 1.0;
  double tan_r = 0.0;
  double cos_r = 1.0;

  static DCoefficients of(const FieldKind& field, const SqueezeParam& r);
  double d(int i, int m) const;
};

/// (1/sqrt 2)(|0>_A |rob_0> + |1>_A |rob_1>), Rob factors in Rindler modes.
/// CapacityError when the joint space exceeds kMaxJointAmplitudes.
StateVector build_joint_state(const Scenario& scenario, const FieldKind& field, const SqueezeParam& r);

/// rho[(a,o),(a',o')] = sum_v amp(a,o,v) conj(amp(a',o',v)).
DensityMatrix trace_out_region_iv(const StateVector& joint, const FieldKind& field);

/// Direct construction from D_i^m and the admissible-subset sums.
DensityMatrix analytic_density(const Scenario& scenario, const FieldKind& field, const SqueezeParam& r);

struct DensityDiagnostics {
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;

  bool ok(double trace_tol = 1e-12, double hermitian_tol = 1e-12, double psd_tol = 1e-10) const noexcept {
    return trace_error <= trace_tol && hermiticity_error <= hermitian_tol && min_eigenvalue >= -psd_tol;
  }
};

DensityDiagnostics diagnose(const DensityMatrix& rho);

}  // namespace rindler_ferm
