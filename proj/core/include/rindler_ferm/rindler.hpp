#pragma once

#include <numbers>

#include "rindler_ferm/fock.hpp"

namespace rindler_ferm {

/// Acceleration parameter r in [0, pi/4], tan r = exp(-pi k0 c / a).
/// r = pi/4 is the infinite-acceleration limit. The Bogoliubov phase is fixed
/// to zero so every coefficient is real.
class SqueezeParam {
 public:
  static constexpr double kMax = std::numbers::pi / 4.0;

  /// Throws DomainError outside [0, pi/4].
  explicit SqueezeParam(double r);

  double value() const noexcept { return r_; }
  double tan() const noexcept;
  double cos() const noexcept;
  double sin() const noexcept;

 private:
  double r_;
};

/// r from physical acceleration a, mode frequency k0 and the speed of light c.
/// a = +infinity maps to pi/4.
SqueezeParam from_acceleration(double a, double k0, double c);

/// C^m and A^m for the multimode vacuum and one-particle expansions.
struct VacuumCoefficients {
  double c0 = 1.0;
  double tan_r = 0.0;
  double cos_r = 1.0;

  double cm(int m) const;
  /// C^m cos r + C^{m+1} sin r.
  double am(int m) const;
};

/// |C^0| = cos^{2n} r (Dirac), cos^n r (spinless).
VacuumCoefficients vacuum_coefficients(const FieldKind& field, const SqueezeParam& r);

/// Region-IV partner of a region-I mode. Stored under the same label.
constexpr ModeLabel mirror(const ModeLabel& mode) noexcept { return mode; }

/// Sign of the pair string (c^dag_{j1} d^dag_{j1}) ... (c^dag_{jm} d^dag_{jm}) |0>
/// against the basis ket |pairs>_I |pairs>_IV.
int pair_sign(const FieldKind& field, OccupationSet pairs);

/// Sign of c^dag_{excited} (pair string over `pairs`) |0> against the basis ket
/// |pairs + excited>_I |pairs>_IV. `pairs` must not contain `excited`.
int one_particle_sign(const FieldKind& field, OccupationSet pairs, int excited_slot);

/// Largest sector size the state constructors will enumerate (2^S terms).
inline constexpr int kMaxEnumeratedSlots = 22;

/// Minkowski vacuum in Rindler modes: sum over admissible pair sets of
/// C^m sigma |m>_I |m>_IV. Unit norm.
StateVector build_vacuum(const FieldKind& field, const SqueezeParam& r);

/// The same ansatz with C^0 = 1; its norm squared is 1 / |C^0|^2.
StateVector build_unnormalized_vacuum(const FieldKind& field, const SqueezeParam& r);

/// a^dag_{excited} |0> in Rindler modes: sum over pair sets without `excited`
/// of A^m sigma' |m; excited>_I |m>_IV. Unit norm.
StateVector build_one_particle(const FieldKind& field, const SqueezeParam& r, const ModeLabel& excited);

/// a = cos r c_I - sin r d^dag_IV applied to `state`.
StateVector minkowski_annihilation(const FieldKind& field, const ModeLabel& mode, const SqueezeParam& r,
                                   const StateVector& state);

/// a^dag = cos r c^dag_I - sin r d_IV applied to `state`.
StateVector minkowski_creation(const FieldKind& field, const ModeLabel& mode, const SqueezeParam& r,
                               const StateVector& state);

}  // namespace rindler_ferm
