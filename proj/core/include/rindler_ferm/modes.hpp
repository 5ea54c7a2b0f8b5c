#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rindler_ferm {

enum class Spin : std::uint8_t { Up, Down, None };

enum class FieldType : std::uint8_t { Dirac, SpinlessFermion };

/// A single-particle mode: abstract momentum index 1..n plus spin. The
/// region-IV partner of a mode is stored under the same label in the
/// antiparticle sector.
struct ModeLabel {
  int momentum = 1;
  Spin spin = Spin::None;

  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

/// Momentum ascending, ties broken Up before Down.
std::strong_ordering canonical_order(const ModeLabel& a, const ModeLabel& b);

/// Pauli admissibility: true iff all labels are pairwise distinct.
bool xi_admissible(std::span<const ModeLabel> labels);

/// Field species plus number of momentum modes n.
///
/// Single-particle slots are numbered in canonical order, so slot ordering and
/// canonical_order agree: Dirac (k, Up) -> 2(k-1), (k, Down) -> 2(k-1)+1;
/// spinless k -> k-1.
class FieldKind {
 public:
  FieldKind(FieldType type, int mode_count);

  static FieldKind dirac(int n) { return {FieldType::Dirac, n}; }
  static FieldKind spinless(int n) { return {FieldType::SpinlessFermion, n}; }

  FieldType type() const noexcept { return type_; }
  int mode_count() const noexcept { return modes_; }
  bool is_dirac() const noexcept { return type_ == FieldType::Dirac; }

  /// S = 2n for Dirac, n for spinless.
  int slot_count() const noexcept { return is_dirac() ? 2 * modes_ : modes_; }

  bool valid(const ModeLabel& mode) const noexcept;
  /// Throws ValidationError when `mode` does not belong to this field.
  void require_valid(const ModeLabel& mode) const;

  int slot_of(const ModeLabel& mode) const;
  ModeLabel label_of(int slot) const;

  /// All labels in canonical order.
  std::vector<ModeLabel> labels() const;

  friend bool operator==(const FieldKind&, const FieldKind&) = default;

 private:
  FieldType type_;
  int modes_;
};

/// The three Alice-Rob settings.
enum class ScenarioKind : std::uint8_t { VacOneDirac, BellDirac, VacOneSpinless };

FieldType field_type_of(ScenarioKind kind) noexcept;

std::string to_string(Spin spin);
std::string to_string(const ModeLabel& mode);
std::string to_string(FieldType type);
std::string to_string(ScenarioKind kind);

/// Accepts "vac-one-dirac", "bell-dirac", "vac-one-spinless" (case-insensitive,
/// '_' accepted for '-'). Throws ValidationError otherwise.
ScenarioKind parse_scenario(std::string_view text);
FieldType parse_field_type(std::string_view text);
/// "3u", "3d" (Dirac) or "3" (spinless).
ModeLabel parse_mode(std::string_view text);

}  // namespace rindler_ferm
