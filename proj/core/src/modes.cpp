#include "rindler_ferm/modes.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "rindler_ferm/errors.hpp"

namespace rindler_ferm {

namespace {

int spin_rank(Spin spin) {
  switch (spin) {
    case Spin::Up:
      return 0;
    case Spin::Down:
      return 1;
    case Spin::None:
      return 0;
  }
  return 0;
}

std::string normalized(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    out.push_back(lower == '_' ? '-' : lower);
  }
  return out;
}

std::string without_dashes(std::string text) {
  std::erase(text, '-');
  return text;
}

}  // namespace

std::strong_ordering canonical_order(const ModeLabel& a, const ModeLabel& b) {
  if (auto cmp = a.momentum <=> b.momentum; cmp != 0) return cmp;
  return spin_rank(a.spin) <=> spin_rank(b.spin);
}

bool xi_admissible(std::span<const ModeLabel> labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) return false;
  return true;
}

FieldKind::FieldKind(FieldType type, int mode_count) : type_(type), modes_(mode_count) {
  if (mode_count < 1) throw ValidationError("mode count must be >= 1, got " + std::to_string(mode_count));
}

bool FieldKind::valid(const ModeLabel& mode) const noexcept {
  if (mode.momentum < 1 || mode.momentum > modes_) return false;
  return is_dirac() ? mode.spin != Spin::None : mode.spin == Spin::None;
}

void FieldKind::require_valid(const ModeLabel& mode) const {
  if (!valid(mode))
    throw ValidationError("mode " + to_string(mode) + " is not valid for a " + to_string(type_) +
                          " field with n=" + std::to_string(modes_));
}

int FieldKind::slot_of(const ModeLabel& mode) const {
  require_valid(mode);
  if (!is_dirac()) return mode.momentum - 1;
  return 2 * (mode.momentum - 1) + (mode.spin == Spin::Down ? 1 : 0);
}

ModeLabel FieldKind::label_of(int slot) const {
  if (slot < 0 || slot >= slot_count()) throw DomainError("slot " + std::to_string(slot) + " out of range");
  if (!is_dirac()) return {slot + 1, Spin::None};
  return {slot / 2 + 1, slot % 2 == 0 ? Spin::Up : Spin::Down};
}

std::vector<ModeLabel> FieldKind::labels() const {
  std::vector<ModeLabel> out;
  out.reserve(static_cast<std::size_t>(slot_count()));
  for (int s = 0; s < slot_count(); ++s) out.push_back(label_of(s));
  return out;
}

FieldType field_type_of(ScenarioKind kind) noexcept {
  return kind == ScenarioKind::VacOneSpinless ? FieldType::SpinlessFermion : FieldType::Dirac;
}

std::string to_string(Spin spin) {
  switch (spin) {
    case Spin::Up:
      return "u";
    case Spin::Down:
      return "d";
    case Spin::None:
      return "";
  }
  return "";
}

std::string to_string(const ModeLabel& mode) { return std::to_string(mode.momentum) + to_string(mode.spin); }

std::string to_string(FieldType type) {
  return type == FieldType::Dirac ? "dirac" : "spinless";
}

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::VacOneDirac:
      return "vac-one-dirac";
    case ScenarioKind::BellDirac:
      return "bell-dirac";
    case ScenarioKind::VacOneSpinless:
      return "vac-one-spinless";
  }
  return "?";
}

ScenarioKind parse_scenario(std::string_view text) {
  // "VacOneDirac", "vac_one_dirac" and "vac-one-dirac" all match.
  const std::string key = without_dashes(normalized(text));
  for (auto kind : {ScenarioKind::VacOneDirac, ScenarioKind::BellDirac, ScenarioKind::VacOneSpinless})
    if (key == without_dashes(to_string(kind))) return kind;
  throw ValidationError("unknown scenario '" + std::string(text) +
                        "' (expected vac-one-dirac, bell-dirac or vac-one-spinless)");
}

FieldType parse_field_type(std::string_view text) {
  const std::string key = normalized(text);
  if (key == "dirac") return FieldType::Dirac;
  if (key == "spinless" || key == "spinless-fermion" || key == "spinlessfermion") return FieldType::SpinlessFermion;
  throw ValidationError("unknown field '" + std::string(text) + "' (expected dirac or spinless)");
}

ModeLabel parse_mode(std::string_view text) {
  ModeLabel mode;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, mode.momentum);
  if (ec != std::errc() || ptr == first) throw ValidationError("bad mode label '" + std::string(text) + "'");
  std::string rest = normalized(std::string_view(ptr, static_cast<std::size_t>(last - ptr)));
  if (rest.empty())
    mode.spin = Spin::None;
  else if (rest == "u" || rest == "up")
    mode.spin = Spin::Up;
  else if (rest == "d" || rest == "down")
    mode.spin = Spin::Down;
  else
    throw ValidationError("bad spin in mode label '" + std::string(text) + "'");
  return mode;
}

}  // namespace rindler_ferm
