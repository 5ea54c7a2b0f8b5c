#pragma once

#include <string>
#include <vector>

#include "rindler_ferm/modes.hpp"

namespace rindler_ferm {

/// Exact count type. C(128, 64) still fits.
__extension__ typedef unsigned __int128 Count;

std::string to_string(Count value);
double to_double(Count value) noexcept;

/// C(n, k), zero when k < 0 or k > n. Exact; throws DomainError on overflow.
Count binomial(int n, int k);

/// Pair-counting sum over p of C(n-p, m-2p) C(n, p) 2^(m-2p). Equals C(2n, m).
/// Throws DomainError unless 0 <= m <= 2n.
Count upsilon(int n, int m);

/// Admissible spinless m-subsets: C(n, m). Throws DomainError unless 0 <= m <= n.
Count chi(int n, int m);

/// Largest m in the block series of a scenario: 2n-1, 2n-2, n-1. Negative when
/// the series is empty (never, for n >= 1).
int max_block_excitation(ScenarioKind scenario, int n);

/// B_m = C(2n-1, m), B'_m = C(2n-2, m), B''_m = C(n-1, m).
Count block_multiplicity(ScenarioKind scenario, int n, int m);

/// The same counts by inclusion-exclusion:
///   Upsilon_m - C(2n-1, m-1)
///   Upsilon_m - 2 C(2n-1, m-1) + C(2n-2, m-2)
///   C(n, m) - C(n-1, m-1)
Count block_multiplicity_inclusion_exclusion(ScenarioKind scenario, int n, int m);

/// Brute-force count of canonically ordered m-tuples of Dirac labels with
/// xi_admissible == true.
Count enumerate_admissible_dirac(int n, int m);

/// Same for spinless labels.
Count enumerate_admissible_spinless(int n, int m);

/// Admissible m-subsets of the field's labels that avoid every label in
/// `excluded`. This is how many 2x2 blocks a Rob configuration can sit in.
Count enumerate_admissible_avoiding(const FieldKind& field, int m, const std::vector<ModeLabel>& excluded);

struct CountReport {
  std::string quantity;
  int n = 0;
  int m = 0;
  Count enumerated = 0;
  Count formula = 0;

  bool matches() const noexcept { return enumerated == formula; }
};

/// Every identity above, for 1 <= n <= n_max and all valid m.
std::vector<CountReport> verify_counting_identities(int n_max);

}  // namespace rindler_ferm
