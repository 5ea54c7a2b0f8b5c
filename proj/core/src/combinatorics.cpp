#include "rindler_ferm/combinatorics.hpp"

#include <algorithm>
#include <limits>

#include "rindler_ferm/errors.hpp"

namespace rindler_ferm {

namespace {

void require_range(const char* what, int n, int m, int hi) {
  if (n < 1 || m < 0 || m > hi)
    throw DomainError(std::string(what) + ": m=" + std::to_string(m) + " outside [0, " + std::to_string(hi) +
                      "] for n=" + std::to_string(n));
}

Count gcd(Count a, Count b) {
  while (b != 0) {
    const Count t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Count checked_mul(Count a, Count b) {
  if (a != 0 && b > std::numeric_limits<Count>::max() / a) throw DomainError("count overflow");
  return a * b;
}

// Counts nondecreasing sequences of `m` labels drawn from `labels` (canonical
// order) that pass xi_admissible.
Count count_sequences(const std::vector<ModeLabel>& labels, int m, std::vector<ModeLabel>& prefix, std::size_t start) {
  if (static_cast<int>(prefix.size()) == m) return xi_admissible(prefix) ? 1 : 0;
  Count total = 0;
  for (std::size_t i = start; i < labels.size(); ++i) {
    prefix.push_back(labels[i]);
    // Repeats are generated on purpose; xi_admissible rejects them.
    total += count_sequences(labels, m, prefix, i);
    prefix.pop_back();
  }
  return total;
}

}  // namespace

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

double to_double(Count value) noexcept { return static_cast<double>(value); }

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i; split i across both factors so
    // the product stays representable up to the final value.
    const Count g = gcd(result, static_cast<Count>(i));
    const Count factor = static_cast<Count>(n - k + i) / (static_cast<Count>(i) / g);
    result = checked_mul(result / g, factor);
  }
  return result;
}

Count upsilon(int n, int m) {
  require_range("upsilon", n, m, 2 * n);
  Count total = 0;
  for (int p = 0; p <= m / 2; ++p)
    total += checked_mul(checked_mul(binomial(n - p, m - 2 * p), binomial(n, p)), Count{1} << (m - 2 * p));
  return total;
}

Count chi(int n, int m) {
  require_range("chi", n, m, n);
  return binomial(n, m);
}

int max_block_excitation(ScenarioKind scenario, int n) {
  switch (scenario) {
    case ScenarioKind::VacOneDirac:
      return 2 * n - 1;
    case ScenarioKind::BellDirac:
      return 2 * n - 2;
    case ScenarioKind::VacOneSpinless:
      return n - 1;
  }
  return -1;
}

Count block_multiplicity(ScenarioKind scenario, int n, int m) {
  const int hi = max_block_excitation(scenario, n);
  require_range("block_multiplicity", n, m, hi);
  return binomial(hi, m);
}

Count block_multiplicity_inclusion_exclusion(ScenarioKind scenario, int n, int m) {
  require_range("block_multiplicity", n, m, max_block_excitation(scenario, n));
  switch (scenario) {
    case ScenarioKind::VacOneDirac:
      return upsilon(n, m) - binomial(2 * n - 1, m - 1);
    case ScenarioKind::BellDirac:
      return upsilon(n, m) + binomial(2 * n - 2, m - 2) - 2 * binomial(2 * n - 1, m - 1);
    case ScenarioKind::VacOneSpinless:
      return chi(n, m) - binomial(n - 1, m - 1);
  }
  return 0;
}

Count enumerate_admissible_dirac(int n, int m) {
  require_range("enumerate_admissible_dirac", n, m, 2 * n);
  const auto labels = FieldKind::dirac(n).labels();
  std::vector<ModeLabel> prefix;
  return count_sequences(labels, m, prefix, 0);
}

Count enumerate_admissible_spinless(int n, int m) {
  require_range("enumerate_admissible_spinless", n, m, n);
  const auto labels = FieldKind::spinless(n).labels();
  std::vector<ModeLabel> prefix;
  return count_sequences(labels, m, prefix, 0);
}

Count enumerate_admissible_avoiding(const FieldKind& field, int m, const std::vector<ModeLabel>& excluded) {
  std::vector<ModeLabel> labels;
  for (const auto& label : field.labels())
    if (std::find(excluded.begin(), excluded.end(), label) == excluded.end()) labels.push_back(label);
  if (m < 0 || m > static_cast<int>(labels.size())) return 0;
  std::vector<ModeLabel> prefix;
  return count_sequences(labels, m, prefix, 0);
}

std::vector<CountReport> verify_counting_identities(int n_max) {
  std::vector<CountReport> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m <= 2 * n; ++m) {
      out.push_back({"upsilon_sum_vs_binomial", n, m, upsilon(n, m), binomial(2 * n, m)});
      out.push_back({"upsilon_enumeration", n, m, enumerate_admissible_dirac(n, m), upsilon(n, m)});
    }
    for (int m = 0; m <= n; ++m)
      out.push_back({"chi_enumeration", n, m, enumerate_admissible_spinless(n, m), chi(n, m)});

    const auto dirac = FieldKind::dirac(n);
    const auto spinless = FieldKind::spinless(n);
    const std::vector<ModeLabel> one_dirac{{1, Spin::Up}};
    const std::vector<ModeLabel> two_dirac{{1, Spin::Up}, {1, Spin::Down}};
    const std::vector<ModeLabel> one_spinless{{1, Spin::None}};
    for (auto scenario : {ScenarioKind::VacOneDirac, ScenarioKind::BellDirac, ScenarioKind::VacOneSpinless}) {
      const char* name = scenario == ScenarioKind::VacOneDirac ? "B_m"
                         : scenario == ScenarioKind::BellDirac ? "B'_m"
                                                               : "B''_m";
      for (int m = 0; m <= max_block_excitation(scenario, n); ++m) {
        const Count closed = block_multiplicity(scenario, n, m);
        out.push_back({std::string(name) + "_inclusion_exclusion", n, m,
                       block_multiplicity_inclusion_exclusion(scenario, n, m), closed});
        Count direct = 0;
        if (scenario == ScenarioKind::VacOneDirac) direct = enumerate_admissible_avoiding(dirac, m, one_dirac);
        if (scenario == ScenarioKind::BellDirac) direct = enumerate_admissible_avoiding(dirac, m, two_dirac);
        if (scenario == ScenarioKind::VacOneSpinless) direct = enumerate_admissible_avoiding(spinless, m, one_spinless);
        out.push_back({std::string(name) + "_enumeration", n, m, direct, closed});
      }
    }
  }
  return out;
}

}  // namespace rindler_ferm
