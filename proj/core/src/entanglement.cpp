#include "rindler_ferm/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "rindler_ferm/errors.hpp"

namespace rindler_ferm {

namespace {

// Smallest eigenvalue of [[a, b], [conj b, d]].
double min_eigenvalue_2x2(double a, Amplitude b, double d) {
  const double half_sum = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(b));
  const double upper = half_sum + radius;
  // lower * upper = det; avoids cancellation when a, d >= 0.
  if (upper > 0.0 && a >= 0.0 && d >= 0.0) return (a * d - std::norm(b)) / upper;
  return half_sum - radius;
}

struct DisjointSets {
  std::vector<std::size_t> parent;

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

double closed_form_negativity(const SqueezeParam& r) {
  const double c = r.cos();
  return 0.5 * c * c;
}

BipartiteMatrix partial_transpose_alice(const BipartiteMatrix& rho) {
  BipartiteMatrix pt(rho.rob_slots());
  for (const auto& [key, value] : rho.entries()) {
    const auto [row, col] = key;
    pt.add(pt.index(rho.alice_of(col), rho.rob_of(row)), pt.index(rho.alice_of(row), rho.rob_of(col)), value);
  }
  return pt;
}

double negativity_bruteforce(const DensityMatrix& rho) {
  const auto values = partial_transpose_alice(rho).eigenvalues();
  double sum = 0.0;
  for (double v : values)
    if (v < -kNegativeCutoff) sum -= v;
  return sum;
}

double Block2::negative_eigenvalue() const {
  return std::max(0.0, -min_eigenvalue_2x2(top_left.real(), top_right, bottom_right.real()));
}

BlockDecomposition extract_blocks(const BipartiteMatrix& pt) {
  std::vector<BipartiteMatrix::Index> nodes;
  std::unordered_map<BipartiteMatrix::Index, std::size_t> id;
  auto node = [&](BipartiteMatrix::Index i) {
    auto [it, inserted] = id.try_emplace(i, nodes.size());
    if (inserted) nodes.push_back(i);
    return it->second;
  };
  for (const auto& [key, value] : pt.entries()) {
    if (value == Amplitude{}) continue;
    node(key.first);
    node(key.second);
  }

  DisjointSets sets{std::vector<std::size_t>(nodes.size())};
  std::iota(sets.parent.begin(), sets.parent.end(), std::size_t{0});
  for (const auto& [key, value] : pt.entries())
    if (value != Amplitude{} && key.first != key.second) sets.unite(id.at(key.first), id.at(key.second));

  std::map<std::size_t, std::vector<BipartiteMatrix::Index>> components;
  for (std::size_t k = 0; k < nodes.size(); ++k) components[sets.find(k)].push_back(nodes[k]);

  BlockDecomposition out;
  for (auto& [root, members] : components) {
    std::sort(members.begin(), members.end());
    if (members.size() > 2)
      throw StructuralError("partial transpose has a connected component of size " +
                            std::to_string(members.size()) + " (expected 1x1 and 2x2 blocks only)");
    if (members.size() == 1) {
      const double value = pt.at(members[0], members[0]).real();
      if (value < -kNegativeCutoff) throw StructuralError("negative 1x1 block in partial transpose");
      out.singles.push_back({members[0], value});
      continue;
    }
    out.pairs.push_back({members[0], members[1], pt.at(members[0], members[0]), pt.at(members[0], members[1]),
                         pt.at(members[1], members[1])});
  }
  return out;
}

std::map<int, Count> block_census(const Scenario& scenario, const FieldKind& field,
                                  const BlockDecomposition& blocks) {
  validate(scenario, field);
  const BipartiteMatrix layout(field.slot_count());
  std::map<int, Count> census;

  for (const auto& block : blocks.pairs) {
    const auto first_alice = layout.alice_of(block.first);
    const auto second_alice = layout.alice_of(block.second);
    const OccupationSet first_rob = layout.rob_of(block.first);
    const OccupationSet second_rob = layout.rob_of(block.second);
    // Index order puts Alice level 0 first.
    if (first_alice != 0 || second_alice != 1)
      throw StructuralError("2x2 block does not pair Alice level 0 with level 1");

    int m = 0;
    if (scenario.kind == ScenarioKind::BellDirac) {
      // {|0>|m; k2>, |1>|m; k1>}, no diagonal.
      const int k1 = field.slot_of(scenario.rob_modes[0]);
      const int k2 = field.slot_of(scenario.rob_modes[1]);
      const bool basis_ok = first_rob.contains(k2) && !first_rob.contains(k1) && second_rob.contains(k1) &&
                            !second_rob.contains(k2) && first_rob.without(k2) == second_rob.without(k1);
      if (!basis_ok) throw StructuralError("Bell 2x2 block outside the expected basis pair");
      if (block.top_left != Amplitude{} || block.bottom_right != Amplitude{})
        throw StructuralError("Bell 2x2 block has a diagonal element");
      m = second_rob.size() - 1;
    } else {
      // {|0>|m; k>, |1>|m>}, lower-right diagonal absent.
      const int k = field.slot_of(scenario.rob_modes[0]);
      const bool basis_ok = first_rob.contains(k) && !second_rob.contains(k) && first_rob.without(k) == second_rob;
      if (!basis_ok) throw StructuralError("2x2 block outside the expected basis pair");
      if (block.bottom_right != Amplitude{}) throw StructuralError("D_2 term couples inside a 2x2 block");
      m = second_rob.size();
    }
    ++census[m];
  }
  return census;
}

BlockNegativity negativity_blocks(const Scenario& scenario, const FieldKind& field, const SqueezeParam& r) {
  validate(scenario, field);
  const DCoefficients d = DCoefficients::of(field, r);
  const int n = field.mode_count();
  BlockNegativity out;
  for (int m = 0; m <= max_block_excitation(scenario.kind, n); ++m) {
    BlockSpectrum spectrum;
    spectrum.m = m;
    spectrum.multiplicity = block_multiplicity(scenario.kind, n, m);
    if (scenario.kind == ScenarioKind::BellDirac) {
      spectrum.form = BlockForm::OffDiagOnly;
      spectrum.negative_eigenvalue = -min_eigenvalue_2x2(0.0, 0.5 * d.d(2, m), 0.0);
    } else {
      spectrum.form = BlockForm::DiagCoupled;
      spectrum.negative_eigenvalue = -min_eigenvalue_2x2(0.5 * d.d(0, m + 1), 0.5 * d.d(1, m), 0.0);
    }
    spectrum.negative_eigenvalue = std::max(0.0, spectrum.negative_eigenvalue);
    out.value += to_double(spectrum.multiplicity) * spectrum.negative_eigenvalue;
    out.blocks.push_back(spectrum);
  }
  return out;
}

}  // namespace rindler_ferm
