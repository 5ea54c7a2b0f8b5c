#pragma once

#include <map>
#include <vector>

#include "rindler_ferm/combinatorics.hpp"
#include "rindler_ferm/density.hpp"

namespace rindler_ferm {

/// Eigenvalues above -kNegativeCutoff count as non-negative.
inline constexpr double kNegativeCutoff = 1e-12;

/// N = cos^2(r) / 2.
double closed_form_negativity(const SqueezeParam& r);

/// Swaps the Alice indices of every entry: (a,o; a',o') -> (a',o; a,o').
BipartiteMatrix partial_transpose_alice(const BipartiteMatrix& rho);

/// Sum of |lambda| over eigenvalues lambda < -kNegativeCutoff of the partial
/// transpose. Dense; CapacityError above kMaxDenseSide.
double negativity_bruteforce(const DensityMatrix& rho);

/// One connected 2x2 component of a sparse Hermitian matrix, in ascending
/// index order.
struct Block2 {
  BipartiteMatrix::Index first = 0;
  BipartiteMatrix::Index second = 0;
  Amplitude top_left;
  Amplitude top_right;
  Amplitude bottom_right;

  double negative_eigenvalue() const;
};

struct Block1 {
  BipartiteMatrix::Index index = 0;
  double value = 0.0;
};

struct BlockDecomposition {
  std::vector<Block2> pairs;
  std::vector<Block1> singles;
};

/// Connected components of the sparsity pattern (stored entries with nonzero
/// value). Throws StructuralError when a component has more than two states or
/// a 1x1 scalar is below -kNegativeCutoff.
BlockDecomposition extract_blocks(const BipartiteMatrix& pt);

enum class BlockForm { DiagCoupled, OffDiagOnly };

/// Count of 2x2 blocks found at each excitation index m. Checks every block
/// against the scenario's expected basis pair and shape, throws StructuralError
/// on mismatch.
std::map<int, Count> block_census(const Scenario& scenario, const FieldKind& field,
                                  const BlockDecomposition& blocks);

struct BlockSpectrum {
  int m = 0;
  BlockForm form = BlockForm::DiagCoupled;
  /// |lambda_m^-|
  double negative_eigenvalue = 0.0;
  Count multiplicity = 0;
};

struct BlockNegativity {
  double value = 0.0;
  std::vector<BlockSpectrum> blocks;
};

/// Negativity from the analytic 2x2 blocks and their binomial multiplicities.
/// Needs no state enumeration, so it runs for any n.
BlockNegativity negativity_blocks(const Scenario& scenario, const FieldKind& field, const SqueezeParam& r);

}  // namespace rindler_ferm
