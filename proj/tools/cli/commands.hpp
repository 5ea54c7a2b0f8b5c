#pragma once

#include <iosfwd>

#include "config.hpp"

namespace rindler_ferm::cli {

/// Negativity vs r as CSV (to config.out, or `out` when empty).
int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

/// Runs the oracle suites and prints one line per check.
int cmd_verify(const SweepConfig& config, std::ostream& out, std::ostream& err);

/// Formula vs structurally extracted 2x2 block multiplicities.
int cmd_blocks(const SweepConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: `rindler_ferm <sweep|verify|blocks> [flags]`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rindler_ferm::cli
