#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lef/lefschetz.hpp"

namespace lef::cli {

// One grid of family decisions: the cell order is t, then a, then
// characteristic, and the output row order always matches it regardless of
// how the cells were scheduled.
struct SweepSpec {
  unsigned t_min = 1;
  unsigned t_max = 1;
  std::vector<std::string> a_values;          // parsed per characteristic
  std::vector<std::uint32_t> characteristics;
  LefschetzProperty property = LefschetzProperty::WLP;
  std::string output_format = "table";        // "table" or "structured"
};

std::string run_sweep(const SweepSpec& spec);

// Whole command-line tool; args excludes the program name. Exit codes:
// 0 success (verdicts are data, not exit codes), 2 usage error, 3 domain
// error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lef::cli
