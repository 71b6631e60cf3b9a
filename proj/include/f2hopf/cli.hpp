#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "f2hopf/coalgebra.hpp"
#include "f2hopf/families.hpp"

namespace f2hopf::cli {

enum class OutputFormat { Text, Json };

struct RunConfig {
  int max_gen_index = kDefaultMaxGen;
  std::int64_t basis_k_bound = 1024;
  std::uint64_t iso_budget = kDefaultIsoBudget;
  OutputFormat output_format = OutputFormat::Text;
  bool timing = false;

  Limits limits() const { return Limits{max_gen_index, basis_k_bound, Limits{}.max_basis_size}; }
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitError = 2;

// Parses "braid:6" style coalgebra specs.
struct CoalgebraSpec {
  Family family;
  std::int64_t k;
};
CoalgebraSpec parse_coalgebra_spec(const std::string& text);

// Runs one invocation; args excludes the program name.  Reports go to out,
// diagnostics to err.  Returns 0 (verified), 1 (falsified) or 2 (error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f2hopf::cli
