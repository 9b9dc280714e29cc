#pragma once

// Regression ledger of the worked examples: every check evaluates a
// hand-entered expected value against the library.

#include <cstdint>
#include <string>
#include <vector>

#include "octeig/linalg.hpp"

namespace octeig {

struct ExampleCheck {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<ExampleCheck> run_worked_examples(std::uint64_t seed = kDefaultSeed);

}  // namespace octeig
