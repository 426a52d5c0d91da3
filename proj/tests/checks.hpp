#pragma once

// Randomised law checks and golden-file comparison, shared by the standalone
// property runner and the acceptance gate.

#include <string>

namespace pert::checks {

struct Outcome {
  bool ok = true;
  int cases = 0;
  std::string detail;  // first failure, if any
};

/// Ring laws, multiplicative inverse and the product rule on random rational series.
Outcome series_laws(int count, unsigned seed);

/// Parse/format round trip and exact evaluation against an independent tree
/// evaluator on random expressions.
Outcome parser_laws(int count, unsigned seed);

/// Every <name>.args in `dir` (one argument per line) must reproduce
/// <name>.out byte for byte, twice in a row.
Outcome golden_files(const std::string& dir);

}  // namespace pert::checks
