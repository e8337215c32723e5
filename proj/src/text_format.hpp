#pragma once

// Tokenizing helpers shared by the EnvElement and VertexState parsers.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace affvoa::text {

struct Factor {
  std::string label;        // E(...), F(...) or H(i)
  std::optional<int> mode;  // x(n) for vertex states
};

struct Term {
  int sign = 1;
  std::string coeff;  // empty, a rational literal, or a parenthesized polynomial
  std::vector<Factor> factors;
  bool vacuum = false;  // ended with |0>
};

/// Splits a sum into terms at depth-0 '+'/'-' and parses each term.
std::vector<Term> parse_sum(std::string_view text);

}  // namespace affvoa::text
