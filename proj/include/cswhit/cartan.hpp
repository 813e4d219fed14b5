#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cswhit {

// Contract violations (bad input for an operation's stated domain).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed textual input (CLI arguments, serialized data).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple type from the Cartan-Killing classification, e.g. A2, B2, G2.
struct CartanType {
  Family family;
  int rank;

  CartanType(Family f, int r);

  // Parses strings like "A2", "G2", "D4". Throws ParseError on malformed
  // input and DomainError when the rank is inadmissible for the family.
  static CartanType parse(const std::string& s);

  std::string to_string() const;

  // Cartan pairings <alpha_i, alpha_j^vee>, row-major rank x rank.
  // Column j is the simple coroot alpha_j^vee in fundamental-coweight
  // coordinates.
  std::vector<int> cartan_matrix() const;

  // Number of positive roots per the classification tables.
  int positive_root_count() const;

  bool operator==(const CartanType&) const = default;
};

}  // namespace cswhit
