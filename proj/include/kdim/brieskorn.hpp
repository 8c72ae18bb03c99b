#pragma once

// Rational-homology-manifold test for Brieskorn-Pham singularities
// x_1^a_1 + ... + x_n^a_n = 0 at the origin.

#include <optional>
#include <string>
#include <vector>

namespace kdim {

struct BrieskornResult {
  bool rhm = false;
  /// Lexicographically first (b_1..b_n), 1 <= b_i < a_i, with sum b_i / a_i an integer.
  std::optional<std::vector<long>> witness;
  std::string to_string() const;
};

/// Needs n >= 2 and every a_i >= 2; throws DomainError otherwise.
BrieskornResult brieskorn_rhm(const std::vector<long>& exponents);

}  // namespace kdim
