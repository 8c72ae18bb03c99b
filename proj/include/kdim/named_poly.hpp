#pragma once

// Sparse integer polynomials in arbitrarily named variables (q for point counts,
// u and v for Hodge-Deligne polynomials).

#include "kdim/integer.hpp"

#include <map>
#include <ostream>
#include <string>
#include <string_view>

namespace kdim {

class NamedPoly {
 public:
  using Monomial = std::map<std::string, unsigned>;

  NamedPoly() = default;
  NamedPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  NamedPoly(long constant) : NamedPoly(Integer(constant)) {}  // NOLINT

  static NamedPoly variable(const std::string& name);
  static NamedPoly one() { return NamedPoly(1); }
  static NamedPoly zero() { return {}; }
  /// Parse with the shared grammar; every identifier is a variable.
  static NamedPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  int total_degree() const;

  NamedPoly& operator+=(const NamedPoly& other);
  NamedPoly& operator-=(const NamedPoly& other);
  NamedPoly operator-() const;
  friend NamedPoly operator+(NamedPoly a, const NamedPoly& b) { return a += b; }
  friend NamedPoly operator-(NamedPoly a, const NamedPoly& b) { return a -= b; }
  friend NamedPoly operator*(const NamedPoly& a, const NamedPoly& b);
  friend bool operator==(const NamedPoly&, const NamedPoly&) = default;
  NamedPoly pow(unsigned e) const;

  /// Substitute integers for all variables; throws DomainError if one is unassigned.
  Integer evaluate(const std::map<std::string, Integer>& values) const;

  /// Highest total degree first, ties broken lexicographically.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  std::map<Monomial, Integer> terms_;
};

std::ostream& operator<<(std::ostream& os, const NamedPoly& p);

}  // namespace kdim
