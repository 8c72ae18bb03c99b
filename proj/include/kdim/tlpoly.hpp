#pragma once

// Exact bivariate integer polynomials in the graded indeterminates
// T (the class of a point placed one degree up) and L (the affine line).

#include "kdim/integer.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace kdim {

/// Exponent pair (power of T, power of L).
struct Exponent {
  unsigned tau = 0;
  unsigned lef = 0;

  unsigned degree() const { return tau + lef; }
  auto operator<=>(const Exponent&) const = default;
};

class TLPoly {
 public:
  // Descending lexicographic order on (tau, lef): the first entry is the leading term
  // and iteration order is the printing order.
  using TermMap = std::map<Exponent, Integer, std::greater<>>;

  TLPoly() = default;
  TLPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  TLPoly(long constant) : TLPoly(Integer(constant)) {}  // NOLINT
  TLPoly(int constant) : TLPoly(Integer(constant)) {}  // NOLINT

  static TLPoly monomial(const Integer& coefficient, unsigned tau_exp, unsigned lef_exp);
  static TLPoly tau() { return monomial(1, 1, 0); }
  static TLPoly lefschetz() { return monomial(1, 0, 1); }
  static TLPoly one() { return TLPoly(1); }
  static TLPoly zero() { return {}; }
  /// Parse the polynomial grammar: T, L, integers, + - * ^, parentheses and P(k).
  static TLPoly parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(Exponent e) const;

  /// Largest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  std::optional<Integer> as_constant() const;
  /// Leading term in the descending lex order. Undefined on zero.
  std::pair<Exponent, Integer> leading_term() const { return *terms_.begin(); }

  TLPoly& operator+=(const TLPoly& other);
  TLPoly& operator-=(const TLPoly& other);
  TLPoly& operator*=(const TLPoly& other);
  TLPoly operator-() const;
  friend TLPoly operator+(TLPoly a, const TLPoly& b) { return a += b; }
  friend TLPoly operator-(TLPoly a, const TLPoly& b) { return a -= b; }
  friend TLPoly operator*(const TLPoly& a, const TLPoly& b);
  friend bool operator==(const TLPoly& a, const TLPoly& b) = default;

  TLPoly pow(unsigned exponent) const;

  /// Substitute T -> tau_value, L -> lef_value in an arbitrary commutative ring.
  template <class R>
  R evaluate(const R& tau_value, const R& lef_value, const R& one) const;

  /// Exact quotient if `divisor` divides this polynomial in Z[T, L].
  std::optional<TLPoly> try_divide(const TLPoly& divisor) const;
  /// Throws DomainError on a nonzero remainder.
  TLPoly divide_exact(const TLPoly& divisor) const;

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Integer& c);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const TLPoly& p);

/// Interchange T and L: every exponent (a, b) becomes (b, a).
TLPoly swap_vars(const TLPoly& p);

/// Divide by (T - L) via synthetic division in T over Z[L]; the remainder must vanish.
TLPoly divide_by_tau_minus_lef(const TLPoly& p);

/// A polynomial certified invariant under T <-> L, i.e. an element of Z[T+L, T*L].
class SymPoly {
 public:
  SymPoly() = default;
  /// Throws DomainError unless swap_vars(p) == p.
  static SymPoly certify(TLPoly p);

  const TLPoly& poly() const { return poly_; }
  operator const TLPoly&() const { return poly_; }  // NOLINT(google-explicit-constructor)
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  explicit SymPoly(TLPoly p) : poly_(std::move(p)) {}
  TLPoly poly_;
};

/// Class polynomial of projective k-space: T^k + T^(k-1) L + ... + L^k.
SymPoly pn(unsigned k);

/// k for the identifier shorthand "Pk" (P0, P1, P12, ...) of P(k); nullopt otherwise.
std::optional<unsigned> projective_shorthand(std::string_view name);

struct SymDecomposition {
  SymPoly first;   // symmetric part a
  SymPoly second;  // coefficient b of T
};

/// The unique decomposition p = a + T*b with a, b symmetric.
SymDecomposition sym_decompose(const TLPoly& p);

template <class R>
R TLPoly::evaluate(const R& tau_value, const R& lef_value, const R& one) const {
  R out = one - one;
  // Cache powers; exponents are small in practice.
  std::map<unsigned, R> tau_pow{{0, one}}, lef_pow{{0, one}};
  auto power = [](std::map<unsigned, R>& cache, const R& base, unsigned e) -> const R& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    auto [last, value] = *cache.rbegin();
    R acc = value;
    for (unsigned i = last; i < e; ++i) {
      acc = acc * base;
      cache.emplace(i + 1, acc);
    }
    return cache.at(e);
  };
  for (const auto& [e, c] : terms_) {
    R term = power(tau_pow, tau_value, e.tau) * power(lef_pow, lef_value, e.lef);
    out = out + term * R(c);
  }
  return out;
}

}  // namespace kdim
