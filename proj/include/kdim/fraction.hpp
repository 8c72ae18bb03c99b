#pragma once

// Fractions whose denominators are certified products of the generators
// T, L, (L-T) and [P^n] = T^n + ... + L^n (n >= 1).

#include "kdim/errors.hpp"
#include "kdim/tlpoly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kdim {

struct DenominatorFactor {
  enum class Kind { Tau, Lefschetz, LefMinusTau, ProjectiveSpace };
  Kind kind = Kind::Tau;
  unsigned n = 0;  // only meaningful for ProjectiveSpace, n >= 1

  static DenominatorFactor tau() { return {Kind::Tau, 0}; }
  static DenominatorFactor lefschetz() { return {Kind::Lefschetz, 0}; }
  static DenominatorFactor lef_minus_tau() { return {Kind::LefMinusTau, 0}; }
  static DenominatorFactor projective_space(unsigned n);

  /// Exact syntactic match against a generator; no factoring.
  static std::optional<DenominatorFactor> recognize(const TLPoly& p);

  TLPoly polynomial() const;
  std::string to_string() const;
  auto operator<=>(const DenominatorFactor&) const = default;
};

/// Multiset of generators with multiplicities.
class FactorList {
 public:
  FactorList() = default;
  FactorList(std::initializer_list<std::pair<DenominatorFactor, unsigned>> init);

  void add(const DenominatorFactor& f, unsigned multiplicity = 1);
  /// Remove one copy; returns false when absent.
  bool remove_one(const DenominatorFactor& f);
  bool empty() const { return factors_.empty(); }
  const std::map<DenominatorFactor, unsigned>& factors() const { return factors_; }

  TLPoly expand() const;
  std::string to_string() const;

  FactorList& operator*=(const FactorList& other);
  friend FactorList operator*(FactorList a, const FactorList& b) { return a *= b; }
  /// Factorwise maximum of multiplicities.
  static FactorList lcm(const FactorList& a, const FactorList& b);
  /// a / b where b is a sub-multiset of a.
  static FactorList quotient(const FactorList& a, const FactorList& b);
  friend bool operator==(const FactorList&, const FactorList&) = default;

 private:
  std::map<DenominatorFactor, unsigned> factors_;
};

/// Attempt to write p as sign * (product of generators) by trial division.
/// Used only to certify invertibility of internally computed elements.
struct SignedFactorization {
  int sign = 1;
  FactorList factors;
};
std::optional<SignedFactorization> factor_over_generators(const TLPoly& p);

// Numerators must provide: +, -, unary -, *, ==, is_zero(), multiplication by TLPoly,
// and a free function try_divide(Num, TLPoly) -> std::optional<Num>.
inline std::optional<TLPoly> try_divide(const TLPoly& num, const TLPoly& by) {
  return num.try_divide(by);
}

template <class Num>
class Fraction {
 public:
  Fraction() = default;
  Fraction(Num numerator) : num_(std::move(numerator)) {}  // NOLINT(google-explicit-constructor)
  Fraction(Num numerator, FactorList denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  /// Denominator given as explicit polynomial factors; each must be a generator.
  static Fraction with_factors(Num numerator, const std::vector<TLPoly>& denominator_factors) {
    FactorList den;
    for (const auto& f : denominator_factors) {
      auto g = DenominatorFactor::recognize(f);
      if (!g) throw DomainError("denominator factor " + f.to_string() + " is outside the permitted set");
      den.add(*g);
    }
    return Fraction(std::move(numerator), std::move(den));
  }

  const Num& numerator() const { return num_; }
  const FactorList& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Cancel generators that divide the numerator exactly.
  Fraction reduced() const {
    Fraction out = *this;
    for (const auto& [f, mult] : den_.factors()) {
      const TLPoly fp = f.polynomial();
      for (unsigned i = 0; i < mult; ++i) {
        auto q = try_divide(out.num_, fp);
        if (!q) break;
        out.num_ = std::move(*q);
        out.den_.remove_one(f);
      }
    }
    return out;
  }

  /// The numerator if the denominator cancels completely.
  std::optional<Num> as_integral() const {
    Fraction r = reduced();
    if (!r.den_.empty()) return std::nullopt;
    return r.num_;
  }

  Fraction operator-() const { return Fraction(-num_, den_); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    FactorList common = FactorList::lcm(a.den_, b.den_);
    Num lhs = a.num_ * FactorList::quotient(common, a.den_).expand();
    Num rhs = b.num_ * FactorList::quotient(common, b.den_).expand();
    return Fraction(lhs + rhs, std::move(common)).reduced();
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_).reduced();
  }
  friend Fraction operator*(const Fraction& a, const TLPoly& p) {
    return Fraction(a.num_ * p, a.den_).reduced();
  }
  /// Divide by a product of generators.
  Fraction divided_by(const FactorList& factors) const {
    return Fraction(num_, den_ * factors).reduced();
  }

  /// Equality by cross-multiplication; Z[T, L] is an integral domain.
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ * b.den_.expand() == b.num_ * a.den_.expand();
  }

  static Fraction one() { return Fraction(Num::one()); }
  static Fraction zero() { return Fraction(Num::zero()); }

  std::string to_string() const {
    if (den_.empty()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  Num num_{};
  FactorList den_;
};

using TLFraction = Fraction<TLPoly>;

/// Solve a*x = rhs where a is a certified product of generators.
TLFraction solve_linear(const FactorList& a, const TLFraction& rhs);

/// [GL_n] = prod_{i=0}^{n-1} (L^n - L^i T^(n-i)).
TLPoly gl_polynomial(unsigned n);
/// The same element as a product of generators: L^(n(n-1)/2) (L-T)^n prod_{k=1}^{n-1} [P^k].
FactorList gl_factors(unsigned n);

}  // namespace kdim
