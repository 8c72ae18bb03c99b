#pragma once

// The free model of the graded Grothendieck ring: finite Z[T, L]-combinations of
// monomials in declared smooth proper atoms.

#include "kdim/fraction.hpp"
#include "kdim/tlpoly.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace kdim {

/// Commutative product of atoms; the empty product is the point.
class AtomMonomial {
 public:
  AtomMonomial() = default;
  static AtomMonomial atom(const std::string& name, unsigned dim);

  bool is_unit() const { return powers_.empty(); }
  unsigned dim() const { return dim_; }
  const std::map<std::string, unsigned>& powers() const { return powers_; }
  /// The single atom name when this monomial is exactly one atom to the first power.
  std::optional<std::string> single_atom() const;

  friend AtomMonomial operator*(const AtomMonomial& a, const AtomMonomial& b);
  friend bool operator==(const AtomMonomial& a, const AtomMonomial& b) { return a.powers_ == b.powers_; }
  friend bool operator<(const AtomMonomial& a, const AtomMonomial& b) { return a.powers_ < b.powers_; }

  std::string to_string() const;

 private:
  std::map<std::string, unsigned> powers_;
  unsigned dim_ = 0;
};

class MotivicClass {
 public:
  using TermMap = std::map<AtomMonomial, TLPoly>;

  MotivicClass() = default;
  MotivicClass(const TLPoly& coefficient);  // NOLINT(google-explicit-constructor): p * pt
  MotivicClass(long c) : MotivicClass(TLPoly(c)) {}  // NOLINT

  static MotivicClass term(const AtomMonomial& m, const TLPoly& coefficient);
  static MotivicClass atom(const std::string& name, unsigned dim) {
    return term(AtomMonomial::atom(name, dim), TLPoly::one());
  }
  static MotivicClass one() { return MotivicClass(TLPoly::one()); }
  static MotivicClass zero() { return {}; }
  static MotivicClass tau() { return MotivicClass(TLPoly::tau()); }
  static MotivicClass lefschetz() { return MotivicClass(TLPoly::lefschetz()); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TLPoly coefficient(const AtomMonomial& m) const;
  /// The coefficient when the class is a pure polynomial multiple of the point.
  std::optional<TLPoly> as_polynomial() const;

  MotivicClass& operator+=(const MotivicClass& o);
  MotivicClass& operator-=(const MotivicClass& o);
  MotivicClass operator-() const;
  friend MotivicClass operator+(MotivicClass a, const MotivicClass& b) { return a += b; }
  friend MotivicClass operator-(MotivicClass a, const MotivicClass& b) { return a -= b; }
  friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b);
  friend MotivicClass operator*(const MotivicClass& a, const TLPoly& p);
  friend bool operator==(const MotivicClass&, const MotivicClass&) = default;
  MotivicClass pow(unsigned e) const;

  /// Largest dim(monomial) + coefficient degree; nullopt for the zero class.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  std::string to_string() const;

 private:
  void add_term(const AtomMonomial& m, const TLPoly& p);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MotivicClass& c);

/// Coefficientwise division; nullopt unless every coefficient is divisible.
std::optional<MotivicClass> try_divide(const MotivicClass& c, const TLPoly& by);

/// The involution: swap T and L in every coefficient, atoms fixed.
MotivicClass involute(const MotivicClass& c);
MotivicClass pi1(const MotivicClass& c);
MotivicClass pi2(const MotivicClass& c);

/// X + T*L*[P^(k-1)]*Y for a blow-up along a center of codimension k >= 2.
MotivicClass blowup_class(const MotivicClass& x, const MotivicClass& y, int codim);
/// [P^(r-1)] * Y for a projective bundle of rank r >= 1.
MotivicClass proj_bundle_class(const MotivicClass& y, int rank);

using LocalizedClass = Fraction<MotivicClass>;

LocalizedClass gl_class(unsigned n);
LocalizedClass bgl_class(unsigned n);

}  // namespace kdim
