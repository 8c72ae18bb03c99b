#pragma once

// Integer group rings Z[M] of commutative monoids, stored sparsely as
// basis symbol -> nonzero coefficient. Printed as "[8]-[9]" or "2*[1+s]".

#include "kdim/integer.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace kdim {

/// Positive integers under multiplication.
struct NatMonoid {
  using Element = Integer;
  static Element identity() { return 1; }
  static Element multiply(const Element& a, const Element& b) { return a * b; }
  static std::string to_string(const Element& e) { return e.get_str(); }
};

/// Integer polynomials in s with constant term one, under multiplication.
/// Stored densely as (c0 = 1, c1, ..., cn) without trailing zeros.
struct PolyMonoid {
  using Element = std::vector<Integer>;
  static Element identity() { return {Integer(1)}; }
  static Element multiply(const Element& a, const Element& b);
  static std::string to_string(const Element& e);
  /// Throws DomainError if the constant term is not 1.
  static Element make(std::vector<Integer> coefficients);
};

/// Free commutative monoid on named symbols; the identity prints as "1".
struct SymbolMonoid {
  using Element = std::map<std::string, unsigned>;
  static Element identity() { return {}; }
  static Element multiply(const Element& a, const Element& b);
  static std::string to_string(const Element& e);
  /// Parse "A*B^2"; "1" and "pt" denote the identity.
  static Element parse(const std::string& text);
};

template <class M>
class MonoidRing {
 public:
  using Element = typename M::Element;

  MonoidRing() = default;
  MonoidRing(const Integer& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(M::identity(), c);
  }
  MonoidRing(long c) : MonoidRing(Integer(c)) {}  // NOLINT

  static MonoidRing basis(const Element& e, const Integer& coefficient = 1) {
    MonoidRing r;
    r.add_term(e, coefficient);
    return r;
  }
  static MonoidRing one() { return MonoidRing(1); }
  static MonoidRing zero() { return {}; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Element, Integer>& terms() const { return terms_; }

  MonoidRing& operator+=(const MonoidRing& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MonoidRing& operator-=(const MonoidRing& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MonoidRing operator-() const {
    MonoidRing r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend MonoidRing operator+(MonoidRing a, const MonoidRing& b) { return a += b; }
  friend MonoidRing operator-(MonoidRing a, const MonoidRing& b) { return a -= b; }
  friend MonoidRing operator*(const MonoidRing& a, const MonoidRing& b) {
    MonoidRing r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(M::multiply(ea, eb), ca * cb);
    return r;
  }
  friend bool operator==(const MonoidRing&, const MonoidRing&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (c < 0)
        os << '-';
      else if (!first)
        os << '+';
      first = false;
      Integer mag = abs(c);
      if (mag != 1) os << mag.get_str() << '*';
      os << '[' << M::to_string(e) << ']';
    }
    return os.str();
  }

 private:
  void add_term(const Element& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  std::map<Element, Integer> terms_;
};

template <class M>
std::ostream& operator<<(std::ostream& os, const MonoidRing<M>& r) {
  return os << r.to_string();
}

using NatMonoidRing = MonoidRing<NatMonoid>;
using PolyMonoidRing = MonoidRing<PolyMonoid>;
using SymbolMonoidRing = MonoidRing<SymbolMonoid>;

/// The augmentation-like collapse [n] -> n into the integers.
Integer collapse_to_integer(const NatMonoidRing& r);

}  // namespace kdim
