#pragma once

// Power series in t truncated at an explicit order N (coefficients c0..cN).

#include "kdim/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace kdim {

template <class R>
class TruncatedSeries {
 public:
  /// The constant series 1 + O(t^(N+1)).
  explicit TruncatedSeries(unsigned order) : coeffs_(order + 1, R::zero()) { coeffs_[0] = R::one(); }
  TruncatedSeries(unsigned order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, R::zero());
  }

  /// 1/(1 - t) truncated.
  static TruncatedSeries geometric(unsigned order) {
    return TruncatedSeries(order, std::vector<R>(order + 1, R::one()));
  }

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const R& operator[](std::size_t n) const { return coeffs_.at(n); }
  R& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const unsigned n = std::min(a.order(), b.order());
    std::vector<R> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return TruncatedSeries(n, std::move(c));
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const unsigned n = std::min(a.order(), b.order());
    std::vector<R> c(n + 1, R::zero());
    for (unsigned i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == R::zero()) continue;
      for (unsigned j = 0; i + j <= n; ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(n, std::move(c));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse; the constant term must be 1 or -1.
  TruncatedSeries inverse() const {
    const R& c0 = coeffs_[0];
    const bool plus = c0 == R::one();
    if (!plus && !(c0 == -R::one())) throw DomainError("series inverse needs constant term +-1");
    std::vector<R> b(coeffs_.size(), R::zero());
    b[0] = c0;  // 1/(+-1) = +-1
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      R acc = R::zero();
      for (std::size_t k = 1; k <= n; ++k) acc = acc + coeffs_[k] * b[n - k];
      b[n] = -(acc * c0);
    }
    return TruncatedSeries(order(), std::move(b));
  }

  /// Integer power; negative exponents go through inverse().
  TruncatedSeries pow(long e) const {
    TruncatedSeries base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    TruncatedSeries result(order());
    while (k) {
      if (k & 1ul) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  /// phi(t) -> phi(x t): c_n -> c_n * x^n.
  TruncatedSeries scaled(const R& x) const {
    std::vector<R> c = coeffs_;
    R power = R::one();
    for (std::size_t n = 1; n < c.size(); ++n) {
      power = power * x;
      c[n] = c[n] * power;
    }
    return TruncatedSeries(order(), std::move(c));
  }

  /// "c0 + c1*t + ... + O(t^{N+1})"; zero coefficients are skipped.
  std::string to_string() const {
    std::string out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      if (coeffs_[n] == R::zero()) continue;
      std::string c = coeffs_[n].to_string();
      const bool compound = c.find_first_of("+-", 1) != std::string::npos;
      std::string piece;
      if (n == 0)
        piece = c;
      else {
        std::string tpow = n == 1 ? "t" : "t^" + std::to_string(n);
        if (c == "1")
          piece = tpow;
        else if (c == "-1")
          piece = "-" + tpow;
        else
          piece = (compound ? "(" + c + ")" : c) + "*" + tpow;
      }
      if (!out.empty()) out += " + ";
      out += piece;
    }
    if (!out.empty()) out += " + ";
    out += "O(t^" + std::to_string(coeffs_.size()) + ")";
    return out;
  }

 private:
  std::vector<R> coeffs_;
};

}  // namespace kdim
