#pragma once

// Kapranov zeta functions, Hankel determinants, the plurigenus measure and the
// binomial-determinant certificate in Z[N].

#include "kdim/atoms.hpp"
#include "kdim/lambda.hpp"
#include "kdim/measure.hpp"
#include "kdim/monoid_ring.hpp"
#include "kdim/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kdim {

template <class R>
using Matrix = std::vector<std::vector<R>>;

ClassSeries kapranov_zeta(const MotivicClass& a, unsigned order, const AtomTable& table);

/// Fraction-free Bareiss elimination.
Integer determinant(Matrix<Integer> m);
TLPoly determinant(Matrix<TLPoly> m);

/// Division-free determinant for arbitrary commutative rings: Laplace expansion
/// along rows, memoized on the set of used columns (O(2^n n) ring operations).
template <class R>
R determinant(const Matrix<R>& m) {
  const std::size_t n = m.size();
  if (n == 0) return R::one();
  if (n > 20) throw DomainError("matrix too large for cofactor expansion");
  std::vector<R> det(std::size_t{1} << n, R::zero());
  det[0] = R::one();
  for (std::size_t mask = 1; mask < det.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    R acc = R::zero();
    int sign = 1;
    // Columns are expanded from the highest set bit down so signs follow column order.
    for (std::size_t c = n; c-- > 0;) {
      if (!(mask >> c & 1u)) continue;
      const R& sub = det[mask & ~(std::size_t{1} << c)];
      if (!(sub == R::zero()) && !(m[row][c] == R::zero()))
        acc = sign > 0 ? acc + m[row][c] * sub : acc - m[row][c] * sub;
      sign = -sign;
    }
    det[mask] = std::move(acc);
  }
  return det.back();
}

template <class R>
Matrix<R> hankel_matrix(const std::vector<R>& a, unsigned m, unsigned j) {
  if (static_cast<std::size_t>(m) + 2 * j >= a.size())
    throw DomainError("Hankel window m=" + std::to_string(m) + ", j=" + std::to_string(j) +
                      " exceeds the series order " + std::to_string(a.size() - 1));
  Matrix<R> h(j + 1, std::vector<R>(j + 1));
  for (unsigned i = 0; i <= j; ++i)
    for (unsigned k = 0; k <= j; ++k) h[i][k] = a[m + i + k];
  return h;
}

/// det (a_{m+i+k})_{0 <= i,k <= j}; needs m + 2j <= N.
template <class R>
R hankel_det(const std::vector<R>& a, unsigned m, unsigned j) {
  return determinant(hankel_matrix(a, m, j));
}

template <class R>
R hankel_det(const TruncatedSeries<R>& s, unsigned m, unsigned j) {
  return hankel_det(s.coefficients(), m, j);
}

/// mu_d: T -> 0, L -> 1, atom -> [1 + h^1 s + ... + h^n s^n] for its degree-d plurigenus data.
Measure<PolyMonoidRing> mu_measure(const AtomTable& table, unsigned d);
PolyMonoidRing mu_d(const MotivicClass& a, unsigned d, const AtomTable& table);

/// a_m = [C(m + h - 1, h - 1)] in Z[N_mult], m = 0..order.
std::vector<NatMonoidRing> binomial_series(unsigned h, unsigned order);

/// sum_sigma sgn(sigma) [prod_i C(m + sigma(i) + i + h - 3, h - 1)] with i, sigma(i) in 1..j+1.
NatMonoidRing binomial_hankel_det(unsigned h, unsigned j, unsigned m);

struct MultisetCertificate {
  unsigned h = 0;
  unsigned j = 0;
  bool valid = false;
  bool identity_unique = false;
  long signed_count = 0;                  // sum of signs over permutations sharing the identity polynomial
  std::vector<unsigned> identity_multiset;  // {sigma(i) + i} for the identity
  std::optional<Integer> threshold;       // determinant is nonzero for all m >= threshold
  std::string to_string() const;
};

MultisetCertificate identity_multiset_certificate(unsigned h, unsigned j);

struct ScanRow {
  unsigned j = 0;
  std::vector<bool> vanishes;       // indexed by m = 0..M
  std::vector<std::string> values;  // canonical printing of each determinant
};

struct ScanReport {
  unsigned max_j = 0;
  unsigned max_m = 0;
  std::vector<ScanRow> rows;
  bool rational_consistent = false;
  std::optional<MultisetCertificate> certificate;
  std::string classification() const {
    return rational_consistent ? "rational-consistent" : "irrationality evidence";
  }
  std::string to_string() const;
};

/// A row is rational-consistent when its determinants vanish on a trailing run
/// covering at least half of the grid m = 0..M.
bool trailing_zero_run(const std::vector<bool>& vanishes);

namespace detail {
inline bool scan_is_zero(const Integer& x) { return x == 0; }
inline std::string scan_string(const Integer& x) { return x.get_str(); }
template <class R>
bool scan_is_zero(const R& x) {
  return x == R::zero();
}
template <class R>
std::string scan_string(const R& x) {
  return x.to_string();
}
}  // namespace detail

template <class R>
ScanReport rationality_scan(const std::vector<R>& a, unsigned max_j, unsigned max_m) {
  if (static_cast<std::size_t>(max_m) + 2 * max_j >= a.size())
    throw DomainError("rationality scan needs the series to order " + std::to_string(max_m + 2 * max_j));
  ScanReport report;
  report.max_j = max_j;
  report.max_m = max_m;
  for (unsigned j = 1; j <= max_j; ++j) {
    ScanRow row;
    row.j = j;
    for (unsigned m = 0; m <= max_m; ++m) {
      R d = hankel_det(a, m, j);
      row.vanishes.push_back(detail::scan_is_zero(d));
      row.values.push_back(detail::scan_string(d));
    }
    if (trailing_zero_run(row.vanishes)) report.rational_consistent = true;
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// Scan of the binomial series a_m = [C(m + h - 1, h - 1)] with the multiset
/// certificate for (h, max_j) attached when h >= 2.
ScanReport binomial_scan(unsigned h, unsigned max_j, unsigned max_m);

}  // namespace kdim
