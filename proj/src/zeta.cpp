#include "kdim/zeta.hpp"

#include "kdim/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kdim {

ClassSeries kapranov_zeta(const MotivicClass& a, unsigned order, const AtomTable& table) {
  return lambda_t(a, order, table);
}

namespace {

template <class R, class IsZero, class Divide>
R bareiss(Matrix<R> m, const R& one, IsZero is_zero, Divide divide) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  R prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && is_zero(m[r][k])) ++r;
      if (r == n) return R(0);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = R(0);
    }
    prev = m[k][k];
  }
  return negate ? R(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Rational polynomial in m, lowest degree first.
using QPoly = std::vector<Rational>;

QPoly qmul(const QPoly& a, const QPoly& b) {
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// C(m + c, k) as a polynomial in m.
QPoly binomial_poly(long c, unsigned k) {
  QPoly out{Rational(1)};
  for (unsigned r = 0; r < k; ++r) out = qmul(out, QPoly{Rational(c - static_cast<long>(r)), Rational(1)});
  Integer fact = 1;
  for (unsigned r = 2; r <= k; ++r) fact *= r;
  for (auto& x : out) x /= fact;
  return out;
}

void trim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

int permutation_sign(const std::vector<unsigned>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t k = i + 1; k < p.size(); ++k)
      if (p[i] > p[k]) s = -s;
  return s;
}

}  // namespace

Integer determinant(Matrix<Integer> m) {
  return bareiss<Integer>(
      std::move(m), Integer(1), [](const Integer& x) { return x == 0; },
      [](const Integer& a, const Integer& b) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
      });
}

TLPoly determinant(Matrix<TLPoly> m) {
  return bareiss<TLPoly>(
      std::move(m), TLPoly::one(), [](const TLPoly& x) { return x.is_zero(); },
      [](const TLPoly& a, const TLPoly& b) { return a.divide_exact(b); });
}

Measure<PolyMonoidRing> mu_measure(const AtomTable& table, unsigned d) {
  if (d == 0 || d % 2 != 0) throw DomainError("mu_d needs a positive even d, got " + std::to_string(d));
  return {"mu_" + std::to_string(d), PolyMonoidRing(0), PolyMonoidRing(1),
          [&table, d](const std::string& name) {
            const Atom& a = table.at(name);
            auto it = a.plurigenera.find(d);
            if (it == a.plurigenera.end())
              throw MissingMeasureDataError("atom '" + name + "' has no plurigenus data for d=" + std::to_string(d));
            std::vector<Integer> nu{Integer(1)};
            nu.insert(nu.end(), it->second.begin(), it->second.end());
            return PolyMonoidRing::basis(PolyMonoid::make(std::move(nu)));
          }};
}

PolyMonoidRing mu_d(const MotivicClass& a, unsigned d, const AtomTable& table) {
  return mu_measure(table, d).apply(a);
}

std::vector<NatMonoidRing> binomial_series(unsigned h, unsigned order) {
  if (h == 0) throw DomainError("binomial series needs h >= 1");
  std::vector<NatMonoidRing> a;
  for (unsigned m = 0; m <= order; ++m) a.push_back(NatMonoidRing::basis(binomial(m + h - 1, h - 1)));
  return a;
}

NatMonoidRing binomial_hankel_det(unsigned h, unsigned j, unsigned m) {
  if (h == 0) throw DomainError("binomial determinant needs h >= 1");
  std::vector<unsigned> sigma(j + 1);
  std::iota(sigma.begin(), sigma.end(), 1u);
  NatMonoidRing out;
  do {
    Integer product = 1;
    for (unsigned i = 1; i <= j + 1; ++i)
      product *= binomial(static_cast<long>(m + sigma[i - 1] + i + h) - 3, h - 1);
    out += NatMonoidRing::basis(product, permutation_sign(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

MultisetCertificate identity_multiset_certificate(unsigned h, unsigned j) {
  if (h < 2) throw DomainError("the multiset certificate needs h >= 2");
  MultisetCertificate cert;
  cert.h = h;
  cert.j = j;
  std::vector<unsigned> sigma(j + 1);
  std::iota(sigma.begin(), sigma.end(), 1u);

  auto multiset_of = [&](const std::vector<unsigned>& s) {
    std::vector<unsigned> ms;
    for (unsigned i = 1; i <= j + 1; ++i) ms.push_back(s[i - 1] + i);
    std::sort(ms.begin(), ms.end());
    return ms;
  };
  auto poly_of = [&](const std::vector<unsigned>& s) {
    QPoly q{Rational(1)};
    for (unsigned i = 1; i <= j + 1; ++i) q = qmul(q, binomial_poly(static_cast<long>(s[i - 1] + i + h) - 3, h - 1));
    trim(q);
    return q;
  };

  cert.identity_multiset = multiset_of(sigma);
  const QPoly q_id = poly_of(sigma);
  cert.identity_unique = true;
  cert.signed_count = 0;
  Rational bound = 0;
  do {
    const int sgn = permutation_sign(sigma);
    const bool is_identity = std::is_sorted(sigma.begin(), sigma.end());
    if (!is_identity && multiset_of(sigma) == cert.identity_multiset) cert.identity_unique = false;
    QPoly q = poly_of(sigma);
    if (q == q_id) {
      cert.signed_count += sgn;
      continue;
    }
    // Cauchy bound on the real roots of q - q_id.
    QPoly diff(std::max(q.size(), q_id.size()), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) diff[i] += q[i];
    for (std::size_t i = 0; i < q_id.size(); ++i) diff[i] -= q_id[i];
    trim(diff);
    Rational local = 0;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) local = std::max(local, Rational(abs(diff[i] / diff.back())));
    bound = std::max(bound, Rational(local + 1));
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  cert.valid = cert.identity_unique && cert.signed_count != 0;
  if (cert.valid) {
    Integer t = bound.get_num() / bound.get_den() + 1;
    cert.threshold = std::max(t, Integer(1));
  }
  return cert;
}

std::string MultisetCertificate::to_string() const {
  std::ostringstream os;
  os << "certificate h=" << h << " j=" << j << ": " << (valid ? "true" : "false") << "\n";
  os << "  identity multiset {";
  for (std::size_t i = 0; i < identity_multiset.size(); ++i) os << (i ? "," : "") << identity_multiset[i];
  os << "} " << (identity_unique ? "unique" : "shared") << ", signed count " << signed_count << "\n";
  if (threshold) os << "  nonzero for all m >= " << threshold->get_str() << "\n";
  return os.str();
}

bool trailing_zero_run(const std::vector<bool>& vanishes) {
  std::size_t run = 0;
  for (auto it = vanishes.rbegin(); it != vanishes.rend() && *it; ++it) ++run;
  return run > 0 && 2 * run >= vanishes.size();
}

std::string ScanReport::to_string() const {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << "j=" << row.j << " vanishing m:";
    bool any = false;
    for (std::size_t m = 0; m < row.vanishes.size(); ++m)
      if (row.vanishes[m]) {
        os << ' ' << m;
        any = true;
      }
    if (!any) os << " none";
    os << "\n";
  }
  os << "classification: " << classification() << "\n";
  if (certificate) os << certificate->to_string();
  return os.str();
}

ScanReport binomial_scan(unsigned h, unsigned max_j, unsigned max_m) {
  ScanReport report = rationality_scan(binomial_series(h, max_m + 2 * max_j), max_j, max_m);
  if (h >= 2) report.certificate = identity_multiset_certificate(h, max_j);
  return report;
}

}  // namespace kdim
