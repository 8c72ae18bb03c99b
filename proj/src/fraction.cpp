#include "kdim/fraction.hpp"

#include <functional>

namespace kdim {

DenominatorFactor DenominatorFactor::projective_space(unsigned n) {
  if (n == 0) throw DomainError("[P^0] = 1 is not a denominator generator");
  return {Kind::ProjectiveSpace, n};
}

std::optional<DenominatorFactor> DenominatorFactor::recognize(const TLPoly& p) {
  if (p == TLPoly::tau()) return tau();
  if (p == TLPoly::lefschetz()) return lefschetz();
  if (p == TLPoly::lefschetz() - TLPoly::tau()) return lef_minus_tau();
  int d = p.total_degree();
  if (d >= 1 && p == pn(static_cast<unsigned>(d)).poly()) return projective_space(static_cast<unsigned>(d));
  return std::nullopt;
}

TLPoly DenominatorFactor::polynomial() const {
  switch (kind) {
    case Kind::Tau: return TLPoly::tau();
    case Kind::Lefschetz: return TLPoly::lefschetz();
    case Kind::LefMinusTau: return TLPoly::lefschetz() - TLPoly::tau();
    case Kind::ProjectiveSpace: return pn(n).poly();
  }
  return {};
}

std::string DenominatorFactor::to_string() const {
  switch (kind) {
    case Kind::Tau: return "T";
    case Kind::Lefschetz: return "L";
    case Kind::LefMinusTau: return "(L-T)";
    case Kind::ProjectiveSpace: return "P(" + std::to_string(n) + ")";
  }
  return {};
}

FactorList::FactorList(std::initializer_list<std::pair<DenominatorFactor, unsigned>> init) {
  for (const auto& [f, m] : init) add(f, m);
}

void FactorList::add(const DenominatorFactor& f, unsigned multiplicity) {
  if (multiplicity) factors_[f] += multiplicity;
}

bool FactorList::remove_one(const DenominatorFactor& f) {
  auto it = factors_.find(f);
  if (it == factors_.end()) return false;
  if (--it->second == 0) factors_.erase(it);
  return true;
}

TLPoly FactorList::expand() const {
  TLPoly out = TLPoly::one();
  for (const auto& [f, m] : factors_) out *= f.polynomial().pow(m);
  return out;
}

std::string FactorList::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [f, m] : factors_) {
    if (!out.empty()) out += '*';
    out += f.to_string();
    if (m > 1) out += '^' + std::to_string(m);
  }
  return out;
}

FactorList& FactorList::operator*=(const FactorList& other) {
  for (const auto& [f, m] : other.factors_) add(f, m);
  return *this;
}

FactorList FactorList::lcm(const FactorList& a, const FactorList& b) {
  FactorList out = a;
  for (const auto& [f, m] : b.factors_) {
    auto& slot = out.factors_[f];
    slot = std::max(slot, m);
  }
  return out;
}

FactorList FactorList::quotient(const FactorList& a, const FactorList& b) {
  FactorList out = a;
  for (const auto& [f, m] : b.factors_) {
    auto it = out.factors_.find(f);
    if (it == out.factors_.end() || it->second < m)
      throw DomainError("factor list " + b.to_string() + " does not divide " + a.to_string());
    it->second -= m;
    if (it->second == 0) out.factors_.erase(it);
  }
  return out;
}

std::optional<SignedFactorization> factor_over_generators(const TLPoly& p) {
  if (p.is_zero()) return std::nullopt;
  SignedFactorization out;
  TLPoly rest = p;
  // Linear generators first: T, L, L-T are prime and cannot hide inside [P^k].
  for (auto f : {DenominatorFactor::tau(), DenominatorFactor::lefschetz(), DenominatorFactor::lef_minus_tau()}) {
    const TLPoly fp = f.polynomial();
    while (auto q = rest.try_divide(fp)) {
      rest = std::move(*q);
      out.factors.add(f);
    }
  }
  // [P^k] factors share cyclotomic pieces, so search with backtracking (largest k first).
  std::function<bool(const TLPoly&, unsigned, FactorList&)> search =
      [&](const TLPoly& r, unsigned max_k, FactorList& acc) -> bool {
    if (auto c = r.as_constant()) {
      if (*c == 1 || *c == -1) {
        out.sign = c->get_si();
        return true;
      }
      return false;
    }
    for (unsigned k = std::min<unsigned>(max_k, static_cast<unsigned>(r.total_degree())); k >= 1; --k) {
      if (auto q = r.try_divide(pn(k).poly())) {
        acc.add(DenominatorFactor::projective_space(k));
        if (search(*q, k, acc)) return true;
        acc.remove_one(DenominatorFactor::projective_space(k));
      }
    }
    return false;
  };
  FactorList projective;
  if (!search(rest, static_cast<unsigned>(std::max(rest.total_degree(), 0)), projective)) return std::nullopt;
  out.factors *= projective;
  return out;
}

TLFraction solve_linear(const FactorList& a, const TLFraction& rhs) { return rhs.divided_by(a); }

TLPoly gl_polynomial(unsigned n) {
  TLPoly out = TLPoly::one();
  for (unsigned i = 0; i < n; ++i) out *= TLPoly::monomial(1, 0, n) - TLPoly::monomial(1, n - i, i);
  return out;
}

FactorList gl_factors(unsigned n) {
  // L^n - L^i T^(n-i) = L^i (L^(n-i) - T^(n-i)) = L^i (L-T) [P^(n-i-1)].
  FactorList out;
  for (unsigned i = 0; i < n; ++i) {
    out.add(DenominatorFactor::lefschetz(), i);
    out.add(DenominatorFactor::lef_minus_tau());
    if (n - i - 1 >= 1) out.add(DenominatorFactor::projective_space(n - i - 1));
  }
  return out;
}

}  // namespace kdim
