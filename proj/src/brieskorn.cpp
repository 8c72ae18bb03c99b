#include "kdim/brieskorn.hpp"

#include "kdim/errors.hpp"
#include "kdim/integer.hpp"

#include <functional>
#include <set>
#include <utility>

namespace kdim {

namespace {

Rational fractional_part(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rational(fl);
}

}  // namespace

BrieskornResult brieskorn_rhm(const std::vector<long>& a) {
  if (a.size() < 2) throw DomainError("Brieskorn exponents need n >= 2");
  for (long x : a)
    if (x < 2) throw DomainError("Brieskorn exponents must be >= 2, got " + std::to_string(x));

  // Depth-first in lexicographic order; states (index, partial sum mod 1) that
  // cannot be completed are remembered.
  std::set<std::pair<std::size_t, Rational>> dead;
  std::vector<long> b(a.size());
  std::function<bool(std::size_t, const Rational&)> search = [&](std::size_t i, const Rational& frac) {
    if (i == a.size()) return frac == 0;
    if (dead.count({i, frac})) return false;
    for (long bi = 1; bi < a[i]; ++bi) {
      b[i] = bi;
      if (search(i + 1, fractional_part(frac + Rational(bi, a[i])))) return true;
    }
    dead.insert({i, frac});
    return false;
  };

  BrieskornResult r;
  if (search(0, Rational(0)))
    r.witness = b;
  else
    r.rhm = true;
  return r;
}

std::string BrieskornResult::to_string() const {
  if (rhm) return "RHM";
  std::string out = "NOT-RHM witness (";
  for (std::size_t i = 0; i < witness->size(); ++i) out += (i ? "," : "") + std::to_string((*witness)[i]);
  return out + ")";
}

}  // namespace kdim
