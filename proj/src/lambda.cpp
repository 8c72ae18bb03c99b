#include "kdim/lambda.hpp"

#include "kdim/errors.hpp"

#include <functional>

namespace kdim {

namespace {

ClassSeries atom_lambda(const AtomMonomial& m, unsigned order, const AtomTable& table) {
  if (m.is_unit()) return ClassSeries::geometric(order);
  auto name = m.single_atom();
  if (!name)
    throw MissingSymDataError("lambda of the product " + m.to_string() +
                              " is not determined by the atom tables");
  const Atom& atom = table.at(*name);
  std::vector<MotivicClass> c(order + 1);
  c[0] = MotivicClass::one();
  if (order >= 1) c[1] = atom.cls();
  for (unsigned k = 2; k <= order; ++k) {
    auto it = atom.sym.find(k);
    if (it == atom.sym.end())
      throw MissingSymDataError("atom '" + *name + "' has no Sym^" + std::to_string(k) + " entry");
    c[k] = it->second;
  }
  return ClassSeries(order, std::move(c));
}

long small_exponent(const Integer& c) {
  if (!c.fits_slong_p()) throw DomainError("coefficient " + c.get_str() + " too large for lambda_t");
  return c.get_si();
}

template <class R>
TruncatedSeries<R> act(const LineElement& e, const TruncatedSeries<R>& phi) {
  TruncatedSeries<R> out(phi.order());
  for (const auto& f : e.factors) {
    R m = R(MotivicClass(TLPoly::monomial(1, f.monomial.tau, f.monomial.lef)));
    out = out * phi.scaled(m).pow(f.exponent);
  }
  return out;
}

}  // namespace

ClassSeries lambda_t(const MotivicClass& a, unsigned order, const AtomTable& table) {
  ClassSeries out(order);
  for (const auto& [m, p] : a.terms()) {
    const ClassSeries base = atom_lambda(m, order, table);
    for (const auto& [e, c] : p.terms()) {
      // Linearity in T and L: lambda_t(T^a L^b x) = lambda_{T^a L^b t}(x).
      out = out * base.scaled(MotivicClass(TLPoly::monomial(1, e.tau, e.lef))).pow(small_exponent(c));
    }
  }
  return out;
}

MotivicClass lambda(unsigned m, const MotivicClass& a, const AtomTable& table) {
  return lambda_t(a, m, table)[m];
}

std::vector<MotivicClass> adams_sequence(unsigned n, const MotivicClass& a, const AtomTable& table) {
  const ClassSeries lam = lambda_t(a, n, table);
  std::vector<MotivicClass> psi(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    MotivicClass acc = lam[k] * TLPoly(static_cast<long>(k));
    for (unsigned i = 1; i < k; ++i) acc -= lam[i] * psi[k - i];
    psi[k] = std::move(acc);
  }
  psi.erase(psi.begin());
  return psi;
}

MotivicClass adams(unsigned n, const MotivicClass& a, const AtomTable& table) {
  if (n == 0) throw DomainError("Adams operations are indexed from 1");
  return adams_sequence(n, a, table).back();
}

LineElement LineElement::sigma(const TLPoly& f) {
  LineElement e;
  for (const auto& [exp, c] : f.terms()) e.factors.push_back({exp, small_exponent(c)});
  return e;
}

TLPoly LineElement::power_sum(unsigned n) const {
  TLPoly out;
  for (const auto& f : factors) out += TLPoly::monomial(f.exponent, f.monomial.tau * n, f.monomial.lef * n);
  return out;
}

ClassSeries line_act(const LineElement& e, const ClassSeries& phi) { return act(e, phi); }

LocalizedSeries line_act(const LineElement& e, const LocalizedSeries& phi) { return act(e, phi); }

LocalizedSeries localize(const ClassSeries& s) {
  std::vector<LocalizedClass> c;
  for (const auto& x : s.coefficients()) c.emplace_back(x);
  return LocalizedSeries(s.order(), std::move(c));
}

LocalizedSeries solve_sigma_division(const TLPoly& f, const ClassSeries& psi, unsigned order) {
  if (psi.order() < order) throw DomainError("target series is truncated below the requested order");
  if (!(psi[0] == MotivicClass::one())) throw DomainError("target series must have constant term 1");
  const LineElement e = LineElement::sigma(f);
  std::vector<LocalizedClass> b(order + 1, LocalizedClass::zero());
  b[0] = LocalizedClass::one();
  for (unsigned n = 1; n <= order; ++n) {
    // Coefficient n of sigma_t(f) o phi is f(m^n) b_n + (terms in b_1..b_{n-1}).
    const LocalizedSeries trial = line_act(e, LocalizedSeries(n, b));
    const TLPoly fn = e.power_sum(n);
    auto fact = factor_over_generators(fn);
    if (!fact)
      throw DomainError("f(m^" + std::to_string(n) + ") = " + fn.to_string() +
                        " is not invertible in the localization");
    LocalizedClass rhs = LocalizedClass(psi[n]) - trial[n];
    if (fact->sign < 0) rhs = -rhs;
    b[n] = rhs.divided_by(fact->factors);
  }
  return LocalizedSeries(order, std::move(b));
}

std::vector<std::vector<unsigned>> partitions(unsigned m) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::string partition_label(const std::vector<unsigned>& parts) {
  std::string out;
  for (unsigned p : parts) {
    if (!out.empty()) out += '+';
    out += std::to_string(p);
  }
  return out;
}

StratificationReport sym_power_stratification(const Atom& atom, unsigned m, const AtomTable& table) {
  StratificationReport r;
  r.parts = partitions(m);
  auto it = atom.sym_strata.find(m);
  if (m == 1) {
    // One stratum, Sym^1 itself.
    r.has_data = true;
    r.symmetric_power = atom.cls();
    r.strata_sum = it != atom.sym_strata.end() && it->second.count("1") ? it->second.at("1") : atom.cls();
    r.holds = r.symmetric_power == r.strata_sum;
    return r;
  }
  if (it == atom.sym_strata.end()) return r;
  r.has_data = true;
  r.symmetric_power = lambda(m, atom.cls(), table);
  for (const auto& p : r.parts) {
    const std::string label = partition_label(p);
    auto s = it->second.find(label);
    if (s == it->second.end())
      r.missing.push_back(label);
    else
      r.strata_sum += s->second;
  }
  r.holds = r.symmetric_power == r.strata_sum;
  return r;
}

}  // namespace kdim
