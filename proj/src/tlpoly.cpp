#include "kdim/tlpoly.hpp"

#include "kdim/errors.hpp"
#include "kdim/parse.hpp"

#include <sstream>
#include <vector>

namespace kdim {

TLPoly::TLPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, constant);
}

TLPoly TLPoly::monomial(const Integer& coefficient, unsigned tau_exp, unsigned lef_exp) {
  TLPoly p;
  if (coefficient != 0) p.terms_.emplace(Exponent{tau_exp, lef_exp}, coefficient);
  return p;
}

Integer TLPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int TLPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<int>(e.degree()));
  return deg;
}

bool TLPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.degree();
  for (const auto& [e, c] : terms_)
    if (e.degree() != d) return false;
  return true;
}

std::optional<Integer> TLPoly::as_constant() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0}) return terms_.begin()->second;
  return std::nullopt;
}

void TLPoly::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TLPoly& TLPoly::operator+=(const TLPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

TLPoly& TLPoly::operator-=(const TLPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

TLPoly TLPoly::operator-() const {
  TLPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

TLPoly operator*(const TLPoly& a, const TLPoly& b) {
  TLPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(Exponent{ea.tau + eb.tau, ea.lef + eb.lef}, ca * cb);
  return out;
}

TLPoly& TLPoly::operator*=(const TLPoly& other) { return *this = *this * other; }

TLPoly TLPoly::pow(unsigned exponent) const {
  TLPoly result = one();
  TLPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::optional<TLPoly> TLPoly::try_divide(const TLPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  const auto [lead_exp, lead_coef] = divisor.leading_term();
  TLPoly remainder = *this;
  TLPoly quotient;
  while (!remainder.is_zero()) {
    const auto [e, c] = remainder.leading_term();
    if (e.tau < lead_exp.tau || e.lef < lead_exp.lef) return std::nullopt;
    if (!mpz_divisible_p(c.get_mpz_t(), lead_coef.get_mpz_t())) return std::nullopt;
    TLPoly step = monomial(Integer(c / lead_coef), e.tau - lead_exp.tau, e.lef - lead_exp.lef);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

TLPoly TLPoly::divide_exact(const TLPoly& divisor) const {
  auto q = try_divide(divisor);
  if (!q) throw DomainError("inexact division of " + to_string() + " by " + divisor.to_string());
  return *q;
}

namespace {

void append_monomial(std::ostringstream& os, const Integer& c, const Exponent& e, bool first) {
  const bool constant = e.tau == 0 && e.lef == 0;
  Integer mag = abs(c);
  if (c < 0)
    os << '-';
  else if (!first)
    os << '+';
  bool need_star = false;
  if (mag != 1 || constant) {
    os << mag.get_str();
    need_star = true;
  }
  auto var = [&](char name, unsigned power) {
    if (power == 0) return;
    if (need_star) os << '*';
    os << name;
    if (power > 1) os << '^' << power;
    need_star = true;
  };
  var('T', e.tau);
  var('L', e.lef);
}

}  // namespace

std::string TLPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_monomial(os, c, e, first);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TLPoly& p) { return os << p.to_string(); }

TLPoly swap_vars(const TLPoly& p) {
  TLPoly out;
  for (const auto& [e, c] : p.terms()) out += TLPoly::monomial(c, e.lef, e.tau);
  return out;
}

TLPoly divide_by_tau_minus_lef(const TLPoly& p) {
  if (p.is_zero()) return {};
  // p = sum_a c_a(L) T^a; coefficient rows indexed by the power of T.
  unsigned top = p.leading_term().first.tau;
  std::vector<TLPoly> rows(top + 1);
  for (const auto& [e, c] : p.terms()) rows[e.tau] += TLPoly::monomial(c, 0, e.lef);

  // Horner: q_{top-1} = c_top, q_{a-1} = c_a + L q_a; remainder c_0 + L q_0.
  const TLPoly L = TLPoly::lefschetz();
  std::vector<TLPoly> quotient(top);
  TLPoly carry;
  for (unsigned a = top; a >= 1; --a) {
    carry = rows[a] + L * carry;
    quotient[a - 1] = carry;
  }
  TLPoly remainder = rows[0] + L * carry;
  if (!remainder.is_zero())
    throw DomainError("division by (T-L) leaves remainder " + remainder.to_string());

  TLPoly out;
  for (unsigned a = 0; a < top; ++a) out += quotient[a] * TLPoly::monomial(1, a, 0);
  return out;
}

namespace {

struct TLPolySemantics {
  using Value = TLPoly;
  Value integer(const Integer& n) const { return TLPoly(n); }
  Value identifier(const std::string& name, std::size_t pos) const {
    if (name == "T") return TLPoly::tau();
    if (name == "L") return TLPoly::lefschetz();
    if (auto k = projective_shorthand(name)) return pn(*k);
    throw ParseError("unknown identifier '" + name + "'", pos);
  }
  Value call(const std::string& name, std::vector<Value> args, std::size_t pos) const {
    if (name != "P") throw ParseError("unknown function '" + name + "'", pos);
    if (args.size() != 1) throw ParseError("P expects one argument", pos);
    auto k = args[0].as_constant();
    if (!k || *k < 0 || *k > kMaxExponent) throw ParseError("P expects a small nonnegative integer", pos);
    return pn(static_cast<unsigned>(k->get_ui())).poly();
  }
  Value add(Value a, Value b) const { return a + b; }
  Value sub(Value a, Value b) const { return a - b; }
  Value mul(Value a, Value b) const { return a * b; }
  Value neg(Value a) const { return -a; }
  Value pow(Value a, unsigned e, std::size_t) const { return a.pow(e); }
};

}  // namespace

TLPoly TLPoly::parse(std::string_view text) { return parse_with(text, TLPolySemantics{}); }

SymPoly SymPoly::certify(TLPoly p) {
  if (swap_vars(p) != p) throw DomainError("polynomial " + p.to_string() + " is not symmetric in T, L");
  return SymPoly(std::move(p));
}

SymPoly pn(unsigned k) {
  TLPoly p;
  for (unsigned i = 0; i <= k; ++i) p += TLPoly::monomial(1, k - i, i);
  return SymPoly::certify(std::move(p));
}

SymDecomposition sym_decompose(const TLPoly& p) {
  TLPoly b = divide_by_tau_minus_lef(p - swap_vars(p));
  TLPoly a = p - TLPoly::tau() * b;
  return {SymPoly::certify(std::move(a)), SymPoly::certify(std::move(b))};
}

std::optional<unsigned> projective_shorthand(std::string_view name) {
  if (name.size() < 2 || name.size() > 5 || name[0] != 'P') return std::nullopt;
  if (name[1] == '0' && name.size() > 2) return std::nullopt;
  unsigned k = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    k = 10 * k + static_cast<unsigned>(c - '0');
  }
  if (k > kMaxExponent) return std::nullopt;
  return k;
}

}  // namespace kdim
