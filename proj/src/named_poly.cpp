#include "kdim/named_poly.hpp"

#include "kdim/parse.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace kdim {

namespace {

unsigned monomial_degree(const NamedPoly::Monomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

struct NamedPolySemantics {
  using Value = NamedPoly;
  Value integer(const Integer& n) const { return NamedPoly(n); }
  Value identifier(const std::string& name, std::size_t) const { return NamedPoly::variable(name); }
  Value call(const std::string& name, std::vector<Value>, std::size_t pos) const {
    throw ParseError("unknown function '" + name + "'", pos);
  }
  Value add(Value a, Value b) const { return a + b; }
  Value sub(Value a, Value b) const { return a - b; }
  Value mul(Value a, Value b) const { return a * b; }
  Value neg(Value a) const { return -a; }
  Value pow(Value a, unsigned e, std::size_t) const { return a.pow(e); }
};

}  // namespace

NamedPoly::NamedPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

NamedPoly NamedPoly::variable(const std::string& name) {
  NamedPoly p;
  p.terms_.emplace(Monomial{{name, 1}}, 1);
  return p;
}

NamedPoly NamedPoly::parse(std::string_view text) { return parse_with(text, NamedPolySemantics{}); }

int NamedPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(monomial_degree(m)));
  return d;
}

void NamedPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NamedPoly& NamedPoly::operator+=(const NamedPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

NamedPoly& NamedPoly::operator-=(const NamedPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

NamedPoly NamedPoly::operator-() const {
  NamedPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

NamedPoly operator*(const NamedPoly& a, const NamedPoly& b) {
  NamedPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      NamedPoly::Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      out.add_term(m, ca * cb);
    }
  return out;
}

NamedPoly NamedPoly::pow(unsigned e) const {
  NamedPoly result = one(), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Integer NamedPoly::evaluate(const std::map<std::string, Integer>& values) const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer term = c;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) throw DomainError("no value supplied for variable '" + v + "'");
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), it->second.get_mpz_t(), e);
      term *= p;
    }
    total += term;
  }
  return total;
}

std::string NamedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Integer>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    return monomial_degree(x->first) > monomial_degree(y->first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    Integer mag = abs(c);
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    bool need_star = false;
    if (mag != 1 || m.empty()) {
      os << mag.get_str();
      need_star = true;
    }
    for (const auto& [v, e] : m) {
      if (need_star) os << '*';
      os << v;
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const NamedPoly& p) { return os << p.to_string(); }

}  // namespace kdim
