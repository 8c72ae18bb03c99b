#include "kdim/monoid_ring.hpp"

#include "kdim/errors.hpp"

#include <cctype>

namespace kdim {

PolyMonoid::Element PolyMonoid::multiply(const Element& a, const Element& b) {
  Element out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::string PolyMonoid::to_string(const Element& e) {
  std::string out = "1";
  for (std::size_t i = 1; i < e.size(); ++i) {
    const Integer& c = e[i];
    if (c == 0) continue;
    out += c < 0 ? '-' : '+';
    Integer mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += 's';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

PolyMonoid::Element PolyMonoid::make(std::vector<Integer> coefficients) {
  if (coefficients.empty() || coefficients.front() != 1)
    throw DomainError("polynomial monoid elements need constant term 1");
  while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
  return coefficients;
}

SymbolMonoid::Element SymbolMonoid::multiply(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [s, e] : b) out[s] += e;
  return out;
}

std::string SymbolMonoid::to_string(const Element& e) {
  if (e.empty()) return "1";
  std::string out;
  for (const auto& [s, p] : e) {
    if (!out.empty()) out += '*';
    out += s;
    if (p > 1) out += '^' + std::to_string(p);
  }
  return out;
}

SymbolMonoid::Element SymbolMonoid::parse(const std::string& text) {
  Element out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) { throw ParseError(what + " in symbol product '" + text + "'", i); };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "1" || text.substr(i) == "pt") return out;
  for (;;) {
    skip();
    const std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    if (start == i) fail("expected symbol");
    std::string name = text.substr(start, i - start);
    unsigned power = 1;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip();
      const std::size_t ds = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (ds == i) fail("expected exponent");
      power = static_cast<unsigned>(std::stoul(text.substr(ds, i - ds)));
    }
    if (name != "pt" && name != "1" && power > 0) out[name] += power;
    skip();
    if (i == text.size()) break;
    if (text[i] != '*') fail("expected '*'");
    ++i;
  }
  return out;
}

Integer collapse_to_integer(const NatMonoidRing& r) {
  Integer total = 0;
  for (const auto& [n, c] : r.terms()) total += n * c;
  return total;
}

}  // namespace kdim
