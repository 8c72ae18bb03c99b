#include "kdim/motivic.hpp"

#include "kdim/errors.hpp"

namespace kdim {

AtomMonomial AtomMonomial::atom(const std::string& name, unsigned dim) {
  AtomMonomial m;
  m.powers_.emplace(name, 1);
  m.dim_ = dim;
  return m;
}

std::optional<std::string> AtomMonomial::single_atom() const {
  if (powers_.size() == 1 && powers_.begin()->second == 1) return powers_.begin()->first;
  return std::nullopt;
}

AtomMonomial operator*(const AtomMonomial& a, const AtomMonomial& b) {
  AtomMonomial out = a;
  for (const auto& [n, e] : b.powers_) out.powers_[n] += e;
  out.dim_ = a.dim_ + b.dim_;
  return out;
}

std::string AtomMonomial::to_string() const {
  if (powers_.empty()) return "1";
  std::string out;
  for (const auto& [n, e] : powers_) {
    if (!out.empty()) out += '*';
    out += n;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

MotivicClass::MotivicClass(const TLPoly& coefficient) { add_term(AtomMonomial{}, coefficient); }

MotivicClass MotivicClass::term(const AtomMonomial& m, const TLPoly& coefficient) {
  MotivicClass c;
  c.add_term(m, coefficient);
  return c;
}

TLPoly MotivicClass::coefficient(const AtomMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? TLPoly() : it->second;
}

std::optional<TLPoly> MotivicClass::as_polynomial() const {
  if (terms_.empty()) return TLPoly();
  if (terms_.size() == 1 && terms_.begin()->first.is_unit()) return terms_.begin()->second;
  return std::nullopt;
}

void MotivicClass::add_term(const AtomMonomial& m, const TLPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MotivicClass& MotivicClass::operator+=(const MotivicClass& o) {
  for (const auto& [m, p] : o.terms_) add_term(m, p);
  return *this;
}

MotivicClass& MotivicClass::operator-=(const MotivicClass& o) {
  for (const auto& [m, p] : o.terms_) add_term(m, -p);
  return *this;
}

MotivicClass MotivicClass::operator-() const {
  MotivicClass out = *this;
  for (auto& [m, p] : out.terms_) p = -p;
  return out;
}

MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
  MotivicClass out;
  for (const auto& [ma, pa] : a.terms_)
    for (const auto& [mb, pb] : b.terms_) out.add_term(ma * mb, pa * pb);
  return out;
}

MotivicClass operator*(const MotivicClass& a, const TLPoly& p) {
  MotivicClass out;
  for (const auto& [m, c] : a.terms_) out.add_term(m, c * p);
  return out;
}

MotivicClass MotivicClass::pow(unsigned e) const {
  MotivicClass result = one(), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<int> MotivicClass::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = -1;
  for (const auto& [m, p] : terms_) d = std::max(d, static_cast<int>(m.dim()) + p.total_degree());
  return d;
}

bool MotivicClass::is_homogeneous() const {
  std::optional<unsigned> d;
  for (const auto& [m, p] : terms_)
    for (const auto& [e, c] : p.terms()) {
      unsigned here = m.dim() + e.degree();
      if (d && *d != here) return false;
      d = here;
    }
  return true;
}

std::string MotivicClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, p] : terms_) {
    std::string piece;
    if (m.is_unit()) {
      piece = p.to_string();
    } else if (p == TLPoly::one()) {
      piece = m.to_string();
    } else if (p == TLPoly(-1)) {
      piece = "-" + m.to_string();
    } else if (p.size() == 1) {
      piece = p.to_string() + "*" + m.to_string();
    } else {
      piece = "(" + p.to_string() + ")*" + m.to_string();
    }
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MotivicClass& c) { return os << c.to_string(); }

std::optional<MotivicClass> try_divide(const MotivicClass& c, const TLPoly& by) {
  MotivicClass out;
  for (const auto& [m, p] : c.terms()) {
    auto q = p.try_divide(by);
    if (!q) return std::nullopt;
    out += MotivicClass::term(m, *q);
  }
  return out;
}

MotivicClass involute(const MotivicClass& c) {
  MotivicClass out;
  for (const auto& [m, p] : c.terms()) out += MotivicClass::term(m, swap_vars(p));
  return out;
}

MotivicClass pi1(const MotivicClass& c) {
  MotivicClass out;
  for (const auto& [m, p] : c.terms()) out += MotivicClass::term(m, sym_decompose(p).first);
  return out;
}

MotivicClass pi2(const MotivicClass& c) {
  MotivicClass out;
  for (const auto& [m, p] : c.terms()) out += MotivicClass::term(m, sym_decompose(p).second);
  return out;
}

namespace {

int require_homogeneous(const MotivicClass& c, const char* what) {
  if (!c.is_homogeneous()) throw DegreeMismatchError(std::string(what) + " must be homogeneous, got " + c.to_string());
  return c.degree().value_or(-1);
}

}  // namespace

MotivicClass blowup_class(const MotivicClass& x, const MotivicClass& y, int codim) {
  if (codim < 2) throw DomainError("blow-up center needs codimension >= 2, got " + std::to_string(codim));
  const int dx = require_homogeneous(x, "blow-up ambient class");
  const int dy = require_homogeneous(y, "blow-up center class");
  if (!x.is_zero() && !y.is_zero() && dy != dx - codim)
    throw DegreeMismatchError("blow-up center has degree " + std::to_string(dy) + ", expected " +
                              std::to_string(dx - codim));
  const unsigned k = static_cast<unsigned>(codim - 1);
  return x + y * (TLPoly::tau() * TLPoly::lefschetz() * pn(k - 1).poly());
}

MotivicClass proj_bundle_class(const MotivicClass& y, int rank) {
  if (rank < 1) throw DomainError("projective bundle rank must be >= 1, got " + std::to_string(rank));
  require_homogeneous(y, "bundle base class");
  return y * pn(static_cast<unsigned>(rank - 1)).poly();
}

LocalizedClass gl_class(unsigned n) {
  if (n == 0) throw DomainError("GL_n needs n >= 1");
  return LocalizedClass(MotivicClass(gl_polynomial(n)));
}

LocalizedClass bgl_class(unsigned n) {
  if (n == 0) throw DomainError("BGL_n needs n >= 1");
  return LocalizedClass(MotivicClass::one(), gl_factors(n));
}

}  // namespace kdim
