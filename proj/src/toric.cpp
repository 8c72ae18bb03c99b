#include "kdim/toric.hpp"

#include "kdim/errors.hpp"
#include "kdim/integer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kdim {

namespace {

const TLPoly kT = TLPoly::tau();
const TLPoly kL = TLPoly::lefschetz();

std::string cone_string(const Cone& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + "}";
}

bool is_subset(const Cone& small, const Cone& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

MotivicClass toric_class(const Fan& fan) {
  TLPoly out;
  const unsigned n = fan.dim();
  for (const auto& c : fan.cones())
    out += (kL - kT).pow(n - static_cast<unsigned>(c.size())) * kT.pow(static_cast<unsigned>(c.size()));
  return MotivicClass(out);
}

MotivicClass orbit_closure_class(const Fan& fan, const Cone& tau) {
  TLPoly out;
  const unsigned n = fan.dim();
  for (const auto& d : fan.cones())
    if (is_subset(tau, d))
      out += (kL - kT).pow(n - static_cast<unsigned>(d.size())) * kT.pow(static_cast<unsigned>(d.size() - tau.size()));
  return MotivicClass(out);
}

std::map<Cone, Cone> phi_map(const Fan& sigma, const Fan& delta) {
  if (sigma.dim() != delta.dim()) throw ValidationError("fans live in different lattices");
  std::map<Cone, Cone> phi;
  for (const auto& s : sigma.cones()) {
    const Cone* best = nullptr;
    for (const auto& d : delta.cones()) {
      if (best && d.size() >= best->size()) continue;
      bool all = true;
      for (int r : s)
        if (!delta.cone_contains(d, sigma.rays()[r])) {
          all = false;
          break;
        }
      if (all) best = &d;
    }
    if (!best) throw ValidationError("cone " + cone_string(s) + " of the refinement lies in no cone of the base fan");
    phi.emplace(s, *best);
  }
  return phi;
}

TLPoly p_delta_face(const Cone& face, const std::map<Cone, Cone>& phi) {
  const unsigned n = static_cast<unsigned>(face.size());
  TLPoly out;
  for (const auto& [s, d] : phi) {
    if (!is_subset(d, face)) continue;
    const unsigned ds = static_cast<unsigned>(d.size()), ss = static_cast<unsigned>(s.size());
    TLPoly term = (kL - kT).pow(ds - ss) * kT.pow(n - ds + ss);
    if (ds % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

TLPoly p_delta(const Fan& sigma, const Fan& delta) {
  const auto maximal = delta.maximal_cones();
  if (maximal.size() != 1) throw DomainError("p_Delta needs a base fan with a single maximal cone");
  if (!delta.cone_is_simplicial(maximal[0])) throw DomainError("p_Delta needs a simplicial base cone");
  if (!sigma.is_simplicial()) throw DomainError("p_Delta needs a simplicial refinement");
  return p_delta_face(maximal[0], phi_map(sigma, delta));
}

ToricReport toric_dsing_verify(const Fan& delta, const Fan& sigma) {
  delta.validate();
  sigma.validate();
  if (!delta.is_simplicial()) throw DomainError("the base fan must be simplicial");
  if (!sigma.is_smooth()) throw DomainError("the refinement must be smooth");
  const auto phi = phi_map(sigma, delta);

  ToricReport report;
  report.certified = true;
  MotivicClass predicted = toric_class(delta);
  for (const auto& face : delta.cones()) {
    if (face.empty()) continue;
    ToricReport::Face f{face, p_delta_face(face, phi), false};
    f.symmetric = swap_vars(f.p) == f.p;
    report.certified = report.certified && f.symmetric;
    MotivicClass correction = orbit_closure_class(delta, face) * f.p;
    predicted += face.size() % 2 == 0 ? correction : -correction;
    report.faces.push_back(std::move(f));
  }
  report.class_identity = predicted == toric_class(sigma);
  return report;
}

std::string ToricReport::to_string() const {
  std::ostringstream os;
  for (const auto& f : faces)
    os << "face " << cone_string(f.face) << ": p = " << f.p.to_string() << (f.symmetric ? " symmetric" : " NOT symmetric")
       << "\n";
  os << "class identity: " << (class_identity ? "holds" : "fails") << "\n";
  os << "verdict: " << (certified ? "D-singular (certified)" : "not certified") << "\n";
  return os.str();
}

namespace {

/// A nonzero primitive lattice point sum lambda_i v_i with 0 <= lambda_i < 1.
std::optional<Ray> parallelepiped_point(const Fan& fan, const Cone& c) {
  const unsigned n = fan.dim();
  Ray lo(n, 0), hi(n, 0);
  for (int r : c)
    for (unsigned i = 0; i < n; ++i) {
      long x = fan.rays()[r][i];
      (x < 0 ? lo[i] : hi[i]) += x;
    }
  std::vector<Ray> basis;
  for (int r : c) basis.push_back(fan.rays()[r]);
  Ray p = lo;
  for (;;) {
    bool nonzero = std::any_of(p.begin(), p.end(), [](long x) { return x != 0; });
    long g = 0;
    for (long x : p) g = std::gcd(g, x);
    if (nonzero && g == 1) {
      // Solve p = sum lambda_i v_i over Q.
      const std::size_t k = basis.size();
      std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
      for (unsigned r = 0; r < n; ++r) {
        for (std::size_t q = 0; q < k; ++q) a[r][q] = basis[q][r];
        a[r][k] = p[r];
      }
      std::size_t row = 0;
      std::vector<std::size_t> piv;
      for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t s = row;
        while (s < n && a[s][col] == 0) ++s;
        if (s == n) continue;
        std::swap(a[row], a[s]);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == row || a[r][col] == 0) continue;
          Rational f = a[r][col] / a[row][col];
          for (std::size_t q = col; q <= k; ++q) a[r][q] -= f * a[row][q];
        }
        piv.push_back(col);
        ++row;
      }
      bool consistent = true;
      for (std::size_t r = row; r < n; ++r)
        if (a[r][k] != 0) consistent = false;
      if (consistent) {
        bool inside = true;
        for (std::size_t r = 0; r < piv.size(); ++r) {
          Rational lambda = a[r][k] / a[r][piv[r]];
          if (lambda < 0 || lambda >= 1) inside = false;
        }
        if (inside) return p;
      }
    }
    // Next point of the bounding box in lexicographic order.
    unsigned i = n;
    while (i > 0) {
      --i;
      if (p[i] < hi[i]) {
        ++p[i];
        for (unsigned j = i + 1; j < n; ++j) p[j] = lo[j];
        break;
      }
      if (i == 0) return std::nullopt;
    }
    if (n == 0) return std::nullopt;
  }
}

}  // namespace

Fan resolve(const Fan& fan, unsigned max_steps) {
  if (!fan.is_simplicial()) throw DomainError("resolution by star subdivision needs a simplicial fan");
  Fan current = fan;
  for (unsigned step = 0; step < max_steps; ++step) {
    std::vector<Cone> bad;
    for (const auto& c : current.cones())
      if (!current.cone_is_smooth(c)) bad.push_back(c);
    if (bad.empty()) return current;
    std::stable_sort(bad.begin(), bad.end(), [](const Cone& a, const Cone& b) { return a.size() < b.size(); });
    auto p = parallelepiped_point(current, bad.front());
    if (!p) throw DomainError("no interior lattice point found for non-smooth cone " + cone_string(bad.front()));
    current = star_subdivision(current, *p);
  }
  throw DomainError("resolution did not finish within " + std::to_string(max_steps) + " subdivisions");
}

}  // namespace kdim
