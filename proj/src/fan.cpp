#include "kdim/fan.hpp"

#include "kdim/errors.hpp"
#include "kdim/integer.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace kdim {

namespace {

using nlohmann::json;

/// Rank of a list of integer vectors, by elimination over Q.
std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

Integer int_det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  Integer prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return n == 0 ? Integer(1) : (negate ? Integer(-m[n - 1][n - 1]) : m[n - 1][n - 1]);
}

/// Coordinates of v in the basis given by `basis` (assumed independent), if v is in their span.
std::optional<std::vector<Rational>> coordinates(const std::vector<Ray>& basis, const Ray& v) {
  const std::size_t n = v.size(), k = basis.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = basis[c][r];
    a[r][k] = v[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[row], a[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[row][c];
      for (std::size_t q = c; q <= k; ++q) a[r][q] -= f * a[row][q];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (a[r][k] != 0) return std::nullopt;
  std::vector<Rational> x(k, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = a[r][k] / a[r][pivot_col[r]];
  return x;
}

void add_faces(const Cone& c, std::set<Cone>& out) {
  const std::size_t k = c.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Cone f;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) f.push_back(c[i]);
    out.insert(std::move(f));
  }
}

Cone normalized(Cone c) {
  std::sort(c.begin(), c.end());
  return c;
}

std::string cone_string(const Cone& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + "}";
}

}  // namespace

Fan::Fan(unsigned dim, std::vector<Ray> rays, const std::vector<Cone>& cones) : dim_(dim), rays_(std::move(rays)) {
  cones_.insert(Cone{});
  for (const auto& c : cones) cones_.insert(normalized(c));
}

Fan Fan::from_maximal_cones(unsigned dim, std::vector<Ray> rays, const std::vector<Cone>& maximal) {
  Fan f(dim, std::move(rays), {});
  for (const auto& c : maximal) add_faces(normalized(c), f.cones_);
  return f;
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones_) {
    bool maximal = true;
    for (const auto& d : cones_)
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  return out;
}

void Fan::validate() const {
  if (dim_ == 0) throw ValidationError("fan /dim: must be positive");
  std::set<Ray> seen;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const Ray& r = rays_[i];
    const std::string where = "fan /rays/" + std::to_string(i);
    if (r.size() != dim_) throw ValidationError(where + ": expected " + std::to_string(dim_) + " coordinates");
    long g = 0;
    for (long x : r) g = std::gcd(g, x);
    if (g == 0) throw ValidationError(where + ": zero ray");
    if (g != 1) throw ValidationError(where + ": ray is not primitive");
    if (!seen.insert(r).second) throw ValidationError(where + ": duplicate ray");
  }
  for (const auto& c : cones_) {
    const std::string where = "fan cone " + cone_string(c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || static_cast<std::size_t>(c[i]) >= rays_.size())
        throw ValidationError(where + ": ray index out of range");
      if (i && c[i] == c[i - 1]) throw ValidationError(where + ": repeated ray index");
    }
    if (cone_is_simplicial(c)) {
      std::set<Cone> faces;
      add_faces(c, faces);
      for (const auto& f : faces)
        if (!cones_.count(f)) throw ValidationError(where + ": face " + cone_string(f) + " is missing");
    } else {
      for (int r : c)
        if (!cones_.count(Cone{r})) throw ValidationError(where + ": ray cone {" + std::to_string(r) + "} is missing");
    }
  }
}

bool Fan::cone_is_simplicial(const Cone& c) const {
  std::vector<std::vector<Rational>> rows;
  for (int r : c) rows.emplace_back(rays_.at(r).begin(), rays_.at(r).end());
  return rank_of(rows) == c.size();
}

bool Fan::cone_is_smooth(const Cone& c) const {
  if (!cone_is_simplicial(c)) return false;
  const std::size_t k = c.size();
  if (k == 0) return true;
  // gcd over all k x k minors of the k x n ray matrix.
  Integer g = 0;
  std::vector<bool> pick(dim_, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::vector<Integer>> m(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t col = 0; col < dim_; ++col)
        if (pick[col]) m[i].emplace_back(rays_[c[i]][col]);
    Integer d = int_det(m);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g == 1;
}

bool Fan::is_simplicial() const {
  return std::all_of(cones_.begin(), cones_.end(), [&](const Cone& c) { return cone_is_simplicial(c); });
}

bool Fan::is_smooth() const {
  return std::all_of(cones_.begin(), cones_.end(), [&](const Cone& c) { return cone_is_smooth(c); });
}

std::optional<int> Fan::ray_index(const Ray& v) const {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i] == v) return static_cast<int>(i);
  return std::nullopt;
}

bool Fan::cone_contains(const Cone& c, const Ray& v) const {
  if (c.empty()) return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
  if (!cone_is_simplicial(c)) throw DomainError("containment test needs a simplicial cone");
  std::vector<Ray> basis;
  for (int r : c) basis.push_back(rays_[r]);
  auto x = coordinates(basis, v);
  return x && std::all_of(x->begin(), x->end(), [](const Rational& q) { return q >= 0; });
}

std::string Fan::to_string() const {
  std::ostringstream os;
  os << "dim " << dim_ << ", rays";
  for (const auto& r : rays_) {
    os << " (";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
  }
  os << ", maximal cones";
  for (const auto& c : maximal_cones()) os << ' ' << cone_string(c);
  return os.str();
}

Fan Fan::from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("fan is not valid JSON: ") + e.what());
  }
  auto invalid = [](const std::string& path, const std::string& what) {
    throw ValidationError("fan " + path + ": " + what);
  };
  if (!doc.is_object()) invalid("/", "expected an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1 ||
      doc["dim"].get<long long>() > 12)
    invalid("/dim", "expected an integer between 1 and 12");
  const unsigned dim = static_cast<unsigned>(doc["dim"].get<long long>());
  std::vector<Ray> rays;
  if (!doc.contains("rays") || !doc["rays"].is_array()) invalid("/rays", "missing array");
  for (std::size_t i = 0; i < doc["rays"].size(); ++i) {
    const json& r = doc["rays"][i];
    const std::string path = "/rays/" + std::to_string(i);
    if (!r.is_array()) invalid(path, "expected an integer array");
    Ray ray;
    for (const auto& x : r) {
      if (!x.is_number_integer()) invalid(path, "expected integers");
      ray.push_back(static_cast<long>(x.get<long long>()));
    }
    rays.push_back(std::move(ray));
  }
  std::vector<Cone> cones;
  if (!doc.contains("cones") || !doc["cones"].is_array()) invalid("/cones", "missing array");
  for (std::size_t i = 0; i < doc["cones"].size(); ++i) {
    const json& c = doc["cones"][i];
    const std::string path = "/cones/" + std::to_string(i);
    if (!c.is_array()) invalid(path, "expected an index array");
    Cone cone;
    for (const auto& x : c) {
      if (!x.is_number_integer() || x.get<long long>() < 0 || static_cast<std::size_t>(x.get<long long>()) >= rays.size())
        invalid(path, "ray index out of range");
      cone.push_back(static_cast<int>(x.get<long long>()));
    }
    cones.push_back(std::move(cone));
  }
  const bool maximal = doc.contains("maximal") && doc["maximal"].is_boolean() && doc["maximal"].get<bool>();
  Fan f = maximal ? from_maximal_cones(dim, std::move(rays), cones) : Fan(dim, std::move(rays), cones);
  f.validate();
  return f;
}

Fan Fan::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open fan file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return from_json_text(ss.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Ray primitive(const Ray& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  if (g == 0) throw DomainError("the zero vector is not a ray");
  Ray out = v;
  for (auto& x : out) x /= g;
  return out;
}

Fan star_subdivision(const Fan& fan, const Ray& v_in) {
  if (v_in.size() != fan.dim()) throw DomainError("subdivision ray has the wrong dimension");
  const Ray v = primitive(v_in);
  if (fan.ray_index(v)) return fan;
  if (!fan.is_simplicial()) throw DomainError("star subdivision needs a simplicial fan");

  std::vector<Cone> containing;
  for (const auto& c : fan.cones())
    if (!c.empty() && fan.cone_contains(c, v)) containing.push_back(c);
  if (containing.empty()) throw DomainError("subdivision ray lies outside the support of the fan");

  std::vector<Ray> rays = fan.rays();
  rays.push_back(v);
  const int nv = static_cast<int>(rays.size() - 1);
  std::vector<Cone> cones;
  for (const auto& c : fan.cones())
    if (!fan.cone_contains(c, v)) cones.push_back(c);
  for (const auto& sigma : containing) {
    std::set<Cone> faces;
    add_faces(sigma, faces);
    for (const auto& tau : faces) {
      if (fan.cone_contains(tau, v)) continue;
      Cone joined = tau;
      joined.push_back(nv);
      cones.push_back(std::move(joined));
    }
  }
  return Fan(fan.dim(), std::move(rays), cones);
}

Fan standard_cone(unsigned n) {
  std::vector<Ray> rays;
  Cone all;
  for (unsigned i = 0; i < n; ++i) {
    Ray e(n, 0);
    e[i] = 1;
    rays.push_back(e);
    all.push_back(static_cast<int>(i));
  }
  return Fan::from_maximal_cones(n, std::move(rays), {all});
}

Fan a_k_cone(unsigned k) {
  return Fan::from_maximal_cones(2, {{1, 0}, {1, static_cast<long>(k) + 1}}, {{0, 1}});
}

Fan hirzebruch_fan(long a) {
  return Fan::from_maximal_cones(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Fan projective_space_fan(unsigned n) {
  std::vector<Ray> rays;
  for (unsigned i = 0; i < n; ++i) {
    Ray e(n, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(Ray(n, -1));
  std::vector<Cone> maximal;
  for (unsigned skip = 0; skip <= n; ++skip) {
    Cone c;
    for (unsigned i = 0; i <= n; ++i)
      if (i != skip) c.push_back(static_cast<int>(i));
    maximal.push_back(c);
  }
  return Fan::from_maximal_cones(n, std::move(rays), maximal);
}

}  // namespace kdim
