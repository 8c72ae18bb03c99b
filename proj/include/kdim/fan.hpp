#pragma once

// Rational polyhedral fans in Z^n: primitive rays and cones as sorted ray-index
// sets (the empty cone included).

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kdim {

using Ray = std::vector<long>;
using Cone = std::vector<int>;

class Fan {
 public:
  Fan() = default;
  /// Rays and an explicit, face-closed list of cones; the empty cone is added.
  Fan(unsigned dim, std::vector<Ray> rays, const std::vector<Cone>& cones);
  /// Rays and maximal simplicial cones; all faces are generated.
  static Fan from_maximal_cones(unsigned dim, std::vector<Ray> rays, const std::vector<Cone>& maximal);

  /// {"dim": n, "rays": [[...]], "cones": [[...]], "maximal": bool}. Validates.
  static Fan from_json_text(std::string_view text);
  static Fan load_file(const std::string& path);

  unsigned dim() const { return dim_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const std::set<Cone>& cones() const { return cones_; }
  std::vector<Cone> maximal_cones() const;

  /// Throws ValidationError: ray shapes, primitivity, index ranges, face closure.
  void validate() const;

  bool cone_is_simplicial(const Cone& c) const;
  /// Rays extend to a basis of the saturated lattice (gcd of maximal minors is 1).
  bool cone_is_smooth(const Cone& c) const;
  bool is_simplicial() const;
  bool is_smooth() const;

  std::optional<int> ray_index(const Ray& v) const;
  /// Whether v lies in the (simplicial) cone; throws DomainError for non-simplicial cones.
  bool cone_contains(const Cone& c, const Ray& v) const;

  std::string to_string() const;
  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  unsigned dim_ = 0;
  std::vector<Ray> rays_;
  std::set<Cone> cones_;
};

/// Divide by the gcd of the coordinates; throws DomainError on the zero vector.
Ray primitive(const Ray& v);

/// Star subdivision of a simplicial fan at v (made primitive). An existing ray
/// leaves the fan unchanged; v outside the support throws DomainError.
Fan star_subdivision(const Fan& fan, const Ray& v);

/// Standard fans.
Fan standard_cone(unsigned n);           // the positive orthant with all faces
Fan a_k_cone(unsigned k);                // <(1,0),(1,k+1)>, the A_k quotient cone
Fan hirzebruch_fan(long a);              // the complete fan of F_a
Fan projective_space_fan(unsigned n);    // the complete fan of P^n

}  // namespace kdim
