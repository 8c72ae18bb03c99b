#pragma once

// Toric classes, the comparison map phi between a refinement and its base fan,
// the alternating polynomial p_Delta(s, t), and the simplicial toric verifier.

#include "kdim/fan.hpp"
#include "kdim/motivic.hpp"

#include <map>
#include <string>
#include <vector>

namespace kdim {

/// sum over cones of (L - T)^(n - |sigma|) T^|sigma|.
MotivicClass toric_class(const Fan& fan);
/// Class of the orbit closure V(tau) in degree n - |tau|.
MotivicClass orbit_closure_class(const Fan& fan, const Cone& tau);

/// sigma -> smallest cone of delta containing it. Throws ValidationError if sigma
/// is not contained in delta.
std::map<Cone, Cone> phi_map(const Fan& sigma, const Fan& delta);

/// p for the refinement induced over one face of delta, with s -> L and t -> T.
TLPoly p_delta_face(const Cone& face, const std::map<Cone, Cone>& phi);
/// p_Delta(s, t) when delta is a single simplicial cone with its faces.
TLPoly p_delta(const Fan& sigma, const Fan& delta);

struct ToricReport {
  struct Face {
    Cone face;
    TLPoly p;
    bool symmetric = false;
  };
  std::vector<Face> faces;
  bool certified = false;       // every p is symmetric
  bool class_identity = false;  // [Y] = [X] + sum (-1)^|tau| p_tau(L, T) [V(tau)]
  std::string to_string() const;
};

/// delta simplicial, sigma a smooth refinement of delta.
ToricReport toric_dsing_verify(const Fan& delta, const Fan& sigma);

/// Repeated star subdivision at lattice points of fundamental parallelepipeds
/// until every cone is smooth.
Fan resolve(const Fan& fan, unsigned max_steps = 10000);

}  // namespace kdim
