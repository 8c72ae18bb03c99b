#pragma once

// Motivic measures: ring homomorphisms out of the free model, given by values of
// T, L and every atom.

#include "kdim/atoms.hpp"
#include "kdim/errors.hpp"
#include "kdim/monoid_ring.hpp"
#include "kdim/named_poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kdim {

template <class R>
struct Measure {
  std::string name;
  R tau;
  R lef;
  /// Value of a single atom; throws MissingMeasureDataError when unavailable.
  std::function<R(const std::string&)> atom_value;

  R apply(const MotivicClass& c) const {
    R total = R::zero();
    for (const auto& [m, p] : c.terms()) {
      R mono = R::one();
      for (const auto& [atom, e] : m.powers()) {
        const R v = atom_value(atom);
        for (unsigned i = 0; i < e; ++i) mono = mono * v;
      }
      total = total + p.template evaluate<R>(tau, lef, R::one()) * mono;
    }
    return total;
  }
};

/// T -> 1, L -> q, atoms -> their point counts.
Measure<NamedPoly> point_count_measure(const AtomTable& table);
/// T -> 1, L -> u*v, atoms -> their E-polynomials.
Measure<NamedPoly> hodge_deligne_measure(const AtomTable& table);
/// T -> 0, L -> [Rat], atoms -> their birational symbols.
Measure<SymbolMonoidRing> birational_measure(const AtomTable& table);
/// T -> 1, L -> 0, atoms -> their stable birational symbols.
Measure<SymbolMonoidRing> stably_birational_measure(const AtomTable& table);

/// A measure with its value printed canonically, for comparisons across target rings.
struct MeasureProbe {
  std::string name;
  /// nullopt when some atom lacks data for this measure.
  std::function<std::optional<std::string>(const MotivicClass&)> evaluate;
};

/// Hodge-Deligne, point count, birational, stably birational, in that order.
std::vector<MeasureProbe> standard_measures(const AtomTable& table);

template <class R>
MeasureProbe make_probe(Measure<R> measure) {
  return MeasureProbe{measure.name, [measure](const MotivicClass& c) -> std::optional<std::string> {
                        try {
                          return measure.apply(c).to_string();
                        } catch (const MissingMeasureDataError&) {
                          return std::nullopt;
                        }
                      }};
}

}  // namespace kdim
