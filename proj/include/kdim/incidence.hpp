#pragma once

// Simple-normal-crossings incidence data, boundary classes and the
// three-valued comparison verdicts built on motivic measures.

#include "kdim/atoms.hpp"
#include "kdim/motivic.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kdim {

struct SncIncidence {
  struct Stratum {
    std::set<std::string> subset;
    MotivicClass cls;
    int dim = 0;
  };
  std::vector<std::string> components;
  std::vector<Stratum> strata;

  /// Throws ValidationError with a JSON-pointer path on malformed input.
  static SncIncidence from_json_text(std::string_view text, const AtomTable& table);
  static SncIncidence load_file(const std::string& path, const AtomTable& table);

  /// Names, degrees and the codimension consistency between nested strata.
  void validate() const;
};

/// sum over nonempty J of (-1)^(|J|-1) [D_J] [P^(|J|-1)].
MotivicClass boundary_class(const SncIncidence& inc);

struct Verdict {
  enum class Kind { Equal, Separated, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::string measure;  // set when separated
  std::string lhs_value, rhs_value;
  std::string to_string() const;
};

/// EQUAL on exact agreement in the free model, otherwise the first standard
/// measure that tells the two classes apart, otherwise INCONCLUSIVE.
Verdict compare_classes(const MotivicClass& a, const MotivicClass& b, const AtomTable& table);
Verdict compare_compactifications(const SncIncidence& a, const SncIncidence& b, const AtomTable& table);

/// [Y] against [P^n] for the base of a cone; EQUAL means D-singularities.
Verdict cone_dsing_check(const MotivicClass& y, unsigned n, const AtomTable& table);
/// Exceptional-locus boundary class against [P^n] for an isolated singularity in dimension n+1.
Verdict isolated_dsing_check(const SncIncidence& exceptional, unsigned n, const AtomTable& table);

}  // namespace kdim
