#pragma once

// Atom tables: the declared smooth proper generators, their measure data and
// symmetric-power tables, plus the class-expression parser that resolves them.

#include "kdim/motivic.hpp"
#include "kdim/named_poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kdim {

struct Atom {
  std::string name;
  unsigned dim = 0;

  std::optional<NamedPoly> count_q;  // point count as a polynomial in q
  std::optional<NamedPoly> e_poly;   // Hodge-Deligne polynomial in u, v
  std::optional<std::string> sb;     // stably birational symbol product
  std::optional<std::string> bir;    // birational symbol product
  std::map<unsigned, std::vector<Integer>> plurigenera;  // d -> (h^1, ..., h^dim)

  std::map<unsigned, MotivicClass> sym;  // m -> [Sym^m]
  /// m -> partition label ("2+1+1") -> class of the corresponding stratum of Sym^m.
  std::map<unsigned, std::map<std::string, MotivicClass>> sym_strata;

  MotivicClass cls() const { return MotivicClass::atom(name, dim); }
};

class AtomTable {
 public:
  AtomTable() = default;

  /// Parse JSON text: an array of atom objects, or {"atoms": [...]}.
  static AtomTable from_json_text(std::string_view text);
  static AtomTable load_file(const std::string& path);

  /// Throws ValidationError on a duplicate or reserved name.
  void add(Atom atom);

  const Atom* find(const std::string& name) const;
  /// Throws UnknownAtomError.
  const Atom& at(const std::string& name) const;
  const std::map<std::string, Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }

 private:
  std::map<std::string, Atom> atoms_;
};

bool is_reserved_name(const std::string& name);

/// Class-expression grammar: the polynomial grammar plus atom names and the calls
/// blowup(X, Y, c), pbundle(Y, r), D(x), pi1(x), pi2(x).
MotivicClass parse_class(std::string_view text, const AtomTable& table);

}  // namespace kdim
