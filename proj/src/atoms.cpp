#include "kdim/atoms.hpp"

#include "kdim/errors.hpp"
#include "kdim/monoid_ring.hpp"
#include "kdim/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace kdim {

namespace {

using nlohmann::json;

const char* const kReserved[] = {"T", "L", "P", "D", "pi1", "pi2", "blowup", "pbundle", "t"};

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

struct ClassSemantics {
  using Value = MotivicClass;
  const AtomTable& table;

  static long small_integer(const Value& v, const std::string& what, std::size_t pos) {
    auto p = v.as_polynomial();
    std::optional<Integer> c = p ? p->as_constant() : std::nullopt;
    if (!c || !c->fits_slong_p() || *c < -static_cast<long>(kMaxExponent) || *c > kMaxExponent)
      throw ParseError(what + " must be a small integer", pos);
    return c->get_si();
  }

  Value integer(const Integer& n) const { return MotivicClass(TLPoly(n)); }

  Value identifier(const std::string& name, std::size_t) const {
    if (name == "T") return MotivicClass::tau();
    if (name == "L") return MotivicClass::lefschetz();
    if (auto k = projective_shorthand(name)) return MotivicClass(pn(*k).poly());
    return table.at(name).cls();
  }

  Value call(const std::string& name, std::vector<Value> args, std::size_t pos) const {
    auto arity = [&](std::size_t n) {
      if (args.size() != n)
        throw ParseError(name + " expects " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"), pos);
    };
    if (name == "P") {
      arity(1);
      long k = small_integer(args[0], "P argument", pos);
      if (k < 0) throw ParseError("P argument must be nonnegative", pos);
      return MotivicClass(pn(static_cast<unsigned>(k)).poly());
    }
    if (name == "D") {
      arity(1);
      return involute(args[0]);
    }
    if (name == "pi1") {
      arity(1);
      return pi1(args[0]);
    }
    if (name == "pi2") {
      arity(1);
      return pi2(args[0]);
    }
    if (name == "blowup") {
      arity(3);
      return blowup_class(args[0], args[1], static_cast<int>(small_integer(args[2], "codimension", pos)));
    }
    if (name == "pbundle") {
      arity(2);
      return proj_bundle_class(args[0], static_cast<int>(small_integer(args[1], "rank", pos)));
    }
    throw ParseError("unknown function '" + name + "'", pos);
  }

  Value add(Value a, Value b) const { return a + b; }
  Value sub(Value a, Value b) const { return a - b; }
  Value mul(Value a, Value b) const { return a * b; }
  Value neg(Value a) const { return -a; }
  Value pow(Value a, unsigned e, std::size_t) const { return a.pow(e); }
};

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw ValidationError("atom table " + (path.empty() ? std::string("/") : path) + ": " + what);
}

NamedPoly poly_field(const json& j, const std::string& path) {
  if (j.is_number_integer()) return NamedPoly(Integer(static_cast<long>(j.get<long long>())));
  if (j.is_string()) {
    try {
      return NamedPoly::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      invalid(path, e.what());
    }
  }
  invalid(path, "expected an integer or a polynomial string");
}

unsigned key_to_unsigned(const std::string& key, const std::string& path) {
  if (key.empty() || key.size() > 6 || !std::all_of(key.begin(), key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    invalid(path, "key '" + key + "' is not a small nonnegative integer");
  return static_cast<unsigned>(std::stoul(key));
}

MotivicClass class_field(const json& j, const std::string& path, const AtomTable& table) {
  if (!j.is_string()) invalid(path, "expected a class expression string");
  try {
    return parse_class(j.get<std::string>(), table);
  } catch (const ParseError& e) {
    invalid(path, e.what());
  } catch (const UnknownAtomError& e) {
    invalid(path, e.what());
  }
}

void check_partition_label(const std::string& label, unsigned m, const std::string& path) {
  unsigned total = 0;
  unsigned prev = ~0u;
  std::stringstream ss(label);
  std::string part;
  while (std::getline(ss, part, '+')) {
    unsigned v = key_to_unsigned(part, path);
    if (v == 0 || v > prev) invalid(path, "partition '" + label + "' must list positive parts in non-increasing order");
    prev = v;
    total += v;
  }
  if (total != m) invalid(path, "partition '" + label + "' does not sum to " + std::to_string(m));
}

}  // namespace

bool is_reserved_name(const std::string& name) {
  for (const char* r : kReserved)
    if (name == r) return true;
  return projective_shorthand(name).has_value();
}

void AtomTable::add(Atom atom) {
  if (!is_identifier(atom.name)) throw ValidationError("atom name '" + atom.name + "' is not an identifier");
  if (is_reserved_name(atom.name)) throw ValidationError("atom name '" + atom.name + "' is reserved");
  if (atoms_.count(atom.name)) throw ValidationError("duplicate atom '" + atom.name + "'");
  atoms_.emplace(atom.name, std::move(atom));
}

const Atom* AtomTable::find(const std::string& name) const {
  auto it = atoms_.find(name);
  return it == atoms_.end() ? nullptr : &it->second;
}

const Atom& AtomTable::at(const std::string& name) const {
  if (const Atom* a = find(name)) return *a;
  throw UnknownAtomError(name);
}

AtomTable AtomTable::from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("atom table is not valid JSON: ") + e.what());
  }
  const json* list = &doc;
  std::string base;
  if (doc.is_object() && doc.contains("atoms")) {
    list = &doc["atoms"];
    base = "/atoms";
  }
  if (!list->is_array()) invalid(base, "expected an array of atoms");

  // Pass 1: names, dimensions and scalar measure data.
  AtomTable table;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const json& a = (*list)[i];
    const std::string path = base + "/" + std::to_string(i);
    if (!a.is_object()) invalid(path, "expected an object");
    if (!a.contains("name") || !a["name"].is_string()) invalid(path + "/name", "missing string field");
    if (!a.contains("dim") || !a["dim"].is_number_integer() || a["dim"].get<long long>() < 0 ||
        a["dim"].get<long long>() > 1000)
      invalid(path + "/dim", "missing or invalid nonnegative dimension");
    Atom atom;
    atom.name = a["name"].get<std::string>();
    atom.dim = static_cast<unsigned>(a["dim"].get<long long>());
    if (a.contains("measures")) {
      const json& m = a["measures"];
      const std::string mp = path + "/measures";
      if (!m.is_object()) invalid(mp, "expected an object");
      if (m.contains("count_q")) atom.count_q = poly_field(m["count_q"], mp + "/count_q");
      if (m.contains("E")) atom.e_poly = poly_field(m["E"], mp + "/E");
      for (const char* key : {"sb", "bir"}) {
        if (!m.contains(key)) continue;
        const std::string kp = mp + "/" + key;
        if (!m[key].is_string()) invalid(kp, "expected a symbol product string");
        try {
          SymbolMonoid::parse(m[key].get<std::string>());
        } catch (const ParseError& e) {
          invalid(kp, e.what());
        }
        (std::string(key) == "sb" ? atom.sb : atom.bir) = m[key].get<std::string>();
      }
      if (m.contains("plurigenera")) {
        const json& pg = m["plurigenera"];
        const std::string pp = mp + "/plurigenera";
        if (!pg.is_object()) invalid(pp, "expected an object keyed by d");
        for (const auto& [key, vec] : pg.items()) {
          const std::string vp = pp + "/" + key;
          unsigned d = key_to_unsigned(key, vp);
          if (d == 0 || d % 2 != 0) invalid(vp, "d must be a positive even integer");
          if (!vec.is_array() || vec.size() != atom.dim)
            invalid(vp, "expected an array of " + std::to_string(atom.dim) + " integers (h^1..h^dim)");
          std::vector<Integer> hs;
          for (const auto& h : vec) {
            if (!h.is_number_integer() || h.get<long long>() < 0) invalid(vp, "entries must be nonnegative integers");
            hs.emplace_back(Integer(static_cast<long>(h.get<long long>())));
          }
          atom.plurigenera.emplace(d, std::move(hs));
        }
      }
    }
    try {
      table.add(std::move(atom));
    } catch (const ValidationError& e) {
      invalid(path + "/name", e.what());
    }
  }

  // Pass 2: symmetric-power data, which may mention any atom.
  std::map<std::string, Atom> resolved = table.atoms_;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const json& a = (*list)[i];
    const std::string path = base + "/" + std::to_string(i);
    Atom& atom = resolved.at(a["name"].get<std::string>());
    if (a.contains("sym")) {
      const json& s = a["sym"];
      if (!s.is_object()) invalid(path + "/sym", "expected an object keyed by m");
      for (const auto& [key, expr] : s.items()) {
        const std::string sp = path + "/sym/" + key;
        unsigned m = key_to_unsigned(key, sp);
        if (m == 0) invalid(sp, "m must be positive");
        MotivicClass c = class_field(expr, sp, table);
        if (c.is_zero() || !c.is_homogeneous() || *c.degree() != static_cast<int>(m * atom.dim))
          invalid(sp, "Sym^" + key + " must be homogeneous of degree " + std::to_string(m * atom.dim) + ", got " +
                          c.to_string());
        atom.sym.emplace(m, std::move(c));
      }
    }
    if (a.contains("sym_strata")) {
      const json& s = a["sym_strata"];
      if (!s.is_object()) invalid(path + "/sym_strata", "expected an object keyed by m");
      for (const auto& [key, strata] : s.items()) {
        const std::string sp = path + "/sym_strata/" + key;
        unsigned m = key_to_unsigned(key, sp);
        if (m == 0) invalid(sp, "m must be positive");
        if (!strata.is_object()) invalid(sp, "expected an object keyed by partition");
        for (const auto& [label, expr] : strata.items()) {
          const std::string lp = sp + "/" + label;
          check_partition_label(label, m, lp);
          atom.sym_strata[m].emplace(label, class_field(expr, lp, table));
        }
      }
    }
  }
  table.atoms_ = std::move(resolved);
  return table;
}

AtomTable AtomTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open atom table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

MotivicClass parse_class(std::string_view text, const AtomTable& table) {
  return parse_with(text, ClassSemantics{table});
}

}  // namespace kdim
