#include "kdim/incidence.hpp"

#include "kdim/errors.hpp"
#include "kdim/measure.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kdim {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw ValidationError("incidence " + (path.empty() ? std::string("/") : path) + ": " + what);
}

std::string subset_string(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& n : s) out += (out.size() > 1 ? "," : "") + n;
  return out + "}";
}

}  // namespace

SncIncidence SncIncidence::from_json_text(std::string_view text, const AtomTable& table) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("incidence is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) invalid("", "expected an object");
  SncIncidence inc;
  if (!doc.contains("components") || !doc["components"].is_array()) invalid("/components", "missing array");
  for (std::size_t i = 0; i < doc["components"].size(); ++i) {
    const json& c = doc["components"][i];
    if (!c.is_string()) invalid("/components/" + std::to_string(i), "expected a name");
    inc.components.push_back(c.get<std::string>());
  }
  if (!doc.contains("strata") || !doc["strata"].is_array()) invalid("/strata", "missing array");
  for (std::size_t i = 0; i < doc["strata"].size(); ++i) {
    const json& s = doc["strata"][i];
    const std::string path = "/strata/" + std::to_string(i);
    if (!s.is_object()) invalid(path, "expected an object");
    Stratum st;
    if (!s.contains("subset") || !s["subset"].is_array()) invalid(path + "/subset", "missing array");
    for (std::size_t k = 0; k < s["subset"].size(); ++k) {
      const json& n = s["subset"][k];
      if (!n.is_string()) invalid(path + "/subset/" + std::to_string(k), "expected a component name");
      if (!st.subset.insert(n.get<std::string>()).second)
        invalid(path + "/subset/" + std::to_string(k), "repeated component '" + n.get<std::string>() + "'");
    }
    if (!s.contains("class") || !s["class"].is_string()) invalid(path + "/class", "missing class expression");
    try {
      st.cls = parse_class(s["class"].get<std::string>(), table);
    } catch (const ParseError& e) {
      invalid(path + "/class", e.what());
    } catch (const UnknownAtomError& e) {
      invalid(path + "/class", e.what());
    }
    if (!s.contains("dim") || !s["dim"].is_number_integer()) invalid(path + "/dim", "missing integer");
    st.dim = static_cast<int>(s["dim"].get<long long>());
    inc.strata.push_back(std::move(st));
  }
  try {
    inc.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("incidence: ") + e.what());
  }
  return inc;
}

SncIncidence SncIncidence::load_file(const std::string& path, const AtomTable& table) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open incidence file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return from_json_text(ss.str(), table);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void SncIncidence::validate() const {
  std::set<std::string> names;
  for (const auto& c : components)
    if (!names.insert(c).second) throw ValidationError("duplicate component '" + c + "'");
  std::map<std::set<std::string>, const Stratum*> by_subset;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const Stratum& s = strata[i];
    const std::string where = "/strata/" + std::to_string(i);
    if (s.subset.empty()) throw ValidationError(where + "/subset: must be nonempty");
    for (const auto& n : s.subset)
      if (!names.count(n)) throw ValidationError(where + "/subset: unknown component '" + n + "'");
    if (!by_subset.emplace(s.subset, &s).second)
      throw ValidationError(where + ": duplicate stratum " + subset_string(s.subset));
    if (s.dim < 0) throw ValidationError(where + "/dim: must be nonnegative");
    if (!s.cls.is_homogeneous() || (!s.cls.is_zero() && *s.cls.degree() != s.dim))
      throw ValidationError(where + "/class: expected a homogeneous class of degree " + std::to_string(s.dim) +
                            ", got " + s.cls.to_string());
  }
  for (const auto& c : components)
    if (!by_subset.count({c})) throw ValidationError("component '" + c + "' has no stratum");
  for (const auto& [j, s] : by_subset)
    for (const auto& [jp, sp] : by_subset) {
      if (jp.size() >= j.size() || !std::includes(j.begin(), j.end(), jp.begin(), jp.end())) continue;
      const int expected = sp->dim - static_cast<int>(j.size() - jp.size());
      if (s->dim != expected)
        throw ValidationError("stratum " + subset_string(j) + " has dim " + std::to_string(s->dim) + " but " +
                              subset_string(jp) + " forces " + std::to_string(expected));
    }
}

MotivicClass boundary_class(const SncIncidence& inc) {
  MotivicClass out;
  for (const auto& s : inc.strata) {
    const unsigned k = static_cast<unsigned>(s.subset.size());
    MotivicClass term = s.cls * pn(k - 1).poly();
    if (k % 2 == 1)
      out += term;
    else
      out -= term;
  }
  return out;
}

std::string Verdict::to_string() const {
  switch (kind) {
    case Kind::Equal: return "EQUAL";
    case Kind::Separated: return "SEPARATED(" + measure + ")";
    case Kind::Inconclusive: return "INCONCLUSIVE";
  }
  return {};
}

Verdict compare_classes(const MotivicClass& a, const MotivicClass& b, const AtomTable& table) {
  Verdict v;
  if (a == b) {
    v.kind = Verdict::Kind::Equal;
    v.lhs_value = v.rhs_value = a.to_string();
    return v;
  }
  for (const auto& probe : standard_measures(table)) {
    auto x = probe.evaluate(a);
    auto y = probe.evaluate(b);
    if (x && y && *x != *y) {
      v.kind = Verdict::Kind::Separated;
      v.measure = probe.name;
      v.lhs_value = *x;
      v.rhs_value = *y;
      return v;
    }
  }
  v.kind = Verdict::Kind::Inconclusive;
  v.lhs_value = a.to_string();
  v.rhs_value = b.to_string();
  return v;
}

Verdict compare_compactifications(const SncIncidence& a, const SncIncidence& b, const AtomTable& table) {
  return compare_classes(boundary_class(a), boundary_class(b), table);
}

Verdict cone_dsing_check(const MotivicClass& y, unsigned n, const AtomTable& table) {
  if (!y.is_homogeneous() || y.degree().value_or(-1) != static_cast<int>(n))
    throw DegreeMismatchError("cone base must be homogeneous of degree " + std::to_string(n) + ", got " +
                              y.to_string());
  return compare_classes(y, MotivicClass(pn(n).poly()), table);
}

Verdict isolated_dsing_check(const SncIncidence& exceptional, unsigned n, const AtomTable& table) {
  return compare_classes(boundary_class(exceptional), MotivicClass(pn(n).poly()), table);
}

}  // namespace kdim
