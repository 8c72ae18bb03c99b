#include "kdim/measure.hpp"

namespace kdim {

namespace {

[[noreturn]] void missing(const std::string& measure, const std::string& atom) {
  throw MissingMeasureDataError("atom '" + atom + "' has no " + measure + " data");
}

}  // namespace

Measure<NamedPoly> point_count_measure(const AtomTable& table) {
  return {"point-count", NamedPoly(1), NamedPoly::variable("q"), [&table](const std::string& name) {
            const Atom& a = table.at(name);
            if (!a.count_q) missing("point-count", name);
            return *a.count_q;
          }};
}

Measure<NamedPoly> hodge_deligne_measure(const AtomTable& table) {
  return {"Hodge-Deligne", NamedPoly(1), NamedPoly::variable("u") * NamedPoly::variable("v"),
          [&table](const std::string& name) {
            const Atom& a = table.at(name);
            if (!a.e_poly) missing("Hodge-Deligne", name);
            return *a.e_poly;
          }};
}

Measure<SymbolMonoidRing> birational_measure(const AtomTable& table) {
  return {"birational", SymbolMonoidRing(0), SymbolMonoidRing::basis({{"Rat", 1}}),
          [&table](const std::string& name) {
            const Atom& a = table.at(name);
            if (!a.bir) missing("birational", name);
            return SymbolMonoidRing::basis(SymbolMonoid::parse(*a.bir));
          }};
}

Measure<SymbolMonoidRing> stably_birational_measure(const AtomTable& table) {
  return {"stably-birational", SymbolMonoidRing(1), SymbolMonoidRing(0), [&table](const std::string& name) {
            const Atom& a = table.at(name);
            if (!a.sb) missing("stably-birational", name);
            return SymbolMonoidRing::basis(SymbolMonoid::parse(*a.sb));
          }};
}

std::vector<MeasureProbe> standard_measures(const AtomTable& table) {
  return {make_probe(hodge_deligne_measure(table)), make_probe(point_count_measure(table)),
          make_probe(birational_measure(table)), make_probe(stably_birational_measure(table))};
}

}  // namespace kdim
