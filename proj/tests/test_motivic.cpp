#include "gen.hpp"

#include "kdim/atoms.hpp"
#include "kdim/errors.hpp"
#include "kdim/measure.hpp"
#include "kdim/motivic.hpp"

#include <doctest.h>

using namespace kdim;
using testgen::Gen;

namespace {

const TLPoly T = TLPoly::tau();
const TLPoly L = TLPoly::lefschetz();

const AtomTable& fixture() {
  static const AtomTable table = AtomTable::load_file(testgen::data_path("atoms.json"));
  return table;
}

std::vector<MotivicClass> fixture_atoms(std::initializer_list<const char*> names) {
  std::vector<MotivicClass> out;
  for (const char* n : names) out.push_back(fixture().at(n).cls());
  return out;
}

/// Homogeneous class of degree d over the given atoms.
MotivicClass homogeneous_class(Gen& g, const std::vector<MotivicClass>& atoms, unsigned d) {
  MotivicClass out = g.homogeneous(d);
  for (const auto& a : atoms) {
    const int ad = *a.degree();
    if (ad <= static_cast<int>(d) && g.coin()) out += a * g.homogeneous(d - static_cast<unsigned>(ad));
  }
  return out;
}

}  // namespace

TEST_CASE("products, involution and projections on examples") {
  const MotivicClass A = MotivicClass::atom("A", 1), B = MotivicClass::atom("B", 2);
  const MotivicClass x = A * MotivicClass(T + 2 * L);
  CHECK(MotivicClass::one() * x == x);
  CHECK((A * T) * (B * L) == (A * B) * (T * L));
  CHECK(MotivicClass(pn(1).poly()) * MotivicClass(pn(1).poly()) == MotivicClass(T * T + 2 * T * L + L * L));
  CHECK(involute(A * L) == A * T);
  CHECK(involute(A * (T + L)) == A * (T + L));
  CHECK(pi2(MotivicClass(T.pow(3))) == MotivicClass(pn(2).poly()));
  CHECK(pi1(MotivicClass(T.pow(3))) == MotivicClass(-T * L * pn(1).poly()));
  CHECK(pi2(A * pn(4).poly() + B * (T * L)).is_zero());
  CHECK((A * (T + L)).to_string() == "(T+L)*A");
  CHECK((A * (-T * L)).to_string() == "-T*L*A");
  CHECK((A + B * T + 3).to_string() == "3+A+T*B");
}

TEST_CASE("degree and homogeneity") {
  CHECK(MotivicClass::tau().degree() == 1);
  for (unsigned k = 0; k < 6; ++k) CHECK(MotivicClass(pn(k).poly()).degree() == static_cast<int>(k));
  CHECK_FALSE((MotivicClass::one() + MotivicClass::tau()).is_homogeneous());
  CHECK_FALSE(MotivicClass::zero().degree().has_value());
  CHECK((MotivicClass::atom("B", 2) * (T * L)).degree() == 4);
}

TEST_CASE("involution is a ring involution and the projections split classes") {
  Gen g(21);
  const auto atoms = testgen::opaque_atoms();
  for (int trial = 0; trial < 300; ++trial) {
    const MotivicClass a = g.cls(atoms, 6, 10), b = g.cls(atoms, 6, 10);
    CHECK(involute(involute(a)) == a);
    CHECK(involute(a * b) == involute(a) * involute(b));
    CHECK(a == pi1(a) + pi2(a) * T);
    CHECK(pi2(involute(a)) == -pi2(a));
    CHECK(pi1(involute(a)) == pi1(a) + pi2(a) * (T + L));
    CHECK(involute(pi1(a)) == pi1(a));
    CHECK(involute(pi2(a)) == pi2(a));
  }
}

TEST_CASE("blow-up and projective bundle relations") {
  const MotivicClass pt = MotivicClass::one();
  const MotivicClass p2 = MotivicClass(pn(2).poly());
  CHECK(blowup_class(p2, pt, 2) == MotivicClass((T + L) * (T + L)));
  CHECK(proj_bundle_class(MotivicClass(pn(1).poly()), 2) == MotivicClass((T + L) * (T + L)));
  CHECK(blowup_class(p2, MotivicClass::zero(), 2) == p2);
  CHECK(blowup_class(MotivicClass(pn(3).poly()), MotivicClass(pn(1).poly()), 2) ==
        MotivicClass(pn(3).poly() + T * L * (T + L)));
  const MotivicClass y = MotivicClass::atom("B", 2) * (T + L);
  CHECK(proj_bundle_class(y, 1) == y);
  CHECK_THROWS_AS(proj_bundle_class(MotivicClass::atom("B", 2) * (T + 1), 2), DegreeMismatchError);
  CHECK(proj_bundle_class(pt, 5) == MotivicClass(pn(4).poly()));
  CHECK_THROWS_AS(blowup_class(p2, pt, 1), DomainError);
  CHECK_THROWS_AS(blowup_class(p2, MotivicClass(T), 2), DegreeMismatchError);
  CHECK_THROWS_AS(proj_bundle_class(pt, 0), DomainError);

  Gen g(22);
  const auto atoms = testgen::opaque_atoms();
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned c = static_cast<unsigned>(g.range(2, 4));
    const unsigned dy = static_cast<unsigned>(g.range(0, 4));
    const MotivicClass yy = homogeneous_class(g, atoms, dy);
    const MotivicClass xx = homogeneous_class(g, atoms, dy + c);
    if (xx.is_zero() || yy.is_zero()) continue;
    const MotivicClass lhs = blowup_class(xx, yy, static_cast<int>(c)) - xx -
                             proj_bundle_class(yy, static_cast<int>(c)) * T + yy * T.pow(c);
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("localized GL_n classes") {
  CHECK(gl_class(1).numerator() == MotivicClass(L - T));
  CHECK(gl_class(2).as_integral() == std::optional<MotivicClass>(MotivicClass((L * L - T * T) * (L * L - L * T))));
  for (unsigned n = 1; n <= 6; ++n) CHECK(gl_class(n) * bgl_class(n) == LocalizedClass::one());
  CHECK_FALSE(bgl_class(2).as_integral().has_value());
}

TEST_CASE("atom table loading and validation") {
  const AtomTable& t = fixture();
  CHECK(t.at("Line").dim == 1);
  CHECK(t.at("E").sym.at(3) == parse_class("P(2)*E", t));
  CHECK_THROWS_AS(t.at("nope"), UnknownAtomError);
  CHECK_THROWS_AS(parse_class("Line + Z", t), UnknownAtomError);

  CHECK_THROWS_AS(AtomTable::from_json_text("[{"), ValidationError);
  CHECK_THROWS_AS(AtomTable::from_json_text(R"j([{"name": "T", "dim": 1}])j"), ValidationError);
  CHECK_THROWS_AS(AtomTable::from_json_text(R"j([{"name": "A", "dim": 1}, {"name": "A", "dim": 2}])j"),
                  ValidationError);
  CHECK_THROWS_AS(AtomTable::from_json_text(R"j([{"name": "A", "dim": -1}])j"), ValidationError);
  CHECK_THROWS_AS(AtomTable::from_json_text(R"j([{"name": "A", "dim": 1, "sym": {"2": "P(3)"}}])j"),
                  ValidationError);
  CHECK_THROWS_AS(
      AtomTable::from_json_text(R"j([{"name": "A", "dim": 1, "measures": {"plurigenera": {"3": [1]}}}])j"),
      ValidationError);
  CHECK_THROWS_AS(
      AtomTable::from_json_text(R"j([{"name": "A", "dim": 2, "measures": {"plurigenera": {"2": [1]}}}])j"),
      ValidationError);
  CHECK_THROWS_AS(AtomTable::from_json_text(R"j([{"name": "A", "dim": 1, "sym_strata": {"2": {"3": "L^2"}}}])j"),
                  ValidationError);
  try {
    AtomTable::from_json_text(R"j({"atoms": [{"name": "A", "dim": 1, "sym": {"2": "P(3)"}}]})j");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("/atoms/0/sym/2") != std::string::npos);
  }
  // Sym entries may refer to atoms declared later.
  const AtomTable fwd = AtomTable::from_json_text(
      R"j([{"name": "A", "dim": 1, "sym": {"2": "B"}}, {"name": "B", "dim": 2}])j");
  CHECK(fwd.at("A").sym.at(2) == fwd.at("B").cls());
}

TEST_CASE("class expressions") {
  const AtomTable& t = fixture();
  CHECK(parse_class("D(L)", t) == MotivicClass(T));
  CHECK(parse_class("blowup(P(2), 1, 2)", t) == MotivicClass((T + L) * (T + L)));
  CHECK(parse_class("pbundle(Line, 2)", t) == t.at("Line").cls() * (T + L));
  CHECK(parse_class("pi2(T^2)", t) == MotivicClass(T + L));
  CHECK(parse_class("pi1(T^2)", t) == MotivicClass(-T * L));
  CHECK(parse_class("E^2*K3 - 2*T*Q", t) ==
        t.at("E").cls() * t.at("E").cls() * t.at("K3").cls() - t.at("Q").cls() * (2 * T));
  CHECK_THROWS_AS(parse_class("blowup(P(2), 1)", t), ParseError);
  CHECK_THROWS_AS(parse_class("Line +", t), ParseError);

  for (unsigned k = 0; k <= 12; ++k) {
    CHECK(parse_class("P" + std::to_string(k), t) == MotivicClass(pn(k).poly()));
    CHECK(TLPoly::parse("P" + std::to_string(k)) == pn(k).poly());
  }
  CHECK_FALSE(projective_shorthand("P01").has_value());
  CHECK_FALSE(projective_shorthand("P4097").has_value());
  CHECK_FALSE(projective_shorthand("Plane").has_value());
  CHECK_THROWS_AS(AtomTable::from_json_text(R"j([{"name": "P2", "dim": 2}])j"), ValidationError);

  Gen g(23);
  const auto atoms = fixture_atoms({"Line", "E", "Q", "Plane", "K3", "C2"});
  for (int trial = 0; trial < 300; ++trial) {
    const MotivicClass c = g.cls(atoms, 6, 6);
    CHECK(parse_class(c.to_string(), t) == c);
    CHECK(parse_class(c.to_string(), t).to_string() == c.to_string());
  }
}

TEST_CASE("measures on examples") {
  const AtomTable& t = fixture();
  const auto count = point_count_measure(t);
  for (unsigned n = 0; n <= 6; ++n) {
    Integer expected = 0, qp = 1;
    for (unsigned i = 0; i <= n; ++i, qp *= 7) expected += qp;
    CHECK(count.apply(MotivicClass(pn(n).poly())).evaluate({{"q", Integer(7)}}) == expected);
  }
  CHECK(hodge_deligne_measure(t).apply(MotivicClass::one()) == NamedPoly::one());
  CHECK(birational_measure(t).apply(t.at("K3").cls() * T).is_zero());
  CHECK(birational_measure(t).apply(t.at("Plane").cls()) == birational_measure(t).apply(MotivicClass(pn(2).poly())));
  CHECK(stably_birational_measure(t).apply(t.at("Q").cls()) == SymbolMonoidRing::one());
  CHECK(hodge_deligne_measure(t).apply(t.at("Q").cls()) == NamedPoly::parse("(1+u*v)^2"));
  CHECK_THROWS_AS(count.apply(t.at("K3").cls()), MissingMeasureDataError);

  const auto probes = standard_measures(t);
  REQUIRE(probes.size() == 4);
  CHECK(probes[0].name == "Hodge-Deligne");
  CHECK_FALSE(probes[1].evaluate(t.at("K3").cls()).has_value());
}

TEST_CASE("measures are ring homomorphisms") {
  const AtomTable& t = fixture();
  Gen g(24);
  const auto all = fixture_atoms({"Line", "E", "Q", "Plane", "K3", "C2"});
  const auto counted = fixture_atoms({"Line", "Q", "Plane"});
  const auto hd = hodge_deligne_measure(t);
  const auto pc = point_count_measure(t);
  const auto bir = birational_measure(t);
  const auto sb = stably_birational_measure(t);
  for (int trial = 0; trial < 150; ++trial) {
    const MotivicClass a = g.cls(all, 4, 4), b = g.cls(all, 4, 4);
    CHECK(hd.apply(a * b) == hd.apply(a) * hd.apply(b));
    CHECK(hd.apply(a + b) == hd.apply(a) + hd.apply(b));
    CHECK(bir.apply(a * b) == bir.apply(a) * bir.apply(b));
    CHECK(bir.apply(a - b) == bir.apply(a) - bir.apply(b));
    CHECK(sb.apply(a * b) == sb.apply(a) * sb.apply(b));
    CHECK(sb.apply(a + b) == sb.apply(a) + sb.apply(b));
    const MotivicClass c = g.cls(counted, 4, 4), d = g.cls(counted, 4, 4);
    CHECK(pc.apply(c * d) == pc.apply(c) * pc.apply(d));
    CHECK(pc.apply(c + d) == pc.apply(c) + pc.apply(d));
  }
}
