#include "cli.hpp"

#include "kdim/atoms.hpp"
#include "kdim/brieskorn.hpp"
#include "kdim/errors.hpp"
#include "kdim/incidence.hpp"
#include "kdim/lambda.hpp"
#include "kdim/measure.hpp"
#include "kdim/toric.hpp"
#include "kdim/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace kdim {

namespace {

using nlohmann::json;

struct Options {
  std::string atoms_path;
  bool json = false;
  std::string expr;
  unsigned order = 8;
  std::string measure;
  unsigned d = 2;
  std::optional<long> q;
  std::vector<unsigned> hankel;  // J M
  std::optional<unsigned> certify_h;
  unsigned j = 1;
  unsigned m = 1;
  std::optional<unsigned> isolated;
  std::vector<std::string> files;
  std::vector<long> exponents;
  unsigned h = 2;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
    if (!opt.atoms_path.empty()) table_ = AtomTable::load_file(opt.atoms_path);
  }

  int eval() {
    const MotivicClass c = parse_class(opt_.expr, table_);
    if (opt_.json) {
      json j{{"input", opt_.expr}, {"class", c.to_string()}, {"homogeneous", c.is_homogeneous()}};
      j["degree"] = c.degree() ? json(*c.degree()) : json(nullptr);
      emit(j);
    } else {
      out_ << c.to_string() << "\n";
    }
    return kExitOk;
  }

  int decompose() {
    const MotivicClass c = parse_class(opt_.expr, table_);
    const MotivicClass a = pi1(c), b = pi2(c), dc = involute(c);
    if (opt_.json) {
      emit(json{{"input", opt_.expr}, {"pi1", a.to_string()}, {"pi2", b.to_string()}, {"D", dc.to_string()}});
    } else {
      out_ << "pi1 = " << a << "\n"
           << "pi2 = " << b << "\n"
           << "D = " << dc << "\n";
    }
    return kExitOk;
  }

  int zeta() {
    json j = json::object();
    if (opt_.certify_h) {
      const MultisetCertificate cert = identity_multiset_certificate(*opt_.certify_h, opt_.j);
      const NatMonoidRing sample = binomial_hankel_det(*opt_.certify_h, opt_.j, opt_.m);
      if (opt_.json) {
        j["certificate"] = certificate_json(cert);
        j["sample"] = {{"m", opt_.m}, {"det", sample.to_string()}};
      } else {
        out_ << cert.to_string() << "det(m=" << opt_.m << ") = " << sample << "\n";
      }
      if (opt_.expr.empty()) {
        if (opt_.json) emit(j);
        return kExitOk;
      }
    }
    if (opt_.expr.empty()) throw ValidationError("zeta needs a class expression or --certify");
    unsigned order = opt_.order;
    std::optional<std::pair<unsigned, unsigned>> scan;
    if (!opt_.hankel.empty()) {
      if (opt_.hankel.size() != 2) throw ValidationError("--hankel expects J M");
      scan = std::make_pair(opt_.hankel[0], opt_.hankel[1]);
      order = std::max(order, scan->second + 2 * scan->first);
    }
    const MotivicClass c = parse_class(opt_.expr, table_);
    const ClassSeries z = kapranov_zeta(c, order, table_);
    with_measure(z.coefficients(), [&](const auto& coeffs) {
      using R = typename std::decay_t<decltype(coeffs)>::value_type;
      std::vector<R> head(coeffs.begin(), coeffs.begin() + opt_.order + 1);
      const TruncatedSeries<R> printed(opt_.order, head);
      std::optional<ScanReport> report;
      if (scan) report = rationality_scan(coeffs, scan->first, scan->second);
      if (opt_.json) {
        json series = json::array();
        for (const auto& x : head) series.push_back(x.to_string());
        j["series"] = series;
        j["order"] = opt_.order;
        if (report) j["hankel"] = scan_json(*report);
        emit(j);
      } else {
        out_ << "Z(t) = " << printed.to_string() << "\n";
        if (report) out_ << report->to_string();
      }
    });
    return kExitOk;
  }

  int hankel() {
    const MotivicClass c = parse_class(opt_.expr, table_);
    const ClassSeries z = kapranov_zeta(c, opt_.m + 2 * opt_.j, table_);
    with_measure(z.coefficients(), [&](const auto& coeffs) {
      const auto det = hankel_det(coeffs, opt_.m, opt_.j);
      if (opt_.json)
        emit(json{{"m", opt_.m}, {"j", opt_.j}, {"det", det.to_string()}});
      else
        out_ << "det(m=" << opt_.m << ", j=" << opt_.j << ") = " << det.to_string() << "\n";
    });
    return kExitOk;
  }

  int certify() {
    const MultisetCertificate cert = identity_multiset_certificate(opt_.h, opt_.j);
    json dets = json::array();
    std::string text;
    for (unsigned m = 1; m <= opt_.m; ++m) {
      const NatMonoidRing d = binomial_hankel_det(opt_.h, opt_.j, m);
      dets.push_back({{"m", m}, {"det", d.to_string()}, {"collapse", collapse_to_integer(d).get_str()}});
      text += "det(m=" + std::to_string(m) + ") = " + d.to_string() + "  [collapse " +
              collapse_to_integer(d).get_str() + "]\n";
    }
    if (opt_.json) {
      emit(json{{"certificate", certificate_json(cert)}, {"determinants", dets}});
    } else {
      out_ << cert.to_string() << text;
    }
    return kExitOk;
  }

  int measure() {
    const MotivicClass c = parse_class(opt_.expr, table_);
    json j{{"input", opt_.expr}};
    if (opt_.measure.empty()) {
      for (const auto& probe : standard_measures(table_)) {
        auto v = probe.evaluate(c);
        if (opt_.json)
          j[probe.name] = v ? json(*v) : json(nullptr);
        else
          out_ << probe.name << ": " << (v ? *v : std::string("unavailable")) << "\n";
      }
      if (opt_.json) emit(j);
      return kExitOk;
    }
    with_measure(std::vector<MotivicClass>{c}, [&](const auto& v) {
      std::string value = v.front().to_string();
      if constexpr (std::is_same_v<typename std::decay_t<decltype(v)>::value_type, NamedPoly>) {
        if (opt_.q) value = v.front().evaluate({{"q", Integer(*opt_.q)}}).get_str();
      }
      if (opt_.json) {
        j[opt_.measure] = value;
        emit(j);
      } else {
        out_ << value << "\n";
      }
    });
    return kExitOk;
  }

  int toric() {
    if (opt_.files.empty() || opt_.files.size() > 2) throw ValidationError("toric expects FAN [REFINEMENT]");
    const Fan delta = Fan::load_file(opt_.files[0]);
    json j{{"fan", delta.to_string()},
           {"simplicial", delta.is_simplicial()},
           {"smooth", delta.is_smooth()},
           {"class", toric_class(delta).to_string()}};
    std::string text = "fan: " + delta.to_string() + "\n" + "simplicial: " + (delta.is_simplicial() ? "yes" : "no") +
                       "\n" + "smooth: " + (delta.is_smooth() ? "yes" : "no") + "\n" +
                       "class: " + toric_class(delta).to_string() + "\n";
    if (!delta.is_simplicial()) {
      text += "verdict: not simplicial, no certificate\n";
      j["verdict"] = "not simplicial";
    } else {
      const Fan sigma = opt_.files.size() == 2 ? Fan::load_file(opt_.files[1]) : resolve(delta);
      const ToricReport report = toric_dsing_verify(delta, sigma);
      text += "refinement: " + sigma.to_string() + "\n" + report.to_string();
      json faces = json::array();
      for (const auto& f : report.faces) faces.push_back({{"face", f.face}, {"p", f.p.to_string()}, {"symmetric", f.symmetric}});
      j["refinement"] = sigma.to_string();
      j["faces"] = faces;
      j["class_identity"] = report.class_identity;
      j["verdict"] = report.certified ? "D-singular" : "not certified";
    }
    if (opt_.json)
      emit(j);
    else
      out_ << text;
    return kExitOk;
  }

  int brieskorn() {
    const BrieskornResult r = brieskorn_rhm(opt_.exponents);
    if (opt_.json) {
      json j{{"exponents", opt_.exponents}, {"rhm", r.rhm}};
      j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
      emit(j);
    } else {
      out_ << r.to_string() << "\n";
    }
    return kExitOk;
  }

  int glue() {
    if (opt_.files.empty() || opt_.files.size() > 2) throw ValidationError("glue expects one or two incidence files");
    const SncIncidence a = SncIncidence::load_file(opt_.files[0], table_);
    const MotivicClass ca = boundary_class(a);
    if (opt_.files.size() == 1) {
      json j{{"class", ca.to_string()}};
      std::string text = "boundary class: " + ca.to_string() + "\n";
      if (opt_.isolated) {
        const Verdict v = isolated_dsing_check(a, *opt_.isolated, table_);
        j["isolated"] = verdict_json(v);
        text += "isolated singularity check against P(" + std::to_string(*opt_.isolated) + "): " + v.to_string() +
                (v.kind == Verdict::Kind::Equal ? " (D-singular)" : "") + "\n";
      }
      if (opt_.json)
        emit(j);
      else
        out_ << text;
      return kExitOk;
    }
    const SncIncidence b = SncIncidence::load_file(opt_.files[1], table_);
    const MotivicClass cb = boundary_class(b);
    const Verdict v = compare_compactifications(a, b, table_);
    if (opt_.json) {
      emit(json{{"verdict", verdict_json(v)}, {"class1", ca.to_string()}, {"class2", cb.to_string()}});
    } else {
      out_ << "verdict: " << v.to_string() << "\n";
      if (v.kind == Verdict::Kind::Equal)
        out_ << "class: " << ca << "\n";
      else
        out_ << "class 1: " << ca << "\n"
             << "class 2: " << cb << "\n";
      if (v.kind == Verdict::Kind::Separated)
        out_ << v.measure << ": " << v.lhs_value << " vs " << v.rhs_value << "\n";
    }
    return kExitOk;
  }

 private:
  template <class F>
  void with_measure(const std::vector<MotivicClass>& coeffs, F&& fn) {
    auto mapped = [&](const auto& measure) {
      using R = std::decay_t<decltype(measure.apply(MotivicClass()))>;
      std::vector<R> out;
      for (const auto& c : coeffs) out.push_back(measure.apply(c));
      fn(out);
    };
    const std::string& name = opt_.measure;
    if (name.empty() || name == "id")
      fn(coeffs);
    else if (name == "count")
      mapped(point_count_measure(table_));
    else if (name == "E" || name == "hodge")
      mapped(hodge_deligne_measure(table_));
    else if (name == "bir")
      mapped(birational_measure(table_));
    else if (name == "sb")
      mapped(stably_birational_measure(table_));
    else if (name == "mu")
      mapped(mu_measure(table_, opt_.d));
    else
      throw ValidationError("unknown measure '" + name + "' (expected id, count, E, bir, sb, mu)");
  }

  static json certificate_json(const MultisetCertificate& c) {
    json j{{"h", c.h},
           {"j", c.j},
           {"valid", c.valid},
           {"identity_unique", c.identity_unique},
           {"signed_count", c.signed_count},
           {"identity_multiset", c.identity_multiset}};
    j["threshold"] = c.threshold ? json(c.threshold->get_str()) : json(nullptr);
    return j;
  }

  static json scan_json(const ScanReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      json vanishing = json::array();
      for (std::size_t m = 0; m < row.vanishes.size(); ++m)
        if (row.vanishes[m]) vanishing.push_back(m);
      rows.push_back({{"j", row.j}, {"vanishing", vanishing}, {"values", row.values}});
    }
    return json{{"rows", rows}, {"classification", r.classification()}};
  }

  static json verdict_json(const Verdict& v) {
    json j{{"kind", v.to_string()}, {"lhs", v.lhs_value}, {"rhs", v.rhs_value}};
    if (!v.measure.empty()) j["measure"] = v.measure;
    return j;
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  const Options& opt_;
  std::ostream& out_;
  AtomTable table_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact computations in the graded Grothendieck ring of varieties", "kdim"};
  app.require_subcommand(1);
  app.add_option("--atoms", opt.atoms_path, "Atom table (JSON)")->envname("MOTIVIC_ATOMS");
  app.add_flag("--json", opt.json, "Emit JSON");

  auto* eval = app.add_subcommand("eval", "Evaluate a class expression");
  eval->add_option("expr", opt.expr)->required();
  auto* decompose = app.add_subcommand("decompose", "Print pi1, pi2 and D of a class");
  decompose->add_option("expr", opt.expr)->required();

  auto* zeta = app.add_subcommand("zeta", "Kapranov zeta function, Hankel scan and certificate");
  zeta->add_option("expr", opt.expr);
  zeta->add_option("--N", opt.order, "Truncation order");
  zeta->add_option("--measure", opt.measure, "id, count, E, bir, sb or mu");
  zeta->add_option("--d", opt.d, "Plurigenus degree for mu");
  zeta->add_option("--hankel", opt.hankel, "J M: scan j <= J, m <= M")->expected(2);
  zeta->add_option("--certify", opt.certify_h, "Binomial certificate for this h");
  zeta->add_option("--j", opt.j, "Determinant size parameter for --certify");
  zeta->add_option("--m", opt.m, "Sample index for --certify");

  auto* hankel = app.add_subcommand("hankel", "One Hankel determinant of a zeta function");
  hankel->add_option("expr", opt.expr)->required();
  hankel->add_option("--j", opt.j);
  hankel->add_option("--m", opt.m);
  hankel->add_option("--measure", opt.measure);
  hankel->add_option("--d", opt.d);

  auto* certify = app.add_subcommand("certify", "Binomial Hankel determinants and the multiset certificate");
  certify->add_option("H", opt.h, "Binomial parameter h >= 2")->required();
  certify->add_option("--j", opt.j);
  certify->add_option("--m", opt.m, "Print determinants for m = 1..M");

  auto* toric = app.add_subcommand("toric", "Simplicial toric D-singularity verifier");
  toric->add_option("files", opt.files, "FAN [REFINEMENT]")->required();

  auto* brieskorn = app.add_subcommand("brieskorn", "Brieskorn-Pham rational homology manifold test");
  brieskorn->add_option("exponents", opt.exponents)->required();

  auto* glue = app.add_subcommand("glue", "Boundary class of one incidence file, or compare two");
  glue->add_option("files", opt.files)->required();
  glue->add_option("--isolated", opt.isolated, "Check the isolated-singularity criterion against P(n)");

  auto* measure = app.add_subcommand("measure", "Evaluate motivic measures");
  measure->add_option("expr", opt.expr)->required();
  measure->add_option("--measure", opt.measure);
  measure->add_option("--q", opt.q, "Evaluate the point count at q");
  measure->add_option("--d", opt.d);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    // A leading space keeps "-L+T" a positional value; the expression parser skips it.
    std::vector<std::string> reversed;
    for (auto it = args.rbegin(); it != args.rend(); ++it)
      reversed.push_back(it->size() > 1 && (*it)[0] == '-' && (*it)[1] != '-' && *it != "-h" ? " " + *it : *it);
    app.parse(reversed);
    if (!opt.expr.empty() && opt.expr.front() == ' ') opt.expr.erase(0, 1);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    Session s(opt, out);
    if (eval->parsed()) return s.eval();
    if (decompose->parsed()) return s.decompose();
    if (zeta->parsed()) return s.zeta();
    if (hankel->parsed()) return s.hankel();
    if (certify->parsed()) return s.certify();
    if (toric->parsed()) return s.toric();
    if (brieskorn->parsed()) return s.brieskorn();
    if (glue->parsed()) return s.glue();
    if (measure->parsed()) return s.measure();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownAtomError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnknownAtom;
  } catch (const MissingSymDataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMissingSym;
  } catch (const MissingMeasureDataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMissingMeasure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace kdim
