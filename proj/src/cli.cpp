#include "oscdual/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "oscdual/catalog.hpp"
#include "oscdual/io.hpp"

namespace oscdual::cli {

namespace {

using io::json;

struct Report {
  std::string command;
  json inputs = json::object();
  std::string verdict = "pass";
  std::vector<std::string> residuals;
  json data = json::object();
  double timings_ms = 0;

  [[nodiscard]] json to_json() const {
    return {{"command", command},
            {"inputs", inputs},
            {"digest", io::fnv1a_hex(command + inputs.dump())},
            {"verdict", verdict},
            {"residuals", residuals},
            {"data", data},
            {"timings_ms", timings_ms}};
  }

  void fail(const std::string& reason) {
    verdict = "fail";
    residuals.push_back(reason);
  }

  void add_residuals(const PolyVector& polys) {
    for (const auto& p : polys)
      if (!p.is_zero()) residuals.push_back(p.to_string());
    if (!residuals.empty()) verdict = "fail";
  }
};

struct VarietyOptions {
  std::string catalog;
  std::string variety;
  std::string coords;
  std::string params = "t";
  std::string map;

  void attach(CLI::App* app) {
    app->add_option("--catalog", catalog, "monomial:a,b,c | hypersurface:n:F | vfamily:k");
    app->add_option("--variety", variety, "variety file (JSON)");
    app->add_option("--coords", coords, "comma-separated coordinate polynomials");
    app->add_option("--params", params, "comma-separated parameter names")->capture_default_str();
    app->add_option("--map", map, "projective map file applied to the input");
  }

  ParamVariety load(json& inputs) const {
    const int given = !catalog.empty() + !variety.empty() + !coords.empty();
    if (given != 1) throw std::invalid_argument("give exactly one of --catalog, --variety, --coords");
    std::optional<ParamVariety> x;
    if (!catalog.empty()) {
      inputs["catalog"] = catalog;
      x = catalog_entry(catalog);
    } else if (!variety.empty()) {
      const json j = io::read_json_file(variety);
      inputs["variety"] = j;
      x = io::variety_from_json(j);
    } else {
      std::vector<std::string> names;
      std::stringstream ss(params);
      std::string p;
      while (std::getline(ss, p, ',')) {
        p.erase(0, p.find_first_not_of(' '));
        p.erase(p.find_last_not_of(' ') + 1);
        names.push_back(p);
      }
      inputs["coords"] = coords;
      inputs["params"] = params;
      x = ParamVariety(names, io::parse_poly_list(coords, names));
    }
    if (!map.empty()) {
      const json j = io::read_json_file(map);
      inputs["map"] = j;
      x = apply_map(io::map_from_json(j), *x);
    }
    io::check_degree_cap(*x);
    return *x;
  }
};

struct FormChoice {
  std::optional<SkewForm> form;
  std::optional<ContactSearch> search;
};

FormChoice load_form(const std::string& spec, const ParamVariety& x, json& inputs) {
  inputs["form"] = spec;
  FormChoice c;
  if (spec == "auto") {
    c.search = find_contact_form(x);
    c.form = c.search->form;
  } else if (spec == "standard") {
    if (x.coords().size() % 2 != 0) throw std::invalid_argument("standard form needs an odd-dimensional ambient space");
    c.form = standard_B(x.coords().size() / 2);
  } else {
    const json j = io::read_json_file(spec);
    inputs["form"] = j;
    c.form = io::form_from_json(j);
    if (!c.form->is_nondegenerate()) throw std::invalid_argument("skew form is degenerate");
  }
  return c;
}

json search_json(const ContactSearch& s) {
  json basis = json::array();
  for (const auto& b : s.solution_basis) basis.push_back(io::to_json(b.matrix()));
  return {{"solution_dim", s.solution_dim}, {"solution_basis", basis}, {"generic_pfaffian", s.generic_pfaffian.to_string()}};
}

std::string no_form_message(const ContactSearch& s) {
  return "no nondegenerate contact form (solution dim " + std::to_string(s.solution_dim) + ")";
}

PolyVector point_option(const std::string& text) { return io::parse_poly_list(text); }

}  // namespace

std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_word = false;
  char quote = 0;
  for (char ch : line) {
    if (quote != 0) {
      if (ch == quote)
        quote = 0;
      else
        cur += ch;
    } else if (ch == '"' || ch == '\'') {
      quote = ch;
      in_word = true;
    } else if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
      if (in_word) out.push_back(cur);
      cur.clear();
      in_word = false;
    } else {
      cur += ch;
      in_word = true;
    }
  }
  if (quote != 0) throw std::invalid_argument("unterminated quote");
  if (in_word) out.push_back(cur);
  return out;
}

namespace {

int run_suite(const std::string& path, Report& report, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  report.inputs["suite"] = path;
  json runs = json::array();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto words = split_command_line(line);
    if (words.empty() || words[0][0] == '#') continue;
    int expected = 0;
    if (words[0].rfind("expect=", 0) == 0) {
      expected = std::stoi(words[0].substr(7));
      words.erase(words.begin());
    }
    if (!words.empty() && words[0] == "oscdual") words.erase(words.begin());
    if (std::find(words.begin(), words.end(), "--suite") != words.end())
      throw std::invalid_argument("suites cannot be nested (line " + std::to_string(line_no) + ")");
    std::ostringstream sink;
    std::ostringstream diag;
    const int code = run(words, sink, diag);
    std::string verdict;
    try {
      verdict = json::parse(sink.str()).at("verdict").get<std::string>();
    } catch (const std::exception&) {
      verdict = "error";
    }
    const bool ok = code == expected;
    runs.push_back({{"line", line_no}, {"args", words}, {"exit", code}, {"expected", expected}, {"verdict", verdict}, {"ok", ok}});
    if (!ok) {
      report.fail("line " + std::to_string(line_no) + ": exit " + std::to_string(code) + ", expected " +
                  std::to_string(expected));
      err << diag.str();
    }
  }
  report.data["runs"] = runs;
  report.data["total"] = runs.size();
  return report.verdict == "pass" ? pass : certified_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of osculating self-dual varieties and Legendrian certificates", "oscdual"};
  app.fallthrough();
  std::string out_file;
  std::string suite;
  app.add_option("--out", out_file, "write the JSON report to this file");
  app.add_option("--suite", suite, "run one invocation per line; lines may start with expect=N");

  auto* theta = app.add_subcommand("theta", "apply theta to an incidence point");
  std::string xs;
  std::string ys;
  theta->add_option("--x", xs, "point of P^n, comma-separated")->required();
  theta->add_option("--y", ys, "hyperplane through it, comma-separated")->required();

  auto* beta = app.add_subcommand("beta", "apply the inverse map beta to a point of P^{2n-1}");
  std::string zs;
  beta->add_option("--z", zs, "point, comma-separated")->required();

  VarietyOptions vo;
  std::string form = "auto";
  std::string lemma;
  long deg_d = -1;
  long deg_g = -1;
  std::size_t pull_n = 2;

  auto* conormal = app.add_subcommand("conormal", "conormal lift of a plane curve");
  vo.attach(conormal);
  auto* push = app.add_subcommand("pushforward", "theta image of the conormal lift of a plane curve");
  vo.attach(push);
  auto* gen = app.add_subcommand("genericity", "check the hypotheses of Lemma A or B for a plane curve");
  vo.attach(gen);
  gen->add_option("--lemma", lemma, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
  auto* leg = app.add_subcommand("legendrian", "Legendrian certificate");
  vo.attach(leg);
  leg->add_option("--form", form, "auto | standard | FILE")->capture_default_str();
  auto* sd = app.add_subcommand("selfdual", "osculating self-duality certificate");
  vo.attach(sd);
  sd->add_option("--form", form, "auto | standard | FILE")->capture_default_str();
  auto* dualize = app.add_subcommand("dualize", "osculating dual of a k-fold in P^{2k+1}");
  vo.attach(dualize);
  auto* degree = app.add_subcommand("degree", "degree of a parametrized curve, or the degree formulas");
  vo.attach(degree);
  degree->add_option("--d", deg_d, "degree of a nodal plane curve");
  degree->add_option("--g", deg_g, "its geometric genus");
  auto* cat = app.add_subcommand("catalog", "build a catalog entry and check its witnesses");
  cat->add_option("--catalog", vo.catalog, "monomial:a,b,c | hypersurface:n:F | vfamily:k")->required();
  auto* pull = app.add_subcommand("verify-pullback", "check that beta pulls eta back to omega");
  pull->add_option("--n", pull_n, "2..4")->capture_default_str();
  app.require_subcommand(0, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (app.get_subcommands().empty() && suite.empty()) throw CLI::RequiredError("a subcommand or --suite");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  Report report;
  int code = pass;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!suite.empty()) {
      report.command = "suite";
      code = run_suite(suite, report, err);
    } else {
      CLI::App* sub = app.get_subcommands().front();
      report.command = sub->get_name();
      json& in = report.inputs;
      if (sub == theta) {
        in["x"] = xs;
        in["y"] = ys;
        const IncidencePoint p{ProjPoint(point_option(xs)), ProjPoint(point_option(ys))};
        report.data["z"] = io::to_json(theta_point(p, p.n()).coords());
      } else if (sub == beta) {
        in["z"] = zs;
        const IncidencePoint p = beta_point(ProjPoint(point_option(zs)));
        report.data["x"] = io::to_json(p.x.coords());
        report.data["y"] = io::to_json(p.y.coords());
      } else if (sub == conormal) {
        const ConormalLift l = conormal_lift(vo.load(in));
        report.data["point"] = io::to_json(l.point);
        report.data["line"] = io::to_json(l.line);
        report.data["is_line"] = l.is_line;
      } else if (sub == push) {
        const ParamVariety c = theta_pushforward(conormal_lift(vo.load(in)));
        const LegendrianCheck lc = legendrian_check(c, standard_B(2));
        report.data["variety"] = io::to_json(c);
        report.data["degree"] = parametric_curve_degree(c);
        report.data["in_hyperplane"] = !hyperplane_containment(c).empty();
        report.add_residuals(lc.residuals);
      } else if (sub == gen) {
        in["lemma"] = lemma;
        const ParamVariety c = vo.load(in);
        const GenericityReport r = lemma == "A" ? genericity_A(c) : genericity_B(c);
        report.data = io::to_json(r);
        for (const auto& h : r.hypotheses)
          if (!h.pass) report.fail("(" + std::to_string(h.index) + ") " + h.statement + ": " + h.witness);
      } else if (sub == leg) {
        const ParamVariety x = vo.load(in);
        const FormChoice fc = load_form(form, x, in);
        if (fc.search) report.data["search"] = search_json(*fc.search);
        if (!fc.form) {
          report.fail(no_form_message(*fc.search));
        } else {
          const LegendrianCheck lc = legendrian_check(x, *fc.form);
          report.data["form"] = io::to_json(*fc.form);
          report.data["labels"] = lc.labels;
          report.data["integral"] = lc.integral;
          report.data["legendrian"] = lc.legendrian;
          report.add_residuals(lc.residuals);
          if (lc.integral && !lc.legendrian) report.fail("integral but of dimension below n-1");
        }
      } else if (sub == sd) {
        const ParamVariety x = vo.load(in);
        const FormChoice fc = load_form(form, x, in);
        if (fc.search) report.data["search"] = search_json(*fc.search);
        if (!fc.form) {
          report.fail(no_form_message(*fc.search));
        } else {
          const SelfDualReport r = selfdual_certificate(x, *fc.form);
          report.data = io::to_json(r);
          report.data["form"] = io::to_json(*fc.form);
          if (fc.search) report.data["search"] = search_json(*fc.search);
          if (r.selfdual)
            report.data["dual"] = io::to_json(osculating_dual(x));
          else
            report.fail(r.message);
          report.add_residuals(r.residuals);
        }
      } else if (sub == dualize) {
        const ParamVariety x = vo.load(in);
        report.data["dual"] = io::to_json(osculating_dual(x));
        report.data["osc2_generic_dim"] = generic_osculating_dim(x, 2);
      } else if (sub == degree) {
        if (deg_d >= 0 || deg_g >= 0) {
          if (deg_d < 0 || deg_g < 0) throw std::invalid_argument("--d and --g go together");
          in["d"] = deg_d;
          in["g"] = deg_g;
          const ExpectedDegrees e = expected_degrees(deg_d, deg_g);
          report.data = {{"nodes", e.nodes}, {"dual_degree", e.dual_degree}, {"legendrian_degree", e.legendrian_degree}};
        } else {
          const ParamVariety x = vo.load(in);
          const int d = parametric_curve_degree(x);
          const int count = hyperplane_section_count(x);
          report.data = {{"degree", d}, {"section_count", count}};
          if (count != d) report.fail("hyperplane section count " + std::to_string(count) + " differs from degree");
        }
      } else if (sub == cat) {
        const ParamVariety x = vo.load(in);
        report.data["variety"] = io::to_json(x);
        if (vo.catalog.rfind("monomial:", 0) == 0) {
          const auto parts = vo.catalog.substr(9);
          const auto p1 = parts.find(',');
          const auto p2 = parts.find(',', p1 + 1);
          const MonomialSpec s{std::stoi(parts.substr(0, p1)), std::stoi(parts.substr(p1 + 1, p2 - p1 - 1)),
                               std::stoi(parts.substr(p2 + 1))};
          const MonomialWitness w = monomial_selfduality_witness(s);
          const DualExponents e = monomial_dual_exponents(s);
          report.data["dual"] = io::to_json(w.dual);
          report.data["dual_exponents"] = w.dual_exponents;
          report.data["expected_exponents"] = e.exponents;
          report.data["symmetric"] = e.symmetric;
          report.data["normalizer"] = io::to_json(w.normalizer.matrix());
          report.data["certified"] = w.certified;
          if (const auto f = monomial_contact_form(s)) report.data["contact_form"] = io::to_json(*f);
          if (!w.certified) report.fail("reversal witness does not certify self-duality");
        } else if (vo.catalog.rfind("vfamily:", 0) == 0) {
          const VFamilyWitness w = v_family_witness(x.param_count());
          report.data["osc2_generic_dim"] = generic_osculating_dim(x, 2);
          report.data["dual"] = io::to_json(w.dual);
          report.data["reparametrized"] = io::to_json(w.reparametrized);
          report.data["correction"] = w.correction.to_string();
          report.data["correction_in_span"] = w.correction_in_span;
          if (w.map) report.data["map"] = io::to_json(w.map->matrix());
          report.data["certified"] = w.certified;
          const ContactSearch s = find_contact_form(x);
          report.data["search"] = search_json(s);
          if (s.form) report.data["contact_form"] = io::to_json(*s.form);
          if (!w.certified) report.fail("no linear witness between V and its dual");
          if (!w.correction_in_span) report.fail("correction term is not a combination of t_i and t_i^2");
        } else {
          const SelfDualReport r = selfdual_certificate(x, standard_B(x.coords().size() / 2));
          report.data["certificate"] = io::to_json(r);
          report.data["second_fundamental_form_dim"] = generic_osculating_dim(x, 2) - x.param_count();
          if (!r.selfdual) report.fail(r.message);
          report.add_residuals(r.residuals);
        }
      } else if (sub == pull) {
        in["n"] = pull_n;
        const PullbackCheck c = verify_pullback(pull_n);
        report.data["pullback"] = io::to_json(c.pullback);
        report.data["omega"] = io::to_json(c.omega);
        report.add_residuals(c.residuals);
      }
      code = report.verdict == "pass" ? pass : certified_failure;
    }
  } catch (const std::exception& e) {
    report.verdict = "error";
    report.residuals.clear();
    report.data = {{"error", e.what()}};
    err << "error: " << e.what() << "\n";
    code = usage_error;
  }
  report.timings_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string text = report.to_json().dump(2) + "\n";
  if (out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(out_file);
    if (!f) {
      err << "error: cannot write " << out_file << "\n";
      return usage_error;
    }
    f << text;
  }
  return code;
}

}  // namespace oscdual::cli
