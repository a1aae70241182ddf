/*
 * Copyright 2026 The mgreg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * mgreg: command-line front end.
 *
 * Exit status
 *   0  success
 *   1  verify found a failure, or an internal error
 *   2  invalid input (schema, parse, dimension, unsupported presentation)
 *   3  excluded case (P^1 x P^1 bound) without --advisory
 *   4  linear twist growth fails
 *   5  scan result not certified by the window
 */

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mgreg/io.hpp"
#include "mgreg/mgreg.hpp"
#include "mgreg/plot.hpp"
#include "verify.hpp"

namespace {

using namespace mgreg;
using nlohmann::json;

enum Exit : int { kOk = 0, kFailure = 1, kInvalid = 2, kExcluded = 3, kLtgFailure = 4, kUncertain = 5 };

struct Flags {
  std::string problem;
  bool json = false;
  std::string window;
  std::uint32_t prime = 0;
  bool rationals = false;
  std::string svg;
  bool classical_en = false;
  bool advisory = false;
  std::vector<std::string> only;
  unsigned threads = 0;
  std::string at;
  // inline curve data, an alternative to a problem file
  std::string r, d;
  Coord g = -1;
  Coord h0_override = 0;
};

const char* kLtgHypothesis =
    "hypothesis not checked: the complex must be exact away from a subset of dimension at most 1";

std::vector<Coord> parse_vector(const std::string& text) {
  std::vector<Coord> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("\"" + text + "\" is not a comma-separated list of integers");
    }
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

io::Problem load(const Flags& f) {
  if (f.problem.empty()) throw InvalidArgument("a problem file is required");
  return io::load_problem(f.problem);
}

CurveData curve_input(const Flags& f, io::Problem* problem_out = nullptr) {
  if (!f.r.empty() || !f.d.empty()) {
    if (!f.problem.empty()) throw InvalidArgument("give either a problem file or --r/--d, not both");
    if (f.r.empty() || f.d.empty()) throw InvalidArgument("--r and --d go together");
    std::vector<int> r;
    for (Coord x : parse_vector(f.r)) r.push_back(static_cast<int>(x));
    CurveData c{Ambient(r), MultiDegree(parse_vector(f.d)), std::nullopt};
    if (c.degree.size() != c.ambient.n()) throw DimensionMismatch(c.ambient.n(), c.degree.size());
    if (f.g >= 0) c.genus = f.g;
    c.validate();
    return c;
  }
  io::Problem p = load(f);
  if (!std::holds_alternative<CurveData>(p.payload)) {
    throw InvalidArgument(std::string("this command needs a curve payload, got ") + p.kind());
  }
  if (problem_out) *problem_out = p;
  return std::get<CurveData>(p.payload);
}

TwistComplex complex_input(const Flags& f, io::Problem& p) {
  p = load(f);
  if (!std::holds_alternative<TwistComplex>(p.payload)) {
    throw InvalidArgument(std::string("this command needs a complex payload, got ") + p.kind());
  }
  return std::get<TwistComplex>(p.payload);
}

std::string vec_string(const std::vector<Coord>& v) { return to_string(MultiDegree(v)); }

std::string sheaf_name(const MultiDegree& m) { return "O(" + [&] {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? "," : "") + std::to_string(-m[k]);
  return s;
}() + ")"; }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// --- bound -------------------------------------------------------------------

int cmd_bound(const Flags& f) {
  CurveData curve = curve_input(f);
  GlpBound b = glp_regularity_bound(curve);
  const std::string interpretation =
      "I_C is " + to_string(b.bound) + "-regular, so " + to_string(Region::cone(b.bound)) +
      " lies in reg(I_C); in particular C is cut out scheme-theoretically by multihomogeneous "
      "polynomials of multidegree " + to_string(b.bound) + ".";
  const std::string excluded_note =
      "excluded case: on P^1 x P^1 this value is not a valid bound (curves of type (3,2) give counterexamples)";
  if (f.json) {
    json out{{"command", "bound"},
             {"curve", io::to_json(curve)},
             {"a", b.a},
             {"h0", b.h0},
             {"bound", b.bound.components()},
             {"excluded_case", b.excluded_case}};
    if (curve.genus) out["aux_bundle_degree"] = aux_bundle_degree(curve);
    out["interpretation"] = b.excluded_case ? excluded_note : interpretation;
    print_json(out);
  } else {
    std::cout << "ambient      P^" << curve.ambient.dims()[0];
    for (std::size_t k = 1; k < curve.ambient.n(); ++k) std::cout << " x P^" << curve.ambient.dims()[k];
    std::cout << "\nmultidegree  " << to_string(curve.degree) << '\n';
    if (curve.genus) {
      std::cout << "genus        " << *curve.genus << "\ndeg A        " << aux_bundle_degree(curve) << '\n';
    }
    std::cout << "a            " << b.a << "\nh0_A(e_k)    " << vec_string(b.h0) << "\nbound        "
              << to_string(b.bound) << '\n';
    if (b.excluded_case) {
      std::cout << "\n!! " << excluded_note << '\n';
    } else {
      std::cout << '\n' << interpretation << '\n';
    }
  }
  if (b.excluded_case && !f.advisory) return kExcluded;
  return kOk;
}

// --- en-shape ----------------------------------------------------------------

int cmd_en_shape(const Flags& f) {
  io::Problem p;
  CurveData curve = curve_input(f, &p);
  ENOptions opts;
  opts.classical = f.classical_en || p.options.classical_en;
  if (f.h0_override > 0) {
    opts.h0_override = f.h0_override;
  } else if (p.options.h0_override) {
    opts.h0_override = p.options.h0_override;
  }
  ENShape shape = en_complex_shape(curve, opts);
  const std::string hypothesis = opts.h0_override
      ? "hypothesis not checked: h0_A(m) = 0 for all |m| = 2"
      : "";
  if (f.json) {
    json terms = json::array();
    for (std::size_t i = 0; i < shape.complex.terms.size(); ++i) {
      Integer total = 0;
      for (const auto& e : shape.complex.terms[i]) total += e.rank;
      terms.push_back({{"index", i},
                       {"magnitude", shape.a + static_cast<Coord>(i)},
                       {"twists", io::to_json(shape.complex.terms[i])},
                       {"total_rank", io::integer_to_json(total)}});
    }
    json out{{"command", "en-shape"}, {"curve", io::to_json(curve)}, {"a", shape.a},
             {"h0", shape.h0},         {"classical", opts.classical}, {"terms", terms}};
    if (opts.h0_override) out["h0_override"] = *opts.h0_override;
    if (!hypothesis.empty()) out["hypotheses"] = json::array({hypothesis});
    print_json(out);
    return kOk;
  }
  std::cout << "a = " << shape.a << ", h0_A(e_k) = " << vec_string(shape.h0) << ", "
            << shape.complex.terms.size() << " terms"
            << (opts.classical ? " (ranks include the Sym_i factor C(a+i-1,i))" : "") << '\n';
  if (!hypothesis.empty()) std::cout << "!! " << hypothesis << '\n';
  for (std::size_t i = 0; i < shape.complex.terms.size(); ++i) {
    Integer total = 0;
    for (const auto& e : shape.complex.terms[i]) total += e.rank;
    std::cout << "\nE_" << i << "  |m| = " << shape.a + static_cast<Coord>(i) << "  total rank " << total << '\n';
    for (const auto& e : shape.complex.terms[i]) {
      std::cout << "  " << std::left << std::setw(16) << sheaf_name(e.twist) << std::right << e.rank;
      if (opts.classical) {
        std::cout << "   (" << en_rank(e.twist, shape.h0) << " x "
                  << binomial(shape.a + static_cast<Coord>(i) - 1, static_cast<Coord>(i)) << ")";
      }
      std::cout << '\n';
    }
  }
  return kOk;
}

// --- twist complexes ---------------------------------------------------------

int cmd_ltg(const Flags& f) {
  io::Problem p;
  TwistComplex cx = complex_input(f, p);
  LtgResult r = has_linear_twist_growth(cx);
  if (f.json) {
    json out{{"command", "ltg"}, {"linear_twist_growth", r.ok}};
    if (r.witness) out["witness"] = {{"position", r.witness->position}, {"twist", r.witness->twist.components()}};
    print_json(out);
  } else if (r.ok) {
    std::cout << "linear twist growth: yes\n";
  } else {
    std::cout << "linear twist growth: no\nwitness: " << sheaf_name(r.witness->twist) << " in E_"
              << r.witness->position << " dominates no twist of E_0 within magnitude " << r.witness->position
              << '\n';
  }
  return r.ok ? kOk : kLtgFailure;
}

int cmd_lineartoreg(const Flags& f) {
  io::Problem p;
  TwistComplex cx = complex_input(f, p);
  Region region = lineartoreg_bound(cx);
  if (f.json) {
    print_json({{"command", "lineartoreg"}, {"region", io::to_json(region)},
                {"hypotheses", json::array({kLtgHypothesis})}});
  } else {
    std::cout << "!! " << kLtgHypothesis << "\nlinear twist growth: yes\nregion contained in reg(F): "
              << to_string(region) << '\n';
  }
  return kOk;
}

int cmd_msgen(const Flags& f) {
  io::Problem p;
  TwistComplex cx = complex_input(f, p);
  const std::size_t n = cx.ambient.n();
  std::vector<Region> regs;
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < cx.terms.size(); ++i) {
    if (i < p.options.regions.size() && p.options.regions[i]) {
      regs.push_back(*p.options.regions[i]);
    } else {
      regs.push_back(reg_of_twist_sum(n, cx.terms[i], &warnings));
    }
  }
  for (std::size_t i = cx.terms.size(); i < p.options.regions.size(); ++i) {
    regs.push_back(p.options.regions[i] ? *p.options.regions[i] : Region::everything(n));
  }
  Region region = msgen_region(cx.ambient, regs, f.threads ? f.threads : 1);
  if (f.json) {
    json term_regions = json::array();
    for (const auto& r : regs) term_regions.push_back(io::to_json(r));
    print_json({{"command", "msgen"}, {"region", io::to_json(region)}, {"term_regions", term_regions},
                {"warnings", warnings}, {"hypotheses", json::array({kLtgHypothesis})}});
  } else {
    std::cout << "!! " << kLtgHypothesis << '\n';
    for (const auto& w : warnings) std::cout << "warning: " << w << '\n';
    for (std::size_t i = 0; i < regs.size(); ++i) std::cout << "reg(E_" << i << ")  " << to_string(regs[i]) << '\n';
    std::cout << "region contained in reg(F): " << to_string(region) << '\n';
  }
  return kOk;
}

// --- reg-sum -----------------------------------------------------------------

int cmd_reg_sum(const Flags& f) {
  io::Problem p = load(f);
  TwistSum sum;
  if (std::holds_alternative<TwistSum>(p.payload)) {
    sum = std::get<TwistSum>(p.payload);
  } else if (std::holds_alternative<FreePresentation>(p.payload) &&
             std::get<FreePresentation>(p.payload).single_term()) {
    for (const auto& b : std::get<FreePresentation>(p.payload).targets) sum.push_back({b, 1});
  } else {
    throw InvalidArgument(std::string("reg-sum needs a sum payload, got ") + p.kind());
  }
  std::vector<std::string> warnings;
  Region region = reg_of_twist_sum(p.ambient.n(), sum, &warnings);
  std::optional<bool> at_result;
  MultiDegree at;
  if (!f.at.empty()) {
    at = MultiDegree(parse_vector(f.at));
    if (at.size() != p.ambient.n()) throw DimensionMismatch(p.ambient.n(), at.size());
    at_result = is_m_regular_twist_sum(p.ambient, sum, at);
  }
  if (f.json) {
    json out{{"command", "reg-sum"}, {"region", io::to_json(region)}, {"warnings", warnings}};
    if (at_result) out["at"] = {{"m", at.components()}, {"regular", *at_result}};
    print_json(out);
  } else {
    for (const auto& w : warnings) std::cout << "warning: " << w << '\n';
    std::cout << "reg = " << to_string(region) << '\n';
    if (at_result) std::cout << to_string(at) << "-regular: " << (*at_result ? "yes" : "no") << '\n';
  }
  return kOk;
}

// --- scan --------------------------------------------------------------------

FieldConfig field_from(const Flags& f, const io::ProblemOptions& o) {
  if (f.rationals || (o.rationals && f.prime == 0)) return FieldConfig::rationals();
  if (f.prime != 0) return FieldConfig::prime_field(f.prime);
  if (o.prime) return FieldConfig::prime_field(*o.prime);
  return FieldConfig::prime_field();
}

int cmd_scan(const Flags& f) {
  io::Problem p = load(f);
  if (!std::holds_alternative<FreePresentation>(p.payload)) {
    throw InvalidArgument(std::string("scan needs a presentation payload, got ") + p.kind());
  }
  const auto& pres = std::get<FreePresentation>(p.payload);
  Window window;
  if (!f.window.empty()) {
    window = Window::parse(f.window);
  } else if (p.options.window) {
    window = *p.options.window;
  } else {
    throw InvalidArgument("scan needs a window (--window lo..hi,... or options.window)");
  }
  if (window.dim() != p.ambient.n()) throw DimensionMismatch(p.ambient.n(), window.dim());
  const FieldConfig field = field_from(f, p.options);
  ScanResult s = reg_region_scan(pres, window, field, f.threads ? f.threads : p.options.threads);

  if (!f.svg.empty()) {
    std::ofstream out(f.svg);
    if (!out) throw InvalidArgument("cannot write " + f.svg);
    out << plot::svg(s.region, window, p.name.empty() ? "regularity region" : p.name);
  }
  if (f.json) {
    json boundary = json::array(), violations = json::array();
    for (const auto& c : s.boundary_corners) boundary.push_back(c.components());
    for (const auto& c : s.closure_violations) violations.push_back(c.components());
    json out{{"command", "scan"},        {"window", window.to_string()},     {"field", field.describe()},
             {"region", io::to_json(s.region)}, {"certified", s.certified()}, {"boundary_corners", boundary},
             {"closure_violations", violations}, {"warnings", s.warnings}};
    if (!f.svg.empty()) out["svg"] = f.svg;
    print_json(out);
  } else {
    std::cout << "window  " << window.to_string() << "\nfield   " << field.describe() << "\ncorners "
              << to_string(s.region) << '\n';
    for (const auto& w : s.warnings) std::cout << "warning: " << w << '\n';
    if (p.ambient.n() == 2) std::cout << '\n' << plot::ascii(s.region, window);
    if (!f.svg.empty()) std::cout << "svg written to " << f.svg << '\n';
  }
  return s.certified() ? kOk : kUncertain;
}

// --- verify ------------------------------------------------------------------

int cmd_verify(const Flags& f) {
  std::set<std::string> only;
  for (const auto& g : f.only) {
    std::stringstream ss(g);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (std::find(verify::groups().begin(), verify::groups().end(), part) == verify::groups().end()) {
        throw InvalidArgument("unknown verify group \"" + part + "\"");
      }
      only.insert(part);
    }
  }
  const FieldConfig field = f.prime ? FieldConfig::prime_field(f.prime) : FieldConfig::prime_field();
  verify::Suite suite(only, field);
  suite.run();
  std::size_t pass = 0, fail = 0, known = 0;
  for (const auto& c : suite.checks()) {
    pass += c.status == verify::Status::pass;
    fail += c.status == verify::Status::fail;
    known += c.status == verify::Status::known_discrepancy;
  }
  if (f.json) {
    json checks = json::array();
    for (const auto& c : suite.checks()) {
      json j{{"group", c.group}, {"name", c.name}, {"expected", c.expected}, {"actual", c.actual},
             {"status", verify::status_label(c.status)}};
      if (!c.note.empty()) j["note"] = c.note;
      checks.push_back(j);
    }
    print_json({{"command", "verify"}, {"field", field.describe()}, {"checks", checks}, {"passed", pass},
                {"failed", fail}, {"known_discrepancies", known}, {"ok", suite.ok()}});
  } else {
    for (const auto& c : suite.checks()) {
      std::cout << std::left << std::setw(18) << verify::status_label(c.status) << std::setw(9) << c.group << c.name;
      if (c.status != verify::Status::pass) std::cout << "\n    expected " << c.expected << ", got " << c.actual;
      if (!c.note.empty()) std::cout << "\n    " << c.note;
      std::cout << '\n';
    }
    std::cout << '\n' << pass << " passed, " << fail << " failed, " << known << " known discrepancies ("
              << field.describe() << ")\n";
  }
  return suite.ok() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multigraded regularity on products of projective spaces"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", f.json, "Machine-readable output");
  };
  auto problem = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("problem", f.problem, "Problem file (JSON)");
    if (required) opt->required();
  };
  auto curve_flags = [&](CLI::App* sub) {
    sub->add_option("--r", f.r, "Ambient dimensions, e.g. 2,2 (instead of a problem file)");
    sub->add_option("--d", f.d, "Curve multidegree, e.g. 3,3");
    sub->add_option("--g", f.g, "Genus");
  };

  auto* bound = app.add_subcommand("bound", "Regularity bound for a curve");
  problem(bound, false);
  curve_flags(bound);
  common(bound);
  bound->add_flag("--advisory", f.advisory, "Exit 0 in the excluded P^1 x P^1 case");

  auto* en = app.add_subcommand("en-shape", "Twists and ranks of the Eagon-Northcott complex");
  problem(en, false);
  curve_flags(en);
  common(en);
  en->add_flag("--classical-en", f.classical_en, "Multiply term i ranks by C(a+i-1,i)");
  en->add_option("--h0-override", f.h0_override, "Use this value in place of h0(C,A) = a")
      ->check(CLI::Range(Coord{2}, Coord{1} << 20));

  auto* ltg = app.add_subcommand("ltg", "Linear twist growth test");
  problem(ltg, true);
  common(ltg);
  auto* l2r = app.add_subcommand("lineartoreg", "Region bound from the first term of a complex");
  problem(l2r, true);
  common(l2r);
  auto* msgen = app.add_subcommand("msgen", "Region bound from all terms of a complex");
  problem(msgen, true);
  common(msgen);
  msgen->add_option("--threads", f.threads, "Worker threads");

  auto* rsum = app.add_subcommand("reg-sum", "Regularity region of a sum of line bundles");
  problem(rsum, true);
  common(rsum);
  rsum->add_option("--at", f.at, "Also test m-regularity directly, e.g. 1,3");

  auto* scan = app.add_subcommand("scan", "Exact regularity region of a presentation inside a window");
  problem(scan, true);
  common(scan);
  scan->add_option("--window", f.window, "Window, e.g. 0..8,0..8");
  scan->add_option("--prime", f.prime, "Coefficient field characteristic (default 32003)");
  scan->add_flag("--rationals", f.rationals, "Compute over the rationals");
  scan->add_option("--svg", f.svg, "Write a staircase plot (n = 2)");
  scan->add_option("--threads", f.threads, "Worker threads (default: all cores)");

  auto* ver = app.add_subcommand("verify", "Replay the worked examples");
  common(ver);
  ver->add_option("--only", f.only, "Groups: regions, bott, twistcx, glp, cohom (comma separated)");
  ver->add_option("--prime", f.prime, "Coefficient field characteristic (default 32003)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*bound) return cmd_bound(f);
    if (*en) return cmd_en_shape(f);
    if (*ltg) return cmd_ltg(f);
    if (*l2r) return cmd_lineartoreg(f);
    if (*msgen) return cmd_msgen(f);
    if (*rsum) return cmd_reg_sum(f);
    if (*scan) return cmd_scan(f);
    if (*ver) return cmd_verify(f);
  } catch (const LtgFailure& e) {
    if (f.json) {
      print_json({{"error", e.what()},
                  {"witness", {{"position", e.witness().position}, {"twist", e.witness().twist.components()}}}});
    } else {
      std::cerr << "mgreg: " << e.what() << '\n';
    }
    return kLtgFailure;
  } catch (const Error& e) {
    std::cerr << "mgreg: " << e.what() << '\n';
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "mgreg: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "mgreg: internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
