#include "thv/cli.hpp"

#include <CLI11.hpp>

#include "thv/eval.hpp"
#include "thv/modules.hpp"
#include "thv/parser.hpp"
#include "thv/serialize.hpp"
#include "thv/structure.hpp"
#include "thv/verify.hpp"

namespace thv {

namespace {

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& s) {
  const std::size_t dots = s.find("..");
  if (dots == std::string::npos)
    throw UsageError("window must have the form <a>..<b>, got '" + s + "'");
  std::int64_t lo, hi;
  try {
    lo = std::stoll(s.substr(0, dots));
    hi = std::stoll(s.substr(dots + 2));
  } catch (const std::exception&) {
    throw UsageError("window must have the form <a>..<b>, got '" + s + "'");
  }
  if (lo > hi) throw UsageError("empty window '" + s + "'");
  return {lo, hi};
}

std::vector<Generator> parse_atom_list(const std::string& s) {
  std::vector<Generator> gens;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    const std::string atom = s.substr(start, comma - start);
    if (atom.empty()) throw UsageError("empty atom in generator list '" + s + "'");
    const ExprPtr e = parse(atom);
    const auto* g = std::get_if<Expression::GeneratorAtom>(&e->node);
    if (g == nullptr)
      throw UsageError("'" + atom + "' is not a generator atom (expected L[m] or I[m])");
    gens.push_back(g->g);
    start = comma + 1;
  }
  return gens;
}

GeneratorOrder parse_order_spec(const std::string& s) {
  if (s == "default") return GeneratorOrder();
  const std::string prefix = "ideal-last=";
  if (s.rfind(prefix, 0) == 0)
    return GeneratorOrder::with_last_set(parse_atom_list(s.substr(prefix.size())));
  throw UsageError("--order must be 'default' or 'ideal-last=<atoms>', got '" + s + "'");
}

LeftIdeal parse_ideal_spec(const std::string& s) {
  if (s == "all-I") return LeftIdeal::all_i();
  const std::string prefix = "gens=";
  if (s.rfind(prefix, 0) == 0)
    return LeftIdeal::from_generators(parse_atom_list(s.substr(prefix.size())));
  throw UsageError("--ideal must be 'all-I' or 'gens=<atoms>', got '" + s + "'");
}

Rational parse_rational_flag(const std::string& s, const char* name) {
  try {
    return parse_rational(s);
  } catch (const ParseError& e) {
    throw UsageError(std::string(name) + ": " + e.what());
  }
}

void emit_element(CommandResult& res, const EnvelopingElement& a, bool json) {
  if (json) {
    res.doc = to_json(a);
  } else {
    res.text = to_text(a) + "\n";
  }
}

std::string support_text(const SupportReport& r) {
  std::string out;
  for (const SupportRow& row : r.rows)
    out += "offset " + std::to_string(row.offset) + ": weight " + to_string(row.weight) +
           ", dim " + std::to_string(row.dim) + "\n";
  return out;
}

std::string axioms_text(const AxiomCheckReport& r) {
  std::string out;
  if (r.pass()) {
    out = "pass: " + std::to_string(r.checks) + " checks, " + std::to_string(r.skipped) +
          " skipped (truncation boundary)\n";
  } else {
    for (const AxiomViolation& v : r.violations)
      out += "violation: x=" + v.x + " y=" + v.y + " on " + v.vector_label + ": " + v.detail +
             "\n";
    out += "fail: " + std::to_string(r.violations.size()) + " violations in " +
           std::to_string(r.checks) + " checks, " + std::to_string(r.skipped) + " skipped\n";
  }
  return out;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult res;

  CLI::App app{"exact symbolic engine for the twisted Heisenberg-Virasoro algebra"};
  app.name("thv");
  app.require_subcommand(0, 1);

  bool json = false;
  std::uint64_t step_budget = 0;
  app.add_flag("--json", json, "emit the structured (JSON) document instead of text");
  app.add_option("--step-budget", step_budget,
                 "bound on rewrite steps (0 = unbounded); exceeding it is an error");

  auto* cmd_bracket = app.add_subcommand("bracket", "Lie bracket of two expressions");
  std::string br_lhs, br_rhs;
  cmd_bracket->add_option("lhs", br_lhs, "left expression")->required();
  cmd_bracket->add_option("rhs", br_rhs, "right expression")->required();

  auto* cmd_normalize = app.add_subcommand("normalize", "PBW canonical form of an expression");
  std::string norm_expr;
  std::string norm_order = "default";
  cmd_normalize->add_option("expr", norm_expr, "expression")->required();
  cmd_normalize->add_option("--order", norm_order, "default | ideal-last=<atoms>");

  auto* cmd_reduce =
      app.add_subcommand("reduce", "canonical coset representative modulo a left ideal");
  std::string red_expr, red_ideal;
  cmd_reduce->add_option("expr", red_expr, "expression")->required();
  cmd_reduce->add_option("--ideal", red_ideal, "all-I | gens=<atom list>")->required();

  auto* cmd_jacobi =
      app.add_subcommand("verify-jacobi", "exhaustive antisymmetry/Jacobi sweep on a window");
  std::string jac_window = "-6..6";
  cmd_jacobi->add_option("--window", jac_window, "index window <a>..<b> (default -6..6)");

  auto* cmd_verma = app.add_subcommand("verma", "truncated highest-weight module queries");
  std::string v_lambda, v_hi, v_c, v_ci, v_cli;
  int v_depth = 0;
  bool v_dims = false;
  std::string v_act, v_on, v_support;
  cmd_verma->add_option("--lambda", v_lambda, "highest L[0]-weight (rational)")->required();
  cmd_verma->add_option("--hi", v_hi, "I[0] scalar (rational)")->required();
  cmd_verma->add_option("--c", v_c, "C charge (rational)")->required();
  cmd_verma->add_option("--ci", v_ci, "CI charge (rational)")->required();
  cmd_verma->add_option("--cli", v_cli, "CLI charge (rational)")->required();
  cmd_verma->add_option("--depth", v_depth, "truncation depth N >= 0")->required();
  cmd_verma->add_flag("--dims", v_dims, "print weight-space dimensions at lambda-n, n=0..N");
  cmd_verma->add_option("--act", v_act, "expression to act with (needs --on)");
  cmd_verma->add_option("--on", v_on, "expression u; the vector acted on is u*vac");
  cmd_verma->add_option("--support", v_support, "support report over lambda+<a>..<b>");

  auto* cmd_series = app.add_subcommand("intseries", "intermediate-series module queries");
  std::string s_alpha, s_beta, s_f;
  int s_window = 0;
  bool s_axioms = false;
  std::string s_support;
  std::string s_gen_window = "-3..3";
  cmd_series->add_option("--alpha", s_alpha, "alpha (rational)")->required();
  cmd_series->add_option("--beta", s_beta, "beta (rational)")->required();
  cmd_series->add_option("--f", s_f, "I-action scalar F (rational)")->required();
  cmd_series->add_option("--window", s_window, "basis window W >= 1 (v_k for |k| <= W)")
      ->required();
  cmd_series->add_flag("--check-axioms", s_axioms, "exact bracket-compatibility check");
  cmd_series->add_option("--gen-window", s_gen_window,
                         "generator window for --check-axioms (default -3..3)");
  cmd_series->add_option("--support", s_support, "support report over alpha+<a>..<b>");

  auto* cmd_paper = app.add_subcommand("verify-paper", "run the full verification harness");
  int p_window = 8;
  cmd_paper->add_option("--window", p_window, "window for the identity families (default 8)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<const char*> argv;
    argv.push_back("thv");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    const RewriteOptions opts{step_budget, RewriteStrategy::RightmostFirst};

    if (app.get_subcommands().empty()) {
      res.text = app.help();
      res.code = 2;
      return res;
    }

    if (cmd_bracket->parsed()) {
      const EnvelopingElement a = eval(*parse(br_lhs), GeneratorOrder(), opts);
      const EnvelopingElement b = eval(*parse(br_rhs), GeneratorOrder(), opts);
      const auto x = to_lie(a);
      const auto y = to_lie(b);
      const EnvelopingElement out = (x && y) ? lift(bracket(*x, *y))
                                             : multiply(a, b, opts) - multiply(b, a, opts);
      emit_element(res, out, json);
    } else if (cmd_normalize->parsed()) {
      emit_element(res, eval(*parse(norm_expr), parse_order_spec(norm_order), opts), json);
    } else if (cmd_reduce->parsed()) {
      const EnvelopingElement a = eval(*parse(red_expr), GeneratorOrder(), opts);
      emit_element(res, reduce_mod_left_ideal(a, parse_ideal_spec(red_ideal), opts), json);
    } else if (cmd_jacobi->parsed()) {
      const auto [lo, hi] = parse_window(jac_window);
      const StructureCheckReport report = verify_structure_window(lo, hi);
      if (json)
        res.doc = to_json(report);
      else if (report.ok)
        res.text = "ok: antisymmetry on " + std::to_string(report.pairs_checked) +
                   " pairs, jacobi on " + std::to_string(report.triples_checked) +
                   " triples, window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                   "]\n";
      else
        res.text = "violation: " + report.first_violation + "\n";
      res.code = report.ok ? 0 : 1;
    } else if (cmd_verma->parsed()) {
      VermaParams params{parse_rational_flag(v_lambda, "--lambda"),
                         parse_rational_flag(v_hi, "--hi"),
                         parse_rational_flag(v_c, "--c"),
                         parse_rational_flag(v_ci, "--ci"),
                         parse_rational_flag(v_cli, "--cli"),
                         v_depth};
      const TruncatedVermaModule m(params);
      const int modes = int(v_dims) + int(!v_act.empty()) + int(!v_support.empty());
      if (modes != 1)
        throw UsageError("verma needs exactly one of --dims, --act ... --on ..., --support");
      if (v_dims) {
        std::string text;
        nlohmann::json dims = nlohmann::json::array();
        for (int n = 0; n <= m.depth(); ++n) {
          if (n) text += " ";
          text += std::to_string(m.dim_at_depth(n));
          dims.push_back(m.dim_at_depth(n));
        }
        if (json)
          res.doc = {{"schema", kSchema}, {"kind", "dims"}, {"depth", m.depth()}, {"dims", dims}};
        else
          res.text = text + "\n";
      } else if (!v_act.empty()) {
        if (v_on.empty()) throw UsageError("--act needs --on <vector-expr>");
        const ModuleVector vac = ModuleVector::basis_vector(m.flat_id(0, 0));
        const ModuleVector on = act(m, eval(*parse(v_on), GeneratorOrder(), opts), vac, opts);
        const ModuleVector out = act(m, eval(*parse(v_act), GeneratorOrder(), opts), on, opts);
        if (json)
          res.doc = to_json(out, m);
        else
          res.text = to_text(out, m) + "\n";
      } else {
        const auto [lo, hi] = parse_window(v_support);
        const SupportReport report = support(m, lo, hi);
        if (json)
          res.doc = to_json(report);
        else
          res.text = support_text(report);
      }
    } else if (cmd_series->parsed()) {
      IntermediateSeriesParams params{parse_rational_flag(s_alpha, "--alpha"),
                                      parse_rational_flag(s_beta, "--beta"),
                                      parse_rational_flag(s_f, "--f"), s_window};
      const IntermediateSeriesModule m(params);
      const int modes = int(s_axioms) + int(!s_support.empty());
      if (modes != 1)
        throw UsageError("intseries needs exactly one of --check-axioms, --support");
      if (s_axioms) {
        const auto [glo, ghi] = parse_window(s_gen_window);
        const AxiomCheckReport report = check_module_axioms(m, glo, ghi);
        if (json)
          res.doc = to_json(report);
        else
          res.text = axioms_text(report);
        res.code = report.pass() ? 0 : 1;
      } else {
        const auto [lo, hi] = parse_window(s_support);
        const SupportReport report = support(m, lo, hi);
        if (json)
          res.doc = to_json(report);
        else
          res.text = support_text(report);
      }
    } else if (cmd_paper->parsed()) {
      if (p_window < 2) throw UsageError("--window must be >= 2");
      const VerificationReport report = run_paper_suite(p_window);
      if (json)
        res.doc = to_json(report);
      else
        res.text = to_text(report);
      res.code = suite_ok(report) ? 0 : 1;
    }

    if (json && res.doc) res.text = res.doc->dump(2) + "\n";
    return res;
  } catch (const CLI::CallForHelp&) {
    res.text = app.help();
    res.code = 0;
  } catch (const CLI::ParseError& e) {
    res.text = std::string("usage error: ") + e.what() + "\n";
    res.code = 2;
  } catch (const ParseError& e) {
    res.text = std::string(e.what()) + "\n";
    res.code = 2;
  } catch (const UsageError& e) {
    res.text = std::string("usage error: ") + e.what() + "\n";
    res.code = 2;
  } catch (const Error& e) {
    res.text = std::string("error: ") + e.what() + "\n";
    res.code = 1;
  }
  return res;
}

}  // namespace thv
