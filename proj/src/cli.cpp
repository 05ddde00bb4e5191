#include "dnkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <sstream>

#include "dnkit/cosets.hpp"
#include "dnkit/cover.hpp"
#include "dnkit/dclass.hpp"
#include "dnkit/error.hpp"
#include "dnkit/parse.hpp"

namespace dnkit::cli {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::refuted: return "refuted";
    case Verdict::error: return "error";
  }
  return "error";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::holds: return 0;
    case Verdict::refuted: return 1;
    case Verdict::error: return 2;
  }
  return 2;
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["command"] = r.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["verdict"] = to_string(r.verdict);
  j["defect"] = r.defect ? nlohmann::ordered_json(*r.defect) : nlohmann::ordered_json();
  if (r.witness) {
    nlohmann::ordered_json w;
    w["assignments"] = nlohmann::ordered_json::array();
    for (const auto& [var, value] : r.witness->assignments) {
      w["assignments"].push_back({{"var", var}, {"value", value}});
    }
    w["value"] = r.witness->value;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["timing_ms"] = r.timing_ms;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.error.empty()) j["error"] = r.error;
  if (!r.checks.empty()) {
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : r.checks) {
      j["checks"].push_back({{"name", c.name},
                             {"verdict", c.passed ? "holds" : "refuted"},
                             {"detail", c.detail},
                             {"timing_ms", c.timing_ms}});
    }
  }
  return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << '\n';
  os << "params:";
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
  os << '\n';
  os << "verdict: " << to_string(r.verdict) << '\n';
  os << "defect: " << (r.defect ? *r.defect : "none") << '\n';
  if (r.witness) {
    os << "witness:";
    for (const auto& [var, value] : r.witness->assignments) os << ' ' << var << '=' << value;
    os << " -> " << r.witness->value << '\n';
  } else {
    os << "witness: none\n";
  }
  for (const CheckResult& c : r.checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << " (" << c.detail
       << ")";
    if (c.timing_ms != 0) os << ' ' << c.timing_ms << " ms";
    os << '\n';
  }
  if (!r.note.empty()) os << "note: " << r.note << '\n';
  if (!r.error.empty()) os << "error: " << r.error << '\n';
  os << "timing_ms: " << r.timing_ms << '\n';
  return os.str();
}

namespace {

const char* kGrammar = R"(Operator expressions (--op):
  operator := term (('+'|'-') term)*      e.g. "2*D1 + 3/2*D2.D3"
  term     := [rational '*'] word
  word     := letter ('.' letter)*        "D1.D2" applies D2 first
  letter   := 'D' digits
  rational := integer ['/' positive-integer]
Function expressions (--funcs, comma separated):
  variables [a-z][0-9]*, integers, + - * / ^ and parentheses;
  '^' binds tightest, then unary minus, then * /, then + -.
Exit codes: 0 holds, 1 refuted, 2 error.)";

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 0;
  unsigned max_degree = 64;
  unsigned max_n = 6;
  bool timing = false;
};

ReportWitness render_witness(const Witness& w, const JetContext& ctx) {
  ReportWitness out;
  for (const auto& [var, value] : w.assignment) {
    out.assignments.emplace_back(ctx.registry().info(var.index).name, value.to_string());
  }
  out.value = w.value.to_string();
  return out;
}

void fill_membership(Report& r, const MembershipVerdict& v) {
  r.verdict = v.in_dn ? Verdict::holds : Verdict::refuted;
  r.defect = v.defect.context.render(v.defect.value);
  if (v.witness) r.witness = render_witness(*v.witness, v.defect.context);
}

void fill_defect(Report& r, const SymbolicDefect& d, std::uint64_t seed) {
  r.verdict = d.is_zero() ? Verdict::holds : Verdict::refuted;
  r.defect = d.context.render(d.value);
  if (!d.is_zero()) {
    if (auto w = find_witness(d.value, d.context, seed)) r.witness = render_witness(*w, d.context);
  }
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact certification of higher-order derivation identities, "
               "additive covers of C and coset-freeness.",
               "dnkit"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for witness search and random checks")
      ->capture_default_str();
  app.add_option("--max-degree", g.max_degree, "Total degree limit for polynomials")
      ->capture_default_str();
  app.add_option("--max-n", g.max_n, "Largest admissible level n")->capture_default_str();
  app.add_flag("--timing", g.timing, "Measure wall time (otherwise timing_ms is 0)");

  Report report;
  std::function<void()> action;
  unsigned n = 1;
  std::string op_text;
  std::string funcs_text;
  unsigned suite_max_n = 4;

  auto level = [&](const std::string& cmd) {
    report.params.emplace_back("n", std::to_string(n));
    (void)cmd;
  };
  auto dclass_config = [&]() { return DclassConfig{g.max_n, g.seed}; };
  auto parse_op = [&]() {
    report.params.emplace_back("op", op_text);
    return parse_operator(op_text);
  };

  auto* dn = app.add_subcommand("dn", "Higher-order derivation classes D_n");
  dn->require_subcommand(1);
  dn->fallthrough();

  auto* dn_check = dn->add_subcommand(
      "check",
      "Is the operator in D_n? Checks F(a^(n+1)) = sum_{i=1..n} C(n+1,i) "
      "(-1)^(n-i) a^(n+1-i) F(a^i) at a generic point.");
  dn_check->add_option("--n", n, "Level n")->required();
  dn_check->add_option("--op", op_text, "Operator expression")->required();
  dn_check->fallthrough();
  dn_check->callback([&] {
    action = [&] {
      report.command = "dn check";
      level(report.command);
      const Operator op = parse_op();
      fill_membership(report, is_in_dn(op, n, dclass_config()));
    };
  });

  auto* dn_sep = dn->add_subcommand(
      "separation",
      "Strict inclusion D_n < D_(n+1): membership of D^(n+1) in D_n is "
      "refuted (with a numeric witness) while D^(n+1) lies in D_(n+1).");
  dn_sep->add_option("--n", n, "Level n")->required();
  dn_sep->fallthrough();
  dn_sep->callback([&] {
    action = [&] {
      report.command = "dn separation";
      level(report.command);
      const Operator power = Operator::power(0, n + 1);
      report.params.emplace_back("op", power.to_string());
      const Separation s = separation_witness(n, dclass_config());
      report.verdict = Verdict::refuted;
      report.defect = s.defect.context.render(s.defect.value);
      report.witness = render_witness(s.witness, s.defect.context);
      std::string above;
      if (n + 1 <= g.max_n) {
        const bool in_next = is_in_dn(power, n + 1, dclass_config()).in_dn;
        above = in_next ? " It lies in D_" + std::to_string(n + 1) + " (verified)."
                        : " Unexpectedly it is not in D_" + std::to_string(n + 1) + ".";
      } else {
        above = " Level n+1 exceeds --max-n; membership in D_" + std::to_string(n + 1) +
                " was not checked.";
      }
      report.note = "refuted = " + power.to_string() + " is not in D_" + std::to_string(n) +
                    "; this is the expected separation." + above;
    };
  });

  auto* dn_pol = dn->add_subcommand(
      "polarize",
      "Multilinear form of the D_n equation: F(x1...x(n+1)) = sum_{k=1..n} "
      "(-1)^(k+1) sum_{|S|=k} x_S F(product of the other x).");
  dn_pol->add_option("--n", n, "Level n")->required();
  dn_pol->add_option("--op", op_text, "Operator expression")->required();
  dn_pol->fallthrough();
  dn_pol->callback([&] {
    action = [&] {
      report.command = "dn polarize";
      level(report.command);
      const Operator op = parse_op();
      fill_defect(report, polarization_defect(op, n, dclass_config()), g.seed);
    };
  });

  auto* dn_sub = dn->add_subcommand(
      "subsum",
      "Vanishing of sum_{i=1..n+1} C(n+2,i) (-1)^(n+1-i) D(x^(n+2-i)) D^n(x^i), "
      "the step showing D^(n+1) in D_(n+1).");
  dn_sub->add_option("--n", n, "Level n")->required();
  dn_sub->fallthrough();
  dn_sub->callback([&] {
    action = [&] {
      report.command = "dn subsum";
      level(report.command);
      fill_defect(report, inductive_subsum(n, dclass_config()), g.seed);
    };
  });

  auto* cover = app.add_subcommand("cover", "Additive covers M_n of C");
  cover->require_subcommand(1);
  cover->fallthrough();

  auto* cov_pres = cover->add_subcommand(
      "preserve",
      "Does sigma_F(p) = F(pi(p)) * p preserve R_n? Agrees with membership "
      "of F in D_n.");
  cov_pres->add_option("--n", n, "Level n")->required();
  cov_pres->add_option("--op", op_text, "Operator expression")->required();
  cov_pres->fallthrough();
  cov_pres->callback([&] {
    action = [&] {
      report.command = "cover preserve";
      level(report.command);
      const Operator op = parse_op();
      fill_membership(report, rn_preservation(op, n, dclass_config()));
    };
  });

  auto* cov_psi = cover->add_subcommand(
      "psi-check",
      "(z3 - z2 - z1)/2 with R_1(a,z1), R_1(b,z2), R_1(a+b,z3) equals a (x) b.");
  cov_psi->fallthrough();
  cov_psi->callback([&] {
    action = [&] {
      report.command = "cover psi-check";
      report.verdict = psi_defines_otimes() ? Verdict::holds : Verdict::refuted;
    };
  });

  auto* cov_red = cover->add_subcommand(
      "reduct",
      "R_n is definable from (x), * and pi: both directions at generic points.");
  cov_red->add_option("--n", n, "Level n")->required();
  cov_red->fallthrough();
  cov_red->callback([&] {
    action = [&] {
      report.command = "cover reduct";
      level(report.command);
      report.verdict = rn_reduct_check(n, dclass_config()) ? Verdict::holds : Verdict::refuted;
      if (n == 1) report.note = "n = 1: the constraint sum is empty, forcing epsilon_2 = 0.";
    };
  });

  auto* cov_ring = cover->add_subcommand(
      "ring-check",
      "In M_1, does sigma_F respect the dual-number product? Holds iff F is a "
      "derivation.");
  cov_ring->add_option("--op", op_text, "Operator expression")->required();
  cov_ring->fallthrough();
  cov_ring->callback([&] {
    action = [&] {
      report.command = "cover ring-check";
      const Operator op = parse_op();
      const RingCheck rc = sigma_ring_check(op);
      report.verdict = rc.holds ? Verdict::holds : Verdict::refuted;
      report.defect = rc.defect.to_string();
    };
  });

  auto* coset = app.add_subcommand("coset", "Coset-freeness in the additive group");
  coset->require_subcommand(1);
  coset->fallthrough();
  auto* coset_check = coset->add_subcommand(
      "check",
      "Holds when the tuple satisfies no affine relation e1 f1 + ... + ek fk = c "
      "over the constants (lies on no proper linear variety).");
  coset_check->add_option("--funcs", funcs_text, "Comma-separated functions")->required();
  coset_check->fallthrough();
  coset_check->callback([&] {
    action = [&] {
      report.command = "coset check";
      report.params.emplace_back("funcs", funcs_text);
      const ParsedTuple tuple = parse_ratfunc_list(funcs_text);
      const auto rel = affine_relation(tuple.funcs);
      report.verdict = rel ? Verdict::refuted : Verdict::holds;
      if (rel) {
        report.defect = to_string(*rel);
        report.note = "the tuple lies on the linear variety " + to_string(*rel);
      } else {
        report.note = "coset-free: no affine relation over the constants";
      }
    };
  });

  auto* suite = app.add_subcommand("suite", "Run the full certification battery");
  suite->add_option("--max-n", suite_max_n, "Largest n exercised by the battery")
      ->check(CLI::Range(1U, 6U))
      ->capture_default_str();
  suite->fallthrough();
  suite->callback([&] {
    action = [&] {
      report.command = "suite";
      report.params.emplace_back("max_n", std::to_string(suite_max_n));
      report.params.emplace_back("seed", std::to_string(g.seed));
      report.checks = run_suite({suite_max_n, g.seed, g.timing});
      const bool all = std::all_of(report.checks.begin(), report.checks.end(),
                                   [](const CheckResult& c) { return c.passed; });
      report.verdict = all ? Verdict::holds : Verdict::refuted;
    };
  });

  RunResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    result.exit_code = 0;
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    result.exit_code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    report.command = "usage";
    report.verdict = Verdict::error;
    report.error = e.what();
    result.out = g.format == "json" ? to_json(report) : to_text(report);
    result.err = std::string(e.what()) + "\nRun with --help for usage.\n";
    result.exit_code = 2;
    return result;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const ScopedDegreeLimit limit(g.max_degree);
    action();
  } catch (const std::exception& e) {
    report.verdict = Verdict::error;
    report.error = e.what();
    result.err = std::string(e.what()) + "\n";
  }
  if (g.timing) {
    report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  }
  result.out = g.format == "json" ? to_json(report) : to_text(report);
  result.exit_code = exit_code(report.verdict);
  return result;
}

}  // namespace dnkit::cli
