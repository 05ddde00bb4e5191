// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "dnkit/cosets.hpp"
#include "dnkit/cover.hpp"
#include "dnkit/dclass.hpp"
#include "dnkit/error.hpp"
#include "dnkit/suite.hpp"
#include "support/jet_oracle.hpp"

using namespace dnkit;

namespace {

const DclassConfig kConfig{6, 0};

// A symbolic verdict plus a way to recompute its value numerically.
struct Recorded {
  SymbolicDefect defect;
  std::function<Rational(const oracle::Point&)> reference;
};

std::vector<Recorded> recorded;

void record(const SymbolicDefect& d, std::function<Rational(const oracle::Point&)> ref) {
  recorded.push_back({d, std::move(ref)});
}

void record_dn(const SymbolicDefect& d, const Operator& op, unsigned n) {
  record(d, [op, n](const oracle::Point& p) { return oracle::dn_value(op, n, p); });
}

void record_pol(const SymbolicDefect& d, const Operator& op, unsigned n) {
  record(d, [op, n](const oracle::Point& p) { return oracle::polarization_value(op, n, p); });
}

bool witness_ok(const MembershipVerdict& v) {
  return v.witness && !v.witness->value.is_zero() &&
         v.defect.value.evaluate(v.witness->assignment) == v.witness->value;
}

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome c1() {
  const Operator d = Operator::letter(0);
  const JetContext ctx = JetContext::for_operator({"x"}, d);
  const SymbolicDefect one{ctx, dn_defect(ctx, d, 1, ctx.gen(0), kConfig)};
  const SymbolicDefect pol = polarization_defect(d, 1, kConfig);
  record_dn(one, d, 1);
  record_pol(pol, d, 1);
  return {one.is_zero() && pol.is_zero(), "derivation defect and Leibniz form vanish"};
}

Outcome c2() {
  std::size_t cases = 0;
  bool ok = true;
  for (const Operator& w : distinct_letter_words(4, 4)) {
    for (unsigned n = static_cast<unsigned>(w.max_length()); n <= 4; ++n) {
      for (unsigned level : {n, n + 1}) {
        const MembershipVerdict v = is_in_dn(w, level, kConfig);
        record_dn(v.defect, w, level);
        ok = ok && v.in_dn;
        ++cases;
      }
    }
  }
  return {ok, std::to_string(cases) + " word/level pairs"};
}

Outcome c3() {
  bool ok = true;
  for (unsigned n = 1; n <= 5; ++n) {
    const Operator power = Operator::power(0, n + 1);
    const MembershipVerdict below = is_in_dn(power, n, kConfig);
    const MembershipVerdict above = is_in_dn(power, n + 1, kConfig);
    record_dn(below.defect, power, n);
    record_dn(above.defect, power, n + 1);
    ok = ok && !below.in_dn && witness_ok(below) && above.in_dn;
  }
  return {ok, "n = 1..5"};
}

Outcome c4() {
  bool ok = true;
  std::size_t members = 0, total = 0;
  for (const Operator& op : operator_test_set(0)) {
    for (unsigned n = 1; n <= 3; ++n) {
      const MembershipVerdict v = is_in_dn(op, n, kConfig);
      const SymbolicDefect p = polarization_defect(op, n, kConfig);
      record_dn(v.defect, op, n);
      record_pol(p, op, n);
      ok = ok && v.in_dn == p.is_zero();
      ++total;
      if (v.in_dn) {
        ++members;
        ok = ok && odd_extraction_check(op, n, kConfig);
      }
    }
  }
  return {ok, std::to_string(total) + " pairs, " + std::to_string(members) + " odd extractions"};
}

Outcome c5() {
  bool ok = true;
  for (unsigned n = 1; n <= 4; ++n) {
    const SymbolicDefect s = inductive_subsum(n, kConfig);
    record(s, [n](const oracle::Point& p) {
      const Operator d = Operator::letter(0), dn = Operator::power(0, n);
      Rational v(0);
      for (unsigned i = 1; i <= n + 1; ++i) {
        Rational c = binom(n + 2, i);
        if ((n + 1 - i) % 2 == 1) c = -c;
        v += c * oracle::op_on_product(d, std::vector<std::size_t>(n + 2 - i, 0), p) *
             oracle::op_on_product(dn, std::vector<std::size_t>(i, 0), p);
      }
      return v;
    });
    ok = ok && s.is_zero();
  }
  return {ok, "n = 1..4"};
}

Outcome c6() {
  bool ok = true;
  std::size_t cases = 0;
  for (const Operator& op : operator_test_set(0)) {
    for (unsigned n = 1; n <= 4; ++n) {
      const MembershipVerdict cover = rn_preservation(op, n, kConfig);
      const MembershipVerdict member = is_in_dn(op, n, kConfig);
      record_dn(cover.defect, op, n);
      ok = ok && cover.in_dn == member.in_dn && (cover.in_dn || witness_ok(cover));
      ++cases;
    }
  }
  return {ok, std::to_string(cases) + " operator/level pairs"};
}

Outcome c7() {
  const bool psi_ok = psi_defines_otimes();
  bool reduct_ok = true;
  for (unsigned n = 1; n <= 3; ++n) reduct_ok = reduct_ok && rn_reduct_check(n, kConfig);
  const bool ring_d = sigma_ring_check(Operator::letter(0)).holds;
  const bool ring_dd = sigma_ring_check(Operator::power(0, 2)).holds;
  return {psi_ok && reduct_ok && ring_d && !ring_dd,
          std::string("psi ") + (psi_ok ? "ok" : "bad") + ", reduct " +
              (reduct_ok ? "ok" : "bad") + ", ring D " + (ring_d ? "true" : "false") +
              ", ring D.D " + (ring_dd ? "true" : "false")};
}

Outcome c8() {
  bool ok = true;
  for (unsigned n = 1; n <= 8; ++n) ok = ok && coset_free_powers(n);
  const JetContext ctx = JetContext::make({"t"}, 0, 0);
  std::size_t agree = 0, related = 0;
  const auto tuples = small_coset_tuples(0, 240);
  for (const auto& coeffs : tuples) {
    std::vector<RatFunc> funcs;
    for (const auto& c : coeffs) {
      MPoly p;
      for (std::size_t d = 0; d < c.size(); ++d) {
        p += MPoly::variable(ctx.generator(0), static_cast<std::uint32_t>(d))
                 .scaled(Rational(static_cast<long>(c[d])));
      }
      funcs.emplace_back(p);
    }
    const auto rel = affine_relation(funcs);
    const bool brute = oracle::has_affine_relation(coeffs, 8);
    if (rel.has_value() == brute && (!rel || satisfies(*rel, funcs))) ++agree;
    if (rel) ++related;
  }
  ok = ok && agree == tuples.size() && tuples.size() >= 200;
  return {ok, "powers 1..8; " + std::to_string(agree) + "/" + std::to_string(tuples.size()) +
                  " tuples agree (" + std::to_string(related) + " related)"};
}

Outcome c9() {
  std::size_t disagreements = 0;
  std::uint64_t seed = 0;
  for (const Recorded& r : recorded) {
    bool any_nonzero = false;
    bool values_match = true;
    for (int k = 0; k < 5; ++k) {
      const auto [assignment, point] = oracle::random_point(r.defect.context, seed++);
      const Rational expected = r.reference(point);
      Rational got;
      try {
        got = r.defect.value.evaluate(assignment);
      } catch (const PoleError&) {
        continue;
      }
      values_match = values_match && got == expected;
      any_nonzero = any_nonzero || !expected.is_zero();
    }
    const bool verdict_match = r.defect.is_zero() != any_nonzero;
    if (!values_match || !verdict_match) ++disagreements;
  }
  return {disagreements == 0 && !recorded.empty(),
          std::to_string(recorded.size()) + " verdicts, " + std::to_string(disagreements) +
              " disagreements"};
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  while (const std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

Outcome c10() {
  const std::string cmd =
      std::string("\"") + DNKIT_BINARY + "\" suite --max-n 4 --format json --seed 0";
  const std::string first = capture(cmd);
  const std::string second = capture(cmd);
  const bool ok = !first.empty() && first == second &&
                  first.find("\"verdict\": \"holds\"") != std::string::npos;
  return {ok, std::to_string(first.size()) + " bytes, " + (first == second ? "identical" : "differ")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_ms;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "derivation characterization", 1000, c1},
      {2, "word inclusion", 60000, c2},
      {3, "strict separation", 120000, c3},
      {4, "polarization equivalence", 60000, c4},
      {5, "inductive subsum", 30000, c5},
      {6, "cover/automorphism equivalence", 60000, c6},
      {7, "definability", 10000, c7},
      {8, "coset-freeness", 30000, c8},
      {9, "randomized cross-check", 60000, c9},
      {10, "determinism", 60000, c10},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (ms > c.limit_ms) {
      o.ok = false;
      o.detail += "; over time limit";
    }
    if (!o.ok) ++failed;
    std::printf("%s  %2d %-32s %9.1f ms  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, ms,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
