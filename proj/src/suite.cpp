#include "dnkit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "dnkit/cosets.hpp"
#include "dnkit/cover.hpp"
#include "dnkit/dclass.hpp"
#include "dnkit/error.hpp"

namespace dnkit {

std::vector<Operator> operator_test_set(std::uint64_t seed) {
  std::vector<Operator> words;
  for (unsigned len = 1; len <= 3; ++len) {
    for (unsigned code = 0; code < (1U << len); ++code) {
      std::vector<std::uint16_t> letters;
      for (unsigned k = len; k-- > 0;) letters.push_back(static_cast<std::uint16_t>((code >> k) & 1U));
      words.push_back(Operator::word(DerivWord(std::move(letters))));
    }
  }
  std::vector<Operator> set = words;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 5; ++k) {
    const std::size_t i = rng() % words.size();
    std::size_t j = rng() % (words.size() - 1);
    if (j >= i) ++j;
    // Coefficients in {-3..3} \ {0}.
    auto coeff = [&rng]() {
      const long c = static_cast<long>(rng() % 6);
      return Rational(c < 3 ? c - 3 : c - 2);
    };
    set.push_back(words[i].scaled(coeff()) + words[j].scaled(coeff()));
  }
  return set;
}

std::vector<Operator> distinct_letter_words(unsigned max_len, unsigned alphabet) {
  std::vector<Operator> out;
  std::vector<std::uint16_t> current;
  std::vector<bool> used(alphabet, false);
  std::function<void()> extend = [&]() {
    if (!current.empty()) out.push_back(Operator::word(DerivWord(current)));
    if (current.size() == max_len) return;
    for (std::uint16_t l = 0; l < alphabet; ++l) {
      if (used[l]) continue;
      used[l] = true;
      current.push_back(l);
      extend();
      current.pop_back();
      used[l] = false;
    }
  };
  extend();
  std::stable_sort(out.begin(), out.end(), [](const Operator& a, const Operator& b) {
    return a.max_length() < b.max_length();
  });
  return out;
}

std::vector<std::vector<std::vector<int>>> small_coset_tuples(std::uint64_t seed,
                                                              std::size_t count) {
  std::mt19937_64 rng(seed ^ 0xC05E7ULL);
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<std::vector<std::vector<int>>> tuples;
  for (std::size_t k = 0; k < count; ++k) {
    const int size = draw(1, 3);
    std::vector<std::vector<int>> tuple;
    for (int i = 0; i < size; ++i) {
      std::vector<int> poly(4);
      poly[0] = draw(-1, 1);
      for (int d = 1; d <= 3; ++d) poly[d] = draw(-2, 2);
      tuple.push_back(std::move(poly));
    }
    if (size >= 2 && k % 3 == 0) {
      // Force f_last = ±f_first + c, staying within the coefficient range.
      auto& first = tuple.front();
      for (int d = 1; d <= 3; ++d) first[d] = draw(-1, 1);
      const int sign = draw(0, 1) == 0 ? -1 : 1;
      auto& last = tuple.back();
      last[0] = draw(-1, 1);
      for (int d = 1; d <= 3; ++d) last[d] = sign * first[d];
    }
    tuples.push_back(std::move(tuple));
  }
  return tuples;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Battery {
  SuiteOptions options;
  DclassConfig config;
  std::vector<SymbolicDefect> cross_checked;
  std::uint64_t cross_seed = 0;
  std::size_t cross_failures = 0;

  void record(const SymbolicDefect& d) {
    if (!random_evaluation_agrees(d.value, d.context, options.seed + cross_seed++)) {
      ++cross_failures;
    }
    cross_checked.push_back(d);
  }

  bool verify_witness(const MembershipVerdict& v) {
    return v.witness && !v.witness->value.is_zero() &&
           v.defect.value.evaluate(v.witness->assignment) == v.witness->value;
  }

  CheckResult derivations() {
    const Operator d = Operator::letter(0);
    const JetContext ctx = JetContext::for_operator({"x"}, d);
    const SymbolicDefect one{ctx, dn_defect(ctx, d, 1, ctx.gen(0), config)};
    const SymbolicDefect pol = polarization_defect(d, 1, config);
    record(one);
    record(pol);
    return {"derivation-characterization", one.is_zero() && pol.is_zero(),
            "D in D_1 and Leibniz polarization vanish", 0};
  }

  CheckResult word_inclusion() {
    const unsigned top = std::min(4U, options.max_n);
    std::size_t cases = 0;
    bool ok = true;
    for (const Operator& w : distinct_letter_words(top, top)) {
      for (unsigned n = static_cast<unsigned>(w.max_length()); n <= top; ++n) {
        for (const unsigned level : {n, n + 1}) {
          const MembershipVerdict v = is_in_dn(w, level, config);
          record(v.defect);
          ok = ok && v.in_dn;
          ++cases;
        }
      }
    }
    return {"word-inclusion", ok, std::to_string(cases) + " word/level pairs", 0};
  }

  CheckResult separation() {
    const unsigned top = std::min(5U, options.max_n);
    bool ok = true;
    for (unsigned n = 1; n <= top; ++n) {
      const Operator power = Operator::power(0, n + 1);
      const MembershipVerdict below = is_in_dn(power, n, config);
      const MembershipVerdict above = is_in_dn(power, n + 1, config);
      record(below.defect);
      record(above.defect);
      ok = ok && !below.in_dn && verify_witness(below) && above.in_dn;
    }
    return {"strict-separation", ok,
            "D^(n+1) in D_(n+1) \\ D_n for n = 1.." + std::to_string(top), 0};
  }

  CheckResult polarization() {
    const unsigned top = std::min(3U, options.max_n);
    bool ok = true;
    std::size_t extracted = 0;
    for (const Operator& op : operator_test_set(options.seed)) {
      for (unsigned n = 1; n <= top; ++n) {
        const MembershipVerdict v = is_in_dn(op, n, config);
        const SymbolicDefect p = polarization_defect(op, n, config);
        record(v.defect);
        record(p);
        ok = ok && (v.in_dn == p.is_zero());
        if (v.in_dn) {
          ok = ok && odd_extraction_check(op, n, config);
          ++extracted;
        }
      }
    }
    return {"polarization-equivalence", ok,
            std::to_string(extracted) + " odd extractions", 0};
  }

  CheckResult subsum() {
    const unsigned top = std::min(4U, options.max_n);
    bool ok = true;
    for (unsigned n = 1; n <= top; ++n) {
      const SymbolicDefect s = inductive_subsum(n, config);
      record(s);
      ok = ok && s.is_zero();
    }
    return {"inductive-subsum", ok, "n = 1.." + std::to_string(top), 0};
  }

  CheckResult cover_equivalence() {
    const unsigned top = std::min(4U, options.max_n);
    bool ok = true;
    std::size_t cases = 0;
    for (const Operator& op : operator_test_set(options.seed)) {
      for (unsigned n = 1; n <= top; ++n) {
        const MembershipVerdict cover = rn_preservation(op, n, config);
        const MembershipVerdict member = is_in_dn(op, n, config);
        record(cover.defect);
        ok = ok && cover.in_dn == member.in_dn;
        ok = ok && (cover.in_dn || verify_witness(cover));
        ++cases;
      }
    }
    return {"cover-automorphism-equivalence", ok, std::to_string(cases) + " cases", 0};
  }

  CheckResult definability() {
    bool ok = psi_defines_otimes();
    const unsigned top = std::min(3U, options.max_n);
    for (unsigned n = 1; n <= top; ++n) ok = ok && rn_reduct_check(n, config);
    ok = ok && sigma_ring_check(Operator::letter(0)).holds;
    ok = ok && !sigma_ring_check(Operator::power(0, 2)).holds;
    return {"definability", ok, "psi, reduct n = 1.." + std::to_string(top) + ", ring checks", 0};
  }

  CheckResult cosets() {
    bool ok = true;
    for (unsigned n = 1; n <= 8; ++n) ok = ok && coset_free_powers(n);
    const JetContext ctx = JetContext::make({"t"}, 0, 0);
    const MPoly t = MPoly::variable(ctx.generator(0));
    std::size_t related = 0;
    const auto tuples = small_coset_tuples(options.seed, 200);
    for (const auto& tuple : tuples) {
      std::vector<RatFunc> funcs;
      for (const auto& coeffs : tuple) {
        MPoly p;
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
          p += t.pow(static_cast<unsigned>(d)).scaled(Rational(static_cast<long>(coeffs[d])));
        }
        funcs.emplace_back(p);
      }
      if (const auto rel = affine_relation(funcs)) {
        ++related;
        ok = ok && satisfies(*rel, funcs);
      }
    }
    return {"coset-freeness", ok,
            "powers up to 8; " + std::to_string(related) + "/" +
                std::to_string(tuples.size()) + " tuples related",
            0};
  }

  CheckResult cross_check() const {
    return {"random-evaluation-cross-check", cross_failures == 0,
            std::to_string(cross_checked.size()) + " defects, " +
                std::to_string(cross_failures) + " disagreements",
            0};
  }
};

}  // namespace

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
  Battery battery{options, DclassConfig{options.max_n + 1, options.seed}, {}, 0, 0};
  std::vector<CheckResult> results;
  auto timed = [&](const char* name, CheckResult (Battery::*check)()) {
    const auto start = Clock::now();
    CheckResult r;
    try {
      r = (battery.*check)();
    } catch (const Error& e) {
      r = {name, false, e.what(), 0};
    }
    if (options.timing) {
      r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - start)
                        .count();
    }
    results.push_back(std::move(r));
  };
  timed("derivation-characterization", &Battery::derivations);
  timed("word-inclusion", &Battery::word_inclusion);
  timed("strict-separation", &Battery::separation);
  timed("polarization-equivalence", &Battery::polarization);
  timed("inductive-subsum", &Battery::subsum);
  timed("cover-automorphism-equivalence", &Battery::cover_equivalence);
  timed("definability", &Battery::definability);
  timed("coset-freeness", &Battery::cosets);
  results.push_back(battery.cross_check());
  return results;
}

}  // namespace dnkit
