#ifndef DNKIT_SUITE_HPP
#define DNKIT_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dnkit/jets.hpp"

namespace dnkit {

/// Every word of length 1..3 over {D1, D2} followed by five seeded random
/// two-term combinations of those words.
std::vector<Operator> operator_test_set(std::uint64_t seed);

/// Words of length 1..max_len whose letters are pairwise distinct, drawn
/// from an alphabet of `alphabet` letters.
std::vector<Operator> distinct_letter_words(unsigned max_len, unsigned alphabet);

/// Tuples of univariate polynomials in `t` of degree <= 3 with coefficients
/// in {-2..2}, seeded. Roughly a third are built to satisfy a relation.
std::vector<std::vector<std::vector<int>>> small_coset_tuples(std::uint64_t seed,
                                                              std::size_t count);

struct SuiteOptions {
  unsigned max_n = 4;
  std::uint64_t seed = 0;
  bool timing = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  long timing_ms = 0;
};

/// The certification battery, one entry per property, bounded by max_n.
std::vector<CheckResult> run_suite(const SuiteOptions& options);

}  // namespace dnkit

#endif  // DNKIT_SUITE_HPP
