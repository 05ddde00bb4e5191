#ifndef DNKIT_PARSE_HPP
#define DNKIT_PARSE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnkit/jets.hpp"

namespace dnkit {

/// Operator grammar:
///
///   operator := ['-'] term (('+'|'-') term)*  |  '0'
///   term     := [rational '*'] word
///   word     := letter ('.' letter)*  |  'id'
///   letter   := 'D' digits            (D1, D2, ...)
///   rational := integer ['/' positive-integer]
///
/// "D1.D2" is D1∘D2: D2 acts first. Duplicate words are merged and zero
/// terms dropped. With `alphabet` set, letters beyond it raise
/// UnknownLetterError.
Operator parse_operator(std::string_view text,
                        std::optional<unsigned> alphabet = std::nullopt);

/// Rational-function grammar: variables [a-z][0-9]*, integer literals,
/// + - * / ^ and parentheses. `^` takes an integer exponent and binds
/// tightest, then unary minus, then * and /, then + and -. Variable names
/// are resolved in `registry`.
RatFunc parse_ratfunc(std::string_view text, const VarRegistry& registry);

/// Variable names occurring in `text`, sorted and deduplicated.
std::vector<std::string> variable_names(std::string_view text);

/// Comma-separated expressions parsed into one derivation-free context whose
/// generators are all variable names that occur, in sorted order.
struct ParsedTuple {
  JetContext context;
  std::vector<RatFunc> funcs;
};
ParsedTuple parse_ratfunc_list(std::string_view text);

}  // namespace dnkit

#endif  // DNKIT_PARSE_HPP
