#include "dnkit/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "dnkit/error.hpp"

namespace dnkit {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Peek without skipping whitespace.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n = 1) { pos_ += n; }
  bool starts_with(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Operators

std::uint16_t parse_letter(Cursor& in, std::optional<unsigned> alphabet) {
  in.skip_ws();
  const std::size_t at = in.pos();
  if (!in.accept('D')) in.fail("expected a derivation letter 'D<k>'");
  const std::string d = in.digits();
  if (d.size() > 5 || std::stoul(d) == 0 ||
      std::stoul(d) > std::numeric_limits<std::uint16_t>::max()) {
    throw ParseError("letter index must be between 1 and 65535", at);
  }
  const auto index = static_cast<unsigned>(std::stoul(d));
  if (alphabet && index > *alphabet) throw UnknownLetterError(index, *alphabet);
  return static_cast<std::uint16_t>(index - 1);
}

DerivWord parse_word(Cursor& in, std::optional<unsigned> alphabet) {
  if (in.starts_with("id")) {
    in.advance(2);
    return DerivWord();
  }
  std::vector<std::uint16_t> letters{parse_letter(in, alphabet)};
  while (in.accept('.')) letters.push_back(parse_letter(in, alphabet));
  return DerivWord(std::move(letters));
}

Rational parse_rational(Cursor& in) {
  in.skip_ws();
  const std::size_t at = in.pos();
  mpz_class num(in.digits());
  mpz_class den = 1;
  if (in.peek_raw() == '/') {
    in.advance();
    den = mpz_class(in.digits());
    if (den == 0) throw ParseError("zero denominator in coefficient", at);
  }
  return Rational(num, den);
}

}  // namespace

Operator parse_operator(std::string_view text, std::optional<unsigned> alphabet) {
  Cursor in(text);
  if (in.at_end()) in.fail("empty operator");
  if (in.starts_with("0")) {
    Cursor rest = in;
    rest.advance();
    if (rest.at_end()) return Operator();
  }
  Operator op;
  Rational sign(1);
  if (in.accept('-')) sign = Rational(-1);
  while (true) {
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      coeff = parse_rational(in);
      in.expect('*');
    }
    op += Operator::word(parse_word(in, alphabet), coeff * sign);
    if (in.at_end()) break;
    if (in.accept('+')) {
      sign = Rational(1);
    } else if (in.accept('-')) {
      sign = Rational(-1);
    } else {
      in.fail("expected '+' or '-'");
    }
  }
  return op;
}

// ---------------------------------------------------------------------------
// Rational functions

namespace {

constexpr int kAdditive = 10;
constexpr int kMultiplicative = 20;
constexpr int kUnary = 30;
constexpr int kPower = 40;

class ExprParser {
 public:
  ExprParser(std::string_view text, const VarRegistry& registry)
      : in_(text), registry_(registry) {}

  RatFunc parse() {
    if (in_.at_end()) in_.fail("empty expression");
    RatFunc r = expr(0);
    if (!in_.at_end()) in_.fail("unexpected character");
    return r;
  }

 private:
  RatFunc expr(int min_bp) {
    RatFunc lhs = prefix();
    while (true) {
      const char op = in_.peek();
      const int bp = binding_power(op);
      if (bp == 0 || bp <= min_bp) break;
      in_.advance();
      if (op == '^') {
        lhs = lhs.pow(exponent());
        continue;
      }
      RatFunc rhs = expr(bp);
      switch (op) {
        case '+': lhs += rhs; break;
        case '-': lhs -= rhs; break;
        case '*': lhs *= rhs; break;
        case '/': lhs /= rhs; break;
        default: break;
      }
    }
    return lhs;
  }

  static int binding_power(char op) {
    switch (op) {
      case '+': case '-': return kAdditive;
      case '*': case '/': return kMultiplicative;
      case '^': return kPower;
      default: return 0;
    }
  }

  int exponent() {
    const bool negative = in_.accept('-');
    in_.skip_ws();
    const std::size_t at = in_.pos();
    const std::string d = in_.digits();
    if (d.size() > 6) throw ParseError("exponent too large", at);
    const int e = std::stoi(d);
    return negative ? -e : e;
  }

  RatFunc prefix() {
    const char c = in_.peek();
    if (c == '-') {
      in_.advance();
      return -expr(kUnary);
    }
    if (c == '(') {
      in_.advance();
      RatFunc inner = expr(0);
      in_.expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatFunc(Rational(mpz_class(in_.digits())));
    }
    if (c >= 'a' && c <= 'z') {
      const std::size_t at = in_.pos();
      std::string name(1, c);
      in_.advance();
      while (std::isdigit(static_cast<unsigned char>(in_.peek_raw()))) {
        name += in_.peek_raw();
        in_.advance();
      }
      const auto var = registry_.find(name);
      if (!var) throw ParseError("unknown variable '" + name + "'", at);
      return RatFunc::variable(*var);
    }
    if (c == '\0') in_.fail("unexpected end of input");
    in_.fail(std::string("unexpected character '") + c + "'");
  }

  Cursor in_;
  const VarRegistry& registry_;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const VarRegistry& registry) {
  return ExprParser(text, registry).parse();
}

std::vector<std::string> variable_names(std::string_view text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] >= 'a' && text[i] <= 'z') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      names.emplace_back(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

ParsedTuple parse_ratfunc_list(std::string_view text) {
  ParsedTuple out{JetContext::make(variable_names(text), 0, 0), {}};
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    try {
      out.funcs.push_back(parse_ratfunc(part, out.context.registry()));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace dnkit
