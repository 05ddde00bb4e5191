#ifndef DNKIT_JETS_HPP
#define DNKIT_JETS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dnkit/ratfunc.hpp"

namespace dnkit {

/// Composition of derivation letters, outermost first: {0, 1} is D1.D2,
/// which applies D2 first. Letters are 0-based internally and rendered
/// 1-based. No commutation relations hold between letters.
class DerivWord {
 public:
  DerivWord() = default;
  explicit DerivWord(std::vector<std::uint16_t> letters)
      : letters_(std::move(letters)) {}
  static DerivWord power(std::uint16_t letter, std::size_t times) {
    return DerivWord(std::vector<std::uint16_t>(times, letter));
  }

  const std::vector<std::uint16_t>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// Largest letter index plus one; zero for the empty word.
  unsigned alphabet_needed() const;

  /// This word applied after `inner`.
  DerivWord then_after(const DerivWord& inner) const;

  /// "D1.D2"; the empty word renders as "id".
  std::string to_string() const;

  friend bool operator==(const DerivWord&, const DerivWord&) = default;
  friend std::strong_ordering operator<=>(const DerivWord& a,
                                          const DerivWord& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<std::uint16_t> letters_;
};

/// Q-linear combination of derivation words.
class Operator {
 public:
  Operator() = default;
  static Operator word(const DerivWord& w, const Rational& c = Rational(1));
  static Operator letter(std::uint16_t index) {
    return word(DerivWord({index}));
  }
  /// The composition D∘...∘D (`times` copies of one letter).
  static Operator power(std::uint16_t letter, std::size_t times) {
    return word(DerivWord::power(letter, times));
  }

  const std::map<DerivWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned alphabet_needed() const;
  std::size_t max_length() const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  Operator scaled(const Rational& c) const;
  /// Composition: (*this)∘inner.
  Operator compose(const Operator& inner) const;

  std::string to_string() const;

  friend bool operator==(const Operator&, const Operator&) = default;

 private:
  void add_term(const DerivWord& w, const Rational& c);
  std::map<DerivWord, Rational> terms_;
};

/// Default bound on the number of variables a context may allocate.
inline constexpr std::size_t kDefaultContextCapacity = 200000;

/// The free differential setting over a finite set of generators: every jet
/// symbol θ(g) for words θ of length 1..max_word_len is allocated up front,
/// after which the context never changes. Copies share the same table;
/// equality is identity.
class JetContext {
 public:
  /// Generators named `x` (one generator) or `x1..xk`.
  static JetContext make(std::size_t num_generators, unsigned alphabet_size,
                         std::size_t max_word_len,
                         std::size_t capacity = kDefaultContextCapacity);
  static JetContext make(std::vector<std::string> generator_names,
                         unsigned alphabet_size, std::size_t max_word_len,
                         std::size_t capacity = kDefaultContextCapacity);
  /// Context sized to apply `op` once (alphabet and word length taken from
  /// the operator).
  static JetContext for_operator(std::vector<std::string> generator_names,
                                 const Operator& op);

  std::size_t num_generators() const;
  unsigned alphabet_size() const;
  std::size_t max_word_len() const;
  std::size_t num_variables() const;
  const VarRegistry& registry() const;

  VarId generator(std::size_t i) const;
  RatFunc gen(std::size_t i) const { return RatFunc::variable(generator(i)); }
  std::vector<VarId> generators() const;
  /// The jet symbol θ(g); throws WordLengthError when θ is too long.
  VarId jet(std::size_t generator_index, const DerivWord& word) const;
  /// Base generator position and word of any context variable.
  std::size_t base_of(VarId v) const;
  DerivWord word_of(VarId v) const;

  /// Single letter acting as a derivation (Leibniz and quotient rules).
  MPoly derive(std::uint16_t letter, const MPoly& f) const;
  RatFunc derive(std::uint16_t letter, const RatFunc& f) const;
  /// Applies a word innermost letter first.
  RatFunc apply(const DerivWord& word, const RatFunc& f) const;
  RatFunc apply(const Operator& op, const RatFunc& f) const;

  std::string render(const RatFunc& f) const;
  std::string render(const MPoly& f) const;

  friend bool operator==(const JetContext& a, const JetContext& b) {
    return a.impl_ == b.impl_;
  }

 private:
  struct Impl;
  explicit JetContext(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace dnkit

#endif  // DNKIT_JETS_HPP
