#include "dnkit/jets.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "dnkit/error.hpp"

namespace dnkit {

// ---------------------------------------------------------------------------
// DerivWord

unsigned DerivWord::alphabet_needed() const {
  unsigned m = 0;
  for (auto l : letters_) m = std::max<unsigned>(m, l + 1U);
  return m;
}

DerivWord DerivWord::then_after(const DerivWord& inner) const {
  std::vector<std::uint16_t> letters = letters_;
  letters.insert(letters.end(), inner.letters_.begin(), inner.letters_.end());
  return DerivWord(std::move(letters));
}

std::string DerivWord::to_string() const {
  if (letters_.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i != 0) s += '.';
    s += 'D' + std::to_string(letters_[i] + 1U);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Operator

Operator Operator::word(const DerivWord& w, const Rational& c) {
  Operator op;
  op.add_term(w, c);
  return op;
}

void Operator::add_term(const DerivWord& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned Operator::alphabet_needed() const {
  unsigned m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.alphabet_needed());
  return m;
}

std::size_t Operator::max_length() const {
  std::size_t l = 0;
  for (const auto& [w, c] : terms_) l = std::max(l, w.length());
  return l;
}

Operator& Operator::operator+=(const Operator& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Operator Operator::scaled(const Rational& c) const {
  Operator op;
  for (const auto& [w, k] : terms_) op.add_term(w, k * c);
  return op;
}

Operator Operator::compose(const Operator& inner) const {
  Operator op;
  for (const auto& [w, c] : terms_) {
    for (const auto& [v, k] : inner.terms_) op.add_term(w.then_after(v), c * k);
  }
  return op;
}

std::string Operator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational k = c;
    if (first) {
      if (k.sign() < 0) {
        os << '-';
        k = -k;
      }
    } else {
      os << (k.sign() < 0 ? " - " : " + ");
      k = k.abs();
    }
    first = false;
    if (!k.is_one()) os << k << '*';
    os << w.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// JetContext

struct JetContext::Impl {
  struct Slot {
    std::uint32_t gen;
    std::uint32_t len;
    std::uint64_t code;
  };

  VarRegistry registry;
  std::vector<VarId> generators;
  unsigned alphabet = 0;
  std::size_t max_len = 0;
  std::vector<std::uint64_t> radix;   // alphabet^k
  std::vector<std::uint64_t> offset;  // words shorter than k
  std::uint64_t words_per_gen = 0;
  std::vector<Slot> slots;            // by variable index
  std::vector<std::uint32_t> table;   // gen * words_per_gen + offset + code

  std::uint32_t lookup(std::uint32_t gen, std::uint32_t len,
                       std::uint64_t code) const {
    return table[gen * words_per_gen + offset[len] + code];
  }

  VarId prepend(std::uint16_t letter, std::uint32_t var) const {
    const Slot& s = slots[var];
    if (s.len + 1U > max_len) {
      throw WordLengthError("jet word length would exceed the context bound " +
                            std::to_string(max_len));
    }
    const std::uint32_t index =
        lookup(s.gen, s.len + 1U, letter * radix[s.len] + s.code);
    return {index, VarKind::jet};
  }
};

JetContext JetContext::make(std::size_t num_generators, unsigned alphabet_size,
                            std::size_t max_word_len, std::size_t capacity) {
  std::vector<std::string> names;
  if (num_generators == 1) {
    names.emplace_back("x");
  } else {
    for (std::size_t i = 1; i <= num_generators; ++i) {
      names.push_back("x" + std::to_string(i));
    }
  }
  return make(std::move(names), alphabet_size, max_word_len, capacity);
}

JetContext JetContext::make(std::vector<std::string> generator_names,
                            unsigned alphabet_size, std::size_t max_word_len,
                            std::size_t capacity) {
  auto impl = std::make_shared<Impl>();
  impl->alphabet = alphabet_size;
  impl->max_len = alphabet_size == 0 ? 0 : max_word_len;
  const std::uint64_t gens = generator_names.size();

  std::uint64_t words = 0;
  std::uint64_t power = 1;
  for (std::size_t len = 0; len <= impl->max_len; ++len) {
    impl->radix.push_back(power);
    impl->offset.push_back(words);
    words += power;
    if (gens * words > capacity) {
      throw CapacityError("jet context needs more than " +
                          std::to_string(capacity) + " variables");
    }
    power *= alphabet_size;
  }
  impl->words_per_gen = words;
  impl->table.resize(gens * words);

  for (std::uint32_t g = 0; g < gens; ++g) {
    impl->generators.push_back(impl->registry.add_generator(generator_names[g]));
    impl->slots.push_back({g, 0, 0});
    impl->table[g * words] = impl->generators.back().index;
  }
  for (std::uint32_t len = 1; len <= impl->max_len; ++len) {
    for (std::uint32_t g = 0; g < gens; ++g) {
      for (std::uint64_t code = 0; code < impl->radix[len]; ++code) {
        std::string name;
        std::uint64_t rest = code;
        for (std::uint32_t k = len; k-- > 0;) {
          const std::uint64_t digit = rest / impl->radix[k];
          rest %= impl->radix[k];
          if (!name.empty()) name += '.';
          name += 'D' + std::to_string(digit + 1);
        }
        name += '(' + generator_names[g] + ')';
        const VarId v = impl->registry.add_jet(std::move(name), impl->generators[g]);
        impl->slots.push_back({g, len, code});
        impl->table[g * words + impl->offset[len] + code] = v.index;
      }
    }
  }
  return JetContext(std::move(impl));
}

JetContext JetContext::for_operator(std::vector<std::string> generator_names,
                                    const Operator& op) {
  return make(std::move(generator_names), op.alphabet_needed(), op.max_length());
}

std::size_t JetContext::num_generators() const { return impl_->generators.size(); }
unsigned JetContext::alphabet_size() const { return impl_->alphabet; }
std::size_t JetContext::max_word_len() const { return impl_->max_len; }
std::size_t JetContext::num_variables() const { return impl_->registry.size(); }
const VarRegistry& JetContext::registry() const { return impl_->registry; }

VarId JetContext::generator(std::size_t i) const { return impl_->generators.at(i); }
std::vector<VarId> JetContext::generators() const { return impl_->generators; }

VarId JetContext::jet(std::size_t generator_index, const DerivWord& word) const {
  if (generator_index >= impl_->generators.size()) {
    throw Error("generator index out of range");
  }
  if (word.length() > impl_->max_len) {
    throw WordLengthError("word " + word.to_string() +
                          " is longer than the context bound " +
                          std::to_string(impl_->max_len));
  }
  std::uint64_t code = 0;
  for (auto l : word.letters()) {
    if (l >= impl_->alphabet) throw UnknownLetterError(l + 1U, impl_->alphabet);
    code = code * impl_->alphabet + l;
  }
  const auto len = static_cast<std::uint32_t>(word.length());
  const std::uint32_t index =
      impl_->lookup(static_cast<std::uint32_t>(generator_index), len, code);
  return impl_->registry.id(index);
}

std::size_t JetContext::base_of(VarId v) const { return impl_->slots.at(v.index).gen; }

DerivWord JetContext::word_of(VarId v) const {
  const Impl::Slot& s = impl_->slots.at(v.index);
  std::vector<std::uint16_t> letters;
  std::uint64_t rest = s.code;
  for (std::uint32_t k = s.len; k-- > 0;) {
    letters.push_back(static_cast<std::uint16_t>(rest / impl_->radix[k]));
    rest %= impl_->radix[k];
  }
  return DerivWord(std::move(letters));
}

MPoly JetContext::derive(std::uint16_t letter, const MPoly& f) const {
  if (letter >= impl_->alphabet) throw UnknownLetterError(letter + 1U, impl_->alphabet);
  if (impl_->max_len == 0) {
    throw WordLengthError("context allows no derivation words");
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const Term& t : f.terms()) {
    for (const VarPower& p : t.monomial.factors()) {
      const VarId d = impl_->prepend(letter, p.var);
      Monomial m = *t.monomial.divide(Monomial::variable(p.var));
      m = m * Monomial::variable(d.index);
      auto [it, inserted] = acc.try_emplace(std::move(m));
      it->second += t.coeff * Rational(static_cast<long>(p.exp));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
  return MPoly::from_terms(std::move(terms));
}

RatFunc JetContext::derive(std::uint16_t letter, const RatFunc& f) const {
  if (f.is_polynomial()) {
    return RatFunc(derive(letter, f.num()).scaled(f.den().constant_term().inverse()));
  }
  // With q = prod p_i^e_i, g = gcd(q, Dq) = prod p_i^(e_i-1) since no
  // nonconstant p divides Dp. Cancelling g leaves a reduced fraction.
  const MPoly& p = f.num();
  const MPoly& q = f.den();
  const MPoly dq = derive(letter, q);
  const MPoly g = gcd(q, dq);
  const MPoly q_g = *q.divide(g);
  const MPoly dq_g = *dq.divide(g);
  return RatFunc::from_coprime(derive(letter, p) * q_g - p * dq_g, q * q_g);
}

RatFunc JetContext::apply(const DerivWord& word, const RatFunc& f) const {
  RatFunc r = f;
  const auto& letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    r = derive(*it, r);
  }
  return r;
}

RatFunc JetContext::apply(const Operator& op, const RatFunc& f) const {
  RatFunc sum;
  for (const auto& [w, c] : op.terms()) sum += apply(w, f).scaled(c);
  return sum;
}

std::string JetContext::render(const RatFunc& f) const {
  return dnkit::render(f, impl_->registry);
}

std::string JetContext::render(const MPoly& f) const {
  return dnkit::render(f, impl_->registry);
}

}  // namespace dnkit
