#include "jhkit/groupring.hpp"

#include <cctype>
#include <charconv>

#include "jhkit/error.hpp"

namespace jhkit {

RingElement::RingElement(CoefficientRing ring, AlphabetPtr alphabet)
    : ring_(ring), alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("ring element needs an alphabet");
}

RingElement RingElement::zero(CoefficientRing ring, AlphabetPtr alphabet) {
  return RingElement(ring, std::move(alphabet));
}

RingElement RingElement::one(CoefficientRing ring, AlphabetPtr alphabet) {
  RingElement out(ring, alphabet);
  out.add_term(Word(alphabet), 1);
  return out;
}

RingElement RingElement::of(CoefficientRing ring, const Word& w, Coeff c) {
  RingElement out(ring, w.alphabet());
  out.add_term(w, c);
  return out;
}

RingElement RingElement::minus_one(CoefficientRing ring, const Word& w) {
  RingElement out = of(ring, w);
  out.add_term(Word(w.alphabet()), -1);
  return out;
}

Coeff RingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void RingElement::add_term(const Word& w, Coeff c) {
  require_same_alphabet(alphabet_, w.alphabet(), "ring element term");
  c = ring_.normalize(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = ring_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void RingElement::require_compatible(const RingElement& other, const char* op) const {
  if (!(ring_ == other.ring_)) throw AlphabetMismatch(std::string(op) + ": operands over different coefficient rings");
  require_same_alphabet(alphabet_, other.alphabet_, op);
}

RingElement RingElement::operator+(const RingElement& other) const {
  require_compatible(other, "add");
  RingElement out = *this;
  for (const auto& [w, c] : other.terms_) out.add_term(w, c);
  return out;
}

RingElement RingElement::operator-(const RingElement& other) const {
  require_compatible(other, "subtract");
  RingElement out = *this;
  for (const auto& [w, c] : other.terms_) out.add_term(w, ring_.neg(c));
  return out;
}

RingElement RingElement::operator*(const RingElement& other) const {
  require_compatible(other, "multiply");
  RingElement out(ring_, alphabet_);
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : other.terms_) out.add_term(u * v, ring_.mul(a, b));
  return out;
}

RingElement RingElement::scale(Coeff c) const {
  RingElement out(ring_, alphabet_);
  for (const auto& [w, a] : terms_) out.add_term(w, ring_.mul(a, c));
  return out;
}

RingElement RingElement::change_ring(CoefficientRing ring) const {
  RingElement out(ring, alphabet_);
  for (const auto& [w, a] : terms_) out.add_term(w, a);
  return out;
}

Coeff augmentation(const RingElement& a) {
  Coeff s = 0;
  for (const auto& [w, c] : a.terms()) s = a.ring().add(s, c);
  return s;
}

RingElement fox_derivative(Letter i, const Word& w, const CoefficientRing& ring) {
  if (!w.alphabet()->contains(i)) throw UnknownLetter("#" + std::to_string(i));
  RingElement out(ring, w.alphabet());
  const auto& s = w.syllables();
  // ∂(u x) = ∂u + u, ∂(u x^-1) = ∂u - u x^-1; prefixes of a reduced word are reduced.
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (s[t].letter != i) continue;
    if (s[t].exp > 0)
      out.add_term(Word(w.alphabet(), std::span(s.data(), t)), 1);
    else
      out.add_term(Word(w.alphabet(), std::span(s.data(), t + 1)), -1);
  }
  return out;
}

RingElement fox_derivative(Letter i, const RingElement& a) {
  RingElement out(a.ring(), a.alphabet());
  for (const auto& [w, c] : a.terms()) out = out + fox_derivative(i, w, a.ring()).scale(c);
  return out;
}

namespace {

Coeff closed_form(std::span<const Letter> index, const Word& w, const CoefficientRing& ring) {
  const auto& s = w.syllables();
  const std::size_t n = s.size();
  if (index.empty()) return ring.normalize(1);
  std::vector<Coeff> f(n, 0);
  for (std::size_t t = 0; t < n; ++t)
    if (s[t].letter == index[0]) f[t] = ring.normalize(s[t].exp);
  for (std::size_t j = 1; j < index.size(); ++j) {
    // prefix[t] = Σ_{u < t} f[u]
    std::vector<Coeff> prefix(n + 1, 0);
    for (std::size_t t = 0; t < n; ++t) prefix[t + 1] = ring.add(prefix[t], f[t]);
    std::vector<Coeff> g(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
      if (s[t].letter != index[j]) continue;
      // λ_{j-1} ≤ t - 1 before a positive syllable, ≤ t before a negative one
      Coeff acc = s[t].exp > 0 ? prefix[t] : prefix[t + 1];
      g[t] = ring.mul(acc, s[t].exp);
    }
    f = std::move(g);
  }
  Coeff total = 0;
  for (Coeff c : f) total = ring.add(total, c);
  return total;
}

}  // namespace

Coeff higher_fox_aug(std::span<const Letter> index, const Word& w, const CoefficientRing& ring,
                     FoxAlgorithm algorithm) {
  for (Letter i : index)
    if (!w.alphabet()->contains(i)) throw UnknownLetter("#" + std::to_string(i));
  if (algorithm == FoxAlgorithm::closed_form) return closed_form(index, w, ring);
  return higher_fox_aug(index, RingElement::of(ring, w), FoxAlgorithm::recursive);
}

Coeff higher_fox_aug(std::span<const Letter> index, const RingElement& a, FoxAlgorithm algorithm) {
  if (algorithm == FoxAlgorithm::closed_form) {
    Coeff total = 0;
    for (const auto& [w, c] : a.terms())
      total = a.ring().add(total, a.ring().mul(c, closed_form(index, w, a.ring())));
    return total;
  }
  RingElement cur = a;
  for (auto it = index.rbegin(); it != index.rend(); ++it) cur = fox_derivative(*it, cur);
  return augmentation(cur);
}

bool aug_ideal_member(const RingElement& a, int n) {
  if (n < 1) throw PreconditionError("aug_ideal_member: n must be >= 1");
  for (int order = 0; order < n; ++order) {
    bool ok = true;
    for_each_multi_index(a.alphabet()->size(), order, [&](std::span<const Letter> idx) {
      if (ok && higher_fox_aug(idx, a) != 0) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

RingElement parse_ring_element(const CoefficientRing& ring, const AlphabetPtr& alphabet, std::string_view text) {
  RingElement out(ring, alphabet);
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == n) throw ParseError("empty ring element", i);
  bool first = true;
  while (i < n) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    first = false;
    const std::size_t start = i;
    // a term runs up to the next '+' or '-' that is not an exponent sign
    while (i < n && !((text[i] == '+' || text[i] == '-') && (i == 0 || text[i - 1] != '^'))) ++i;
    std::string_view term = text.substr(start, i - start);
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.remove_suffix(1);
    if (term.empty()) throw ParseError("empty term", start);
    Coeff c = 1;
    std::string_view word_text = term;
    auto star = term.find('*');
    auto digits_end = term.find_first_not_of("0123456789");
    if (star != std::string_view::npos && star > 0 && term.find_first_not_of("0123456789 ") == star) {
      auto num = term.substr(0, term.find_first_not_of("0123456789"));
      std::from_chars(num.data(), num.data() + num.size(), c);
      word_text = term.substr(star + 1);
    } else if (digits_end == std::string_view::npos) {
      auto [ptr, ec] = std::from_chars(term.data(), term.data() + term.size(), c);
      if (ec != std::errc()) throw ParseError("coefficient out of range", start);
      word_text = "1";
    }
    out.add_term(parse_word(alphabet, word_text), ring.mul(c, sign));
    skip_ws();
  }
  return out;
}

std::string to_string(const RingElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c0] : a.terms()) {
    Coeff c = c0;
    bool negative = a.ring().is_integral() && c < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (w.empty())
      out += std::to_string(c);
    else if (c == 1)
      out += to_string(w);
    else
      out += std::to_string(c) + "*" + to_string(w);
  }
  return out;
}

}  // namespace jhkit
