#include "jhkit/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "jhkit/error.hpp"

namespace jhkit {

namespace {

constexpr std::string_view kSmashSep = "/\\";

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

std::vector<std::string_view> split_smash(std::string_view name) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = name.find(kSmashSep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(name.substr(start));
      return parts;
    }
    parts.push_back(name.substr(start, pos - start));
    start = pos + kSmashSep.size();
  }
}

}  // namespace

Alphabet::Alphabet(Private, std::vector<std::string> names)
    : names_(std::move(names)), size_(names_.size()) {}

Alphabet::Alphabet(Private, AlphabetPtr base, int arity) : base_(std::move(base)), arity_(arity) {
  std::size_t n = 1;
  for (int i = 0; i < arity_; ++i) {
    if (base_->size() != 0 && n > std::numeric_limits<Letter>::max() / base_->size())
      throw std::length_error("smash alphabet too large");
    n *= base_->size();
  }
  size_ = n;
}

AlphabetPtr Alphabet::make(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n == "*") throw std::invalid_argument("the basepoint '*' cannot be a letter");
    if (!valid_name(n)) throw std::invalid_argument("invalid letter name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate letter '" + n + "'");
  }
  return std::make_shared<const Alphabet>(Private{}, std::move(names));
}

AlphabetPtr Alphabet::parse(std::string_view text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto pos = text.find(',', start);
    auto piece = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    auto b = piece.find_first_not_of(" \t");
    auto e = piece.find_last_not_of(" \t");
    std::string name = b == std::string_view::npos ? std::string() : std::string(piece.substr(b, e - b + 1));
    if (name.empty()) {
      if (pos == std::string_view::npos && names.empty()) break;
      throw ParseError("empty letter name in alphabet", start);
    }
    names.push_back(std::move(name));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return make(std::move(names));
}

AlphabetPtr Alphabet::smash(const AlphabetPtr& base, int arity) {
  if (!base) throw std::invalid_argument("null base alphabet");
  if (arity < 1) throw std::invalid_argument("smash arity must be >= 1");
  const AlphabetPtr& plain = base->is_smash() ? base->base() : base;
  if (base->is_smash()) arity *= base->arity();
  if (arity == 1) return plain;
  return std::make_shared<const Alphabet>(Private{}, plain, arity);
}

std::string Alphabet::name(Letter l) const {
  if (!contains(l)) throw std::out_of_range("letter index out of range");
  if (!is_smash()) return names_[l];
  std::string out;
  auto c = coords(l);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += kSmashSep;
    out += base_->names_[c[i]];
  }
  return out;
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  if (!is_smash()) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
  }
  auto parts = split_smash(name);
  if (parts.size() != static_cast<std::size_t>(arity_)) return std::nullopt;
  std::vector<Letter> c;
  for (auto part : parts) {
    auto l = base_->find(part);
    if (!l) return std::nullopt;
    c.push_back(*l);
  }
  return from_coords(c);
}

std::vector<Letter> Alphabet::coords(Letter l) const {
  if (!is_smash()) return {l};
  std::vector<Letter> c(static_cast<std::size_t>(arity_));
  const auto a = static_cast<Letter>(base_->size());
  for (int i = arity_ - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = l % a;
    l /= a;
  }
  return c;
}

Letter Alphabet::from_coords(std::span<const Letter> c) const {
  if (c.size() != static_cast<std::size_t>(arity_)) throw std::invalid_argument("coordinate count does not match arity");
  if (!is_smash()) return c[0];
  Letter idx = 0;
  const auto a = static_cast<Letter>(base_->size());
  for (Letter x : c) {
    if (x >= a) throw std::out_of_range("coordinate out of range");
    idx = idx * a + x;
  }
  return idx;
}

bool Alphabet::same_as(const Alphabet& other) const noexcept {
  if (this == &other) return true;
  if (arity_ != other.arity_ || size_ != other.size_) return false;
  if (!is_smash()) return !other.is_smash() && names_ == other.names_;
  return other.is_smash() && base_->same_as(*other.base_);
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) noexcept {
  return a == b || (a && b && a->same_as(*b));
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* op) {
  if (!same_alphabet(a, b)) throw AlphabetMismatch(std::string(op) + ": operands over different alphabets");
}

std::vector<Syllable> free_reduce(std::span<const Syllable> raw) {
  std::vector<Syllable> out;
  out.reserve(raw.size());
  for (const auto& s : raw) {
    if (s.exp != 1 && s.exp != -1) throw std::invalid_argument("syllable exponent must be +1 or -1");
    if (!out.empty() && out.back().letter == s.letter && out.back().exp == -s.exp)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
}

Word::Word(AlphabetPtr alphabet, std::span<const Syllable> syllables)
    : alphabet_(std::move(alphabet)), syllables_(free_reduce(syllables)) {
  if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
  for (const auto& s : syllables_)
    if (!alphabet_->contains(s.letter)) throw std::out_of_range("letter index out of range");
}

Word Word::letter(AlphabetPtr alphabet, Letter l, int exp) {
  Syllable s{l, exp};
  return Word(std::move(alphabet), std::span<const Syllable>(&s, 1));
}

Word Word::inverse() const {
  Word out(alphabet_);
  out.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) out.syllables_.push_back({it->letter, -it->exp});
  return out;
}

Word Word::operator*(const Word& other) const {
  require_same_alphabet(alphabet_, other.alphabet_, "multiply");
  Word out(alphabet_);
  out.syllables_ = syllables_;
  for (const auto& s : other.syllables_) {
    if (!out.syllables_.empty() && out.syllables_.back().letter == s.letter && out.syllables_.back().exp == -s.exp)
      out.syllables_.pop_back();
    else
      out.syllables_.push_back(s);
  }
  return out;
}

Word Word::pow(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out(alphabet_);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

bool ShortLex::operator()(const Word& a, const Word& b) const noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& x = a.syllables();
  const auto& y = b.syllables();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].letter != y[i].letter) return x[i].letter < y[i].letter;
    if (x[i].exp != y[i].exp) return x[i].exp > y[i].exp;
  }
  return false;
}

Word reduce(const AlphabetPtr& alphabet, std::span<const std::pair<std::string, int>> raw) {
  std::vector<Syllable> syl;
  for (const auto& [name, exp] : raw) {
    if (name == "*") continue;
    auto l = alphabet->find(name);
    if (!l) throw UnknownLetter(name);
    syl.push_back({*l, exp});
  }
  return Word(alphabet, syl);
}

Word multiply(const Word& u, const Word& v) { return u * v; }
Word inverse(const Word& u) { return u.inverse(); }

Word commutator(const Word& u, const Word& v) {
  require_same_alphabet(u.alphabet(), v.alphabet(), "commutator");
  return u.inverse() * v.inverse() * u * v;
}

Word left_normed_commutator(std::span<const Word> entries) {
  if (entries.empty()) throw std::invalid_argument("empty commutator");
  Word acc = entries[0];
  for (std::size_t i = 1; i < entries.size(); ++i) acc = commutator(acc, entries[i]);
  return acc;
}

Word parse_word(const AlphabetPtr& alphabet, std::string_view text) {
  std::vector<Syllable> syl;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < n) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < n && !is_space(text[i])) ++i;
    std::string_view tok = text.substr(start, i - start);
    auto caret = tok.find('^');
    std::string_view name = tok.substr(0, caret);
    long long exp = 1;
    if (caret != std::string_view::npos) {
      auto num = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), exp);
      if (num.empty() || ec != std::errc() || ptr != num.data() + num.size())
        throw ParseError("malformed exponent in token '" + std::string(tok) + "'", start + caret + 1);
      if (exp == 0) throw ParseError("exponent must be nonzero", start + caret + 1);
      if (std::llabs(exp) > 1000000) throw ParseError("exponent too large", start + caret + 1);
    }
    if (name.empty()) throw ParseError("missing letter name", start);
    if (name == "1" && caret == std::string_view::npos) continue;
    bool basepoint = name == "*";
    if (!basepoint && name.find(kSmashSep) != std::string_view::npos) {
      for (auto part : split_smash(name))
        if (part == "*") basepoint = true;
    }
    if (basepoint) continue;
    auto l = alphabet->find(name);
    if (!l) {
      bool well_formed = true;
      for (auto part : split_smash(name)) well_formed = well_formed && valid_name(part);
      if (!well_formed) throw ParseError("malformed token '" + std::string(tok) + "'", start);
      throw UnknownLetter(std::string(name));
    }
    int e = exp > 0 ? 1 : -1;
    for (long long r = 0; r < std::llabs(exp); ++r) syl.push_back({*l, e});
  }
  return Word(alphabet, syl);
}

std::string to_string(const Word& w) {
  const auto& s = w.syllables();
  if (s.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    const auto run = static_cast<long long>(j - i) * s[i].exp;
    if (!out.empty()) out += ' ';
    out += w.alphabet()->name(s[i].letter);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::vector<std::pair<Letter, std::int64_t>> abelianize(const Word& w) {
  std::map<Letter, std::int64_t> acc;
  for (const auto& s : w.syllables()) acc[s.letter] += s.exp;
  std::vector<std::pair<Letter, std::int64_t>> out;
  for (const auto& [l, c] : acc)
    if (c != 0) out.emplace_back(l, c);
  return out;
}

LetterMap::LetterMap(AlphabetPtr source, AlphabetPtr target, std::vector<std::optional<Letter>> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!source_ || !target_) throw std::invalid_argument("letter map needs alphabets");
  if (image_.size() != source_->size()) throw std::invalid_argument("letter map must assign every source letter");
  for (const auto& t : image_)
    if (t && !target_->contains(*t)) throw std::out_of_range("letter map image out of range");
}

LetterMap LetterMap::identity(const AlphabetPtr& alphabet) {
  std::vector<std::optional<Letter>> img(alphabet->size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Letter>(i);
  return LetterMap(alphabet, alphabet, std::move(img));
}

bool LetterMap::injective() const {
  std::set<Letter> seen;
  for (const auto& t : image_)
    if (!t || !seen.insert(*t).second) return false;
  return true;
}

LetterMap LetterMap::smash_power(int k) const {
  if (source_->is_smash() || target_->is_smash())
    throw std::invalid_argument("smash_power needs a map between plain alphabets");
  auto src = Alphabet::smash(source_, k);
  auto dst = Alphabet::smash(target_, k);
  std::vector<std::optional<Letter>> img(src->size());
  std::vector<Letter> out(static_cast<std::size_t>(k));
  for (Letter l = 0; l < src->size(); ++l) {
    auto c = src->coords(l);
    bool collapse = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!image_[c[i]]) {
        collapse = true;
        break;
      }
      out[i] = *image_[c[i]];
    }
    if (!collapse) img[l] = dst->from_coords(out);
  }
  return LetterMap(src, dst, std::move(img));
}

LetterMap LetterMap::after(const LetterMap& inner) const {
  require_same_alphabet(inner.target_, source_, "compose letter maps");
  std::vector<std::optional<Letter>> img(inner.source_->size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    auto mid = inner.image_[i];
    if (mid) img[i] = image_[*mid];
  }
  return LetterMap(inner.source_, target_, std::move(img));
}

Word apply_letter_map(const LetterMap& f, const Word& w) {
  require_same_alphabet(f.source(), w.alphabet(), "apply_letter_map");
  std::vector<Syllable> out;
  out.reserve(w.size());
  for (const auto& s : w.syllables())
    if (auto t = f(s.letter)) out.push_back({*t, s.exp});
  return Word(f.target(), out);
}

bool is_monotone_surjection(std::span<const int> delta, int k) {
  if (delta.empty() || k < 1) return false;
  int prev = 0;
  for (int v : delta) {
    if (v < 1 || v > k) return false;
    if (v != prev && v != prev + 1) return false;
    prev = v;
  }
  return delta.front() == 1 && prev == k;
}

LetterMap smash_map_diagonal(const AlphabetPtr& base, int k, int l, std::span<const int> delta) {
  if (l < k || static_cast<int>(delta.size()) != l || !is_monotone_surjection(delta, k))
    throw PreconditionError("delta is not a monotone surjection [" + std::to_string(l) + "] -> [" +
                            std::to_string(k) + "]");
  auto src = Alphabet::smash(base, k);
  auto dst = Alphabet::smash(base, l);
  std::vector<std::optional<Letter>> img(src->size());
  std::vector<Letter> out(static_cast<std::size_t>(l));
  for (Letter x = 0; x < src->size(); ++x) {
    auto c = src->coords(x);
    for (int j = 0; j < l; ++j) out[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(delta[j] - 1)];
    img[x] = dst->from_coords(out);
  }
  return LetterMap(src, dst, std::move(img));
}

LetterMap smash_map_permute(const AlphabetPtr& base, int k, const Permutation& sigma) {
  if (sigma.size() != k) throw PreconditionError("permutation size does not match smash arity");
  auto alpha = Alphabet::smash(base, k);
  auto inv = sigma.inverse();
  std::vector<std::optional<Letter>> img(alpha->size());
  std::vector<Letter> out(static_cast<std::size_t>(k));
  for (Letter x = 0; x < alpha->size(); ++x) {
    auto c = alpha->coords(x);
    for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(inv(j))];
    img[x] = alpha->from_coords(out);
  }
  return LetterMap(alpha, alpha, std::move(img));
}

Word whitehead(const Word& w, int n) {
  if (n < 1) throw PreconditionError("whitehead arity must be >= 1");
  const auto& alpha = w.alphabet();
  if (alpha->arity() != n) throw PreconditionError("whitehead: word has arity " + std::to_string(alpha->arity()) +
                                                   ", expected " + std::to_string(n));
  if (n == 1) return w;
  const auto& base = alpha->base();
  std::map<Letter, Word> cache;
  Word out(base);
  for (const auto& s : w.syllables()) {
    auto it = cache.find(s.letter);
    if (it == cache.end()) {
      std::vector<Word> entries;
      for (Letter c : alpha->coords(s.letter)) entries.push_back(Word::letter(base, c));
      it = cache.emplace(s.letter, left_normed_commutator(entries)).first;
    }
    out = out * (s.exp > 0 ? it->second : it->second.inverse());
  }
  return out;
}

}  // namespace jhkit
