#include "jhkit/collector.hpp"

#include <algorithm>
#include <stdexcept>

#include "jhkit/error.hpp"

namespace jhkit {

bool CommSymbol::is_basic() const noexcept {
  return std::all_of(slots.begin(), slots.end(), [](const auto& s) { return s.size() == 1 && s[0].exp == 1; });
}

MixedWord::MixedWord(AlphabetPtr base) : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("mixed word needs a base alphabet");
}

void MixedWord::push(MixedSyllable s) {
  if (!syllables_.empty() && syllables_.back().same_symbol(s) && syllables_.back().exp == -s.exp)
    syllables_.pop_back();
  else
    syllables_.push_back(std::move(s));
}

void MixedWord::append(const MixedWord& w) {
  for (const auto& s : w.syllables_) push(s);
}

MixedWord MixedWord::inverse() const {
  MixedWord out(base_);
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    auto s = *it;
    s.exp = -s.exp;
    out.syllables_.push_back(std::move(s));
  }
  return out;
}

namespace {

MixedSyllable a_syllable(Letter a, int exp) { return {true, a, {}, exp}; }
MixedSyllable c_syllable(CommSymbol c, int exp) { return {false, 0, std::move(c), exp}; }

CommSymbol extend(const CommSymbol& c, std::vector<Syllable> slot) {
  CommSymbol out = c;
  out.slots.push_back(std::move(slot));
  return out;
}

struct Expander {
  AlphabetPtr base;
  int cutoff;
  std::size_t discarded = 0;

  MixedWord symbol(const CommSymbol& c, int exp) const {
    MixedWord w(base);
    w.push(c_syllable(c, exp));
    return w;
  }

  // [c, a^f] as a product of symbols with single-letter slots.
  MixedWord with_letter(const CommSymbol& c, Letter a, int f) {
    CommSymbol x = extend(c, {{a, 1}});
    if (x.weight() > cutoff) {
      ++discarded;
      return MixedWord(base);
    }
    if (f > 0) return symbol(x, 1);
    // [c,a^-1] = [[c,a],a^-1]^-1 [c,a]^-1
    MixedWord out = with_letter(x, a, -1).inverse();
    out.push(c_syllable(x, -1));
    return out;
  }

  // [P, w] = P^-1 Π (p_i [p_i, w])^{e_i}
  MixedWord comm_word(const MixedWord& p, std::span<const Syllable> w) {
    MixedWord out = p.inverse();
    for (const auto& s : p.syllables()) {
      MixedWord conj(base);
      conj.push(c_syllable(s.sym, 1));
      conj.append(single(s.sym, w));
      out.append(s.exp > 0 ? conj : conj.inverse());
    }
    return out;
  }

  // [p, a^f w'] = [p,w'] [p,a^f] [[p,a^f],w']
  MixedWord single(const CommSymbol& p, std::span<const Syllable> w) {
    if (w.empty()) return MixedWord(base);
    if (p.weight() >= cutoff) {
      ++discarded;
      return MixedWord(base);
    }
    auto rest = w.subspan(1);
    MixedWord out = single(p, rest);
    MixedWord x = with_letter(p, w[0].letter, w[0].exp);
    out.append(x);
    if (!rest.empty() && !x.empty()) out.append(comm_word(x, rest));
    return out;
  }

  // Left-normed symbol with arbitrary slot words, rewritten slot by slot.
  MixedWord expand(const CommSymbol& c) {
    if (c.weight() > cutoff) {
      ++discarded;
      return MixedWord(base);
    }
    if (c.is_basic()) return symbol(c, 1);
    MixedWord acc = symbol(CommSymbol{c.b, {}}, 1);
    for (const auto& slot : c.slots) {
      auto reduced = free_reduce(slot);
      if (acc.empty()) break;
      if (reduced.empty()) {
        acc = MixedWord(base);
        break;
      }
      if (acc.size() == 1 && acc.syllables()[0].exp == 1)
        acc = single(acc.syllables()[0].sym, reduced);
      else
        acc = comm_word(acc, reduced);
    }
    return acc;
  }
};

}  // namespace

MixedWord embed_sum(const Word& w) {
  MixedWord out(w.alphabet());
  for (const auto& s : w.syllables()) {
    if (s.exp > 0) {
      out.push(a_syllable(s.letter, 1));
      out.push(c_syllable(CommSymbol{s.letter, {}}, 1));
    } else {
      out.push(c_syllable(CommSymbol{s.letter, {}}, -1));
      out.push(a_syllable(s.letter, -1));
    }
  }
  return out;
}

CollectResult collect_once(const MixedWord& w, int cutoff) {
  if (cutoff < 1) throw PreconditionError("collection cutoff must be >= 1");
  Expander ex{w.base(), cutoff};
  std::vector<Syllable> collected;
  MixedWord rem(w.base());
  for (const auto& s : w.syllables()) {
    if (!s.is_a) {
      if (s.sym.weight() > cutoff)
        ++ex.discarded;
      else
        rem.push(s);
      continue;
    }
    collected.push_back({s.a, s.exp});
    // R a^f = a^f Π r_i^{a^f},  c^{a} = c [c,a],  (c^-1)^{a} = [c,a]^-1 c^-1
    MixedWord next(w.base());
    for (const auto& r : rem.syllables()) {
      MixedWord x = ex.with_letter(r.sym, s.a, s.exp);
      if (r.exp > 0) {
        next.push(r);
        next.append(x);
      } else {
        next.append(x.inverse());
        next.push(r);
      }
    }
    rem = std::move(next);
  }
  return {Word(w.base(), collected), std::move(rem), ex.discarded};
}

MixedWord tietze_expand(const MixedWord& remainder, int cutoff, std::size_t* discarded) {
  if (cutoff < 1) throw PreconditionError("collection cutoff must be >= 1");
  Expander ex{remainder.base(), cutoff};
  MixedWord out(remainder.base());
  for (const auto& s : remainder.syllables()) {
    if (s.is_a) {
      out.push(s);
      continue;
    }
    MixedWord e = ex.expand(s.sym);
    out.append(s.exp > 0 ? e : e.inverse());
  }
  if (discarded) *discarded += ex.discarded;
  return out;
}

MixedWord schreier_remainder(const MixedWord& w) {
  const auto& s = w.syllables();
  MixedWord out(w.base());
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (s[t].is_a) continue;
    std::vector<Syllable> suffix;
    for (std::size_t u = t + 1; u < s.size(); ++u)
      if (s[u].is_a) suffix.push_back({s[u].a, s[u].exp});
    suffix = free_reduce(suffix);
    MixedWord piece(w.base());
    piece.push(c_syllable(s[t].sym, 1));
    if (!suffix.empty()) piece.push(c_syllable(extend(s[t].sym, suffix), 1));
    out.append(s[t].exp > 0 ? piece : piece.inverse());
  }
  return out;
}

AlphabetPtr free_product_alphabet(const AlphabetPtr& base) {
  std::vector<std::string> names;
  for (const auto& n : base->names()) names.push_back("a_" + n);
  for (const auto& n : base->names()) names.push_back("b_" + n);
  return Alphabet::make(std::move(names));
}

namespace {

Word symbol_word(const CommSymbol& c, const AlphabetPtr& ab, std::size_t n) {
  std::vector<Word> entries{Word::letter(ab, static_cast<Letter>(n + c.b))};
  for (const auto& slot : c.slots) {
    std::vector<Syllable> s;
    for (const auto& x : slot) s.push_back({x.letter, x.exp});
    entries.emplace_back(ab, s);
  }
  return left_normed_commutator(entries);
}

}  // namespace

Word to_free_word(const MixedWord& w, const AlphabetPtr& ab) {
  const std::size_t n = w.base()->size();
  if (ab->size() != 2 * n) throw AlphabetMismatch("to_free_word: alphabet is not the free product alphabet");
  Word out(ab);
  for (const auto& s : w.syllables()) {
    Word piece = s.is_a ? Word::letter(ab, s.a) : symbol_word(s.sym, ab, n);
    out = out * (s.exp > 0 ? piece : piece.inverse());
  }
  return out;
}

Word to_free_word(const Word& collected, const AlphabetPtr& ab) {
  std::vector<Syllable> s(collected.syllables().begin(), collected.syllables().end());
  return Word(ab, s);
}

Word hopf_via_collection(const Word& w, int k, SequenceOrder order) {
  if (k < 1) throw PreconditionError("James-Hopf index k must be >= 1");
  const auto& base = w.alphabet();
  auto target = Alphabet::smash(base, k);
  const auto& syl = w.syllables();
  if (syl.empty()) return Word(target);
  std::vector<std::string> names;
  for (std::size_t t = 0; t < syl.size(); ++t) names.push_back("y" + std::to_string(t + 1));
  auto aux = Alphabet::make(std::move(names));
  std::vector<Syllable> tagged;
  for (std::size_t t = 0; t < syl.size(); ++t) tagged.push_back({static_cast<Letter>(t), syl[t].exp});
  auto result = collect_once(embed_sum(Word(aux, tagged)), k);

  struct Entry {
    std::vector<Letter> tuple;
    int exp;
  };
  std::vector<Entry> entries;
  for (const auto& s : result.remainder.syllables()) {
    if (s.is_a || s.sym.weight() != k) continue;
    Entry e{{s.sym.b}, s.exp};
    for (const auto& slot : s.sym.slots) e.tuple.push_back(slot.at(0).letter);
    entries.push_back(std::move(e));
  }
  std::stable_sort(entries.begin(), entries.end(), [order](const Entry& a, const Entry& b) {
    if (order == SequenceOrder::left_lex) return a.tuple < b.tuple;
    return std::lexicographical_compare(a.tuple.rbegin(), a.tuple.rend(), b.tuple.rbegin(), b.tuple.rend());
  });
  std::vector<Syllable> out;
  std::vector<Letter> coords(static_cast<std::size_t>(k));
  for (const auto& e : entries) {
    for (std::size_t j = 0; j < e.tuple.size(); ++j) coords[j] = syl[e.tuple[j]].letter;
    out.push_back({target->from_coords(coords), e.exp});
  }
  return Word(target, out);
}

std::string to_string(const CommSymbol& c, const Alphabet& base) {
  std::string out = "b_" + base.name(c.b);
  if (c.slots.empty()) return out;
  out = "[" + out;
  for (const auto& slot : c.slots) {
    out += ",";
    if (slot.empty()) out += "1";
    for (std::size_t i = 0; i < slot.size(); ++i) {
      if (i) out += ' ';
      out += "a_" + base.name(slot[i].letter);
      if (slot[i].exp < 0) out += "^-1";
    }
  }
  return out + "]";
}

std::string to_string(const MixedWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += s.is_a ? "a_" + w.base()->name(s.a) : to_string(s.sym, *w.base());
    if (s.exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace jhkit
