#include "jhkit/jameshopf.hpp"

#include <stdexcept>

#include "jhkit/error.hpp"

namespace jhkit {

SequenceOrder parse_sequence_order(std::string_view text) {
  if (text == "right" || text == "right_lex") return SequenceOrder::right_lex;
  if (text == "left" || text == "left_lex") return SequenceOrder::left_lex;
  throw std::invalid_argument("unknown sequence order '" + std::string(text) + "' (expected right|left)");
}

std::string to_string(SequenceOrder order) { return order == SequenceOrder::right_lex ? "right" : "left"; }

namespace {

struct Enumerator {
  std::span<const Syllable> s;
  const std::function<void(std::span<const int>, int)>& fn;
  std::vector<int> idx;

  // Right-lex: fill idx from the back; slot j may use positions <= max_pos.
  void right(int j, int max_pos, int sign) {
    if (j < 0) {
      fn(idx, sign);
      return;
    }
    for (int t = 0; t <= max_pos; ++t) {
      idx[static_cast<std::size_t>(j)] = t;
      const int e = s[static_cast<std::size_t>(t)].exp;
      right(j - 1, e > 0 ? t - 1 : t, sign * e);
    }
  }

  // Left-lex: fill idx from the front; the previous entry is prev.
  void left(std::size_t j, int prev, int sign) {
    if (j == idx.size()) {
      fn(idx, sign);
      return;
    }
    const int n = static_cast<int>(s.size());
    for (int u = j == 0 ? 0 : prev; u < n; ++u) {
      const int e = s[static_cast<std::size_t>(u)].exp;
      if (j > 0 && e > 0 && u == prev) continue;
      idx[j] = u;
      left(j + 1, u, sign * e);
    }
  }
};

}  // namespace

void for_each_admissible(std::span<const Syllable> syllables, int k, SequenceOrder order,
                         const std::function<void(std::span<const int>, int)>& fn) {
  if (k < 1) throw PreconditionError("James-Hopf index k must be >= 1");
  Enumerator e{syllables, fn, std::vector<int>(static_cast<std::size_t>(k))};
  if (syllables.empty()) return;
  if (order == SequenceOrder::right_lex)
    e.right(k - 1, static_cast<int>(syllables.size()) - 1, 1);
  else
    e.left(0, 0, 1);
}

std::vector<AdmissibleSequence> admissible_sequences(const Word& w, int k, SequenceOrder order) {
  std::vector<AdmissibleSequence> out;
  for_each_admissible(w.syllables(), k, order, [&](std::span<const int> idx, int sign) {
    AdmissibleSequence a;
    a.sign = sign;
    for (int i : idx) a.indices.push_back(i + 1);
    out.push_back(std::move(a));
  });
  return out;
}

Word james_hopf(const AlphabetPtr& alphabet, std::span<const Syllable> raw, int k, SequenceOrder order) {
  if (alphabet->is_smash()) throw PreconditionError("james_hopf expects a word over a plain alphabet");
  auto target = Alphabet::smash(alphabet, k);
  std::vector<Syllable> out;
  std::vector<Letter> coords(static_cast<std::size_t>(k));
  for_each_admissible(raw, k, order, [&](std::span<const int> idx, int sign) {
    for (std::size_t j = 0; j < idx.size(); ++j) coords[j] = raw[static_cast<std::size_t>(idx[j])].letter;
    out.push_back({target->from_coords(coords), sign});
  });
  return Word(target, out);
}

Word james_hopf(const Word& w, int k, SequenceOrder order) {
  return james_hopf(w.alphabet(), w.syllables(), k, order);
}

TruncatedSeries hopf_magnus(const Word& w, int k, int bound, const CoefficientRing& ring, SequenceOrder order) {
  auto target = Alphabet::smash(w.alphabet(), k);
  auto s = TruncatedSeries::one(ring, target, bound);
  const auto& syl = w.syllables();
  std::vector<Letter> coords(static_cast<std::size_t>(k));
  for_each_admissible(syl, k, order, [&](std::span<const int> idx, int sign) {
    for (std::size_t j = 0; j < idx.size(); ++j) coords[j] = syl[static_cast<std::size_t>(idx[j])].letter;
    s.mul_right_unit(target->from_coords(coords), sign);
  });
  return s;
}

RingElement james_hopf_linear(const RingElement& a, int k, SequenceOrder order) {
  RingElement out(a.ring(), Alphabet::smash(a.alphabet(), k));
  for (const auto& [w, c] : a.terms()) out.add_term(james_hopf(w, k, order), c);
  return out;
}

SmashVector abelianized_hopf(const AlphabetPtr& alphabet, std::span<const Syllable> raw, int k) {
  auto target = Alphabet::smash(alphabet, k);
  SmashVector acc;
  std::vector<Letter> coords(static_cast<std::size_t>(k));
  for_each_admissible(raw, k, SequenceOrder::right_lex, [&](std::span<const int> idx, int sign) {
    for (std::size_t j = 0; j < idx.size(); ++j) coords[j] = raw[static_cast<std::size_t>(idx[j])].letter;
    acc[target->from_coords(coords)] += sign;
  });
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return acc;
}

SmashVector abelianized_hopf(const Word& w, int k) { return abelianized_hopf(w.alphabet(), w.syllables(), k); }

SmashVector abelianized(const Word& w) {
  SmashVector out;
  for (const auto& [l, c] : abelianize(w)) out[l] = c;
  return out;
}

HomogeneousComponent as_component(const SmashVector& v, const AlphabetPtr& base, int k) {
  std::size_t width = 1;
  for (int i = 0; i < k; ++i) width *= base->size();
  HomogeneousComponent h{CoefficientRing::integers(), base, k, std::vector<Coeff>(width, 0)};
  for (const auto& [l, c] : v) h.coeffs.at(l) = c;
  return h;
}

std::string to_string(const SmashVector& v, const Alphabet& smash_alphabet) {
  std::string out = "{";
  for (const auto& [l, c] : v) {
    if (out.size() > 1) out += ", ";
    out += smash_alphabet.name(l) + ":" + (c > 0 ? "+" : "") + std::to_string(c);
  }
  return out + "}";
}

}  // namespace jhkit
