#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "jhkit/jameshopf.hpp"
#include "jhkit/words.hpp"

namespace jhkit {

/// A symbol of the free product F[A] * F[B] after collection: the left-normed
/// commutator [b, s_1, ..., s_j] of a B-letter with A-words s_i. Letters of
/// both A and B are indexed by the underlying alphabet X (a_x, b_x). With no
/// slots the symbol is the letter b itself.
struct CommSymbol {
  Letter b = 0;
  std::vector<std::vector<Syllable>> slots;

  int weight() const noexcept { return 1 + static_cast<int>(slots.size()); }
  /// All slots are single positive A-letters.
  bool is_basic() const noexcept;

  friend bool operator==(const CommSymbol&, const CommSymbol&) = default;
  friend auto operator<=>(const CommSymbol&, const CommSymbol&) = default;
};

struct MixedSyllable {
  bool is_a = false;
  Letter a = 0;  // when is_a
  CommSymbol sym;  // otherwise
  int exp = 1;

  bool same_symbol(const MixedSyllable& o) const noexcept {
    return is_a == o.is_a && (is_a ? a == o.a : sym == o.sym);
  }
  friend bool operator==(const MixedSyllable&, const MixedSyllable&) = default;
};

/// A freely reduced word over A ⊔ B ⊔ {commutator symbols}.
class MixedWord {
 public:
  explicit MixedWord(AlphabetPtr base);

  const AlphabetPtr& base() const noexcept { return base_; }
  const std::vector<MixedSyllable>& syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  bool empty() const noexcept { return syllables_.empty(); }

  /// Appends with free reduction against the last syllable.
  void push(MixedSyllable s);
  void append(const MixedWord& w);
  MixedWord inverse() const;

  friend bool operator==(const MixedWord&, const MixedWord&) = default;

 private:
  AlphabetPtr base_;
  std::vector<MixedSyllable> syllables_;
};

/// x ↦ a_x b_x, x^-1 ↦ b_x^-1 a_x^-1.
MixedWord embed_sum(const Word& w);

struct CollectResult {
  Word collected;  // the A-projection, as a word over X
  MixedWord remainder;  // B-letters and basic commutators [b, a, ..., a]
  std::size_t discarded = 0;  // symbol occurrences dropped above the cutoff
};

/// Moves every A-letter to the front (left to right) using
///   c a = a c [c,a],  c^-1 a = a [c,a]^-1 c^-1
/// for a = a_x^{±1}; commutators with an inverse slot are expanded through
///   [c,a^-1] = [[c,a],a^-1]^-1 [c,a]^-1.
/// Symbols of weight above the cutoff are dropped.
CollectResult collect_once(const MixedWord& w, int cutoff);

/// Rewrites every commutator [p, w] with a word slot into basic symbols via
///   [p, a w'] = [p,w'] [p,a] [[p,a],w'].
MixedWord tietze_expand(const MixedWord& remainder, int cutoff, std::size_t* discarded = nullptr);

/// Single retraction w ↦ Π_t (b_t [b_t, r_t])^{e_t}, r_t the A-suffix after
/// the t-th B-letter. Exact (no cutoff); slots are arbitrary A-words.
MixedWord schreier_remainder(const MixedWord& w);

/// The alphabet {a_x..., b_x...} and the expansion of a mixed word into it.
AlphabetPtr free_product_alphabet(const AlphabetPtr& base);
Word to_free_word(const MixedWord& w, const AlphabetPtr& ab_alphabet);
Word to_free_word(const Word& collected, const AlphabetPtr& ab_alphabet);

/// H_k through one collection pass; positions are tagged with distinct
/// auxiliary letters, weight-k symbols [b_t, a_s1, ..., a_s(k-1)] are sorted
/// by the position tuple (t, s1, ...) and relabeled x_t ∧ x_s1 ∧ ....
Word hopf_via_collection(const Word& w, int k, SequenceOrder order = SequenceOrder::right_lex);

std::string to_string(const CommSymbol& c, const Alphabet& base);
std::string to_string(const MixedWord& w);

/// One element of a Hall set: a leaf letter or a bracket of two earlier
/// elements (indices into the list returned by hall_basis).
struct HallElement {
  int weight = 1;
  Letter leaf = 0;
  int left = -1;
  int right = -1;
  bool is_leaf() const noexcept { return left < 0; }
};

/// Hall set up to max_weight. Elements are ranked by weight, and within a
/// weight earlier elements rank higher; [u,v] is basic when u > v and, for
/// u = [u1,u2], u2 <= v.
std::vector<HallElement> hall_basis(const AlphabetPtr& alphabet, int max_weight);
std::string hall_to_string(const std::vector<HallElement>& basis, std::size_t index, const Alphabet& alphabet);
/// The group commutator word of a Hall element (left and right evaluated recursively).
Word hall_to_word(const std::vector<HallElement>& basis, std::size_t index, const AlphabetPtr& alphabet);
/// Witt's count (1/n) Σ_{d|n} μ(d) m^{n/d}.
long long witt_dimension(int m, int n);

}  // namespace jhkit
