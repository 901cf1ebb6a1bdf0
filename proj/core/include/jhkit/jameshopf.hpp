#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jhkit/groupring.hpp"
#include "jhkit/series.hpp"
#include "jhkit/words.hpp"

namespace jhkit {

/// Order on equal-length index sequences. RightLex compares from the last
/// coordinate toward the first, LeftLex from the first.
enum class SequenceOrder { right_lex, left_lex };

SequenceOrder parse_sequence_order(std::string_view text);
std::string to_string(SequenceOrder order);

/// Positions (1-based) into a word's syllables with i_j <= i_{j+1} - 1 before
/// a positive syllable and i_j <= i_{j+1} before a negative one.
struct AdmissibleSequence {
  std::vector<int> indices;
  int sign = 1;
  friend bool operator==(const AdmissibleSequence&, const AdmissibleSequence&) = default;
};

/// Visits admissible sequences of length k in the given order; fn receives
/// 0-based positions and the sign product.
void for_each_admissible(std::span<const Syllable> syllables, int k, SequenceOrder order,
                         const std::function<void(std::span<const int>, int)>& fn);

std::vector<AdmissibleSequence> admissible_sequences(const Word& w, int k, SequenceOrder order = SequenceOrder::right_lex);

/// H_k(w) over X^{∧k}.
Word james_hopf(const Word& w, int k, SequenceOrder order = SequenceOrder::right_lex);
/// The formula applied verbatim to an unreduced syllable sequence.
Word james_hopf(const AlphabetPtr& alphabet, std::span<const Syllable> raw, int k,
                SequenceOrder order = SequenceOrder::right_lex);

/// μ(H_k(w)) computed while enumerating, without building the word.
TruncatedSeries hopf_magnus(const Word& w, int k, int bound, const CoefficientRing& ring,
                            SequenceOrder order = SequenceOrder::right_lex);

RingElement james_hopf_linear(const RingElement& a, int k, SequenceOrder order = SequenceOrder::right_lex);

/// Exponent sums of H_k(w) keyed by smash letter; zero entries omitted.
using SmashVector = std::map<Letter, std::int64_t>;
SmashVector abelianized_hopf(const Word& w, int k);
SmashVector abelianized_hopf(const AlphabetPtr& alphabet, std::span<const Syllable> raw, int k);
SmashVector abelianized(const Word& w);

/// Identifies x_{i1}∧…∧x_{ik} with the monomial x_{i1}…x_{ik} (same index).
HomogeneousComponent as_component(const SmashVector& v, const AlphabetPtr& base, int k);

/// `{x/\y:+1, y/\x:-1}`
std::string to_string(const SmashVector& v, const Alphabet& smash_alphabet);

}  // namespace jhkit
