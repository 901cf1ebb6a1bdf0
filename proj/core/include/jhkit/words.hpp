#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jhkit/permutation.hpp"

namespace jhkit {

using Letter = std::uint32_t;

/// One occurrence x^{+1} or x^{-1}. Higher powers are repeated syllables.
struct Syllable {
  Letter letter = 0;
  int exp = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A finite pointed set. The basepoint "*" is implicit and never a letter.
///
/// A smash alphabet X^{∧k} has the k-tuples of letters of a plain alphabet X
/// as its letters; tuples are indexed in mixed radix with the first
/// coordinate most significant, so letter order is coordinate-wise
/// lexicographic. X^{∧1} is X itself.
class Alphabet {
  struct Private {};

 public:
  Alphabet(Private, std::vector<std::string> names);
  Alphabet(Private, AlphabetPtr base, int arity);

  /// Throws std::invalid_argument on duplicate, empty, or malformed names.
  static AlphabetPtr make(std::vector<std::string> names);
  /// "x,y,z"
  static AlphabetPtr parse(std::string_view comma_separated);
  static AlphabetPtr smash(const AlphabetPtr& base, int arity);

  std::size_t size() const noexcept { return size_; }
  int arity() const noexcept { return arity_; }
  bool is_smash() const noexcept { return base_ != nullptr; }
  /// The plain alphabet a smash alphabet is built from; null for plain ones.
  const AlphabetPtr& base() const noexcept { return base_; }
  /// Names of a plain alphabet (empty for smash alphabets).
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::string name(Letter l) const;
  std::optional<Letter> find(std::string_view name) const;
  bool contains(Letter l) const noexcept { return l < size_; }

  /// Coordinates of a letter in the underlying plain alphabet.
  std::vector<Letter> coords(Letter l) const;
  Letter from_coords(std::span<const Letter> coords) const;

  bool same_as(const Alphabet& other) const noexcept;

 private:
  std::vector<std::string> names_;
  AlphabetPtr base_;
  int arity_ = 1;
  std::size_t size_ = 0;
};

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) noexcept;
/// Throws AlphabetMismatch.
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* op);

/// Free reduction of a syllable sequence (stack based).
std::vector<Syllable> free_reduce(std::span<const Syllable> raw);

/// A freely reduced word in the free group F[X]; the empty word is the
/// identity. Values are immutable.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);
  /// Freely reduces the given syllables.
  Word(AlphabetPtr alphabet, std::span<const Syllable> syllables);

  static Word letter(AlphabetPtr alphabet, Letter l, int exp = 1);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  bool empty() const noexcept { return syllables_.empty(); }

  Word inverse() const;
  Word operator*(const Word& other) const;
  Word pow(int k) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.syllables_ == b.syllables_ && same_alphabet(a.alphabet_, b.alphabet_);
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Syllable> syllables_;
};

/// Shortlex order on syllables (length first); alphabets are not compared.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const noexcept;
};

/// Normal form of a raw (name, ±1) sequence; basepoint syllables are deleted
/// before reduction. Throws UnknownLetter.
Word reduce(const AlphabetPtr& alphabet, std::span<const std::pair<std::string, int>> raw);

Word multiply(const Word& u, const Word& v);
Word inverse(const Word& u);
/// [u,v] = u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);
/// Left-normed [[...[w1,w2],...],wn]; a single entry is returned as is.
Word left_normed_commutator(std::span<const Word> entries);

/// Word text grammar: whitespace separated tokens `name`, `name^-1` or
/// `name^k` (k a nonzero integer); smash letters are written `a/\b`; `*`
/// is the basepoint and `1` the identity.
Word parse_word(const AlphabetPtr& alphabet, std::string_view text);
/// Runs of equal syllables are printed as powers; the identity prints as "1".
std::string to_string(const Word& w);

/// Exponent sum per letter (the image in the abelianization).
std::vector<std::pair<Letter, std::int64_t>> abelianize(const Word& w);

/// A pointed map between alphabets; nullopt means the basepoint.
class LetterMap {
 public:
  LetterMap(AlphabetPtr source, AlphabetPtr target, std::vector<std::optional<Letter>> image);

  static LetterMap identity(const AlphabetPtr& alphabet);

  const AlphabetPtr& source() const noexcept { return source_; }
  const AlphabetPtr& target() const noexcept { return target_; }
  std::optional<Letter> operator()(Letter l) const { return image_.at(l); }
  bool injective() const;

  /// The induced map f^{∧k} between smash alphabets; a tuple goes to the
  /// basepoint as soon as one coordinate does.
  LetterMap smash_power(int k) const;
  /// (*this) ∘ inner
  LetterMap after(const LetterMap& inner) const;

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<std::optional<Letter>> image_;
};

/// The induced homomorphism F[f]; letters sent to the basepoint vanish.
Word apply_letter_map(const LetterMap& f, const Word& w);

/// Iterated reduced diagonal X^{∧k} → X^{∧l} for a monotone surjection
/// delta: [l] → [k] given by its 1-based values; (a_1..a_k) ↦ (a_δ(1)..a_δ(l)).
LetterMap smash_map_diagonal(const AlphabetPtr& base, int k, int l, std::span<const int> delta);
bool is_monotone_surjection(std::span<const int> delta, int k);

/// Factor permutation of X^{∧k}: (a_1..a_k) ↦ (a_σ⁻¹(1)..a_σ⁻¹(k)).
LetterMap smash_map_permute(const AlphabetPtr& base, int k, const Permutation& sigma);

/// Whitehead product W_n: F[X^{∧n}] → F[X], the homomorphism sending
/// x_1∧…∧x_n to [[x_1,x_2],…,x_n]. Throws when w is not over an arity-n
/// alphabet.
Word whitehead(const Word& w, int n);

}  // namespace jhkit
