#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "jhkit/coeff.hpp"
#include "jhkit/words.hpp"

namespace jhkit {

/// A finite linear combination of words with coefficients in Z or Z/p.
/// Zero coefficients are never stored.
class RingElement {
 public:
  using Terms = std::map<Word, Coeff, ShortLex>;

  RingElement(CoefficientRing ring, AlphabetPtr alphabet);

  static RingElement zero(CoefficientRing ring, AlphabetPtr alphabet);
  static RingElement one(CoefficientRing ring, AlphabetPtr alphabet);
  static RingElement of(CoefficientRing ring, const Word& w, Coeff c = 1);
  /// w - 1
  static RingElement minus_one(CoefficientRing ring, const Word& w);

  const CoefficientRing& ring() const noexcept { return ring_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coefficient(const Word& w) const;

  void add_term(const Word& w, Coeff c);

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator*(const RingElement& other) const;
  RingElement scale(Coeff c) const;
  RingElement operator-() const { return scale(-1); }

  /// Reinterprets the coefficients in another ring (Z to Z/p reduction).
  RingElement change_ring(CoefficientRing ring) const;

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_ == b.ring_ && same_alphabet(a.alphabet_, b.alphabet_) && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const RingElement& other, const char* op) const;

  CoefficientRing ring_;
  AlphabetPtr alphabet_;
  Terms terms_;
};

Coeff augmentation(const RingElement& a);

/// Fox derivative ∂_i. Throws UnknownLetter when i is outside the alphabet.
RingElement fox_derivative(Letter i, const RingElement& a);
RingElement fox_derivative(Letter i, const Word& w, const CoefficientRing& ring);

enum class FoxAlgorithm { recursive, closed_form };

/// ε∂_{i1}∘…∘∂_{ik}(w); ∂_{ik} is applied first. The empty index gives the
/// augmentation.
Coeff higher_fox_aug(std::span<const Letter> index, const Word& w, const CoefficientRing& ring,
                     FoxAlgorithm algorithm = FoxAlgorithm::closed_form);
Coeff higher_fox_aug(std::span<const Letter> index, const RingElement& a,
                     FoxAlgorithm algorithm = FoxAlgorithm::closed_form);

/// Membership in Δ^n (Δ_p^n over Z/p): every augmented derivative of order
/// 0..n-1 vanishes.
bool aug_ideal_member(const RingElement& a, int n);

/// Calls fn(index) for every multi-index of the given order over an alphabet
/// of the given size, in lexicographic order.
template <class Fn>
void for_each_multi_index(std::size_t alphabet_size, int order, Fn&& fn) {
  std::vector<Letter> idx(static_cast<std::size_t>(order), 0);
  if (order > 0 && alphabet_size == 0) return;
  for (;;) {
    fn(std::span<const Letter>(idx));
    int pos = order - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == alphabet_size) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
  }
}

/// Text form `c1*w1 + c2*w2 - ...`; a bare integer is a multiple of the
/// identity. Output omits unit coefficients and lists words in shortlex order.
RingElement parse_ring_element(const CoefficientRing& ring, const AlphabetPtr& alphabet, std::string_view text);
std::string to_string(const RingElement& a);

}  // namespace jhkit
