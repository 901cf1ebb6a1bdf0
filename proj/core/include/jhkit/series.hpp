#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jhkit/coeff.hpp"
#include "jhkit/groupring.hpp"
#include "jhkit/words.hpp"

namespace jhkit {

/// Noncommutative power series in the letters of an alphabet, truncated
/// above degree `bound`. Degree d coefficients are stored densely; a
/// monomial x_{i1}..x_{id} sits at index i1*a^{d-1} + ... + id.
class TruncatedSeries {
 public:
  /// Dense storage limit (entries summed over degrees).
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 26;

  TruncatedSeries(CoefficientRing ring, AlphabetPtr alphabet, int bound);

  static TruncatedSeries one(CoefficientRing ring, AlphabetPtr alphabet, int bound);

  const CoefficientRing& ring() const noexcept { return ring_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  int bound() const noexcept { return bound_; }

  std::vector<Coeff>& degree(int d) { return coeffs_.at(static_cast<std::size_t>(d)); }
  const std::vector<Coeff>& degree(int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }

  Coeff coefficient(std::span<const Letter> monomial) const;
  void set_coefficient(std::span<const Letter> monomial, Coeff c);

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scale(Coeff c) const;

  /// Right multiplication by (1+x)^{±1}, in place.
  void mul_right_unit(Letter x, int exp);

  /// Same series with a smaller bound.
  TruncatedSeries truncate(int bound) const;
  TruncatedSeries change_ring(CoefficientRing ring) const;
  bool is_zero() const noexcept;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  void require_compatible(const TruncatedSeries& o, const char* op) const;

  CoefficientRing ring_;
  AlphabetPtr alphabet_;
  int bound_;
  std::vector<std::vector<Coeff>> coeffs_;
};

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b);
/// Two-sided inverse modulo degrees above the bound; constant term must be ±1.
TruncatedSeries series_invert(const TruncatedSeries& a);

/// μ(w): each syllable x^{±1} becomes (1+x)^{±1}.
TruncatedSeries magnus(const Word& w, int bound, const CoefficientRing& ring);
TruncatedSeries magnus_linear(const RingElement& a, int bound);

/// Least degree with a nonzero coefficient. When the truncated series is zero
/// only the lower bound bound+1 is known and `exact` is false.
struct Valuation {
  int degree = 0;
  bool exact = true;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

Valuation valuation(const TruncatedSeries& a);
/// "2" or ">= 5"
std::string to_string(const Valuation& v);

/// A homogeneous degree-n slice, indexed like TruncatedSeries::degree(n).
struct HomogeneousComponent {
  CoefficientRing ring = CoefficientRing::integers();
  AlphabetPtr alphabet;
  int degree = 0;
  std::vector<Coeff> coeffs;

  friend bool operator==(const HomogeneousComponent& a, const HomogeneousComponent& b) {
    return a.ring == b.ring && same_alphabet(a.alphabet, b.alphabet) && a.degree == b.degree && a.coeffs == b.coeffs;
  }
};

/// Throws PreconditionError when k exceeds the bound.
HomogeneousComponent pi_k(const TruncatedSeries& a, int k);

/// Index of a monomial in a degree slice, and back.
std::size_t monomial_index(std::span<const Letter> monomial, std::size_t alphabet_size);
std::vector<Letter> monomial_letters(std::size_t index, int degree, std::size_t alphabet_size);

/// Dynkin-type criterion D(h) = n h for the left bracketing operator D.
/// Over Z/p it requires n < p.
bool is_lie_element(const HomogeneousComponent& h);
/// The left bracketing operator applied to a homogeneous component.
HomogeneousComponent left_bracketing(const HomogeneousComponent& h);

/// `1 - x + 2 * x.y`; ±1 coefficients are omitted, monomials are dot-joined.
std::string to_string(const TruncatedSeries& s);
std::string to_string(const HomogeneousComponent& h);
/// Reads the text form back; the bound must be given.
TruncatedSeries parse_series(const CoefficientRing& ring, const AlphabetPtr& alphabet, int bound,
                             std::string_view text);

}  // namespace jhkit
