#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "jhkit/jameshopf.hpp"
#include "jhkit/series.hpp"
#include "jhkit/words.hpp"

namespace jhkit {

/// γ_n (p = 0) or γ_n^{[p]} on F[X^{∧m}], re-indexed by ceil(n/m).
struct FiltrationSpec {
  int p = 0;
  int weight = 1;
  int smash_arity = 1;

  /// ceil(weight / smash_arity); 1 when weight <= smash_arity.
  int threshold() const;
  CoefficientRing ring() const;
  void validate() const;
};

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct MembershipResult {
  Verdict verdict = Verdict::unknown;
  Valuation valuation;
  int threshold = 0;
};

/// Decides w ∈ γ_t (t the threshold) by the valuation of μ(w) - 1 in the
/// filtration's coefficient ring, truncated at D. Throws PreconditionError when D < t.
MembershipResult gamma_member(const Word& w, const FiltrationSpec& spec, int D);

/// Seeded samples from the filtration on F[X^{∧m}] (X = base): products of one
/// or two left-normed commutators of exactly t arguments, each argument a
/// random word of length 1 or 2; for p > 0 also p^j-th powers of i-fold
/// commutators with i p^j >= t. Every sample is certified before returning.
std::vector<Word> sample_gamma(const FiltrationSpec& spec, const AlphabetPtr& base, std::mt19937_64& rng,
                               std::size_t count);

/// H_m(w) ∈ γ^w_n: w must be certified in γ_n (γ_n^{[p]}) or
/// PreconditionError is thrown.
bool verify_jh_filtration(const Word& w, const FiltrationSpec& spec,
                          SequenceOrder order = SequenceOrder::right_lex);

/// W_m(v) ∈ γ_n for v certified in the weighted filtration of F[X^{∧m}].
bool verify_whitehead_filtration(const Word& v, const FiltrationSpec& spec);

/// Data for the augmented derivative ε∂_{J_i..J_1} Z H_n(Π_t (y_t^{ε_t} - 1)).
/// Multi-indices are 1-based letter numbers of y_1..y_m, listed as they
/// appear in the derivative (J_i first).
struct PatternInput {
  int n = 1;
  std::vector<int> signs;
  std::vector<std::vector<int>> tuple;
};

/// Direct evaluation of the augmented derivative.
Coeff polynomiality_pattern(const PatternInput& in, SequenceOrder order = SequenceOrder::right_lex);
/// Number of distinct letters used by the multi-indices.
int pattern_letter_count(const PatternInput& in);
/// Whether the tuple survives the admissibility and ordering restrictions
/// (each J admissible in y_1..y_m, positions in H_n non-decreasing, equal
/// neighbours only for negative J).
bool pattern_admissible(const PatternInput& in, SequenceOrder order = SequenceOrder::right_lex);
/// 0 unless N = m and the tuple is admissible; then ε_{J_i}…ε_{J_1}.
Coeff polynomiality_closed_form(const PatternInput& in, SequenceOrder order = SequenceOrder::right_lex);
Coeff pattern_sign(const PatternInput& in);

/// The image of a word in (Z or Z/p)⟨⟨X⟩⟩ modulo degrees >= level.
struct TruncatedUnit {
  TruncatedSeries series;
  int level;
  friend bool operator==(const TruncatedUnit& a, const TruncatedUnit& b) {
    return a.level == b.level && a.series == b.series;
  }
};

TruncatedUnit unit_embed(const Word& w, int p, int level);
TruncatedUnit unit_multiply(const TruncatedUnit& a, const TruncatedUnit& b);
bool unit_equal(const TruncatedUnit& a, const TruncatedUnit& b);
/// Passes to a lower tower level.
TruncatedUnit unit_retruncate(const TruncatedUnit& u, int level);
std::string to_string(const TruncatedUnit& u);

}  // namespace jhkit
