#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jhkit/filtration.hpp"
#include "jhkit/jameshopf.hpp"
#include "jhkit/permutation.hpp"
#include "jhkit/tensorcoalg.hpp"
#include "jhkit/words.hpp"

namespace jhkit {

/// W_l ∘ F[σ] ∘ F[Δ̄_δ] ∘ H_k with δ: [l] → [k] monotone onto (1-based
/// values) and σ a permutation of l factors.
struct CohenGenerator {
  int k = 1;
  int l = 1;
  std::vector<int> delta{1};
  Permutation sigma = Permutation::identity(1);

  /// Throws PreconditionError on a malformed descriptor.
  void validate() const;
  static CohenGenerator make(int k, int l, std::vector<int> delta, Permutation sigma);
  /// (k, k, id, σ)
  static CohenGenerator plain(int k, Permutation sigma);
  friend bool operator==(const CohenGenerator&, const CohenGenerator&) = default;
};

/// A pointwise product of generators and their inverses; the empty word is
/// the constant map to the identity.
struct CohenWord {
  struct Factor {
    CohenGenerator generator;
    int exponent = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
  };
  std::vector<Factor> factors;

  CohenWord inverse() const;
  friend CohenWord operator*(const CohenWord& a, const CohenWord& b);
  friend bool operator==(const CohenWord&, const CohenWord&) = default;
};

Word eval_generator(const CohenGenerator& g, const Word& w, SequenceOrder order = SequenceOrder::right_lex);
Word eval(const CohenWord& cw, const Word& w, SequenceOrder order = SequenceOrder::right_lex);

/// The action on tower level N (modulo γ_N, or γ_N^{[p]} for p > 0).
/// Factors with l >= N land in γ_N and are skipped.
TruncatedUnit eval_mod(std::span<const CohenWord::Factor> factors, const Word& w, int p, int level,
                       SequenceOrder order = SequenceOrder::right_lex);
TruncatedUnit eval_mod(const CohenWord& cw, const Word& w, int p, int level,
                       SequenceOrder order = SequenceOrder::right_lex);

/// The associated graded endomorphism of T(V) induced by cw: the basis
/// element x_{i_1}…x_{i_n} is read as (x_{i_1}-1)…(x_{i_n}-1) in the group
/// ring. Throws std::logic_error if the result is not a coalgebra map.
GradedCoalgEndo induced_E0(const CohenWord& cw, const TensorAmbient& amb,
                           SequenceOrder order = SequenceOrder::right_lex);

/// "(k,l,delta=1 1 2,sigma=(1 2))^+1 ; (1,1)^-1". delta defaults to the
/// identity (k = l only), sigma to (), the exponent to +1.
CohenWord parse_cohen_word(std::string_view text);
std::string to_string(const CohenGenerator& g);
std::string to_string(const CohenWord& cw);

/// Uniform over k <= l <= max_l, monotone surjections and permutations.
CohenGenerator random_generator(std::mt19937_64& rng, int max_l);
CohenWord random_cohen_word(std::mt19937_64& rng, int max_l, int max_factors);

}  // namespace jhkit
