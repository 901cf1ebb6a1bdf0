#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "jhkit/jameshopf.hpp"
#include "jhkit/tensorcoalg.hpp"

namespace jhkit {

struct VerifyConfig {
  std::uint64_t seed = 0;
  SequenceOrder order = SequenceOrder::right_lex;
  std::size_t max_reported = 10;  // counterexamples kept per suite
};

struct SuiteResult {
  std::string name;
  std::string summary;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> counterexamples;  // replayable command lines
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const noexcept { return failed == 0 && checks > 0; }
};

/// jhm h2 fox foxthm jhlcs pattern whitehead collection hopfalg primitives
/// generators realization idempotent tower, in acceptance order.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, const VerifyConfig& config = {});

/// All reduced words of length <= max_length with unit exponents.
std::vector<Word> all_reduced_words(const AlphabetPtr& alphabet, int max_length);
Word random_word(const AlphabetPtr& alphabet, int max_length, std::mt19937_64& rng);
/// Convolution product of 1..max_factors generator endos g_{k,σ}^{±1}, k <= max_k.
GradedCoalgEndo random_generator_product(const TensorAmbient& amb, int max_k, int max_factors, std::mt19937_64& rng);

}  // namespace jhkit
