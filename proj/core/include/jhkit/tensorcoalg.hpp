#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jhkit/linalg.hpp"
#include "jhkit/permutation.hpp"
#include "jhkit/words.hpp"

namespace jhkit {

/// T(V) over Z/p truncated at degree d; V has the letters of `alphabet` as
/// basis. T_n has the length-n monomials as basis, indexed in mixed radix
/// (first letter most significant), so T_i ⊗ T_j is identified with T_{i+j}
/// by concatenation.
struct TensorAmbient {
  std::uint32_t p = 2;
  AlphabetPtr alphabet;
  int bound = 0;

  std::size_t letters() const noexcept { return alphabet->size(); }
  std::size_t dim(int n) const;
  void validate() const;
  friend bool operator==(const TensorAmbient& a, const TensorAmbient& b) {
    return a.p == b.p && a.bound == b.bound && same_alphabet(a.alphabet, b.alphabet);
  }
};

/// ψ on T_n: a (n+1)·dim(n) × dim(n) matrix whose block i is the
/// T_i ⊗ T_{n-i} component (rows indexed like T_n).
ModpMatrix coproduct_matrix(const TensorAmbient& amb, int n);
/// Block i of the coproduct, a dim(n) square matrix.
ModpMatrix coproduct_block(const TensorAmbient& amb, int n, int i);
ModpMatrix antipode_matrix(const TensorAmbient& amb, int n);

bool check_coassociativity(const TensorAmbient& amb, int n);
bool check_counit(const TensorAmbient& amb, int n);

/// A degree-preserving linear self-map of T, one square block per degree.
struct GradedCoalgEndo {
  TensorAmbient ambient;
  std::vector<ModpMatrix> blocks;  // blocks[n] acts on T_n, n = 0..d

  friend bool operator==(const GradedCoalgEndo& a, const GradedCoalgEndo& b) {
    return a.ambient == b.ambient && a.blocks == b.blocks;
  }
};

GradedCoalgEndo identity_endo(const TensorAmbient& amb);
/// η∘ε, the unit of the convolution monoid.
GradedCoalgEndo unit_endo(const TensorAmbient& amb);
GradedCoalgEndo antipode_endo(const TensorAmbient& amb);

/// m ∘ (f⊗g) ∘ ψ.
GradedCoalgEndo convolution(const GradedCoalgEndo& f, const GradedCoalgEndo& g);
/// Degree-by-degree inverse; requires f_0 = 1.
GradedCoalgEndo convolution_inverse(const GradedCoalgEndo& f);
/// f^{∗e}; negative exponents use the inverse.
GradedCoalgEndo convolution_power(const GradedCoalgEndo& f, std::int64_t e);
/// f ∘ g.
GradedCoalgEndo compose(const GradedCoalgEndo& f, const GradedCoalgEndo& g);

/// ψ∘f = (f⊗f)∘ψ in every degree and f_0 = 1.
bool is_coalgebra_map(const GradedCoalgEndo& f);

/// A graded map T(V) → T(W) given by blocks between chosen degrees. For the
/// maps used here the source and target blocks have equal dimension.
struct GradedCoalgMap {
  struct Block {
    int source_degree;
    int target_degree;
    ModpMatrix matrix;
  };
  TensorAmbient source;
  AlphabetPtr target_alphabet;
  std::vector<Block> blocks;

  /// nullptr when the source degree has no block (zero map).
  const Block* block_from(int source_degree) const;
};

/// H_k^alg: T_n(V) → T_{n/k}(V^{⊗k}) for k | n, from the associated graded of
/// Z H_k on (x_1 - 1)…(x_n - 1). Target monomials are indexed like T_n(V).
GradedCoalgMap alg_james_hopf(int k, const TensorAmbient& amb);
/// Same map computed directly on the (possibly repeated) letters; used as a
/// cross-check of the naturality route.
GradedCoalgMap alg_james_hopf_direct(int k, const TensorAmbient& amb);
/// Restriction to J_k: zero on T_j for 0 < j < k and the identity on T_k.
bool check_universal_property(const GradedCoalgMap& h, int k);

/// β_k^T: T(V^{⊗k}) → T(V), generator ↦ left-normed ring commutator.
GradedCoalgMap beta_T(int k, const TensorAmbient& amb);

/// β_k^T ∘ T(σ) ∘ H_k^alg.
GradedCoalgEndo generator_endo(int k, const Permutation& sigma, const TensorAmbient& amb);

/// f = F_1 ∗ F_2 ∗ … ∗ F_d with F_k = ∗_σ g_{k,σ}^{∗c_σ} (σ in lexicographic
/// order).
struct GeneratorFactor {
  int k;
  std::vector<std::pair<Permutation, std::uint32_t>> terms;  // nonzero c_σ only
};

std::vector<GeneratorFactor> factor_endo(const GradedCoalgEndo& f);
GradedCoalgEndo reconstruct(const std::vector<GeneratorFactor>& factors, const TensorAmbient& amb);
std::string to_string(const std::vector<GeneratorFactor>& factors);

/// Columns span the primitives of T_n.
ModpMatrix primitives(const TensorAmbient& amb, int n);
/// Σ_{m p^i = n} W(m) for |X| letters.
long long restricted_witt_dimension(int letters, int p, int n);

struct IdempotentResult {
  int power = 1;  // least N with f^N idempotent
  int index = 1;  // the power sequence is periodic from here on
  int period = 1;
  GradedCoalgEndo idempotent;
  struct Row {
    int degree;
    std::size_t rank;
    std::size_t nullity;
    std::size_t dim;
  };
  std::vector<Row> table;
};

/// Iterates f under composition until the powers cycle; throws
/// PreconditionError (naming the bound) when no cycle appears within it.
IdempotentResult idempotent_power(const GradedCoalgEndo& f, int max_power = 100000);

/// {p, d, alphabet, matrices}: per-degree dense row-major residues.
std::string endo_to_json(const GradedCoalgEndo& f);
GradedCoalgEndo endo_from_json(const std::string& text);

}  // namespace jhkit
