#include "jhkit/tensorcoalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "jhkit/collector.hpp"
#include "jhkit/error.hpp"
#include "jhkit/jameshopf.hpp"
#include "jhkit/series.hpp"

namespace jhkit {

namespace {

std::size_t ipow(std::size_t a, int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= a;
  return r;
}

// Digits of a T_n index, most significant first.
void digits(std::size_t idx, int n, std::size_t a, std::vector<std::size_t>& out) {
  out.resize(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = idx % a;
    idx /= a;
  }
}

// For a monomial (digits) and a position mask: indices of the subword on the
// mask and on its complement.
std::pair<std::size_t, std::size_t> split(const std::vector<std::size_t>& d, unsigned mask, std::size_t a) {
  std::size_t in = 0, out = 0;
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (mask >> t & 1u)
      in = in * a + d[t];
    else
      out = out * a + d[t];
  }
  return {in, out};
}

// Columns of the block i of (f ⊗ g) ∘ ψ on T_n, as a dim(n) square matrix.
// fT and gT hold transposed blocks so that a column is a contiguous row.
ModpMatrix split_apply(const TensorAmbient& amb, const std::vector<ModpMatrix>& fT, const std::vector<ModpMatrix>& gT,
                       int n, int i, ModpMatrix* accumulate = nullptr) {
  const std::size_t a = amb.letters();
  const std::size_t dn = ipow(a, n);
  const std::uint64_t p = amb.p;
  ModpMatrix local;
  if (!accumulate) local = ModpMatrix(amb.p, dn, dn);
  ModpMatrix& out = accumulate ? *accumulate : local;
  const std::size_t width_g = ipow(a, n - i);
  std::vector<std::size_t> d;
  std::vector<std::uint64_t> col(dn);
  for (std::size_t m = 0; m < dn; ++m) {
    digits(m, n, a, d);
    std::fill(col.begin(), col.end(), 0);
    bool any = false;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != i) continue;
      auto [s, c] = split(d, mask, a);
      const auto& F = fT[static_cast<std::size_t>(i)];
      const auto& G = gT[static_cast<std::size_t>(n - i)];
      const auto* fc = &F.data()[s * F.cols()];
      const auto* gc = &G.data()[c * G.cols()];
      for (std::size_t u = 0; u < F.cols(); ++u) {
        if (!fc[u]) continue;
        const std::uint64_t fu = fc[u];
        std::uint64_t* dst = &col[u * width_g];
        for (std::size_t v = 0; v < width_g; ++v)
          if (gc[v]) {
            dst[v] = (dst[v] + fu * gc[v]) % p;
            any = true;
          }
      }
    }
    if (!any) continue;
    for (std::size_t r = 0; r < dn; ++r)
      if (col[r]) out.add_to(r, m, col[r]);
  }
  return local;
}

std::vector<ModpMatrix> transposed(const GradedCoalgEndo& f) {
  std::vector<ModpMatrix> out;
  for (const auto& b : f.blocks) out.push_back(b.transpose());
  return out;
}

void require_same_ambient(const GradedCoalgEndo& f, const GradedCoalgEndo& g, const char* op) {
  if (!(f.ambient == g.ambient)) throw AlphabetMismatch(std::string(op) + ": endomorphisms over different ambients");
}

}  // namespace

std::size_t TensorAmbient::dim(int n) const { return ipow(letters(), n); }

void TensorAmbient::validate() const {
  if (!alphabet) throw std::invalid_argument("tensor ambient needs an alphabet");
  if (alphabet->is_smash()) throw PreconditionError("tensor ambient needs a plain alphabet");
  if (!is_prime(p)) throw PreconditionError("tensor ambient modulus " + std::to_string(p) + " is not prime");
  if (bound < 0 || bound > 16) throw PreconditionError("tensor ambient degree bound out of range");
  if (dim(bound) > (std::size_t{1} << 14)) throw PreconditionError("tensor ambient too large for dense matrices");
}

ModpMatrix coproduct_block(const TensorAmbient& amb, int n, int i) {
  if (n < 0 || n > amb.bound) throw PreconditionError("coproduct: degree " + std::to_string(n) + " exceeds bound");
  const std::size_t a = amb.letters();
  const std::size_t dn = amb.dim(n);
  const std::size_t width = ipow(a, n - i);
  ModpMatrix out(amb.p, dn, dn);
  std::vector<std::size_t> d;
  for (std::size_t m = 0; m < dn; ++m) {
    digits(m, n, a, d);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != i) continue;
      auto [s, c] = split(d, mask, a);
      out.add_to(s * width + c, m, 1);
    }
  }
  return out;
}

ModpMatrix coproduct_matrix(const TensorAmbient& amb, int n) {
  const std::size_t dn = amb.dim(n);
  ModpMatrix out(amb.p, dn * static_cast<std::size_t>(n + 1), dn);
  for (int i = 0; i <= n; ++i) {
    auto b = coproduct_block(amb, n, i);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dn; ++c) out.at(static_cast<std::size_t>(i) * dn + r, c) = b.at(r, c);
  }
  return out;
}

ModpMatrix antipode_matrix(const TensorAmbient& amb, int n) {
  if (n < 0 || n > amb.bound) throw PreconditionError("antipode: degree exceeds bound");
  const std::size_t a = amb.letters();
  const std::size_t dn = amb.dim(n);
  ModpMatrix out(amb.p, dn, dn);
  const std::uint32_t sign = n % 2 ? amb.p - 1 : 1;
  std::vector<std::size_t> d;
  for (std::size_t m = 0; m < dn; ++m) {
    digits(m, n, a, d);
    std::size_t rev = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) rev = rev * a + *it;
    out.at(rev, m) = sign % amb.p;
  }
  return out;
}

bool check_coassociativity(const TensorAmbient& amb, int n) {
  const std::size_t a = amb.letters();
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const int k = n - i - j;
      auto left = coproduct_block(amb, i + j, i).kron(ModpMatrix::identity(amb.p, ipow(a, k))) *
                  coproduct_block(amb, n, i + j);
      auto right = ModpMatrix::identity(amb.p, ipow(a, i)).kron(coproduct_block(amb, j + k, j)) *
                   coproduct_block(amb, n, i);
      if (!(left == right)) return false;
    }
  return true;
}

bool check_counit(const TensorAmbient& amb, int n) {
  auto id = ModpMatrix::identity(amb.p, amb.dim(n));
  return coproduct_block(amb, n, 0) == id && coproduct_block(amb, n, n) == id;
}

GradedCoalgEndo identity_endo(const TensorAmbient& amb) {
  amb.validate();
  GradedCoalgEndo f{amb, {}};
  for (int n = 0; n <= amb.bound; ++n) f.blocks.push_back(ModpMatrix::identity(amb.p, amb.dim(n)));
  return f;
}

GradedCoalgEndo unit_endo(const TensorAmbient& amb) {
  amb.validate();
  GradedCoalgEndo f{amb, {}};
  f.blocks.push_back(ModpMatrix::identity(amb.p, 1));
  for (int n = 1; n <= amb.bound; ++n) f.blocks.emplace_back(amb.p, amb.dim(n), amb.dim(n));
  return f;
}

GradedCoalgEndo antipode_endo(const TensorAmbient& amb) {
  amb.validate();
  GradedCoalgEndo f{amb, {}};
  for (int n = 0; n <= amb.bound; ++n) f.blocks.push_back(antipode_matrix(amb, n));
  return f;
}

GradedCoalgEndo convolution(const GradedCoalgEndo& f, const GradedCoalgEndo& g) {
  require_same_ambient(f, g, "convolution");
  const auto& amb = f.ambient;
  auto fT = transposed(f);
  auto gT = transposed(g);
  GradedCoalgEndo out{amb, {}};
  for (int n = 0; n <= amb.bound; ++n) {
    ModpMatrix acc(amb.p, amb.dim(n), amb.dim(n));
    for (int i = 0; i <= n; ++i) split_apply(amb, fT, gT, n, i, &acc);
    out.blocks.push_back(std::move(acc));
  }
  return out;
}

GradedCoalgEndo convolution_inverse(const GradedCoalgEndo& f) {
  const auto& amb = f.ambient;
  if (!(f.blocks.at(0) == ModpMatrix::identity(amb.p, 1)))
    throw PreconditionError("convolution_inverse: degree-0 component is not the identity");
  auto fT = transposed(f);
  GradedCoalgEndo g{amb, {ModpMatrix::identity(amb.p, 1)}};
  std::vector<ModpMatrix> gT{ModpMatrix::identity(amb.p, 1)};
  for (int n = 1; n <= amb.bound; ++n) {
    // f ∗ g = η∘ε in degree n: g_n = -Σ_{S ≠ ∅} f(m_S) ⊗ g(m_{S^c})
    gT.emplace_back(amb.p, amb.dim(n), amb.dim(n));
    ModpMatrix acc(amb.p, amb.dim(n), amb.dim(n));
    for (int i = 1; i <= n; ++i) split_apply(amb, fT, gT, n, i, &acc);
    auto block = acc.scale(amb.p - 1);
    gT.back() = block.transpose();
    g.blocks.push_back(std::move(block));
  }
  return g;
}

GradedCoalgEndo convolution_power(const GradedCoalgEndo& f, std::int64_t e) {
  GradedCoalgEndo base = e < 0 ? convolution_inverse(f) : f;
  GradedCoalgEndo out = unit_endo(f.ambient);
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out = convolution(out, base);
  return out;
}

GradedCoalgEndo compose(const GradedCoalgEndo& f, const GradedCoalgEndo& g) {
  require_same_ambient(f, g, "compose");
  GradedCoalgEndo out{f.ambient, {}};
  for (std::size_t n = 0; n < f.blocks.size(); ++n) out.blocks.push_back(f.blocks[n] * g.blocks[n]);
  return out;
}

bool is_coalgebra_map(const GradedCoalgEndo& f) {
  const auto& amb = f.ambient;
  if (f.blocks.size() != static_cast<std::size_t>(amb.bound + 1)) return false;
  if (!(f.blocks[0] == ModpMatrix::identity(amb.p, 1))) return false;
  auto fT = transposed(f);
  for (int n = 1; n <= amb.bound; ++n) {
    if (f.blocks[static_cast<std::size_t>(n)].rows() != amb.dim(n)) return false;
    for (int i = 0; i <= n; ++i) {
      auto lhs = coproduct_block(amb, n, i) * f.blocks[static_cast<std::size_t>(n)];
      auto rhs = split_apply(amb, fT, fT, n, i);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

const GradedCoalgMap::Block* GradedCoalgMap::block_from(int source_degree) const {
  for (const auto& b : blocks)
    if (b.source_degree == source_degree) return &b;
  return nullptr;
}

namespace {

AlphabetPtr positions_alphabet(int n) {
  std::vector<std::string> names;
  for (int t = 1; t <= n; ++t) names.push_back("y" + std::to_string(t));
  return Alphabet::make(std::move(names));
}

// Degree n/k slice of the mod-p Magnus image of Z H_k(Π_t (z_t - 1)).
HomogeneousComponent graded_hopf(const std::vector<Letter>& letters, const AlphabetPtr& alpha, int k,
                                 std::uint32_t p) {
  const auto Z = CoefficientRing::integers();
  auto P = RingElement::one(Z, alpha);
  for (Letter l : letters) P = P * RingElement::minus_one(Z, Word::letter(alpha, l));
  auto H = james_hopf_linear(P, k).change_ring(CoefficientRing::prime_field(p));
  const int q = static_cast<int>(letters.size()) / k;
  return pi_k(magnus_linear(H, q), q);
}

}  // namespace

GradedCoalgMap alg_james_hopf(int k, const TensorAmbient& amb) {
  amb.validate();
  if (k < 1 || k > std::max(amb.bound, 1)) throw PreconditionError("alg_james_hopf: k out of range");
  GradedCoalgMap h{amb, Alphabet::smash(amb.alphabet, k), {}};
  h.blocks.push_back({0, 0, ModpMatrix::identity(amb.p, 1)});
  const std::size_t a = amb.letters();
  std::vector<std::size_t> d;
  for (int n = k; n <= amb.bound; n += k) {
    auto Y = positions_alphabet(n);
    std::vector<Letter> ys;
    for (int t = 0; t < n; ++t) ys.push_back(static_cast<Letter>(t));
    auto universal = graded_hopf(ys, Y, k, amb.p);
    // Each entry names a sequence of n positions; specialize y_t ↦ x_{m_t}.
    std::vector<std::pair<std::vector<Letter>, ModpMatrix::Entry>> pattern;
    for (std::size_t mu = 0; mu < universal.coeffs.size(); ++mu)
      if (universal.coeffs[mu]) {
        auto smash_letters = monomial_letters(mu, n / k, ipow(static_cast<std::size_t>(n), k));
        std::vector<Letter> positions;
        for (Letter s : smash_letters) {
          auto c = monomial_letters(s, k, static_cast<std::size_t>(n));
          positions.insert(positions.end(), c.begin(), c.end());
        }
        pattern.emplace_back(std::move(positions), static_cast<ModpMatrix::Entry>(universal.coeffs[mu]));
      }
    ModpMatrix block(amb.p, amb.dim(n), amb.dim(n));
    for (std::size_t m = 0; m < amb.dim(n); ++m) {
      digits(m, n, a, d);
      for (const auto& [positions, c] : pattern) {
        std::size_t target = 0;
        for (Letter t : positions) target = target * a + d[t];
        block.add_to(target, m, c);
      }
    }
    h.blocks.push_back({n, n / k, std::move(block)});
  }
  return h;
}

GradedCoalgMap alg_james_hopf_direct(int k, const TensorAmbient& amb) {
  amb.validate();
  if (k < 1 || k > std::max(amb.bound, 1)) throw PreconditionError("alg_james_hopf: k out of range");
  GradedCoalgMap h{amb, Alphabet::smash(amb.alphabet, k), {}};
  h.blocks.push_back({0, 0, ModpMatrix::identity(amb.p, 1)});
  const std::size_t a = amb.letters();
  std::vector<std::size_t> d;
  for (int n = k; n <= amb.bound; n += k) {
    ModpMatrix block(amb.p, amb.dim(n), amb.dim(n));
    for (std::size_t m = 0; m < amb.dim(n); ++m) {
      digits(m, n, a, d);
      std::vector<Letter> letters(d.begin(), d.end());
      auto slice = graded_hopf(letters, amb.alphabet, k, amb.p);
      for (std::size_t r = 0; r < slice.coeffs.size(); ++r)
        if (slice.coeffs[r]) block.add_to(r, m, static_cast<std::uint64_t>(slice.coeffs[r]));
    }
    h.blocks.push_back({n, n / k, std::move(block)});
  }
  return h;
}

bool check_universal_property(const GradedCoalgMap& h, int k) {
  const auto& amb = h.source;
  for (int j = 1; j < k && j <= amb.bound; ++j) {
    const auto* b = h.block_from(j);
    if (b && !b->matrix.is_zero()) return false;
  }
  if (k > amb.bound) return true;
  const auto* b = h.block_from(k);
  return b && b->target_degree == 1 && b->matrix == ModpMatrix::identity(amb.p, amb.dim(k));
}

GradedCoalgMap beta_T(int k, const TensorAmbient& amb) {
  amb.validate();
  if (k < 1) throw PreconditionError("beta_T: k must be >= 1");
  GradedCoalgMap b{amb, Alphabet::smash(amb.alphabet, k), {}};
  b.blocks.push_back({0, 0, ModpMatrix::identity(amb.p, 1)});
  // Left-normed bracket of positions 0..k-1 as signed position orders.
  std::vector<std::pair<std::vector<int>, int>> bracket{{{0}, 1}}, next;
  for (int j = 1; j < k; ++j) {
    next.clear();
    for (const auto& [t, s] : bracket) {
      auto right = t;
      right.push_back(j);
      next.emplace_back(std::move(right), s);
      std::vector<int> left{j};
      left.insert(left.end(), t.begin(), t.end());
      next.emplace_back(std::move(left), -s);
    }
    bracket.swap(next);
  }
  const std::size_t a = amb.letters();
  std::vector<std::size_t> d;
  for (int n = k; n <= amb.bound; n += k) {
    const int q = n / k;
    ModpMatrix block(amb.p, amb.dim(n), amb.dim(n));
    for (std::size_t m = 0; m < amb.dim(n); ++m) {
      digits(m, n, a, d);
      // expand the product of q brackets
      std::vector<std::pair<std::size_t, int>> terms{{0, 1}}, grown;
      for (int g = 0; g < q; ++g) {
        grown.clear();
        for (const auto& [idx, s] : terms)
          for (const auto& [order, bs] : bracket) {
            std::size_t t = idx;
            for (int pos : order) t = t * a + d[static_cast<std::size_t>(g * k + pos)];
            grown.emplace_back(t, s * bs);
          }
        terms.swap(grown);
      }
      for (const auto& [t, s] : terms) block.add_to(t, m, s > 0 ? 1u : amb.p - 1);
    }
    b.blocks.push_back({q, n, std::move(block)});
  }
  return b;
}

namespace {

ModpMatrix factor_permutation_block(const TensorAmbient& amb, int n, int k, const Permutation& sigma) {
  const std::size_t a = amb.letters();
  auto inv = sigma.inverse();
  ModpMatrix out(amb.p, amb.dim(n), amb.dim(n));
  std::vector<std::size_t> d;
  for (std::size_t m = 0; m < amb.dim(n); ++m) {
    digits(m, n, a, d);
    std::size_t t = 0;
    for (int g = 0; g < n / k; ++g)
      for (int j = 0; j < k; ++j) t = t * a + d[static_cast<std::size_t>(g * k + inv(j))];
    out.at(t, m) = 1;
  }
  return out;
}

struct GeneratorData {
  GradedCoalgMap h;
  GradedCoalgMap b;
};

// H_k^alg and β_k^T depend only on (p, alphabet, bound, k).
const GeneratorData& generator_data(const TensorAmbient& amb, int k) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::vector<std::string>, int, int>, GeneratorData> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(amb.p, amb.alphabet->names(), amb.bound, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, GeneratorData{alg_james_hopf(k, amb), beta_T(k, amb)}).first;
  return it->second;
}

}  // namespace

GradedCoalgEndo generator_endo(int k, const Permutation& sigma, const TensorAmbient& amb) {
  amb.validate();
  if (k < 1 || k > std::max(amb.bound, 1)) throw PreconditionError("generator_endo: k out of range");
  if (sigma.size() != k) throw PreconditionError("generator_endo: permutation size differs from k");
  const auto& data = generator_data(amb, k);
  GradedCoalgEndo f = unit_endo(amb);
  for (int n = k; n <= amb.bound; n += k) {
    const auto* H = data.h.block_from(n);
    const auto* B = data.b.block_from(n / k);
    f.blocks[static_cast<std::size_t>(n)] = B->matrix * (factor_permutation_block(amb, n, k, sigma) * H->matrix);
  }
  return f;
}

std::vector<GeneratorFactor> factor_endo(const GradedCoalgEndo& f) {
  const auto& amb = f.ambient;
  amb.validate();
  if (amb.letters() < static_cast<std::size_t>(amb.bound))
    throw PreconditionError("factor_endo: alphabet size " + std::to_string(amb.letters()) + " is below the degree bound " +
                            std::to_string(amb.bound));
  if (!is_coalgebra_map(f)) throw PreconditionError("factor_endo: input is not a coalgebra map");
  std::vector<GeneratorFactor> out;
  GradedCoalgEndo residual = f;
  for (int k = 1; k <= amb.bound; ++k) {
    const auto perms = Permutation::all(k);
    std::vector<GradedCoalgEndo> gens;
    const std::size_t dk = amb.dim(k);
    ModpMatrix A(amb.p, dk * dk, perms.size());
    for (std::size_t s = 0; s < perms.size(); ++s) {
      gens.push_back(generator_endo(k, perms[s], amb));
      const auto& blk = gens.back().blocks[static_cast<std::size_t>(k)];
      for (std::size_t e = 0; e < dk * dk; ++e) A.at(e, s) = blk.data()[e];
    }
    auto c = A.solve(residual.blocks[static_cast<std::size_t>(k)].data());
    if (!c)
      throw PreconditionError("factor_endo: degree-" + std::to_string(k) +
                              " component is not a combination of generators (not natural)");
    GeneratorFactor factor{k, {}};
    GradedCoalgEndo Fk = unit_endo(amb);
    for (std::size_t s = 0; s < perms.size(); ++s) {
      if ((*c)[s] == 0) continue;
      factor.terms.emplace_back(perms[s], (*c)[s]);
      Fk = convolution(Fk, convolution_power(gens[s], (*c)[s]));
    }
    if (!factor.terms.empty()) residual = convolution(convolution_inverse(Fk), residual);
    out.push_back(std::move(factor));
  }
  if (!(residual == unit_endo(amb))) throw std::logic_error("factor_endo: residual did not reduce to the unit");
  return out;
}

GradedCoalgEndo reconstruct(const std::vector<GeneratorFactor>& factors, const TensorAmbient& amb) {
  GradedCoalgEndo f = unit_endo(amb);
  for (const auto& factor : factors)
    for (const auto& [sigma, c] : factor.terms)
      f = convolution(f, convolution_power(generator_endo(factor.k, sigma, amb), c));
  return f;
}

std::string to_string(const std::vector<GeneratorFactor>& factors) {
  std::string out;
  for (const auto& factor : factors) {
    out += "a_" + std::to_string(factor.k) + " = ";
    if (factor.terms.empty()) out += "0";
    for (std::size_t i = 0; i < factor.terms.size(); ++i) {
      if (i) out += " + ";
      out += std::to_string(factor.terms[i].second) + "*" + factor.terms[i].first.to_cycles();
    }
    out += "\n";
  }
  return out;
}

ModpMatrix primitives(const TensorAmbient& amb, int n) {
  amb.validate();
  if (n < 1 || n > amb.bound) throw PreconditionError("primitives: degree out of range");
  const std::size_t dn = amb.dim(n);
  ModpMatrix reduced(amb.p, dn * static_cast<std::size_t>(n - 1), dn);
  for (int i = 1; i < n; ++i) {
    auto b = coproduct_block(amb, n, i);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dn; ++c) reduced.at(static_cast<std::size_t>(i - 1) * dn + r, c) = b.at(r, c);
  }
  return reduced.nullspace();
}

long long restricted_witt_dimension(int letters, int p, int n) {
  long long total = 0;
  for (int q = 1; q <= n; q *= p) {
    if (n % q == 0) total += witt_dimension(letters, n / q);
    if (q > n / p) break;
  }
  return total;
}

IdempotentResult idempotent_power(const GradedCoalgEndo& f, int max_power) {
  if (!is_coalgebra_map(f)) throw PreconditionError("idempotent_power: input is not a coalgebra map");
  auto key = [](const GradedCoalgEndo& g) {
    std::vector<ModpMatrix::Entry> k;
    for (const auto& b : g.blocks) k.insert(k.end(), b.data().begin(), b.data().end());
    return k;
  };
  std::map<std::vector<ModpMatrix::Entry>, int> seen;
  std::vector<GradedCoalgEndo> powers{f};
  seen.emplace(key(f), 1);
  IdempotentResult r;
  for (int n = 2;; ++n) {
    if (n > max_power)
      throw PreconditionError("idempotent_power: no repetition among the first " + std::to_string(max_power) + " powers");
    powers.push_back(compose(powers.back(), f));
    auto [it, inserted] = seen.emplace(key(powers.back()), n);
    if (!inserted) {
      r.index = it->second;
      r.period = n - it->second;
      break;
    }
  }
  int N = r.period;
  while (N < r.index) N += r.period;
  r.power = N;
  r.idempotent = powers[static_cast<std::size_t>(N - 1)];
  for (int n = 0; n <= f.ambient.bound; ++n) {
    const auto& b = r.idempotent.blocks[static_cast<std::size_t>(n)];
    const auto rank = b.rank();
    r.table.push_back({n, rank, b.cols() - rank, f.ambient.dim(n)});
  }
  return r;
}

}  // namespace jhkit
