#include "jhkit/cohen.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <stdexcept>

#include "jhkit/error.hpp"
#include "jhkit/groupring.hpp"
#include "jhkit/series.hpp"

namespace jhkit {

void CohenGenerator::validate() const {
  if (k < 1) throw PreconditionError("Cohen generator: k = " + std::to_string(k) + " must be >= 1");
  if (l < k) throw PreconditionError("Cohen generator: l = " + std::to_string(l) + " is below k");
  if (static_cast<int>(delta.size()) != l || !is_monotone_surjection(delta, k))
    throw PreconditionError("Cohen generator: delta is not a monotone surjection [" + std::to_string(l) + "] -> [" +
                            std::to_string(k) + "]");
  if (sigma.size() != l) throw PreconditionError("Cohen generator: sigma must permute " + std::to_string(l) + " points");
}

CohenGenerator CohenGenerator::make(int k, int l, std::vector<int> delta, Permutation sigma) {
  CohenGenerator g{k, l, std::move(delta), std::move(sigma)};
  g.validate();
  return g;
}

CohenGenerator CohenGenerator::plain(int k, Permutation sigma) {
  std::vector<int> delta;
  for (int i = 1; i <= k; ++i) delta.push_back(i);
  return make(k, k, std::move(delta), std::move(sigma));
}

CohenWord CohenWord::inverse() const {
  CohenWord out;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) out.factors.push_back({it->generator, -it->exponent});
  return out;
}

CohenWord operator*(const CohenWord& a, const CohenWord& b) {
  CohenWord out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

Word eval_generator(const CohenGenerator& g, const Word& w, SequenceOrder order) {
  g.validate();
  const auto& base = w.alphabet();
  auto h = james_hopf(w, g.k, order);
  auto diag = apply_letter_map(smash_map_diagonal(base, g.k, g.l, g.delta), h);
  auto perm = apply_letter_map(smash_map_permute(base, g.l, g.sigma), diag);
  return whitehead(perm, g.l);
}

Word eval(const CohenWord& cw, const Word& w, SequenceOrder order) {
  Word out(w.alphabet());
  for (const auto& f : cw.factors) {
    auto v = eval_generator(f.generator, w, order);
    out = out * (f.exponent > 0 ? v : v.inverse());
  }
  return out;
}

TruncatedUnit eval_mod(std::span<const CohenWord::Factor> factors, const Word& w, int p, int level,
                       SequenceOrder order) {
  if (level < 1) throw PreconditionError("eval_mod: level " + std::to_string(level) + " must be >= 1");
  Word out(w.alphabet());
  for (const auto& f : factors) {
    if (f.generator.l >= level) continue;
    auto v = eval_generator(f.generator, w, order);
    out = out * (f.exponent > 0 ? v : v.inverse());
  }
  return unit_embed(out, p, level);
}

TruncatedUnit eval_mod(const CohenWord& cw, const Word& w, int p, int level, SequenceOrder order) {
  return eval_mod(std::span<const CohenWord::Factor>(cw.factors), w, p, level, order);
}

GradedCoalgEndo induced_E0(const CohenWord& cw, const TensorAmbient& amb, SequenceOrder order) {
  amb.validate();
  const auto ring = CoefficientRing::prime_field(amb.p);
  const auto& X = amb.alphabet;
  const std::size_t a = amb.letters();
  GradedCoalgEndo f{amb, {}};
  std::map<Word, std::vector<Coeff>, ShortLex> cache;  // word ↦ degree-n slice
  for (int n = 0; n <= amb.bound; ++n) {
    cache.clear();
    const std::size_t dn = amb.dim(n);
    ModpMatrix block(amb.p, dn, dn);
    std::vector<Syllable> syl;
    for (std::size_t m = 0; m < dn; ++m) {
      auto letters = monomial_letters(m, n, a);
      // (x_{i_1}-1)…(x_{i_n}-1) = Σ_S (-1)^{n-|S|} x_S
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        syl.clear();
        for (int t = 0; t < n; ++t)
          if (mask >> t & 1u) syl.push_back({letters[static_cast<std::size_t>(t)], 1});
        Word w(X, syl);
        auto it = cache.find(w);
        if (it == cache.end())
          it = cache.emplace(w, pi_k(magnus(eval(cw, w, order), n, ring), n).coeffs).first;
        const bool negative = (n - std::popcount(mask)) % 2;
        for (std::size_t r = 0; r < dn; ++r) {
          const Coeff c = it->second[r];
          if (c) block.add_to(r, m, static_cast<std::uint64_t>(negative ? ring.neg(c) : c));
        }
      }
    }
    f.blocks.push_back(std::move(block));
  }
  if (!is_coalgebra_map(f)) throw std::logic_error("induced_E0: result violates the coalgebra-map law");
  return f;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError("Cohen word: " + what, pos); }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(std::string_view w) {
    skip();
    if (s.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  int integer() {
    if (!peek_digit()) fail("expected a number");
    int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1000) fail("number too large");
    }
    return v;
  }

  CohenWord::Factor factor() {
    const std::size_t start = pos;
    expect('(');
    CohenGenerator g;
    g.k = integer();
    expect(',');
    g.l = integer();
    bool have_delta = false, have_sigma = false;
    std::string sigma_text = "()";
    while (eat(',')) {
      if (eat_word("delta")) {
        expect('=');
        g.delta.clear();
        while (peek_digit()) g.delta.push_back(integer());
        have_delta = true;
      } else if (eat_word("sigma")) {
        expect('=');
        skip();
        const std::size_t from = pos;
        int depth = 0;
        while (pos < s.size()) {
          if (s[pos] == '(') ++depth;
          else if (s[pos] == ')') {
            if (depth == 0) break;
            --depth;
          } else if (s[pos] == ',' && depth == 0)
            break;
          ++pos;
        }
        sigma_text = std::string(s.substr(from, pos - from));
        have_sigma = true;
      } else {
        fail("expected delta= or sigma=");
      }
    }
    expect(')');
    if (!have_delta) {
      if (g.k != g.l) fail("delta is required when k != l");
      g.delta.clear();
      for (int i = 1; i <= g.k; ++i) g.delta.push_back(i);
    }
    try {
      g.sigma = have_sigma ? Permutation::parse_cycles(sigma_text, g.l) : Permutation::identity(g.l);
      g.validate();
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      pos = start;
      fail(e.what());
    }
    int exponent = 1;
    if (eat('^')) {
      int sign = 1;
      if (eat('-'))
        sign = -1;
      else
        eat('+');
      if (integer() != 1) fail("exponent must be +1 or -1");
      exponent = sign;
    }
    return {std::move(g), exponent};
  }

  CohenWord word() {
    CohenWord cw;
    skip();
    if (pos == s.size()) return cw;
    cw.factors.push_back(factor());
    while (eat(';')) cw.factors.push_back(factor());
    skip();
    if (pos != s.size()) fail("unexpected trailing input");
    return cw;
  }
};

}  // namespace

CohenWord parse_cohen_word(std::string_view text) { return Parser{text}.word(); }

std::string to_string(const CohenGenerator& g) {
  std::string out = "(" + std::to_string(g.k) + "," + std::to_string(g.l) + ",delta=";
  for (std::size_t i = 0; i < g.delta.size(); ++i) out += (i ? " " : "") + std::to_string(g.delta[i]);
  return out + ",sigma=" + g.sigma.to_cycles() + ")";
}

std::string to_string(const CohenWord& cw) {
  std::string out;
  for (std::size_t i = 0; i < cw.factors.size(); ++i) {
    if (i) out += " ; ";
    out += to_string(cw.factors[i].generator) + (cw.factors[i].exponent > 0 ? "^+1" : "^-1");
  }
  return out;
}

CohenGenerator random_generator(std::mt19937_64& rng, int max_l) {
  const int l = std::uniform_int_distribution<int>(1, max_l)(rng);
  const int k = std::uniform_int_distribution<int>(1, l)(rng);
  // monotone surjection [l] → [k]: choose k-1 cut points among the l-1 gaps
  std::vector<int> gaps(static_cast<std::size_t>(l - 1));
  for (int i = 0; i < l - 1; ++i) gaps[static_cast<std::size_t>(i)] = i;
  std::shuffle(gaps.begin(), gaps.end(), rng);
  std::vector<bool> cut(static_cast<std::size_t>(l), false);
  for (int i = 0; i < k - 1; ++i) cut[static_cast<std::size_t>(gaps[static_cast<std::size_t>(i)])] = true;
  std::vector<int> delta;
  int value = 1;
  for (int i = 0; i < l; ++i) {
    delta.push_back(value);
    if (i < l - 1 && cut[static_cast<std::size_t>(i)]) ++value;
  }
  std::vector<int> images(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) images[static_cast<std::size_t>(i)] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return CohenGenerator::make(k, l, std::move(delta), Permutation(std::move(images)));
}

CohenWord random_cohen_word(std::mt19937_64& rng, int max_l, int max_factors) {
  CohenWord cw;
  const int count = std::uniform_int_distribution<int>(1, max_factors)(rng);
  for (int i = 0; i < count; ++i)
    cw.factors.push_back({random_generator(rng, max_l), std::bernoulli_distribution(0.5)(rng) ? 1 : -1});
  return cw;
}

}  // namespace jhkit
