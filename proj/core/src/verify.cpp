#include "jhkit/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "jhkit/cohen.hpp"
#include "jhkit/collector.hpp"
#include "jhkit/error.hpp"
#include "jhkit/filtration.hpp"
#include "jhkit/groupring.hpp"
#include "jhkit/series.hpp"

namespace jhkit {

std::vector<Word> all_reduced_words(const AlphabetPtr& alphabet, int max_length) {
  std::vector<Word> out;
  std::vector<Syllable> cur;
  std::function<void()> grow = [&] {
    out.emplace_back(alphabet, cur);
    if (static_cast<int>(cur.size()) == max_length) return;
    for (Letter l = 0; l < alphabet->size(); ++l)
      for (int e : {1, -1}) {
        if (!cur.empty() && cur.back().letter == l && cur.back().exp == -e) continue;
        cur.push_back({l, e});
        grow();
        cur.pop_back();
      }
  };
  grow();
  return out;
}

Word random_word(const AlphabetPtr& alphabet, int max_length, std::mt19937_64& rng) {
  const int len = std::uniform_int_distribution<int>(0, max_length)(rng);
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(alphabet->size() - 1));
  std::vector<Syllable> s;
  while (static_cast<int>(s.size()) < len) {
    Syllable next{letter(rng), std::bernoulli_distribution(0.5)(rng) ? 1 : -1};
    if (!s.empty() && s.back().letter == next.letter && s.back().exp == -next.exp) continue;
    s.push_back(next);
  }
  return Word(alphabet, s);
}

GradedCoalgEndo random_generator_product(const TensorAmbient& amb, int max_k, int max_factors, std::mt19937_64& rng) {
  GradedCoalgEndo f = unit_endo(amb);
  const int count = std::uniform_int_distribution<int>(1, max_factors)(rng);
  for (int i = 0; i < count; ++i) {
    const int k = std::uniform_int_distribution<int>(1, max_k)(rng);
    const auto perms = Permutation::all(k);
    const auto& sigma = perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)];
    const int e = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    f = convolution(f, convolution_power(generator_endo(k, sigma, amb), e));
  }
  return f;
}

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }


struct Recorder {
  SuiteResult& r;
  const VerifyConfig& cfg;
  void check(bool ok, const std::function<std::string()>& replay) {
    ++r.checks;
    if (ok) return;
    ++r.failed;
    if (r.counterexamples.size() < cfg.max_reported) r.counterexamples.push_back(replay());
  }
};

std::string fmt_index(std::span<const Letter> idx, const Alphabet& a) {
  std::string out;
  for (Letter l : idx) out += (out.empty() ? "" : ",") + a.name(l);
  return out;
}

void suite_jhm(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "abelianized H_k(w) = pi_k(mu(w)), reduced words of length <= 5 over {x,y}, k = 1..3";
  Recorder rec{r, cfg};
  auto X = Alphabet::parse("x,y");
  const auto Z = CoefficientRing::integers();
  for (const auto& w : all_reduced_words(X, 5)) {
    auto mu = magnus(w, 3, Z);
    for (int k = 1; k <= 3; ++k) {
      auto lhs = as_component(abelianized_hopf(w, k), X, k);
      auto rhs = pi_k(mu, k);
      rec.check(lhs.coeffs == rhs.coeffs, [&] {
        return "jhkit hopf --alphabet x,y --k " + std::to_string(k) + " " + quote(to_string(w));
      });
    }
  }
}

void suite_h2(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "H_2([x,y]) abelianizes to {x/\\y:+1, y/\\x:-1} = pi_2(mu([x,y])) = x.y - y.x";
  Recorder rec{r, cfg};
  auto X = Alphabet::parse("x,y");
  auto w = parse_word(X, "x^-1 y^-1 x y");
  auto target = Alphabet::smash(X, 2);
  auto ab = abelianized_hopf(w, 2);
  const Letter xy = target->find("x/\\y").value();
  const Letter yx = target->find("y/\\x").value();
  const std::string replay = "jhkit hopf --alphabet x,y --k 2 \"x^-1 y^-1 x y\"";
  rec.check(ab == SmashVector{{xy, 1}, {yx, -1}}, [&] { return replay; });
  auto mu2 = pi_k(magnus(w, 2, CoefficientRing::integers()), 2);
  rec.check(to_string(mu2) == "x.y - y.x", [&] { return "jhkit magnus --alphabet x,y --trunc 2 \"x^-1 y^-1 x y\""; });
  rec.check(as_component(ab, X, 2).coeffs == mu2.coeffs, [&] { return replay; });
}

void suite_fox(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "Magnus coefficients = augmented Fox derivatives (orders <= 3, 200 words), recursive = closed form";
  Recorder rec{r, cfg};
  std::mt19937_64 rng(cfg.seed ^ 0xf0f0f0ULL);
  auto X = Alphabet::parse("x,y,z");
  const auto Z = CoefficientRing::integers();
  for (int s = 0; s < 200; ++s) {
    auto w = random_word(X, 6, rng);
    auto mu = magnus(w, 3, Z);
    for (int order = 0; order <= 3; ++order)
      for_each_multi_index(X->size(), order, [&](std::span<const Letter> idx) {
        const Coeff expected = mu.coefficient(idx);
        const Coeff closed = higher_fox_aug(idx, w, Z, FoxAlgorithm::closed_form);
        const Coeff recursive = higher_fox_aug(idx, w, Z, FoxAlgorithm::recursive);
        rec.check(expected == closed && closed == recursive, [&] {
          return "jhkit fox --alphabet x,y,z --index " + quote(fmt_index(idx, *X)) + " " + quote(to_string(w));
        });
      });
  }
}

RingElement random_ring_element(const AlphabetPtr& X, const CoefficientRing& ring, std::mt19937_64& rng) {
  const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
  auto minus_one = [&](const Word& w) { return RingElement::minus_one(ring, w); };
  switch (kind) {
    case 0: {  // arbitrary support
      RingElement a(ring, X);
      const int terms = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int t = 0; t < terms; ++t) {
        Coeff c = std::uniform_int_distribution<int>(-3, 3)(rng);
        if (c == 0) c = 1;
        a.add_term(random_word(X, 4, rng), c);
      }
      return a;
    }
    case 1:  // (u-1)(v-1), in Δ^2
      return minus_one(random_word(X, 2, rng)) * minus_one(random_word(X, 2, rng));
    case 2: {  // commutator minus one, in Δ^2 or deeper
      auto u = random_word(X, 2, rng), v = random_word(X, 2, rng);
      return minus_one(commutator(u, v));
    }
    default: {  // w - 1 with w a square or cube
      auto u = random_word(X, 2, rng);
      return minus_one(u.pow(std::uniform_int_distribution<int>(2, 3)(rng)));
    }
  }
}

void suite_foxthm(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "Delta^n membership by Fox derivatives = Magnus valuation >= n (n <= 4, Z and Z/2, 100 elements)";
  Recorder rec{r, cfg};
  std::mt19937_64 rng(cfg.seed ^ 0xa11ceULL);
  auto X = Alphabet::parse("x,y");
  std::size_t members[2] = {0, 0};
  for (int s = 0; s < 100; ++s) {
    auto base = random_ring_element(X, CoefficientRing::integers(), rng);
    for (int which = 0; which < 2; ++which) {
      auto a = which == 0 ? base : base.change_ring(CoefficientRing::prime_field(2));
      for (int n = 1; n <= 4; ++n) {
        const bool by_fox = aug_ideal_member(a, n);
        const bool by_valuation = valuation(magnus_linear(a, n)).degree >= n;
        members[which] += by_fox;
        rec.check(by_fox == by_valuation, [&] {
          return "jhkit val --alphabet x,y --ring " + a.ring().to_string() + " --n " + std::to_string(n) + " " +
                 quote(to_string(a));
        });
      }
    }
  }
  r.notes.push_back("members found: " + std::to_string(members[0]) + " over Z, " + std::to_string(members[1]) +
                    " over Z/2");
}

void suite_jhlcs(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "H_m(gamma_n) lies in the weighted filtration: basic commutators of weight <= 6 and seeded samples";
  Recorder rec{r, cfg};
  auto X = Alphabet::parse("x,y");
  auto replay = [&](const Word& w, const FiltrationSpec& s) {
    return "jhkit gamma --alphabet x,y --p " + std::to_string(s.p) + " --weight " + std::to_string(s.weight) +
           " --arity " + std::to_string(s.smash_arity) + " --jh " + quote(to_string(w));
  };
  std::map<std::string, std::size_t> failing;  // "p n m" -> count
  auto check = [&](const Word& w, const FiltrationSpec& spec) {
    const bool ok = verify_jh_filtration(w, spec, cfg.order);
    if (!ok)
      ++failing["p=" + std::to_string(spec.p) + " n=" + std::to_string(spec.weight) + " m=" +
                std::to_string(spec.smash_arity)];
    rec.check(ok, [&] { return replay(w, spec); });
  };
  auto basis = hall_basis(X, 6);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto w = hall_to_word(basis, i, X);
    for (int m : {2, 3}) check(w, {0, basis[i].weight, m});
  }
  std::mt19937_64 rng(cfg.seed ^ 0x1c5ULL);
  for (int p : {0, 2, 3})
    for (int s = 0; s < 100; ++s) {
      const int n = 2 + s % 5;
      auto w = sample_gamma({p, n, 1}, X, rng, 1).front();
      for (int m : {2, 3}) check(w, {p, n, m});
    }
  for (const auto& [key, count] : failing) r.notes.push_back("failures at " + key + ": " + std::to_string(count));
}

void suite_pattern(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "augmented derivatives of Z H_n(prod (y_t^e - 1)): direct = closed form, 0 unless N = m";
  Recorder rec{r, cfg};
  std::size_t sign_hits = 0, restricted_zero = 0;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n) {
      std::size_t total_j = 1;
      for (int t = 0; t < n; ++t) total_j *= static_cast<std::size_t>(m);
      std::vector<std::vector<int>> js;
      for (std::size_t code = 0; code < total_j; ++code) {
        std::vector<int> J(static_cast<std::size_t>(n));
        std::size_t c = code;
        for (int t = n - 1; t >= 0; --t) {
          J[static_cast<std::size_t>(t)] = static_cast<int>(c % static_cast<std::size_t>(m)) + 1;
          c /= static_cast<std::size_t>(m);
        }
        js.push_back(std::move(J));
      }
      for (unsigned signs = 0; signs < (1u << m); ++signs) {
        PatternInput in;
        in.n = n;
        for (int t = 0; t < m; ++t) in.signs.push_back(signs >> t & 1u ? -1 : 1);
        auto run = [&] {
          const Coeff direct = polynomiality_pattern(in, cfg.order);
          const Coeff closed = polynomiality_closed_form(in, cfg.order);
          const int N = pattern_letter_count(in);
          const bool ok = direct == closed && (N == m || direct == 0);
          if (N == m) {
            if (direct == pattern_sign(in))
              ++sign_hits;
            else
              ++restricted_zero;
          }
          rec.check(ok, [&] {
            std::string signs_text, tuple_text;
            for (int e : in.signs) signs_text += (signs_text.empty() ? "" : ",") + std::to_string(e);
            for (const auto& J : in.tuple) {
              if (!tuple_text.empty()) tuple_text += ";";
              for (std::size_t t = 0; t < J.size(); ++t) tuple_text += (t ? "," : "") + std::to_string(J[t]);
            }
            return "jhkit verify pattern --n " + std::to_string(n) + " --signs " + signs_text + " --tuple " +
                   quote(tuple_text);
          });
        };
        in.tuple.clear();
        run();
        for (const auto& J1 : js) {
          in.tuple = {J1};
          run();
          for (const auto& J2 : js) {
            in.tuple = {J1, J2};
            run();
          }
        }
      }
    }
  r.notes.push_back("N = m cases: " + std::to_string(sign_hits) + " equal the sign product, " +
                    std::to_string(restricted_zero) + " vanish by admissibility or ordering");
}

void suite_whitehead(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "W_m maps the weighted filtration of F[X^m] into gamma_n (resp. the p-central series), n <= 6";
  Recorder rec{r, cfg};
  auto X = Alphabet::parse("x,y");
  std::mt19937_64 rng(cfg.seed ^ 0x3d17eULL);
  for (int p : {0, 2, 3})
    for (int m : {2, 3})
      for (int n = 2; n <= 6; ++n) {
        FiltrationSpec spec{p, n, m};
        for (const auto& v : sample_gamma(spec, X, rng, 4))
          rec.check(verify_whitehead_filtration(v, spec), [&] {
            return "jhkit whitehead --alphabet x,y --arity " + std::to_string(m) + " --p " + std::to_string(p) +
                   " --weight " + std::to_string(n) + " " + quote(to_string(v));
          });
      }
}

void suite_collection(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "abelianized hopf_via_collection = abelianized james_hopf, reduced words of length <= 4, k = 2, 3";
  Recorder rec{r, cfg};
  auto X = Alphabet::parse("x,y");
  for (const auto& w : all_reduced_words(X, 4))
    for (int k : {2, 3}) {
      auto collected = hopf_via_collection(w, k, cfg.order);
      rec.check(abelianized(collected) == abelianized_hopf(w, k), [&] {
        return "jhkit collect --alphabet x,y --k " + std::to_string(k) + " " + quote(to_string(w));
      });
    }
}

GradedCoalgEndo random_graded(const TensorAmbient& amb, std::mt19937_64& rng) {
  GradedCoalgEndo f = unit_endo(amb);
  std::uniform_int_distribution<std::uint32_t> entry(0, amb.p - 1);
  for (int n = 1; n <= amb.bound; ++n)
    for (auto& v : f.blocks[static_cast<std::size_t>(n)].data()) v = entry(rng);
  return f;
}

void suite_hopfalg(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "T(V) over Z/p, |X| = 2, d = 4: coassociativity, counit, antipode, convolution associativity and inverses";
  Recorder rec{r, cfg};
  std::mt19937_64 rng(cfg.seed ^ 0x40fULL);
  for (std::uint32_t p : {2u, 3u}) {
    TensorAmbient amb{p, Alphabet::parse("x,y"), 4};
    const std::string tag = "jhkit verify hopfalg --p " + std::to_string(p);
    for (int n = 0; n <= 4; ++n) {
      rec.check(check_coassociativity(amb, n), [&] { return tag + " # coassociativity, degree " + std::to_string(n); });
      rec.check(check_counit(amb, n), [&] { return tag + " # counit, degree " + std::to_string(n); });
    }
    const auto S = antipode_endo(amb), id = identity_endo(amb), e = unit_endo(amb);
    rec.check(convolution(S, id) == e && convolution(id, S) == e, [&] { return tag + " # antipode law"; });
    rec.check(convolution_inverse(id) == S, [&] { return tag + " # inverse of the identity is the antipode"; });
    for (int s = 0; s < 10; ++s) {
      auto f = random_graded(amb, rng), g = random_graded(amb, rng), h = random_graded(amb, rng);
      rec.check(convolution(convolution(f, g), h) == convolution(f, convolution(g, h)),
                [&] { return tag + " --seed " + std::to_string(cfg.seed) + " # associativity, sample " + std::to_string(s); });
      auto fi = convolution_inverse(f);
      rec.check(convolution(f, fi) == e && convolution(fi, f) == e,
                [&] { return tag + " --seed " + std::to_string(cfg.seed) + " # inverse, sample " + std::to_string(s); });
    }
    auto g = random_generator_product(amb, 3, 3, rng);
    rec.check(is_coalgebra_map(g), [&] { return tag + " # generator product is a coalgebra map"; });
  }
}

void suite_primitives(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "primitive dimensions in T(V), p = 2, |X| = 2: nullspace = restricted Witt = (2,3,2,6)";
  Recorder rec{r, cfg};
  TensorAmbient amb{2, Alphabet::parse("x,y"), 4};
  const long long expected[] = {2, 3, 2, 6};
  std::string dims;
  for (int n = 1; n <= 4; ++n) {
    const auto P = primitives(amb, n);
    const auto by_nullspace = static_cast<long long>(P.cols());
    const auto by_witt = restricted_witt_dimension(2, 2, n);
    dims += (dims.empty() ? "" : ",") + std::to_string(by_nullspace);
    rec.check(by_nullspace == expected[n - 1] && by_witt == expected[n - 1],
              [&] { return "jhkit tensor prim --alphabet x,y --p 2 --deg " + std::to_string(n); });
    // each basis vector is killed by the reduced coproduct
    bool killed = true;
    for (int i = 1; i < n; ++i) killed = killed && (coproduct_block(amb, n, i) * P).is_zero();
    rec.check(killed, [&] { return "jhkit tensor prim --alphabet x,y --p 2 --deg " + std::to_string(n); });
  }
  r.notes.push_back("dims (" + dims + ")");
}

void suite_generators(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "factor_endo then reconstruct is exact on 50 generator products (d = 4, |X| = 4, p = 2)";
  Recorder rec{r, cfg};
  TensorAmbient amb{2, Alphabet::parse("a,b,c,d"), 4};
  for (int k = 1; k <= 3; ++k) {
    auto h = alg_james_hopf(k, amb);
    rec.check(check_universal_property(h, k), [&] { return "jhkit verify generators # universal property, k = " + std::to_string(k); });
    auto direct = alg_james_hopf_direct(k, amb);
    bool same = h.blocks.size() == direct.blocks.size();
    for (std::size_t i = 0; same && i < h.blocks.size(); ++i) same = h.blocks[i].matrix == direct.blocks[i].matrix;
    rec.check(same, [&] { return "jhkit verify generators # natural vs direct H_alg, k = " + std::to_string(k); });
  }
  std::mt19937_64 rng(cfg.seed ^ 0x6e4ULL);
  for (int s = 0; s < 50; ++s) {
    auto f = random_generator_product(amb, 3, 4, rng);
    bool ok = false;
    try {
      ok = reconstruct(factor_endo(f), amb) == f;
    } catch (const std::exception& e) {
      r.notes.push_back(std::string("sample ") + std::to_string(s) + ": " + e.what());
    }
    rec.check(ok, [&] { return "jhkit verify generators --seed " + std::to_string(cfg.seed) + " # sample " + std::to_string(s); });
  }
}

void suite_realization(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "induced_E0 sends (k,k,id,sigma) to g_{k,sigma} and products to convolutions (d = 4, p = 2)";
  Recorder rec{r, cfg};
  TensorAmbient amb{2, Alphabet::parse("a,b,c,d"), 4};
  for (int k = 1; k <= 3; ++k)
    for (const auto& sigma : Permutation::all(k)) {
      CohenWord cw{{{CohenGenerator::plain(k, sigma), 1}}};
      rec.check(induced_E0(cw, amb, cfg.order) == generator_endo(k, sigma, amb),
                [&] { return "jhkit cohen e0 --alphabet a,b,c,d --p 2 --deg 4 " + quote(to_string(cw)); });
    }
  std::mt19937_64 rng(cfg.seed ^ 0x4ea1ULL);
  for (int s = 0; s < 20; ++s) {
    auto c1 = random_cohen_word(rng, 3, 2), c2 = random_cohen_word(rng, 3, 2);
    bool ok = false;
    try {
      ok = induced_E0(c1 * c2, amb, cfg.order) == convolution(induced_E0(c1, amb, cfg.order), induced_E0(c2, amb, cfg.order));
    } catch (const std::exception& e) {
      r.notes.push_back(std::string("pair ") + std::to_string(s) + ": " + e.what());
    }
    rec.check(ok, [&] {
      return "jhkit cohen e0 --alphabet a,b,c,d --p 2 --deg 4 " + quote(to_string(c1 * c2)) + " # vs product of " +
             quote(to_string(c1)) + " and " + quote(to_string(c2));
    });
  }
}

void suite_idempotent(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "powers of 20 generator products (p = 2, d = 3) reach an idempotent; rank + nullity = dim";
  Recorder rec{r, cfg};
  TensorAmbient amb{2, Alphabet::parse("x,y,z"), 3};
  std::mt19937_64 rng(cfg.seed ^ 0x1de3ULL);
  std::size_t max_power = 0;
  for (int s = 0; s < 20; ++s) {
    auto f = random_generator_product(amb, 3, 3, rng);
    auto res = idempotent_power(f);
    bool ok = compose(res.idempotent, res.idempotent) == res.idempotent;
    for (const auto& row : res.table) ok = ok && row.rank + row.nullity == row.dim;
    max_power = std::max<std::size_t>(max_power, static_cast<std::size_t>(res.power));
    rec.check(ok, [&] { return "jhkit verify idempotent --seed " + std::to_string(cfg.seed) + " # sample " + std::to_string(s); });
  }
  r.notes.push_back("largest N: " + std::to_string(max_power));
}

void suite_tower(SuiteResult& r, const VerifyConfig& cfg) {
  r.summary = "eval_mod(cw, w u) = eval_mod(cw, w) for u in gamma_N^[p], N <= 4, p in {2,3}";
  Recorder rec{r, cfg};
  auto X = Alphabet::parse("x,y");
  std::mt19937_64 rng(cfg.seed ^ 0x70e4ULL);
  for (int s = 0; s < 50; ++s) {
    const int p = s % 2 ? 3 : 2;
    const int N = 2 + (s / 2) % 3;
    auto cw = random_cohen_word(rng, 3, 3);
    auto w = random_word(X, 4, rng);
    auto u = sample_gamma({p, N, 1}, X, rng, 1).front();
    const bool ok = eval_mod(cw, w * u, p, N, cfg.order) == eval_mod(cw, w, p, N, cfg.order);
    rec.check(ok, [&] {
      return "jhkit cohen evalmod --alphabet x,y --p " + std::to_string(p) + " --level " + std::to_string(N) + " " +
             quote(to_string(cw)) + " " + quote(to_string(w)) + " # and again with " + quote(to_string(w * u));
    });
  }
}

using SuiteFn = void (*)(SuiteResult&, const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"jhm", suite_jhm},           {"h2", suite_h2},
      {"fox", suite_fox},           {"foxthm", suite_foxthm},
      {"jhlcs", suite_jhlcs},       {"pattern", suite_pattern},
      {"whitehead", suite_whitehead}, {"collection", suite_collection},
      {"hopfalg", suite_hopfalg},   {"primitives", suite_primitives},
      {"generators", suite_generators}, {"realization", suite_realization},
      {"idempotent", suite_idempotent}, {"tower", suite_tower},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const VerifyConfig& config) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      SuiteResult r;
      r.name = n;
      const auto start = std::chrono::steady_clock::now();
      fn(r, config);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
  throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
}

}  // namespace jhkit
