#include "jhkit/filtration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "jhkit/error.hpp"

namespace jhkit {

int FiltrationSpec::threshold() const {
  validate();
  return (weight + smash_arity - 1) / smash_arity;
}

CoefficientRing FiltrationSpec::ring() const {
  return p == 0 ? CoefficientRing::integers() : CoefficientRing::prime_field(p);
}

void FiltrationSpec::validate() const {
  if (weight < 1) throw PreconditionError("filtration weight must be >= 1");
  if (smash_arity < 1) throw PreconditionError("smash arity must be >= 1");
  if (p != 0 && !is_prime(p)) throw PreconditionError("filtration prime " + std::to_string(p) + " is not prime");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "YES";
    case Verdict::no:
      return "NO";
    default:
      return "UNKNOWN";
  }
}

MembershipResult gamma_member(const Word& w, const FiltrationSpec& spec, int D) {
  const int t = spec.threshold();
  if (D < t)
    throw PreconditionError("gamma_member: truncation " + std::to_string(D) + " below threshold " + std::to_string(t));
  const auto ring = spec.ring();
  auto s = magnus(w, D, ring) - TruncatedSeries::one(ring, w.alphabet(), D);
  auto v = valuation(s);
  Verdict verdict;
  if (v.exact)
    verdict = v.degree >= t ? Verdict::yes : Verdict::no;
  else
    verdict = v.degree >= t ? Verdict::yes : Verdict::unknown;
  return {verdict, v, t};
}

namespace {

Word random_argument(const AlphabetPtr& alpha, std::mt19937_64& rng) {
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(alpha->size() - 1));
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> quarter(0, 3);
  const int len = quarter(rng) == 0 ? 2 : 1;
  std::vector<Syllable> s;
  while (static_cast<int>(s.size()) < len) {
    Syllable next{letter(rng), coin(rng) ? 1 : -1};
    if (!s.empty() && s.back().letter == next.letter && s.back().exp == -next.exp) continue;
    s.push_back(next);
  }
  return Word(alpha, s);
}

Word random_commutator(const AlphabetPtr& alpha, int args, std::mt19937_64& rng) {
  std::vector<Word> entries;
  for (int i = 0; i < args; ++i) entries.push_back(random_argument(alpha, rng));
  return left_normed_commutator(entries);
}

}  // namespace

std::vector<Word> sample_gamma(const FiltrationSpec& spec, const AlphabetPtr& base, std::mt19937_64& rng,
                               std::size_t count) {
  const int t = spec.threshold();
  auto alpha = Alphabet::smash(base, spec.smash_arity);
  if (alpha->size() == 0) throw PreconditionError("sample_gamma: empty alphabet");
  std::vector<int> powers;  // p^j <= 9, j >= 1
  if (spec.p > 0)
    for (int q = spec.p; q <= 9; q *= spec.p) powers.push_back(q);
  std::uniform_int_distribution<int> quarter(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Word> out;
  while (out.size() < count) {
    const int factors = quarter(rng) == 0 ? 2 : 1;
    Word sample(alpha);
    for (int f = 0; f < factors; ++f) {
      Word g(alpha);
      if (!powers.empty() && coin(rng)) {
        std::uniform_int_distribution<std::size_t> pick(0, powers.size() - 1);
        const int q = powers[pick(rng)];
        const int i = std::max(1, (t + q - 1) / q);
        g = random_commutator(alpha, i, rng).pow(q);
      } else {
        g = random_commutator(alpha, t, rng);
      }
      sample = sample * g;
    }
    auto m = gamma_member(sample, spec, t);
    if (m.verdict != Verdict::yes)
      throw std::logic_error("sample_gamma produced an uncertified sample " + to_string(sample));
    out.push_back(std::move(sample));
  }
  return out;
}

bool verify_jh_filtration(const Word& w, const FiltrationSpec& spec, SequenceOrder order) {
  FiltrationSpec source{spec.p, spec.weight, 1};
  auto pre = gamma_member(w, source, spec.weight);
  if (pre.verdict != Verdict::yes)
    throw PreconditionError("verify_jh_filtration: " + to_string(w) + " is not certified in the filtration of weight " +
                            std::to_string(spec.weight));
  const int t = spec.threshold();
  const auto ring = spec.ring();
  auto target = Alphabet::smash(w.alphabet(), spec.smash_arity);
  auto s = hopf_magnus(w, spec.smash_arity, t, ring, order) - TruncatedSeries::one(ring, target, t);
  return valuation(s).degree >= t;
}

bool verify_whitehead_filtration(const Word& v, const FiltrationSpec& spec) {
  if (v.alphabet()->arity() != spec.smash_arity)
    throw PreconditionError("verify_whitehead_filtration: word arity does not match the smash arity");
  auto pre = gamma_member(v, spec, spec.threshold());
  if (pre.verdict != Verdict::yes)
    throw PreconditionError("verify_whitehead_filtration: " + to_string(v) + " is not in the weighted filtration");
  auto image = whitehead(v, spec.smash_arity);
  FiltrationSpec target{spec.p, spec.weight, 1};
  return gamma_member(image, target, spec.weight).verdict == Verdict::yes;
}

namespace {

void validate_pattern(const PatternInput& in) {
  const int m = static_cast<int>(in.signs.size());
  if (in.n < 1) throw PreconditionError("pattern: hopf index must be >= 1");
  if (m < 1) throw PreconditionError("pattern: need at least one letter");
  for (int s : in.signs)
    if (s != 1 && s != -1) throw PreconditionError("pattern: signs must be +1 or -1");
  for (const auto& J : in.tuple) {
    if (static_cast<int>(J.size()) != in.n) throw PreconditionError("pattern: multi-index length differs from n");
    for (int y : J)
      if (y < 1 || y > m) throw PreconditionError("pattern: multi-index letter out of range");
  }
}

AlphabetPtr pattern_alphabet(int m) {
  std::vector<std::string> names;
  for (int t = 1; t <= m; ++t) names.push_back("y" + std::to_string(t));
  return Alphabet::make(std::move(names));
}

int compare_positions(const std::vector<int>& a, const std::vector<int>& b, SequenceOrder order) {
  if (order == SequenceOrder::left_lex) return a < b ? -1 : (a == b ? 0 : 1);
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

Coeff polynomiality_pattern(const PatternInput& in, SequenceOrder order) {
  validate_pattern(in);
  const int m = static_cast<int>(in.signs.size());
  auto Y = pattern_alphabet(m);
  const auto Z = CoefficientRing::integers();
  auto P = RingElement::one(Z, Y);
  for (int t = 0; t < m; ++t) P = P * RingElement::minus_one(Z, Word::letter(Y, static_cast<Letter>(t), in.signs[static_cast<std::size_t>(t)]));
  auto H = james_hopf_linear(P, in.n, order);
  std::vector<Letter> index;
  for (const auto& J : in.tuple) {
    std::vector<Letter> c;
    for (int y : J) c.push_back(static_cast<Letter>(y - 1));
    index.push_back(H.alphabet()->from_coords(c));
  }
  return higher_fox_aug(index, H);
}

int pattern_letter_count(const PatternInput& in) {
  std::set<int> letters;
  for (const auto& J : in.tuple) letters.insert(J.begin(), J.end());
  return static_cast<int>(letters.size());
}

Coeff pattern_sign(const PatternInput& in) {
  Coeff s = 1;
  for (const auto& J : in.tuple)
    for (int y : J) s *= in.signs.at(static_cast<std::size_t>(y - 1));
  return s;
}

bool pattern_admissible(const PatternInput& in, SequenceOrder order) {
  validate_pattern(in);
  auto sign_of = [&](int y) { return in.signs[static_cast<std::size_t>(y - 1)]; };
  for (const auto& J : in.tuple)
    for (std::size_t a = 0; a + 1 < J.size(); ++a) {
      const int next = J[a + 1];
      if (J[a] > next - (sign_of(next) + 1) / 2) return false;
    }
  for (std::size_t a = 0; a + 1 < in.tuple.size(); ++a) {
    const int c = compare_positions(in.tuple[a], in.tuple[a + 1], order);
    if (c > 0) return false;
    if (c == 0) {
      int s = 1;
      for (int y : in.tuple[a]) s *= sign_of(y);
      if (s > 0) return false;
    }
  }
  return true;
}

Coeff polynomiality_closed_form(const PatternInput& in, SequenceOrder order) {
  validate_pattern(in);
  if (pattern_letter_count(in) != static_cast<int>(in.signs.size())) return 0;
  return pattern_admissible(in, order) ? pattern_sign(in) : 0;
}

TruncatedUnit unit_embed(const Word& w, int p, int level) {
  if (level < 1) throw PreconditionError("unit level must be >= 1");
  auto ring = p == 0 ? CoefficientRing::integers() : CoefficientRing::prime_field(p);
  return {magnus(w, level - 1, ring), level};
}

TruncatedUnit unit_multiply(const TruncatedUnit& a, const TruncatedUnit& b) {
  if (a.level != b.level) throw PreconditionError("unit_multiply: different tower levels");
  return {a.series * b.series, a.level};
}

bool unit_equal(const TruncatedUnit& a, const TruncatedUnit& b) { return a == b; }

TruncatedUnit unit_retruncate(const TruncatedUnit& u, int level) {
  if (level < 1 || level > u.level) throw PreconditionError("unit_retruncate: invalid level");
  return {u.series.truncate(level - 1), level};
}

std::string to_string(const TruncatedUnit& u) { return to_string(u.series); }

}  // namespace jhkit
