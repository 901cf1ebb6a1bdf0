#include "jhkit/series.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "jhkit/error.hpp"

namespace jhkit {

TruncatedSeries::TruncatedSeries(CoefficientRing ring, AlphabetPtr alphabet, int bound)
    : ring_(ring), alphabet_(std::move(alphabet)), bound_(bound) {
  if (!alphabet_) throw std::invalid_argument("series needs an alphabet");
  if (bound_ < 0) throw std::invalid_argument("truncation bound must be >= 0");
  const std::size_t a = alphabet_->size();
  std::size_t width = 1, total = 0;
  coeffs_.reserve(static_cast<std::size_t>(bound_) + 1);
  for (int d = 0; d <= bound_; ++d) {
    total += width;
    if (total > kMaxEntries) throw std::length_error("truncated series too large for dense storage");
    coeffs_.emplace_back(width, 0);
    if (a != 0 && width > kMaxEntries / a) width = kMaxEntries + 1;
    else width *= a;
  }
}

TruncatedSeries TruncatedSeries::one(CoefficientRing ring, AlphabetPtr alphabet, int bound) {
  TruncatedSeries s(ring, std::move(alphabet), bound);
  s.coeffs_[0][0] = ring.normalize(1);
  return s;
}

std::size_t monomial_index(std::span<const Letter> monomial, std::size_t alphabet_size) {
  std::size_t idx = 0;
  for (Letter l : monomial) {
    if (l >= alphabet_size) throw std::out_of_range("monomial letter out of range");
    idx = idx * alphabet_size + l;
  }
  return idx;
}

std::vector<Letter> monomial_letters(std::size_t index, int degree, std::size_t alphabet_size) {
  std::vector<Letter> out(static_cast<std::size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<Letter>(index % alphabet_size);
    index /= alphabet_size;
  }
  return out;
}

Coeff TruncatedSeries::coefficient(std::span<const Letter> monomial) const {
  if (monomial.size() > static_cast<std::size_t>(bound_)) return 0;
  return coeffs_[monomial.size()][monomial_index(monomial, alphabet_->size())];
}

void TruncatedSeries::set_coefficient(std::span<const Letter> monomial, Coeff c) {
  if (monomial.size() > static_cast<std::size_t>(bound_)) return;
  coeffs_[monomial.size()][monomial_index(monomial, alphabet_->size())] = ring_.normalize(c);
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o, const char* op) const {
  if (!(ring_ == o.ring_)) throw AlphabetMismatch(std::string(op) + ": series over different coefficient rings");
  require_same_alphabet(alphabet_, o.alphabet_, op);
  if (bound_ != o.bound_) throw PreconditionError(std::string(op) + ": series with different truncation bounds");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  require_compatible(o, "series add");
  TruncatedSeries out = *this;
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    for (std::size_t i = 0; i < coeffs_[d].size(); ++i) out.coeffs_[d][i] = ring_.add(coeffs_[d][i], o.coeffs_[d][i]);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  require_compatible(o, "series subtract");
  TruncatedSeries out = *this;
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    for (std::size_t i = 0; i < coeffs_[d].size(); ++i) out.coeffs_[d][i] = ring_.sub(coeffs_[d][i], o.coeffs_[d][i]);
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  require_compatible(o, "series multiply");
  TruncatedSeries out(ring_, alphabet_, bound_);
  for (int d1 = 0; d1 <= bound_; ++d1) {
    const auto& a = coeffs_[static_cast<std::size_t>(d1)];
    for (int d2 = 0; d1 + d2 <= bound_; ++d2) {
      const auto& b = o.coeffs_[static_cast<std::size_t>(d2)];
      auto& c = out.coeffs_[static_cast<std::size_t>(d1 + d2)];
      const std::size_t w2 = b.size();
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < w2; ++j) {
          if (b[j] == 0) continue;
          c[i * w2 + j] = ring_.add(c[i * w2 + j], ring_.mul(a[i], b[j]));
        }
      }
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scale(Coeff c) const {
  TruncatedSeries out = *this;
  for (auto& deg : out.coeffs_)
    for (auto& v : deg) v = ring_.mul(v, c);
  return out;
}

void TruncatedSeries::mul_right_unit(Letter x, int exp) {
  const std::size_t a = alphabet_->size();
  if (x >= a) throw std::out_of_range("letter out of range");
  if (exp > 0) {
    for (int d = bound_; d >= 1; --d) {
      auto& hi = coeffs_[static_cast<std::size_t>(d)];
      const auto& lo = coeffs_[static_cast<std::size_t>(d - 1)];
      for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] != 0) hi[i * a + x] = ring_.add(hi[i * a + x], lo[i]);
    }
  } else {
    // y (1+x) = s  =>  y[m x] = s[m x] - y[m]
    for (int d = 1; d <= bound_; ++d) {
      auto& hi = coeffs_[static_cast<std::size_t>(d)];
      const auto& lo = coeffs_[static_cast<std::size_t>(d - 1)];
      for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] != 0) hi[i * a + x] = ring_.sub(hi[i * a + x], lo[i]);
    }
  }
}

TruncatedSeries TruncatedSeries::truncate(int bound) const {
  if (bound > bound_) throw PreconditionError("truncate: new bound exceeds the current one");
  TruncatedSeries out(ring_, alphabet_, bound);
  for (int d = 0; d <= bound; ++d) out.coeffs_[static_cast<std::size_t>(d)] = coeffs_[static_cast<std::size_t>(d)];
  return out;
}

TruncatedSeries TruncatedSeries::change_ring(CoefficientRing ring) const {
  TruncatedSeries out(ring, alphabet_, bound_);
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    for (std::size_t i = 0; i < coeffs_[d].size(); ++i) out.coeffs_[d][i] = ring.normalize(coeffs_[d][i]);
  return out;
}

bool TruncatedSeries::is_zero() const noexcept {
  for (const auto& deg : coeffs_)
    for (Coeff v : deg)
      if (v != 0) return false;
  return true;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.ring_ == b.ring_ && a.bound_ == b.bound_ && same_alphabet(a.alphabet_, b.alphabet_) &&
         a.coeffs_ == b.coeffs_;
}

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_invert(const TruncatedSeries& a) {
  const auto& ring = a.ring();
  const Coeff u = a.degree(0)[0];
  if (u != ring.normalize(1) && u != ring.normalize(-1))
    throw PreconditionError("series_invert: constant term " + std::to_string(u) + " is not a unit");
  TruncatedSeries b(ring, a.alphabet(), a.bound());
  b.degree(0)[0] = u;  // u^-1 = u
  for (int d = 1; d <= a.bound(); ++d) {
    // b_d = -u Σ_{j=1..d} a_j b_{d-j}
    auto& out = b.degree(d);
    for (int j = 1; j <= d; ++j) {
      const auto& x = a.degree(j);
      const auto& y = b.degree(d - j);
      const std::size_t w = y.size();
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t k = 0; k < w; ++k)
          if (y[k] != 0) out[i * w + k] = ring.add(out[i * w + k], ring.mul(x[i], y[k]));
      }
    }
    for (auto& v : out) v = ring.mul(v, ring.neg(u));
  }
  return b;
}

TruncatedSeries magnus(const Word& w, int bound, const CoefficientRing& ring) {
  auto s = TruncatedSeries::one(ring, w.alphabet(), bound);
  for (const auto& syl : w.syllables()) s.mul_right_unit(syl.letter, syl.exp);
  return s;
}

TruncatedSeries magnus_linear(const RingElement& a, int bound) {
  TruncatedSeries out(a.ring(), a.alphabet(), bound);
  for (const auto& [w, c] : a.terms()) out = out + magnus(w, bound, a.ring()).scale(c);
  return out;
}

Valuation valuation(const TruncatedSeries& a) {
  for (int d = 0; d <= a.bound(); ++d)
    for (Coeff v : a.degree(d))
      if (v != 0) return {d, true};
  return {a.bound() + 1, false};
}

std::string to_string(const Valuation& v) {
  return v.exact ? std::to_string(v.degree) : ">= " + std::to_string(v.degree);
}

HomogeneousComponent pi_k(const TruncatedSeries& a, int k) {
  if (k < 0 || k > a.bound())
    throw PreconditionError("pi_k: degree " + std::to_string(k) + " exceeds truncation " + std::to_string(a.bound()));
  return {a.ring(), a.alphabet(), k, a.degree(k)};
}

HomogeneousComponent left_bracketing(const HomogeneousComponent& h) {
  const std::size_t a = h.alphabet->size();
  const auto& ring = h.ring;
  HomogeneousComponent out{ring, h.alphabet, h.degree, std::vector<Coeff>(h.coeffs.size(), 0)};
  if (h.degree == 0) return out;
  std::vector<std::pair<std::vector<Letter>, int>> terms, next;
  for (std::size_t idx = 0; idx < h.coeffs.size(); ++idx) {
    if (h.coeffs[idx] == 0) continue;
    auto m = monomial_letters(idx, h.degree, a);
    terms.assign(1, {{m[0]}, 1});
    for (int j = 1; j < h.degree; ++j) {
      next.clear();
      const Letter x = m[static_cast<std::size_t>(j)];
      for (const auto& [t, sign] : terms) {
        auto right = t;
        right.push_back(x);
        next.emplace_back(std::move(right), sign);
        std::vector<Letter> left{x};
        left.insert(left.end(), t.begin(), t.end());
        next.emplace_back(std::move(left), -sign);
      }
      terms.swap(next);
    }
    for (const auto& [t, sign] : terms) {
      auto& slot = out.coeffs[monomial_index(t, a)];
      slot = ring.add(slot, ring.mul(h.coeffs[idx], sign));
    }
  }
  return out;
}

bool is_lie_element(const HomogeneousComponent& h) {
  if (h.degree < 1) throw PreconditionError("is_lie_element: degree must be >= 1");
  if (!h.ring.is_integral() && h.degree >= h.ring.characteristic())
    throw PreconditionError("is_lie_element over Z/p needs degree < p");
  auto d = left_bracketing(h);
  for (std::size_t i = 0; i < h.coeffs.size(); ++i)
    if (d.coeffs[i] != h.ring.mul(h.coeffs[i], h.degree)) return false;
  return true;
}

namespace {

void append_term(std::string& out, const CoefficientRing& ring, Coeff c, const std::string& mono) {
  bool negative = ring.is_integral() && c < 0;
  if (negative) c = -c;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (mono.empty())
    out += std::to_string(c);
  else if (c == 1)
    out += mono;
  else
    out += std::to_string(c) + " * " + mono;
}

std::string monomial_text(const Alphabet& alpha, std::size_t idx, int degree) {
  std::string out;
  for (Letter l : monomial_letters(idx, degree, alpha.size())) {
    if (!out.empty()) out += '.';
    out += alpha.name(l);
  }
  return out;
}

}  // namespace

std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (int d = 0; d <= s.bound(); ++d) {
    const auto& deg = s.degree(d);
    for (std::size_t i = 0; i < deg.size(); ++i)
      if (deg[i] != 0) append_term(out, s.ring(), deg[i], monomial_text(*s.alphabet(), i, d));
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const HomogeneousComponent& h) {
  std::string out;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i)
    if (h.coeffs[i] != 0) append_term(out, h.ring, h.coeffs[i], monomial_text(*h.alphabet, i, h.degree));
  return out.empty() ? "0" : out;
}

TruncatedSeries parse_series(const CoefficientRing& ring, const AlphabetPtr& alphabet, int bound,
                             std::string_view text) {
  TruncatedSeries out(ring, alphabet, bound);
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool first = true;
  while (i < n) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    first = false;
    const std::size_t start = i;
    while (i < n && text[i] != '+' && text[i] != '-') ++i;
    std::string_view term = text.substr(start, i - start);
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.remove_suffix(1);
    if (term.empty()) throw ParseError("empty term", start);
    Coeff c = 1;
    std::string_view mono = term;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      auto [ptr, ec] = std::from_chars(term.data(), term.data() + term.size(), c);
      if (ec != std::errc()) throw ParseError("bad coefficient", start);
      mono = term.substr(static_cast<std::size_t>(ptr - term.data()));
      auto star = mono.find('*');
      if (star != std::string_view::npos)
        mono = mono.substr(star + 1);
      else if (mono.find_first_not_of(" ") != std::string_view::npos)
        throw ParseError("expected '*' after coefficient", start);
      else
        mono = {};
    }
    std::vector<Letter> letters;
    std::size_t pos = 0;
    auto b = mono.find_first_not_of(' ');
    mono = b == std::string_view::npos ? std::string_view{} : mono.substr(b);
    while (!mono.empty() && pos <= mono.size()) {
      auto dot = mono.find('.', pos);
      auto name = mono.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
      auto l = alphabet->find(name);
      if (!l) throw UnknownLetter(std::string(name));
      letters.push_back(*l);
      if (dot == std::string_view::npos) break;
      pos = dot + 1;
    }
    if (letters.size() > static_cast<std::size_t>(bound)) continue;
    out.set_coefficient(letters, ring.add(out.coefficient(letters), ring.mul(c, sign)));
    skip_ws();
  }
  return out;
}

}  // namespace jhkit
