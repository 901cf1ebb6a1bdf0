#include "jhkit/coeff.hpp"

#include <stdexcept>

namespace jhkit {

namespace {
__extension__ using Wide = __int128;
}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

CoefficientRing CoefficientRing::prime_field(std::int64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("coefficient ring Z/" + std::to_string(p) +
                                ": modulus is not prime");
  }
  return CoefficientRing(p);
}

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

Coeff CoefficientRing::normalize(Coeff c) const noexcept {
  if (p_ == 0) return c;
  Coeff r = c % p_;
  return r < 0 ? r + p_ : r;
}

Coeff CoefficientRing::add(Coeff a, Coeff b) const {
  if (p_ == 0) return checked_add(a, b);
  return normalize(normalize(a) + normalize(b));
}

Coeff CoefficientRing::sub(Coeff a, Coeff b) const { return add(a, neg(b)); }

Coeff CoefficientRing::mul(Coeff a, Coeff b) const {
  if (p_ == 0) return checked_mul(a, b);
  return normalize(static_cast<Coeff>((static_cast<Wide>(normalize(a)) * normalize(b)) % p_));
}

Coeff CoefficientRing::neg(Coeff a) const {
  if (p_ == 0) {
    if (a == INT64_MIN) throw std::overflow_error("integer coefficient overflow");
    return -a;
  }
  return normalize(-normalize(a));
}

std::string CoefficientRing::to_string() const {
  return p_ == 0 ? std::string("Z") : "Z/" + std::to_string(p_);
}

}  // namespace jhkit
