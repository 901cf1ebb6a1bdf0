#pragma once

#include <cstdint>
#include <string>

namespace jhkit {

using Coeff = std::int64_t;

bool is_prime(std::int64_t n) noexcept;

/// Either the integers or a prime field Z/p. Coefficients are plain int64
/// values; over Z/p they are kept as canonical residues in [0, p).
class CoefficientRing {
 public:
  static CoefficientRing integers() noexcept { return CoefficientRing(0); }
  /// Throws std::invalid_argument unless p is prime.
  static CoefficientRing prime_field(std::int64_t p);

  bool is_integral() const noexcept { return p_ == 0; }
  std::int64_t characteristic() const noexcept { return p_; }

  Coeff normalize(Coeff c) const noexcept;
  Coeff add(Coeff a, Coeff b) const;
  Coeff sub(Coeff a, Coeff b) const;
  Coeff mul(Coeff a, Coeff b) const;
  Coeff neg(Coeff a) const;
  bool is_zero(Coeff c) const noexcept { return normalize(c) == 0; }

  /// "Z" or "Z/p".
  std::string to_string() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  explicit CoefficientRing(std::int64_t p) noexcept : p_(p) {}
  std::int64_t p_ = 0;
};

/// Checked int64 arithmetic; throws std::overflow_error.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

}  // namespace jhkit
