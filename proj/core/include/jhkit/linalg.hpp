#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace jhkit {

/// Dense matrix over Z/p with entries kept in [0, p). p must be below 2^31.
class ModpMatrix {
 public:
  using Entry = std::uint32_t;

  ModpMatrix() = default;
  ModpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  static ModpMatrix identity(std::uint32_t p, std::size_t n);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Entry at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Entry& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void add_to(std::size_t r, std::size_t c, std::uint64_t v) { at(r, c) = static_cast<Entry>((at(r, c) + v) % p_); }
  const std::vector<Entry>& data() const noexcept { return data_; }
  std::vector<Entry>& data() noexcept { return data_; }

  ModpMatrix operator*(const ModpMatrix& o) const;
  ModpMatrix operator+(const ModpMatrix& o) const;
  ModpMatrix operator-(const ModpMatrix& o) const;
  ModpMatrix scale(std::uint64_t c) const;
  ModpMatrix transpose() const;
  /// Kronecker product; row index r1*rows(o)+r2.
  ModpMatrix kron(const ModpMatrix& o) const;
  bool is_zero() const noexcept;

  std::size_t rank() const;
  /// Columns form a basis of the kernel.
  ModpMatrix nullspace() const;
  /// A solution of A x = b with free variables set to zero, if any.
  std::optional<std::vector<Entry>> solve(const std::vector<Entry>& b) const;

  friend bool operator==(const ModpMatrix&, const ModpMatrix&) = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> data_;
};

std::uint32_t modp_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace jhkit
