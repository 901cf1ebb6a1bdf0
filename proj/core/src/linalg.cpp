#include "jhkit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace jhkit {

ModpMatrix::ModpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("matrix modulus out of range");
}

ModpMatrix ModpMatrix::identity(std::uint32_t p, std::size_t n) {
  ModpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ModpMatrix ModpMatrix::operator*(const ModpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix product: shape or modulus mismatch");
  ModpMatrix out(p_, rows_, o.cols_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = at(r, k);
      if (a == 0) continue;
      const Entry* row = &o.data_[k * o.cols_];
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (row[c]) acc[c] = (acc[c] + a * row[c]) % p_;
    }
    for (std::size_t c = 0; c < o.cols_; ++c) out.at(r, c) = static_cast<Entry>(acc[c]);
  }
  return out;
}

ModpMatrix ModpMatrix::operator+(const ModpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("matrix sum: shape mismatch");
  ModpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = static_cast<Entry>((data_[i] + o.data_[i]) % p_);
  return out;
}

ModpMatrix ModpMatrix::operator-(const ModpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("matrix difference: shape mismatch");
  ModpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = static_cast<Entry>((data_[i] + p_ - o.data_[i]) % p_);
  return out;
}

ModpMatrix ModpMatrix::scale(std::uint64_t c) const {
  ModpMatrix out = *this;
  c %= p_;
  for (auto& v : out.data_) v = static_cast<Entry>(v * c % p_);
  return out;
}

ModpMatrix ModpMatrix::transpose() const {
  ModpMatrix out(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

ModpMatrix ModpMatrix::kron(const ModpMatrix& o) const {
  if (p_ != o.p_) throw std::invalid_argument("kron: modulus mismatch");
  ModpMatrix out(p_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t r1 = 0; r1 < rows_; ++r1)
    for (std::size_t c1 = 0; c1 < cols_; ++c1) {
      const std::uint64_t a = at(r1, c1);
      if (a == 0) continue;
      for (std::size_t r2 = 0; r2 < o.rows_; ++r2)
        for (std::size_t c2 = 0; c2 < o.cols_; ++c2)
          if (o.at(r2, c2))
            out.at(r1 * o.rows_ + r2, c1 * o.cols_ + c2) = static_cast<Entry>(a * o.at(r2, c2) % p_);
    }
  return out;
}

bool ModpMatrix::is_zero() const noexcept {
  for (auto v : data_)
    if (v) return false;
  return true;
}

std::uint32_t modp_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    auto q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw std::domain_error("element is not invertible mod p");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

namespace {

// Row reduces m in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(ModpMatrix& m) {
  const std::uint64_t p = m.p();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(sel, k), m.at(row, k));
    const std::uint64_t inv = modp_inverse(m.at(row, c), m.p());
    for (std::size_t k = c; k < m.cols(); ++k) m.at(row, k) = static_cast<ModpMatrix::Entry>(m.at(row, k) * inv % p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, c) == 0) continue;
      const std::uint64_t f = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m.at(row, k))
          m.at(r, k) = static_cast<ModpMatrix::Entry>((m.at(r, k) + (p - f) * m.at(row, k)) % p);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t ModpMatrix::rank() const {
  ModpMatrix m = *this;
  return rref(m).size();
}

ModpMatrix ModpMatrix::nullspace() const {
  ModpMatrix m = *this;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  ModpMatrix basis(p_, cols_, cols_ - pivots.size());
  std::size_t j = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    basis.at(free, j) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (m.at(r, free)) basis.at(pivots[r], j) = p_ - m.at(r, free);
    ++j;
  }
  return basis;
}

std::optional<std::vector<ModpMatrix::Entry>> ModpMatrix::solve(const std::vector<Entry>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("solve: right-hand side has wrong length");
  ModpMatrix aug(p_, rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r] % p_;
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Entry> x(cols_, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

}  // namespace jhkit
