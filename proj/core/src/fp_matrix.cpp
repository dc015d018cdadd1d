#include "crownforge/fp_matrix.hpp"

#include <sstream>

#include "crownforge/errors.hpp"

namespace crownforge {

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols,
                   std::vector<std::uint32_t> entries)
    : p_(p), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw PreconditionError("matrix entry count mismatch");
  for (auto& x : a_) x %= p_;
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<FpVector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  FpMatrix m(p, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j] % p;
  }
  return m;
}

FpVector FpMatrix::row(std::size_t i) const {
  return FpVector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) throw PreconditionError("matrix shape mismatch");
  FpMatrix out(p_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t x = at(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = static_cast<std::uint32_t>((out.at(i, j) + x * rhs.at(k, j)) % p_);
    }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + rhs.a_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + p_ - rhs.a_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool FpMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool FpMatrix::is_zero() const {
  for (auto x : a_)
    if (x) return false;
  return true;
}

std::vector<std::size_t> FpMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
    const std::uint64_t inv = inverse_mod(at(r, c), p_);
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = static_cast<std::uint32_t>(at(r, j) * inv % p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const std::uint64_t f = p_ - at(i, c);
      for (std::size_t j = 0; j < cols_; ++j)
        at(i, j) = static_cast<std::uint32_t>((at(i, j) + f * at(r, j)) % p_);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix m = *this;
  return m.reduce().size();
}

std::optional<FpMatrix> FpMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  FpMatrix aug(p_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1 % p_;
  }
  const auto piv = aug.reduce();
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  FpMatrix inv(p_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

FpMatrix FpMatrix::nullspace() const {
  FpMatrix m = *this;
  const auto piv = m.reduce();
  std::vector<bool> is_piv(cols_, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_piv[f]) continue;
    FpVector v(cols_, 0);
    v[f] = 1 % p_;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p_ - m.at(r, f)) % p_;
    basis.push_back(std::move(v));
  }
  FpMatrix out(p_, basis.size(), cols_);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = basis[i][j];
  return out;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    const std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw PreconditionError("value not invertible mod p");
  return static_cast<std::uint32_t>((t % p + p) % p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FpVector times(const FpVector& v, const FpMatrix& m) {
  const auto p = m.prime();
  FpVector out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::uint64_t x = v[i];
    if (!x) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[j] = static_cast<std::uint32_t>((out[j] + x * m.at(i, j)) % p);
  }
  return out;
}

FpVector add(const FpVector& a, const FpVector& b, std::uint32_t p) {
  FpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
  return out;
}

FpMatrix row_space(const std::vector<FpVector>& vectors, std::uint32_t p, std::size_t dim) {
  if (vectors.empty()) return FpMatrix(p, 0, dim);
  FpMatrix m = FpMatrix::from_rows(p, vectors);
  const auto piv = m.reduce();
  FpMatrix out(p, piv.size(), dim);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

std::uint64_t encode(const FpVector& v, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

FpVector decode(std::uint64_t code, std::uint32_t p, std::size_t dim) {
  FpVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

}  // namespace crownforge
