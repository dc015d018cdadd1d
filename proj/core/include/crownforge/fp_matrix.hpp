#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crownforge {

using FpVector = std::vector<std::uint32_t>;

/// Dense matrix over the prime field F_p. Vectors are rows; a matrix acts on
/// the right, v -> v * M.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries);

  static FpMatrix identity(std::uint32_t p, std::size_t n);
  static FpMatrix from_rows(std::uint32_t p, const std::vector<FpVector>& rows);

  std::uint32_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  FpVector row(std::size_t i) const;
  const std::vector<std::uint32_t>& entries() const { return a_; }

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  std::size_t rank() const;
  std::optional<FpMatrix> inverse() const;
  /// Basis (as rows) of {x : this * x^T = 0}.
  FpMatrix nullspace() const;
  /// Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> reduce();

  std::string to_string() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint64_t n);

FpVector times(const FpVector& v, const FpMatrix& m);
FpVector add(const FpVector& a, const FpVector& b, std::uint32_t p);

/// Row space basis in reduced echelon form.
FpMatrix row_space(const std::vector<FpVector>& vectors, std::uint32_t p, std::size_t dim);

/// Integer code sum v_i p^i of a vector, and its inverse.
std::uint64_t encode(const FpVector& v, std::uint32_t p);
FpVector decode(std::uint64_t code, std::uint32_t p, std::size_t dim);

}  // namespace crownforge
