#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ternary::linalg {

/// Canonical representative in [0, p).
using Residue = std::uint32_t;

/// GF(p) for a prime 2 <= p < 2^31.
class PrimeField {
 public:
  /// Throws InputError if p is not a prime in range.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    return static_cast<Residue>(((v % m) + m) % m);
  }
  Residue add(Residue a, Residue b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  /// Throws InputError for a == 0.
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Dense row-major matrix over a prime field. Value type, never mutated after construction.
class FieldMatrix {
 public:
  /// Zero matrix.
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// Throws InputError if entries.size() != rows*cols or an entry is not below p.
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Residue> entries);

  static FieldMatrix identity(PrimeField field, std::size_t n);

  template <typename Fn>
  static FieldMatrix build(PrimeField field, std::size_t rows, std::size_t cols, Fn&& fn) {
    std::vector<Residue> e;
    e.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) e.push_back(field.reduce(static_cast<std::int64_t>(fn(r, c))));
    return FieldMatrix(field, rows, cols, std::move(e));
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const Residue> entries() const noexcept { return entries_; }
  Residue operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }

  FieldMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

/// Throw InputError on mismatched fields or dimensions.
FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);

/// First (row, col) where the matrices differ in row-major order; (rows, 0) style mismatch in
/// shape is reported as InputError.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const FieldMatrix& a,
                                                                    const FieldMatrix& b);

/// Kronecker product; the basis vector at multi-index (i_1..i_k) has flat index
/// sum_j i_j * n^(k-j).
FieldMatrix kron(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix kron(std::span<const FieldMatrix> factors);

// fmat v1:  fmat 1 / p <modulus> / dims <rows> <cols> / row-major entries (one row per line).
FieldMatrix parse_fmat(std::string_view text);
std::string write_fmat(const FieldMatrix& m);

}  // namespace ternary::linalg
