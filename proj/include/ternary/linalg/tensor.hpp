#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ternary/linalg/field.hpp"

namespace ternary::linalg {

/// Rearranges the factors of V^{(x)k}, dim V = dim. Output slot m carries input slot perm[m]
/// (0-based), so e_{i_0} (x) ... (x) e_{i_{k-1}} maps to e_{i_perm[0]} (x) ... (x) e_{i_perm[k-1]}.
class SlotPermutation {
 public:
  SlotPermutation(std::vector<int> perm, std::size_t dim);

  /// Bottom row of two-line notation with 1-based digits, e.g. "147258369" or "321".
  static SlotPermutation from_one_line(std::string_view digits, std::size_t dim);
  static SlotPermutation identity(std::size_t k, std::size_t dim);

  std::size_t arity() const noexcept { return perm_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<int>& perm() const noexcept { return perm_; }

  /// Flat output index for a flat input index.
  std::size_t map_index(std::size_t input) const;

  /// The slot permutation whose matrix is matrix(*this) * matrix(next): apply `next`
  /// first, then this one. Output slot m reads next.perm[perm[m]].
  SlotPermutation after(const SlotPermutation& next) const;

 private:
  std::vector<int> perm_;
  std::size_t dim_;
  std::vector<std::size_t> weight_;  // output place value of each input slot
};

/// The 3x3 argument-matrix transpose on 9 factors.
SlotPermutation medial_permutation(std::size_t dim);
/// (123 -> 321)
SlotPermutation tau13(std::size_t dim);

/// Dense dim^k x dim^k 0/1 matrix of the rearrangement.
FieldMatrix slot_perm_matrix(const PrimeField& field, const SlotPermutation& sp);

/// Sorted by index, no explicit zeros.
struct SparseVector {
  std::vector<std::pair<std::size_t, Residue>> entries;
  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

SparseVector column(const FieldMatrix& m, std::size_t c);
SparseVector basis_vector(std::size_t index);
/// m * v
SparseVector apply(const FieldMatrix& m, const SparseVector& v);
/// (F_1 (x) ... (x) F_k) * v without materializing the Kronecker product.
SparseVector apply_kron(std::span<const FieldMatrix* const> factors, const SparseVector& v);
SparseVector apply_kron(std::initializer_list<const FieldMatrix*> factors, const SparseVector& v);
/// P_sp * v
SparseVector apply_slot_perm(const SlotPermutation& sp, const SparseVector& v);

using ColumnMap = std::function<SparseVector(const SparseVector&)>;

/// The matrix of a linear map given column-wise: column j is `map(e_j)`.
FieldMatrix tabulate(const PrimeField& field, std::size_t rows, std::size_t cols, const ColumnMap& map);

}  // namespace ternary::linalg
