#include "ternary/linalg/tensor.hpp"

#include <algorithm>
#include <optional>

#include "ternary/error.hpp"

namespace ternary::linalg {

namespace {

constexpr std::size_t kDenseAccumulatorLimit = 1 << 12;

// Sorts by index and sums repeated indices.
SparseVector combine(std::vector<std::pair<std::size_t, Residue>> terms, const PrimeField& f) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector v;
  for (std::size_t i = 0; i < terms.size();) {
    Residue sum = 0;
    std::size_t j = i;
    for (; j < terms.size() && terms[j].first == terms[i].first; ++j) sum = f.add(sum, terms[j].second);
    if (sum != 0) v.entries.emplace_back(terms[i].first, sum);
    i = j;
  }
  return v;
}

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > (std::size_t{1} << 40) / std::max<std::size_t>(base, 1))
      throw InputError("tensor power too large");
    r *= base;
  }
  return r;
}

}  // namespace

SlotPermutation::SlotPermutation(std::vector<int> perm, std::size_t dim) : perm_(std::move(perm)), dim_(dim) {
  if (dim_ == 0) throw InputError("slot permutation needs a positive factor dimension");
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || static_cast<std::size_t>(p) >= perm_.size() || seen[p])
      throw InputError("slot permutation is not a bijection");
    seen[p] = true;
  }
  weight_.assign(perm_.size(), 0);
  std::size_t w = 1;
  for (std::size_t m = perm_.size(); m-- > 0;) {
    weight_[perm_[m]] = w;
    w *= dim_;
  }
}

SlotPermutation SlotPermutation::from_one_line(std::string_view digits, std::size_t dim) {
  std::vector<int> perm;
  for (char c : digits) {
    if (c < '1' || c > '9') throw InputError("one-line permutation digits must be 1-9");
    perm.push_back(c - '1');
  }
  return SlotPermutation(std::move(perm), dim);
}

SlotPermutation SlotPermutation::identity(std::size_t k, std::size_t dim) {
  std::vector<int> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
  return SlotPermutation(std::move(perm), dim);
}

std::size_t SlotPermutation::map_index(std::size_t input) const {
  std::size_t out = 0;
  for (std::size_t j = perm_.size(); j-- > 0;) {
    out += (input % dim_) * weight_[j];
    input /= dim_;
  }
  return out;
}

SlotPermutation SlotPermutation::after(const SlotPermutation& next) const {
  if (next.arity() != arity() || next.dim() != dim()) throw InputError("slot permutations of different shape");
  std::vector<int> composed(perm_.size());
  for (std::size_t m = 0; m < perm_.size(); ++m) composed[m] = next.perm_[perm_[m]];
  return SlotPermutation(std::move(composed), dim_);
}

SlotPermutation medial_permutation(std::size_t dim) { return SlotPermutation::from_one_line("147258369", dim); }

SlotPermutation tau13(std::size_t dim) { return SlotPermutation::from_one_line("321", dim); }

FieldMatrix slot_perm_matrix(const PrimeField& field, const SlotPermutation& sp) {
  const std::size_t size = checked_power(sp.dim(), sp.arity());
  std::vector<Residue> e(size * size, 0);
  for (std::size_t in = 0; in < size; ++in) e[sp.map_index(in) * size + in] = 1;
  return FieldMatrix(field, size, size, std::move(e));
}

SparseVector column(const FieldMatrix& m, std::size_t c) {
  if (c >= m.cols()) throw InputError("column index out of range");
  SparseVector v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, c) != 0) v.entries.emplace_back(r, m(r, c));
  return v;
}

SparseVector basis_vector(std::size_t index) { return SparseVector{{{index, 1}}}; }

SparseVector apply(const FieldMatrix& m, const SparseVector& v) {
  const auto& f = m.field();
  std::vector<Residue> acc(m.rows(), 0);
  for (auto [c, x] : v.entries) {
    if (c >= m.cols()) throw InputError("vector index out of range for matrix");
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) acc[r] = f.add(acc[r], f.mul(m(r, c), x));
  }
  SparseVector out;
  for (std::size_t r = 0; r < acc.size(); ++r)
    if (acc[r] != 0) out.entries.emplace_back(r, acc[r]);
  return out;
}

SparseVector apply_kron(std::span<const FieldMatrix* const> factors, const SparseVector& v) {
  if (factors.empty()) throw InputError("apply_kron needs at least one factor");
  const auto& f = factors.front()->field();
  const std::size_t k = factors.size();
  std::size_t in_size = 1, out_size = 1;
  for (const auto* m : factors) {
    if (m->field() != f) throw InputError("apply_kron: factors over different fields");
    in_size *= m->cols();
    out_size *= m->rows();
  }
  // Nonzeros of every column of every factor, fetched lazily.
  std::vector<std::vector<std::optional<SparseVector>>> cols(k);
  for (std::size_t j = 0; j < k; ++j) cols[j].resize(factors[j]->cols());
  auto factor_column = [&](std::size_t j, std::size_t c) -> const SparseVector& {
    auto& slot = cols[j][c];
    if (!slot) slot = column(*factors[j], c);
    return *slot;
  };

  std::vector<std::pair<std::size_t, Residue>> terms, partial, next;
  std::vector<std::size_t> idx(k);
  for (auto [flat, x] : v.entries) {
    if (flat >= in_size) throw InputError("vector index out of range for tensor product");
    std::size_t rest = flat;
    for (std::size_t j = k; j-- > 0;) {
      idx[j] = rest % factors[j]->cols();
      rest /= factors[j]->cols();
    }
    // Outer product of the selected columns, scaled by x.
    partial.assign(1, {0, x});
    for (std::size_t j = 0; j < k; ++j) {
      const auto& col = factor_column(j, idx[j]);
      const std::size_t rows = factors[j]->rows();
      next.clear();
      for (auto [i, a] : partial)
        for (auto [r, b] : col.entries) next.emplace_back(i * rows + r, f.mul(a, b));
      partial.swap(next);
    }
    terms.insert(terms.end(), partial.begin(), partial.end());
  }
  if (out_size > kDenseAccumulatorLimit) return combine(std::move(terms), f);
  std::vector<Residue> dense(out_size, 0);
  for (auto [i, a] : terms) dense[i] = f.add(dense[i], a);
  SparseVector out;
  for (std::size_t i = 0; i < out_size; ++i)
    if (dense[i] != 0) out.entries.emplace_back(i, dense[i]);
  return out;
}

SparseVector apply_kron(std::initializer_list<const FieldMatrix*> factors, const SparseVector& v) {
  return apply_kron(std::span<const FieldMatrix* const>(factors.begin(), factors.size()), v);
}

SparseVector apply_slot_perm(const SlotPermutation& sp, const SparseVector& v) {
  SparseVector out;
  out.entries.reserve(v.entries.size());
  for (auto [i, x] : v.entries) out.entries.emplace_back(sp.map_index(i), x);
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

FieldMatrix tabulate(const PrimeField& field, std::size_t rows, std::size_t cols, const ColumnMap& map) {
  std::vector<Residue> e(rows * cols, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    const auto v = map(basis_vector(c));
    for (auto [r, x] : v.entries) {
      if (r >= rows) throw InputError("tabulated map produced an index outside its codomain");
      e[r * cols + c] = x;
    }
  }
  return FieldMatrix(field, rows, cols, std::move(e));
}

}  // namespace ternary::linalg
