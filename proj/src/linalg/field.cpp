#include "ternary/linalg/field.hpp"

#include <sstream>

#include "../tokens.hpp"
#include "fmat_block.hpp"
#include "ternary/error.hpp"

namespace ternary::linalg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_same_field(const FieldMatrix& a, const FieldMatrix& b, const char* op) {
  if (a.field() != b.field())
    throw InputError(std::string(op) + ": operands over different fields");
}

std::string shape(const FieldMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InputError("zero has no inverse");
  return pow(a, p_ - 2);
}

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw InputError("matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) + " needs " +
                     std::to_string(rows_ * cols_) + " entries, got " + std::to_string(entries_.size()));
  for (Residue r : entries_)
    if (r >= field_.modulus())
      throw InputError("matrix entry " + std::to_string(r) + " is not a residue mod " +
                       std::to_string(field_.modulus()));
}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
  std::vector<Residue> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return FieldMatrix(field, n, n, std::move(e));
}

FieldMatrix FieldMatrix::transpose() const {
  std::vector<Residue> t(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t[c * rows_ + r] = entries_[r * cols_ + c];
  return FieldMatrix(field_, cols_, rows_, std::move(t));
}

bool FieldMatrix::is_zero() const {
  for (Residue r : entries_)
    if (r != 0) return false;
  return true;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b, "matmul");
  if (a.cols() != b.rows())
    throw InputError("matmul: cannot multiply " + shape(a) + " by " + shape(b));
  const auto& f = a.field();
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> acc(b.cols());
  std::vector<Residue> out;
  out.reserve(a.rows() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) acc[c] = (acc[c] + x * b(k, c)) % p;
    }
    for (auto v : acc) out.push_back(static_cast<Residue>(v));
  }
  return FieldMatrix(f, a.rows(), b.cols(), std::move(out));
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b, "matadd");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("matadd: cannot add " + shape(a) + " and " + shape(b));
  std::vector<Residue> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field().add(a.entries()[i], b.entries()[i]);
  return FieldMatrix(a.field(), a.rows(), a.cols(), std::move(out));
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const FieldMatrix& a,
                                                                    const FieldMatrix& b) {
  require_same_field(a, b, "compare");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("compare: shapes " + shape(a) + " and " + shape(b) + " differ");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return std::pair{r, c};
  return std::nullopt;
}

FieldMatrix kron(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b, "kron");
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<Residue> out(rows * cols, 0);
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Residue x = a(ar, ac);
      if (x == 0) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out[(ar * b.rows() + br) * cols + ac * b.cols() + bc] = a.field().mul(x, b(br, bc));
    }
  return FieldMatrix(a.field(), rows, cols, std::move(out));
}

FieldMatrix kron(std::span<const FieldMatrix> factors) {
  if (factors.empty()) throw InputError("kron of an empty factor list");
  FieldMatrix result = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) result = kron(result, factors[i]);
  return result;
}

FieldMatrix detail::read_fmat_block(ternary::detail::Tokens& in) {
  in.expect("fmat");
  in.expect("1");
  in.expect("p");
  const auto p = in.number();
  if (p >= (1u << 31)) in.fail("modulus out of range");
  const PrimeField field(static_cast<std::uint32_t>(p));
  in.expect("dims");
  const auto rows = in.number();
  const auto cols = in.number();
  if (rows == 0 || cols == 0 || rows > (1u << 24) || cols > (1u << 24) || rows * cols > (1u << 26))
    in.fail("unsupported dimensions " + std::to_string(rows) + "x" + std::to_string(cols));
  std::vector<Residue> entries;
  entries.reserve(rows * cols);
  for (std::uint64_t i = 0; i < rows * cols; ++i) {
    if (in.at_end())
      in.fail("expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(i));
    const auto v = in.number();
    if (v >= p) in.fail("entry " + std::to_string(v) + " is not a residue mod " + std::to_string(p));
    entries.push_back(static_cast<Residue>(v));
  }
  return FieldMatrix(field, rows, cols, std::move(entries));
}

void detail::write_fmat_block(std::ostream& out, const FieldMatrix& m) {
  out << "fmat 1\n"
      << "p " << m.field().modulus() << '\n'
      << "dims " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out << m(r, c) << (c + 1 == m.cols() ? '\n' : ' ');
}

FieldMatrix parse_fmat(std::string_view text) {
  ternary::detail::Tokens in(text, "fmat");
  auto m = detail::read_fmat_block(in);
  in.expect_end();
  return m;
}

std::string write_fmat(const FieldMatrix& m) {
  std::ostringstream out;
  detail::write_fmat_block(out, m);
  return out.str();
}

}  // namespace ternary::linalg
