#include "ternary/hopf/bundle.hpp"

#include "ternary/constructions.hpp"
#include "ternary/error.hpp"
#include "ternary/hopf/checks.hpp"
#include "ternary/predicates.hpp"

namespace ternary::hopf {

using linalg::Residue;

namespace {

void require_shape(const FieldMatrix& m, const PrimeField& f, std::size_t rows, std::size_t cols, const char* what) {
  if (m.field() != f)
    throw InputError(std::string(what) + " is over GF(" + std::to_string(m.field().modulus()) + "), expected GF(" +
                     std::to_string(f.modulus()) + ")");
  if (m.rows() != rows || m.cols() != cols)
    throw InputError(std::string(what) + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

FieldMatrix sparse01(const PrimeField& f, std::size_t rows, std::size_t cols,
                     const std::vector<std::pair<std::size_t, std::size_t>>& ones) {
  std::vector<Residue> e(rows * cols, 0);
  for (auto [r, c] : ones) e[r * cols + c] = f.add(e[r * cols + c], 1);
  return FieldMatrix(f, rows, cols, std::move(e));
}

void verify_built(const HopfBundle& h, const char* name) {
  auto defect = [name](const Check& c) {
    throw DefectError(std::string(name) + " fails " + c.equation);
  };
  h.validate();
  if (auto c = check_algebra_assoc(h.algebra); !c) defect(c);
  if (auto c = check_coassoc(h.coalgebra, Coassociativity::standard()); !c) defect(c);
  if (auto c = check_bialgebra(h); !c) defect(c);
  if (auto c = check_antipode(h, AntipodeKind::skew); !c) defect(c);
  if (h.counit)
    if (auto c = check_counit(h.coalgebra, CounitKind::standard, std::span(&*h.counit, 1)); !c) defect(c);
  if (h.m2)
    if (auto c = check_m_witness(h.algebra, *h.m2); !c) defect(c);
  if (h.delta2)
    if (auto c = check_delta_witness(h.coalgebra, *h.delta2); !c) defect(c);
  if (h.unit && h.m2)
    if (auto c = check_binary_unit(*h.m2, *h.unit); !c) defect(c);
}

SkewMap require_group(const TernaryTable& t, const char* what) {
  auto status = group_status(t);
  if (!status.is_group()) throw PreconditionError(std::string(what) + " requires a ternary group");
  return *status.skew;
}

}  // namespace

TernaryAlgebra::TernaryAlgebra(PrimeField f, std::size_t n, FieldMatrix m) : field(f), dim(n), m3(std::move(m)) {
  if (dim == 0) throw InputError("algebra dimension must be positive");
  require_shape(m3, field, dim, dim * dim * dim, "m3");
}

TernaryCoalgebra::TernaryCoalgebra(PrimeField f, std::size_t n, FieldMatrix d) : field(f), dim(n), delta3(std::move(d)) {
  if (dim == 0) throw InputError("coalgebra dimension must be positive");
  require_shape(delta3, field, dim * dim * dim, dim, "delta3");
}

void HopfBundle::validate() const {
  const auto& f = algebra.field;
  const std::size_t n = algebra.dim;
  if (coalgebra.field != f || coalgebra.dim != n) throw InputError("algebra and coalgebra differ in field or dimension");
  if (counit) require_shape(*counit, f, 1, n, "eps");
  if (antipode) require_shape(*antipode, f, n, n, "S");
  if (m2) require_shape(*m2, f, n, n * n, "m2");
  if (delta2) require_shape(*delta2, f, n * n, n, "delta2");
  if (unit) require_shape(*unit, f, n, 1, "unit");
  if (kind != kind_from_witnesses(m2.has_value(), delta2.has_value()))
    throw InputError("declared kind '" + to_string(kind) + "' does not match the witnesses present");
}

BundleKind kind_from_witnesses(bool has_m2, bool has_delta2) {
  if (has_m2 && has_delta2) return BundleKind::derived;
  if (has_m2) return BundleKind::m_derived;
  if (has_delta2) return BundleKind::delta_derived;
  return BundleKind::full;
}

std::string to_string(BundleKind kind) {
  switch (kind) {
    case BundleKind::delta_derived:
      return "delta-derived";
    case BundleKind::m_derived:
      return "m-derived";
    case BundleKind::derived:
      return "derived";
    case BundleKind::full:
      return "full";
  }
  return "full";
}

std::string to_string(AntipodeKind kind) { return kind == AntipodeKind::skew ? "skew" : "strong"; }

BundleKind bundle_kind_from_string(const std::string& name) {
  for (auto k : {BundleKind::delta_derived, BundleKind::m_derived, BundleKind::derived, BundleKind::full})
    if (to_string(k) == name) return k;
  throw InputError("unknown bundle kind '" + name + "'");
}

AntipodeKind antipode_kind_from_string(const std::string& name) {
  if (name == "skew") return AntipodeKind::skew;
  if (name == "strong") return AntipodeKind::strong;
  throw InputError("unknown antipode kind '" + name + "'");
}

FieldMatrix linearize(const TernaryTable& t, const PrimeField& field) {
  const std::size_t n = t.order();
  std::vector<std::pair<std::size_t, std::size_t>> ones;
  for (std::size_t col = 0; col < n * n * n; ++col) ones.emplace_back(t.cube()[col], col);
  return sparse01(field, n, n * n * n, ones);
}

FieldMatrix linearize(const BinaryTable& b, const PrimeField& field) {
  const std::size_t n = b.order();
  std::vector<std::pair<std::size_t, std::size_t>> ones;
  for (std::size_t col = 0; col < n * n; ++col) ones.emplace_back(b.square()[col], col);
  return sparse01(field, n, n * n, ones);
}

FieldMatrix linearize(const std::vector<Element>& map, const PrimeField& field) {
  const std::size_t n = map.size();
  std::vector<std::pair<std::size_t, std::size_t>> ones;
  for (std::size_t x = 0; x < n; ++x) {
    if (map[x] >= n) throw InputError("map value out of range");
    ones.emplace_back(map[x], x);
  }
  return sparse01(field, n, n, ones);
}

HopfBundle build_group_hopf(const TernaryTable& t, std::uint32_t p) {
  const auto skew = require_group(t, "build_group_hopf");
  const PrimeField f(p);
  const std::size_t n = t.order();

  std::vector<std::pair<std::size_t, std::size_t>> diag3, diag2;
  for (std::size_t x = 0; x < n; ++x) {
    diag3.emplace_back((x * n + x) * n + x, x);
    diag2.emplace_back(x * n + x, x);
  }
  HopfBundle h{TernaryAlgebra(f, n, linearize(t, f)),
               TernaryCoalgebra(f, n, sparse01(f, n * n * n, n, diag3)),
               FieldMatrix(f, 1, n, std::vector<Residue>(n, 1)),
               linearize(skew.table, f),
               AntipodeKind::skew,
               std::nullopt,
               sparse01(f, n * n, n, diag2),
               std::nullopt,
               BundleKind::delta_derived};
  if (const auto d = is_derived(t); d.answer == Derivedness::yes) {
    h.m2 = linearize(d.witness->binary, f);
    h.unit = sparse01(f, n, 1, {{d.witness->identity, 0}});
    h.kind = BundleKind::derived;
  }
  verify_built(h, "k(G)");
  return h;
}

HopfBundle build_function_hopf(const TernaryTable& t, std::uint32_t p) {
  const auto skew = require_group(t, "build_function_hopf");
  const PrimeField f(p);
  const std::size_t n = t.order();

  std::vector<std::pair<std::size_t, std::size_t>> m3_ones, delta_ones, m2_ones;
  for (std::size_t x = 0; x < n; ++x) {
    m3_ones.emplace_back(x, (x * n + x) * n + x);
    m2_ones.emplace_back(x, x * n + x);
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) delta_ones.emplace_back((x * n + y) * n + z, t(x, y, z));

  HopfBundle h{TernaryAlgebra(f, n, sparse01(f, n, n * n * n, m3_ones)),
               TernaryCoalgebra(f, n, sparse01(f, n * n * n, n, delta_ones)),
               std::nullopt,
               linearize(skew.table, f),
               AntipodeKind::skew,
               sparse01(f, n, n * n, m2_ones),
               std::nullopt,
               FieldMatrix(f, n, 1, std::vector<Residue>(n, 1)),
               BundleKind::m_derived};
  if (const auto d = is_derived(t); d.answer == Derivedness::yes) {
    const auto& dot = d.witness->binary;
    std::vector<std::pair<std::size_t, std::size_t>> split;
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) split.emplace_back(x * n + y, dot(x, y));
    h.delta2 = sparse01(f, n * n, n, split);
    h.counit = sparse01(f, 1, n, {{0, d.witness->identity}});
    h.kind = BundleKind::derived;
  }
  verify_built(h, "F(G)");
  return h;
}

}  // namespace ternary::hopf
