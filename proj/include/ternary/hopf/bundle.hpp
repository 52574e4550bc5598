#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ternary/carrier.hpp"
#include "ternary/linalg/field.hpp"

namespace ternary::hopf {

using linalg::FieldMatrix;
using linalg::PrimeField;

/// m3 : A (x) A (x) A -> A as an n x n^3 matrix.
struct TernaryAlgebra {
  TernaryAlgebra(PrimeField field, std::size_t dim, FieldMatrix m3);

  PrimeField field;
  std::size_t dim;
  FieldMatrix m3;
};

/// delta3 : C -> C (x) C (x) C as an n^3 x n matrix.
struct TernaryCoalgebra {
  TernaryCoalgebra(PrimeField field, std::size_t dim, FieldMatrix delta3);

  PrimeField field;
  std::size_t dim;
  FieldMatrix delta3;
};

enum class AntipodeKind { skew, strong };

/// Derivedness of a bundle as declared by the witnesses it carries.
enum class BundleKind { delta_derived, m_derived, derived, full };

struct HopfBundle {
  TernaryAlgebra algebra;
  TernaryCoalgebra coalgebra;
  std::optional<FieldMatrix> counit;    // 1 x n
  std::optional<FieldMatrix> antipode;  // n x n
  AntipodeKind antipode_kind = AntipodeKind::skew;
  std::optional<FieldMatrix> m2;      // n x n^2, m3 = m2 (m2 (x) id)
  std::optional<FieldMatrix> delta2;  // n^2 x n, delta3 = (id (x) delta2) delta2
  std::optional<FieldMatrix> unit;    // n x 1
  BundleKind kind = BundleKind::full;

  const PrimeField& field() const noexcept { return algebra.field; }
  std::size_t dim() const noexcept { return algebra.dim; }

  /// Shapes, fields and the kind/witness correspondence. Throws InputError.
  void validate() const;
};

BundleKind kind_from_witnesses(bool has_m2, bool has_delta2);

std::string to_string(BundleKind kind);
std::string to_string(AntipodeKind kind);
/// Throws InputError for unknown names.
BundleKind bundle_kind_from_string(const std::string& name);
AntipodeKind antipode_kind_from_string(const std::string& name);

/// Structure matrices of finite tables and maps, e_x (x) e_y (x) e_z -> e_[xyz].
FieldMatrix linearize(const TernaryTable& t, const PrimeField& field);
FieldMatrix linearize(const BinaryTable& b, const PrimeField& field);
FieldMatrix linearize(const std::vector<Element>& map, const PrimeField& field);

/// k(G): m3 linearizes the cube, delta(x) = x (x) x (x) x, eps(x) = 1, S(x) = x-bar,
/// delta2(x) = x (x) x. m2 and unit are attached when G is derived from a group.
/// Precondition: t is a ternary group. The result is verified before returning.
HopfBundle build_group_hopf(const TernaryTable& t, std::uint32_t p);

/// F(G) on indicator functions: m3(d_x d_y d_z) = d_x if x = y = z, delta(d_w) = sum over
/// [xyz] = w of d_x (x) d_y (x) d_z, S(d_x) = d_{x-bar}, pointwise m2 with unit 1. The counit
/// (evaluation at the identity) and delta2 are attached when G has a ternary identity.
HopfBundle build_function_hopf(const TernaryTable& t, std::uint32_t p);

}  // namespace ternary::hopf
