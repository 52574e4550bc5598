#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ternary/carrier.hpp"
#include "ternary/hopf/bundle.hpp"
#include "ternary/predicates.hpp"

namespace ternary::hopf {

/// Result of a matrix-equality check. On failure `equation` names the first equation that
/// failed and `at` its first differing (row, col).
struct Check {
  bool holds = true;
  std::string equation;
  std::optional<std::pair<std::size_t, std::size_t>> at;

  explicit operator bool() const noexcept { return holds; }
};

/// Comultiplications and counits above this dimension need an explicit opt-in for the n^9
/// comediality composite.
inline constexpr std::size_t kComedialDefaultMaxDim = 4;
/// Candidate count cap for counit and delta2 enumeration.
inline constexpr std::size_t kDefaultEnumerationBound = 1'000'000;

struct Coassociativity {
  enum class Type { standard, sigma, permutational };
  Type type = Type::standard;
  std::vector<int> perm;  // 0-based one-line; 3 slots for sigma, 5 for permutational

  static Coassociativity standard() { return {}; }
  static Coassociativity sigma(std::vector<int> p) { return {Type::sigma, std::move(p)}; }
  static Coassociativity permutational(std::vector<int> p) { return {Type::permutational, std::move(p)}; }
};

enum class CounitKind { standard, polyadic, long_chain };

/// Number of functionals each counit kind takes: 1, 2, 4.
std::size_t counit_arity(CounitKind kind);
std::string to_string(CounitKind kind);
CounitKind counit_kind_from_string(const std::string& name);

Check check_algebra_assoc(const TernaryAlgebra& a);

Check check_coassoc(const TernaryCoalgebra& c, const Coassociativity& kind);

/// nullopt when skipped: dim > kComedialDefaultMaxDim without `exhaustive`.
std::optional<Check> check_comedial(const TernaryCoalgebra& c, bool exhaustive = false);

/// `eps` holds counit_arity(kind) functionals, each 1 x n.
Check check_counit(const TernaryCoalgebra& c, CounitKind kind, std::span<const FieldMatrix> eps);

/// Every tuple of functionals satisfying the law, in lexicographic order of the concatenated
/// coefficient vectors. Throws BoundError when p^(n * arity) exceeds `bound`.
std::vector<std::vector<FieldMatrix>> search_counits(const TernaryCoalgebra& c, CounitKind kind,
                                                     std::size_t bound = kDefaultEnumerationBound);

Check check_cocommutative(const TernaryCoalgebra& c, const Perm3& sigma);

/// [f, g, h]_* = m3_A (f (x) g (x) h) delta3_C.
FieldMatrix convolution(const FieldMatrix& f, const FieldMatrix& g, const FieldMatrix& h,
                        const TernaryAlgebra& a, const TernaryCoalgebra& c);

/// delta3 m3 = (m3 (x) m3 (x) m3) P_medial (delta3 (x) delta3 (x) delta3).
Check check_bialgebra(const HopfBundle& h);

/// m2 (u (x) id) = id = m2 (id (x) u).
Check check_binary_unit(const FieldMatrix& m2, const FieldMatrix& unit);
/// m3 (u (x) u (x) id) = m3 (u (x) id (x) u) = m3 (id (x) u (x) u) = id.
Check check_ternary_unit(const TernaryAlgebra& a, const FieldMatrix& unit);

/// skew: [S,id,id]_* = [id,S,id]_* = [id,id,S]_* = id.
/// strong: (m2 (x) id)(id (x) S (x) id) delta3 = 1 (x) id and
///         (id (x) m2)(id (x) id (x) S) delta3 = id (x) 1.
/// Throws PreconditionError when the antipode is missing, or for `strong` without an m2
/// witness and a verified binary unit.
Check check_antipode(const HopfBundle& h, AntipodeKind kind);

/// delta3 S = tau13 (S (x) S (x) S) delta3. Precondition: antipode present.
Check check_skew_involutive(const HopfBundle& h);

/// m3 = m2 (m2 (x) id)
Check check_m_witness(const TernaryAlgebra& a, const FieldMatrix& m2);
/// delta3 = (id (x) delta2) delta2
Check check_delta_witness(const TernaryCoalgebra& c, const FieldMatrix& delta2);

struct DeltaDerivation {
  FieldMatrix counit;
  FieldMatrix delta2;
};

/// From a functional eps with (eps (x) id (x) eps) delta3 = id, tries (id (x) id (x) eps) delta3
/// and then (eps (x) id (x) id) delta3 as delta2. Without `eps`, enumerates candidates in
/// lexicographic order (BoundError past `bound`).
std::optional<DeltaDerivation> check_delta_derived(const TernaryCoalgebra& c,
                                                   const std::optional<FieldMatrix>& eps = std::nullopt,
                                                   std::size_t bound = kDefaultEnumerationBound);

/// derived / m-derived / delta-derived / full from verified witnesses. Missing m2 is looked for
/// through `source` (via is_derived) when given; missing delta2 by check_delta_derived.
BundleKind classify_bundle(const HopfBundle& h, const TernaryTable* source = nullptr,
                           std::size_t bound = kDefaultEnumerationBound);

struct D32Report {
  Check twisted_left;   // delta3 = (id (x) phi (x) id)(delta2 (x) id) delta2
  Check twisted_right;  // delta3 = (id (x) phi (x) id)(id (x) delta2) delta2
  std::optional<Check> lambda_delta2;          // delta2 = (id (x) lambda (x) id) delta3
  std::optional<Check> lambda_reconstruction;  // delta3 = (id^3 (x) lambda)(delta2 (x) delta2) delta2

  bool holds() const noexcept { return twisted_left.holds || twisted_right.holds; }
};

/// Tests both well-typed readings of the binary decomposition of delta3 through an
/// automorphism phi, plus the lambda relations when lambda (1 x n) is supplied.
D32Report check_d32(const TernaryCoalgebra& c, const FieldMatrix& phi, const FieldMatrix& delta2,
                    const std::optional<FieldMatrix>& lambda = std::nullopt);

/// m3_F = delta3_k^T and delta3_F = m3_k^T.
Check check_duality(const HopfBundle& group_algebra, const HopfBundle& functions);

}  // namespace ternary::hopf
