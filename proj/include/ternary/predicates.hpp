#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ternary/carrier.hpp"

namespace ternary {

/// A permutation of three argument slots in 0-based one-line form: slot i reads argument perm[i].
using Perm3 = std::array<int, 3>;

inline constexpr Perm3 kSwap12{1, 0, 2};
inline constexpr Perm3 kSwap23{0, 2, 1};
inline constexpr Perm3 kSwap13{2, 1, 0};

/// Orders above this need an explicit opt-in before the n^9 mediality loop runs.
inline constexpr std::size_t kMedialDefaultMaxOrder = 4;

struct IdentitySets {
  std::vector<Element> left;
  std::vector<Element> middle;
  std::vector<Element> right;
  std::vector<Element> ternary;  // left & middle & right
};

/// x -> x-bar, the unique solution of [x x z] = x in a ternary group.
struct SkewMap {
  std::vector<Element> table;
  Element operator()(Element x) const { return table[x]; }
  friend bool operator==(const SkewMap&, const SkewMap&) = default;
};

struct GroupStatus {
  /// Set iff the table is a ternary group.
  std::optional<SkewMap> skew;
  /// For non-groups: associativity witness (5 elements) or an unsolvable
  /// equation (a, b, c, slot) with slot 0 = [xab], 1 = [ayb], 2 = [abz].
  std::vector<Element> witness;

  bool is_group() const noexcept { return skew.has_value(); }
};

enum class Cancellation { left, middle, right, all };

/// [[xyz]uv] = [x[yzu]v] = [xy[zuv]] over all quintuples. Witness: (x,y,z,u,v).
Verdict is_associative(const TernaryTable& t);

IdentitySets identities(const TernaryTable& t);

/// Injectivity of the translation in the tested slot(s). Witness: (a, b, x, y) with x < y
/// and equal images; for `all`, the first failing kind in left, middle, right order.
Verdict is_cancellative(const TernaryTable& t, Cancellation kind);

/// [x1 x2 x3] = [x_s(1) x_s(2) x_s(3)] for the given sigma. Witness: (x1, x2, x3).
Verdict is_sigma_commutative(const TernaryTable& t, const Perm3& sigma);
/// sigma = (13).
Verdict is_semicommutative(const TernaryTable& t);
/// Invariance under all of S3, tested on the generators (12) and (23).
Verdict is_commutative(const TernaryTable& t);

/// The nine-argument transpose identity. Returns nullopt without computing when the order
/// exceeds kMedialDefaultMaxOrder and `exhaustive` is false. Witness: x11..x33 row-major.
std::optional<Verdict> is_medial(const TernaryTable& t, bool exhaustive = false);

/// [[xyz]ab] = [[xab][yab][zab]]. Witness: (x,y,z,a,b).
Verdict is_autodistributive(const TernaryTable& t);

std::vector<Element> idempotents(const TernaryTable& t);

/// Decides the ternary group axioms and, on success, computes and cross-checks the skew map
/// against the Dornte relations. Throws DefectError if those checks disagree.
GroupStatus group_status(const TernaryTable& t);

/// [y x x-bar] = [x x-bar y] = y for all x, y. Witness: (x, y).
Verdict satisfies_skew_characterisation(const TernaryTable& t, const SkewMap& skew);

struct PropertyReport {
  std::size_t order = 0;
  Verdict associative;
  Verdict semicommutative;
  Verdict commutative;
  std::optional<Verdict> medial;  // nullopt when skipped
  Verdict idempotent;
  Verdict left_cancellative;
  Verdict middle_cancellative;
  Verdict right_cancellative;
  Verdict autodistributive;
  IdentitySets identities;
  std::vector<Element> idempotents;
  GroupStatus group;
};

PropertyReport classify(const TernaryTable& t, bool exhaustive = false);

/// Enumerates every associative ternary operation on `order` elements (lexicographic cube
/// order) by backtracking with partial associativity checks.
void for_each_associative_table(std::size_t order,
                                const std::function<void(const TernaryTable&)>& visit);

/// Diagnostic: tables of the given order that are middle cancellative but not left and right
/// cancellative, or vice versa. Exhaustive over all n^(n^3) cubes; throws BoundError when that
/// count exceeds `max_tables`.
std::vector<TernaryTable> cancellation_counterexamples(std::size_t order,
                                                       std::size_t max_tables = 1u << 20);

}  // namespace ternary
