#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ternary/carrier.hpp"
#include "ternary/predicates.hpp"

namespace ternary {

/// A bijection between carriers, x -> map[x].
struct Isomorphism {
  std::vector<Element> map;
  Element operator()(Element x) const { return map[x]; }
  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

/// [xyz] = x * phi(y) * phi^2(z) * b over the retract group (G, *) at `base`.
struct GluskinDecomposition {
  Element base = 0;
  BinaryTable binary_group;  // x * y = [x base y]
  Element identity = 0;      // skew(base)
  std::vector<Element> inverse;
  std::vector<Element> phi;  // x -> [skew(base) x base]
  Element b = 0;             // [a' a' a'] with a' = skew(base)
};

/// Binary group on G x Z2 with (x, s) encoded as x + s*n.
struct PostCover {
  Element base = 0;
  BinaryTable group;
  Element neutral = 0;            // (skew(base), 1)
  std::vector<Element> subgroup;  // H = {(x, 1)}
};

struct MiddleIdentityDerivation {
  Element identity = 0;
  BinaryTable binary;
};

/// [xyz] = x . mu(y) . z with x . y = [x e y] and mu(x) = [e x e].
struct OneSidedDecomposition {
  Element identity = 0;
  bool left_identity = true;
  BinaryTable binary;
  std::vector<Element> mu;
};

enum class Derivedness { yes, no, unknown };

struct DerivedVerdict {
  Derivedness answer = Derivedness::unknown;
  std::optional<MiddleIdentityDerivation> witness;
};

struct BDerivedWitness {
  BinaryTable binary;
  Element b = 0;
};

/// cube(x,y,z) = (x.y).z
TernaryTable derive3(const BinaryTable& b2);
/// cube(x,y,z) = ((x.y).z).b
TernaryTable b_derive3(const BinaryTable& b2, Element b);
/// square(x,y) = [x a y]
BinaryTable retract(const TernaryTable& t, Element a);

/// Binary group checks on a square table.
Verdict is_binary_associative(const BinaryTable& b);
std::optional<Element> binary_identity(const BinaryTable& b);
bool is_binary_group(const BinaryTable& b);
bool is_binary_commutative(const BinaryTable& b);

/// Smallest middle identity e and the retract at e, verified to re-derive t.
/// Precondition: t associative (PreconditionError otherwise).
std::optional<MiddleIdentityDerivation> lemma1_derive(const TernaryTable& t);

/// For two middle identities e and a, the map x -> [x a e] carries ret_e onto ret_a.
/// Throws PreconditionError if either is not a middle identity, DefectError if the map fails.
Isomorphism middle_identity_transport(const TernaryTable& t, Element e, Element a);

/// Uses the smallest left identity, else the smallest right identity.
std::optional<OneSidedDecomposition> lemma2_decompose(const TernaryTable& t);

/// Precondition: t is a ternary group. All identities of the decomposition are verified.
GluskinDecomposition gluskin_hosszu(const TernaryTable& t, Element a);

/// Precondition: t is a ternary group. Builds the four-case product table and verifies the
/// group axioms, neutral element, inverse formulas, normality and index of H, and the embedding.
PostCover post_cover(const TernaryTable& t, Element c);

/// The order-2 quotient G*/H as a coset multiplication table (coset of H is 0).
BinaryTable post_quotient(const PostCover& cover);

/// Backtracking search for h with h(x.y) = h(x).h(y). Candidates are pruned by iteration
/// invariants (tail length and period of y -> y.x). Returns the lexicographically first map.
std::optional<Isomorphism> find_isomorphism(const BinaryTable& from, const BinaryTable& to);

/// Precondition: t is a ternary group. Throws DefectError if no isomorphism exists.
std::optional<Isomorphism> retracts_isomorphic(const TernaryTable& t, Element a, Element b);

/// Precondition: t associative.
DerivedVerdict is_derived(const TernaryTable& t);

/// Precondition: t a commutative ternary group. Retract at 0 with b = [0' 0' 0'].
BDerivedWitness commutative_bderived_witness(const TernaryTable& t);

std::string to_string(Derivedness d);

}  // namespace ternary
