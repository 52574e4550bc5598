#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "ternary/catalog.hpp"
#include "ternary/constructions.hpp"
#include "ternary/error.hpp"
#include "ternary/predicates.hpp"

using namespace ternary;

namespace {

bool naive_binary_assoc(const BinaryTable& b) {
  const Element n = static_cast<Element>(b.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (b(b(x, y), z) != b(x, b(y, z))) return false;
  return true;
}

bool naive_is_homomorphism(const BinaryTable& from, const BinaryTable& to, const std::vector<Element>& h) {
  const Element n = static_cast<Element>(from.order());
  std::vector<Element> sorted = h;
  std::sort(sorted.begin(), sorted.end());
  for (Element i = 0; i < n; ++i)
    if (sorted[i] != i) return false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (h[from(x, y)] != to(h[x], h[y])) return false;
  return true;
}

// x-bar as the unique solution of [x x z] = x
Element naive_skew(const TernaryTable& t, Element x) {
  for (Element z = 0; z < t.order(); ++z)
    if (t(x, x, z) == x) return z;
  ADD_FAILURE() << "no skew element";
  return 0;
}

// Four cases of the cover, written out separately from the library.
BinaryTable naive_cover(const TernaryTable& t, Element c) {
  const Element n = static_cast<Element>(t.order());
  const Element cbar = naive_skew(t, c);
  return BinaryTable::from_function(Carrier(2 * n), [&](Element u, Element v) -> Element {
    const Element x = u % n, s = u / n, y = v % n, r = v / n;
    if (s == 0 && r == 0) return t(x, y, cbar) + n;
    if (s == 0 && r == 1) return t(x, y, c);
    if (s == 1 && r == 0) return t(x, c, y);
    return t(x, c, y) + n;
  });
}

}  // namespace

TEST(Derive, MatchesComposition) {
  auto s3 = catalog::symmetric_group_s3();
  auto t = derive3(s3);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y)
      for (Element z = 0; z < 6; ++z) EXPECT_EQ(t(x, y, z), s3(s3(x, y), z));
  EXPECT_FALSE(is_commutative(t));
  EXPECT_TRUE(is_associative(t));
  auto z2 = derive3(catalog::cyclic_group(2));
  for (Element x = 0; x < 2; ++x)
    for (Element y = 0; y < 2; ++y)
      for (Element z = 0; z < 2; ++z) EXPECT_EQ(z2(x, y, z), (x + y + z) % 2);
}

TEST(BDerive, ZeroEqualsDerive) {
  auto z4 = catalog::cyclic_group(4);
  EXPECT_EQ(b_derive3(z4, 0), derive3(z4));
  auto t = b_derive3(z4, 1);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y)
      for (Element z = 0; z < 4; ++z) EXPECT_EQ(t(x, y, z), (x + y + z + 1) % 4);
  EXPECT_EQ(t, catalog::b_derived_cyclic(4, 1));
}

TEST(BDerive, AssociativeExactlyForCentralB) {
  auto s3 = catalog::symmetric_group_s3();
  for (Element b = 0; b < 6; ++b) {
    bool central = true;
    for (Element g = 0; g < 6; ++g) central = central && s3(b, g) == s3(g, b);
    EXPECT_EQ(is_associative(b_derive3(s3, b)).holds, central) << b;
  }
}

TEST(Retract, Examples) {
  EXPECT_EQ(retract(catalog::derived_cyclic(3), 0), catalog::cyclic_group(3));
  auto a3 = catalog::odd_permutations_s3();
  for (Element a = 0; a < 3; ++a) {
    auto r = retract(a3, a);
    EXPECT_TRUE(is_binary_group(r));
    auto iso = find_isomorphism(r, catalog::cyclic_group(3));
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(naive_is_homomorphism(r, catalog::cyclic_group(3), iso->map));
  }
}

TEST(Retract, GroupWithSkewIdentity) {
  for (const auto& g : catalog::ternary_groups()) {
    const auto& t = g.table;
    for (Element a = 0; a < t.order(); ++a) {
      auto r = retract(t, a);
      EXPECT_TRUE(is_binary_group(r)) << g.name;
      EXPECT_EQ(binary_identity(r), naive_skew(t, a)) << g.name;
    }
  }
}

TEST(BinaryChecks, MatchNaive) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(is_binary_group(catalog::cyclic_group(n)));
  auto sub = BinaryTable::from_function(Carrier(3), [](Element x, Element y) { return (x + 3 - y) % 3; });
  EXPECT_FALSE(is_binary_associative(sub).holds);
  EXPECT_FALSE(naive_binary_assoc(sub));
  EXPECT_FALSE(is_binary_group(sub));
  auto zero = BinaryTable::from_function(Carrier(2), [](Element, Element) { return 0; });
  EXPECT_TRUE(is_binary_associative(zero));
  EXPECT_FALSE(binary_identity(zero).has_value());
  EXPECT_FALSE(is_binary_commutative(catalog::symmetric_group_s3()));
  EXPECT_TRUE(is_binary_commutative(catalog::boolean_group()));
}

TEST(MiddleIdentityDerive, RecoversBinaryOperation) {
  auto d = lemma1_derive(catalog::derived_cyclic(2));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->identity, 0u);
  EXPECT_EQ(d->binary, catalog::cyclic_group(2));
  EXPECT_FALSE(lemma1_derive(catalog::b_derived_cyclic(4, 1)).has_value());
  auto s = lemma1_derive(catalog::derived_s3());
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(derive3(s->binary), catalog::derived_s3());
  auto bad = TernaryTable::from_function(Carrier(5), [](Element x, Element y, Element z) { return (x + 2 * y + z) % 5; });
  ASSERT_FALSE(is_associative(bad));
  EXPECT_THROW(lemma1_derive(bad), PreconditionError);
}

TEST(MiddleIdentityDerive, TwoMiddleIdentitiesGiveIsomorphicRetracts) {
  auto t = catalog::derived_boolean();
  for (Element e = 0; e < 4; ++e)
    for (Element a = 0; a < 4; ++a) {
      auto iso = middle_identity_transport(t, e, a);
      for (Element x = 0; x < 4; ++x) EXPECT_EQ(iso.map[x], t(x, a, e));
      EXPECT_TRUE(naive_is_homomorphism(retract(t, e), retract(t, a), iso.map));
    }
  EXPECT_THROW(middle_identity_transport(catalog::derived_s3(), 0, 1), PreconditionError);
}

TEST(OneSidedDecompose, DerivedS3WithTranspositions) {
  auto t = catalog::derived_s3();
  auto d = lemma2_decompose(t);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->identity, 0u);
  EXPECT_TRUE(d->left_identity);
  const auto& dot = d->binary;
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) {
      EXPECT_EQ(dot(x, y), t(x, d->identity, y));
      EXPECT_EQ(d->mu[dot(x, y)], dot(d->mu[x], d->mu[y]));
      for (Element z = 0; z < 6; ++z) EXPECT_EQ(t(x, y, z), dot(dot(x, d->mu[y]), z));
    }
}

TEST(OneSidedDecompose, TranspositionAsOneSidedIdentity) {
  // Check the decomposition formulas directly with e = t12 (index 1).
  auto t = catalog::derived_s3();
  const Element e = 1;
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y)
      for (Element z = 0; z < 6; ++z) {
        const Element xy = t(x, e, t(e, y, e));
        EXPECT_EQ(t(x, y, z), t(xy, e, z));
      }
}

TEST(OneSidedDecompose, Examples) {
  auto z2 = lemma2_decompose(catalog::derived_cyclic(2));
  ASSERT_TRUE(z2.has_value());
  EXPECT_EQ(z2->mu, (std::vector<Element>{0, 1}));
  EXPECT_FALSE(lemma2_decompose(catalog::b_derived_cyclic(4, 1)).has_value());
}

TEST(Gluskin, ReconstructionForEveryBasePoint) {
  for (const auto& g : catalog::ternary_groups()) {
    const auto& t = g.table;
    const Element n = static_cast<Element>(t.order());
    const bool medial = is_medial(t, true)->holds;
    for (Element a = 0; a < n; ++a) {
      auto d = gluskin_hosszu(t, a);
      const Element abar = naive_skew(t, a);
      EXPECT_EQ(d.identity, abar);
      EXPECT_EQ(d.b, t(abar, abar, abar));
      const auto& op = d.binary_group;
      for (Element x = 0; x < n; ++x) {
        EXPECT_EQ(d.phi[x], t(abar, x, a));
        EXPECT_EQ(op(x, d.inverse[x]), abar);
        for (Element y = 0; y < n; ++y) EXPECT_EQ(op(x, y), t(x, a, y));
      }
      EXPECT_TRUE(naive_is_homomorphism(op, op, d.phi)) << g.name << " a=" << a;
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element z = 0; z < n; ++z)
            EXPECT_EQ(t(x, y, z), op(op(op(x, d.phi[y]), d.phi[d.phi[z]]), d.b)) << g.name;
      if (medial) {
        EXPECT_TRUE(is_binary_commutative(op)) << g.name;
        for (Element x = 0; x < n; ++x) EXPECT_EQ(d.phi[d.phi[x]], x) << g.name;
      }
    }
  }
}

TEST(Gluskin, DerivedZ3AtZero) {
  auto d = gluskin_hosszu(catalog::derived_cyclic(3), 0);
  EXPECT_EQ(d.phi, (std::vector<Element>{0, 1, 2}));
  EXPECT_EQ(d.b, 0u);
  EXPECT_EQ(d.binary_group, catalog::cyclic_group(3));
}

TEST(Gluskin, RejectsNonGroup) {
  TernaryTable t(Carrier(2), std::vector<Element>(8, 0));
  EXPECT_THROW(gluskin_hosszu(t, 0), PreconditionError);
  EXPECT_THROW(post_cover(t, 0), PreconditionError);
  EXPECT_THROW(retracts_isomorphic(t, 0, 1), PreconditionError);
}

TEST(PostCover, MatchesFourCaseTableAndAxioms) {
  for (const auto& g : catalog::ternary_groups()) {
    const auto& t = g.table;
    const Element n = static_cast<Element>(t.order());
    for (Element c = 0; c < n; ++c) {
      auto cover = post_cover(t, c);
      const auto& G = cover.group;
      const auto expect = naive_cover(t, c);
      EXPECT_EQ(G.square().size(), expect.square().size());
      EXPECT_TRUE(std::equal(G.square().begin(), G.square().end(), expect.square().begin())) << g.name;
      EXPECT_EQ(G.order(), 2u * n);
      EXPECT_TRUE(naive_binary_assoc(G)) << g.name;
      const Element cbar = naive_skew(t, c);
      EXPECT_EQ(cover.neutral, cbar + n);
      for (Element u = 0; u < 2 * n; ++u) {
        EXPECT_EQ(G(cover.neutral, u), u);
        EXPECT_EQ(G(u, cover.neutral), u);
      }
      for (Element x = 0; x < n; ++x) {
        const Element xbar = naive_skew(t, x);
        EXPECT_EQ(G(x, xbar), cover.neutral) << g.name;
        const Element inv1 = t(cbar, xbar, cbar) + n;
        EXPECT_EQ(G(x + n, inv1), cover.neutral) << g.name;
        EXPECT_EQ(G(inv1, x + n), cover.neutral) << g.name;
      }
      std::vector<Element> h(n);
      std::iota(h.begin(), h.end(), n);
      EXPECT_EQ(cover.subgroup, h);
      // H closed, normal; sectors multiply like Z2.
      for (Element u = 0; u < 2 * n; ++u)
        for (Element v = 0; v < 2 * n; ++v) EXPECT_EQ(G(u, v) / n, (u / n + v / n + 1) % 2);
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element z = 0; z < n; ++z) EXPECT_EQ(G(G(x, y), z), t(x, y, z)) << g.name;
    }
  }
}

TEST(PostCover, QuotientIsZ2) {
  auto cover = post_cover(catalog::derived_cyclic(2), 0);
  EXPECT_EQ(cover.group.order(), 4u);
  auto q = post_quotient(cover);
  EXPECT_EQ(q.order(), 2u);
  EXPECT_EQ(q.carrier().labels(), (std::vector<std::string>{"H", "gH"}));
  EXPECT_TRUE(find_isomorphism(q, catalog::cyclic_group(2)).has_value());
}

TEST(PostCover, DerivedZ3CoverIsZ6) {
  auto cover = post_cover(catalog::derived_cyclic(3), 0);
  auto iso = find_isomorphism(cover.group, catalog::cyclic_group(6));
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(naive_is_homomorphism(cover.group, catalog::cyclic_group(6), iso->map));
  EXPECT_FALSE(find_isomorphism(post_cover(catalog::odd_permutations_s3(), 0).group, catalog::cyclic_group(6)));
}

TEST(PostCover, Labels) {
  auto cover = post_cover(catalog::odd_permutations_s3(), 0);
  EXPECT_EQ(cover.group.carrier().label(0), "t12.0");
  EXPECT_EQ(cover.group.carrier().label(5), "t23.1");
}

TEST(Isomorphism, AllRetractPairs) {
  for (const auto& g : catalog::ternary_groups()) {
    const auto& t = g.table;
    for (Element a = 0; a < t.order(); ++a)
      for (Element b = 0; b < t.order(); ++b) {
        auto iso = retracts_isomorphic(t, a, b);
        ASSERT_TRUE(iso.has_value()) << g.name;
        EXPECT_TRUE(naive_is_homomorphism(retract(t, a), retract(t, b), iso->map));
        if (a == b) {
          std::vector<Element> id(t.order());
          std::iota(id.begin(), id.end(), 0);
          EXPECT_EQ(iso->map, id);
        }
      }
  }
}

TEST(Isomorphism, NonIsomorphic) {
  EXPECT_FALSE(find_isomorphism(catalog::cyclic_group(4), catalog::boolean_group()).has_value());
  EXPECT_FALSE(find_isomorphism(catalog::cyclic_group(6), catalog::symmetric_group_s3()).has_value());
  EXPECT_FALSE(find_isomorphism(catalog::cyclic_group(2), catalog::cyclic_group(3)).has_value());
  EXPECT_TRUE(find_isomorphism(catalog::cyclic_group(4), catalog::cyclic_group(4)).has_value());
}

TEST(Isomorphism, LexicographicallyFirst) {
  // Z5 -> Z5: automorphisms x -> kx; the first in lexicographic order is the identity.
  auto iso = find_isomorphism(catalog::cyclic_group(5), catalog::cyclic_group(5));
  EXPECT_EQ(iso->map, (std::vector<Element>{0, 1, 2, 3, 4}));
  // Relabelled Z3 with identity at index 2.
  auto shifted = BinaryTable::from_function(Carrier(3), [](Element x, Element y) { return (x + y + 1) % 3; });
  auto m = find_isomorphism(catalog::cyclic_group(3), shifted);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->map[0], 2u);
  EXPECT_EQ(m->map, (std::vector<Element>{2, 0, 1}));
}

TEST(Derived, Decisions) {
  EXPECT_EQ(is_derived(catalog::odd_permutations_s3()).answer, Derivedness::no);
  EXPECT_EQ(is_derived(catalog::b_derived_cyclic(4, 1)).answer, Derivedness::no);
  auto b = is_derived(catalog::derived_boolean());
  EXPECT_EQ(b.answer, Derivedness::yes);
  ASSERT_TRUE(b.witness.has_value());
  EXPECT_EQ(derive3(b.witness->binary), catalog::derived_boolean());
  // Non-group semigroup without a middle identity: [xyz] = x.
  auto proj = TernaryTable::from_function(Carrier(2), [](Element x, Element, Element) { return x; });
  EXPECT_EQ(is_derived(proj).answer, Derivedness::unknown);
  // Non-group with a middle identity: min(x, y, z), where 2 is the middle identity.
  auto meet = TernaryTable::from_function(Carrier(3), [](Element x, Element y, Element z) { return std::min({x, y, z}); });
  EXPECT_EQ(is_derived(meet).answer, Derivedness::yes);
  EXPECT_EQ(to_string(Derivedness::unknown), "unknown");
}

TEST(Derived, GroupWithIdentityIsDerived) {
  for (const auto& g : catalog::ternary_groups()) {
    const bool has_identity = !identities(g.table).ternary.empty();
    EXPECT_EQ(is_derived(g.table).answer == Derivedness::yes, has_identity) << g.name;
  }
}

TEST(BDerivedWitness, CommutativeGroups) {
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    auto t = catalog::derived_cyclic(n);
    auto w = commutative_bderived_witness(t);
    EXPECT_EQ(b_derive3(w.binary, w.b), t);
    EXPECT_EQ(w.b, 0u);
  }
  auto t = catalog::b_derived_cyclic(4, 1);
  auto w = commutative_bderived_witness(t);
  EXPECT_TRUE(is_binary_group(w.binary));
  EXPECT_TRUE(is_binary_commutative(w.binary));
  EXPECT_EQ(b_derive3(w.binary, w.b), t);
  EXPECT_EQ(w.b, t(naive_skew(t, 0), naive_skew(t, 0), naive_skew(t, 0)));
}

TEST(BDerivedWitness, OddPermutationsAreNotCommutative) {
  EXPECT_THROW(commutative_bderived_witness(catalog::odd_permutations_s3()), PreconditionError);
  EXPECT_THROW(commutative_bderived_witness(catalog::derived_s3()), PreconditionError);
}

TEST(RoundTrips, RetractOfDerive) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(retract(derive3(catalog::cyclic_group(n)), 0), catalog::cyclic_group(n));
  EXPECT_EQ(retract(derive3(catalog::symmetric_group_s3()), 0), catalog::symmetric_group_s3());
}

TEST(Invariants, IdempotentGroupsSatisfySkewFreeIdentities) {
  for (const auto& g : catalog::ternary_groups()) {
    const auto& t = g.table;
    if (idempotents(t).size() != t.order()) continue;
    for (Element x = 0; x < t.order(); ++x)
      for (Element y = 0; y < t.order(); ++y) {
        EXPECT_EQ(t(y, x, x), y) << g.name;
        EXPECT_EQ(t(x, x, y), y) << g.name;
      }
  }
}
