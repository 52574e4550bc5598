#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "ternary/catalog.hpp"
#include "ternary/error.hpp"
#include "ternary/predicates.hpp"

using namespace ternary;

namespace {

using Tuple = std::vector<Element>;

// Odometer over all tuples of length k on n letters, lexicographic order.
bool next_tuple(Tuple& v, std::size_t n) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < n) return true;
    v[i] = 0;
  }
  return false;
}

template <typename Pred>
std::optional<Tuple> first_failure(std::size_t n, std::size_t k, Pred&& holds) {
  Tuple v(k, 0);
  do {
    if (!holds(v)) return v;
  } while (next_tuple(v, n));
  return std::nullopt;
}

std::optional<Tuple> naive_assoc(const TernaryTable& t) {
  return first_failure(t.order(), 5, [&](const Tuple& a) {
    const Element l = t(t(a[0], a[1], a[2]), a[3], a[4]);
    return l == t(a[0], t(a[1], a[2], a[3]), a[4]) && l == t(a[0], a[1], t(a[2], a[3], a[4]));
  });
}

bool naive_left_cancel(const TernaryTable& t) {
  const Element n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y)
          if (t(a, b, x) == t(a, b, y)) return false;
  return true;
}
bool naive_middle_cancel(const TernaryTable& t) {
  const Element n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y)
          if (t(a, x, b) == t(a, y, b)) return false;
  return true;
}
bool naive_right_cancel(const TernaryTable& t) {
  const Element n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y)
          if (t(x, a, b) == t(y, a, b)) return false;
  return true;
}

// Every equation [x a b] = c etc. has exactly one solution.
bool naive_is_group(const TernaryTable& t) {
  if (naive_assoc(t)) return false;
  const Element n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        int s0 = 0, s1 = 0, s2 = 0;
        for (Element x = 0; x < n; ++x) {
          s0 += t(x, a, b) == c;
          s1 += t(a, x, b) == c;
          s2 += t(a, b, x) == c;
        }
        if (s0 != 1 || s1 != 1 || s2 != 1) return false;
      }
  return true;
}

TernaryTable random_table(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::vector<Element> cube(n * n * n);
  for (auto& e : cube) e = pick(rng);
  return TernaryTable(Carrier(n), cube);
}

TernaryTable table_from_bits(std::uint32_t bits) {
  std::vector<Element> cube(8);
  for (int i = 0; i < 8; ++i) cube[i] = (bits >> (7 - i)) & 1u;
  return TernaryTable(Carrier(2), cube);
}

std::vector<Element> all_of(std::size_t n) {
  std::vector<Element> v(n);
  for (Element i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Assign cube entries in order, rejecting as soon as two fully known sides of a quintuple differ.
class NaiveAssociativeSearch {
 public:
  explicit NaiveAssociativeSearch(int n) : n_(n), cube_(n * n * n, -1) {}
  std::vector<std::vector<int>> run() {
    rec(0);
    return found_;
  }

 private:
  int at(int x, int y, int z) const { return x < 0 || y < 0 || z < 0 ? -1 : cube_[(x * n_ + y) * n_ + z]; }
  bool consistent() const {
    Tuple v(5, 0);
    do {
      const int a = v[0], b = v[1], c = v[2], d = v[3], e = v[4];
      const int s[3] = {at(at(a, b, c), d, e), at(a, at(b, c, d), e), at(a, b, at(c, d, e))};
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (s[i] >= 0 && s[j] >= 0 && s[i] != s[j]) return false;
    } while (next_tuple(v, n_));
    return true;
  }
  void rec(std::size_t pos) {
    if (pos == cube_.size()) {
      found_.push_back(cube_);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      cube_[pos] = v;
      if (consistent()) rec(pos + 1);
    }
    cube_[pos] = -1;
  }

  int n_;
  std::vector<int> cube_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

TEST(Associativity, EnumerationMatchesNaiveSearch) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<int>> got;
    for_each_associative_table(n, [&](const TernaryTable& t) { got.emplace_back(t.cube().begin(), t.cube().end()); });
    EXPECT_EQ(got, NaiveAssociativeSearch(n).run()) << n;
  }
}

TEST(Associativity, MatchesNaiveOracleWithWitness) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = random_table(rng, 1 + trial % 3);
    auto v = is_associative(t);
    auto w = naive_assoc(t);
    EXPECT_EQ(v.holds, !w.has_value());
    if (w) EXPECT_EQ(v.witness, *w);
  }
  for (const auto& g : catalog::ternary_groups()) EXPECT_TRUE(is_associative(g.table)) << g.name;
}

TEST(Associativity, TwoElementCount) {
  std::size_t naive = 0;
  for (std::uint32_t bits = 0; bits < 256; ++bits) naive += !naive_assoc(table_from_bits(bits));
  std::size_t enumerated = 0;
  for_each_associative_table(2, [&](const TernaryTable& t) {
    ++enumerated;
    EXPECT_FALSE(naive_assoc(t).has_value());
  });
  EXPECT_EQ(enumerated, naive);
  EXPECT_GT(naive, 0u);
}

TEST(Identities, DerivedBoolean) {
  auto ids = identities(catalog::derived_boolean());
  EXPECT_EQ(ids.ternary, all_of(4));
  EXPECT_EQ(ids.left, all_of(4));
}

TEST(Identities, DerivedS3) {
  // index order e, t12, t13, t23, c123, c132
  auto ids = identities(catalog::derived_s3());
  EXPECT_EQ(ids.left, (std::vector<Element>{0, 1, 2, 3}));
  EXPECT_EQ(ids.right, (std::vector<Element>{0, 1, 2, 3}));
  EXPECT_EQ(ids.middle, (std::vector<Element>{0}));
  EXPECT_EQ(ids.ternary, (std::vector<Element>{0}));
}

TEST(Identities, OneDerivedZ4HasNone) {
  auto t = catalog::b_derived_cyclic(4, 1);
  auto ids = identities(t);
  EXPECT_TRUE(ids.left.empty());
  EXPECT_TRUE(ids.middle.empty());
  EXPECT_TRUE(ids.right.empty());
  EXPECT_TRUE(group_status(t).is_group());
}

TEST(Identities, MatchNaiveDefinition) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto t = random_table(rng, 1 + trial % 4);
    const Element n = static_cast<Element>(t.order());
    IdentitySets expect;
    for (Element e = 0; e < n; ++e) {
      bool l = true, m = true, r = true;
      for (Element x = 0; x < n; ++x) {
        l = l && t(e, e, x) == x;
        m = m && t(e, x, e) == x;
        r = r && t(x, e, e) == x;
      }
      if (l) expect.left.push_back(e);
      if (m) expect.middle.push_back(e);
      if (r) expect.right.push_back(e);
      if (l && m && r) expect.ternary.push_back(e);
    }
    auto got = identities(t);
    EXPECT_EQ(got.left, expect.left);
    EXPECT_EQ(got.middle, expect.middle);
    EXPECT_EQ(got.right, expect.right);
    EXPECT_EQ(got.ternary, expect.ternary);
  }
}

TEST(Cancellation, MatchesNaive) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto t = random_table(rng, 1 + trial % 3);
    EXPECT_EQ(is_cancellative(t, Cancellation::left).holds, naive_left_cancel(t));
    EXPECT_EQ(is_cancellative(t, Cancellation::middle).holds, naive_middle_cancel(t));
    EXPECT_EQ(is_cancellative(t, Cancellation::right).holds, naive_right_cancel(t));
    EXPECT_EQ(is_cancellative(t, Cancellation::all).holds,
              naive_left_cancel(t) && naive_middle_cancel(t) && naive_right_cancel(t));
  }
}

TEST(Cancellation, WitnessShape) {
  // [xyz] = x: right cancellative, left and middle fail at the first pair
  auto t = TernaryTable::from_function(Carrier(3), [](Element x, Element, Element) { return x; });
  auto v = is_cancellative(t, Cancellation::middle);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness, (Tuple{0, 0, 0, 1}));
  EXPECT_TRUE(is_cancellative(t, Cancellation::right));
  EXPECT_FALSE(is_cancellative(t, Cancellation::left));
  EXPECT_EQ(is_cancellative(t, Cancellation::all).witness, is_cancellative(t, Cancellation::left).witness);
}

TEST(CancellationEquivalence, AllAssociativeTablesOfOrderTwo) {
  std::size_t seen = 0;
  for_each_associative_table(2, [&](const TernaryTable& t) {
    ++seen;
    const bool middle = naive_middle_cancel(t);
    const bool sides = naive_left_cancel(t) && naive_right_cancel(t);
    EXPECT_EQ(middle, sides);
  });
  EXPECT_GT(seen, 0u);
}

TEST(CancellationEquivalence, AllAssociativeTablesOfOrderThree) {
  std::size_t seen = 0;
  for_each_associative_table(3, [&](const TernaryTable& t) {
    ++seen;
    EXPECT_EQ(is_cancellative(t, Cancellation::middle).holds,
              is_cancellative(t, Cancellation::left).holds && is_cancellative(t, Cancellation::right).holds);
  });
  EXPECT_GT(seen, 0u);
}

TEST(CancellationEquivalence, CatalogTables) {
  for (const auto& g : catalog::ternary_groups()) {
    EXPECT_TRUE(naive_middle_cancel(g.table)) << g.name;
    EXPECT_TRUE(naive_left_cancel(g.table) && naive_right_cancel(g.table)) << g.name;
  }
}

TEST(CancellationEquivalence, GroupoidDiagnosticNeedsAssociativity) {
  // Without associativity the equivalence fails already on two elements.
  auto bad = cancellation_counterexamples(2);
  EXPECT_FALSE(bad.empty());
  for (const auto& t : bad) {
    EXPECT_NE(naive_middle_cancel(t), naive_left_cancel(t) && naive_right_cancel(t));
    EXPECT_TRUE(naive_assoc(t).has_value());
  }
  EXPECT_THROW(cancellation_counterexamples(3), BoundError);
}

TEST(Commutativity, SigmaAndGenerators) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = random_table(rng, 1 + trial % 3);
    const std::size_t n = t.order();
    auto naive = [&](const Perm3& s) {
      return first_failure(n, 3, [&](const Tuple& a) { return t(a[0], a[1], a[2]) == t(a[s[0]], a[s[1]], a[s[2]]); });
    };
    for (const Perm3& s : {kSwap12, kSwap23, kSwap13, Perm3{1, 2, 0}}) {
      auto w = naive(s);
      auto v = is_sigma_commutative(t, s);
      EXPECT_EQ(v.holds, !w);
      if (w) EXPECT_EQ(v.witness, *w);
    }
    bool all = true;
    for (const Perm3& s : {kSwap12, kSwap23, kSwap13, Perm3{1, 2, 0}, Perm3{2, 0, 1}}) all = all && !naive(s);
    EXPECT_EQ(is_commutative(t).holds, all);
    EXPECT_EQ(is_semicommutative(t).holds, !naive(kSwap13));
  }
}

TEST(Commutativity, Catalog) {
  EXPECT_TRUE(is_commutative(catalog::derived_cyclic(5)));
  EXPECT_TRUE(is_commutative(catalog::b_derived_cyclic(4, 1)));
  EXPECT_FALSE(is_commutative(catalog::derived_s3()));
  EXPECT_FALSE(is_semicommutative(catalog::derived_s3()));
  auto a3 = catalog::odd_permutations_s3();
  EXPECT_TRUE(is_semicommutative(a3));
  EXPECT_FALSE(is_commutative(a3));
}

TEST(Medial, NaiveOracleSmallOrders) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = random_table(rng, 1 + trial % 2);
    auto w = first_failure(t.order(), 9, [&](const Tuple& x) {
      return t(t(x[0], x[1], x[2]), t(x[3], x[4], x[5]), t(x[6], x[7], x[8])) ==
             t(t(x[0], x[3], x[6]), t(x[1], x[4], x[7]), t(x[2], x[5], x[8]));
    });
    auto v = is_medial(t);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->holds, !w);
    if (w) EXPECT_EQ(v->witness, *w);
  }
}

TEST(Medial, SemicommutativeAssociativeImpliesMedial) {
  for (const auto& g : catalog::ternary_groups()) {
    if (g.table.order() > kMedialDefaultMaxOrder) continue;
    if (is_semicommutative(g.table)) EXPECT_TRUE(is_medial(g.table)->holds) << g.name;
  }
  EXPECT_FALSE(is_medial(catalog::derived_s3(), true)->holds);
}

TEST(Medial, GatedAboveDefaultOrder) {
  EXPECT_FALSE(is_medial(catalog::derived_cyclic(5)).has_value());
  auto v = is_medial(catalog::derived_cyclic(5), true);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(v->holds);
}

TEST(Autodistributive, MatchesNaive) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto t = random_table(rng, 1 + trial % 3);
    auto w = first_failure(t.order(), 5, [&](const Tuple& a) {
      return t(t(a[0], a[1], a[2]), a[3], a[4]) == t(t(a[0], a[3], a[4]), t(a[1], a[3], a[4]), t(a[2], a[3], a[4]));
    });
    auto v = is_autodistributive(t);
    EXPECT_EQ(v.holds, !w);
    if (w) EXPECT_EQ(v.witness, *w);
  }
}

TEST(Idempotents, MatchDefinition) {
  EXPECT_EQ(idempotents(catalog::derived_boolean()), all_of(4));
  // x+x+x = x mod 3 only for ... 3x = x  <=> 2x = 0 mod 3 <=> x = 0
  EXPECT_EQ(idempotents(catalog::derived_cyclic(3)), (std::vector<Element>{0}));
  EXPECT_EQ(idempotents(catalog::derived_cyclic(4)), (std::vector<Element>{0, 2}));
}

TEST(GroupStatus, MatchesNaiveAndSkew) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 400; ++trial) {
    auto t = random_table(rng, 1 + trial % 3);
    auto g = group_status(t);
    EXPECT_EQ(g.is_group(), naive_is_group(t));
  }
  for (const auto& entry : catalog::ternary_groups()) {
    const auto& t = entry.table;
    auto g = group_status(t);
    ASSERT_TRUE(g.is_group()) << entry.name;
    for (Element x = 0; x < t.order(); ++x) {
      EXPECT_EQ(t(x, x, (*g.skew)(x)), x);
      EXPECT_EQ(t((*g.skew)(x), x, x), x);
      EXPECT_EQ(t(x, (*g.skew)(x), x), x);
    }
    EXPECT_TRUE(satisfies_skew_characterisation(t, *g.skew));
  }
}

TEST(GroupStatus, KnownSkewMaps) {
  // der(Z_n): 2x + xbar = x  =>  xbar = -x
  auto g = group_status(catalog::derived_cyclic(5));
  EXPECT_EQ(g.skew->table, (std::vector<Element>{0, 4, 3, 2, 1}));
  EXPECT_EQ(group_status(catalog::odd_permutations_s3()).skew->table, (std::vector<Element>{0, 1, 2}));
}

TEST(GroupStatus, Witnesses) {
  auto proj = TernaryTable::from_function(Carrier(2), [](Element x, Element, Element) { return x; });
  auto g = group_status(proj);
  EXPECT_FALSE(g.is_group());
  EXPECT_EQ(g.witness.size(), 4u);
  auto nonassoc = TernaryTable::from_function(Carrier(5), [](Element x, Element y, Element z) { return (x + 2 * y + z) % 5; });
  auto h = group_status(nonassoc);
  EXPECT_FALSE(h.is_group());
  EXPECT_EQ(h.witness, *naive_assoc(nonassoc));
}

TEST(SkewCharacterisation, RejectsWrongMap) {
  auto t = catalog::derived_cyclic(3);
  auto v = satisfies_skew_characterisation(t, SkewMap{{0, 1, 2}});
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness.size(), 2u);
}

TEST(Classify, Report) {
  auto r = classify(catalog::derived_boolean());
  EXPECT_EQ(r.order, 4u);
  EXPECT_TRUE(r.associative);
  EXPECT_TRUE(r.idempotent);
  ASSERT_TRUE(r.medial.has_value());
  EXPECT_TRUE(r.group.is_group());
  EXPECT_FALSE(classify(catalog::derived_s3()).medial.has_value());
}

TEST(Invariants, SkewIsAnInvolutiveBijection) {
  for (const auto& g : catalog::ternary_groups()) {
    const auto skew = *group_status(g.table).skew;
    for (Element x = 0; x < g.table.order(); ++x) EXPECT_EQ(skew(skew(x)), x) << g.name;
  }
}

TEST(Invariants, SkewIsAHomomorphismOnMedialGroups) {
  for (const auto& g : catalog::ternary_groups()) {
    const auto& t = g.table;
    const auto medial = is_medial(t, true);
    if (!medial->holds) continue;
    const auto skew = *group_status(t).skew;
    const Element n = static_cast<Element>(t.order());
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) EXPECT_EQ(skew(t(x, y, z)), t(skew(x), skew(y), skew(z))) << g.name;
  }
}

TEST(Invariants, ConstantCube) {
  TernaryTable t(Carrier(2), std::vector<Element>(8, 0));
  EXPECT_TRUE(is_associative(t));
  EXPECT_FALSE(is_cancellative(t, Cancellation::left));
  EXPECT_FALSE(is_cancellative(t, Cancellation::middle));
  EXPECT_FALSE(is_cancellative(t, Cancellation::right));
  EXPECT_FALSE(group_status(t).is_group());
}

TEST(Invariants, SwapCommutativeWithMiddleTranslationIsCommutative) {
  for (const auto& g : catalog::ternary_groups()) {
    const auto& t = g.table;
    if (!is_sigma_commutative(t, kSwap12)) continue;
    const Element n = static_cast<Element>(t.order());
    bool has_ab = false;
    for (Element a = 0; a < n && !has_ab; ++a)
      for (Element b = 0; b < n && !has_ab; ++b) {
        bool all = true;
        for (Element x = 0; x < n; ++x) all = all && t(a, x, b) == x;
        has_ab = all;
      }
    if (has_ab) EXPECT_TRUE(is_commutative(t)) << g.name;
  }
}

TEST(Classify, PureFunction) {
  auto t = catalog::derived_s3();
  auto a = classify(t), b = classify(t);
  EXPECT_EQ(a.associative.holds, b.associative.holds);
  EXPECT_EQ(a.commutative.witness, b.commutative.witness);
  EXPECT_EQ(a.identities.left, b.identities.left);
  EXPECT_EQ(a.group.skew, b.group.skew);
}
