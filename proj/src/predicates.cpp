#include "ternary/predicates.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ternary/error.hpp"

namespace ternary {

namespace {

Element order_of(const TernaryTable& t) { return static_cast<Element>(t.order()); }

// First (a, b) whose translation in `slot` is not injective; witness (a, b, x, y).
Verdict translation_injective(const TernaryTable& t, int slot) {
  const Element n = order_of(t);
  std::vector<Element> seen(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      std::fill(seen.begin(), seen.end(), n);
      for (Element x = 0; x < n; ++x) {
        const Element r = slot == 0 ? t(x, a, b) : slot == 1 ? t(a, x, b) : t(a, b, x);
        if (seen[r] != n) return Verdict::fail({a, b, seen[r], x});
        seen[r] = x;
      }
    }
  return Verdict::pass();
}

// Slot meaning as in translation_injective: 0 right, 1 middle, 2 left.
Verdict translation_surjective(const TernaryTable& t, int slot) {
  const Element n = order_of(t);
  std::vector<bool> hit(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      std::fill(hit.begin(), hit.end(), false);
      for (Element x = 0; x < n; ++x)
        hit[slot == 0 ? t(x, a, b) : slot == 1 ? t(a, x, b) : t(a, b, x)] = true;
      for (Element c = 0; c < n; ++c)
        if (!hit[c]) return Verdict::fail({a, b, c, static_cast<Element>(slot)});
    }
  return Verdict::pass();
}

void check_dornte(const TernaryTable& t, const SkewMap& s) {
  const Element n = order_of(t);
  auto defect = [](const std::string& what) {
    throw DefectError("ternary group skew map violates " + what);
  };
  for (Element x = 0; x < n; ++x) {
    if (t(x, x, s(x)) != x || t(x, s(x), x) != x || t(s(x), x, x) != x)
      defect("[x x x'] = [x x' x] = [x' x x] = x");
    if (s(s(x)) != x) defect("double skew = identity");
    for (Element y = 0; y < n; ++y) {
      if (t(y, x, s(x)) != y || t(y, s(x), x) != y || t(x, s(x), y) != y ||
          t(s(x), x, y) != y)
        defect("[y x x'] = [y x' x] = [x x' y] = [x' x y] = y");
      for (Element z = 0; z < n; ++z)
        if (s(t(x, y, z)) != t(s(z), s(y), s(x))) defect("[xyz]' = [z' y' x']");
    }
  }
}

}  // namespace

Verdict is_associative(const TernaryTable& t) {
  const Element n = order_of(t);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const Element xyz = t(x, y, z);
        for (Element u = 0; u < n; ++u) {
          const Element yzu = t(y, z, u);
          for (Element v = 0; v < n; ++v) {
            const Element left = t(xyz, u, v);
            if (left != t(x, yzu, v) || left != t(x, y, t(z, u, v)))
              return Verdict::fail({x, y, z, u, v});
          }
        }
      }
  return Verdict::pass();
}

IdentitySets identities(const TernaryTable& t) {
  const Element n = order_of(t);
  IdentitySets ids;
  for (Element e = 0; e < n; ++e) {
    bool left = true, middle = true, right = true;
    for (Element x = 0; x < n; ++x) {
      left = left && t(e, e, x) == x;
      middle = middle && t(e, x, e) == x;
      right = right && t(x, e, e) == x;
    }
    if (left) ids.left.push_back(e);
    if (middle) ids.middle.push_back(e);
    if (right) ids.right.push_back(e);
    if (left && middle && right) ids.ternary.push_back(e);
  }
  return ids;
}

Verdict is_cancellative(const TernaryTable& t, Cancellation kind) {
  switch (kind) {
    case Cancellation::left:
      return translation_injective(t, 2);
    case Cancellation::middle:
      return translation_injective(t, 1);
    case Cancellation::right:
      return translation_injective(t, 0);
    case Cancellation::all:
      for (auto k : {Cancellation::left, Cancellation::middle, Cancellation::right})
        if (auto v = is_cancellative(t, k); !v) return v;
      return Verdict::pass();
  }
  return Verdict::pass();
}

Verdict is_sigma_commutative(const TernaryTable& t, const Perm3& sigma) {
  const Element n = order_of(t);
  std::array<Element, 3> a{};
  for (a[0] = 0; a[0] < n; ++a[0])
    for (a[1] = 0; a[1] < n; ++a[1])
      for (a[2] = 0; a[2] < n; ++a[2])
        if (t(a[0], a[1], a[2]) != t(a[sigma[0]], a[sigma[1]], a[sigma[2]]))
          return Verdict::fail({a[0], a[1], a[2]});
  return Verdict::pass();
}

Verdict is_semicommutative(const TernaryTable& t) { return is_sigma_commutative(t, kSwap13); }

Verdict is_commutative(const TernaryTable& t) {
  // (12) and (23) generate S3.
  if (auto v = is_sigma_commutative(t, kSwap12); !v) return v;
  return is_sigma_commutative(t, kSwap23);
}

std::optional<Verdict> is_medial(const TernaryTable& t, bool exhaustive) {
  const Element n = order_of(t);
  if (n > kMedialDefaultMaxOrder && !exhaustive) return std::nullopt;
  std::array<Element, 9> x{};
  // Nested loops over the 3x3 argument matrix; the first row's products are hoisted.
  for (x[0] = 0; x[0] < n; ++x[0])
    for (x[1] = 0; x[1] < n; ++x[1])
      for (x[2] = 0; x[2] < n; ++x[2]) {
        const Element r0 = t(x[0], x[1], x[2]);
        for (x[3] = 0; x[3] < n; ++x[3])
          for (x[4] = 0; x[4] < n; ++x[4])
            for (x[5] = 0; x[5] < n; ++x[5]) {
              const Element r1 = t(x[3], x[4], x[5]);
              for (x[6] = 0; x[6] < n; ++x[6])
                for (x[7] = 0; x[7] < n; ++x[7])
                  for (x[8] = 0; x[8] < n; ++x[8]) {
                    const Element lhs = t(r0, r1, t(x[6], x[7], x[8]));
                    const Element rhs = t(t(x[0], x[3], x[6]), t(x[1], x[4], x[7]),
                                          t(x[2], x[5], x[8]));
                    if (lhs != rhs) return Verdict::fail({x.begin(), x.end()});
                  }
            }
      }
  return Verdict::pass();
}

Verdict is_autodistributive(const TernaryTable& t) {
  const Element n = order_of(t);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        for (Element a = 0; a < n; ++a)
          for (Element b = 0; b < n; ++b)
            if (t(t(x, y, z), a, b) != t(t(x, a, b), t(y, a, b), t(z, a, b)))
              return Verdict::fail({x, y, z, a, b});
  return Verdict::pass();
}

std::vector<Element> idempotents(const TernaryTable& t) {
  std::vector<Element> out;
  for (Element x = 0; x < order_of(t); ++x)
    if (t(x, x, x) == x) out.push_back(x);
  return out;
}

Verdict satisfies_skew_characterisation(const TernaryTable& t, const SkewMap& skew) {
  const Element n = order_of(t);
  if (skew.table.size() != n) throw InputError("skew map size does not match table order");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (t(y, x, skew(x)) != y || t(x, skew(x), y) != y) return Verdict::fail({x, y});
  return Verdict::pass();
}

GroupStatus group_status(const TernaryTable& t) {
  GroupStatus status;
  if (auto assoc = is_associative(t); !assoc) {
    status.witness = std::move(assoc.witness);
    return status;
  }
  for (int slot : {0, 1, 2})
    if (auto solv = translation_surjective(t, slot); !solv) {
      status.witness = std::move(solv.witness);
      return status;
    }

  const Element n = order_of(t);
  SkewMap skew;
  skew.table.reserve(n);
  for (Element x = 0; x < n; ++x) {
    Element found = n;
    for (Element z = 0; z < n; ++z)
      if (t(x, x, z) == x) {
        if (found != n) throw DefectError("[x x z] = x has two solutions in a ternary group");
        found = z;
      }
    if (found == n) throw DefectError("[x x z] = x has no solution in a ternary group");
    skew.table.push_back(found);
  }
  if (!satisfies_skew_characterisation(t, skew))
    throw DefectError("ternary group fails the skew characterisation identities");
  check_dornte(t, skew);
  status.skew = std::move(skew);
  return status;
}

PropertyReport classify(const TernaryTable& t, bool exhaustive) {
  PropertyReport r;
  r.order = t.order();
  r.associative = is_associative(t);
  r.semicommutative = is_semicommutative(t);
  r.commutative = is_commutative(t);
  r.medial = is_medial(t, exhaustive);
  r.idempotents = idempotents(t);
  r.idempotent = Verdict::pass();
  for (Element x = 0; x < order_of(t); ++x)
    if (t(x, x, x) != x) {
      r.idempotent = Verdict::fail({x});
      break;
    }
  r.left_cancellative = is_cancellative(t, Cancellation::left);
  r.middle_cancellative = is_cancellative(t, Cancellation::middle);
  r.right_cancellative = is_cancellative(t, Cancellation::right);
  r.autodistributive = is_autodistributive(t);
  r.identities = identities(t);
  r.group = group_status(t);
  return r;
}

void for_each_associative_table(std::size_t order,
                                const std::function<void(const TernaryTable&)>& visit) {
  if (order == 0) throw InputError("order must be positive");
  const std::size_t n = order;
  const std::size_t slots = n * n * n;
  constexpr Element kUnset = std::numeric_limits<Element>::max();
  std::vector<Element> cube(slots, kUnset);

  auto at = [&](std::size_t x, std::size_t y, std::size_t z) { return cube[(x * n + y) * n + z]; };

  // Quintuples grouped by the largest of their three inner slots; only groups at or below the
  // current depth can be fully evaluated.
  std::vector<std::vector<std::array<Element, 5>>> by_depth(slots);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        for (Element u = 0; u < n; ++u)
          for (Element v = 0; v < n; ++v) {
            const std::size_t deepest =
                std::max({(x * n + y) * n + z, (y * n + z) * n + u, (z * n + u) * n + v});
            by_depth[deepest].push_back({x, y, z, u, v});
          }

  auto consistent = [&](std::size_t depth) {
    for (std::size_t d = 0; d <= depth; ++d)
      for (const auto& q : by_depth[d]) {
        const Element xyz = at(q[0], q[1], q[2]);
        const Element yzu = at(q[1], q[2], q[3]);
        const Element zuv = at(q[2], q[3], q[4]);
        const Element a = at(xyz, q[3], q[4]);
        const Element b = at(q[0], yzu, q[4]);
        const Element c = at(q[0], q[1], zuv);
        if (a != kUnset && b != kUnset && a != b) return false;
        if (a != kUnset && c != kUnset && a != c) return false;
        if (b != kUnset && c != kUnset && b != c) return false;
      }
    return true;
  };

  const Carrier carrier(n);
  std::function<void(std::size_t)> fill = [&](std::size_t depth) {
    if (depth == slots) {
      visit(TernaryTable(carrier, cube));
      return;
    }
    for (Element value = 0; value < n; ++value) {
      cube[depth] = value;
      if (consistent(depth)) fill(depth + 1);
    }
    cube[depth] = kUnset;
  };
  fill(0);
}

std::vector<TernaryTable> cancellation_counterexamples(std::size_t order, std::size_t max_tables) {
  if (order == 0) throw InputError("order must be positive");
  const std::size_t slots = order * order * order;
  std::size_t total = 1;
  for (std::size_t i = 0; i < slots; ++i) {
    if (total > max_tables / order)
      throw BoundError("exhaustive groupoid search of order " + std::to_string(order) +
                       " exceeds the bound of " + std::to_string(max_tables) + " tables");
    total *= order;
  }
  const Carrier carrier(order);
  std::vector<TernaryTable> found;
  std::vector<Element> cube(slots, 0);
  for (std::size_t index = 0; index < total; ++index) {
    std::size_t rest = index;
    for (std::size_t s = slots; s-- > 0;) {
      cube[s] = static_cast<Element>(rest % order);
      rest /= order;
    }
    TernaryTable t(carrier, cube);
    const bool middle = is_cancellative(t, Cancellation::middle).holds;
    const bool sides = is_cancellative(t, Cancellation::left).holds &&
                       is_cancellative(t, Cancellation::right).holds;
    if (middle != sides) found.push_back(std::move(t));
  }
  return found;
}

}  // namespace ternary
