#include "ternary/constructions.hpp"

#include <algorithm>
#include <functional>

#include "ternary/error.hpp"

namespace ternary {

namespace {

Element order_of(const TernaryTable& t) { return static_cast<Element>(t.order()); }

void require_element(std::size_t n, Element x, const char* what) {
  if (x >= n)
    throw InputError(std::string(what) + " " + std::to_string(x) + " out of range for order " +
                     std::to_string(n));
}

SkewMap require_group(const TernaryTable& t, const char* operation) {
  auto status = group_status(t);
  if (!status.is_group())
    throw PreconditionError(std::string(operation) + " requires a ternary group");
  return *status.skew;
}

void require_associative(const TernaryTable& t, const char* operation) {
  if (!is_associative(t))
    throw PreconditionError(std::string(operation) + " requires an associative table");
}

bool is_bijection(const std::vector<Element>& map) {
  std::vector<bool> hit(map.size(), false);
  for (Element y : map) {
    if (y >= map.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

// (tail, period) of the sequence x, x.x, (x.x).x, ...
std::pair<std::size_t, std::size_t> iteration_shape(const BinaryTable& b, Element x) {
  std::vector<std::size_t> first_seen(b.order(), b.order() + 1);
  Element y = x;
  for (std::size_t step = 0;; ++step) {
    if (first_seen[y] <= b.order()) return {first_seen[y], step - first_seen[y]};
    first_seen[y] = step;
    y = b(y, x);
  }
}

}  // namespace

TernaryTable derive3(const BinaryTable& b2) {
  return TernaryTable::from_function(b2.carrier(),
                                     [&](Element x, Element y, Element z) { return b2(b2(x, y), z); });
}

TernaryTable b_derive3(const BinaryTable& b2, Element b) {
  require_element(b2.order(), b, "b-derivation element");
  return TernaryTable::from_function(
      b2.carrier(), [&](Element x, Element y, Element z) { return b2(b2(b2(x, y), z), b); });
}

BinaryTable retract(const TernaryTable& t, Element a) {
  require_element(t.order(), a, "retract base point");
  return BinaryTable::from_function(t.carrier(), [&](Element x, Element y) { return t(x, a, y); });
}

Verdict is_binary_associative(const BinaryTable& b) {
  const auto n = static_cast<Element>(b.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (b(b(x, y), z) != b(x, b(y, z))) return Verdict::fail({x, y, z});
  return Verdict::pass();
}

std::optional<Element> binary_identity(const BinaryTable& b) {
  const auto n = static_cast<Element>(b.order());
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = b(e, x) == x && b(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_binary_group(const BinaryTable& b) {
  if (!is_binary_associative(b)) return false;
  const auto e = binary_identity(b);
  if (!e) return false;
  const auto n = static_cast<Element>(b.order());
  for (Element x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (Element y = 0; y < n && !has_inverse; ++y) has_inverse = b(x, y) == *e && b(y, x) == *e;
    if (!has_inverse) return false;
  }
  return true;
}

bool is_binary_commutative(const BinaryTable& b) {
  const auto n = static_cast<Element>(b.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (b(x, y) != b(y, x)) return false;
  return true;
}

std::optional<MiddleIdentityDerivation> lemma1_derive(const TernaryTable& t) {
  require_associative(t, "lemma1_derive");
  const auto ids = identities(t);
  if (ids.middle.empty()) return std::nullopt;
  const Element e = ids.middle.front();
  MiddleIdentityDerivation d{e, retract(t, e)};
  if (derive3(d.binary) != t)
    throw DefectError("retract at a middle identity does not re-derive the table");
  return d;
}

Isomorphism middle_identity_transport(const TernaryTable& t, Element e, Element a) {
  require_associative(t, "middle_identity_transport");
  const Element n = order_of(t);
  require_element(n, e, "middle identity");
  require_element(n, a, "middle identity");
  for (Element y = 0; y < n; ++y)
    if (t(e, y, e) != y || t(a, y, a) != y)
      throw PreconditionError("middle_identity_transport requires two middle identities");

  Isomorphism phi;
  for (Element x = 0; x < n; ++x) phi.map.push_back(t(x, a, e));
  const auto from = retract(t, e);
  const auto to = retract(t, a);
  if (!is_bijection(phi.map) || phi(e) != a)
    throw DefectError("x -> [x a e] is not a bijection sending e to a");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (phi(from(x, y)) != to(phi(x), phi(y)))
        throw DefectError("x -> [x a e] is not a homomorphism of retracts");
  return phi;
}

std::optional<OneSidedDecomposition> lemma2_decompose(const TernaryTable& t) {
  require_associative(t, "lemma2_decompose");
  const auto ids = identities(t);
  OneSidedDecomposition d{0, true, BinaryTable(Carrier(1), {0}), {}};
  if (!ids.left.empty()) {
    d.identity = ids.left.front();
  } else if (!ids.right.empty()) {
    d.identity = ids.right.front();
    d.left_identity = false;
  } else {
    return std::nullopt;
  }
  const Element n = order_of(t);
  const Element e = d.identity;
  d.binary = retract(t, e);
  for (Element x = 0; x < n; ++x) d.mu.push_back(t(e, x, e));

  const auto& dot = d.binary;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (d.mu[dot(x, y)] != dot(d.mu[x], d.mu[y]))
        throw DefectError("mu is not an endomorphism of the retract");
      for (Element z = 0; z < n; ++z)
        if (t(x, y, z) != dot(dot(x, d.mu[y]), z))
          throw DefectError("[xyz] != x . mu(y) . z for a one-sided identity");
    }
  return d;
}

GluskinDecomposition gluskin_hosszu(const TernaryTable& t, Element a) {
  const auto skew = require_group(t, "gluskin_hosszu");
  const Element n = order_of(t);
  require_element(n, a, "base point");

  GluskinDecomposition d{a, retract(t, a), skew(a), {}, {}, 0};
  const Element abar = d.identity;
  d.b = t(abar, abar, abar);
  for (Element x = 0; x < n; ++x) {
    d.inverse.push_back(t(abar, skew(x), abar));
    d.phi.push_back(t(abar, x, a));
  }

  const auto& star = d.binary_group;
  if (!is_binary_associative(star)) throw DefectError("retract of a ternary group is not associative");
  for (Element x = 0; x < n; ++x) {
    if (star(abar, x) != x || star(x, abar) != x)
      throw DefectError("skew(a) is not the identity of the retract");
    if (star(x, d.inverse[x]) != abar || star(d.inverse[x], x) != abar)
      throw DefectError("[a' x' a'] is not the inverse in the retract");
  }
  if (!is_bijection(d.phi)) throw DefectError("phi is not a bijection");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (d.phi[star(x, y)] != star(d.phi[x], d.phi[y]))
        throw DefectError("phi is not a homomorphism of the retract");
      for (Element z = 0; z < n; ++z) {
        const Element rebuilt = star(star(star(x, d.phi[y]), d.phi[d.phi[z]]), d.b);
        if (rebuilt != t(x, y, z))
          throw DefectError("Gluskin-Hosszu reconstruction fails at (" + std::to_string(x) + "," +
                            std::to_string(y) + "," + std::to_string(z) + ")");
      }
    }
  return d;
}

PostCover post_cover(const TernaryTable& t, Element c) {
  const auto skew = require_group(t, "post_cover");
  const Element n = order_of(t);
  require_element(n, c, "base point");
  const Element cbar = skew(c);
  auto encode = [n](Element x, Element s) { return x + s * n; };

  std::vector<std::string> labels;
  for (Element s = 0; s < 2; ++s)
    for (Element x = 0; x < n; ++x) labels.push_back(t.carrier().label(x) + "." + std::to_string(s));

  auto product = [&](Element p, Element q) {
    const Element x = p % n, s = p / n, y = q % n, r = q / n;
    if (s == 0 && r == 0) return encode(t(x, y, cbar), 1);
    if (s == 0 && r == 1) return encode(t(x, y, c), 0);
    if (s == 1 && r == 0) return encode(t(x, c, y), 0);
    return encode(t(x, c, y), 1);
  };
  PostCover cover{c, BinaryTable::from_function(Carrier(std::move(labels)), product),
                  encode(cbar, 1), {}};
  for (Element x = 0; x < n; ++x) cover.subgroup.push_back(encode(x, 1));

  const auto& g = cover.group;
  const Element m = 2 * n;
  auto defect = [](const std::string& what) { throw DefectError("Post cover: " + what); };

  if (auto v = is_binary_associative(g); !v)
    defect("operation is not associative at (" + std::to_string(v.witness[0]) + "," +
           std::to_string(v.witness[1]) + "," + std::to_string(v.witness[2]) + ")");
  for (Element p = 0; p < m; ++p)
    if (g(cover.neutral, p) != p || g(p, cover.neutral) != p) defect("(c', 1) is not neutral");
  for (Element x = 0; x < n; ++x) {
    const Element inv0 = encode(skew(x), 0);
    const Element inv1 = encode(t(cbar, skew(x), cbar), 1);
    if (g(encode(x, 0), inv0) != cover.neutral || g(inv0, encode(x, 0)) != cover.neutral)
      defect("(x,0)^-1 != (x',0)");
    if (g(encode(x, 1), inv1) != cover.neutral || g(inv1, encode(x, 1)) != cover.neutral)
      defect("(x,1)^-1 != ([c' x' c'],1)");
  }
  // H closed under products; with finiteness and the inverse formula it is a subgroup.
  auto in_h = [n](Element p) { return p >= n; };
  for (Element p : cover.subgroup)
    for (Element q : cover.subgroup)
      if (!in_h(g(p, q))) defect("H is not closed");
  // Normality: g h g^-1 in H. Inverses found by scan, independent of the formulas above.
  for (Element p = 0; p < m; ++p) {
    Element inv = m;
    for (Element q = 0; q < m; ++q)
      if (g(p, q) == cover.neutral) inv = q;
    if (inv == m) defect("element without inverse");
    for (Element h : cover.subgroup)
      if (!in_h(g(g(p, h), inv))) defect("H is not normal");
  }
  if (m / cover.subgroup.size() != 2 || m % cover.subgroup.size() != 0) defect("H does not have index 2");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (g(g(encode(x, 0), encode(y, 0)), encode(z, 0)) != encode(t(x, y, z), 0))
          defect("embedding identity fails at (" + std::to_string(x) + "," + std::to_string(y) +
                 "," + std::to_string(z) + ")");
  return cover;
}

BinaryTable post_quotient(const PostCover& cover) {
  const auto m = static_cast<Element>(cover.group.order());
  const Element n = m / 2;
  // Coset 0 is H (sector 1), coset 1 is the sector-0 half.
  auto coset = [n](Element p) -> Element { return p >= n ? 0 : 1; };
  std::vector<Element> square(4, 2);
  for (Element p = 0; p < m; ++p)
    for (Element q = 0; q < m; ++q) {
      auto& slot = square[coset(p) * 2 + coset(q)];
      const Element r = coset(cover.group(p, q));
      if (slot != 2 && slot != r) throw DefectError("coset multiplication is not well defined");
      slot = r;
    }
  return BinaryTable(Carrier(std::vector<std::string>{"H", "gH"}), std::move(square));
}

std::optional<Isomorphism> find_isomorphism(const BinaryTable& from, const BinaryTable& to) {
  if (from.order() != to.order()) return std::nullopt;
  const auto n = static_cast<Element>(from.order());

  std::vector<std::pair<std::size_t, std::size_t>> inv_from, inv_to;
  for (Element x = 0; x < n; ++x) {
    inv_from.push_back(iteration_shape(from, x));
    inv_to.push_back(iteration_shape(to, x));
  }
  auto sorted = [](auto v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(inv_from) != sorted(inv_to)) return std::nullopt;

  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> h(n, kUnset);
  std::vector<bool> used(n, false);

  auto consistent = [&](Element x) {
    for (Element y = 0; y <= x; ++y) {
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        const Element image = h[from(p, q)];
        if (image != kUnset && image != to(h[p], h[q])) return false;
      }
    }
    return true;
  };

  std::function<bool(Element)> assign = [&](Element x) {
    if (x == n) return true;
    for (Element y = 0; y < n; ++y) {
      if (used[y] || inv_from[x] != inv_to[y]) continue;
      h[x] = y;
      used[y] = true;
      if (consistent(x) && assign(x + 1)) return true;
      used[y] = false;
      h[x] = kUnset;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (h[from(x, y)] != to(h[x], h[y])) throw DefectError("isomorphism search returned a non-homomorphism");
  return Isomorphism{std::move(h)};
}

std::optional<Isomorphism> retracts_isomorphic(const TernaryTable& t, Element a, Element b) {
  require_group(t, "retracts_isomorphic");
  auto iso = find_isomorphism(retract(t, a), retract(t, b));
  if (!iso) throw DefectError("retracts of a ternary group are not isomorphic");
  return iso;
}

DerivedVerdict is_derived(const TernaryTable& t) {
  require_associative(t, "is_derived");
  const auto status = group_status(t);
  if (status.is_group()) {
    const auto ids = identities(t);
    if (ids.ternary.empty()) return {Derivedness::no, std::nullopt};
    const Element e = ids.ternary.front();
    MiddleIdentityDerivation w{e, retract(t, e)};
    if (derive3(w.binary) != t) throw DefectError("ternary group with identity is not derived from its retract");
    return {Derivedness::yes, std::move(w)};
  }
  if (auto w = lemma1_derive(t)) return {Derivedness::yes, std::move(w)};
  return {Derivedness::unknown, std::nullopt};
}

BDerivedWitness commutative_bderived_witness(const TernaryTable& t) {
  const auto skew = require_group(t, "commutative_bderived_witness");
  if (!is_commutative(t)) throw PreconditionError("commutative_bderived_witness requires a commutative ternary group");
  const Element zbar = skew(0);
  BDerivedWitness w{retract(t, 0), t(zbar, zbar, zbar)};
  if (!is_binary_commutative(w.binary)) throw DefectError("retract of a commutative ternary group is not commutative");
  if (b_derive3(w.binary, w.b) != t) throw DefectError("b-derivation round trip fails");
  return w;
}

std::string to_string(Derivedness d) {
  switch (d) {
    case Derivedness::yes:
      return "yes";
    case Derivedness::no:
      return "no";
    case Derivedness::unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace ternary
