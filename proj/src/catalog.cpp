#include "ternary/catalog.hpp"

#include <array>

#include "ternary/constructions.hpp"
#include "ternary/error.hpp"

namespace ternary::catalog {

namespace {

using Perm = std::array<int, 3>;

// Index order: e, (12), (13), (23), (123), (132).
constexpr std::array<Perm, 6> kS3{{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
const std::vector<std::string> kS3Labels{"e", "t12", "t13", "t23", "c123", "c132"};

Perm compose(const Perm& p, const Perm& q) { return {p[q[0]], p[q[1]], p[q[2]]}; }

Element s3_index(const Perm& p) {
  for (Element i = 0; i < kS3.size(); ++i)
    if (kS3[i] == p) return i;
  throw DefectError("not a permutation of three points");
}

constexpr std::size_t kMaxCyclic = 64;

}  // namespace

BinaryTable cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  return BinaryTable::from_function(Carrier(n), [n](Element x, Element y) { return (x + y) % n; });
}

BinaryTable boolean_group() {
  return BinaryTable::from_function(Carrier(std::vector<std::string>{"00", "01", "10", "11"}),
                                    [](Element x, Element y) { return x ^ y; });
}

BinaryTable symmetric_group_s3() {
  return BinaryTable::from_function(Carrier(kS3Labels), [](Element x, Element y) {
    return s3_index(compose(kS3[x], kS3[y]));
  });
}

TernaryTable derived_cyclic(std::size_t n) { return derive3(cyclic_group(n)); }

TernaryTable b_derived_cyclic(std::size_t n, Element b) { return b_derive3(cyclic_group(n), b); }

TernaryTable derived_boolean() { return derive3(boolean_group()); }

TernaryTable derived_s3() { return derive3(symmetric_group_s3()); }

TernaryTable odd_permutations_s3() {
  // Transpositions sit at S3 indices 1, 2, 3.
  const Carrier carrier(std::vector<std::string>{"t12", "t13", "t23"});
  return TernaryTable::from_function(carrier, [](Element x, Element y, Element z) {
    const Perm p = compose(compose(kS3[x + 1], kS3[y + 1]), kS3[z + 1]);
    return s3_index(p) - 1;
  });
}

std::vector<Entry> ternary_groups() {
  std::vector<Entry> out;
  for (std::size_t n = 2; n <= 6; ++n) out.push_back({"derZ" + std::to_string(n), derived_cyclic(n)});
  out.push_back({"derZ4b1", b_derived_cyclic(4, 1)});
  out.push_back({"a3", odd_permutations_s3()});
  out.push_back({"derS3", derived_s3()});
  out.push_back({"boolean", derived_boolean()});
  return out;
}

TernaryTable generate(std::string_view family, std::size_t n) {
  if (family == "derZ") {
    if (n == 0 || n > kMaxCyclic) throw InputError("derZ needs an order in [1, 64]");
    return derived_cyclic(n);
  }
  if (family == "derZ4b1") return b_derived_cyclic(4, 1);
  if (family == "a3") return odd_permutations_s3();
  if (family == "derS3") return derived_s3();
  if (family == "boolean") return derived_boolean();
  throw InputError("unknown catalog family '" + std::string(family) + "'");
}

}  // namespace ternary::catalog
