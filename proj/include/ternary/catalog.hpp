#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ternary/carrier.hpp"

// The named examples used as the fixture corpus.
namespace ternary::catalog {

/// (Z_n, +)
BinaryTable cyclic_group(std::size_t n);
/// Z2 x Z2, labels 00 01 10 11, operation bitwise xor.
BinaryTable boolean_group();
/// S3 under composition (p.q)(i) = p(q(i)); index 0 is the identity.
BinaryTable symmetric_group_s3();

/// der(Z_n)
TernaryTable derived_cyclic(std::size_t n);
/// der_b(Z_n)
TernaryTable b_derived_cyclic(std::size_t n, Element b);
TernaryTable derived_boolean();
TernaryTable derived_s3();
/// The three transpositions of S3 under triple composition: a ternary group of order 3
/// without any identity, hence not derived from a group.
TernaryTable odd_permutations_s3();

struct Entry {
  std::string name;
  TernaryTable table;
};

/// The ternary groups of the fixture corpus, orders 2 to 6.
std::vector<Entry> ternary_groups();

/// Families accepted by `gen`: derZ (needs n), derZ4b1, a3, derS3, boolean.
/// Throws InputError for unknown families or a bad size.
TernaryTable generate(std::string_view family, std::size_t n = 0);

}  // namespace ternary::catalog
