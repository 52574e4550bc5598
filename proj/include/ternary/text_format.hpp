#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ternary/carrier.hpp"

namespace ternary {

// tcube v1:
//   tcube 1
//   n <size>
//   [labels <name_0> ... <name_{n-1}>]
//   n^3 entries in (i,j,k) lexicographic order
//
// bsq v1 is the same with header `bsq 1` and n^2 entries in (i,j) order.
// Writers emit one row of n entries per line and omit the labels line when the
// labels are the default 0..n-1, so output is a canonical function of the table.

TernaryTable parse_tcube(std::string_view text);
std::string write_tcube(const TernaryTable& t);

BinaryTable parse_bsq(std::string_view text);
std::string write_bsq(const BinaryTable& b);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace ternary
