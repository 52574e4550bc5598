#pragma once

#include <string>
#include <string_view>

#include "ternary/hopf/bundle.hpp"

namespace ternary::hopf {

// thopf v1:
//   thopf 1
//   p <modulus>
//   n <dimension>
//   kind <delta-derived | m-derived | derived | full>
//   antipode <none | skew | strong>
//   block m3      <fmat v1>
//   block delta3  <fmat v1>
//   [block eps | S | m2 | delta2 | unit  <fmat v1>]   in exactly this order
//
// `antipode none` iff there is no S block. The parser validates shapes, fields and the
// kind/witness correspondence.

HopfBundle parse_thopf(std::string_view text);
std::string write_thopf(const HopfBundle& h);

}  // namespace ternary::hopf
