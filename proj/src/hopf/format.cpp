#include "ternary/hopf/format.hpp"

#include <array>
#include <sstream>

#include "../linalg/fmat_block.hpp"
#include "../tokens.hpp"
#include "ternary/error.hpp"

namespace ternary::hopf {

namespace {

constexpr std::array<const char*, 5> kOptionalBlocks{"eps", "S", "m2", "delta2", "unit"};

}  // namespace

HopfBundle parse_thopf(std::string_view text) {
  detail::Tokens in(text, "thopf");
  in.expect("thopf");
  in.expect("1");
  in.expect("p");
  const auto p = in.number();
  if (p >= (1u << 31)) in.fail("modulus out of range");
  const PrimeField field(static_cast<std::uint32_t>(p));
  in.expect("n");
  const auto n = in.number();
  if (n == 0 || n > 256) in.fail("dimension must be in [1, 256]");
  in.expect("kind");
  const auto kind = bundle_kind_from_string(std::string(in.next()));
  in.expect("antipode");
  const std::string antipode(in.next());
  if (antipode != "none" && antipode != "skew" && antipode != "strong") in.fail("unknown antipode kind '" + antipode + "'");

  auto block = [&](const char* name) {
    in.expect("block");
    in.expect(name);
    auto m = linalg::detail::read_fmat_block(in);
    if (m.field() != field) in.fail(std::string("block ") + name + " is over a different field");
    return m;
  };
  TernaryAlgebra algebra(field, n, block("m3"));
  TernaryCoalgebra coalgebra(field, n, block("delta3"));
  HopfBundle h{std::move(algebra), std::move(coalgebra), {}, {}, AntipodeKind::skew, {}, {}, {}, kind};

  std::size_t next_allowed = 0;
  while (!in.at_end()) {
    in.expect("block");
    const std::string name(in.next());
    std::size_t slot = kOptionalBlocks.size();
    for (std::size_t i = 0; i < kOptionalBlocks.size(); ++i)
      if (name == kOptionalBlocks[i]) slot = i;
    if (slot == kOptionalBlocks.size()) in.fail("unknown block '" + name + "'");
    if (slot < next_allowed) in.fail("block '" + name + "' is duplicated or out of order");
    next_allowed = slot + 1;
    auto m = linalg::detail::read_fmat_block(in);
    if (m.field() != field) in.fail("block " + name + " is over a different field");
    switch (slot) {
      case 0: h.counit = std::move(m); break;
      case 1: h.antipode = std::move(m); break;
      case 2: h.m2 = std::move(m); break;
      case 3: h.delta2 = std::move(m); break;
      default: h.unit = std::move(m); break;
    }
  }
  if ((antipode == "none") != !h.antipode.has_value()) in.fail("antipode header does not match the S block");
  if (h.antipode) h.antipode_kind = antipode_kind_from_string(antipode);
  h.validate();
  return h;
}

std::string write_thopf(const HopfBundle& h) {
  h.validate();
  std::ostringstream out;
  out << "thopf 1\n"
      << "p " << h.field().modulus() << '\n'
      << "n " << h.dim() << '\n'
      << "kind " << to_string(h.kind) << '\n'
      << "antipode " << (h.antipode ? to_string(h.antipode_kind) : std::string("none")) << '\n';
  auto block = [&](const char* name, const FieldMatrix& m) {
    out << "block " << name << '\n';
    linalg::detail::write_fmat_block(out, m);
  };
  block("m3", h.algebra.m3);
  block("delta3", h.coalgebra.delta3);
  if (h.counit) block("eps", *h.counit);
  if (h.antipode) block("S", *h.antipode);
  if (h.m2) block("m2", *h.m2);
  if (h.delta2) block("delta2", *h.delta2);
  if (h.unit) block("unit", *h.unit);
  return out.str();
}

}  // namespace ternary::hopf
