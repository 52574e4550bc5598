#pragma once

#include <ostream>

#include "../tokens.hpp"
#include "ternary/linalg/field.hpp"

namespace ternary::linalg::detail {

/// One fmat v1 block, leaving the tokenizer after its last entry.
FieldMatrix read_fmat_block(ternary::detail::Tokens& in);
void write_fmat_block(std::ostream& out, const FieldMatrix& m);

}  // namespace ternary::linalg::detail
