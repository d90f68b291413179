#pragma once

#include <vector>

#include "qcs/block_encoding.hpp"
#include "qcs/types.hpp"

namespace qcs {

// Residual ||target - alpha (<0|^q ox I) U (|0>^q ox I)||. The encoded block
// is the leading target-shaped corner by construction.
double verify_block_encoding(const BlockEncoding& be, const Matrix& target);

// Lemma-style LCU over a selector register: block-encoding of the row-stacked
// matrix (A_0; ...; A_{r-1}), alpha = sqrt(sum alpha_i^2). All inputs must
// share the ancilla count and data dimension; r is padded to a power of two
// with negligible-weight sentinel blocks.
BlockEncoding stack_lcu(const std::vector<BlockEncoding>& encodings);

// Same selector mechanism with V on both sides: block-encoding of
// A_0 + ... + A_{r-1}, alpha = sum alpha_i.
BlockEncoding sum_lcu(const std::vector<BlockEncoding>& encodings);

// Block-encoding of ((0, A), (A^+, 0)) with the same alpha.
BlockEncoding hermitian_dilation(const BlockEncoding& be);

}  // namespace qcs
