#pragma once

#include <vector>

#include "qcs/types.hpp"

namespace qcs {

// Communication price of running a block-encoding unitary once when its
// pieces are held by remote parties. Descriptor only; protocols charge the
// ledger explicitly when they shuttle registers.
struct UseCost {
    long qubits_per_use = 0;        // total qubits on the wire for one use
    long round_trips = 0;           // referee<->party round trips per use
    std::vector<int> owners;        // parties holding the private pieces

    UseCost scaled(long factor) const {
        UseCost c = *this;
        c.qubits_per_use *= factor;
        c.round_trips *= factor;
        return c;
    }
};

// An (alpha, q, error) block-encoding: unitary whose top-left block equals
// target/alpha. The encoded block is always the leading rows/columns, so
// verification only needs the target's shape.
struct BlockEncoding {
    Matrix unitary;
    double alpha = 1.0;
    long ancilla_qubits = 0;
    double error = 0.0;
    UseCost use_cost;

    // Shape of the encoded block (rows x cols of the target matrix).
    long block_rows = 0;
    long block_cols = 0;

    Matrix block() const {
        return alpha * unitary.topLeftCorner(block_rows, block_cols);
    }
};

}  // namespace qcs
