#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qcs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Inputs that are structurally unusable (zero matrix where a nonzero one is
// required, empty payloads, ...).
struct DegenerateInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A message that is illegal in the current topology.
struct TopologyViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// A caller broke an operation's contract (dimension mismatch, missing parity
// tag, sup-norm precondition, ...).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// An iterative numerical routine failed to converge.
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Phase finding did not reach the required residual; callers are expected to
// fall back to the exact encoding path.
struct PhaseFindingFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long ceil_log2(long n) {
    long bits = 0;
    long cap = 1;
    while (cap < n) {
        cap <<= 1;
        ++bits;
    }
    return bits;
}

// Qubits needed to hold a register of the given dimension (at least 1).
inline long qubits_for_dim(long dim) { return std::max<long>(1, ceil_log2(dim)); }

}  // namespace qcs
