#pragma once

#include "qcs/block_encoding.hpp"
#include "qcs/chebyshev.hpp"
#include "qcs/types.hpp"

namespace qcs {

// SVD with a reconstruction certificate. U is m x m, V is n x n (full bases),
// singular_values holds min(m,n) nonincreasing entries.
struct Svd {
    Matrix left_vectors;
    RealVector singular_values;
    Matrix right_vectors;
    double rank_tol = 0.0;

    long rank() const {
        long r = 0;
        for (long i = 0; i < singular_values.size(); ++i)
            if (singular_values(i) > rank_tol) ++r;
        return r;
    }
};

struct SpectrumStats {
    double kappa = 1.0;          // sigma_max / smallest nonzero sigma
    double gamma = 0.0;          // ||A A^+ b|| / ||b||
    double op_norm = 0.0;
    double frob_norm = 0.0;
    double min_nonzero_sv = 0.0;
};

// Numerical-rank threshold: max(m,n) * machine epsilon * sigma_max.
double default_rank_tol(const Matrix& a, double sigma_max);

Svd svd(const Matrix& a);

Matrix pseudoinverse(const Matrix& a, double rank_tol = -1.0);

// Pseudoinverse keeping only singular values > threshold (A^+_{>= delta}).
Matrix truncated_pseudoinverse(const Matrix& a, double threshold);

// SVD-based unitary dilation: an (||A||, 1, 0) block-encoding. Non-square
// inputs are zero-padded to square first.
BlockEncoding unitary_dilation(const Matrix& a);

// Singular-value function calculus. Odd f: sum f(sigma_i) |u_i><v_i|.
// Even f: sum over the full right basis f(sigma_i) |v_i><v_i| with sigma_i = 0
// beyond min(m,n).
Matrix sv_function(const Matrix& a, const ChebyshevPoly& f);

SpectrumStats spectrum_stats(const Matrix& a, const Vector& b);

double operator_norm(const Matrix& a);

// exp(i t H) for Hermitian H, by eigendecomposition.
Matrix hermitian_exp(const Matrix& h, double t);

}  // namespace qcs
