#pragma once

#include <vector>

#include "qcs/block_encoding.hpp"
#include "qcs/chebyshev.hpp"
#include "qcs/types.hpp"

namespace qcs {

struct PhaseSequence {
    std::vector<double> phases;  // length = degree, Def-C.1-style indexing
    long degree = 0;
};

// Degree-bound constant asserted by the test suite:
// degree(inverse_poly(d', eps)) <= kInversePolyDegreeC / d' * ln(1/eps).
inline constexpr double kInversePolyDegreeC = 16.0;

// Odd polynomial with |P(x) - 3 d'/(4x)| <= eps on [-1,1] \ [-d',d'] and
// |P| <= 1 on [-1,1], both certified on a dense grid. Built as the truncated
// Chebyshev series of (1-(1-x^2)^b)/x multiplied by an erf-based even window
// that suppresses the spike below the cutoff.
ChebyshevPoly inverse_poly(double delta_prime, double eps);

struct JacobiAngerPair {
    ChebyshevPoly cos_poly;  // even
    ChebyshevPoly sin_poly;  // odd
    long truncation_order = 0;
};

// Chebyshev expansions of cos(t x) and sin(t x) with grid-checked sup error
// <= eps on [-1,1]. Coefficients are Bessel J values.
JacobiAngerPair jacobi_anger(double t, double eps);

// Phased alternating sequence U_Phi (n = phi.degree uses of U / U^+ plus n
// projector-controlled phase operations).
Matrix qsp_sequence(const Matrix& u, const Matrix& proj, const Matrix& proj_tilde,
                    const PhaseSequence& phi);

// Scalar QSP readout used by find_phases and its tests: the real part of the
// <0|U_Phi|0> entry for the 2x2 signal unitary of x.
double qsp_encoded_scalar(double x, const PhaseSequence& phi);

// Damped least-squares phase search reproducing poly at Chebyshev nodes to
// 1e-6; throws PhaseFindingFailure when no start converges.
PhaseSequence find_phases(const ChebyshevPoly& poly);

// Block-encoding of f^(SV)(A/alpha) built as a direct unitary dilation.
// Requires |poly| <= 1/2 on [-1,1]; communication cost is degree times the
// base encoding's cost (one U or U^+ per polynomial degree).
BlockEncoding exact_poly_encoding(const BlockEncoding& be, const ChebyshevPoly& poly);

}  // namespace qcs
