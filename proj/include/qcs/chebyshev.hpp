#pragma once

#include <string>
#include <vector>

#include "qcs/types.hpp"

namespace qcs {

enum class Parity { Even, Odd };

// Polynomial in the Chebyshev basis, tagged with its parity and carrying a
// grid-checked sup-norm certificate. coefficients[k] multiplies T_k; entries
// whose index does not match the parity must be zero.
struct ChebyshevPoly {
    Parity parity = Parity::Even;
    std::vector<double> coefficients;  // index k -> coefficient of T_k
    double domain_lo = -1.0;
    double domain_hi = 1.0;
    double sup_bound = 1.0;    // certified max of |P| on [-1,1]
    double target_error = 0.0; // approximation error the construction aimed for

    long degree() const {
        for (long k = static_cast<long>(coefficients.size()) - 1; k >= 0; --k)
            if (coefficients[static_cast<size_t>(k)] != 0.0) return k;
        return 0;
    }
};

double cheb_eval(const ChebyshevPoly& p, double x);

// Pointwise product of two Chebyshev-basis polynomials
// (T_a T_b = (T_{a+b} + T_{|a-b|}) / 2).
ChebyshevPoly cheb_multiply(const ChebyshevPoly& a, const ChebyshevPoly& b);

ChebyshevPoly cheb_scale(const ChebyshevPoly& p, double factor);

// Recomputes the grid sup-norm certificate (1001 Chebyshev points) and drops
// coefficients of the wrong parity that are numerically negligible.
void cheb_certify(ChebyshevPoly& p, long grid_points = 1001);

// Asserts the parity pattern of the coefficient list; throws ContractError.
void cheb_check_parity(const ChebyshevPoly& p, double tol = 1e-12);

// Plain-text round-trip format: "parity degree c0 c1 ... cd".
std::string cheb_serialize(const ChebyshevPoly& p);
ChebyshevPoly cheb_deserialize(const std::string& text);

}  // namespace qcs
