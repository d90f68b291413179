#include "qcs/chebyshev.hpp"

#include <cmath>
#include <sstream>

namespace qcs {

double cheb_eval(const ChebyshevPoly& p, double x) {
    // Clenshaw recurrence.
    double b1 = 0.0, b2 = 0.0;
    for (long k = static_cast<long>(p.coefficients.size()) - 1; k >= 1; --k) {
        double b0 = p.coefficients[static_cast<size_t>(k)] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    double c0 = p.coefficients.empty() ? 0.0 : p.coefficients[0];
    return c0 + x * b1 - b2;
}

ChebyshevPoly cheb_multiply(const ChebyshevPoly& a, const ChebyshevPoly& b) {
    ChebyshevPoly out;
    out.parity = (a.parity == b.parity) ? Parity::Even : Parity::Odd;
    out.coefficients.assign(a.coefficients.size() + b.coefficients.size(), 0.0);
    for (size_t i = 0; i < a.coefficients.size(); ++i) {
        if (a.coefficients[i] == 0.0) continue;
        for (size_t j = 0; j < b.coefficients.size(); ++j) {
            if (b.coefficients[j] == 0.0) continue;
            double half = 0.5 * a.coefficients[i] * b.coefficients[j];
            out.coefficients[i + j] += half;
            size_t diff = i > j ? i - j : j - i;
            out.coefficients[diff] += half;
        }
    }
    out.target_error = a.target_error + b.target_error;
    cheb_certify(out);
    return out;
}

ChebyshevPoly cheb_scale(const ChebyshevPoly& p, double factor) {
    ChebyshevPoly out = p;
    for (double& c : out.coefficients) c *= factor;
    out.sup_bound = std::abs(factor) * p.sup_bound;
    out.target_error = std::abs(factor) * p.target_error;
    return out;
}

void cheb_certify(ChebyshevPoly& p, long grid_points) {
    // Kill parity-breaking numerical dust before certifying.
    double scale = 0.0;
    for (double c : p.coefficients) scale = std::max(scale, std::abs(c));
    for (size_t k = 0; k < p.coefficients.size(); ++k) {
        bool match = (p.parity == Parity::Even) ? (k % 2 == 0) : (k % 2 == 1);
        if (!match) {
            if (std::abs(p.coefficients[k]) > 1e-9 * std::max(1.0, scale))
                throw ContractError("cheb_certify: parity violated by coefficient " +
                                    std::to_string(k));
            p.coefficients[k] = 0.0;
        }
    }
    double sup = 0.0;
    for (long i = 0; i < grid_points; ++i) {
        double x = std::cos(M_PI * static_cast<double>(i) /
                            static_cast<double>(grid_points - 1));
        sup = std::max(sup, std::abs(cheb_eval(p, x)));
    }
    p.sup_bound = sup;
}

void cheb_check_parity(const ChebyshevPoly& p, double tol) {
    double scale = 0.0;
    for (double c : p.coefficients) scale = std::max(scale, std::abs(c));
    for (size_t k = 0; k < p.coefficients.size(); ++k) {
        bool match = (p.parity == Parity::Even) ? (k % 2 == 0) : (k % 2 == 1);
        if (!match && std::abs(p.coefficients[k]) > tol * std::max(1.0, scale))
            throw ContractError("polynomial parity tag does not match coefficients");
    }
}

std::string cheb_serialize(const ChebyshevPoly& p) {
    std::ostringstream os;
    os.precision(17);
    os << (p.parity == Parity::Even ? "even" : "odd") << " " << p.degree();
    for (long k = 0; k <= p.degree(); ++k)
        os << " " << p.coefficients[static_cast<size_t>(k)];
    return os.str();
}

ChebyshevPoly cheb_deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string parity;
    long degree = 0;
    if (!(is >> parity >> degree))
        throw ContractError("cheb_deserialize: malformed header");
    ChebyshevPoly p;
    if (parity == "even")
        p.parity = Parity::Even;
    else if (parity == "odd")
        p.parity = Parity::Odd;
    else
        throw ContractError("cheb_deserialize: unknown parity tag " + parity);
    p.coefficients.assign(static_cast<size_t>(degree) + 1, 0.0);
    for (long k = 0; k <= degree; ++k)
        if (!(is >> p.coefficients[static_cast<size_t>(k)]))
            throw ContractError("cheb_deserialize: missing coefficients");
    cheb_certify(p);
    return p;
}

}  // namespace qcs
