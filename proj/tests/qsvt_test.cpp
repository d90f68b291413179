#include "qcs/qsvt.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "qcs/blockenc.hpp"
#include "qcs/linalg.hpp"

using namespace qcs;

namespace {

// Dense-grid sup-norm oracle for |P - 3d'/4x| on [d', 1].
double inverse_grid_error(const ChebyshevPoly& p, double dp) {
    double worst = 0.0;
    for (long i = 0; i <= 2000; ++i) {
        double x = dp + (1.0 - dp) * static_cast<double>(i) / 2000.0;
        worst = std::max(worst, std::abs(cheb_eval(p, x) - 0.75 * dp / x));
    }
    return worst;
}

ChebyshevPoly cheb_t(long n) {
    ChebyshevPoly p;
    p.parity = (n % 2 == 0) ? Parity::Even : Parity::Odd;
    p.coefficients.assign(static_cast<size_t>(n) + 1, 0.0);
    p.coefficients[static_cast<size_t>(n)] = 1.0;
    cheb_certify(p);
    return p;
}

}  // namespace

TEST_CASE("inverse_poly certificates across the parameter grid") {
    for (double dp : {0.25, 0.125}) {
        for (double eps : {1e-2, 1e-4}) {
            ChebyshevPoly p = inverse_poly(dp, eps);
            CHECK(p.parity == Parity::Odd);
            CHECK(inverse_grid_error(p, dp) <= eps);
            CHECK(p.sup_bound <= 1.0 + 1e-9);
            CHECK(static_cast<double>(p.degree()) <=
                  kInversePolyDegreeC / dp * std::log(1.0 / eps));
            // Odd parity on the grid.
            for (double x : {0.3, 0.77, 0.15})
                CHECK(cheb_eval(p, -x) == doctest::Approx(-cheb_eval(p, x)));
        }
    }
}

TEST_CASE("inverse_poly loose parameters and endpoint value") {
    ChebyshevPoly p = inverse_poly(0.5, 0.5);
    CHECK(inverse_grid_error(p, 0.5) <= 0.5);
    // P(d') is eps-close to 3/4.
    ChebyshevPoly tight = inverse_poly(0.25, 1e-3);
    CHECK(std::abs(cheb_eval(tight, 0.25) - 0.75) <= 1e-3);
    CHECK_THROWS_AS(inverse_poly(0.7, 0.1), ContractError);
    CHECK_THROWS_AS(inverse_poly(0.25, 0.0), ContractError);
}

TEST_CASE("jacobi_anger t = 0 and grid oracle at t = 1") {
    JacobiAngerPair z = jacobi_anger(0.0, 1e-6);
    CHECK(z.cos_poly.coefficients[0] == doctest::Approx(1.0));
    CHECK(z.sin_poly.degree() == 0);

    JacobiAngerPair ja = jacobi_anger(1.0, 1e-6);
    double worst_c = 0.0, worst_s = 0.0;
    for (long i = 0; i <= 1000; ++i) {
        double x = -1.0 + 2.0 * static_cast<double>(i) / 1000.0;
        worst_c = std::max(worst_c, std::abs(std::cos(x) - cheb_eval(ja.cos_poly, x)));
        worst_s = std::max(worst_s, std::abs(std::sin(x) - cheb_eval(ja.sin_poly, x)));
    }
    CHECK(worst_c <= 1e-6);
    CHECK(worst_s <= 1e-6);

    // Coefficient of T_2k is 2 (-1)^k J_2k(t).
    for (long k = 1; k <= 3; ++k)
        CHECK(ja.cos_poly.coefficients[static_cast<size_t>(2 * k)] ==
              doctest::Approx(2.0 * (k % 2 == 0 ? 1.0 : -1.0) *
                              std::cyl_bessel_j(2.0 * static_cast<double>(k), 1.0)));

    CHECK_THROWS_AS(jacobi_anger(1.0, 0.5), ContractError);
}

TEST_CASE("qsp_sequence degree 1 with zero phase is the signal unitary") {
    PhaseSequence phi;
    phi.degree = 1;
    phi.phases = {0.0};
    CHECK(qsp_encoded_scalar(0.37, phi) == doctest::Approx(0.37));
}

TEST_CASE("qsp_sequence matches an explicit product oracle") {
    // All phases zero, even n: compare against the bare matrix product.
    Matrix u(2, 2);
    double x = 0.42, c = std::sqrt(1 - x * x);
    u << x, c, c, -x;
    Matrix proj = Matrix::Zero(2, 2);
    proj(0, 0) = 1.0;

    PhaseSequence phi;
    phi.degree = 4;
    phi.phases = {0.0, 0.0, 0.0, 0.0};
    Matrix got = qsp_sequence(u, proj, proj, phi);
    Matrix expect = Matrix::Identity(2, 2);
    for (int j = 0; j < 2; ++j) expect = expect * u.adjoint() * u;
    CHECK((got - expect).norm() <= 1e-12);

    CHECK_THROWS_AS(qsp_sequence(Matrix::Ones(2, 2), proj, proj, phi), ContractError);
}

TEST_CASE("find_phases T1, T2, T3") {
    PhaseSequence p1 = find_phases(cheb_t(1));
    for (double x : {-0.9, -0.2, 0.5, 1.0})
        CHECK(qsp_encoded_scalar(x, p1) == doctest::Approx(x).epsilon(1e-6));

    PhaseSequence p2 = find_phases(cheb_t(2));
    for (double x : {0.0, 0.5, -0.5, 1.0, -1.0})
        CHECK(qsp_encoded_scalar(x, p2) ==
              doctest::Approx(2.0 * x * x - 1.0).epsilon(1e-5));

    PhaseSequence p3 = find_phases(cheb_t(3));
    double worst = 0.0;
    for (long m = 0; m < 64; ++m) {
        double x = std::cos(M_PI * (m + 0.5) / 64.0);
        worst = std::max(worst,
                         std::abs(qsp_encoded_scalar(x, p3) - (4 * x * x * x - 3 * x)));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("find_phases on a low-degree inverse polynomial or declared failure") {
    ChebyshevPoly p = inverse_poly(0.5, 0.1);
    if (p.degree() > 60) return;  // routed to the exact path by policy
    bool ok = true;
    double worst = 0.0;
    try {
        PhaseSequence phi = find_phases(p);
        for (long m = 0; m < 64; ++m) {
            double x = std::cos(M_PI * (m + 0.5) / 64.0);
            worst = std::max(worst, std::abs(qsp_encoded_scalar(x, phi) - cheb_eval(p, x)));
        }
    } catch (const PhaseFindingFailure&) {
        ok = false;  // declared failure is an accepted outcome
    }
    if (ok) CHECK(worst <= 1e-6);
}

TEST_CASE("exact_poly_encoding of x/2 halves the block") {
    std::mt19937_64 rng(21);
    Matrix a(3, 3);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j)
            a(i, j) = Complex(static_cast<double>((rng() % 17)) / 17.0 - 0.5,
                              static_cast<double>((rng() % 13)) / 13.0 - 0.5);
    BlockEncoding be = unitary_dilation(a);

    ChebyshevPoly half;
    half.parity = Parity::Odd;
    half.coefficients = {0.0, 0.5};
    cheb_certify(half);

    BlockEncoding pe = exact_poly_encoding(be, half);
    CHECK(pe.alpha == doctest::Approx(1.0));
    CHECK(verify_block_encoding(pe, a / (2.0 * be.alpha)) <= 1e-9);
    long n = pe.unitary.rows();
    CHECK((pe.unitary.adjoint() * pe.unitary - Matrix::Identity(n, n)).norm() <= 1e-9 * n);
}

TEST_CASE("exact_poly_encoding with inverse_poly approximates the pseudoinverse") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 0.5;
    BlockEncoding be = unitary_dilation(d);  // alpha = 1, block = d
    double dp = 0.5, eps = 1e-3;
    // Scaled by 1/2 to satisfy the |f| <= 1/2 precondition.
    ChebyshevPoly p = cheb_scale(inverse_poly(dp, eps), 0.5);
    BlockEncoding pe = exact_poly_encoding(be, p);
    Matrix expect = 0.5 * 0.75 * dp * pseudoinverse(d);
    CHECK(verify_block_encoding(pe, expect) <= eps);

    // Consistency with the sv_function oracle is exact.
    Matrix block = be.unitary.topLeftCorner(2, 2);
    CHECK(verify_block_encoding(pe, sv_function(block, p)) <= 1e-9);
}

TEST_CASE("exact_poly_encoding cost law and sup-norm precondition") {
    Matrix a(2, 2);
    a << 0.4, 0.1, 0.0, 0.3;
    BlockEncoding be = unitary_dilation(a);
    CHECK(be.use_cost.qubits_per_use == 2 * qubits_for_dim(4));

    ChebyshevPoly p = cheb_scale(inverse_poly(0.25, 1e-2), 0.5);
    BlockEncoding pe = exact_poly_encoding(be, p);
    CHECK(pe.use_cost.qubits_per_use == p.degree() * be.use_cost.qubits_per_use);

    ChebyshevPoly too_big = cheb_t(3);  // sup = 1 > 1/2
    CHECK_THROWS_AS(exact_poly_encoding(be, too_big), ContractError);
}

TEST_CASE("polynomial text round-trip") {
    ChebyshevPoly p = inverse_poly(0.25, 1e-2);
    ChebyshevPoly q = cheb_deserialize(cheb_serialize(p));
    CHECK(q.parity == p.parity);
    CHECK(q.degree() == p.degree());
    for (double x : {-0.8, -0.3, 0.26, 0.9})
        CHECK(cheb_eval(q, x) == doctest::Approx(cheb_eval(p, x)).epsilon(1e-14));
}
