#include "qcs/linalg.hpp"

#include <random>

#include "doctest.h"
#include "qcs/blockenc.hpp"

using namespace qcs;

namespace {

Matrix random_matrix(long rows, long cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix a(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) a(i, j) = Complex(g(rng), g(rng));
    return a;
}

ChebyshevPoly identity_poly() {
    ChebyshevPoly p;
    p.parity = Parity::Odd;
    p.coefficients = {0.0, 1.0};
    cheb_certify(p);
    return p;
}

}  // namespace

TEST_CASE("svd identity and diagonal") {
    Matrix eye = Matrix::Identity(2, 2);
    Svd dec = svd(eye);
    CHECK(dec.singular_values(0) == doctest::Approx(1.0));
    CHECK(dec.singular_values(1) == doctest::Approx(1.0));

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 3.0;
    Svd dd = svd(d);
    CHECK(dd.singular_values(0) == doctest::Approx(3.0));
    CHECK(dd.singular_values(1) == doctest::Approx(0.0));
}

TEST_CASE("svd reconstruction on random 8x5") {
    std::mt19937_64 rng(7);
    Matrix a = random_matrix(8, 5, rng);
    Svd dec = svd(a);
    Matrix sigma = Matrix::Zero(8, 5);
    for (long i = 0; i < 5; ++i) sigma(i, i) = dec.singular_values(i);
    double resid = (a - dec.left_vectors * sigma * dec.right_vectors.adjoint()).norm();
    CHECK(resid <= 1e-10 * a.norm());
    CHECK((dec.left_vectors.adjoint() * dec.left_vectors - Matrix::Identity(8, 8)).norm() <=
          1e-10);
    // Nonincreasing singular values.
    for (long i = 1; i < 5; ++i)
        CHECK(dec.singular_values(i) <= dec.singular_values(i - 1) + 1e-14);
}

TEST_CASE("pseudoinverse diagonal, zero, and Penrose identities") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 0.5;
    Matrix p = pseudoinverse(d);
    CHECK(std::abs(p(0, 0) - Complex(1.0)) < 1e-12);
    CHECK(std::abs(p(1, 1) - Complex(2.0)) < 1e-12);

    Matrix z = Matrix::Zero(3, 2);
    CHECK(pseudoinverse(z).norm() == 0.0);

    std::mt19937_64 rng(11);
    Matrix low = random_matrix(4, 2, rng) * random_matrix(2, 4, rng);  // rank 2
    Matrix lp = pseudoinverse(low);
    CHECK((low * lp * low - low).norm() < 1e-9 * std::max(1.0, low.norm()));
    CHECK((lp * low * lp - lp).norm() < 1e-9 * std::max(1.0, lp.norm()));
}

TEST_CASE("penrose identities up to 32x32") {
    std::mt19937_64 rng(23);
    for (long dim : {8L, 16L, 32L}) {
        Matrix a = random_matrix(dim, dim / 2, rng) * random_matrix(dim / 2, dim, rng);
        Matrix p = pseudoinverse(a);
        CHECK((a * p * a - a).norm() < 1e-9 * std::max(1.0, a.norm()));
        CHECK((p * a * p - p).norm() < 1e-9 * std::max(1.0, p.norm()));
    }
}

TEST_CASE("unitary dilation evaluates the SVD formula") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 0.5;
    BlockEncoding be = unitary_dilation(d);
    CHECK(be.alpha == doctest::Approx(1.0));
    CHECK(be.ancilla_qubits == 1);
    CHECK(std::abs(be.unitary(0, 0) - Complex(1.0)) < 1e-12);
    CHECK(std::abs(be.unitary(1, 1) - Complex(0.5)) < 1e-12);
    CHECK(std::abs(be.unitary(2, 0)) < 1e-12);
    CHECK(std::abs(be.unitary(3, 1) - Complex(std::sqrt(3.0) / 2.0)) < 1e-12);

    Matrix one(1, 1);
    one(0, 0) = 1.0;
    BlockEncoding b1 = unitary_dilation(one);
    CHECK(b1.unitary.rows() == 2);
    CHECK(std::abs(b1.unitary(0, 0) - Complex(1.0)) < 1e-12);

    CHECK_THROWS_AS(unitary_dilation(Matrix::Zero(2, 2)), DegenerateInputError);
}

TEST_CASE("unitary dilation is unitary with tiny block residual") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix a = random_matrix(4, 4, rng);
        BlockEncoding be = unitary_dilation(a);
        long n = be.unitary.rows();
        CHECK((be.unitary.adjoint() * be.unitary - Matrix::Identity(n, n)).norm() <= 1e-10 * n);
        CHECK(verify_block_encoding(be, a) <= 1e-10);
    }
    // Non-square input is padded to square.
    Matrix rect = random_matrix(3, 5, rng);
    BlockEncoding br = unitary_dilation(rect);
    CHECK(br.unitary.rows() == 10);
    CHECK(verify_block_encoding(br, rect) <= 1e-10);
}

TEST_CASE("sv_function identity and even square") {
    std::mt19937_64 rng(5);
    Matrix a = random_matrix(4, 4, rng);
    a /= operator_norm(a);  // keep sigma inside the polynomial domain
    CHECK((sv_function(a, identity_poly()) - a).norm() <= 1e-10);

    ChebyshevPoly sq;  // x^2 = (T_0 + T_2)/2
    sq.parity = Parity::Even;
    sq.coefficients = {0.5, 0.0, 0.5};
    cheb_certify(sq);
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 2.0 / 3.0;
    d(1, 1) = 1.0;
    Matrix out = sv_function(d, sq);
    CHECK(std::abs(out(0, 0) - Complex(4.0 / 9.0)) < 1e-12);
    CHECK(std::abs(out(1, 1) - Complex(1.0)) < 1e-12);

    ChebyshevPoly untagged;
    untagged.parity = Parity::Even;
    untagged.coefficients = {0.0, 1.0};  // odd content under an even tag
    CHECK_THROWS_AS(sv_function(a, untagged), ContractError);
}

TEST_CASE("spectrum stats") {
    Vector b = Vector::Zero(2);
    b(0) = 1.0;
    SpectrumStats st = spectrum_stats(Matrix::Identity(2, 2), b);
    CHECK(st.gamma == doctest::Approx(1.0));
    CHECK(st.kappa == doctest::Approx(1.0));

    // Rank-one projector: gamma is the overlap with its column space.
    Matrix proj = Matrix::Zero(2, 2);
    proj(0, 0) = 1.0;
    Vector mix(2);
    mix << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    SpectrumStats st2 = spectrum_stats(proj, mix);
    CHECK(st2.gamma == doctest::Approx(1.0 / std::sqrt(2.0)));

    CHECK_THROWS_AS(spectrum_stats(proj, Vector::Zero(2)), DegenerateInputError);

    // gamma in [0,1], and kappa * sigma_min == op_norm.
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a = random_matrix(6, 4, rng);
        Vector v = random_matrix(6, 1, rng).col(0);
        SpectrumStats s = spectrum_stats(a, v);
        CHECK(s.gamma >= -1e-12);
        CHECK(s.gamma <= 1.0 + 1e-12);
        CHECK(s.kappa * s.min_nonzero_sv == doctest::Approx(s.op_norm).epsilon(1e-10));
    }
}

TEST_CASE("hermitian exp matches phases") {
    Matrix z = Matrix::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    Matrix u = hermitian_exp(z, M_PI / 2.0);
    CHECK(std::abs(u(0, 0) - Complex(0.0, 1.0)) < 1e-12);
    CHECK(std::abs(u(1, 1) - Complex(0.0, -1.0)) < 1e-12);
    CHECK_THROWS_AS(hermitian_exp(Matrix::Ones(2, 2) * Complex(0, 1), 1.0), ContractError);
}
