#include "qcs/qsvt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "qcs/linalg.hpp"

namespace qcs {

namespace {

double log_choose(long n, long k) {
    return std::lgamma(static_cast<double>(n + 1)) -
           std::lgamma(static_cast<double>(k + 1)) -
           std::lgamma(static_cast<double>(n - k + 1));
}

// Odd Chebyshev series of (1 - (1 - x^2)^b) / x:
//   4 sum_j (-1)^j [2^{-2b} sum_{i=j+1}^{b} binom(2b, b+i)] T_{2j+1}(x).
ChebyshevPoly inverse_core_series(long b) {
    ChebyshevPoly q;
    q.parity = Parity::Odd;
    q.coefficients.assign(static_cast<size_t>(2 * b), 0.0);
    double log_norm = 2.0 * static_cast<double>(b) * std::log(2.0);
    for (long j = 0; j < b; ++j) {
        double tail = 0.0;
        for (long i = j + 1; i <= b; ++i)
            tail += std::exp(log_choose(2 * b, b + i) - log_norm);
        q.coefficients[static_cast<size_t>(2 * j + 1)] =
            4.0 * (j % 2 == 0 ? 1.0 : -1.0) * tail;
    }
    return q;
}

// Chebyshev projection of a smooth function sampled at Gauss-Chebyshev nodes.
std::vector<double> cheb_project(const std::function<double(double)>& f,
                                 long degree, long samples) {
    std::vector<double> theta(samples), fx(samples);
    for (long m = 0; m < samples; ++m) {
        theta[m] = M_PI * (static_cast<double>(m) + 0.5) / static_cast<double>(samples);
        fx[m] = f(std::cos(theta[m]));
    }
    std::vector<double> coeffs(static_cast<size_t>(degree) + 1, 0.0);
    for (long k = 0; k <= degree; ++k) {
        double acc = 0.0;
        for (long m = 0; m < samples; ++m)
            acc += fx[m] * std::cos(static_cast<double>(k) * theta[m]);
        coeffs[static_cast<size_t>(k)] =
            (k == 0 ? 1.0 : 2.0) * acc / static_cast<double>(samples);
    }
    return coeffs;
}

// Drops trailing coefficients whose cumulative magnitude fits the budget.
void cheb_trim(ChebyshevPoly& p, double budget) {
    double dropped = 0.0;
    long keep = static_cast<long>(p.coefficients.size());
    while (keep > 2) {
        double c = std::abs(p.coefficients[static_cast<size_t>(keep - 1)]);
        if (dropped + c > budget) break;
        dropped += c;
        --keep;
    }
    p.coefficients.resize(static_cast<size_t>(keep));
}

// Even window ~0 below x_lo and ~1 above x_hi, built from erf ramps.
ChebyshevPoly erf_window(double x_lo, double x_hi, double eps) {
    double x_mid = 0.5 * (x_lo + x_hi);
    double half = 0.5 * (x_hi - x_lo);
    double k = std::sqrt(std::log(4.0 / eps)) / half;
    auto ramp = [&](double x) {
        return 1.0 - 0.5 * (std::erf(k * (x + x_mid)) - std::erf(k * (x - x_mid)));
    };
    long degree = 64;
    for (;;) {
        std::vector<double> c = cheb_project(ramp, degree, 4 * degree);
        double tail = 0.0;
        for (long j = degree - std::min<long>(8, degree); j <= degree; ++j)
            tail = std::max(tail, std::abs(c[static_cast<size_t>(j)]));
        if (tail < eps / 16.0 || degree > 4096) {
            ChebyshevPoly w;
            w.parity = Parity::Even;
            w.coefficients = std::move(c);
            for (size_t j = 1; j < w.coefficients.size(); j += 2)
                w.coefficients[j] = 0.0;  // ramp pair is even by construction
            cheb_trim(w, eps / 8.0);
            cheb_certify(w);
            return w;
        }
        degree *= 2;
    }
}

Matrix phase_op(const Matrix& proj, double phi) {
    long n = proj.rows();
    Complex ep = std::exp(Complex(0.0, phi));
    Complex em = std::exp(Complex(0.0, -phi));
    return ep * proj + em * (Matrix::Identity(n, n) - proj);
}

Matrix signal_unitary(double x) {
    double c = std::sqrt(std::max(0.0, 1.0 - x * x));
    Matrix u(2, 2);
    u << x, c, c, -x;
    return u;
}

}  // namespace

ChebyshevPoly inverse_poly(double delta_prime, double eps) {
    if (!(delta_prime > 0.0 && delta_prime <= 0.5))
        throw ContractError("inverse_poly: delta' must be in (0, 1/2]");
    if (!(eps > 0.0 && eps <= 0.5))
        throw ContractError("inverse_poly: eps must be in (0, 1/2]");

    double b_log = std::log(16.0 / (eps * delta_prime));
    long b = static_cast<long>(std::ceil(b_log / (delta_prime * delta_prime)));
    double win_eps = eps / 4.0;

    for (int attempt = 0; attempt < 5; ++attempt) {
        ChebyshevPoly q = inverse_core_series(b);
        // Drop the exponentially small tail of the series.
        double budget = eps * delta_prime / 8.0;
        double dropped = 0.0;
        long keep = static_cast<long>(q.coefficients.size());
        while (keep > 2) {
            double c = std::abs(q.coefficients[static_cast<size_t>(keep - 1)]);
            if (dropped + c > budget) break;
            dropped += c;
            --keep;
        }
        q.coefficients.resize(static_cast<size_t>(keep));

        ChebyshevPoly w = erf_window(0.4 * delta_prime, 0.95 * delta_prime, win_eps);
        ChebyshevPoly p = cheb_scale(cheb_multiply(q, w), 0.75 * delta_prime);
        p.target_error = eps;
        cheb_certify(p);

        // Certificates: approximation on |x| >= delta', boundedness everywhere.
        auto certified = [&](const ChebyshevPoly& cand) {
            if (cand.sup_bound > 1.0) return false;
            for (long i = 0; i <= 1200; ++i) {
                double x = delta_prime +
                           (1.0 - delta_prime) * static_cast<double>(i) / 1200.0;
                if (std::abs(cheb_eval(cand, x) - 0.75 * delta_prime / x) > eps)
                    return false;
            }
            return true;
        };
        if (certified(p)) {
            // Trim as far as the certificates allow.
            for (double budget : {eps / 2.0, eps / 4.0, eps / 8.0, eps / 16.0}) {
                ChebyshevPoly trimmed = p;
                cheb_trim(trimmed, budget);
                cheb_certify(trimmed);
                trimmed.target_error = eps;
                if (certified(trimmed)) return trimmed;
            }
            return p;
        }
        b = static_cast<long>(std::ceil(1.5 * static_cast<double>(b)));
        win_eps *= 0.5;
    }
    throw NumericalFailure("inverse_poly: certification failed after retries");
}

JacobiAngerPair jacobi_anger(double t, double eps) {
    if (!(eps > 0.0 && eps < 1.0 / M_E))
        throw ContractError("jacobi_anger: eps must be in (0, 1/e)");

    JacobiAngerPair out;
    out.cos_poly.parity = Parity::Even;
    out.sin_poly.parity = Parity::Odd;
    if (t == 0.0) {
        out.cos_poly.coefficients = {1.0};
        out.sin_poly.coefficients = {0.0};
        cheb_certify(out.cos_poly);
        cheb_certify(out.sin_poly);
        return out;
    }

    double at = std::abs(t);
    double lg = std::log(1.0 / eps);
    long r = static_cast<long>(
        std::ceil(M_E * at / 2.0 + lg / std::log(M_E + lg / at) + 4.0));
    // Extend until the Bessel tail is negligible against eps.
    while (std::abs(std::cyl_bessel_j(static_cast<unsigned>(2 * r), at)) +
               std::abs(std::cyl_bessel_j(static_cast<unsigned>(2 * r + 1), at)) >
           eps / 16.0)
        ++r;
    out.truncation_order = r;

    out.cos_poly.coefficients.assign(static_cast<size_t>(2 * r + 2), 0.0);
    out.sin_poly.coefficients.assign(static_cast<size_t>(2 * r + 2), 0.0);
    out.cos_poly.coefficients[0] = std::cyl_bessel_j(0, at);
    for (long k = 1; k <= r; ++k)
        out.cos_poly.coefficients[static_cast<size_t>(2 * k)] =
            2.0 * (k % 2 == 0 ? 1.0 : -1.0) *
            std::cyl_bessel_j(static_cast<unsigned>(2 * k), at);
    double sgn = t < 0.0 ? -1.0 : 1.0;
    for (long k = 0; k <= r; ++k)
        out.sin_poly.coefficients[static_cast<size_t>(2 * k + 1)] =
            sgn * 2.0 * (k % 2 == 0 ? 1.0 : -1.0) *
            std::cyl_bessel_j(static_cast<unsigned>(2 * k + 1), at);
    cheb_certify(out.cos_poly);
    cheb_certify(out.sin_poly);

    for (long i = 0; i <= 800; ++i) {
        double x = -1.0 + 2.0 * static_cast<double>(i) / 800.0;
        if (std::abs(std::cos(t * x) - cheb_eval(out.cos_poly, x)) > eps ||
            std::abs(std::sin(t * x) - cheb_eval(out.sin_poly, x)) > eps)
            throw NumericalFailure("jacobi_anger: grid certificate failed");
    }
    return out;
}

Matrix qsp_sequence(const Matrix& u, const Matrix& proj, const Matrix& proj_tilde,
                    const PhaseSequence& phi) {
    long dim = u.rows();
    if ((u * u.adjoint() - Matrix::Identity(dim, dim)).norm() > 1e-10 * dim)
        throw ContractError("qsp_sequence: U is not unitary");
    auto check_proj = [dim](const Matrix& p) {
        if ((p * p - p).norm() > 1e-10 * dim ||
            (p - p.adjoint()).norm() > 1e-10 * dim)
            throw ContractError("qsp_sequence: not an orthogonal projector");
    };
    check_proj(proj);
    check_proj(proj_tilde);

    long n = phi.degree;
    if (static_cast<long>(phi.phases.size()) != n)
        throw ContractError("qsp_sequence: phase count must equal degree");
    auto ph = [&](long idx1) { return phi.phases[static_cast<size_t>(idx1 - 1)]; };

    Matrix out;
    if (n % 2 == 1) {
        out = phase_op(proj_tilde, ph(1)) * u;
        for (long j = 1; j <= (n - 1) / 2; ++j)
            out = out * phase_op(proj, ph(2 * j)) * u.adjoint() *
                  phase_op(proj_tilde, ph(2 * j + 1)) * u;
    } else {
        out = Matrix::Identity(dim, dim);
        for (long j = 1; j <= n / 2; ++j)
            out = out * phase_op(proj, ph(2 * j - 1)) * u.adjoint() *
                  phase_op(proj_tilde, ph(2 * j)) * u;
    }
    return out;
}

double qsp_encoded_scalar(double x, const PhaseSequence& phi) {
    Matrix proj = Matrix::Zero(2, 2);
    proj(0, 0) = 1.0;
    Matrix u_phi = qsp_sequence(signal_unitary(x), proj, proj, phi);
    return u_phi(0, 0).real();
}

PhaseSequence find_phases(const ChebyshevPoly& poly) {
    cheb_check_parity(poly);
    if (poly.sup_bound > 1.0 + 1e-9)
        throw ContractError("find_phases: polynomial exceeds 1 in absolute value");
    long n = std::max<long>(1, poly.degree());

    long nodes = std::max<long>(64, 2 * n + 16);
    std::vector<double> xs(nodes), target(nodes);
    for (long m = 0; m < nodes; ++m) {
        xs[m] = std::cos(M_PI * (static_cast<double>(m) + 0.5) /
                         static_cast<double>(nodes));
        target[m] = cheb_eval(poly, xs[m]);
    }

    auto residual = [&](const PhaseSequence& p, std::vector<double>& r) {
        double worst = 0.0;
        for (long m = 0; m < nodes; ++m) {
            r[static_cast<size_t>(m)] = qsp_encoded_scalar(xs[m], p) - target[m];
            worst = std::max(worst, std::abs(r[static_cast<size_t>(m)]));
        }
        return worst;
    };

    std::mt19937_64 rng(0x51c3f00dULL + static_cast<unsigned long>(n));
    std::normal_distribution<double> jitter(0.0, 0.3);

    PhaseSequence best;
    best.degree = n;
    double best_worst = 1e300;

    for (int start = 0; start < 10; ++start) {
        PhaseSequence p;
        p.degree = n;
        p.phases.assign(static_cast<size_t>(n), 0.0);
        if (start == 1)
            for (long i = 0; i < n; ++i)
                p.phases[static_cast<size_t>(i)] = (i % 2 == 0 ? 0.5 : -0.5) * M_PI;
        else if (start >= 2)
            for (long i = 0; i < n; ++i)
                p.phases[static_cast<size_t>(i)] =
                    (i % 2 == 0 ? 0.5 : -0.5) * M_PI + jitter(rng);

        std::vector<double> r(static_cast<size_t>(nodes));
        double worst = residual(p, r);
        double lambda = 1e-3;

        for (int iter = 0; iter < 300 && worst > 1e-9; ++iter) {
            // Numerical Jacobian, Levenberg-Marquardt step.
            Eigen::MatrixXd jac(nodes, n);
            const double h = 1e-6;
            for (long c = 0; c < n; ++c) {
                PhaseSequence pp = p, pm = p;
                pp.phases[static_cast<size_t>(c)] += h;
                pm.phases[static_cast<size_t>(c)] -= h;
                for (long m = 0; m < nodes; ++m)
                    jac(m, c) = (qsp_encoded_scalar(xs[m], pp) -
                                 qsp_encoded_scalar(xs[m], pm)) /
                                (2.0 * h);
            }
            Eigen::VectorXd rv(nodes);
            for (long m = 0; m < nodes; ++m) rv(m) = r[static_cast<size_t>(m)];
            Eigen::MatrixXd jtj = jac.transpose() * jac;
            Eigen::VectorXd jtr = jac.transpose() * rv;
            bool improved = false;
            for (int damp = 0; damp < 8; ++damp) {
                Eigen::MatrixXd lhs = jtj;
                lhs.diagonal().array() += lambda;
                Eigen::VectorXd step = lhs.ldlt().solve(jtr);
                PhaseSequence cand = p;
                for (long c = 0; c < n; ++c)
                    cand.phases[static_cast<size_t>(c)] -= step(c);
                std::vector<double> rc(static_cast<size_t>(nodes));
                double wc = residual(cand, rc);
                if (wc < worst) {
                    p = cand;
                    r = rc;
                    worst = wc;
                    lambda = std::max(1e-12, lambda * 0.3);
                    improved = true;
                    break;
                }
                lambda *= 10.0;
            }
            if (!improved) break;
        }
        if (worst < best_worst) {
            best_worst = worst;
            best = p;
        }
        if (best_worst <= 1e-8) break;
    }

    if (best_worst > 1e-6)
        throw PhaseFindingFailure("find_phases: residual " + std::to_string(best_worst));
    return best;
}

BlockEncoding exact_poly_encoding(const BlockEncoding& be, const ChebyshevPoly& poly) {
    cheb_check_parity(poly);
    if (poly.sup_bound > 0.5 + 1e-9)
        throw ContractError("exact_poly_encoding: polynomial must satisfy |f| <= 1/2");

    // f applied to the singular values of the full padded block A/alpha.
    long dd_rows = be.block_rows, dd_cols = be.block_cols;
    Matrix block = be.unitary.topLeftCorner(dd_rows, dd_cols);
    Matrix m = sv_function(block, poly);

    Svd dec = svd(m);
    long mr = m.rows(), mc = m.cols();
    Matrix off_left = Matrix::Zero(mr, mr), off_right = Matrix::Zero(mc, mc);
    {
        RealVector s = RealVector::Zero(std::max(mr, mc));
        for (long i = 0; i < dec.singular_values.size(); ++i)
            s(i) = dec.singular_values(i);
        Matrix du = Matrix::Zero(mr, mr), dv = Matrix::Zero(mc, mc);
        for (long i = 0; i < mr; ++i)
            du(i, i) = std::sqrt(std::max(0.0, 1.0 - s(std::min(i, s.size() - 1)) *
                                                         s(std::min(i, s.size() - 1))));
        for (long i = 0; i < mc; ++i)
            dv(i, i) = std::sqrt(std::max(0.0, 1.0 - s(std::min(i, s.size() - 1)) *
                                                         s(std::min(i, s.size() - 1))));
        // Zero singular directions beyond min(mr,mc) have s = 0, sqrt = 1.
        for (long i = std::min(mr, mc); i < mr; ++i) du(i, i) = 1.0;
        for (long i = std::min(mr, mc); i < mc; ++i) dv(i, i) = 1.0;
        off_left = dec.left_vectors * du * dec.left_vectors.adjoint();
        off_right = dec.right_vectors * dv * dec.right_vectors.adjoint();
    }

    Matrix u = Matrix::Zero(mr + mc, mr + mc);
    u.topLeftCorner(mr, mc) = m;
    u.topRightCorner(mr, mr) = off_left;
    u.bottomLeftCorner(mc, mc) = off_right;
    u.bottomRightCorner(mc, mr) = -m.adjoint();

    BlockEncoding out;
    out.unitary = std::move(u);
    out.alpha = 1.0;
    out.ancilla_qubits = be.ancilla_qubits + 2;
    out.error = 0.0;
    out.block_rows = mr;
    out.block_cols = mc;
    out.use_cost = be.use_cost.scaled(std::max<long>(1, poly.degree()));
    return out;
}

}  // namespace qcs
