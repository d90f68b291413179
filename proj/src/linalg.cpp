#include "qcs/linalg.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qcs {

double default_rank_tol(const Matrix& a, double sigma_max) {
    return static_cast<double>(std::max(a.rows(), a.cols())) *
           std::numeric_limits<double>::epsilon() * sigma_max;
}

Svd svd(const Matrix& a) {
    if (a.size() == 0) throw DegenerateInputError("svd: empty matrix");
    if (!a.allFinite()) throw ContractError("svd: non-finite entries");
    Eigen::JacobiSVD<Matrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Svd out;
    out.left_vectors = solver.matrixU();
    out.right_vectors = solver.matrixV();
    out.singular_values = solver.singularValues();
    double smax = out.singular_values.size() > 0 ? out.singular_values(0) : 0.0;
    out.rank_tol = default_rank_tol(a, smax);

    // Reconstruction certificate; Jacobi iterations are capped internally by
    // Eigen, a failed decomposition shows up here.
    Matrix sigma = Matrix::Zero(a.rows(), a.cols());
    for (long i = 0; i < out.singular_values.size(); ++i)
        sigma(i, i) = out.singular_values(i);
    double ref = std::max(1.0, a.norm());
    double resid =
        (a - out.left_vectors * sigma * out.right_vectors.adjoint()).norm();
    if (resid > 1e-10 * ref)
        throw NumericalFailure("svd: reconstruction residual " + std::to_string(resid));
    return out;
}

Matrix pseudoinverse(const Matrix& a, double rank_tol) {
    Svd dec = svd(a);
    double tol = rank_tol >= 0.0 ? rank_tol : dec.rank_tol;
    Matrix out = Matrix::Zero(a.cols(), a.rows());
    for (long i = 0; i < dec.singular_values.size(); ++i) {
        double s = dec.singular_values(i);
        if (s > tol)
            out += (1.0 / s) * dec.right_vectors.col(i) *
                   dec.left_vectors.col(i).adjoint();
    }
    return out;
}

Matrix truncated_pseudoinverse(const Matrix& a, double threshold) {
    return pseudoinverse(a, std::max(0.0, threshold * (1.0 - 1e-12)));
}

double operator_norm(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
}

BlockEncoding unitary_dilation(const Matrix& a) {
    double nrm = operator_norm(a);
    if (nrm <= 0.0) throw DegenerateInputError("unitary_dilation: zero matrix");

    long n = std::max(a.rows(), a.cols());
    Matrix sq = Matrix::Zero(n, n);
    sq.topLeftCorner(a.rows(), a.cols()) = a;

    Svd dec = svd(sq);
    Matrix d_scaled = Matrix::Zero(n, n);
    Matrix off = Matrix::Zero(n, n);
    for (long i = 0; i < n; ++i) {
        double s = dec.singular_values(i) / nrm;
        d_scaled(i, i) = s;
        off(i, i) = std::sqrt(std::max(0.0, 1.0 - s * s));
    }

    // ((U,0),(0,I)) ((D, sqrt(I-D^2)), (sqrt(I-D^2), -D)) ((V^+,0),(0,I))
    Matrix u = Matrix::Zero(2 * n, 2 * n);
    u.topLeftCorner(n, n) = dec.left_vectors * d_scaled * dec.right_vectors.adjoint();
    u.topRightCorner(n, n) = dec.left_vectors * off;
    u.bottomLeftCorner(n, n) = off * dec.right_vectors.adjoint();
    u.bottomRightCorner(n, n) = -d_scaled;

    BlockEncoding be;
    be.unitary = std::move(u);
    be.alpha = nrm;
    be.ancilla_qubits = 1;
    be.error = 0.0;
    be.block_rows = a.rows();
    be.block_cols = a.cols();
    be.use_cost.qubits_per_use = 2 * qubits_for_dim(2 * n);
    be.use_cost.round_trips = 1;
    be.use_cost.owners = {0};
    return be;
}

Matrix sv_function(const Matrix& a, const ChebyshevPoly& f) {
    cheb_check_parity(f);
    Svd dec = svd(a);
    long k = std::min(a.rows(), a.cols());
    if (f.parity == Parity::Odd) {
        Matrix out = Matrix::Zero(a.rows(), a.cols());
        for (long i = 0; i < k; ++i)
            out += cheb_eval(f, dec.singular_values(i)) * dec.left_vectors.col(i) *
                   dec.right_vectors.col(i).adjoint();
        return out;
    }
    // Even case ranges over the full right basis, zero singular values
    // included.
    Matrix out = Matrix::Zero(a.cols(), a.cols());
    for (long i = 0; i < a.cols(); ++i) {
        double s = i < k ? dec.singular_values(i) : 0.0;
        out += cheb_eval(f, s) * dec.right_vectors.col(i) *
               dec.right_vectors.col(i).adjoint();
    }
    return out;
}

SpectrumStats spectrum_stats(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows())
        throw ContractError("spectrum_stats: b dimension mismatch");
    if (b.norm() == 0.0) throw DegenerateInputError("spectrum_stats: b = 0");

    Svd dec = svd(a);
    SpectrumStats st;
    st.op_norm = dec.singular_values.size() > 0 ? dec.singular_values(0) : 0.0;
    st.frob_norm = a.norm();
    st.min_nonzero_sv = 0.0;
    for (long i = dec.singular_values.size() - 1; i >= 0; --i) {
        if (dec.singular_values(i) > dec.rank_tol) {
            st.min_nonzero_sv = dec.singular_values(i);
            break;
        }
    }
    st.kappa = st.min_nonzero_sv > 0.0 ? st.op_norm / st.min_nonzero_sv : 1.0;
    st.gamma = (a * (pseudoinverse(a) * b)).norm() / b.norm();
    return st;
}

Matrix hermitian_exp(const Matrix& h, double t) {
    if ((h - h.adjoint()).norm() > 1e-10 * std::max(1.0, h.norm()))
        throw ContractError("hermitian_exp: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Vector phases(h.rows());
    for (long i = 0; i < h.rows(); ++i)
        phases(i) = std::exp(Complex(0.0, t * es.eigenvalues()(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace qcs
