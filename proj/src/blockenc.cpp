#include "qcs/blockenc.hpp"

#include <cmath>

#include "qcs/linalg.hpp"

namespace qcs {

namespace {

// Weight given to power-of-two padding blocks. Small enough to vanish below
// double ulp in the alpha laws, nonzero so Eq-style state prep stays defined.
constexpr double kPadAlpha = 1e-30;

long ancilla_dim(const BlockEncoding& be) { return 1L << be.ancilla_qubits; }

long data_dim(const BlockEncoding& be) {
    long ad = ancilla_dim(be);
    if (be.unitary.rows() % ad != 0)
        throw ContractError("block-encoding ancilla count inconsistent with unitary size");
    return be.unitary.rows() / ad;
}

// Unitary whose first column is the given unit vector (Householder completion).
Matrix column_completion(const Vector& first_col) {
    long n = first_col.size();
    Matrix v = Matrix::Identity(n, n);
    Vector w = Vector::Unit(n, 0) - first_col;
    double wn2 = w.squaredNorm();
    if (wn2 > 1e-60) v -= (2.0 / wn2) * (w * w.adjoint());
    return v;
}

}  // namespace

double verify_block_encoding(const BlockEncoding& be, const Matrix& target) {
    if (target.rows() > be.unitary.rows() || target.cols() > be.unitary.cols())
        throw ContractError("verify_block_encoding: target larger than unitary");
    return operator_norm(
        target - be.alpha * be.unitary.topLeftCorner(target.rows(), target.cols()));
}

BlockEncoding stack_lcu(const std::vector<BlockEncoding>& encodings) {
    if (encodings.empty()) throw DegenerateInputError("stack_lcu: empty list");
    long q = encodings[0].ancilla_qubits;
    long ad = ancilla_dim(encodings[0]);
    long dd = data_dim(encodings[0]);
    for (const auto& be : encodings) {
        if (be.alpha <= 0.0) throw ContractError("stack_lcu: alpha must be positive");
        if (be.ancilla_qubits != q || data_dim(be) != dd)
            throw ContractError("stack_lcu: mismatched ancilla count or data dimension");
    }

    long r = static_cast<long>(encodings.size());
    long rp = 1;
    while (rp < r) rp <<= 1;

    double alpha_sq = 0.0;
    for (const auto& be : encodings) alpha_sq += be.alpha * be.alpha;
    alpha_sq += static_cast<double>(rp - r) * kPadAlpha * kPadAlpha;
    double alpha = std::sqrt(alpha_sq);

    Vector weights(rp);
    for (long i = 0; i < rp; ++i)
        weights(i) = (i < r ? encodings[static_cast<size_t>(i)].alpha : kPadAlpha) / alpha;
    Matrix v = column_completion(weights);

    long dim = rp * ad * dd;
    Matrix sel = Matrix::Zero(dim, dim);
    for (long i = 0; i < rp; ++i) {
        const Matrix& ui = i < r ? encodings[static_cast<size_t>(i)].unitary
                                 : Matrix(Matrix::Identity(ad * dd, ad * dd));
        sel.block(i * ad * dd, i * ad * dd, ad * dd, ad * dd) = ui;
    }

    Matrix v_ext = Matrix::Zero(dim, dim);
    for (long s = 0; s < rp; ++s)
        for (long t = 0; t < rp; ++t)
            if (v(s, t) != Complex(0, 0))
                v_ext.block(s * ad * dd, t * ad * dd, ad * dd, ad * dd) =
                    v(s, t) * Matrix::Identity(ad * dd, ad * dd);

    // Register swap (selector, ancilla, data) -> (ancilla, selector, data).
    Matrix swap = Matrix::Zero(dim, dim);
    for (long s = 0; s < rp; ++s)
        for (long a = 0; a < ad; ++a)
            for (long d = 0; d < dd; ++d)
                swap((a * rp + s) * dd + d, (s * ad + a) * dd + d) = 1.0;

    BlockEncoding out;
    out.unitary = swap * sel * v_ext;
    out.alpha = alpha;
    out.ancilla_qubits = q + ceil_log2(rp);
    out.error = 0.0;
    out.block_rows = r * dd;
    out.block_cols = dd;
    out.use_cost.round_trips = r;
    out.use_cost.qubits_per_use = 2 * r * qubits_for_dim(dim);
    for (long i = 0; i < r; ++i) out.use_cost.owners.push_back(static_cast<int>(i));
    return out;
}

BlockEncoding sum_lcu(const std::vector<BlockEncoding>& encodings) {
    if (encodings.empty()) throw DegenerateInputError("sum_lcu: empty list");
    long q = encodings[0].ancilla_qubits;
    long ad = ancilla_dim(encodings[0]);
    long dd = data_dim(encodings[0]);
    long br = encodings[0].block_rows, bc = encodings[0].block_cols;
    for (const auto& be : encodings) {
        if (be.alpha <= 0.0) throw ContractError("sum_lcu: alpha must be positive");
        if (be.ancilla_qubits != q || data_dim(be) != dd ||
            be.block_rows != br || be.block_cols != bc)
            throw ContractError("sum_lcu: mismatched shapes");
    }

    long r = static_cast<long>(encodings.size());
    long rp = 1;
    while (rp < r) rp <<= 1;

    double alpha = static_cast<double>(rp - r) * kPadAlpha;
    for (const auto& be : encodings) alpha += be.alpha;

    Vector weights(rp);
    for (long i = 0; i < rp; ++i)
        weights(i) = std::sqrt(
            (i < r ? encodings[static_cast<size_t>(i)].alpha : kPadAlpha) / alpha);
    Matrix v = column_completion(weights);

    long dim = rp * ad * dd;
    Matrix sel = Matrix::Zero(dim, dim);
    for (long i = 0; i < rp; ++i) {
        const Matrix& ui = i < r ? encodings[static_cast<size_t>(i)].unitary
                                 : Matrix(Matrix::Identity(ad * dd, ad * dd));
        sel.block(i * ad * dd, i * ad * dd, ad * dd, ad * dd) = ui;
    }
    Matrix v_ext = Matrix::Zero(dim, dim);
    Matrix vd_ext = Matrix::Zero(dim, dim);
    for (long s = 0; s < rp; ++s)
        for (long t = 0; t < rp; ++t) {
            Matrix eye = Matrix::Identity(ad * dd, ad * dd);
            if (v(s, t) != Complex(0, 0))
                v_ext.block(s * ad * dd, t * ad * dd, ad * dd, ad * dd) = v(s, t) * eye;
            Complex vdag = std::conj(v(t, s));
            if (vdag != Complex(0, 0))
                vd_ext.block(s * ad * dd, t * ad * dd, ad * dd, ad * dd) = vdag * eye;
        }

    BlockEncoding out;
    out.unitary = vd_ext * sel * v_ext;
    out.alpha = alpha;
    out.ancilla_qubits = q + ceil_log2(rp);
    out.error = 0.0;
    out.block_rows = br;
    out.block_cols = bc;
    out.use_cost.round_trips = r;
    out.use_cost.qubits_per_use = 2 * r * qubits_for_dim(dim);
    for (long i = 0; i < r; ++i) out.use_cost.owners.push_back(static_cast<int>(i));
    return out;
}

BlockEncoding hermitian_dilation(const BlockEncoding& be) {
    long ad = ancilla_dim(be);
    long dd = data_dim(be);
    long dim = 2 * ad * dd;

    // ((0, U), (U^+, 0)) rearranged so the ancilla register stays leading:
    // basis order (ancilla, side, data).
    Matrix w = Matrix::Zero(dim, dim);
    for (long a = 0; a < ad; ++a)
        for (long a2 = 0; a2 < ad; ++a2)
            for (long x = 0; x < dd; ++x)
                for (long y = 0; y < dd; ++y) {
                    Complex u = be.unitary(a * dd + x, a2 * dd + y);
                    if (u != Complex(0, 0)) {
                        w((a * 2 + 0) * dd + x, (a2 * 2 + 1) * dd + y) = u;
                        w((a2 * 2 + 1) * dd + y, (a * 2 + 0) * dd + x) = std::conj(u);
                    }
                }

    BlockEncoding out;
    out.unitary = std::move(w);
    out.alpha = be.alpha;
    out.ancilla_qubits = be.ancilla_qubits;
    out.error = be.error;
    out.block_rows = 2 * dd;
    out.block_cols = 2 * dd;
    out.use_cost = be.use_cost;
    out.use_cost.qubits_per_use =
        2 * be.use_cost.round_trips * qubits_for_dim(dim);
    return out;
}

}  // namespace qcs
