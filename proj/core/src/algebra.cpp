#include "bjorth/algebra.hpp"

#include <cmath>

namespace bjorth {

AlgebraElement central_multiply(const CentralElement& P, const AlgebraElement& A) {
    if (P.shape != A.shape) throw ShapeMismatch("central_multiply: shapes differ");
    AlgebraElement out = A;
    for (std::size_t k = 0; k < out.blocks.size(); ++k) out.blocks[k] *= P.scalars[k];
    return out;
}

std::pair<double, std::set<std::size_t>> alg_norm_and_norming_blocks(const AlgebraElement& A,
                                                                     double eps_rank) {
    A.validate();
    std::vector<double> norms(A.blocks.size());
    double nrm = 0.0;
    for (std::size_t k = 0; k < A.blocks.size(); ++k) {
        norms[k] = spectral_norm(A.blocks[k]);
        nrm = std::max(nrm, norms[k]);
    }
    std::set<std::size_t> norming;
    if (nrm > tol::delta_zero) {
        for (std::size_t k = 0; k < norms.size(); ++k)
            if (norms[k] >= nrm * (1.0 - eps_rank)) norming.insert(k);
    }
    if (nrm <= tol::delta_zero) nrm = 0.0;
    return {nrm, std::move(norming)};
}

double alg_norm(const AlgebraElement& A) { return alg_norm_and_norming_blocks(A).first; }

BJVerdict bj_orthogonal_alg(const AlgebraElement& A, const AlgebraElement& B, bool want_witness) {
    A.validate();
    B.validate();
    if (A.shape != B.shape) throw ShapeMismatch("bj_orthogonal_alg: shapes differ");

    const std::size_t N = A.shape.total_dim();
    const auto [na, norming] = alg_norm_and_norming_blocks(A);
    const double nb = alg_norm(B);
    if (na <= tol::delta_zero || nb <= tol::delta_zero) {
        BJVerdict v;
        v.state = BJState::Orthogonal;
        v.margin = 1.0;
        v.witness = basis_vector(N, 0);
        return v;
    }

    // Joint M0 basis: per-block bases of the norming blocks, padded into C^N.
    struct BlockBasis {
        std::size_t block;
        NormingSubspace ns;
    };
    std::vector<BlockBasis> parts;
    std::size_t d = 0;
    for (std::size_t k : norming) {
        BlockBasis bb{k, norm_attain_set(A.blocks[k])};
        d += bb.ns.dim();
        parts.push_back(std::move(bb));
    }

    // Compression of B*A onto the joint basis is block diagonal.
    ComplexMatrix C(d, d);
    std::size_t col = 0;
    for (const BlockBasis& bb : parts) {
        const ComplexMatrix Ck =
            bb.ns.basis.adjoint() * (B.blocks[bb.block].adjoint() * A.blocks[bb.block]) * bb.ns.basis;
        for (std::size_t i = 0; i < Ck.rows(); ++i)
            for (std::size_t j = 0; j < Ck.cols(); ++j) C(col + i, col + j) = Ck(i, j);
        col += Ck.rows();
    }

    const double scale = na * nb;
    double min_h;
    ComplexMatrix Cn = C;
    Cn *= cx{1.0 / scale, 0.0};
    if (d == 1) {
        min_h = -std::abs(Cn(0, 0));
    } else {
        min_h = -zero_in_numrange(Cn).margin;
    }

    BJVerdict v;
    v.margin = min_h;
    v.state = classify_margin(min_h);

    if (v.state == BJState::Orthogonal && want_witness) {
        Vector y;
        if (d == 1) {
            y = {cx{1.0, 0.0}};
        } else {
            const double target = std::max(1e-11, 1.5 * std::max(0.0, -min_h));
            if (auto w = numrange_zero_witness(Cn, target)) y = std::move(*w);
        }
        if (!y.empty()) {
            Vector x(N, cx{});
            std::size_t off_col = 0;
            for (const BlockBasis& bb : parts) {
                const std::size_t o = A.shape.offset(bb.block);
                for (std::size_t c = 0; c < bb.ns.dim(); ++c)
                    for (std::size_t i = 0; i < bb.ns.basis.rows(); ++i)
                        x[o + i] += bb.ns.basis(i, c) * y[off_col + c];
                off_col += bb.ns.dim();
            }
            x = normalized(std::move(x));
            // <Ax, Bx> evaluated blockwise
            cx form{};
            for (std::size_t k = 0; k < A.blocks.size(); ++k) {
                const std::size_t o = A.shape.offset(k);
                const std::size_t n = A.shape.block_sizes[k];
                Vector xk(x.begin() + o, x.begin() + o + n);
                form += inner(matvec(A.blocks[k], xk), matvec(B.blocks[k], xk));
            }
            if (std::abs(form) <= tol::delta_margin * scale) v.witness = std::move(x);
        }
    }
    return v;
}

SmoothReport is_smooth(const AlgebraElement& A) {
    A.validate();
    const auto [na, norming] = alg_norm_and_norming_blocks(A);
    if (na <= tol::delta_zero) throw ZeroElement("is_smooth: zero element");

    SmoothReport r;
    if (norming.size() != 1) return r;
    const std::size_t j = *norming.begin();
    const NormingSubspace ns = norm_attain_set(A.blocks[j]);
    if (ns.dim() != 1) return r;

    Vector xj(ns.basis.rows());
    for (std::size_t i = 0; i < xj.size(); ++i) xj[i] = ns.basis(i, 0);
    SmoothCertificate cert;
    cert.block = j;
    cert.rank_one = outer(matvec(A.blocks[j], xj), xj);
    cert.norming_vector = std::move(xj);
    r.smooth = true;
    r.certificate = std::move(cert);
    return r;
}

bool central_gauge_check(const AlgebraElement& A, const CentralElement& P) {
    if (A.shape != P.shape) throw ShapeMismatch("central_gauge_check: shapes differ");
    if (!P.positive_definite()) throw NonPositiveGauge("central_gauge_check: gauge not positive");
    const auto [na, set_a] = alg_norm_and_norming_blocks(A);
    const auto [npa, set_pa] = alg_norm_and_norming_blocks(central_multiply(P, A));
    (void)na;
    (void)npa;
    return set_a == set_pa;
}

bool has_abelian_summand(const AlgebraShape& shape) {
    for (std::size_t n : shape.block_sizes)
        if (n == 1) return true;
    return false;
}

} // namespace bjorth
