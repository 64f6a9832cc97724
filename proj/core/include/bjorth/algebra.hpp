#pragma once

#include <set>
#include <vector>

#include "bjorth/bj.hpp"
#include "bjorth/matrix.hpp"

namespace bjorth {

/// Block sizes (n_1,...,n_l) of a direct sum of full matrix algebras.
struct AlgebraShape {
    std::vector<std::size_t> block_sizes;

    std::size_t block_count() const { return block_sizes.size(); }
    std::size_t total_dim() const {
        std::size_t n = 0;
        for (std::size_t b : block_sizes) n += b;
        return n;
    }
    /// Offset of block k inside the ambient C^N.
    std::size_t offset(std::size_t k) const {
        std::size_t o = 0;
        for (std::size_t i = 0; i < k; ++i) o += block_sizes[i];
        return o;
    }
    bool operator==(const AlgebraShape&) const = default;
};

/// A = A_1 + ... + A_l as a block list.
struct AlgebraElement {
    AlgebraShape shape;
    std::vector<ComplexMatrix> blocks;

    static AlgebraElement zero(const AlgebraShape& s) {
        AlgebraElement e;
        e.shape = s;
        for (std::size_t n : s.block_sizes) e.blocks.emplace_back(n, n);
        return e;
    }
    static AlgebraElement identity(const AlgebraShape& s) {
        AlgebraElement e;
        e.shape = s;
        for (std::size_t n : s.block_sizes) e.blocks.push_back(ComplexMatrix::identity(n));
        return e;
    }

    void validate() const {
        if (shape.block_count() == 0 || blocks.size() != shape.block_count())
            throw ShapeMismatch("algebra element block count mismatch");
        for (std::size_t k = 0; k < blocks.size(); ++k)
            if (blocks[k].rows() != shape.block_sizes[k] || blocks[k].cols() != shape.block_sizes[k])
                throw ShapeMismatch("algebra element block size mismatch");
    }

    /// Block-diagonal embedding into M_N(C).
    ComplexMatrix embed() const {
        const std::size_t N = shape.total_dim();
        ComplexMatrix M(N, N);
        std::size_t o = 0;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const std::size_t n = shape.block_sizes[k];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) M(o + i, o + j) = blocks[k](i, j);
            o += n;
        }
        return M;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] += o.blocks[k];
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] -= o.blocks[k];
        return *this;
    }
    AlgebraElement& operator*=(cx s) {
        for (auto& b : blocks) b *= s;
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(cx s, AlgebraElement a) { return a *= s; }
};

/// Central element: one scalar per block, acting as c_k I_{n_k}.
struct CentralElement {
    AlgebraShape shape;
    std::vector<cx> scalars;

    bool positive_definite() const {
        for (const cx& z : scalars)
            if (std::abs(z.imag()) > 1e-14 * (std::abs(z) + 1.0) || z.real() <= 0.0) return false;
        return true;
    }
    bool unimodular(double eps = 1e-10) const {
        for (const cx& z : scalars)
            if (std::abs(std::abs(z) - 1.0) > eps) return false;
        return true;
    }
};

AlgebraElement central_multiply(const CentralElement& P, const AlgebraElement& A);

/// (|A|, set of norming block indices).
std::pair<double, std::set<std::size_t>> alg_norm_and_norming_blocks(
    const AlgebraElement& A, double eps_rank = tol::eps_rank);

double alg_norm(const AlgebraElement& A);

/// Block-reduced BJ orthogonality in the direct sum; witness in ambient C^N.
BJVerdict bj_orthogonal_alg(const AlgebraElement& A, const AlgebraElement& B,
                            bool want_witness = true);

struct SmoothCertificate {
    std::size_t block = 0;           // the unique norming block j
    Vector norming_vector;           // unit x_j with |A_j x_j| = |A|
    ComplexMatrix rank_one;          // (A_j x_j) x_j*, same outgoing set as A
};

struct SmoothReport {
    bool smooth = false;
    std::optional<SmoothCertificate> certificate;
};

SmoothReport is_smooth(const AlgebraElement& A);

/// True iff A and P.A attain their norms on the same blocks.
bool central_gauge_check(const AlgebraElement& A, const CentralElement& P);

bool has_abelian_summand(const AlgebraShape& shape);

} // namespace bjorth
