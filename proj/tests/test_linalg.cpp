#include <doctest.h>

#include "bjorth/linalg.hpp"
#include "bjorth/random.hpp"

using namespace bjorth;

namespace {

ComplexMatrix mat2(cx a, cx b, cx c, cx d) {
    ComplexMatrix M(2, 2);
    M(0, 0) = a;
    M(0, 1) = b;
    M(1, 0) = c;
    M(1, 1) = d;
    return M;
}

} // namespace

TEST_CASE("herm_eig matches the closed form for [[1,1],[1,2]]") {
    // Gram matrix of [[0,1],[1,1]]; eigenvalues (3 -+ sqrt5)/2
    const ComplexMatrix H = mat2(1, 1, 1, 2);
    const HermEigen e = herm_eig(H);
    CHECK(e.eigenvalues[0] == doctest::Approx(0.38196601125010515).epsilon(1e-12));
    CHECK(e.eigenvalues[1] == doctest::Approx(2.618033988749895).epsilon(1e-12));
    for (int k = 0; k < 2; ++k) {
        Vector v = {e.eigenvectors(0, k), e.eigenvectors(1, k)};
        Vector hv = matvec(H, v);
        for (int i = 0; i < 2; ++i) hv[i] -= e.eigenvalues[k] * v[i];
        CHECK(vec_norm(hv) < 1e-12);
    }
}

TEST_CASE("herm_eig rejects non-hermitian input") {
    CHECK_THROWS_AS(herm_eig(mat2(0, 1, 0, 0)), NonHermitian);
    CHECK_THROWS_AS(herm_eig(ComplexMatrix(2, 3)), NonSquare);
}

TEST_CASE("herm_eig reconstructs random hermitian matrices") {
    Rng rng(101);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 5;
        ComplexMatrix G = rng.matrix(n, n);
        ComplexMatrix H = G + G.adjoint();
        const HermEigen e = herm_eig(H);
        ComplexMatrix R(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            Vector v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = e.eigenvectors(i, k);
            ComplexMatrix P = outer(v, v);
            P *= cx{e.eigenvalues[k], 0.0};
            R += P;
        }
        R -= H;
        CHECK(R.max_abs() < 1e-11 * (1.0 + H.max_abs()));
        for (std::size_t k = 1; k < n; ++k) CHECK(e.eigenvalues[k - 1] <= e.eigenvalues[k]);
    }
}

TEST_CASE("svd reconstructs and orders singular values") {
    Rng rng(202);
    for (int t = 0; t < 20; ++t) {
        const std::size_t m = 2 + t % 4;
        const std::size_t n = 2 + (t / 2) % 4;
        const ComplexMatrix A = rng.matrix(m, n);
        const SVDResult d = svd(A);
        const std::size_t r = d.singular_values.size();
        ComplexMatrix R(m, n);
        for (std::size_t k = 0; k < r; ++k) {
            Vector u(m), v(n);
            for (std::size_t i = 0; i < m; ++i) u[i] = d.left_vectors(i, k);
            for (std::size_t i = 0; i < n; ++i) v[i] = d.right_vectors(i, k);
            ComplexMatrix P = outer(u, v);
            P *= cx{d.singular_values[k], 0.0};
            R += P;
        }
        R -= A;
        CHECK(R.max_abs() < 1e-10 * (1.0 + A.max_abs()));
        for (std::size_t k = 1; k < r; ++k) CHECK(d.singular_values[k - 1] >= d.singular_values[k]);
        // column orthonormality
        ComplexMatrix GU = d.left_vectors.adjoint() * d.left_vectors;
        GU -= ComplexMatrix::identity(r);
        CHECK(GU.max_abs() < 1e-11);
        ComplexMatrix GV = d.right_vectors.adjoint() * d.right_vectors;
        GV -= ComplexMatrix::identity(r);
        CHECK(GV.max_abs() < 1e-11);
    }
}

TEST_CASE("svd right vectors use the leading-entry phase convention") {
    Rng rng(203);
    const ComplexMatrix A = rng.matrix(4, 4);
    const SVDResult d = svd(A);
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t i = 0; i < 4; ++i) {
            const cx z = d.right_vectors(i, k);
            if (std::abs(z) > 1e-9) {
                CHECK(z.imag() == doctest::Approx(0.0).epsilon(1e-9));
                CHECK(z.real() > 0.0);
                break;
            }
        }
    }
}

TEST_CASE("spectral norm of [[0,1],[1,1]] is the golden ratio") {
    CHECK(spectral_norm(mat2(0, 1, 1, 1)) == doctest::Approx(1.618033988749895).epsilon(1e-12));
}

TEST_CASE("numerical range support of a nilpotent rank-one is constant 1/2") {
    const ComplexMatrix M = mat2(0, 1, 0, 0);
    for (int k = 0; k < 8; ++k)
        CHECK(numrange_support(M, k * 0.7853981633974483) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("zero_in_numrange examples") {
    const NumRangeVerdict id = zero_in_numrange(ComplexMatrix::identity(2));
    CHECK(id.contains_zero == TriState::False);
    CHECK(id.margin == doctest::Approx(1.0).epsilon(1e-8));

    const NumRangeVerdict seg = zero_in_numrange(mat2(1, 0, 0, -1));
    CHECK(seg.contains_zero == TriState::True);

    const NumRangeVerdict disc = zero_in_numrange(mat2(0, 1, 0, 0));
    CHECK(disc.contains_zero == TriState::True);
    CHECK(disc.margin == doctest::Approx(-0.5).epsilon(1e-8));
}

TEST_CASE("numrange_zero_witness finds a vanishing quadratic form") {
    Rng rng(404);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 2 + t % 3;
        ComplexMatrix M = rng.matrix(n, n);
        // force 0 into W(M) by shifting the trace to zero
        cx tr{};
        for (std::size_t i = 0; i < n; ++i) tr += M(i, i);
        for (std::size_t i = 0; i < n; ++i) M(i, i) -= tr / cx{double(n), 0.0};
        const auto w = numrange_zero_witness(M, 1e-10);
        REQUIRE(w.has_value());
        CHECK(vec_norm(*w) == doctest::Approx(1.0).epsilon(1e-10));
        cx form{};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) form += std::conj((*w)[i]) * M(i, j) * (*w)[j];
        CHECK(std::abs(form) < 1e-9);
    }
}
