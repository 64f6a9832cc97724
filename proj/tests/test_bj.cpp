#include <doctest.h>

#include "bjorth/bj.hpp"
#include "bjorth/random.hpp"

using namespace bjorth;

TEST_CASE("matrix units: E11 is orthogonal to E12 but not to itself") {
    const ComplexMatrix E11 = ComplexMatrix::unit(2, 2, 0, 0);
    const ComplexMatrix E12 = ComplexMatrix::unit(2, 2, 0, 1);

    const BJVerdict v = bj_orthogonal_criterion(E11, E12);
    CHECK(v.state == BJState::Orthogonal);
    REQUIRE(v.witness.has_value());
    const Vector& x = *v.witness;
    CHECK(vec_norm(x) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(inner(matvec(E11, x), matvec(E12, x))) < 1e-10);

    CHECK(bj_orthogonal_criterion(E11, E11).state == BJState::NotOrthogonal);
}

TEST_CASE("minimize oracle on scalar multiples") {
    const ComplexMatrix I = ComplexMatrix::identity(2);
    const BJVerdict v = bj_orthogonal_minimize(I, I);
    CHECK(v.state == BJState::NotOrthogonal);
    CHECK(v.margin == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("minimize agrees with criterion on orthogonal matrix units") {
    const ComplexMatrix E11 = ComplexMatrix::unit(3, 3, 0, 0);
    const ComplexMatrix E12 = ComplexMatrix::unit(3, 3, 0, 1);
    CHECK(bj_orthogonal_minimize(E11, E12).state == BJState::Orthogonal);
}

TEST_CASE("norm attainment subspace of a diagonal matrix") {
    ComplexMatrix D(3, 3);
    D(0, 0) = 2.0;
    D(1, 1) = 1.0;
    D(2, 2) = 0.5;
    const NormingSubspace ns = norm_attain_set(D);
    CHECK(ns.dim() == 1);
    CHECK(ns.norm_value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(ns.basis(0, 0)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(norm_attain_set(ComplexMatrix(2, 2)), ZeroMatrix);
}

TEST_CASE("rank one fast path against the criterion examples") {
    const Vector e1 = basis_vector(2, 0);
    const Vector e2 = basis_vector(2, 1);
    const ComplexMatrix E11 = ComplexMatrix::unit(2, 2, 0, 0);
    const ComplexMatrix E12 = ComplexMatrix::unit(2, 2, 0, 1);

    CHECK(rank_one_perp(e1, e2, E11).state == BJState::Orthogonal); // e1* E11 e2 = 0
    const BJVerdict bad = rank_one_perp(e1, e2, E12);               // e1* E12 e2 = 1
    CHECK(bad.state == BJState::NotOrthogonal);
    CHECK(bad.margin == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(rank_one_perp(Vector(2, cx{}), e2, E11), ZeroVector);
}

TEST_CASE("criterion and minimize verdicts agree on random pairs") {
    Rng rng(7);
    int checked = 0;
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 3;
        const ComplexMatrix A = rng.matrix(n, n);
        const ComplexMatrix B = rng.matrix(n, n);
        const BJState a = bj_orthogonal_criterion(A, B, false).state;
        const BJState b = bj_orthogonal_minimize(A, B).state;
        if (a == BJState::Borderline || b == BJState::Borderline) continue;
        CHECK(a == b);
        ++checked;
    }
    CHECK(checked > 40);
}

TEST_CASE("homogeneity and isometry invariance of the criterion") {
    Rng rng(8);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + t % 3;
        const ComplexMatrix A = rng.matrix(n, n);
        const ComplexMatrix B = rng.matrix(n, n);
        const BJState base = bj_orthogonal_criterion(A, B, false).state;
        if (base == BJState::Borderline) continue;

        const cx alpha = cx{0.3, 0.0} + rng.complex_gaussian();
        const cx beta = cx{0.3, 0.0} + rng.complex_gaussian();
        if (std::abs(alpha) < 0.1 || std::abs(beta) < 0.1) continue;
        CHECK(bj_orthogonal_criterion(alpha * A, beta * B, false).state == base);

        const ComplexMatrix U = rng.unitary(n);
        const ComplexMatrix V = rng.unitary(n);
        CHECK(bj_orthogonal_criterion(U * A * V.adjoint(), U * B * V.adjoint(), false).state == base);
        CHECK(bj_orthogonal_criterion(A.adjoint(), B.adjoint(), false).state == base);
    }
}

TEST_CASE("engineered orthogonal pairs carry a verified witness") {
    Rng rng(9);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 3;
        const ComplexMatrix A = rng.matrix(n, n);
        ComplexMatrix B = rng.matrix(n, n);
        const NormingSubspace ns = norm_attain_set(A);
        Vector x1(n);
        for (std::size_t i = 0; i < n; ++i) x1[i] = ns.basis(i, 0);
        const Vector w = matvec(A, x1);
        const cx corr = std::conj(inner(w, matvec(B, x1))) / cx{vec_norm(w) * vec_norm(w), 0.0};
        ComplexMatrix shift = outer(w, x1);
        shift *= corr;
        B -= shift;

        const BJVerdict v = bj_orthogonal_criterion(A, B);
        CHECK(v.state == BJState::Orthogonal);
        REQUIRE(v.witness.has_value());
        const Vector& x = *v.witness;
        CHECK(vec_norm(matvec(A, x)) ==
              doctest::Approx(spectral_norm(A)).epsilon(1e-8));
        CHECK(std::abs(inner(matvec(A, x), matvec(B, x))) <
              1e-7 * spectral_norm(A) * spectral_norm(B));
    }
}

TEST_CASE("zero operands are trivially orthogonal") {
    const ComplexMatrix Z(2, 2);
    const ComplexMatrix I = ComplexMatrix::identity(2);
    CHECK(bj_orthogonal_criterion(Z, I).state == BJState::Orthogonal);
    CHECK(bj_orthogonal_criterion(I, Z).state == BJState::Orthogonal);
    CHECK(bj_orthogonal_minimize(Z, I).state == BJState::Orthogonal);
}
