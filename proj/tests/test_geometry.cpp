#include <doctest.h>

#include <cmath>

#include "bjorth/geometry.hpp"
#include "bjorth/random.hpp"

using namespace bjorth;

TEST_CASE("lastrow_svd_check examples") {
    ComplexMatrix B2(2, 2);
    B2(0, 1) = 1.0;
    B2(1, 0) = 1.0;
    B2(1, 1) = 1.0;
    CHECK(lastrow_svd_check(B2));

    ComplexMatrix B3(3, 3);
    B3(0, 2) = 1.0;
    B3(2, 0) = 1.0;
    B3(2, 2) = 1.0;
    CHECK(lastrow_svd_check(B3));

    ComplexMatrix off(2, 2); // (nn) entry missing
    off(0, 1) = 1.0;
    off(1, 0) = 1.0;
    CHECK_THROWS_AS(lastrow_svd_check(off), NotInForm);

    ComplexMatrix interior(3, 3);
    interior(0, 2) = 1.0;
    interior(2, 0) = 1.0;
    interior(2, 2) = 1.0;
    interior(1, 1) = 1.0;
    CHECK_THROWS_AS(lastrow_svd_check(interior), NotInForm);
}

TEST_CASE("random conforming last-row matrices pass the gap check") {
    Rng rng(21);
    for (int t = 0; t < 80; ++t) {
        const std::size_t n = 2 + t % 4;
        for (;;) {
            Vector x = rng.vector(n);
            Vector y = rng.vector(n);
            ComplexMatrix B(n, n);
            for (std::size_t i = 0; i + 1 < n; ++i) {
                B(i, n - 1) = x[i];
                B(n - 1, i) = std::conj(y[i]);
            }
            B(n - 1, n - 1) = x[n - 1];
            if (std::abs(B(0, n - 1)) < 0.05 || std::abs(B(n - 1, 0)) < 0.05 ||
                std::abs(B(n - 1, n - 1)) < 0.05)
                continue;
            CHECK(lastrow_svd_check(B));
            break;
        }
    }
}

TEST_CASE("construct_Bpm reproduces the entrywise formula") {
    const double iv = 1.0 / std::sqrt(2.0);
    const RankTwoLastColumn r = construct_Bpm(cx{iv, 0.0}, cx{iv, 0.0}, 3, +1);
    CHECK(std::abs(r.B(0, 2) - cx{iv, 0.0}) < 1e-12);
    CHECK(std::abs(r.B(1, 2) + cx{iv, 0.0}) < 1e-12);
    CHECK(std::abs(r.B(2, 0) - cx{iv, 0.0}) < 1e-12);
    CHECK(std::abs(r.B(2, 2) - cx{iv, 0.0}) < 1e-12);
    CHECK(spectral_norm(r.B) == doctest::Approx(std::sqrt(1.0 + iv)).epsilon(1e-10));
    CHECK(r.svd.singular_values[0] == doctest::Approx(std::sqrt(1.0 + iv)).epsilon(1e-12));
    CHECK(r.svd.singular_values[1] == doctest::Approx(std::sqrt(1.0 - iv)).epsilon(1e-12));

    CHECK_THROWS_AS(construct_Bpm(cx{1.0, 0.0}, cx{0.0, 0.0}, 3, +1), DegenerateParams);
    CHECK_THROWS_AS(construct_Bpm(cx{0.5, 0.0}, cx{0.5, 0.0}, 3, +1), DegenerateParams);
    CHECK_THROWS_AS(construct_Bpm(cx{0.6, 0.0}, cx{0.8, 0.0}, 2, +1), DegenerateParams);
}

TEST_CASE("construct_Bpm factors are orthonormal for random parameters") {
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        const double ang = 0.15 + 1.2 * rng.uniform();
        const cx c = rng.unimodular() * std::cos(ang);
        const cx s = rng.unimodular() * std::sin(ang);
        const RankTwoLastColumn r = construct_Bpm(c, s, 3 + t % 3, t % 2 ? +1 : -1);
        ComplexMatrix GU = r.svd.left_vectors.adjoint() * r.svd.left_vectors;
        GU -= ComplexMatrix::identity(2);
        CHECK(GU.max_abs() < 1e-10);
        ComplexMatrix GV = r.svd.right_vectors.adjoint() * r.svd.right_vectors;
        GV -= ComplexMatrix::identity(2);
        CHECK(GV.max_abs() < 1e-10);
    }
}

TEST_CASE("falsifier honors the p = 2 versus p >= 3 dichotomy") {
    // A in C E11 within the two-constraint space stays unrefuted
    const OutgoingSpaceSpec V2 = OutgoingSpaceSpec::first_row_zeros(3, 2);
    ComplexMatrix E11(3, 3);
    E11(0, 0) = cx{1.2, 0.4};
    const LeftSymmetryReport keep = left_symmetric_falsify(E11, V2, 400, 31);
    CHECK(keep.verdict == FalsifyVerdict::NotFalsified);

    // a diagonal with two singular values inside the one-constraint space is refuted
    const OutgoingSpaceSpec V3 = OutgoingSpaceSpec::first_row_zeros(3, 3);
    ComplexMatrix A(3, 3);
    A(0, 0) = 1.0;
    A(1, 1) = 0.5;
    const LeftSymmetryReport refute = left_symmetric_falsify(A, V3, 400, 32);
    CHECK(refute.verdict == FalsifyVerdict::Falsified);
    REQUIRE(refute.counterexample.has_value());
    const ComplexMatrix& B = *refute.counterexample;
    CHECK(V3.contains(B, 1e-7));
    CHECK(bj_orthogonal_criterion(A, B, false).state == BJState::Orthogonal);
    CHECK(bj_orthogonal_criterion(B, A, false).state == BJState::NotOrthogonal);

    // the unconstrained space has no nonzero left-symmetric points
    OutgoingSpaceSpec full;
    full.ambient = 2;
    const LeftSymmetryReport id = left_symmetric_falsify(ComplexMatrix::identity(2), full, 400, 33);
    CHECK(id.verdict == FalsifyVerdict::Falsified);

    CHECK_THROWS_AS(left_symmetric_falsify(ComplexMatrix::unit(3, 3, 0, 2), V3, 10, 34), NotMember);
}

TEST_CASE("falsifier verdict survives a unitary change of frame") {
    Rng rng(23);
    const OutgoingSpaceSpec V3 = OutgoingSpaceSpec::first_row_zeros(3, 3);
    ComplexMatrix A(3, 3);
    A(0, 0) = 1.0;
    A(1, 1) = 0.5;
    const ComplexMatrix U = rng.unitary(3);
    const ComplexMatrix W = rng.unitary(3);
    OutgoingSpaceSpec moved;
    moved.ambient = 3;
    for (const auto& [v, u] : V3.constraints)
        moved.constraints.emplace_back(matvec(W, v), matvec(U, u));
    const ComplexMatrix A2 = W * A * U.adjoint();
    CHECK(left_symmetric_falsify(A2, moved, 400, 35).verdict == FalsifyVerdict::Falsified);
}

TEST_CASE("locally_dependent_equiv separates lines from everything else") {
    Rng rng(24);
    const ComplexMatrix A = rng.matrix(3, 3);
    CHECK(locally_dependent_equiv(A, cx{0.0, 3.0} * A, 20));
    ComplexMatrix D(2, 2);
    D(0, 0) = 1.0;
    ComplexMatrix DI = ComplexMatrix::identity(2);
    CHECK_FALSE(locally_dependent_equiv(D, DI, 20));

    // rank-one pair from the lemma: e1(e1+e2)* versus e1 e1*
    const Vector e1 = basis_vector(2, 0);
    Vector e12 = basis_vector(2, 0);
    e12[1] = 1.0;
    CHECK_FALSE(locally_dependent_equiv(outer(e1, e12), outer(e1, e1), 20));
}

TEST_CASE("right symmetry detects unitary multiples") {
    CHECK(right_symmetric_check(ComplexMatrix::identity(2)));
    ComplexMatrix H(2, 2);
    const double iv = 1.0 / std::sqrt(2.0);
    H(0, 0) = iv;
    H(0, 1) = iv;
    H(1, 0) = iv;
    H(1, 1) = -iv;
    CHECK(right_symmetric_check(H));
    ComplexMatrix D(2, 2);
    D(0, 0) = 1.0;
    D(1, 1) = 0.5;
    CHECK_FALSE(right_symmetric_check(D));
    CHECK_THROWS_AS(right_symmetric_check(ComplexMatrix(2, 2)), ZeroMatrix);
}

TEST_CASE("rank one ellipse closed forms") {
    const Vector e1 = basis_vector(2, 0);
    const Vector e2 = basis_vector(2, 1);

    const EllipseParams degenerate = rank_one_ellipse(e1, e1);
    CHECK(std::abs(degenerate.focus2 - cx{1.0, 0.0}) < 1e-15);
    CHECK(degenerate.minor_axis == doctest::Approx(0.0));

    const EllipseParams disc = rank_one_ellipse(e1, e2);
    CHECK(std::abs(disc.focus2) < 1e-15);
    CHECK(disc.minor_axis == doctest::Approx(1.0));

    const Vector x = {cx{3.0 / 5.0, 0.0}, cx{4.0 / 5.0, 0.0}};
    const Vector y = {cx{5.0 / 13.0, 0.0}, cx{12.0 / 13.0, 0.0}};
    const EllipseParams e = rank_one_ellipse(x, y);
    CHECK(e.focus2.real() == doctest::Approx(63.0 / 65.0).epsilon(1e-14));
    CHECK(e.minor_axis == doctest::Approx(16.0 / 65.0).epsilon(1e-12));

    CHECK_THROWS_AS(rank_one_ellipse(Vector(2, cx{}), e1), ZeroVector);
}

TEST_CASE("ellipse support function matches the sampled numerical range") {
    Rng rng(25);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 3;
        const Vector x = rng.vector(n);
        const Vector y = rng.vector(n);
        const EllipseParams e = rank_one_ellipse(x, y);
        const ComplexMatrix M = outer(x, y);
        const double scale = vec_norm(x) * vec_norm(y);
        const cx center = e.focus2 / 2.0;
        const double b = e.minor_axis / 2.0;
        const double c = std::abs(e.focus2) / 2.0;
        const double a = std::sqrt(b * b + c * c);
        const double phi = std::abs(e.focus2) > 0 ? std::arg(e.focus2) : 0.0;
        for (int k = 0; k < 64; ++k) {
            const double theta = 2.0 * 3.14159265358979323846 * k / 64.0;
            const double hw = numrange_support(M, theta);
            const double he = std::cos(theta) * center.real() + std::sin(theta) * center.imag() +
                              std::sqrt(a * a * std::cos(theta - phi) * std::cos(theta - phi) +
                                        b * b * std::sin(theta - phi) * std::sin(theta - phi));
            CHECK(std::abs(hw - he) < 1e-7 * scale);
        }
    }
}

TEST_CASE("line angles") {
    const Vector e1 = basis_vector(2, 0);
    const Vector e2 = basis_vector(2, 1);
    Vector diag = {cx{1.0, 0.0}, cx{1.0, 0.0}};
    CHECK(line_angle(e1, e1) == doctest::Approx(0.0));
    CHECK(line_angle(e1, e2) == doctest::Approx(3.14159265358979323846 / 2.0));
    CHECK(line_angle(e1, diag) == doctest::Approx(3.14159265358979323846 / 4.0));
}
