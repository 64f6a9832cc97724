#include "bjorth/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "bjorth/random.hpp"

namespace bjorth {

void OutgoingSpaceSpec::validate() const {
    if (ambient == 0) throw InvalidShape("outgoing space: ambient dimension zero");
    for (const auto& [v, u] : constraints) {
        if (v.size() != ambient || u.size() != ambient)
            throw ShapeMismatch("outgoing space: constraint vector dimension");
        if (vec_norm(v) == 0.0 || vec_norm(u) == 0.0)
            throw ZeroVector("outgoing space: zero constraint vector");
    }
}

namespace {

cx constraint_value(const Vector& v, const Vector& u, const ComplexMatrix& X) {
    cx acc{};
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = 0; b < u.size(); ++b) acc += std::conj(v[a]) * X(a, b) * u[b];
    return acc;
}

} // namespace

bool OutgoingSpaceSpec::contains(const ComplexMatrix& X, double eps) const {
    const double scale = std::max(X.max_abs() * static_cast<double>(ambient), 1e-300);
    for (const auto& [v, u] : constraints) {
        const double bound = eps * scale * vec_norm(v) * vec_norm(u);
        if (std::abs(constraint_value(v, u, X)) > bound) return false;
    }
    return true;
}

OutgoingSpaceSpec OutgoingSpaceSpec::first_row_zeros(std::size_t n, std::size_t p) {
    if (p < 1 || p > n) throw InvalidShape("first_row_zeros: need 1 <= p <= n");
    OutgoingSpaceSpec s;
    s.ambient = n;
    for (std::size_t j = p; j <= n; ++j)
        s.constraints.emplace_back(basis_vector(n, 0), basis_vector(n, j - 1));
    return s;
}

namespace {

// Gram-Schmidt an arbitrary family, dropping near-dependent members.
std::vector<Vector> orthonormalize(const std::vector<Vector>& raw) {
    std::vector<Vector> q;
    for (Vector v : raw) {
        for (const Vector& b : q) {
            const cx proj = inner(v, b);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * b[i];
        }
        const double n = vec_norm(v);
        if (n > 1e-12) q.push_back(scaled(v, 1.0 / n));
    }
    return q;
}

Vector project_off(Vector v, const std::vector<Vector>& q) {
    for (const Vector& b : q) {
        const cx proj = inner(v, b);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * b[i];
    }
    return v;
}

Vector svd_column(const ComplexMatrix& M, std::size_t col) {
    Vector v(M.rows());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = M(i, col);
    return v;
}

// Frobenius representer of the functional X -> v* X u is the matrix v u*.
// Orthonormalizing the representers lets us project a Gaussian sample onto
// the joint null space of all functionals.
std::vector<ComplexMatrix> frobenius_frame(const std::vector<ComplexMatrix>& reps) {
    std::vector<ComplexMatrix> q;
    for (ComplexMatrix M : reps) {
        for (const ComplexMatrix& B : q) {
            cx proj{};
            for (std::size_t i = 0; i < M.data().size(); ++i)
                proj += std::conj(B.data()[i]) * M.data()[i];
            for (std::size_t i = 0; i < M.data().size(); ++i) M.data()[i] -= proj * B.data()[i];
        }
        const double n = M.frobenius();
        if (n > 1e-12) {
            M *= cx{1.0 / n, 0.0};
            q.push_back(std::move(M));
        }
    }
    return q;
}

} // namespace

LeftSymmetryReport left_symmetric_falsify(const ComplexMatrix& A, const OutgoingSpaceSpec& V,
                                          std::size_t trials, std::uint64_t seed) {
    V.validate();
    if (!A.square() || A.rows() != V.ambient)
        throw ShapeMismatch("left_symmetric_falsify: A does not match the ambient dimension");
    if (!V.contains(A, tol::delta_margin)) throw NotMember("left_symmetric_falsify: A not in V");

    LeftSymmetryReport rep;
    const double na = spectral_norm(A);
    if (na <= tol::delta_zero) return rep; // zero is vacuously left-symmetric

    auto accept = [&](const ComplexMatrix& B) {
        ++rep.trials;
        if (spectral_norm(B) <= tol::delta_zero) return false;
        if (!V.contains(B, tol::delta_margin)) return false;
        if (bj_orthogonal_criterion(A, B, false).state != BJState::Orthogonal) return false;
        if (bj_orthogonal_criterion(B, A, false).state != BJState::NotOrthogonal) return false;
        rep.verdict = FalsifyVerdict::Falsified;
        rep.counterexample = B;
        return true;
    };

    const std::size_t n = V.ambient;
    const SVDResult sv = svd(A);
    std::size_t rank = 0;
    while (rank < sv.singular_values.size() &&
           sv.singular_values[rank] > sv.singular_values[0] * 1e-10)
        ++rank;

    std::vector<Vector> vs, us;
    for (const auto& [v, u] : V.constraints) {
        vs.push_back(v);
        us.push_back(u);
    }
    const std::vector<Vector> vq = orthonormalize(vs);
    const std::vector<Vector> uq = orthonormalize(us);

    // Deterministic candidates taken from the lemma proofs: for a lower
    // singular pair (x_i, y_i), project x_i (resp. y_i) into the common
    // annihilator of the constraints and pair it with y_i (resp. x_i).
    for (std::size_t i = 1; i < rank; ++i) {
        const Vector xi = svd_column(sv.left_vectors, i);
        const Vector yi = svd_column(sv.right_vectors, i);
        const Vector xv = project_off(xi, vq);
        if (vec_norm(xv) > 1e-8) {
            if (accept(outer(xv, yi))) return rep;
        }
        const Vector yu = project_off(yi, uq);
        if (vec_norm(yu) > 1e-8) {
            if (accept(outer(xi, yu))) return rep;
        }
    }
    // Peeling the top singular term when it stays inside V.
    if (rank >= 2) {
        ComplexMatrix peeled = A;
        ComplexMatrix top = outer(svd_column(sv.left_vectors, 0), svd_column(sv.right_vectors, 0));
        top *= cx{sv.singular_values[0], 0.0};
        peeled -= top;
        if (V.contains(peeled, tol::delta_margin)) {
            if (accept(peeled)) return rep;
        }
    }

    // Random search in the null space of the membership functionals and of
    // B -> <Ax_1, B x_1> for a norming vector x_1 (which forces A _|_ B).
    const NormingSubspace ns = norm_attain_set(A);
    const Vector x1 = svd_column(ns.basis, 0);
    std::vector<ComplexMatrix> reps;
    for (const auto& [v, u] : V.constraints) reps.push_back(outer(v, u));
    reps.push_back(outer(matvec(A, x1), x1));
    const std::vector<ComplexMatrix> frame = frobenius_frame(reps);

    Rng rng(seed);
    while (rep.trials < trials) {
        ComplexMatrix G = rng.matrix(n, n);
        for (const ComplexMatrix& F : frame) {
            cx proj{};
            for (std::size_t i = 0; i < G.data().size(); ++i)
                proj += std::conj(F.data()[i]) * G.data()[i];
            for (std::size_t i = 0; i < G.data().size(); ++i) G.data()[i] -= proj * F.data()[i];
        }
        if (accept(G)) return rep;
    }
    return rep;
}

RankTwoLastColumn construct_Bpm(cx c, cx s, std::size_t n, int sign) {
    if (n < 3) throw DegenerateParams("construct_Bpm: need n >= 3");
    const double ac = std::abs(c);
    const double as = std::abs(s);
    if (ac < 1e-15 || as < 1e-15) throw DegenerateParams("construct_Bpm: cs = 0");
    if (std::abs(ac * ac + as * as - 1.0) > 1e-10)
        throw DegenerateParams("construct_Bpm: |c|^2 + |s|^2 != 1");
    const cx pm{sign >= 0 ? 1.0 : -1.0, 0.0};
    const cx cb = std::conj(c);
    const cx sb = std::conj(s);

    ComplexMatrix B(n, n);
    B(0, n - 1) = cb;
    B(n - 2, n - 1) = -sb;
    B(n - 1, 0) = pm * sb;
    B(n - 1, n - 1) = cb;

    const double r2 = std::sqrt(2.0);
    SVDResult d;
    d.singular_values = {std::sqrt(1.0 + ac), std::sqrt(1.0 - ac)};
    d.left_vectors = ComplexMatrix(n, 2);
    d.right_vectors = ComplexMatrix(n, 2);

    // First pair
    d.left_vectors(0, 0) = cb * ac / (cb * r2);
    d.left_vectors(n - 2, 0) = -ac * sb / (cb * r2);
    d.left_vectors(n - 1, 0) = cb / (cb * r2);
    {
        const cx den = cb * std::sqrt(2.0 * (1.0 + ac));
        d.right_vectors(0, 0) = pm * cb * s / den;
        d.right_vectors(n - 1, 0) = cx{ac * ac + ac, 0.0} / den;
    }
    // Second pair
    d.left_vectors(0, 1) = -cb * ac / (cb * r2);
    d.left_vectors(n - 2, 1) = ac * sb / (cb * r2);
    d.left_vectors(n - 1, 1) = cb / (cb * r2);
    {
        const cx den = cb * std::sqrt(2.0 * (1.0 - ac));
        d.right_vectors(0, 1) = pm * cb * s / den;
        d.right_vectors(n - 1, 1) = cx{ac * ac - ac, 0.0} / den;
    }

    ComplexMatrix rec(n, n);
    for (int k = 0; k < 2; ++k) {
        const Vector u = svd_column(d.left_vectors, k);
        const Vector v = svd_column(d.right_vectors, k);
        ComplexMatrix term = outer(u, v);
        term *= cx{d.singular_values[k], 0.0};
        rec += term;
    }
    rec -= B;
    if (rec.max_abs() > 1e-10)
        throw DegenerateParams("construct_Bpm: decomposition fails to reconstruct");
    return {std::move(B), std::move(d)};
}

bool lastrow_svd_check(const ComplexMatrix& B) {
    if (!B.square()) throw NonSquare("lastrow_svd_check: not square");
    const std::size_t n = B.rows();
    if (n < 2) throw NotInForm("lastrow_svd_check: need n >= 2");
    const double scale = std::max(B.max_abs(), 1e-300);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (std::abs(B(i, j)) > 1e-13 * scale)
                throw NotInForm("lastrow_svd_check: interior entry nonzero");
    if (std::abs(B(0, n - 1)) <= 1e-13 * scale || std::abs(B(n - 1, 0)) <= 1e-13 * scale ||
        std::abs(B(n - 1, n - 1)) <= 1e-13 * scale)
        throw NotInForm("lastrow_svd_check: a required corner entry vanishes");

    const SVDResult d = svd(B);
    const double s1 = d.singular_values[0];
    const double s2 = d.singular_values[1];
    if (!(s1 > s2 + tol::delta_margin * s1)) return false;
    for (int k = 0; k < 2; ++k) {
        const double corner =
            d.singular_values[k] * std::abs(d.left_vectors(0, k) * std::conj(d.right_vectors(0, k)));
        if (corner <= tol::delta_margin * s1) return false;
    }
    return true;
}

bool locally_dependent_equiv(const ComplexMatrix& A, const ComplexMatrix& B, std::size_t trials,
                             std::uint64_t seed) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw ShapeMismatch("locally_dependent_equiv: shapes differ");
    const std::size_t n = A.cols();
    const double sa = std::max(A.max_abs(), B.max_abs());
    if (sa == 0.0) return true;

    auto parallel_at = [&](const Vector& y) {
        const Vector ay = matvec(A, y);
        const Vector by = matvec(B, y);
        const double nay = vec_norm(ay);
        const double nby = vec_norm(by);
        const double bound = tol::delta_margin * sa * vec_norm(y) * std::sqrt(double(n));
        if (nby <= bound) return nay <= bound;
        if (nay <= bound) return false;
        const cx mu = inner(ay, by) / cx{nby * nby, 0.0};
        Vector res = ay;
        for (std::size_t i = 0; i < res.size(); ++i) res[i] -= mu * by[i];
        return vec_norm(res) <= bound;
    };

    bool pointwise = true;
    for (std::size_t j = 0; j < n && pointwise; ++j) pointwise = parallel_at(basis_vector(n, j));
    Rng rng(seed);
    for (std::size_t t = 0; t < trials && pointwise; ++t) pointwise = parallel_at(rng.vector(n));

    // Global scalar fit mu minimizing |A - mu B| in Frobenius norm.
    cx num{};
    double den = 0.0;
    for (std::size_t i = 0; i < A.data().size(); ++i) {
        num += std::conj(B.data()[i]) * A.data()[i];
        den += std::norm(B.data()[i]);
    }
    bool global;
    if (den == 0.0) {
        global = A.max_abs() <= tol::delta_margin * sa;
    } else {
        ComplexMatrix R = B;
        R *= num / cx{den, 0.0};
        R -= A;
        global = R.max_abs() <= 1e-8 * sa;
    }
    return pointwise && global;
}

bool right_symmetric_check(const ComplexMatrix& A) {
    if (!A.square()) throw NonSquare("right_symmetric_check: not square");
    const double s1 = spectral_norm(A);
    if (s1 <= tol::delta_zero) throw ZeroMatrix("right_symmetric_check: zero matrix");
    ComplexMatrix M = A.adjoint() * A;
    M *= cx{1.0 / (s1 * s1), 0.0};
    M -= ComplexMatrix::identity(A.rows());
    return spectral_norm(M) <= tol::delta_margin;
}

EllipseParams rank_one_ellipse(const Vector& x, const Vector& y) {
    const double nx = vec_norm(x);
    const double ny = vec_norm(y);
    if (nx == 0.0 || ny == 0.0) throw ZeroVector("rank_one_ellipse: zero vector");
    if (x.size() != y.size()) throw ShapeMismatch("rank_one_ellipse: dimensions differ");
    EllipseParams e;
    e.focus2 = inner(x, y); // y* x
    e.minor_axis = std::sqrt(std::max(nx * nx * ny * ny - std::norm(e.focus2), 0.0));
    return e;
}

double line_angle(const Vector& x, const Vector& y) {
    const double nx = vec_norm(x);
    const double ny = vec_norm(y);
    if (nx == 0.0 || ny == 0.0) throw ZeroVector("line_angle: zero vector");
    if (x.size() != y.size()) throw ShapeMismatch("line_angle: dimensions differ");
    const double c = std::clamp(std::abs(inner(x, y)) / (nx * ny), 0.0, 1.0);
    return std::acos(c);
}

} // namespace bjorth
