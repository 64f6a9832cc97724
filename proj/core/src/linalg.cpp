#include "bjorth/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace bjorth {

namespace {

constexpr double kPi = std::numbers::pi;

// Complex Jacobi rotation acting on the (p,q) plane. The phase factor
// absorbs the argument of the pivot so the remaining 2x2 problem is real.
struct Rotation {
    double c;
    double s;
    cx phase; // unimodular
};

Rotation make_rotation(double app, double aqq, cx apq) {
    const double mag = std::abs(apq);
    const cx phase = apq / mag;
    const double zeta = (app - aqq) / (2.0 * mag);
    double t;
    if (std::abs(zeta) > 1e12) {
        t = 1.0 / (2.0 * zeta);
    } else {
        const double sign = zeta >= 0.0 ? 1.0 : -1.0;
        t = sign / (std::abs(zeta) + std::hypot(1.0, zeta));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return Rotation{c, t * c, phase};
}

// Right-multiplication of columns (p,q) by the rotation.
void rotate_columns(ComplexMatrix& M, std::size_t p, std::size_t q, const Rotation& r) {
    const cx pb = std::conj(r.phase);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        const cx mp = M(i, p);
        const cx mq = M(i, q);
        M(i, p) = mp * r.c + mq * (pb * r.s);
        M(i, q) = -mp * r.s + mq * (pb * r.c);
    }
}

void rotate_rows_adjoint(ComplexMatrix& M, std::size_t p, std::size_t q, const Rotation& r) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
        const cx mp = M(p, j);
        const cx mq = M(q, j);
        M(p, j) = r.c * mp + (r.phase * r.s) * mq;
        M(q, j) = -r.s * mp + (r.phase * r.c) * mq;
    }
}

HermEigen herm_eig_core(const ComplexMatrix& H, bool want_vectors) {
    const std::size_t n = H.rows();
    // Work on the exact Hermitian part so roundoff asymmetry cannot drift.
    ComplexMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = 0.5 * (H(i, j) + std::conj(H(j, i)));

    ComplexMatrix Q = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();
    const double scale = std::max(A.frobenius(), 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(A(p, q)));
        if (off <= 1e-15 * scale) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cx apq = A(p, q);
                if (std::abs(apq) <= 1e-18 * scale) continue;
                const Rotation r = make_rotation(A(p, p).real(), A(q, q).real(), apq);
                rotate_columns(A, p, q, r);
                rotate_rows_adjoint(A, p, q, r);
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                A(p, p) = A(p, p).real();
                A(q, q) = A(q, q).real();
                if (want_vectors) rotate_columns(Q, p, q, r);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return A(a, a).real() < A(b, b).real(); });

    HermEigen out;
    out.eigenvalues.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.eigenvalues[k] = A(order[k], order[k]).real();
    if (want_vectors) {
        out.eigenvectors = ComplexMatrix(n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = Q(i, order[k]);
    }
    return out;
}

void apply_phase_convention(SVDResult& r) {
    const std::size_t n = r.right_vectors.cols();
    for (std::size_t j = 0; j < n; ++j) {
        cx pivot{};
        for (std::size_t i = 0; i < r.right_vectors.rows(); ++i) {
            if (std::abs(r.right_vectors(i, j)) > 1e-12) {
                pivot = r.right_vectors(i, j);
                break;
            }
        }
        if (pivot == cx{}) continue;
        const cx u = std::conj(pivot / std::abs(pivot));
        for (std::size_t i = 0; i < r.right_vectors.rows(); ++i) r.right_vectors(i, j) *= u;
        if (j < r.left_vectors.cols())
            for (std::size_t i = 0; i < r.left_vectors.rows(); ++i) r.left_vectors(i, j) *= u;
    }
}

// Fill columns with sigma below the cutoff by Gram-Schmidt against the rest.
void complete_orthonormal(ComplexMatrix& U, const std::vector<bool>& valid) {
    const std::size_t m = U.rows();
    const std::size_t n = U.cols();
    std::size_t probe = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (valid[j]) continue;
        for (; probe < m; ++probe) {
            Vector cand = basis_vector(m, probe);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j || (!valid[k] && k > j)) continue;
                cx proj{};
                for (std::size_t i = 0; i < m; ++i) proj += std::conj(U(i, k)) * cand[i];
                for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * U(i, k);
            }
            const double nn = vec_norm(cand);
            if (nn > 1e-3) {
                for (std::size_t i = 0; i < m; ++i) U(i, j) = cand[i] / nn;
                ++probe;
                break;
            }
        }
    }
}

} // namespace

HermEigen herm_eig(const ComplexMatrix& H) {
    if (!H.square()) throw NonSquare("herm_eig: matrix not square");
    if (!H.finite()) throw NonFinite("herm_eig: non-finite entries");
    const double scale = H.frobenius();
    if ((H - H.adjoint()).frobenius() > tol::eps_herm * std::max(scale, 1e-300) + 1e-300)
        throw NonHermitian("herm_eig: symmetry check failed");
    return herm_eig_core(H, true);
}

SVDResult svd(const ComplexMatrix& A) {
    if (!A.finite()) throw NonFinite("svd: non-finite entries");
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    if (m < n) {
        SVDResult r = svd(A.adjoint());
        std::swap(r.left_vectors, r.right_vectors);
        apply_phase_convention(r);
        return r;
    }

    ComplexMatrix G = A;
    ComplexMatrix V = ComplexMatrix::identity(n);
    const double scale2 = std::max(G.frobenius() * G.frobenius(), 1e-300);

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool changed = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double a = 0.0, b = 0.0;
                cx g{};
                for (std::size_t k = 0; k < m; ++k) {
                    a += std::norm(G(k, i));
                    b += std::norm(G(k, j));
                    g += std::conj(G(k, i)) * G(k, j);
                }
                if (std::abs(g) <= 1e-15 * std::sqrt(a * b) + 1e-30 * scale2) continue;
                changed = true;
                const Rotation r = make_rotation(a, b, g);
                rotate_columns(G, i, j, r);
                rotate_columns(V, i, j, r);
            }
        }
        if (!changed) break;
    }

    SVDResult out;
    out.singular_values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) s += std::norm(G(k, j));
        out.singular_values[j] = std::sqrt(s);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return out.singular_values[x] > out.singular_values[y];
    });

    std::vector<double> sorted(n);
    out.left_vectors = ComplexMatrix(m, n);
    out.right_vectors = ComplexMatrix(n, n);
    const double cutoff = out.singular_values[order[0]] * 1e-14 + 1e-300;
    std::vector<bool> valid(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        sorted[k] = out.singular_values[src];
        for (std::size_t i = 0; i < n; ++i) out.right_vectors(i, k) = V(i, src);
        if (sorted[k] > cutoff) {
            valid[k] = true;
            for (std::size_t i = 0; i < m; ++i) out.left_vectors(i, k) = G(i, src) / sorted[k];
        }
    }
    out.singular_values = std::move(sorted);
    complete_orthonormal(out.left_vectors, valid);
    apply_phase_convention(out);
    return out;
}

double spectral_norm(const ComplexMatrix& A) {
    if (!A.finite()) throw NonFinite("spectral_norm: non-finite entries");
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    const ComplexMatrix B = (m >= n) ? (A.adjoint() * A) : (A * A.adjoint());
    const HermEigen e = herm_eig_core(B, false);
    return std::sqrt(std::max(e.eigenvalues.back(), 0.0));
}

double numrange_support(const ComplexMatrix& M, double theta, Vector* achiever) {
    const std::size_t n = M.rows();
    const cx rot = std::polar(1.0, -theta);
    ComplexMatrix H(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            H(i, j) = 0.5 * (rot * M(i, j) + std::conj(rot * M(j, i)));
    const HermEigen e = herm_eig_core(H, achiever != nullptr);
    if (achiever) {
        achiever->assign(n, cx{});
        for (std::size_t i = 0; i < n; ++i) (*achiever)[i] = e.eigenvectors(i, n - 1);
    }
    return e.eigenvalues.back();
}

NumRangeVerdict zero_in_numrange(const ComplexMatrix& M, std::size_t grid, double refine_tol) {
    if (!M.square()) throw NonSquare("zero_in_numrange: matrix not square");
    if (!M.finite()) throw NonFinite("zero_in_numrange: non-finite entries");
    if (grid < 16) throw Error("zero_in_numrange: grid must be >= 16");

    double best_h = std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    for (std::size_t k = 0; k < grid; ++k) {
        const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(grid);
        const double h = numrange_support(M, theta);
        if (h < best_h) {
            best_h = h;
            best_theta = theta;
        }
    }

    // Golden-section refinement around the grid minimum.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_theta - 2.0 * kPi / static_cast<double>(grid);
    double hi = best_theta + 2.0 * kPi / static_cast<double>(grid);
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = numrange_support(M, x1);
    double f2 = numrange_support(M, x2);
    while (hi - lo > refine_tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = numrange_support(M, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = numrange_support(M, x2);
        }
    }
    const double theta_ref = 0.5 * (lo + hi);
    const double h_ref = std::min({best_h, f1, f2, numrange_support(M, theta_ref)});

    const double scale = std::max(M.frobenius(), 1e-300);
    NumRangeVerdict v;
    v.theta_min = theta_ref;
    v.margin = -h_ref; // signed distance: positive when 0 lies outside W
    if (h_ref >= -tol::delta_noise * scale) {
        v.contains_zero = TriState::True;
    } else if (h_ref > -tol::delta_margin * scale) {
        v.contains_zero = TriState::Borderline;
    } else {
        v.contains_zero = TriState::False;
    }
    return v;
}

namespace {

// Gauss-Newton on the sphere for (x*Hx, x*Kx) = (0,0), x treated in real
// coordinates; the quadratic forms are exactly quadratic so convergence is
// fast whenever the start is in the right basin.
std::optional<Vector> gauss_newton_zero(const ComplexMatrix& H, const ComplexMatrix& K,
                                        Vector x, double target) {
    const std::size_t n = x.size();
    x = normalized(std::move(x));
    for (int iter = 0; iter < 80; ++iter) {
        const Vector hx = matvec(H, x);
        const Vector kx = matvec(K, x);
        const double r1 = inner(hx, x).real();
        const double r2 = inner(kx, x).real();
        if (std::hypot(r1, r2) <= target) return x;

        // residual gradients in real coordinates, projected on the sphere
        Vector g1(n), g2(n);
        for (std::size_t i = 0; i < n; ++i) {
            g1[i] = 2.0 * (hx[i] - r1 * x[i]);
            g2[i] = 2.0 * (kx[i] - r2 * x[i]);
        }
        // JJ^T (2x2) in the real inner product Re<.,.>
        auto rdot = [](const Vector& a, const Vector& b) {
            double s = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i)
                s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
            return s;
        };
        const double a11 = rdot(g1, g1), a12 = rdot(g1, g2), a22 = rdot(g2, g2);
        const double det = a11 * a22 - a12 * a12;
        double l1, l2;
        if (std::abs(det) < 1e-30 * (a11 * a22 + 1e-300)) {
            const double nz = a11 + a22;
            if (nz < 1e-300) return std::nullopt;
            l1 = r1 / nz;
            l2 = r2 / nz;
        } else {
            l1 = (a22 * r1 - a12 * r2) / det;
            l2 = (a11 * r2 - a12 * r1) / det;
        }
        for (std::size_t i = 0; i < n; ++i) x[i] -= l1 * g1[i] + l2 * g2[i];
        const double nn = vec_norm(x);
        if (nn < 1e-12) return std::nullopt;
        for (cx& z : x) z /= nn;
    }
    return std::nullopt;
}

// Bisect the quadratic form along the arc between two orthonormal vectors.
Vector bisect_sign_change(const ComplexMatrix& H, const Vector& vpos, const Vector& vneg) {
    auto form = [&](double t) {
        Vector x(vpos.size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (1.0 - t) * vpos[i] + t * vneg[i];
        const double nn = vec_norm(x);
        for (cx& z : x) z /= nn;
        return std::pair<double, Vector>{inner(matvec(H, x), x).real(), std::move(x)};
    };
    double lo = 0.0, hi = 1.0;
    Vector best = vpos;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        auto [val, x] = form(mid);
        best = std::move(x);
        if (val >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return best;
}

} // namespace

std::optional<Vector> numrange_zero_witness(const ComplexMatrix& M, double target) {
    const std::size_t n = M.rows();
    if (n == 0) return std::nullopt;
    if (n == 1) {
        if (std::abs(M(0, 0)) <= target) return Vector{cx{1.0, 0.0}};
        return std::nullopt;
    }
    ComplexMatrix H(n, n), K(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            H(i, j) = 0.5 * (M(i, j) + std::conj(M(j, i)));
            K(i, j) = cx{0.0, -0.5} * (M(i, j) - std::conj(M(j, i)));
        }
    const HermEigen eh = herm_eig_core(H, true);
    const HermEigen ek = herm_eig_core(K, true);
    auto column = [n](const ComplexMatrix& Q, std::size_t j) {
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = Q(i, j);
        return v;
    };

    const Vector hmax = column(eh.eigenvectors, n - 1);
    const Vector hmin = column(eh.eigenvectors, 0);
    const Vector kmax = column(ek.eigenvectors, n - 1);
    const Vector kmin = column(ek.eigenvectors, 0);

    std::vector<Vector> starts;
    starts.push_back(bisect_sign_change(H, hmax, hmin));
    starts.push_back(bisect_sign_change(K, kmax, kmin));
    starts.push_back(hmax);
    starts.push_back(hmin);
    starts.push_back(kmax);
    starts.push_back(kmin);

    // deterministic pseudo-random fallback starts
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
    };
    for (int k = 0; k < 40; ++k) {
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = cx{next(), next()};
        if (vec_norm(v) > 1e-6) starts.push_back(std::move(v));
    }

    std::optional<Vector> best;
    double best_val = std::numeric_limits<double>::infinity();
    for (const Vector& s : starts) {
        if (auto x = gauss_newton_zero(H, K, s, target)) {
            const double val = std::abs(inner(matvec(M, *x), *x));
            if (val < best_val) {
                best_val = val;
                best = std::move(x);
            }
            if (best_val <= target) return best;
        }
    }
    if (best && best_val <= target) return best;
    return std::nullopt;
}

} // namespace bjorth
