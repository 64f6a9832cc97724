#include "bjorth/maps.hpp"

#include <cmath>

#include "bjorth/random.hpp"

namespace bjorth {

namespace {

bool unitary_to(const ComplexMatrix& U, double eps) {
    if (!U.square()) return false;
    ComplexMatrix G = U.adjoint() * U;
    G -= ComplexMatrix::identity(U.rows());
    return G.max_abs() <= eps;
}

ComplexMatrix apply_flavor(BlockFlavor f, const ComplexMatrix& X) {
    switch (f) {
    case BlockFlavor::Id: return X;
    case BlockFlavor::Adjoint: return X.adjoint();
    case BlockFlavor::Conjugate: return X.conj();
    case BlockFlavor::Transpose: return X.transpose();
    }
    return X;
}

Vector column(const ComplexMatrix& M, std::size_t j) {
    Vector v(M.rows());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = M(i, j);
    return v;
}

} // namespace

void IsometrySpec::validate() const {
    const std::size_t l = shape.block_count();
    if (permutation.size() != l || left.size() != l || right.size() != l || flavors.size() != l)
        throw ShapeMismatch("isometry spec: field lengths disagree");
    std::vector<bool> hit(l, false);
    for (std::size_t k = 0; k < l; ++k) {
        if (permutation[k] >= l || hit[permutation[k]])
            throw SizeViolation("isometry spec: permutation is not a bijection");
        hit[permutation[k]] = true;
        if (shape.block_sizes[k] != shape.block_sizes[permutation[k]])
            throw SizeViolation("isometry spec: permutation mixes block sizes");
        const std::size_t n = shape.block_sizes[k];
        if (left[k].rows() != n || !unitary_to(left[k], 1e-10) || right[k].rows() != n ||
            !unitary_to(right[k], 1e-10))
            throw ShapeMismatch("isometry spec: non-unitary or mis-sized factor");
    }
}

IsometrySpec IsometrySpec::identity(const AlgebraShape& s) {
    IsometrySpec spec;
    spec.shape = s;
    for (std::size_t k = 0; k < s.block_count(); ++k) {
        spec.permutation.push_back(k);
        spec.left.push_back(ComplexMatrix::identity(s.block_sizes[k]));
        spec.right.push_back(ComplexMatrix::identity(s.block_sizes[k]));
        spec.flavors.push_back(BlockFlavor::Id);
    }
    return spec;
}

IsometrySpec IsometrySpec::inverse() const {
    validate();
    IsometrySpec inv;
    inv.shape = shape;
    const std::size_t l = shape.block_count();
    inv.permutation.resize(l);
    inv.left.resize(l);
    inv.right.resize(l);
    inv.flavors.resize(l);
    for (std::size_t k = 0; k < l; ++k) {
        const std::size_t j = permutation[k];
        inv.permutation[j] = k;
        switch (flavors[k]) {
        case BlockFlavor::Id:
            inv.flavors[j] = BlockFlavor::Id;
            inv.left[j] = left[k].adjoint();
            inv.right[j] = right[k].adjoint();
            break;
        case BlockFlavor::Adjoint:
            inv.flavors[j] = BlockFlavor::Adjoint;
            inv.left[j] = right[k].adjoint();
            inv.right[j] = left[k].adjoint();
            break;
        case BlockFlavor::Conjugate:
            inv.flavors[j] = BlockFlavor::Conjugate;
            inv.left[j] = left[k].transpose();
            inv.right[j] = right[k].transpose();
            break;
        case BlockFlavor::Transpose:
            inv.flavors[j] = BlockFlavor::Transpose;
            inv.left[j] = right[k].transpose();
            inv.right[j] = left[k].transpose();
            break;
        }
    }
    return inv;
}

AlgebraElement apply_isometry(const IsometrySpec& spec, const AlgebraElement& X) {
    spec.validate();
    X.validate();
    if (spec.shape != X.shape) throw ShapeMismatch("apply_isometry: shapes differ");
    AlgebraElement out = AlgebraElement::zero(X.shape);
    for (std::size_t k = 0; k < X.blocks.size(); ++k)
        out.blocks[spec.permutation[k]] =
            spec.left[k] * apply_flavor(spec.flavors[k], X.blocks[k]) * spec.right[k].adjoint();
    return out;
}

PreservationReport strong_preservation_test(const BJMap& map, const AlgebraShape& shape,
                                            std::size_t n_pairs, std::uint64_t seed) {
    PreservationReport rep;
    Rng rng(seed);

    auto random_element = [&]() {
        AlgebraElement E = AlgebraElement::zero(shape);
        for (std::size_t k = 0; k < E.blocks.size(); ++k)
            E.blocks[k] = rng.matrix(shape.block_sizes[k], shape.block_sizes[k]);
        return E;
    };

    auto check_pair = [&](const AlgebraElement& A, const AlgebraElement& B) {
        const BJState before = bj_orthogonal_alg(A, B, false).state;
        const BJState after = bj_orthogonal_alg(map.forward(A), map.forward(B), false).state;
        if (before == BJState::Borderline || after == BJState::Borderline) {
            ++rep.borderline_skipped;
            return;
        }
        ++rep.pairs;
        if (before != after) ++rep.violations;
    };

    // Edge pairs a translation-like defect would break immediately.
    const AlgebraElement zero = AlgebraElement::zero(shape);
    const AlgebraElement probe = random_element();
    check_pair(zero, zero);
    check_pair(probe, zero);
    check_pair(zero, probe);

    for (std::size_t t = 0; t < n_pairs; ++t) {
        AlgebraElement A = random_element();
        AlgebraElement B = random_element();
        switch (t % 3) {
        case 0:
            break; // uniform pair
        case 1: {
            // Orthogonalize B against A at a norming vector of A.
            const auto [na, norming] = alg_norm_and_norming_blocks(A);
            (void)na;
            const std::size_t j = *norming.begin();
            const NormingSubspace ns = norm_attain_set(A.blocks[j]);
            const Vector x1 = column(ns.basis, 0);
            const Vector w = matvec(A.blocks[j], x1);
            const cx form = inner(w, matvec(B.blocks[j], x1));
            const cx corr = std::conj(form) / cx{vec_norm(w) * vec_norm(w), 0.0};
            ComplexMatrix shift = outer(w, x1);
            shift *= corr;
            B.blocks[j] -= shift;
            break;
        }
        case 2:
            // Scalar multiple, never orthogonal to A.
            B = A;
            B *= cx{0.5 + rng.uniform(), rng.uniform()};
            break;
        }
        check_pair(A, B);
    }
    return rep;
}

BJMap build_theorem_map(const IsometrySpec& psi, const GaugeSpec& g) {
    psi.validate();
    BJMap map;
    map.kind = MapKind::TheoremForm;

    auto evaluate_gauge = [g](const AlgebraElement& X) {
        const cx gamma = g.gamma(X);
        if (std::abs(std::abs(gamma) - 1.0) > 1e-10)
            throw GaugeViolation("theorem map: gamma is not unimodular");
        const CentralElement P = g.gauge(X);
        if (P.shape != X.shape) throw ShapeMismatch("theorem map: gauge shape");
        if (alg_norm(X) > tol::delta_zero && !central_gauge_check(X, P))
            throw GaugeViolation("theorem map: gauge changes the norming blocks");
        return std::make_pair(gamma, P);
    };

    map.forward = [psi, evaluate_gauge](const AlgebraElement& X) {
        X.validate();
        const auto [gamma, P] = evaluate_gauge(X);
        AlgebraElement scaled_x = central_multiply(P, X);
        scaled_x *= gamma;
        return apply_isometry(psi, scaled_x);
    };

    const IsometrySpec psi_inv = psi.inverse();
    map.inverse = [psi_inv, evaluate_gauge](const AlgebraElement& Y) {
        const AlgebraElement W = apply_isometry(psi_inv, Y);
        // gamma(X) P(X) X = W; the gauge depends only on data the gauge
        // itself must preserve, so a fixed-point iteration settles fast.
        AlgebraElement X = W;
        for (int iter = 0; iter < 60; ++iter) {
            const auto [gamma, P] = evaluate_gauge(X);
            CentralElement Pinv = P;
            for (cx& z : Pinv.scalars) z = cx{1.0, 0.0} / z;
            AlgebraElement next = central_multiply(Pinv, W);
            next *= std::conj(gamma);
            AlgebraElement diff = next - X;
            X = std::move(next);
            double delta = 0.0;
            for (const auto& b : diff.blocks) delta = std::max(delta, b.max_abs());
            if (delta <= 1e-13 * (1.0 + alg_norm(X))) break;
        }
        return X;
    };
    return map;
}

BJMap counterexample_gauge_map(const AlgebraShape& shape, std::function<double(double)> gamma,
                               std::function<double(double)> gamma_inverse) {
    if (shape.block_count() != 2 || shape.block_sizes[0] < 2 || shape.block_sizes[1] < 2)
        throw InvalidShape("gauge counterexample: need two blocks of size >= 2");

    // Detect X = I + rI with r in the open interval (0,1).
    auto match_r = [shape](const AlgebraElement& X) -> std::optional<double> {
        if (X.shape != shape) throw ShapeMismatch("gauge counterexample: wrong shape");
        ComplexMatrix d0 = X.blocks[0];
        d0 -= ComplexMatrix::identity(shape.block_sizes[0]);
        if (d0.max_abs() > 1e-12) return std::nullopt;
        const cx r0 = X.blocks[1](0, 0);
        if (std::abs(r0.imag()) > 1e-12) return std::nullopt;
        const double r = r0.real();
        if (r <= 1e-12 || r >= 1.0 - 1e-12) return std::nullopt;
        ComplexMatrix d1 = X.blocks[1];
        ComplexMatrix rI = ComplexMatrix::identity(shape.block_sizes[1]);
        rI *= cx{r, 0.0};
        d1 -= rI;
        if (d1.max_abs() > 1e-12) return std::nullopt;
        return r;
    };

    auto remap = [shape, match_r](const AlgebraElement& X, const std::function<double(double)>& f) {
        const auto r = match_r(X);
        if (!r) return X;
        AlgebraElement out = AlgebraElement::identity(shape);
        out.blocks[1] *= cx{f(*r), 0.0};
        return out;
    };

    BJMap map;
    map.kind = MapKind::GaugeCounterexample;
    map.forward = [remap, gamma](const AlgebraElement& X) { return remap(X, gamma); };
    map.inverse = [remap, gamma_inverse](const AlgebraElement& X) { return remap(X, gamma_inverse); };
    return map;
}

BJMap counterexample_abelian_map() {
    const AlgebraShape shape{{1, 1}};
    auto flip = [shape](const AlgebraElement& X) {
        if (X.shape != shape) throw ShapeMismatch("abelian counterexample: wrong shape");
        const cx x1 = X.blocks[0](0, 0);
        const cx x2 = X.blocks[1](0, 0);
        if (std::abs(x1) > 0.0) {
            const cx ratio = x2 / x1;
            if (std::abs(ratio.real()) <= 1e-12 * (std::abs(ratio) + 1.0)) {
                AlgebraElement out = X;
                out.blocks[1](0, 0) = -x2;
                return out;
            }
        }
        return X;
    };
    BJMap map;
    map.kind = MapKind::AbelianCounterexample;
    map.forward = flip;
    map.inverse = flip; // an involution
    return map;
}

RankOneRecovery recover_rank_one_structure(const BJMap& map, std::size_t n) {
    if (n < 3) throw InvalidShape("recover_rank_one_structure: need n >= 3");
    const AlgebraShape shape{{n}};

    auto image = [&](const ComplexMatrix& X) {
        AlgebraElement E = AlgebraElement::zero(shape);
        E.blocks[0] = X;
        return map.forward(E).blocks[0];
    };

    std::vector<std::vector<ComplexMatrix>> F(n, std::vector<ComplexMatrix>(n));
    std::vector<std::vector<SVDResult>> Fsvd(n, std::vector<SVDResult>(n));
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            F[i][j] = image(ComplexMatrix::unit(n, n, i, j));
            Fsvd[i][j] = svd(F[i][j]);
            const auto& s = Fsvd[i][j].singular_values;
            if (s[0] <= 1e-12) throw NotRankOnePreserving("matrix unit mapped to zero");
            if (s[1] > 1e-6 * s[0])
                throw NotRankOnePreserving("matrix unit image has rank above one");
            top = std::max(top, s[0]);
        }
    }
    // A few generic rank-one probes beyond the units.
    Rng rng(0x51ab1eULL);
    for (int t = 0; t < 4; ++t) {
        const SVDResult d = svd(image(outer(rng.unit_vector(n), rng.unit_vector(n))));
        if (d.singular_values[0] <= 1e-12 || d.singular_values[1] > 1e-6 * d.singular_values[0])
            throw NotRankOnePreserving("generic rank-one image has rank above one");
    }

    auto parallel = [](const Vector& a, const Vector& b) {
        return std::abs(inner(a, b)) >= 1.0 - 1e-6;
    };

    RankOneRecovery rec;
    const Vector l11 = column(Fsvd[0][0].left_vectors, 0);
    const Vector l12 = column(Fsvd[0][1].left_vectors, 0);
    const Vector r11 = column(Fsvd[0][0].right_vectors, 0);
    const Vector r12 = column(Fsvd[0][1].right_vectors, 0);
    if (parallel(l11, l12)) {
        rec.flavor = RankOneFlavor::RowPreserving;
    } else if (parallel(r11, r12)) {
        rec.flavor = RankOneFlavor::RowToColumn;
        // A transposed probe grid turns the fit into the row-preserving case.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) std::swap(F[i][j], F[j][i]);
    } else {
        throw AmbiguousFit("images of one row share neither left nor right vectors");
    }

    // Chain the unitary columns off the (1,1) image so all phases cancel.
    const SVDResult d11 = svd(F[0][0]);
    const Vector u1 = column(d11.left_vectors, 0);
    ComplexMatrix V(n, n), U(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector vj = matvec(F[0][j].adjoint(), u1);
        for (std::size_t i = 0; i < n; ++i) V(i, j) = vj[i];
    }
    const Vector v1 = column(V, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector ui = matvec(F[i][0], v1);
        for (std::size_t r = 0; r < n; ++r) U(r, i) = ui[r];
    }

    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ComplexMatrix R = outer(column(U, i), column(V, j));
            R -= F[i][j];
            residual = std::max(residual, R.max_abs());
        }
    }
    rec.residual = residual;
    if (residual > 1e-6 * std::max(top, 1.0))
        throw AmbiguousFit("matrix unit images do not factor through a unitary pair");
    rec.left = std::move(U);
    rec.right = std::move(V);
    return rec;
}

} // namespace bjorth
