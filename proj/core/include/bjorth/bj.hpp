#pragma once

#include <optional>

#include "bjorth/linalg.hpp"
#include "bjorth/matrix.hpp"

namespace bjorth {

/// Orthonormal basis of the norm-attainment subspace M0(A) = Ker(|A|^2 I - A*A).
struct NormingSubspace {
    std::size_t ambient_dim = 0;
    ComplexMatrix basis; // column-orthonormal, d >= 1 columns
    double norm_value = 0.0;

    std::size_t dim() const { return basis.cols(); }
};

enum class BJState { Orthogonal, NotOrthogonal, Borderline };

struct BJVerdict {
    BJState state = BJState::NotOrthogonal;
    double margin = 0.0;
    std::optional<Vector> witness; // unit x in M0(A) with <Ax,Bx> ~ 0
};

NormingSubspace norm_attain_set(const ComplexMatrix& A, double eps_rank = tol::eps_rank);

/// Numerical-range criterion: A _|_ B iff 0 in W(P*(B*A)P) with P spanning M0(A).
BJVerdict bj_orthogonal_criterion(const ComplexMatrix& A, const ComplexMatrix& B,
                                  bool want_witness = true);

/// Definition-as-optimization: minimize |A + lambda B| over the disk
/// |lambda| <= 2|A|/|B|; Orthogonal iff the minimum stays at |A|.
BJVerdict bj_orthogonal_minimize(const ComplexMatrix& A, const ComplexMatrix& B);

/// Rank-one fast path: (xy*) _|_ X iff x* X y = 0.
BJVerdict rank_one_perp(const Vector& x, const Vector& y, const ComplexMatrix& X);

/// Tri-state from a signed relative margin (positive = orthogonal side).
BJState classify_margin(double relative_margin);

} // namespace bjorth
