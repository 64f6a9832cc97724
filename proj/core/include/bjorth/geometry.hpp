#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bjorth/bj.hpp"
#include "bjorth/matrix.hpp"

namespace bjorth {

/// Linear matrix space {X : v_1* X u_1 = ... = v_k* X u_k = 0}.
struct OutgoingSpaceSpec {
    std::size_t ambient = 0;
    std::vector<std::pair<Vector, Vector>> constraints; // (v_i, u_i)

    void validate() const;
    bool contains(const ComplexMatrix& X, double eps) const;

    /// Entrywise space: zeros at positions (1,p),...,(1,n), 1-based.
    static OutgoingSpaceSpec first_row_zeros(std::size_t n, std::size_t p);
};

enum class FalsifyVerdict { Falsified, NotFalsified };

struct LeftSymmetryReport {
    FalsifyVerdict verdict = FalsifyVerdict::NotFalsified;
    std::optional<ComplexMatrix> counterexample; // B with A _|_ B but not B _|_ A
    std::size_t trials = 0;
};

/// Randomized refutation of relative left-symmetry of A within V. A
/// NotFalsified verdict is not a proof.
LeftSymmetryReport left_symmetric_falsify(const ComplexMatrix& A, const OutgoingSpaceSpec& V,
                                          std::size_t trials, std::uint64_t seed);

struct RankTwoLastColumn {
    ComplexMatrix B;
    SVDResult svd; // the closed-form two-term decomposition
};

/// B = conj(c) E_1n - conj(s) E_(n-1)n +- conj(s) E_n1 + conj(c) E_nn with its
/// explicit two-term SVD; requires |c|^2+|s|^2 = 1, cs != 0, n >= 3.
RankTwoLastColumn construct_Bpm(cx c, cx s, std::size_t n, int sign);

/// For B = x e_n* + e_n y* with nonzero (1n),(n1),(nn) entries: checks that
/// sigma_1 > sigma_2 strictly and both singular pairs see the (11) corner.
bool lastrow_svd_check(const ComplexMatrix& B);

/// True iff A and B span the same complex line (Ay parallel to By for random
/// y, cross-checked by a least-squares scalar fit).
bool locally_dependent_equiv(const ComplexMatrix& A, const ComplexMatrix& B, std::size_t trials,
                             std::uint64_t seed = 0x9d2c5680u);

/// True iff A is a scalar multiple of a unitary.
bool right_symmetric_check(const ComplexMatrix& A);

/// Numerical range of xy*: elliptic disc with foci 0 and y*x.
struct EllipseParams {
    cx focus2;         // the nonzero focus, y*x
    double minor_axis; // sqrt(|x|^2 |y|^2 - |y*x|^2)
};

EllipseParams rank_one_ellipse(const Vector& x, const Vector& y);

/// Angle between the complex lines Cx and Cy, in [0, pi/2].
double line_angle(const Vector& x, const Vector& y);

} // namespace bjorth
