#pragma once

#include <optional>
#include <vector>

#include "bjorth/matrix.hpp"
#include "bjorth/tolerances.hpp"

namespace bjorth {

enum class TriState { False, True, Borderline };

struct HermEigen {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix eigenvectors;      // columns, unitary
};

struct SVDResult {
    std::vector<double> singular_values; // descending, >= 0
    ComplexMatrix left_vectors;          // column-orthonormal
    ComplexMatrix right_vectors;         // column-orthonormal
};

struct NumRangeVerdict {
    TriState contains_zero = TriState::False;
    double margin = 0.0;    // -min_theta h(theta); positive when 0 lies outside W
    double theta_min = 0.0; // angle where the support function attains its minimum
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
HermEigen herm_eig(const ComplexMatrix& H);

/// One-sided Jacobi SVD. Right singular vectors carry the phase convention
/// "first nonzero entry real >= 0".
SVDResult svd(const ComplexMatrix& A);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& A);

/// Support function h(theta) = lambda_max(Re(e^{-i theta} M)) of the
/// numerical range W(M), together with the achieving unit vector.
double numrange_support(const ComplexMatrix& M, double theta, Vector* achiever = nullptr);

/// Membership test 0 in W(M) via a theta grid plus golden-section refinement.
/// W(M) is convex compact, so 0 in W(M) iff min_theta h(theta) >= 0.
NumRangeVerdict zero_in_numrange(const ComplexMatrix& M, std::size_t grid = 720,
                                 double refine_tol = tol::theta_refine);

/// Unit vector x with |x* M x| below `target` (absolute), when 0 lies in
/// W(M). Multi-start Gauss-Newton; returns nothing if every start stalls.
std::optional<Vector> numrange_zero_witness(const ComplexMatrix& M, double target);

} // namespace bjorth
