#pragma once

namespace bjorth::tol {

// Relative Hermitian-symmetry gate for herm_eig inputs.
inline constexpr double eps_herm = 1e-12;
// Residual bounds for eigen/SVD reconstruction invariants.
inline constexpr double eps_eig = 1e-9;
inline constexpr double eps_svd = 1e-9;
// Relative eigenvalue clustering width for the norm-attainment subspace.
inline constexpr double eps_rank = 1e-10;
// Tri-state decision band: margins below -delta_margin are NotOrthogonal.
inline constexpr double delta_margin = 1e-7;
// Margins above -delta_noise count as Orthogonal; BJ orthogonality is a
// closed condition, so exact-zero margins (rank-one pairs, boundary
// touching) are the generic orthogonal case and must not land Borderline.
inline constexpr double delta_noise = 1e-12;
// Norm threshold under which an element counts as zero.
inline constexpr double delta_zero = 1e-12;
// Numerical-range support-function refinement target in theta.
inline constexpr double theta_refine = 1e-10;

} // namespace bjorth::tol
