#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bjorth/algebra.hpp"

namespace bjorth {

enum class BlockFlavor { Id, Adjoint, Conjugate, Transpose };

/// Real-linear isometry: per block apply the flavor, sandwich with unitaries,
/// then permute blocks of equal size.
struct IsometrySpec {
    AlgebraShape shape;
    std::vector<std::size_t> permutation; // output index of each input block
    std::vector<ComplexMatrix> left;      // U_k
    std::vector<ComplexMatrix> right;     // V_k
    std::vector<BlockFlavor> flavors;

    void validate() const;
    IsometrySpec inverse() const;
    static IsometrySpec identity(const AlgebraShape& s);
};

/// Scalar gauge gamma(X) on the unit circle and a positive central P(X) that
/// must keep the norming blocks of X unchanged. Both are opaque evaluations;
/// the invariants are checked lazily at every call.
struct GaugeSpec {
    std::function<cx(const AlgebraElement&)> gamma;
    std::function<CentralElement(const AlgebraElement&)> gauge;
};

enum class MapKind { Isometry, TheoremForm, GaugeCounterexample, AbelianCounterexample, Custom };

struct BJMap {
    MapKind kind = MapKind::Custom;
    std::function<AlgebraElement(const AlgebraElement&)> forward;
    std::function<AlgebraElement(const AlgebraElement&)> inverse;
};

AlgebraElement apply_isometry(const IsometrySpec& spec, const AlgebraElement& X);

struct PreservationReport {
    std::size_t pairs = 0;
    std::size_t violations = 0;
    std::size_t borderline_skipped = 0;

    bool pass() const { return violations == 0; }
};

/// Samples uniform, engineered-orthogonal, and engineered-non-orthogonal
/// pairs and counts disagreements of A _|_ B with Phi(A) _|_ Phi(B).
PreservationReport strong_preservation_test(const BJMap& map, const AlgebraShape& shape,
                                            std::size_t n_pairs, std::uint64_t seed);

/// X -> Psi(gamma(X) P(X) X); the general form every strong BJ preserver
/// takes on algebras without abelian summands.
BJMap build_theorem_map(const IsometrySpec& psi, const GaugeSpec& g);

/// On I + rI with r in (0,1) maps r through the given bijection of (0,1),
/// fixing everything else. Strongly preserves orthogonality without being an
/// isometry times a scalar function.
BJMap counterexample_gauge_map(const AlgebraShape& shape, std::function<double(double)> gamma,
                               std::function<double(double)> gamma_inverse);

/// On C^2 with the sup norm: conjugates the second coordinate on the lines
/// t(1, ri), r real, fixing everything else.
BJMap counterexample_abelian_map();

enum class RankOneFlavor { RowPreserving, RowToColumn };

struct RankOneRecovery {
    RankOneFlavor flavor = RankOneFlavor::RowPreserving;
    ComplexMatrix left;  // U, columns determined up to diagonal phases
    ComplexMatrix right; // V
    double residual = 0.0;
};

/// Probes a map on M_n (n >= 3) at the matrix units and fits X -> U X V* or
/// X -> U X^T V* from the images.
RankOneRecovery recover_rank_one_structure(const BJMap& map, std::size_t n);

} // namespace bjorth
