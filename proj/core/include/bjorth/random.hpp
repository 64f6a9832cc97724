#pragma once

#include <cstdint>
#include <random>

#include "bjorth/matrix.hpp"

namespace bjorth {

/// Seeded generator for reproducible experiment streams. Parallel batches
/// must derive child seeds deterministically via `child`.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }

    double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

    cx complex_gaussian() { return cx{gaussian(), gaussian()}; }

    cx unimodular() { return std::polar(1.0, uniform(0.0, 2.0 * 3.14159265358979323846)); }

    Vector vector(std::size_t n) {
        Vector v(n);
        for (cx& z : v) z = complex_gaussian();
        return v;
    }

    Vector unit_vector(std::size_t n) { return normalized(vector(n)); }

    ComplexMatrix matrix(std::size_t rows, std::size_t cols) {
        ComplexMatrix M(rows, cols);
        for (cx& z : M.data()) z = complex_gaussian();
        return M;
    }

    /// Haar-ish unitary via Gram-Schmidt of a Gaussian matrix.
    ComplexMatrix unitary(std::size_t n) {
        ComplexMatrix M = matrix(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                cx proj{};
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(M(i, k)) * M(i, j);
                for (std::size_t i = 0; i < n; ++i) M(i, j) -= proj * M(i, k);
            }
            double nn = 0.0;
            for (std::size_t i = 0; i < n; ++i) nn += std::norm(M(i, j));
            nn = std::sqrt(nn);
            for (std::size_t i = 0; i < n; ++i) M(i, j) /= nn;
        }
        return M;
    }

    Rng child(std::uint64_t stream) {
        return Rng(seed_mix(engine_(), stream));
    }

    static std::uint64_t seed_mix(std::uint64_t a, std::uint64_t b) {
        a ^= b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
        return a;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace bjorth
