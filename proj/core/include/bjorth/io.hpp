#pragma once

#include <iosfwd>
#include <string>

#include "bjorth/algebra.hpp"

namespace bjorth {

/// Text format: {"shape": [n_1,...], "blocks": [[[re,im], ...], ...]} with
/// each block listed row-major. Serialization round-trips exactly.
AlgebraElement parse_algebra(const std::string& text);
std::string serialize_algebra(const AlgebraElement& A);

AlgebraElement load_algebra(const std::string& path);
void save_algebra(const std::string& path, const AlgebraElement& A);

/// Boundary samples of the numerical range of M: K rows "theta,re,im" where
/// (re,im) is x*Mx at the support direction theta. 17 significant digits.
void write_numrange_csv(std::ostream& out, const ComplexMatrix& M, std::size_t samples);

} // namespace bjorth
