#pragma once

// Leibniz homology with trivial coefficients from the Loday complex
//   d(x1 ... xn) = sum_{i<j} (-1)^j (x1, ..., [xi, xj], ..., ^xj, ..., xn).

#include "leibxmod/algebra.hpp"

namespace leibxmod {

inline constexpr std::size_t max_boundary_degree = 4;

/// Matrix of d_n : q^{(x)n} -> q^{(x)(n-1)} on the lexicographic tensor basis,
/// for 1 <= n <= 4. Throws std::out_of_range otherwise.
Matrix boundary(const LeibnizAlgebra& q, std::size_t n);

/// dim HL_n(q) for 1 <= n <= 3.
std::size_t hl(const LeibnizAlgebra& q, std::size_t n);

}  // namespace leibxmod
