#include "leibxmod/homology.hpp"

#include <stdexcept>

namespace leibxmod {

namespace {

std::size_t power(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp--)
        r *= base;
    return r;
}

std::vector<std::size_t> digits(std::size_t index, std::size_t base, std::size_t n)
{
    std::vector<std::size_t> out(n);
    for (std::size_t k = n; k-- > 0;) {
        out[k] = index % base;
        index /= base;
    }
    return out;
}

}  // namespace

Matrix boundary(const LeibnizAlgebra& q, std::size_t n)
{
    if (n < 1 || n > max_boundary_degree)
        throw std::out_of_range("boundary degree must be between 1 and " + std::to_string(max_boundary_degree));
    const std::size_t d = q.dim();
    Matrix m(power(d, n - 1), power(d, n));
    if (n == 1)
        return m;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        auto x = digits(col, d, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                // Positions are 1-based in the sign.
                const int sign = ((j + 1) % 2 == 0) ? 1 : -1;
                Vector br = q.bracket_basis(x[i], x[j]);
                for (std::size_t k = 0; k < d; ++k) {
                    if (sgn(br[k]) == 0)
                        continue;
                    std::size_t row = 0;
                    for (std::size_t p = 0; p < n; ++p) {
                        if (p == j)
                            continue;
                        row = row * d + (p == i ? k : x[p]);
                    }
                    m(row, col) += sign * br[k];
                }
            }
    }
    return m;
}

std::size_t hl(const LeibnizAlgebra& q, std::size_t n)
{
    if (n < 1 || n + 1 > max_boundary_degree)
        throw std::out_of_range("homology degree must be between 1 and " + std::to_string(max_boundary_degree - 1));
    Matrix dn = boundary(q, n);
    return dn.cols() - rank(dn) - rank(boundary(q, n + 1));
}

}  // namespace leibxmod
