#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "leibxmod/homology.hpp"
#include "support/random_algebras.hpp"
#include "support/standard_algebras.hpp"

using namespace leibxmod;
using namespace leibxmod::testing;

TEST_CASE("boundaries of abelian algebras vanish")
{
    auto k = LeibnizAlgebra::abelian("k", 2);
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(boundary(k, n).is_zero());
    for (std::size_t d = 1; d <= 3; ++d)
        CHECK(hl(LeibnizAlgebra::abelian("k", d), 2) == d * d);
}

TEST_CASE("N2 boundaries")
{
    Matrix d2 = boundary(n2(), 2);
    CHECK(d2.rows() == 2);
    CHECK(d2.cols() == 4);
    // e1 (x) e1 is column 0 and maps to e2; everything else maps to 0.
    CHECK(d2.column(0) == Vector{0, 1});
    for (std::size_t c = 1; c < 4; ++c)
        CHECK(is_zero(d2.column(c)));
    CHECK(rank(d2) == 1);

    Matrix d3 = boundary(n2(), 3);
    CHECK(rank(d3) == 2);
    // Basis order e1e1, e1e2, e2e1, e2e2.
    Subspace expected = Subspace::span(4, {unit_vector(4, 1), unit_vector(4, 3)});
    CHECK(Subspace::image(d3) == expected);
    CHECK(hl(n2(), 2) == 1);
}

TEST_CASE("sl2 homology")
{
    CHECK(boundary(sl2(), 3).rows() == 9);
    CHECK(boundary(sl2(), 3).cols() == 27);
    CHECK(hl(sl2(), 2) == 0);
    CHECK(hl(sl2(), 1) == 0);
}

TEST_CASE("degree limits")
{
    CHECK_THROWS_AS(boundary(n2(), 0), std::out_of_range);
    CHECK_THROWS_AS(boundary(n2(), 5), std::out_of_range);
    CHECK_THROWS_AS(hl(n2(), 4), std::out_of_range);
}

TEST_CASE("d o d = 0")
{
    auto algebras = random_leibniz_algebras(31, 10);
    for (auto a : {n2(), sl2(), heisenberg()})
        algebras.push_back(a);
    for (const auto& a : algebras) {
        CAPTURE(a.name());
        for (std::size_t n = 2; n <= 4; ++n)
            CHECK((boundary(a, n - 1) * boundary(a, n)).is_zero());
        CHECK(hl(a, 1) == a.dim() - derived_subspace(a).dim());
    }
}
