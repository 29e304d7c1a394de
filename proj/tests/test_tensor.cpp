#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "leibxmod/homology.hpp"
#include "leibxmod/tensor.hpp"
#include "support/random_algebras.hpp"
#include "support/standard_algebras.hpp"

using namespace leibxmod;
using namespace leibxmod::testing;

namespace {

MutualActionPair trivial_pair(std::size_t a, std::size_t b)
{
    return {LeibnizAlgebra::abelian("a", a), LeibnizAlgebra::abelian("b", b), LeibnizAction(a, b),
            LeibnizAction(b, a)};
}

Vector col(const Matrix& m, std::size_t c)
{
    return m.column(c);
}

}  // namespace

TEST_CASE("tensor product of abelian algebras with trivial actions")
{
    auto t = tensor_product(trivial_pair(2, 3));
    CHECK(t.tensor_relations().is_zero());
    CHECK(t.algebra().dim() == 12);
    CHECK(t.algebra().is_abelian());

    auto z = tensor_product(trivial_pair(0, 3));
    CHECK(z.ambient_dim() == 0);
    CHECK(z.algebra().dim() == 0);
}

TEST_CASE("square subspace")
{
    auto q = LeibnizAlgebra::abelian("q", 2);
    auto zero_m = module_xmod(LeibnizAlgebra::abelian("m", 1), q, LeibnizAction(2, 1));
    auto zero_n = module_xmod(LeibnizAlgebra::abelian("n", 2), q, LeibnizAction(2, 2));
    // With both maps zero every pair is in the pullback, so the square subspace
    // contains every m*n and every n*m.
    CHECK(square_subspace(zero_m, zero_n).is_full());

    for (auto a : {n2(), sl2(), heisenberg()}) {
        auto id = identity_xmod(a);
        auto sq = square_subspace(id, id);
        const std::size_t d = a.dim();
        CHECK(sq.dim() == d * d);
        auto p = tensor_product(induced_actions(id, id));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vector v = unit_vector(2 * d * d, p.mn_index(i, j));
                axpy(v, -1, unit_vector(2 * d * d, p.nm_index(i, j)));
                CHECK(sq.contains(v));
            }
    }

    auto zt = zero_top_xmod(n2());
    CHECK(square_subspace(zt, identity_xmod(n2())).is_zero());
    CHECK(square_subspace(zt, identity_xmod(n2())).ambient_dim() == 0);
}

TEST_CASE("exterior square of (0, K, i)")
{
    auto xm = zero_top_xmod(LeibnizAlgebra::abelian("K", 1));
    auto d = exterior_square_data(xm);
    CHECK(d.qq.algebra().dim() == 1);
    CHECK(d.qn.algebra().dim() == 0);
    CHECK(d.mu().is_zero());
    auto m = schur_multiplier(xm);
    CHECK(m.xmod().top.dim() == 0);
    CHECK(m.xmod().base.dim() == 1);
}

TEST_CASE("exterior square of (N2, N2, id)")
{
    auto xm = identity_xmod(n2());
    auto d = exterior_square_data(xm);
    const auto& qq = d.qq;
    REQUIRE(qq.algebra().dim() == 2);
    CHECK(qq.algebra().basis_names() == std::vector<std::string>{"e1*e1", "e2*e1"});
    Vector e1 = unit_vector(2, 0);
    Vector e2 = unit_vector(2, 1);
    CHECK(is_zero(qq.project(qq.mn(e1, e2))));
    CHECK(is_zero(qq.project(qq.mn(e2, e2))));
    CHECK(col(d.mu(), 0) == Vector{0, 1});
    CHECK(is_zero(col(d.mu(), 1)));

    auto m = schur_multiplier(xm);
    CHECK(m.xmod().top.dim() == 1);
    CHECK(m.xmod().base.dim() == 1);
    Vector e2e1 = qq.project(qq.nm(e2, e1));
    CHECK(m.pair().base == Subspace::span(2, {e2e1}));
    const auto& qn = d.qn;
    CHECK(m.pair().top == Subspace::span(qn.algebra().dim(), {qn.project(qn.nm(e2, e1))}));
}

TEST_CASE("exterior square of (sl2, sl2, id)")
{
    auto m = schur_multiplier(identity_xmod(sl2()));
    CHECK(m.xmod().top.dim() == 0);
    CHECK(m.xmod().base.dim() == 0);
}

TEST_CASE("abelian crossed modules: multiplier is the whole exterior crossed module")
{
    struct Case {
        std::size_t a, b;
        Matrix sigma;
    };
    std::vector<Case> cases{{1, 1, Matrix{{1}}},          {1, 1, Matrix{{0}}},      {2, 1, Matrix{{1, 0}}},
                            {1, 2, Matrix{{1}, {1}}},     {2, 2, Matrix{{1, 0}, {0, 0}}},
                            {2, 2, Matrix::identity(2)}, {2, 3, Matrix(3, 2)},     {3, 2, Matrix{{1, 2, 0}, {2, 4, 0}}}};
    for (const auto& c : cases) {
        auto xm = abelian_xmod(c.a, c.b, c.sigma);
        CAPTURE(xm.name);
        auto d = exterior_square_data(xm);
        CHECK(d.lambda().is_zero());
        CHECK(d.mu().is_zero());
        auto m = schur_multiplier(d);

        // Independent count: b^a = (b(x)a + a(x)b) / {sigma(x)(x)y - x(x)sigma(y)},
        // whose relations are independent modulo ker(sigma)(x)ker(sigma).
        const std::size_t r = rank(c.sigma);
        const std::size_t k = c.a - r;
        CHECK(m.xmod().top.dim() == 2 * c.a * c.b - c.a * c.a + k * k);
        CHECK(m.xmod().base.dim() == c.b * c.b);
        CHECK(rank(m.xmod().delta) == 2 * c.b * r - r * r);
    }
}

TEST_CASE("HL2 oracle and exterior invariants on random algebras")
{
    auto algebras = random_leibniz_algebras(77, 10);
    for (auto a : {n2(), sl2(), heisenberg(), LeibnizAlgebra::abelian("k1", 1), LeibnizAlgebra::abelian("k2", 2),
                   LeibnizAlgebra::abelian("k3", 3)})
        algebras.push_back(a);
    for (const auto& a : algebras) {
        CAPTURE(a.name());
        auto d = exterior_square_data(identity_xmod(a));
        CHECK(kernel(d.mu()).dim() == hl(a, 2));
        CHECK(rank(d.mu()) == derived_subspace(a).dim());
        CHECK(center_xmod(d.xmod).contains(SubPair{kernel(d.lambda()), kernel(d.mu())}));
    }
}

TEST_CASE("q^n for ideal crossed modules")
{
    for (const auto& a : random_leibniz_algebras(13, 8)) {
        CAPTURE(a.name());
        auto xm = ideal_xmod(a, derived_subspace(a));
        auto d = exterior_square_data(xm);
        CHECK(check_xmod(d.xmod).valid());
        CHECK(check_xmod_hom(d.phi).valid());
        CHECK(d.mu() * d.id_wedge_delta() == xm.delta * d.lambda());
    }
}

TEST_CASE("induced exterior maps")
{
    auto xm = identity_xmod(n2());
    XModHom id{xm, xm, Matrix::identity(2), Matrix::identity(2)};
    auto ind = induced_exterior_hom(id);
    CHECK(ind.hom.top_map == Matrix::identity(ind.source.xmod.top.dim()));
    CHECK(ind.hom.base_map == Matrix::identity(ind.source.xmod.base.dim()));
    CHECK(ind.kernel.top.is_zero());

    auto ab = abelianization(xm);
    auto proj = induced_exterior_hom(ab.projection);
    CHECK(proj.source.xmod.base.dim() == 2);
    CHECK(proj.target.xmod.base.dim() == 1);
    // e2*e1 has a leg in the kernel; e1*e1 maps onto the generator.
    CHECK(proj.kernel.base.dim() == 1);
    const auto& qq = proj.source.qq;
    CHECK(proj.kernel.base.contains(qq.project(qq.nm(unit_vector(2, 1), unit_vector(2, 0)))));

    auto zero = quotient_xmod(xm, full_pair(xm));
    auto z = induced_exterior_hom(zero.projection);
    CHECK(z.hom.top_map.is_zero());
    CHECK(z.hom.base_map.is_zero());

    XModHom not_onto{zero.xmod, xm, Matrix(2, 0), Matrix(2, 0)};
    CHECK_THROWS_AS(induced_exterior_hom(not_onto), std::invalid_argument);
}

TEST_CASE("maps between multipliers")
{
    auto xm = identity_xmod(n2());
    auto id = multiplier_functorial_map(XModHom{xm, xm, Matrix::identity(2), Matrix::identity(2)});
    CHECK(id.hom.top_map == Matrix::identity(1));
    CHECK(id.hom.base_map == Matrix::identity(1));

    // The generator e2*e1 of M(N2) has the leg e2, which dies in the Liezation.
    auto lie = liezation(xm);
    auto to_lie = multiplier_functorial_map(lie.projection);
    CHECK(to_lie.target.xmod().top.dim() == 1);
    CHECK(to_lie.target.xmod().base.dim() == 1);
    CHECK(to_lie.hom.top_map == Matrix{{0}});
    CHECK(to_lie.hom.base_map == Matrix{{0}});

    auto zero = quotient_xmod(xm, full_pair(xm));
    auto z = multiplier_functorial_map(zero.projection);
    CHECK(z.hom.top_map.is_zero());
    CHECK(z.hom.base_map.is_zero());
}

TEST_CASE("induced maps along random quotients")
{
    for (const auto& a : random_leibniz_algebras(17, 8)) {
        CAPTURE(a.name());
        auto xm = identity_xmod(a);
        auto ab = abelianization(xm);
        auto m = multiplier_functorial_map(ab.projection);
        CHECK(check_xmod_hom(m.hom).valid());
        auto l = multiplier_functorial_map(liezation(xm).projection);
        CHECK(check_xmod_hom(l.hom).valid());
    }
}
