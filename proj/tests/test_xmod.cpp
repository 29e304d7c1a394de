#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "leibxmod/xmod.hpp"
#include "support/random_algebras.hpp"
#include "support/standard_algebras.hpp"

using namespace leibxmod;
using namespace leibxmod::testing;

namespace {

Subspace line(std::size_t d, std::size_t i)
{
    return Subspace::span(d, {unit_vector(d, i)});
}

std::vector<CrossedModule> sample_xmods()
{
    std::vector<CrossedModule> out{identity_xmod(n2()),
                                   identity_xmod(sl2()),
                                   identity_xmod(heisenberg()),
                                   zero_top_xmod(n2()),
                                   ideal_xmod(n2(), line(2, 1)),
                                   ideal_xmod(heisenberg(), line(3, 2)),
                                   abelian_xmod(2, 1, Matrix{{1, 0}}),
                                   abelian_xmod(1, 2, Matrix(2, 1)),
                                   direct_sum(identity_xmod(n2()), identity_xmod(sl2()))};
    for (const auto& a : random_leibniz_algebras(5, 8)) {
        out.push_back(identity_xmod(a));
        out.push_back(ideal_xmod(a, derived_subspace(a)));
    }
    return out;
}

}  // namespace

TEST_CASE("check_xmod examples")
{
    CHECK(check_xmod(ideal_xmod(n2(), line(2, 1))).valid());
    CHECK(check_xmod(ideal_xmod(sl2(), Subspace::full(3))).valid());

    // (m, q, 0): the abelian line with sl2 acting trivially, and k acting on k^2 nilpotently.
    CHECK(check_xmod(module_xmod(LeibnizAlgebra::abelian("k", 1), sl2(), LeibnizAction::trivial(3, 1))).valid());
    LeibnizAction nil(1, 2);
    nil.set_left(0, 0, Vector{0, 1});
    nil.set_right(0, 0, Vector{0, -1});
    auto km = module_xmod(LeibnizAlgebra::abelian("k2", 2), LeibnizAlgebra::abelian("k", 1), nil);
    CHECK(check_xmod(km).valid());

    auto good = identity_xmod(n2());
    CHECK(check_xmod(good).valid());
    auto bad = good;
    bad.action = LeibnizAction::trivial(2, 2);
    auto report = check_xmod(bad);
    REQUIRE_FALSE(report.valid());
    bool saw = false;
    for (const auto& v : report.violations())
        saw = saw || (v.condition == "^delta(n1) n2 = [n1, n2]" && v.where == std::vector<std::string>{"e1", "e1"});
    CHECK(saw);

    bad.delta = Matrix(1, 1);
    CHECK_THROWS_AS(check_xmod(bad), std::invalid_argument);
}

TEST_CASE("crossed_ideal_closure")
{
    auto xm = identity_xmod(n2());
    CHECK(crossed_ideal_closure(xm, zero_pair(xm)) == zero_pair(xm));
    CHECK(crossed_ideal_closure(xm, {Subspace(2), line(2, 0)}) == SubPair{line(2, 1), Subspace::full(2)});

    auto ab = abelian_xmod(2, 2, Matrix{{1, 1}, {0, 0}});
    SubPair seed{Subspace::span(2, {Vector{1, 0}}), Subspace(2)};
    auto closed = crossed_ideal_closure(ab, seed);
    CHECK(closed.top == seed.top);
    CHECK(closed.base == map_subspace(ab.delta, seed.top));
}

TEST_CASE("commutator and derived")
{
    auto xm = identity_xmod(n2());
    auto zero = commutator(xm, zero_pair(xm), zero_pair(xm));
    CHECK(zero.pair == zero_pair(xm));
    CHECK(zero.closed);
    SubPair e2{line(2, 1), line(2, 1)};
    auto d = commutator(xm, full_pair(xm), full_pair(xm));
    CHECK(d.pair == e2);
    CHECK(d.closed);

    auto s = identity_xmod(sl2());
    CHECK(derived_xmod(s) == full_pair(s));
    CHECK_THROWS_AS(commutator(xm, {line(2, 0), Subspace(2)}, full_pair(xm)), std::invalid_argument);
}

TEST_CASE("center_xmod")
{
    auto ab = abelian_xmod(2, 3, Matrix(3, 2));
    CHECK(center_xmod(ab) == full_pair(ab));
    auto xm = identity_xmod(n2());
    CHECK(center_xmod(xm) == SubPair{line(2, 1), line(2, 1)});
    auto s = identity_xmod(sl2());
    CHECK(center_xmod(s) == zero_pair(s));
}

TEST_CASE("abelianization")
{
    auto ab = abelian_xmod(2, 1, Matrix{{1, 1}});
    auto a = abelianization(ab);
    CHECK(a.xmod.top.dim() == 2);
    CHECK(a.xmod.base.dim() == 1);
    CHECK(a.xmod.delta == ab.delta);

    auto n = abelianization(identity_xmod(n2()));
    CHECK(n.xmod.top.dim() == 1);
    CHECK(n.xmod.base.dim() == 1);
    CHECK(n.xmod.action.is_trivial());
    CHECK(check_xmod(n.xmod).valid());
    CHECK(predicates(n.xmod).abelian);

    auto s = abelianization(identity_xmod(sl2()));
    CHECK(s.xmod.top.dim() == 0);
    CHECK(s.xmod.base.dim() == 0);
}

TEST_CASE("liezation")
{
    auto s = identity_xmod(sl2());
    auto ls = liezation(s);
    CHECK(ls.projection.top_map == Matrix::identity(3));
    CHECK(ls.projection.base_map == Matrix::identity(3));

    auto n = liezation(identity_xmod(n2()));
    CHECK(n.xmod.top.dim() == 1);
    CHECK(n.xmod.base.dim() == 1);
    CHECK(n.top_quotient.relations() == line(2, 1));

    auto ab = abelian_xmod(2, 2, Matrix{{1, 0}, {0, 0}});
    auto la = liezation(ab);
    CHECK(la.xmod.top.dim() == 2);
    CHECK(la.xmod.base.dim() == 2);
    CHECK(la.xmod.delta == ab.delta);
}

TEST_CASE("predicates")
{
    auto s = predicates(identity_xmod(sl2()));
    CHECK(s.perfect);
    CHECK_FALSE(s.abelian);
    auto k = predicates(identity_xmod(LeibnizAlgebra::abelian("k", 1)));
    CHECK(k.abelian);
    CHECK(k.abelian_by_components);
    auto n = predicates(identity_xmod(n2()));
    CHECK_FALSE(n.perfect);
    CHECK_FALSE(n.abelian);
}

TEST_CASE("quotient_xmod")
{
    auto xm = identity_xmod(n2());
    auto same = quotient_xmod(xm, zero_pair(xm));
    CHECK(same.xmod.top.same_structure(xm.top));
    CHECK(same.xmod.delta == xm.delta);
    CHECK(same.xmod.action == xm.action);

    auto q = quotient_xmod(xm, {line(2, 1), line(2, 1)});
    CHECK(q.xmod.top.dim() == 1);
    CHECK(predicates(q.xmod).abelian);

    auto z = quotient_xmod(xm, full_pair(xm));
    CHECK(z.xmod.top.dim() == 0);
    CHECK(z.xmod.base.dim() == 0);

    CHECK_THROWS_AS(quotient_xmod(xm, {Subspace(2), line(2, 0)}), std::invalid_argument);
}

TEST_CASE("crossed module properties on a sample")
{
    for (const auto& xm : sample_xmods()) {
        CAPTURE(xm.name);
        REQUIRE(check_xmod(xm).valid());

        auto z = center_xmod(xm);
        CHECK(is_crossed_ideal(xm, z));
        CHECK(crossed_ideal_closure(xm, z) == z);
        auto full = full_pair(xm);
        auto d = commutator(xm, full, full);
        CHECK(d.closed);
        CHECK(is_crossed_ideal(xm, d.pair));

        // Top of the derived pair: top brackets plus all action terms.
        Subspace expected = span_brackets(xm.top, Subspace::full(xm.top.dim()), Subspace::full(xm.top.dim()));
        std::vector<Vector> acts;
        for (std::size_t i = 0; i < xm.base.dim(); ++i)
            for (std::size_t j = 0; j < xm.top.dim(); ++j) {
                acts.push_back(xm.action.left(i, j));
                acts.push_back(xm.action.right(j, i));
            }
        expected = expected + Subspace::span(xm.top.dim(), acts);
        CHECK(d.pair.top == expected);

        auto ab = abelianization(xm);
        CHECK(check_xmod(ab.xmod).valid());
        CHECK(predicates(ab.xmod).abelian);
        CHECK(check_xmod_hom(ab.projection).valid());

        auto lie = liezation(xm);
        CHECK(check_xmod(lie.xmod).valid());
        CHECK(is_lie(lie.xmod.top));
        CHECK(is_lie(lie.xmod.base));
        CHECK(check_xmod_hom(lie.projection).valid());

        auto flags = predicates(xm);
        CHECK(flags.abelian == flags.abelian_by_components);

        auto qz = quotient_xmod(xm, z);
        CHECK(check_xmod(qz.xmod).valid());

        auto sub = sub_xmod(xm, z);
        CHECK(check_xmod(sub.xmod).valid());
        CHECK(check_xmod_hom(sub.inclusion).valid());
    }
}
