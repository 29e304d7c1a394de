#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "leibxmod/extensions.hpp"
#include "support/sample_extensions.hpp"

#include <stdexcept>

using namespace leibxmod;
using namespace leibxmod::testing;

TEST_CASE("make_extension validates its input")
{
    auto total = zero_top_xmod(n2());
    auto k = zero_top_xmod(LeibnizAlgebra::abelian("K", 1));
    // Projection onto e2 is not a homomorphism: [e1,e1] = e2 maps to 1, not 0.
    CHECK_THROWS_AS(make_extension(total, k, Matrix(0, 0), Matrix{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_extension(total, k, Matrix(0, 0), Matrix(1, 2)), std::invalid_argument);

    auto e = n2_over_k();
    CHECK(e.kernel.top.dim() == 0);
    CHECK(e.kernel.base == coordinate_line(2, 1));
}

TEST_CASE("(0,N2,i) over (0,K,i) is a stem cover")
{
    auto e = n2_over_k();
    auto c = classify(e);
    CHECK(c.central);
    CHECK(c.stem_extension);
    CHECK(c.stem_cover);
    CHECK(c.multiplier_type == AbelianType{0, 1, 0});
    CHECK(c.kernel_type == AbelianType{0, 1, 0});

    auto t = theta_star(e);
    REQUIRE(t.hom.base_map.rows() == 1);
    REQUIRE(t.hom.base_map.cols() == 1);
    // The generator class of M lands on [e1, e1] = e2, which is the kernel's
    // only basis vector.
    CHECK(t.hom.base_map(0, 0) == 1);
    CHECK(t.hom.top_map.rows() == 0);

    auto p = stem_criteria(e);
    CHECK(p.kernel_in_derived);
    CHECK(p.theta_surjective);
    CHECK(p.kernel_dies_in_abelianization);
    CHECK(p.abelianizations_isomorphic);
    CHECK(p.theta_bijective);
    CHECK(p.cover);
    CHECK(p.characterizations_agree());
    CHECK(p.cover_criteria_agree());

    auto r = six_term_report(e);
    CHECK(r.checks.size() == 4);
    CHECK(r.exact_count() == 4);
    CHECK(r.exact());
    CHECK(r.nodes[2].top == 0);
    CHECK(r.nodes[2].base == 1);

    auto five = r.five_term();
    CHECK(five.nodes.size() == 5);
    CHECK(five.nodes.front().name == "M(total)");
    CHECK(five.checks.size() == 3);
    CHECK(five.exact());

    auto l = kernel_ideal_check(e);
    CHECK(l.ok());
    CHECK(l.connecting_well_defined);
    CHECK(l.valid_xmod);
    CHECK(l.xmod.top.is_abelian());
    CHECK(l.xmod.base.is_abelian());
}

TEST_CASE("split extension is central but not stem")
{
    auto e = split_over_k();
    auto c = classify(e);
    CHECK(c.central);
    CHECK_FALSE(c.stem_extension);
    CHECK_FALSE(c.stem_cover);

    auto t = theta_star(e);
    CHECK(t.hom.top_map.is_zero());
    CHECK(t.hom.base_map.is_zero());

    auto p = stem_criteria(e);
    CHECK_FALSE(p.kernel_in_derived);
    CHECK_FALSE(p.theta_surjective);
    CHECK_FALSE(p.kernel_dies_in_abelianization);
    CHECK_FALSE(p.abelianizations_isomorphic);
    CHECK(p.characterizations_agree());
    CHECK(p.cover_criteria_agree());
    CHECK(six_term_report(e).exact());
}

TEST_CASE("identity extensions")
{
    for (const auto& xm : {identity_xmod(n2()), identity_xmod(sl2()), zero_top_xmod(heisenberg())}) {
        CAPTURE(xm.name);
        auto e = identity_extension(xm);
        auto c = classify(e);
        CHECK(c.central);
        CHECK(c.stem_extension);
        auto m = schur_multiplier(xm);
        CHECK(c.stem_cover == (m.xmod().top.dim() + m.xmod().base.dim() == 0));

        auto l = kernel_ideal_check(e);
        CHECK(l.ok());
        CHECK(l.xmod.top.dim() == 0);
        CHECK(l.xmod.base.dim() == 0);

        auto r = six_term_report(e);
        CHECK(r.exact());
        CHECK(r.nodes[1].top == r.nodes[2].top);
        CHECK(r.nodes[1].base == r.nodes[2].base);
    }
    CHECK_FALSE(classify(identity_extension(identity_xmod(n2()))).stem_cover);
    CHECK(classify(identity_extension(identity_xmod(sl2()))).stem_cover);
}

TEST_CASE("non-central extensions are refused")
{
    // Killing all of (N2, N2, id) puts e1 in the kernel, and e1 is not central.
    auto xm = identity_xmod(n2());
    auto e = extension_from_ideal(xm, full_pair(xm));
    CHECK_FALSE(classify(e).central);
    CHECK_THROWS_AS(theta_star(e), std::invalid_argument);
    CHECK_THROWS_AS(six_term_report(e), std::invalid_argument);
    CHECK_THROWS_AS(stem_criteria(e), std::invalid_argument);
}

TEST_CASE("lift of sigma^id to b^p can fail")
{
    // (N2, N2, id) over its quotient by (0, span{e2}). In p^h the class of
    // e1 * e2 vanishes because e2 = [e1, e1] in p, while e1 * e2 survives in
    // b^p where e2 is not a bracket of elements of b.
    auto xm = identity_xmod(n2());
    auto e = extension_from_ideal(xm, {Subspace(2), coordinate_line(2, 1)});
    REQUIRE(classify(e).central);
    auto l = kernel_ideal_check(e);
    CHECK(l.ideal_is_span);
    CHECK(l.abelian);
    CHECK_FALSE(l.connecting_well_defined);
    CHECK(l.image_abelian_xmod);
    CHECK(l.ok());
    CHECK(six_term_report(e).exact());
}

TEST_CASE("stem cover of a perfect crossed module")
{
    auto e = stem_cover_of_perfect(identity_xmod(sl2()));
    auto c = classify(e);
    CHECK(c.stem_cover);
    CHECK(e.kernel.top.dim() == 0);
    CHECK(e.kernel.base.dim() == 0);
    CHECK(e.total.top.dim() == 3);
    CHECK(e.total.base.dim() == 3);
    auto ab = abelianization(e.total);
    CHECK(ab.xmod.top.dim() == 0);
    CHECK(ab.xmod.base.dim() == 0);
    auto m = schur_multiplier(e.total);
    CHECK(m.xmod().top.dim() == 0);
    CHECK(m.xmod().base.dim() == 0);
    CHECK(six_term_report(e).exact());

    CHECK_THROWS_AS(stem_cover_of_perfect(identity_xmod(n2())), std::invalid_argument);
    try {
        stem_cover_of_perfect(identity_xmod(n2()));
    } catch (const std::invalid_argument& ex) {
        CHECK(std::string(ex.what()).find("not perfect") != std::string::npos);
    }

    auto zero = stem_cover_of_perfect(abelian_xmod(0, 0, Matrix(0, 0)));
    CHECK(classify(zero).stem_cover);
    CHECK(zero.total.top.dim() == 0);
    CHECK(zero.total.base.dim() == 0);
}

TEST_CASE("a total with nonzero multiplier is not a cover of a perfect quotient")
{
    // (sl2 + K, sl2 + K, id) over (sl2, sl2, id): kernel (K, K) is central but
    // misses the derived part, and M(total) is nonzero.
    auto sum = direct_sum(identity_xmod(sl2()), identity_xmod(LeibnizAlgebra::abelian("K", 1)));
    auto e = extension_from_ideal(sum, {coordinate_line(4, 3), coordinate_line(4, 3)});
    auto c = classify(e);
    CHECK(c.central);
    CHECK_FALSE(c.stem_extension);
    CHECK_FALSE(c.stem_cover);
    auto m = schur_multiplier(e.total);
    CHECK(m.xmod().top.dim() + m.xmod().base.dim() > 0);
    auto p = stem_criteria(e);
    CHECK(p.characterizations_agree());
    CHECK(p.cover_criteria_agree());
}

TEST_CASE("central extension corpus")
{
    auto corpus = central_extension_corpus();
    CHECK(corpus.size() >= 20);
    std::size_t stems = 0;
    std::size_t covers = 0;
    for (const auto& e : corpus) {
        CAPTURE(e.total.name);
        CAPTURE(e.kernel.top.dim());
        CAPTURE(e.kernel.base.dim());
        auto c = classify(e);
        REQUIRE(c.central);
        if (c.stem_cover)
            CHECK(c.stem_extension);
        if (c.stem_extension)
            CHECK(c.central);
        stems += c.stem_extension;
        covers += c.stem_cover;

        auto p = stem_criteria(e);
        CHECK(p.characterizations_agree());
        CHECK(p.cover_criteria_agree());

        auto a = theta_star(e, SectionPolicy::canonical);
        auto b = theta_star(e, SectionPolicy::perturbed);
        CHECK(a.hom.top_map == b.hom.top_map);
        CHECK(a.hom.base_map == b.hom.base_map);

        auto r = six_term_report(e);
        CHECK(r.exact());
        CHECK(r.five_term().exact());
        CHECK(kernel_ideal_check(e).ok());
    }
    CHECK(stems > 0);
    CHECK(covers > 0);
    CHECK(stems < corpus.size());
}

TEST_CASE("dimension invariants of covers")
{
    auto e = n2_over_k();
    CHECK(cover_dimension_check(e, e).equal());

    // The same cover written in the basis (e1 + e2, e2).
    auto relabeled = change_basis(n2(), Matrix{{1, 0}, {1, 1}}, "N2'");
    auto k = zero_top_xmod(LeibnizAlgebra::abelian("K", 1));
    auto e2 = make_extension(zero_top_xmod(relabeled), k, Matrix(0, 0), Matrix{{1, 0}});
    REQUIRE(classify(e2).stem_cover);
    auto r = cover_dimension_check(e, e2);
    CHECK(r.equal());
    CHECK(r.derived1 == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(r.mod_center1 == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(r.center_mod_kernel1 == std::pair<std::size_t, std::size_t>{0, 0});

    auto s1 = stem_cover_of_perfect(identity_xmod(sl2()));
    auto s2 = identity_extension(identity_xmod(sl2()));
    CHECK(cover_dimension_check(s1, s2).equal());

    CHECK_THROWS_AS(cover_dimension_check(e, s1), std::invalid_argument);
}
