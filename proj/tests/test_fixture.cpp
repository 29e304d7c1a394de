#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "leibxmod/commands.hpp"
#include "support/sample_extensions.hpp"

#include <filesystem>

using namespace leibxmod;
using namespace leibxmod::io;
using namespace leibxmod::testing;

namespace {

const std::filesystem::path fixtures{LEIBXMOD_FIXTURE_DIR};

CrossedModule reparse(const CrossedModule& xm)
{
    Workspace ws(fixtures);
    return ws.xmod(Json::parse(dump(to_json(xm))));
}

bool same(const CrossedModule& a, const CrossedModule& b)
{
    return a.name == b.name && a.top == b.top && a.base == b.base && a.delta == b.delta && a.action == b.action;
}

}  // namespace

TEST_CASE("rationals in files")
{
    Workspace ws(fixtures);
    Json doc = {{"kind", "algebra"}, {"name", "q"}, {"basis", {"a", "b"}},
                {"brackets", {{{"x", "a"}, {"y", "a"}, {"value", {{"b", "-3/6"}}}}}}};
    auto a = ws.algebra(doc);
    CHECK(a.bracket_basis(0, 0)[1] == Rational(-1, 2));
    CHECK(to_json(a)["brackets"][0]["value"]["b"] == "-1/2");

    doc["brackets"][0]["value"]["b"] = "1/0";
    CHECK_THROWS_AS(ws.algebra(doc), FixtureError);
    doc["brackets"][0]["value"]["b"] = 0.5;
    CHECK_THROWS_AS(ws.algebra(doc), FixtureError);
    doc["brackets"][0]["value"] = {{"c", "1"}};
    CHECK_THROWS_AS(ws.algebra(doc), FixtureError);
    doc["basis"] = {"a", "a"};
    CHECK_THROWS_AS(ws.algebra(doc), FixtureError);
}

TEST_CASE("references resolve by name within the directory")
{
    Workspace ws(fixtures);
    auto xm = ws.xmod(Json("(N2,N2,id)"));
    CHECK(xm.top.same_structure(n2()));
    CHECK(xm.action == LeibnizAction::adjoint(n2()));
    auto via_file = ws.xmod(Json("(N2,N2,id) via action file"));
    CHECK(via_file.action == xm.action);
    CHECK_THROWS_AS(ws.xmod(Json("missing")), FixtureError);
    CHECK_THROWS_AS(ws.algebra(Json("(N2,N2,id)")), FixtureError);

    auto e = ws.extension(Json("n2_over_k"));
    CHECK(e.total.base.same_structure(n2()));
    CHECK(e.base_map == Matrix{{1, 0}});
}

TEST_CASE("serialization round trip")
{
    for (const auto& xm : extension_totals()) {
        CAPTURE(xm.name);
        auto back = reparse(xm);
        CHECK(same(back, xm));
        CHECK(dump(to_json(back)) == dump(to_json(xm)));
    }
    Workspace ws(fixtures);
    for (const auto& entry : std::filesystem::directory_iterator(fixtures)) {
        if (entry.path().extension() != ".xmod")
            continue;
        CAPTURE(entry.path().string());
        auto xm = ws.xmod(read_document(entry.path()));
        CHECK(same(reparse(xm), xm));
    }
    auto d = exterior_square_data(identity_xmod(sl2()));
    CHECK(same(reparse(d.xmod), d.xmod));
}

TEST_CASE("check command exit statuses")
{
    CHECK(run_check(fixtures / "n2.algebra").status == Status::valid);
    auto bad = run_check(fixtures / "bad_dim1.algebra");
    CHECK(bad.status == Status::invalid);
    REQUIRE(bad.json["violations"].size() == 1);
    CHECK(bad.json["violations"][0]["where"] == Json({"e", "e", "e"}));
    CHECK(run_check(fixtures / "bad_rational.algebra").status == Status::unreadable);
    CHECK(run_check(fixtures / "does_not_exist.algebra").status == Status::unreadable);
    CHECK(run_check(fixtures / "sl2_left_only.action").status == Status::invalid);
    CHECK(run_check(fixtures / "n2_adjoint.action").status == Status::valid);
    CHECK(run_check(fixtures / "n2_to_k.hom").status == Status::valid);
    CHECK(run_check(fixtures / "n2_to_k_bad.hom").status == Status::invalid);
    CHECK(run_check(fixtures / "n2_over_k.hom").status == Status::valid);
    CHECK(run_check(fixtures / "n2_over_k.extension").status == Status::valid);
}

TEST_CASE("multiplier command")
{
    auto k = run_multiplier(fixtures / "k_inclusion.xmod");
    CHECK(k.text.find("M = (0, 1), rank δ| = 0") != std::string::npos);
    CHECK(run_multiplier(fixtures / "n2_identity.xmod").text.find("M = (1, 1)") != std::string::npos);
    CHECK(run_multiplier(fixtures / "sl2_identity.xmod").text.find("M = (0, 0)") != std::string::npos);
    CHECK(run_multiplier(fixtures / "n2.algebra").status == Status::unreadable);
}

TEST_CASE("extension commands")
{
    auto c = run_classify(fixtures / "n2_over_k.extension");
    CHECK(c.status == Status::valid);
    CHECK(c.text.find("central ✓ stem ✓ cover ✓") != std::string::npos);
    auto s = run_classify(fixtures / "split_over_k.extension");
    CHECK(s.text.find("central ✓ stem ✗ cover ✗") != std::string::npos);

    auto v = run_verify(fixtures / "n2_over_k.extension");
    CHECK(v.status == Status::valid);
    CHECK(v.text.find("exact at 4/4 interior nodes") != std::string::npos);
    auto nc = run_verify(fixtures / "n2_not_central.extension");
    CHECK(nc.status == Status::invalid);
    CHECK(nc.text.find("not central") != std::string::npos);
    CHECK(run_verify(fixtures / "heis_over_k2.extension").status == Status::valid);
}

TEST_CASE("hl, stemcover and liezation commands")
{
    CHECK(run_hl(fixtures / "n2.algebra", 2).text == "1\n");
    CHECK(run_hl(fixtures / "n2.algebra", 5).status == Status::unreadable);
    CHECK(run_hl(fixtures / "bad_dim1.algebra", 2).status == Status::invalid);

    auto sc = run_stemcover(fixtures / "sl2_identity.xmod");
    REQUIRE(sc.fixture);
    Workspace ws(fixtures);
    auto total = ws.xmod(*sc.fixture);
    CHECK(check_xmod(total).valid());
    CHECK(total.top.dim() == 3);
    auto refused = run_stemcover(fixtures / "n2_identity.xmod");
    CHECK(refused.status == Status::invalid);
    CHECK(refused.text.find("not perfect") != std::string::npos);
    CHECK_FALSE(refused.fixture);

    auto lie = run_liezation(fixtures / "n2_identity.xmod");
    REQUIRE(lie.fixture);
    auto q = ws.xmod(*lie.fixture);
    CHECK(is_lie(q.top));
    CHECK(is_lie(q.base));
}

TEST_CASE("reports are deterministic")
{
    for (const char* cmd : {"check", "multiplier", "exterior", "classify-extension", "verify-sequence"})
        for (const char* f : {"n2_identity.xmod", "n2_over_k.extension", "sl2_identity.xmod"}) {
            auto a = run_command(cmd, fixtures / f);
            auto b = run_command(cmd, fixtures / f);
            CHECK(dump(a.json) == dump(b.json));
        }
    CHECK(run_command("nonsense", fixtures / "n2.algebra").status == Status::unreadable);
}
