#include "leibxmod/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace leibxmod::io {

namespace {

[[noreturn]] void fail(const std::string& what)
{
    throw FixtureError(what);
}

const Json& field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key))
        fail(std::string("missing field \"") + key + "\"");
    return doc.at(key);
}

std::string string_field(const Json& doc, const char* key)
{
    const Json& v = field(doc, key);
    if (!v.is_string())
        fail(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

std::string name_or_empty(const Json& doc)
{
    return doc.contains("name") && doc.at("name").is_string() ? doc.at("name").get<std::string>() : std::string{};
}

Rational parse_entry(const Json& v)
{
    try {
        if (v.is_string())
            return parse_rational(v.get<std::string>());
        if (v.is_number_integer())
            return Rational(v.get<long>());
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    fail("rational entries must be strings \"p/q\" or integers, got " + v.dump());
}

std::size_t basis_index(const LeibnizAlgebra& a, const std::string& name)
{
    const auto& names = a.basis_names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        fail("algebra " + a.name() + " has no basis element \"" + name + "\"");
    return static_cast<std::size_t>(it - names.begin());
}

Vector parse_value(const Json& v, const LeibnizAlgebra& a)
{
    if (!v.is_object())
        fail("a value must be an object {basis name: rational}");
    Vector out = zero_vector(a.dim());
    for (const auto& [k, x] : v.items())
        out[basis_index(a, k)] = parse_entry(x);
    return out;
}

Json value_json(const Vector& v, const LeibnizAlgebra& a)
{
    Json out = Json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0)
            out[a.basis_names()[i]] = to_string(v[i]);
    return out;
}

/// {source basis name: value in target}, target.dim() x source.dim().
Matrix parse_map(const Json& v, const LeibnizAlgebra& source, const LeibnizAlgebra& target)
{
    if (!v.is_object())
        fail("a linear map must be an object {source basis name: value}");
    Matrix m(target.dim(), source.dim());
    for (const auto& [k, x] : v.items()) {
        std::size_t c = basis_index(source, k);
        Vector col = parse_value(x, target);
        for (std::size_t r = 0; r < col.size(); ++r)
            m(r, c) = col[r];
    }
    return m;
}

Json map_json(const Matrix& m, const LeibnizAlgebra& source, const LeibnizAlgebra& target)
{
    Json out = Json::object();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Vector col = m.column(c);
        if (!is_zero(col))
            out[source.basis_names()[c]] = value_json(col, target);
    }
    return out;
}

LeibnizAction parse_action_tables(const Json& doc, const LeibnizAlgebra& actor, const LeibnizAlgebra& acted)
{
    LeibnizAction act(actor.dim(), acted.dim());
    if (doc.contains("left"))
        for (const auto& e : doc.at("left"))
            act.set_left(basis_index(actor, string_field(e, "actor")), basis_index(acted, string_field(e, "acted")),
                         parse_value(field(e, "value"), acted));
    if (doc.contains("right"))
        for (const auto& e : doc.at("right"))
            act.set_right(basis_index(acted, string_field(e, "acted")), basis_index(actor, string_field(e, "actor")),
                          parse_value(field(e, "value"), acted));
    return act;
}

void write_action_tables(Json& out, const LeibnizAction& act, const LeibnizAlgebra& actor, const LeibnizAlgebra& acted)
{
    Json left = Json::array();
    Json right = Json::array();
    for (std::size_t i = 0; i < actor.dim(); ++i)
        for (std::size_t j = 0; j < acted.dim(); ++j)
            if (!is_zero(act.left(i, j)))
                left.push_back({{"actor", actor.basis_names()[i]},
                                {"acted", acted.basis_names()[j]},
                                {"value", value_json(act.left(i, j), acted)}});
    for (std::size_t j = 0; j < acted.dim(); ++j)
        for (std::size_t i = 0; i < actor.dim(); ++i)
            if (!is_zero(act.right(j, i)))
                right.push_back({{"acted", acted.basis_names()[j]},
                                 {"actor", actor.basis_names()[i]},
                                 {"value", value_json(act.right(j, i), acted)}});
    out["left"] = std::move(left);
    out["right"] = std::move(right);
}

}  // namespace

Json read_document(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail("cannot open " + path.string());
    try {
        Json doc = Json::parse(in);
        if (!doc.is_object())
            fail(path.string() + ": top level must be an object");
        return doc;
    } catch (const Json::parse_error& e) {
        fail(path.string() + ": " + e.what());
    }
}

std::string kind_of(const Json& doc)
{
    static const std::set<std::string> kinds{"algebra", "action", "xmod", "hom", "extension"};
    std::string k = string_field(doc, "kind");
    if (!kinds.count(k))
        fail("unknown kind \"" + k + "\"");
    return k;
}

Workspace::Workspace(std::filesystem::path dir) : dir_(std::move(dir)) {}

Json Workspace::resolve(const Json& ref, const std::string& kind)
{
    if (ref.is_object()) {
        if (ref.contains("kind") && kind_of(ref) != kind)
            fail("expected an inline " + kind + ", got " + kind_of(ref));
        return ref;
    }
    if (!ref.is_string())
        fail("a reference must be a name or an inline object");
    if (!indexed_) {
        indexed_ = true;
        std::vector<std::filesystem::path> files;
        std::error_code ec;
        for (const auto& entry : std::filesystem::directory_iterator(dir_, ec))
            if (entry.is_regular_file())
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            try {
                Json doc = read_document(f);
                std::string name = name_or_empty(doc);
                if (doc.contains("kind") && doc.at("kind").is_string() && !name.empty())
                    index_.emplace(std::make_pair(doc.at("kind").get<std::string>(), name), std::move(doc));
            } catch (const FixtureError&) {
                // Files that do not parse are only an error when referenced.
            }
        }
    }
    auto it = index_.find({kind, ref.get<std::string>()});
    if (it == index_.end())
        fail("no " + kind + " named \"" + ref.get<std::string>() + "\" in " + dir_.string());
    return it->second;
}

LeibnizAlgebra Workspace::algebra(const Json& ref)
{
    Json doc = resolve(ref, "algebra");
    const Json& basis = field(doc, "basis");
    if (!basis.is_array())
        fail("\"basis\" must be a list of names");
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& b : basis) {
        if (!b.is_string())
            fail("basis names must be strings");
        if (!seen.insert(b.get<std::string>()).second)
            fail("duplicate basis name \"" + b.get<std::string>() + "\"");
        names.push_back(b.get<std::string>());
    }
    LeibnizAlgebra a(name_or_empty(doc), names);
    if (doc.contains("brackets"))
        for (const auto& e : doc.at("brackets"))
            a.set_bracket(basis_index(a, string_field(e, "x")), basis_index(a, string_field(e, "y")),
                          parse_value(field(e, "value"), a));
    return a;
}

ActionFixture Workspace::action(const Json& ref)
{
    Json doc = resolve(ref, "action");
    ActionFixture out{name_or_empty(doc), algebra(field(doc, "actor")), algebra(field(doc, "acted")), {}};
    out.action = parse_action_tables(doc, out.actor, out.acted);
    return out;
}

CrossedModule Workspace::xmod(const Json& ref)
{
    Json doc = resolve(ref, "xmod");
    CrossedModule xm;
    xm.name = name_or_empty(doc);
    xm.top = algebra(field(doc, "top"));
    xm.base = algebra(field(doc, "base"));
    xm.delta = doc.contains("delta") ? parse_map(doc.at("delta"), xm.top, xm.base) : Matrix(xm.base.dim(), xm.top.dim());

    const Json act = doc.contains("action") ? doc.at("action") : Json("trivial");
    if (act == "trivial") {
        xm.action = LeibnizAction::trivial(xm.base.dim(), xm.top.dim());
    } else if (act == "adjoint") {
        if (!xm.top.same_structure(xm.base))
            fail("\"adjoint\" action needs top and base to be the same algebra");
        xm.action = LeibnizAction::adjoint(xm.base);
    } else if (act.is_object() && !act.contains("kind") && !act.contains("actor")) {
        xm.action = parse_action_tables(act, xm.base, xm.top);
    } else {
        auto a = action(act);
        if (a.actor.dim() != xm.base.dim() || a.acted.dim() != xm.top.dim())
            fail("action " + a.name + " does not match the dimensions of " + xm.name);
        xm.action = a.action;
    }
    return xm;
}

HomFixture Workspace::hom(const Json& ref)
{
    Json doc = resolve(ref, "hom");
    HomFixture out;
    out.name = name_or_empty(doc);
    if (doc.contains("map")) {
        auto s = algebra(field(doc, "source"));
        auto t = algebra(field(doc, "target"));
        Matrix m = parse_map(doc.at("map"), s, t);
        out.algebra_hom = {s, t, m};
        return out;
    }
    out.between_xmods = true;
    auto s = xmod(field(doc, "source"));
    auto t = xmod(field(doc, "target"));
    Matrix top = parse_map(field(doc, "top_map"), s.top, t.top);
    Matrix base = parse_map(field(doc, "base_map"), s.base, t.base);
    out.xmod_hom = {s, t, top, base};
    return out;
}

ExtensionFixture Workspace::extension(const Json& ref)
{
    Json doc = resolve(ref, "extension");
    ExtensionFixture out;
    out.name = name_or_empty(doc);
    out.total = xmod(field(doc, "total"));
    out.quotient = xmod(field(doc, "quotient"));
    out.top_map = parse_map(field(doc, "top_map"), out.total.top, out.quotient.top);
    out.base_map = parse_map(field(doc, "base_map"), out.total.base, out.quotient.base);
    return out;
}

Json to_json(const LeibnizAlgebra& a)
{
    Json brackets = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vector v = a.bracket_basis(i, j);
            if (!is_zero(v))
                brackets.push_back(
                    {{"x", a.basis_names()[i]}, {"y", a.basis_names()[j]}, {"value", value_json(v, a)}});
        }
    return {{"kind", "algebra"}, {"name", a.name()}, {"basis", a.basis_names()}, {"brackets", std::move(brackets)}};
}

Json to_json(const ActionFixture& a)
{
    Json out{{"kind", "action"}, {"name", a.name}, {"actor", to_json(a.actor)}, {"acted", to_json(a.acted)}};
    write_action_tables(out, a.action, a.actor, a.acted);
    return out;
}

Json to_json(const CrossedModule& xm)
{
    Json action = Json::object();
    write_action_tables(action, xm.action, xm.base, xm.top);
    return {{"kind", "xmod"},
            {"name", xm.name},
            {"top", to_json(xm.top)},
            {"base", to_json(xm.base)},
            {"delta", map_json(xm.delta, xm.top, xm.base)},
            {"action", std::move(action)}};
}

Json to_json(const ExtensionFixture& e)
{
    return {{"kind", "extension"},
            {"name", e.name},
            {"total", to_json(e.total)},
            {"quotient", to_json(e.quotient)},
            {"top_map", map_json(e.top_map, e.total.top, e.quotient.top)},
            {"base_map", map_json(e.base_map, e.total.base, e.quotient.base)}};
}

std::string dump(const Json& doc)
{
    return doc.dump(2) + "\n";
}

}  // namespace leibxmod::io
