#include "leibxmod/commands.hpp"

#include "leibxmod/homology.hpp"

#include <functional>
#include <sstream>

namespace leibxmod::io {

namespace {

const char* mark(bool b)
{
    return b ? "✓" : "✗";
}

struct Loaded {
    Json doc;
    Workspace ws;
};

Loaded load(const std::filesystem::path& path)
{
    Json doc = read_document(path);
    auto dir = path.parent_path();
    return {std::move(doc), Workspace(dir.empty() ? std::filesystem::path(".") : dir)};
}

Json require_kind(Loaded& l, const std::string& kind)
{
    std::string k = kind_of(l.doc);
    if (k != kind)
        throw FixtureError("expected a " + kind + " file, got " + k);
    return l.doc;
}

Json matrix_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json dims_json(std::size_t top, std::size_t base)
{
    return {{"top", top}, {"base", base}};
}

Json report_json(const ValidityReport& r)
{
    Json v = Json::array();
    for (const auto& x : r.violations()) {
        Json res = Json::array();
        for (const auto& q : x.residual)
            res.push_back(to_string(q));
        v.push_back({{"condition", x.condition}, {"where", x.where}, {"residual", std::move(res)}});
    }
    return v;
}

std::string pair_text(std::size_t top, std::size_t base)
{
    return "(" + std::to_string(top) + ", " + std::to_string(base) + ")";
}

CrossedModule valid_xmod(Loaded& l)
{
    auto xm = l.ws.xmod(require_kind(l, "xmod"));
    if (auto r = check_xmod(xm); !r.valid())
        throw std::invalid_argument("not a crossed module: " + r.summary());
    return xm;
}

Extension valid_extension(Loaded& l, std::string& name)
{
    auto f = l.ws.extension(require_kind(l, "extension"));
    name = f.name;
    return make_extension(f.total, f.quotient, f.top_map, f.base_map);
}

CommandResult guarded(const std::string& command, const std::filesystem::path& path,
                      const std::function<void(CommandResult&)>& body)
{
    CommandResult out;
    out.json = {{"command", command}, {"input", path.generic_string()}};
    try {
        body(out);
    } catch (const FixtureError& e) {
        out.status = Status::unreadable;
        out.text = std::string("unreadable: ") + e.what() + "\n";
        out.json["error"] = e.what();
        out.fixture.reset();
    } catch (const std::invalid_argument& e) {
        out.status = Status::invalid;
        out.text += std::string("invalid: ") + e.what() + "\n";
        out.json["error"] = e.what();
        out.fixture.reset();
    } catch (const std::logic_error& e) {
        out.status = Status::invalid;
        out.text += std::string("failed: ") + e.what() + "\n";
        out.json["error"] = e.what();
        out.fixture.reset();
    }
    out.json["status"] = static_cast<int>(out.status);
    return out;
}

void bracket_lines(std::ostream& out, const LeibnizAlgebra& a, const std::string& label)
{
    bool any = false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vector v = a.bracket_basis(i, j);
            if (is_zero(v))
                continue;
            any = true;
            out << "  [" << a.basis_names()[i] << ", " << a.basis_names()[j] << "] =";
            for (std::size_t k = 0; k < v.size(); ++k)
                if (sgn(v[k]) != 0)
                    out << " " << (sgn(v[k]) > 0 ? "+" : "") << to_string(v[k]) << " " << a.basis_names()[k];
            out << "\n";
        }
    if (!any)
        out << "  " << label << ": all brackets zero\n";
}

}  // namespace

CommandResult run_check(const std::filesystem::path& path)
{
    return guarded("check", path, [&](CommandResult& out) {
        Loaded l = load(path);
        std::string kind = kind_of(l.doc);
        ValidityReport report;
        std::string name;
        if (kind == "algebra") {
            auto a = l.ws.algebra(l.doc);
            name = a.name();
            report = check_leibniz(a);
        } else if (kind == "action") {
            auto a = l.ws.action(l.doc);
            name = a.name;
            report = check_action(a.actor, a.acted, a.action);
        } else if (kind == "xmod") {
            auto xm = l.ws.xmod(l.doc);
            name = xm.name;
            report = check_xmod(xm);
        } else if (kind == "hom") {
            auto h = l.ws.hom(l.doc);
            name = h.name;
            report = h.between_xmods ? check_xmod_hom(h.xmod_hom) : check_hom(h.algebra_hom);
        } else {
            auto f = l.ws.extension(l.doc);
            name = f.name;
            try {
                make_extension(f.total, f.quotient, f.top_map, f.base_map);
            } catch (const std::exception& e) {
                report.add(e.what(), {}, {});
            }
        }
        out.status = report.valid() ? Status::valid : Status::invalid;
        out.text = kind + " " + name + ": " + report.summary() + "\n";
        out.json["kind"] = kind;
        out.json["name"] = name;
        out.json["valid"] = report.valid();
        out.json["violations"] = report_json(report);
    });
}

CommandResult run_multiplier(const std::filesystem::path& path)
{
    return guarded("multiplier", path, [&](CommandResult& out) {
        Loaded l = load(path);
        auto xm = valid_xmod(l);
        auto m = schur_multiplier(xm);
        const auto& mx = m.xmod();
        std::size_t r = rank(mx.delta);
        std::ostringstream t;
        t << "crossed module " << xm.name << "\n";
        t << "q^n: dim " << m.exterior.qn.algebra().dim() << "\n";
        t << "q^q: dim " << m.exterior.qq.algebra().dim() << "\n";
        t << "M = " << pair_text(mx.top.dim(), mx.base.dim()) << ", rank δ| = " << r << "\n";
        bracket_lines(t, mx.top, "M top");
        bracket_lines(t, mx.base, "M base");
        out.text = t.str();
        out.json["name"] = xm.name;
        out.json["exterior"] = dims_json(m.exterior.qn.algebra().dim(), m.exterior.qq.algebra().dim());
        out.json["multiplier"] = {{"top", to_json(mx.top)},
                                  {"base", to_json(mx.base)},
                                  {"delta", matrix_json(mx.delta)},
                                  {"dims", dims_json(mx.top.dim(), mx.base.dim())},
                                  {"rank", r},
                                  {"abelian", mx.top.is_abelian() && mx.base.is_abelian()}};
    });
}

CommandResult run_exterior(const std::filesystem::path& path)
{
    return guarded("exterior", path, [&](CommandResult& out) {
        Loaded l = load(path);
        auto xm = valid_xmod(l);
        auto d = exterior_square_data(xm);
        std::size_t r = rank(d.id_wedge_delta());
        std::ostringstream t;
        t << "crossed module " << xm.name << "\n";
        t << "q^n: dim " << d.qn.algebra().dim() << " (relations " << d.qn.relations().dim() << " of "
          << d.qn.ambient_dim() << ")\n";
        t << "q^q: dim " << d.qq.algebra().dim() << " (relations " << d.qq.relations().dim() << " of "
          << d.qq.ambient_dim() << ")\n";
        t << "rank id^δ = " << r << ", rank λ = " << rank(d.lambda()) << ", rank μ = " << rank(d.mu()) << "\n";
        out.text = t.str();
        out.json["name"] = xm.name;
        out.json["dims"] = dims_json(d.qn.algebra().dim(), d.qq.algebra().dim());
        out.json["rank"] = r;
        out.json["lambda"] = matrix_json(d.lambda());
        out.json["mu"] = matrix_json(d.mu());
        d.xmod.name = "ext(" + xm.name + ")";
        out.fixture = to_json(d.xmod);
    });
}

CommandResult run_classify(const std::filesystem::path& path)
{
    return guarded("classify-extension", path, [&](CommandResult& out) {
        Loaded l = load(path);
        std::string name;
        auto e = valid_extension(l, name);
        auto c = classify(e);
        std::ostringstream t;
        t << "extension " << name << "\n";
        t << "central " << mark(c.central) << " stem " << mark(c.stem_extension) << " cover " << mark(c.stem_cover)
          << "\n";
        t << "kernel " << pair_text(c.kernel_type.top, c.kernel_type.base) << " rank " << c.kernel_type.rank
          << "; M(quotient) " << pair_text(c.multiplier_type.top, c.multiplier_type.base) << " rank "
          << c.multiplier_type.rank << "\n";
        out.json["name"] = name;
        out.json["central"] = c.central;
        out.json["stem_extension"] = c.stem_extension;
        out.json["stem_cover"] = c.stem_cover;
        out.json["kernel"] = {{"top", c.kernel_type.top}, {"base", c.kernel_type.base}, {"rank", c.kernel_type.rank}};
        out.json["multiplier"] = {
            {"top", c.multiplier_type.top}, {"base", c.multiplier_type.base}, {"rank", c.multiplier_type.rank}};
        if (c.central) {
            auto p = stem_criteria(e);
            t << "kernel in derived " << mark(p.kernel_in_derived) << ", θ* surjective "
              << mark(p.theta_surjective) << ", kernel dies in total_ab " << mark(p.kernel_dies_in_abelianization)
              << ", total_ab ≅ quotient_ab " << mark(p.abelianizations_isomorphic) << "\n";
            t << "θ* bijective " << mark(p.theta_bijective) << ", M(total) -> M(quotient) zero "
              << mark(p.multiplier_map_zero) << "\n";
            t << "characterizations agree " << mark(p.characterizations_agree()) << ", cover criteria agree "
              << mark(p.cover_criteria_agree()) << "\n";
            out.json["crosscheck"] = {{"kernel_in_derived", p.kernel_in_derived},
                                      {"theta_surjective", p.theta_surjective},
                                      {"kernel_dies_in_abelianization", p.kernel_dies_in_abelianization},
                                      {"abelianizations_isomorphic", p.abelianizations_isomorphic},
                                      {"theta_bijective", p.theta_bijective},
                                      {"multiplier_map_zero", p.multiplier_map_zero},
                                      {"characterizations_agree", p.characterizations_agree()},
                                      {"cover_criteria_agree", p.cover_criteria_agree()}};
        } else {
            t << "not central: crosscheck skipped\n";
        }
        out.text = t.str();
    });
}

CommandResult run_verify(const std::filesystem::path& path)
{
    return guarded("verify-sequence", path, [&](CommandResult& out) {
        Loaded l = load(path);
        std::string name;
        auto e = valid_extension(l, name);
        auto r = six_term_report(e);
        auto five = r.five_term();
        auto ideal = kernel_ideal_check(e);
        std::ostringstream t;
        t << "extension " << name << "\n";
        Json nodes = Json::array();
        for (std::size_t k = 0; k < r.nodes.size(); ++k) {
            const auto& n = r.nodes[k];
            t << "  " << n.name << " " << pair_text(n.top, n.base);
            Json node{{"name", n.name}, {"dims", dims_json(n.top, n.base)}};
            if (k >= 1 && k <= r.checks.size()) {
                const auto& c = r.checks[k - 1];
                t << "  image " << pair_text(c.image.top.dim(), c.image.base.dim()) << " kernel "
                  << pair_text(c.kernel.top.dim(), c.kernel.base.dim()) << " exact " << mark(c.exact);
                node["image"] = dims_json(c.image.top.dim(), c.image.base.dim());
                node["kernel"] = dims_json(c.kernel.top.dim(), c.kernel.base.dim());
                node["exact"] = c.exact;
            }
            t << "\n";
            if (k < r.maps.size()) {
                t << "    -> " << r.maps[k].name << "\n";
                node["map"] = {{"name", r.maps[k].name},
                               {"top", matrix_json(r.maps[k].top)},
                               {"base", matrix_json(r.maps[k].base)}};
            }
            nodes.push_back(std::move(node));
        }
        t << "exact at " << r.exact_count() << "/" << r.checks.size() << " interior nodes\n";
        t << "surjective at the end " << mark(r.surjective_at_end) << "\n";
        t << "five-term: exact at " << five.exact_count() << "/" << five.checks.size() << " interior nodes\n";
        t << "(I, b^p): ideal spanned by generators " << mark(ideal.ideal_is_span) << ", abelian " << mark(ideal.abelian)
          << ", σ^id lifts to b^p " << mark(ideal.connecting_well_defined) << ", image crossed module abelian "
          << mark(ideal.image_abelian_xmod) << "\n";
        out.text = t.str();
        out.status = r.exact() ? Status::valid : Status::invalid;
        out.json["name"] = name;
        out.json["nodes"] = std::move(nodes);
        out.json["exact_count"] = r.exact_count();
        out.json["interior_nodes"] = r.checks.size();
        out.json["surjective_at_end"] = r.surjective_at_end;
        out.json["five_term_exact"] = five.exact();
        out.json["ideal"] = {{"spanned_by_generators", ideal.ideal_is_span},
                             {"abelian", ideal.abelian},
                             {"lift_well_defined", ideal.connecting_well_defined},
                             {"lift_valid", ideal.valid_xmod},
                             {"image_abelian_xmod", ideal.image_abelian_xmod}};
    });
}

CommandResult run_stemcover(const std::filesystem::path& path)
{
    return guarded("stemcover", path, [&](CommandResult& out) {
        Loaded l = load(path);
        auto xm = valid_xmod(l);
        auto e = stem_cover_of_perfect(xm);
        e.total.name = "stemcover(" + xm.name + ")";
        std::ostringstream t;
        t << "stem cover of " << xm.name << "\n";
        t << "total " << pair_text(e.total.top.dim(), e.total.base.dim()) << ", kernel "
          << pair_text(e.kernel.top.dim(), e.kernel.base.dim()) << "\n";
        out.text = t.str();
        out.json["name"] = xm.name;
        out.json["total"] = dims_json(e.total.top.dim(), e.total.base.dim());
        out.json["kernel"] = dims_json(e.kernel.top.dim(), e.kernel.base.dim());
        out.fixture = to_json(e.total);
    });
}

CommandResult run_liezation(const std::filesystem::path& path)
{
    return guarded("liezation", path, [&](CommandResult& out) {
        Loaded l = load(path);
        auto xm = valid_xmod(l);
        auto q = liezation(xm);
        q.xmod.name = "lie(" + xm.name + ")";
        std::ostringstream t;
        t << "liezation of " << xm.name << ": " << pair_text(q.xmod.top.dim(), q.xmod.base.dim()) << "\n";
        out.text = t.str();
        out.json["name"] = xm.name;
        out.json["dims"] = dims_json(q.xmod.top.dim(), q.xmod.base.dim());
        out.fixture = to_json(q.xmod);
    });
}

CommandResult run_hl(const std::filesystem::path& path, std::size_t degree)
{
    return guarded("hl", path, [&](CommandResult& out) {
        Loaded l = load(path);
        auto a = l.ws.algebra(require_kind(l, "algebra"));
        if (auto r = check_leibniz(a); !r.valid())
            throw std::invalid_argument("not a Leibniz algebra: " + r.summary());
        if (degree < 1 || degree > 3)
            throw FixtureError("degree must be 1, 2 or 3");
        std::size_t d = hl(a, degree);
        out.text = std::to_string(d) + "\n";
        out.json["name"] = a.name();
        out.json["degree"] = degree;
        out.json["dim"] = d;
    });
}

CommandResult run_command(const std::string& command, const std::filesystem::path& path, std::size_t degree)
{
    if (command == "check")
        return run_check(path);
    if (command == "multiplier")
        return run_multiplier(path);
    if (command == "exterior")
        return run_exterior(path);
    if (command == "classify-extension")
        return run_classify(path);
    if (command == "verify-sequence")
        return run_verify(path);
    if (command == "stemcover")
        return run_stemcover(path);
    if (command == "liezation")
        return run_liezation(path);
    if (command == "hl")
        return run_hl(path, degree);
    CommandResult out;
    out.status = Status::unreadable;
    out.text = "unknown command " + command + "\n";
    out.json = {{"command", command}, {"error", "unknown command"}, {"status", 2}};
    return out;
}

}  // namespace leibxmod::io
