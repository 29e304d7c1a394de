#include "leibxmod/xmod.hpp"

#include <stdexcept>

namespace leibxmod {

namespace {

Vector sub(Vector a, const Vector& b)
{
    axpy(a, -1, b);
    return a;
}

Subspace left_action_span(const CrossedModule& xm, const Subspace& actors, const Subspace& acted)
{
    EchelonBuilder b(xm.top.dim());
    for (const auto& q : actors.basis_vectors())
        for (const auto& n : acted.basis_vectors()) {
            b.add(xm.action.act_left(q, n));
            b.add(xm.action.act_right(n, q));
        }
    return Subspace::span(xm.top.dim(), b.matrix().row_list());
}

}  // namespace

SubPair zero_pair(const CrossedModule& xm)
{
    return {Subspace(xm.top.dim()), Subspace(xm.base.dim())};
}

SubPair full_pair(const CrossedModule& xm)
{
    return {Subspace::full(xm.top.dim()), Subspace::full(xm.base.dim())};
}

bool is_full(const CrossedModule& xm, const SubPair& p)
{
    return p.top.dim() == xm.top.dim() && p.base.dim() == xm.base.dim();
}

ValidityReport check_xmod(const CrossedModule& xm)
{
    const std::size_t dn = xm.top.dim();
    const std::size_t dq = xm.base.dim();
    if (xm.delta.rows() != dq || xm.delta.cols() != dn)
        throw std::invalid_argument("delta has shape " + std::to_string(xm.delta.rows()) + "x" +
                                    std::to_string(xm.delta.cols()) + ", expected " + std::to_string(dq) + "x" +
                                    std::to_string(dn));
    if (xm.action.actor_dim() != dq || xm.action.acted_dim() != dn)
        throw std::invalid_argument("action dimensions do not match the crossed module");

    ValidityReport report;
    report.merge(check_leibniz(xm.top), "top");
    report.merge(check_leibniz(xm.base), "base");
    report.merge(check_action(xm.base, xm.top, xm.action), "action");

    const auto& qn = xm.base.basis_names();
    const auto& nn = xm.top.basis_names();
    for (std::size_t i = 0; i < dq; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
            Vector q = unit_vector(dq, i);
            Vector n = unit_vector(dn, j);
            Vector dn_ = xm.apply_delta(n);
            Vector r1 = sub(xm.apply_delta(xm.action.left(i, j)), xm.base.bracket(q, dn_));
            if (!is_zero(r1))
                report.add("delta(^q n) = [q, delta(n)]", {qn[i], nn[j]}, std::move(r1));
            Vector r2 = sub(xm.apply_delta(xm.action.right(j, i)), xm.base.bracket(dn_, q));
            if (!is_zero(r2))
                report.add("delta(n^q) = [delta(n), q]", {nn[j], qn[i]}, std::move(r2));
        }
    for (std::size_t j = 0; j < dn; ++j)
        for (std::size_t j2 = 0; j2 < dn; ++j2) {
            Vector n1 = unit_vector(dn, j);
            Vector n2 = unit_vector(dn, j2);
            Vector br = xm.top.bracket_basis(j, j2);
            Vector r1 = sub(xm.action.act_left(xm.apply_delta(n1), n2), br);
            if (!is_zero(r1))
                report.add("^delta(n1) n2 = [n1, n2]", {nn[j], nn[j2]}, std::move(r1));
            Vector r2 = sub(xm.action.act_right(n1, xm.apply_delta(n2)), br);
            if (!is_zero(r2))
                report.add("n1^delta(n2) = [n1, n2]", {nn[j], nn[j2]}, std::move(r2));
        }
    return report;
}

ValidityReport check_xmod_hom(const XModHom& f)
{
    const auto& s = f.source;
    const auto& t = f.target;
    if (f.top_map.rows() != t.top.dim() || f.top_map.cols() != s.top.dim() ||
        f.base_map.rows() != t.base.dim() || f.base_map.cols() != s.base.dim())
        throw std::invalid_argument("crossed module homomorphism has mismatched shapes");

    ValidityReport report;
    report.merge(check_hom({s.top, t.top, f.top_map}), "top map");
    report.merge(check_hom({s.base, t.base, f.base_map}), "base map");
    Matrix square = f.base_map * s.delta - t.delta * f.top_map;
    for (std::size_t j = 0; j < s.top.dim(); ++j)
        if (!is_zero(square.column(j)))
            report.add("psi delta = delta' phi", {s.top.basis_names()[j]}, square.column(j));
    for (std::size_t i = 0; i < s.base.dim(); ++i)
        for (std::size_t j = 0; j < s.top.dim(); ++j) {
            Vector pq = f.base_map.column(i);
            Vector pn = f.top_map.column(j);
            Vector r1 = sub(f.top_map * s.action.left(i, j), t.action.act_left(pq, pn));
            if (!is_zero(r1))
                report.add("phi(^q n) = ^psi(q) phi(n)", {s.base.basis_names()[i], s.top.basis_names()[j]},
                           std::move(r1));
            Vector r2 = sub(f.top_map * s.action.right(j, i), t.action.act_right(pn, pq));
            if (!is_zero(r2))
                report.add("phi(n^q) = phi(n)^psi(q)", {s.top.basis_names()[j], s.base.basis_names()[i]},
                           std::move(r2));
        }
    return report;
}

bool is_crossed_ideal(const CrossedModule& xm, const SubPair& p)
{
    auto full_n = Subspace::full(xm.top.dim());
    auto full_q = Subspace::full(xm.base.dim());
    return p.base.contains(map_subspace(xm.delta, p.top)) && is_two_sided_ideal(xm.base, p.base) &&
           p.top.contains(left_action_span(xm, full_q, p.top)) && p.top.contains(left_action_span(xm, p.base, full_n));
}

bool is_sub_xmod(const CrossedModule& xm, const SubPair& p)
{
    return is_subalgebra(xm.top, p.top) && is_subalgebra(xm.base, p.base) &&
           p.base.contains(map_subspace(xm.delta, p.top)) && p.top.contains(left_action_span(xm, p.base, p.top));
}

SubPair crossed_ideal_closure(const CrossedModule& xm, const SubPair& seed)
{
    auto full_n = Subspace::full(xm.top.dim());
    auto full_q = Subspace::full(xm.base.dim());
    SubPair p = seed;
    for (;;) {
        Subspace y = p.base + span_brackets(xm.base, p.base, full_q) + span_brackets(xm.base, full_q, p.base) +
                     map_subspace(xm.delta, p.top);
        Subspace x = p.top + left_action_span(xm, y, full_n) + left_action_span(xm, full_q, p.top);
        if (x.dim() == p.top.dim() && y.dim() == p.base.dim())
            return p;
        p = {std::move(x), std::move(y)};
    }
}

Commutator commutator(const CrossedModule& xm, const SubPair& a, const SubPair& b)
{
    if (!is_crossed_ideal(xm, a) || !is_crossed_ideal(xm, b))
        throw std::invalid_argument("commutator arguments must be crossed ideals");
    // a = (s, h), b = (t, j).
    Subspace top = left_action_span(xm, a.base, b.top) + left_action_span(xm, b.base, a.top);
    Subspace base = span_brackets(xm.base, a.base, b.base);
    Commutator c{{std::move(top), std::move(base)}, true};
    c.closed = crossed_ideal_closure(xm, c.pair) == c.pair;
    return c;
}

SubPair derived_xmod(const CrossedModule& xm)
{
    auto full = full_pair(xm);
    return commutator(xm, full, full).pair;
}

SubPair center_xmod(const CrossedModule& xm)
{
    const std::size_t dn = xm.top.dim();
    const std::size_t dq = xm.base.dim();

    // n^q: all ^q n = n^q = 0 as a linear condition on n.
    Matrix on_top(2 * dq * dn, dn);
    for (std::size_t i = 0; i < dq; ++i)
        for (std::size_t j = 0; j < dn; ++j)
            for (std::size_t k = 0; k < dn; ++k) {
                on_top(i * dn + k, j) = xm.action.left(i, j)[k];
                on_top(dq * dn + i * dn + k, j) = xm.action.right(j, i)[k];
            }

    // st_q(n): ^q n = n^q = 0 for every n, as a linear condition on q.
    Matrix on_base(2 * dn * dn, dq);
    for (std::size_t j = 0; j < dn; ++j)
        for (std::size_t i = 0; i < dq; ++i)
            for (std::size_t k = 0; k < dn; ++k) {
                on_base(j * dn + k, i) = xm.action.left(i, j)[k];
                on_base(dn * dn + j * dn + k, i) = xm.action.right(j, i)[k];
            }
    return {kernel(on_top), intersect(kernel(on_base), center(xm.base))};
}

QuotientXMod quotient_xmod(const CrossedModule& xm, const SubPair& p, const std::string& name)
{
    if (!is_crossed_ideal(xm, p))
        throw std::invalid_argument("quotient_xmod: not a crossed ideal of " + xm.name);
    auto top = quotient_algebra(xm.top, p.top);
    auto base = quotient_algebra(xm.base, p.base);
    const QuotientMap& qt = top.map;
    const QuotientMap& qb = base.map;

    CrossedModule out;
    out.name = name.empty() ? xm.name + "/I" : name;
    out.top = top.algebra;
    out.base = base.algebra;
    out.delta = qb.projection() * xm.delta * qt.section();
    out.action = LeibnizAction(qb.dim(), qt.dim());
    for (std::size_t i = 0; i < qb.dim(); ++i)
        for (std::size_t j = 0; j < qt.dim(); ++j) {
            Vector q = qb.lift(unit_vector(qb.dim(), i));
            Vector n = qt.lift(unit_vector(qt.dim(), j));
            out.action.set_left(i, j, qt.project(xm.action.act_left(q, n)));
            out.action.set_right(j, i, qt.project(xm.action.act_right(n, q)));
        }
    XModHom proj{xm, out, qt.projection(), qb.projection()};
    return {std::move(out), std::move(proj), qt, qb};
}

QuotientXMod abelianization(const CrossedModule& xm)
{
    return quotient_xmod(xm, derived_xmod(xm), xm.name + "_ab");
}

QuotientXMod liezation(const CrossedModule& xm)
{
    const std::size_t dn = xm.top.dim();
    const std::size_t dq = xm.base.dim();
    std::vector<Vector> top_seeds;
    std::vector<Vector> base_seeds;
    for (std::size_t j = 0; j < dn; ++j)
        for (std::size_t j2 = j; j2 < dn; ++j2) {
            Vector v = xm.top.bracket_basis(j, j2);
            axpy(v, 1, xm.top.bracket_basis(j2, j));
            top_seeds.push_back(std::move(v));
        }
    for (std::size_t i = 0; i < dq; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
            Vector v = xm.action.left(i, j);
            axpy(v, 1, xm.action.right(j, i));
            top_seeds.push_back(std::move(v));
        }
    for (std::size_t i = 0; i < dq; ++i)
        for (std::size_t i2 = i; i2 < dq; ++i2) {
            Vector v = xm.base.bracket_basis(i, i2);
            axpy(v, 1, xm.base.bracket_basis(i2, i));
            base_seeds.push_back(std::move(v));
        }
    SubPair seed{Subspace::span(dn, top_seeds), Subspace::span(dq, base_seeds)};
    auto result = quotient_xmod(xm, crossed_ideal_closure(xm, seed), xm.name + "_Lie");

    const auto& lie = result.xmod;
    if (!is_lie(lie.top) || !is_lie(lie.base))
        throw std::logic_error("liezation produced a non-Lie algebra");
    for (std::size_t i = 0; i < lie.base.dim(); ++i)
        for (std::size_t j = 0; j < lie.top.dim(); ++j) {
            Vector v = lie.action.left(i, j);
            axpy(v, 1, lie.action.right(j, i));
            if (!is_zero(v))
                throw std::logic_error("liezation produced a non-antisymmetric action");
        }
    return result;
}

SubXMod sub_xmod(const CrossedModule& xm, const SubPair& p, const std::string& name)
{
    if (!is_sub_xmod(xm, p))
        throw std::invalid_argument("sub_xmod: not a sub crossed module of " + xm.name);
    auto top = subalgebra(xm.top, p.top, name.empty() ? "" : name + "_top");
    auto base = subalgebra(xm.base, p.base, name.empty() ? "" : name + "_base");
    CrossedModule out;
    out.name = name.empty() ? xm.name + "_sub" : name;
    out.top = top.algebra;
    out.base = base.algebra;
    Matrix delta(p.base.dim(), p.top.dim());
    auto tops = p.top.basis_vectors();
    auto bases = p.base.basis_vectors();
    for (std::size_t j = 0; j < tops.size(); ++j) {
        Vector c = p.base.coordinates(xm.apply_delta(tops[j]));
        for (std::size_t i = 0; i < c.size(); ++i)
            delta(i, j) = c[i];
    }
    out.delta = std::move(delta);
    out.action = LeibnizAction(bases.size(), tops.size());
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = 0; j < tops.size(); ++j) {
            out.action.set_left(i, j, p.top.coordinates(xm.action.act_left(bases[i], tops[j])));
            out.action.set_right(j, i, p.top.coordinates(xm.action.act_right(tops[j], bases[i])));
        }
    XModHom inc{out, xm, p.top.inclusion(), p.base.inclusion()};
    return {std::move(out), std::move(inc), p};
}

XModFlags predicates(const CrossedModule& xm)
{
    XModFlags f;
    f.perfect = is_full(xm, derived_xmod(xm));
    f.abelian = is_full(xm, center_xmod(xm));
    f.abelian_by_components = xm.top.is_abelian() && xm.base.is_abelian() && xm.action.is_trivial();
    return f;
}

CrossedModule ideal_xmod(const LeibnizAlgebra& q, const Subspace& ideal, const std::string& name)
{
    if (!is_two_sided_ideal(q, ideal))
        throw std::invalid_argument("ideal_xmod: not a two-sided ideal of " + q.name());
    auto n = subalgebra(q, ideal, name.empty() ? q.name() + "_ideal" : name + "_top");
    CrossedModule xm;
    xm.name = name.empty() ? "(" + n.algebra.name() + "," + q.name() + ",i)" : name;
    xm.top = n.algebra;
    xm.base = q;
    xm.delta = n.inclusion.matrix;
    xm.action = LeibnizAction(q.dim(), n.algebra.dim());
    auto basis = ideal.basis_vectors();
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Vector e = unit_vector(q.dim(), i);
            xm.action.set_left(i, j, ideal.coordinates(q.bracket(e, basis[j])));
            xm.action.set_right(j, i, ideal.coordinates(q.bracket(basis[j], e)));
        }
    return xm;
}

CrossedModule identity_xmod(const LeibnizAlgebra& q)
{
    return {"(" + q.name() + "," + q.name() + ",id)", q, q, Matrix::identity(q.dim()), LeibnizAction::adjoint(q)};
}

CrossedModule zero_top_xmod(const LeibnizAlgebra& q)
{
    return {"(0," + q.name() + ",i)", LeibnizAlgebra("0", {}), q, Matrix(q.dim(), 0), LeibnizAction(q.dim(), 0)};
}

CrossedModule module_xmod(const LeibnizAlgebra& m, const LeibnizAlgebra& q, const LeibnizAction& act)
{
    if (!m.is_abelian())
        throw std::invalid_argument("module_xmod: the module must be abelian");
    return {"(" + m.name() + "," + q.name() + ",0)", m, q, Matrix(q.dim(), m.dim()), act};
}

CrossedModule abelian_xmod(std::size_t a, std::size_t b, const Matrix& sigma, const std::string& name)
{
    if (sigma.rows() != b || sigma.cols() != a)
        throw std::invalid_argument("abelian_xmod: sigma has the wrong shape");
    auto top = LeibnizAlgebra::abelian("k" + std::to_string(a), a);
    auto base = LeibnizAlgebra::abelian("k" + std::to_string(b), b);
    return {name.empty() ? "(k" + std::to_string(a) + ",k" + std::to_string(b) + ",s)" : name, top, base, sigma,
            LeibnizAction::trivial(b, a)};
}

CrossedModule direct_sum(const CrossedModule& x, const CrossedModule& y, const std::string& name)
{
    CrossedModule s;
    s.name = name.empty() ? x.name + "+" + y.name : name;
    s.top = direct_sum(x.top, y.top);
    s.base = direct_sum(x.base, y.base);
    const std::size_t xn = x.top.dim();
    const std::size_t xq = x.base.dim();
    s.delta = Matrix(s.base.dim(), s.top.dim());
    for (std::size_t r = 0; r < xq; ++r)
        for (std::size_t c = 0; c < xn; ++c)
            s.delta(r, c) = x.delta(r, c);
    for (std::size_t r = 0; r < y.base.dim(); ++r)
        for (std::size_t c = 0; c < y.top.dim(); ++c)
            s.delta(xq + r, xn + c) = y.delta(r, c);

    s.action = LeibnizAction(s.base.dim(), s.top.dim());
    auto embed = [&](const Vector& v, std::size_t offset) {
        Vector out(s.top.dim());
        std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
        return out;
    };
    for (std::size_t i = 0; i < xq; ++i)
        for (std::size_t j = 0; j < xn; ++j) {
            s.action.set_left(i, j, embed(x.action.left(i, j), 0));
            s.action.set_right(j, i, embed(x.action.right(j, i), 0));
        }
    for (std::size_t i = 0; i < y.base.dim(); ++i)
        for (std::size_t j = 0; j < y.top.dim(); ++j) {
            s.action.set_left(xq + i, xn + j, embed(y.action.left(i, j), xn));
            s.action.set_right(xn + j, xq + i, embed(y.action.right(j, i), xn));
        }
    return s;
}

}  // namespace leibxmod
