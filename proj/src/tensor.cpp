#include "leibxmod/tensor.hpp"

#include <set>
#include <stdexcept>

namespace leibxmod {

namespace {

Vector neg(Vector v)
{
    for (auto& x : v)
        x = -x;
    return v;
}

void set_column(Matrix& m, std::size_t c, const Vector& v)
{
    for (std::size_t r = 0; r < v.size(); ++r)
        m(r, c) = v[r];
}

}  // namespace

MutualActionPair induced_actions(const CrossedModule& eta, const CrossedModule& delta)
{
    if (!eta.base.same_structure(delta.base))
        throw std::invalid_argument("induced_actions: crossed modules do not share a base");
    const std::size_t dm = eta.top.dim();
    const std::size_t dn = delta.top.dim();
    MutualActionPair p{eta.top, delta.top, LeibnizAction(dm, dn), LeibnizAction(dn, dm)};
    for (std::size_t i = 0; i < dm; ++i) {
        Vector em = eta.apply_delta(unit_vector(dm, i));
        for (std::size_t j = 0; j < dn; ++j) {
            Vector en = unit_vector(dn, j);
            p.m_on_n.set_left(i, j, delta.action.act_left(em, en));
            p.m_on_n.set_right(j, i, delta.action.act_right(en, em));
        }
    }
    for (std::size_t j = 0; j < dn; ++j) {
        Vector dn_ = delta.apply_delta(unit_vector(dn, j));
        for (std::size_t i = 0; i < dm; ++i) {
            Vector em = unit_vector(dm, i);
            p.n_on_m.set_left(j, i, eta.action.act_left(dn_, em));
            p.n_on_m.set_right(i, j, eta.action.act_right(em, dn_));
        }
    }
    return p;
}

ValidityReport check_pair(const MutualActionPair& p)
{
    ValidityReport r;
    r.merge(check_action(p.m, p.n, p.m_on_n), "m on n");
    r.merge(check_action(p.n, p.m, p.n_on_m), "n on m");
    return r;
}

// ------------------------------------------------------ QuotientPresentation

QuotientPresentation::QuotientPresentation(MutualActionPair pair, const std::string& name, const Subspace* extra)
    : pair_(std::move(pair))
{
    const std::size_t dm_ = dm();
    const std::size_t dn_ = dn();
    const std::size_t amb = ambient_dim();
    const auto& mon = pair_.m_on_n;
    const auto& nom = pair_.n_on_m;
    const auto& m = pair_.m;
    const auto& n = pair_.n;

    left_factor_ = Matrix(dm_, amb);
    right_factor_ = Matrix(dn_, amb);
    for (std::size_t i = 0; i < dm_; ++i)
        for (std::size_t j = 0; j < dn_; ++j) {
            set_column(left_factor_, mn_index(i, j), nom.right(i, j));  // m^n
            set_column(left_factor_, nm_index(j, i), nom.left(j, i));   // ^n m
            set_column(right_factor_, mn_index(i, j), mon.left(i, j));  // ^m n
            set_column(right_factor_, nm_index(j, i), mon.right(j, i)); // n^m
        }

    auto em = [&](std::size_t i) { return unit_vector(dm_, i); };
    auto en = [&](std::size_t j) { return unit_vector(dn_, j); };

    EchelonBuilder rel(amb);
    auto add = [&](Vector v) {
        if (!rel.full())
            rel.add(std::move(v));
    };
    auto sum = [](Vector a, const Vector& b, const Vector& c) {
        axpy(a, 1, b);
        axpy(a, 1, c);
        return a;
    };

    for (std::size_t i = 0; i < dm_; ++i)
        for (std::size_t j = 0; j < dn_; ++j)
            for (std::size_t j2 = 0; j2 < dn_; ++j2) {
                // m * [n,n'] = m^n * n' - m^n' * n
                add(sum(mn(em(i), n.bracket_basis(j, j2)), neg(mn(nom.right(i, j), en(j2))), mn(nom.right(i, j2), en(j))));
                // [n,n'] * m = ^n m * n' - n * m^n'
                add(sum(nm(n.bracket_basis(j, j2), em(i)), neg(mn(nom.left(j, i), en(j2))), nm(en(j), nom.right(i, j2))));
                // n * ^n' m = -n * m^n'
                Vector r4 = nm(en(j), nom.left(j2, i));
                axpy(r4, 1, nm(en(j), nom.right(i, j2)));
                add(std::move(r4));
            }
    for (std::size_t j = 0; j < dn_; ++j)
        for (std::size_t i = 0; i < dm_; ++i)
            for (std::size_t i2 = 0; i2 < dm_; ++i2) {
                // n * [m,m'] = n^m * m' - n^m' * m
                add(sum(nm(en(j), m.bracket_basis(i, i2)), neg(nm(mon.right(j, i), em(i2))), nm(mon.right(j, i2), em(i))));
                // [m,m'] * n = ^m n * m' - m * n^m'
                add(sum(mn(m.bracket_basis(i, i2), en(j)), neg(nm(mon.left(i, j), em(i2))), mn(em(i), mon.right(j, i2))));
                // m * ^m' n = -m * n^m'
                Vector r4 = mn(em(i), mon.left(i2, j));
                axpy(r4, 1, mn(em(i), mon.right(j, i2)));
                add(std::move(r4));
            }
    // The outer equalities of the bracket relations: both representatives agree.
    for (std::size_t s = 0; s < amb && !rel.full(); ++s)
        for (std::size_t t = 0; t < amb && !rel.full(); ++t) {
            Vector v = mn(left_factor_.column(s), right_factor_.column(t));
            axpy(v, -1, nm(right_factor_.column(s), left_factor_.column(t)));
            add(std::move(v));
        }

    tensor_relations_ = Subspace::span(amb, rel.matrix().row_list());
    Subspace all = extra ? tensor_relations_ + *extra : tensor_relations_;
    quotient_ = QuotientMap(all);

    // Well-definedness: the relations are two-sided ideals of the ambient bracket.
    auto closed = [&](const Subspace& r) {
        for (const auto& row : r.basis_vectors()) {
            Vector a = left_factor_ * row;
            Vector b = right_factor_ * row;
            for (std::size_t t = 0; t < amb; ++t) {
                if (!r.contains(mn(a, right_factor_.column(t))) || !r.contains(mn(left_factor_.column(t), b)))
                    return false;
            }
        }
        return true;
    };
    if (!closed(tensor_relations_))
        throw std::logic_error("tensor product bracket is not well defined on the relations");
    if (extra && !closed(all))
        throw std::logic_error("exterior product bracket is not well defined on the relations");

    // Representative consistency on every pair of symbols.
    for (std::size_t s = 0; s < amb; ++s)
        for (std::size_t t = 0; t < amb; ++t) {
            Vector u = unit_vector(amb, s);
            Vector v = unit_vector(amb, t);
            Vector d = ambient_bracket(u, v);
            axpy(d, -1, alternative_bracket(u, v));
            if (!all.contains(d))
                throw std::logic_error("bracket representatives disagree on " + symbol_name(s) + ", " + symbol_name(t));
        }

    const auto& free = quotient_.free_coordinates();
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (auto f : free) {
        std::string s = symbol_name(f);
        if (!seen.insert(s).second)
            s = "(" + s + ")'";
        names.push_back(s);
    }
    algebra_ = LeibnizAlgebra(name.empty() ? m.name() + "*" + n.name() : name, names);
    for (std::size_t x = 0; x < free.size(); ++x)
        for (std::size_t y = 0; y < free.size(); ++y)
            algebra_.set_bracket(
                x, y, project(mn(left_factor_.column(free[x]), right_factor_.column(free[y]))));
    if (auto r = check_leibniz(algebra_); !r.valid())
        throw std::logic_error("quotient presentation is not a Leibniz algebra: " + r.summary());
}

std::string QuotientPresentation::symbol_name(std::size_t symbol) const
{
    if (is_mn(symbol))
        return pair_.m.basis_names()[symbol / dn()] + "*" + pair_.n.basis_names()[symbol % dn()];
    std::size_t k = symbol - dm() * dn();
    return pair_.n.basis_names()[k / dm()] + "*" + pair_.m.basis_names()[k % dm()];
}

Vector QuotientPresentation::mn(const Vector& x, const Vector& y) const
{
    Vector out(ambient_dim());
    for (std::size_t i = 0; i < dm(); ++i) {
        if (sgn(x[i]) == 0)
            continue;
        for (std::size_t j = 0; j < dn(); ++j)
            if (sgn(y[j]) != 0)
                out[mn_index(i, j)] = x[i] * y[j];
    }
    return out;
}

Vector QuotientPresentation::nm(const Vector& y, const Vector& x) const
{
    Vector out(ambient_dim());
    for (std::size_t j = 0; j < dn(); ++j) {
        if (sgn(y[j]) == 0)
            continue;
        for (std::size_t i = 0; i < dm(); ++i)
            if (sgn(x[i]) != 0)
                out[nm_index(j, i)] = y[j] * x[i];
    }
    return out;
}

Vector QuotientPresentation::ambient_bracket(const Vector& u, const Vector& v) const
{
    return mn(left_factor_ * u, right_factor_ * v);
}

Vector QuotientPresentation::alternative_bracket(const Vector& u, const Vector& v) const
{
    return nm(right_factor_ * u, left_factor_ * v);
}

Matrix QuotientPresentation::descend(const Matrix& ambient_map, const QuotientMap& target) const
{
    if (ambient_map.cols() != ambient_dim() || ambient_map.rows() != target.ambient_dim())
        throw std::invalid_argument("descend: map has the wrong shape");
    for (const auto& r : relations().basis_vectors())
        if (!is_zero(target.project(ambient_map * r)))
            throw std::logic_error("map on symbols does not respect the relations of " + algebra_.name());
    return target.projection() * ambient_map * quotient_.section();
}

Matrix QuotientPresentation::descend(const Matrix& ambient_map) const
{
    return descend(ambient_map, QuotientMap(Subspace(ambient_map.rows())));
}

QuotientPresentation tensor_product(const MutualActionPair& p, const std::string& name)
{
    if (auto r = check_pair(p); !r.valid())
        throw std::invalid_argument("tensor_product: invalid actions: " + r.summary());
    return QuotientPresentation(p, name);
}

Subspace square_subspace(const CrossedModule& eta, const CrossedModule& delta)
{
    if (!eta.base.same_structure(delta.base))
        throw std::invalid_argument("square_subspace: crossed modules do not share a base");
    const std::size_t dm = eta.top.dim();
    const std::size_t dn = delta.top.dim();
    const std::size_t dq = eta.base.dim();
    Matrix stacked(dq, dm + dn);
    for (std::size_t r = 0; r < dq; ++r) {
        for (std::size_t c = 0; c < dm; ++c)
            stacked(r, c) = eta.delta(r, c);
        for (std::size_t c = 0; c < dn; ++c)
            stacked(r, dm + c) = -delta.delta(r, c);
    }
    auto pull = kernel(stacked).basis_vectors();
    const std::size_t amb = 2 * dm * dn;
    std::vector<Vector> gens;
    for (const auto& a : pull)
        for (const auto& b : pull) {
            // m * n' - n * m' for (m, n) = a, (m', n') = b.
            Vector v(amb);
            for (std::size_t i = 0; i < dm; ++i)
                for (std::size_t j = 0; j < dn; ++j) {
                    v[i * dn + j] += a[i] * b[dm + j];
                    v[dm * dn + j * dm + i] -= a[dm + j] * b[i];
                }
            gens.push_back(std::move(v));
        }
    return Subspace::span(amb, gens);
}

QuotientPresentation exterior_product(const CrossedModule& eta, const CrossedModule& delta, const std::string& name)
{
    auto pair = induced_actions(eta, delta);
    if (auto r = check_pair(pair); !r.valid())
        throw std::invalid_argument("exterior_product: invalid actions: " + r.summary());
    Subspace sq = square_subspace(eta, delta);
    return QuotientPresentation(std::move(pair), name.empty() ? eta.top.name() + "^" + delta.top.name() : name, &sq);
}

// ------------------------------------------------------- exterior squares

ExteriorSquareData exterior_square_data(const CrossedModule& xm)
{
    if (auto r = check_xmod(xm); !r.valid())
        throw std::invalid_argument("exterior_square_data: invalid crossed module: " + r.summary());
    const auto& q = xm.base;
    const auto& n = xm.top;
    const std::size_t dq = q.dim();
    const std::size_t dn = n.dim();
    CrossedModule idq = identity_xmod(q);

    ExteriorSquareData d;
    d.source = xm;
    d.qn = exterior_product(idq, xm, q.name() + "^" + n.name());
    d.qq = exterior_product(idq, idq, q.name() + "^" + q.name());
    const auto& qn = d.qn;
    const auto& qq = d.qq;
    auto eq = [&](std::size_t i) { return unit_vector(dq, i); };
    auto en = [&](std::size_t j) { return unit_vector(dn, j); };

    // id ^ delta on symbols.
    Matrix idd(qq.ambient_dim(), qn.ambient_dim());
    for (std::size_t i = 0; i < dq; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
            Vector dj = xm.apply_delta(en(j));
            set_column(idd, qn.mn_index(i, j), qq.mn(eq(i), dj));
            set_column(idd, qn.nm_index(j, i), qq.nm(dj, eq(i)));
        }

    // lambda and mu on symbols.
    Matrix lambda(dn, qn.ambient_dim());
    for (std::size_t i = 0; i < dq; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
            set_column(lambda, qn.mn_index(i, j), xm.action.left(i, j));
            set_column(lambda, qn.nm_index(j, i), xm.action.right(j, i));
        }
    Matrix mu(dq, qq.ambient_dim());
    for (std::size_t i = 0; i < dq; ++i)
        for (std::size_t j = 0; j < dq; ++j) {
            set_column(mu, qq.mn_index(i, j), q.bracket_basis(i, j));
            set_column(mu, qq.nm_index(j, i), q.bracket_basis(j, i));
        }

    // The q-action on the symbols of q * n, one matrix per side and basis element.
    std::vector<Matrix> act_l;
    std::vector<Matrix> act_r;
    for (std::size_t k = 0; k < dq; ++k) {
        Matrix l(qn.ambient_dim(), qn.ambient_dim());
        Matrix r(qn.ambient_dim(), qn.ambient_dim());
        Vector x = eq(k);
        for (std::size_t i = 0; i < dq; ++i)
            for (std::size_t j = 0; j < dn; ++j) {
                Vector qi = eq(i);
                Vector nj = en(j);
                Vector xqi = q.bracket(x, qi);
                Vector qix = q.bracket(qi, x);
                Vector xnj = xm.action.left(k, j);
                Vector njx = xm.action.right(j, k);
                // ^x(q'*n') = [x,q']*n' - ^x n'*q'
                Vector v = qn.mn(xqi, nj);
                axpy(v, -1, qn.nm(xnj, qi));
                set_column(l, qn.mn_index(i, j), v);
                // ^x(n'*q') = ^x n'*q' - [x,q']*n'
                set_column(l, qn.nm_index(j, i), neg(v));
                // (q'*n')^x = [q',x]*n' + q'*n'^x
                Vector w = qn.mn(qix, nj);
                axpy(w, 1, qn.mn(qi, njx));
                set_column(r, qn.mn_index(i, j), w);
                // (n'*q')^x = n'^x*q' + n'*[q',x]
                Vector z = qn.nm(njx, qi);
                axpy(z, 1, qn.nm(nj, qix));
                set_column(r, qn.nm_index(j, i), z);
            }
        act_l.push_back(qn.descend(l, qn.quotient()));
        act_r.push_back(qn.descend(r, qn.quotient()));
    }

    CrossedModule& w = d.xmod;
    w.name = "(" + qn.algebra().name() + "," + qq.algebra().name() + ",id^d)";
    w.top = qn.algebra();
    w.base = qq.algebra();
    w.delta = qn.descend(idd, qq.quotient());
    Matrix mu_bar = qq.descend(mu);
    Matrix lambda_bar = qn.descend(lambda);
    const std::size_t dx = w.base.dim();
    const std::size_t dy = w.top.dim();
    w.action = LeibnizAction(dx, dy);
    for (std::size_t a = 0; a < dx; ++a) {
        Matrix la(dy, dy);
        Matrix ra(dy, dy);
        for (std::size_t k = 0; k < dq; ++k) {
            const Rational& c = mu_bar(k, a);
            if (sgn(c) == 0)
                continue;
            for (std::size_t r = 0; r < dy; ++r)
                for (std::size_t s = 0; s < dy; ++s) {
                    la(r, s) += c * act_l[k](r, s);
                    ra(r, s) += c * act_r[k](r, s);
                }
        }
        for (std::size_t b = 0; b < dy; ++b) {
            w.action.set_left(a, b, la.column(b));
            w.action.set_right(b, a, ra.column(b));
        }
    }
    if (auto r = check_xmod(w); !r.valid())
        throw std::logic_error("exterior crossed module fails its axioms: " + r.summary());

    d.phi = {w, xm, lambda_bar, mu_bar};
    if (auto r = check_xmod_hom(d.phi); !r.valid())
        throw std::logic_error("(lambda, mu) is not a crossed module homomorphism: " + r.summary());
    return d;
}

Multiplier schur_multiplier(const CrossedModule& xm)
{
    return schur_multiplier(exterior_square_data(xm));
}

Multiplier schur_multiplier(ExteriorSquareData data)
{
    SubPair ker{kernel(data.lambda()), kernel(data.mu())};
    if (!center_xmod(data.xmod).contains(ker))
        throw std::logic_error("multiplier is not central in the exterior crossed module");
    auto sub = sub_xmod(data.xmod, ker, "M" + data.source.name);
    auto flags = predicates(sub.xmod);
    if (!flags.abelian || !flags.abelian_by_components)
        throw std::logic_error("multiplier is not abelian");
    return {std::move(data), std::move(sub)};
}

InducedExteriorHom induced_exterior_hom(const XModHom& f)
{
    if (rank(f.top_map) != f.target.top.dim() || rank(f.base_map) != f.target.base.dim())
        throw std::invalid_argument("induced_exterior_hom: homomorphism is not surjective");
    if (auto r = check_xmod_hom(f); !r.valid())
        throw std::invalid_argument("induced_exterior_hom: not a homomorphism: " + r.summary());

    InducedExteriorHom out;
    out.source = exterior_square_data(f.source);
    out.target = exterior_square_data(f.target);
    const auto& s = out.source;
    const auto& t = out.target;
    const std::size_t dp = f.source.base.dim();
    const std::size_t dh = f.source.top.dim();

    Matrix top(t.qn.ambient_dim(), s.qn.ambient_dim());
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t j = 0; j < dh; ++j) {
            Vector p = f.base_map.column(i);
            Vector h = f.top_map.column(j);
            set_column(top, s.qn.mn_index(i, j), t.qn.mn(p, h));
            set_column(top, s.qn.nm_index(j, i), t.qn.nm(h, p));
        }
    Matrix base(t.qq.ambient_dim(), s.qq.ambient_dim());
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t j = 0; j < dp; ++j) {
            Vector p = f.base_map.column(i);
            Vector p2 = f.base_map.column(j);
            set_column(base, s.qq.mn_index(i, j), t.qq.mn(p, p2));
            set_column(base, s.qq.nm_index(j, i), t.qq.nm(p2, p));
        }
    out.hom = {s.xmod, t.xmod, s.qn.descend(top, t.qn.quotient()), s.qq.descend(base, t.qq.quotient())};
    if (auto r = check_xmod_hom(out.hom); !r.valid())
        throw std::logic_error("induced exterior map is not a homomorphism: " + r.summary());
    if (rank(out.hom.top_map) != t.xmod.top.dim() || rank(out.hom.base_map) != t.xmod.base.dim())
        throw std::logic_error("induced exterior map is not surjective");
    out.kernel = {kernel(out.hom.top_map), kernel(out.hom.base_map)};

    // Ideals generated by symbols with one leg in the kernel (a, b) of f.
    auto a = kernel(f.top_map).basis_vectors();
    auto b = kernel(f.base_map).basis_vectors();
    std::vector<Vector> top_gens;
    std::vector<Vector> base_gens;
    for (std::size_t i = 0; i < dp; ++i) {
        Vector p = unit_vector(dp, i);
        for (const auto& x : a) {
            top_gens.push_back(s.qn.project(s.qn.mn(p, x)));
            top_gens.push_back(s.qn.project(s.qn.nm(x, p)));
        }
        for (const auto& y : b) {
            base_gens.push_back(s.qq.project(s.qq.mn(p, y)));
            base_gens.push_back(s.qq.project(s.qq.nm(y, p)));
            base_gens.push_back(s.qq.project(s.qq.mn(y, p)));
            base_gens.push_back(s.qq.project(s.qq.nm(p, y)));
        }
    }
    for (std::size_t j = 0; j < dh; ++j) {
        Vector h = unit_vector(dh, j);
        for (const auto& y : b) {
            top_gens.push_back(s.qn.project(s.qn.mn(y, h)));
            top_gens.push_back(s.qn.project(s.qn.nm(h, y)));
        }
    }
    SubPair generated{ideal_closure(s.xmod.top, Subspace::span(s.xmod.top.dim(), top_gens)),
                      ideal_closure(s.xmod.base, Subspace::span(s.xmod.base.dim(), base_gens))};
    if (!(generated == out.kernel))
        throw std::logic_error("kernel of the induced exterior map differs from the ideal generated by kernel legs");
    return out;
}

MultiplierMap multiplier_functorial_map(const XModHom& f)
{
    return multiplier_functorial_map(induced_exterior_hom(f));
}

MultiplierMap multiplier_functorial_map(const InducedExteriorHom& induced)
{
    MultiplierMap out{schur_multiplier(induced.source), schur_multiplier(induced.target), {}};
    const auto& sp = out.source.pair();
    const auto& tp = out.target.pair();
    auto restrict = [](const Matrix& m, const Subspace& from, const Subspace& to) {
        auto basis = from.basis_vectors();
        Matrix r(to.dim(), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            Vector img = m * basis[c];
            if (!to.contains(img))
                throw std::logic_error("induced map does not land in the target multiplier");
            set_column(r, c, to.coordinates(img));
        }
        return r;
    };
    out.hom = {out.source.xmod(), out.target.xmod(), restrict(induced.hom.top_map, sp.top, tp.top),
               restrict(induced.hom.base_map, sp.base, tp.base)};
    if (auto r = check_xmod_hom(out.hom); !r.valid())
        throw std::logic_error("multiplier map is not a homomorphism: " + r.summary());
    return out;
}

}  // namespace leibxmod
