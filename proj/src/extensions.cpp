#include "leibxmod/extensions.hpp"

#include <stdexcept>

namespace leibxmod {

namespace {

void set_column(Matrix& m, std::size_t c, const Vector& v)
{
    for (std::size_t r = 0; r < v.size(); ++r)
        m(r, c) = v[r];
}

/// Matrix of m restricted to `from` and written in the coordinates of `to`.
/// Returns nullopt when the image leaves `to`.
std::optional<Matrix> restrict_map(const Matrix& m, const Subspace& from, const Subspace& to)
{
    auto basis = from.basis_vectors();
    Matrix r(to.dim(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        Vector img = m * basis[c];
        if (!to.contains(img))
            return std::nullopt;
        set_column(r, c, to.coordinates(img));
    }
    return r;
}

Matrix restrict_or_throw(const Matrix& m, const Subspace& from, const Subspace& to, const char* what)
{
    auto r = restrict_map(m, from, to);
    if (!r)
        throw std::logic_error(std::string(what) + ": image leaves the expected subspace");
    return *r;
}

bool same_xmod(const CrossedModule& x, const CrossedModule& y)
{
    return x.top.same_structure(y.top) && x.base.same_structure(y.base) && x.delta == y.delta && x.action == y.action;
}

bool is_central(const Extension& e)
{
    return center_xmod(e.total).contains(e.kernel);
}

void require_central(const Extension& e, const char* op)
{
    if (!is_central(e))
        throw std::invalid_argument(std::string(op) + ": extension is not central");
}

bool surjective(const Matrix& m)
{
    return rank(m) == m.rows();
}

bool injective(const Matrix& m)
{
    return rank(m) == m.cols();
}

/// Induced map total_ab -> quotient_ab.
Matrix abelianized_map(const Extension& e, const QuotientXMod& tab, const QuotientXMod& qab, bool top)
{
    const Matrix& f = top ? e.proj.top_map : e.proj.base_map;
    const QuotientMap& src = top ? tab.top_quotient : tab.base_quotient;
    const QuotientMap& dst = top ? qab.top_quotient : qab.base_quotient;
    for (const auto& r : src.relations().basis_vectors())
        if (!is_zero(dst.project(f * r)))
            throw std::logic_error("projection does not map the derived crossed module into the derived crossed module");
    return dst.projection() * f * src.section();
}

SubPair image_pair(const SequenceMap& m)
{
    return {Subspace::image(m.top), Subspace::image(m.base)};
}

SubPair kernel_pair(const SequenceMap& m)
{
    return {kernel(m.top), kernel(m.base)};
}

}  // namespace

Extension make_extension(const CrossedModule& total, const CrossedModule& quotient, const Matrix& top_map,
                         const Matrix& base_map)
{
    XModHom proj{total, quotient, top_map, base_map};
    if (auto r = check_xmod(total); !r.valid())
        throw std::invalid_argument("extension total is not a crossed module: " + r.summary());
    if (auto r = check_xmod(quotient); !r.valid())
        throw std::invalid_argument("extension quotient is not a crossed module: " + r.summary());
    if (auto r = check_xmod_hom(proj); !r.valid())
        throw std::invalid_argument("extension map is not a homomorphism: " + r.summary());
    if (!surjective(top_map) || !surjective(base_map))
        throw std::invalid_argument("extension map is not surjective");
    SubPair ker{kernel(top_map), kernel(base_map)};
    if (!is_crossed_ideal(total, ker))
        throw std::logic_error("kernel of an extension map is not a crossed ideal");

    auto q = quotient_xmod(total, ker);
    XModHom induced{q.xmod, quotient, top_map * q.top_quotient.section(), base_map * q.base_quotient.section()};
    if (q.xmod.top.dim() != quotient.top.dim() || q.xmod.base.dim() != quotient.base.dim() ||
        !injective(induced.top_map) || !injective(induced.base_map) || !check_xmod_hom(induced).valid())
        throw std::invalid_argument("total / kernel is not isomorphic to the quotient");
    return {total, quotient, std::move(proj), std::move(ker)};
}

Extension extension_from_ideal(const CrossedModule& total, const SubPair& ideal, const std::string& quotient_name)
{
    auto q = quotient_xmod(total, ideal, quotient_name);
    return make_extension(total, q.xmod, q.projection.top_map, q.projection.base_map);
}

SubXMod kernel_xmod(const Extension& e)
{
    return sub_xmod(e.total, e.kernel, "ker");
}

AbelianType abelian_type(const CrossedModule& xm)
{
    return {xm.top.dim(), xm.base.dim(), rank(xm.delta)};
}

Classification classify(const Extension& e)
{
    Classification c;
    c.central = is_central(e);
    c.stem_extension = c.central && derived_xmod(e.total).contains(e.kernel);
    c.kernel_type = abelian_type(kernel_xmod(e).xmod);
    c.multiplier_type = abelian_type(schur_multiplier(e.quotient).xmod());
    c.stem_cover = c.stem_extension && c.kernel_type == c.multiplier_type;
    return c;
}

ThetaStar theta_star(const Extension& e, SectionPolicy policy)
{
    require_central(e, "theta_star");
    return theta_star(e, schur_multiplier(e.quotient), policy);
}

ThetaStar theta_star(const Extension& e, const Multiplier& m, SectionPolicy policy)
{
    require_central(e, "theta_star");
    const auto& total = e.total;
    const auto& d = m.exterior;
    const std::size_t dq = e.quotient.base.dim();
    const std::size_t dn = e.quotient.top.dim();
    Matrix s1 = right_inverse(e.proj.top_map, policy);
    Matrix s2 = right_inverse(e.proj.base_map, policy);

    Matrix top(total.top.dim(), d.qn.ambient_dim());
    for (std::size_t i = 0; i < dq; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
            Vector p = s2.column(i);
            Vector h = s1.column(j);
            set_column(top, d.qn.mn_index(i, j), total.action.act_left(p, h));
            set_column(top, d.qn.nm_index(j, i), total.action.act_right(h, p));
        }
    Matrix base(total.base.dim(), d.qq.ambient_dim());
    for (std::size_t i = 0; i < dq; ++i)
        for (std::size_t j = 0; j < dq; ++j) {
            Vector p = s2.column(i);
            Vector p2 = s2.column(j);
            set_column(base, d.qq.mn_index(i, j), total.base.bracket(p, p2));
            set_column(base, d.qq.nm_index(j, i), total.base.bracket(p2, p));
        }
    Matrix on_qn = d.qn.descend(top);
    Matrix on_qq = d.qq.descend(base);

    ThetaStar t{m, kernel_xmod(e), {}};
    t.hom = {m.xmod(), t.kernel.xmod, restrict_or_throw(on_qn, m.pair().top, e.kernel.top, "theta* top"),
             restrict_or_throw(on_qq, m.pair().base, e.kernel.base, "theta* base")};
    if (auto r = check_xmod_hom(t.hom); !r.valid())
        throw std::logic_error("theta* is not a crossed module homomorphism: " + r.summary());
    return t;
}

bool StemCriteria::characterizations_agree() const
{
    return kernel_in_derived == theta_surjective && theta_surjective == kernel_dies_in_abelianization &&
           kernel_dies_in_abelianization == abelianizations_isomorphic;
}

bool StemCriteria::cover_criteria_agree() const
{
    return cover == theta_bijective && theta_bijective == (abelianizations_isomorphic && multiplier_map_zero);
}

StemCriteria stem_criteria(const Extension& e)
{
    require_central(e, "stem_criteria");
    StemCriteria r;
    r.kernel_in_derived = derived_xmod(e.total).contains(e.kernel);

    auto mm = multiplier_functorial_map(e.proj);
    auto t = theta_star(e, mm.target, SectionPolicy::canonical);
    r.theta_surjective = surjective(t.hom.top_map) && surjective(t.hom.base_map);
    r.theta_bijective = r.theta_surjective && injective(t.hom.top_map) && injective(t.hom.base_map);

    auto tab = abelianization(e.total);
    auto qab = abelianization(e.quotient);
    r.kernel_dies_in_abelianization = (tab.projection.top_map * e.kernel.top.inclusion()).is_zero() &&
                                        (tab.projection.base_map * e.kernel.base.inclusion()).is_zero();
    Matrix top = abelianized_map(e, tab, qab, true);
    Matrix base = abelianized_map(e, tab, qab, false);
    r.abelianizations_isomorphic = top.rows() == top.cols() && base.rows() == base.cols() && injective(top) &&
                                     injective(base);

    r.multiplier_map_zero = mm.hom.top_map.is_zero() && mm.hom.base_map.is_zero();
    r.cover = classify(e).stem_cover;
    return r;
}

KernelIdealData kernel_ideal_check(const Extension& e)
{
    require_central(e, "kernel_ideal_check");
    return kernel_ideal_check(e, exterior_square_data(e.total));
}

KernelIdealData kernel_ideal_check(const Extension& e, const ExteriorSquareData& ext)
{
    require_central(e, "kernel_ideal_check");
    const auto& total = e.total;
    const auto& ph = ext.qn;  // p ^ h
    const auto& pp = ext.qq;  // p ^ p
    const std::size_t dp = total.base.dim();
    const std::size_t dh = total.top.dim();
    auto a = e.kernel.top.basis_vectors();
    auto b = e.kernel.base.basis_vectors();

    KernelIdealData out;
    CrossedModule b_xmod = ideal_xmod(total.base, e.kernel.base, "b");
    out.b_wedge_p = exterior_product(b_xmod, identity_xmod(total.base), "b^p");
    const auto& bp = out.b_wedge_p;

    // Generator space of I: p*a, a*p, b*h, h*b. Each generator has a class in
    // p^h and an image under sigma^id in b^p (symbols b*p and p*b).
    std::vector<Vector> in_ph;
    std::vector<Vector> in_bp;
    auto b_coords = [&](const Vector& v) { return e.kernel.base.coordinates(v); };
    for (std::size_t i = 0; i < dp; ++i) {
        Vector p = unit_vector(dp, i);
        for (const auto& x : a) {
            Vector sx = b_coords(total.apply_delta(x));
            in_ph.push_back(ph.project(ph.mn(p, x)));
            in_bp.push_back(bp.project(bp.nm(p, sx)));
            in_ph.push_back(ph.project(ph.nm(x, p)));
            in_bp.push_back(bp.project(bp.mn(sx, p)));
        }
    }
    for (std::size_t j = 0; j < dh; ++j) {
        Vector h = unit_vector(dh, j);
        Vector sh = total.apply_delta(h);
        for (const auto& y : b) {
            Vector yc = b_coords(y);
            in_ph.push_back(ph.project(ph.mn(y, h)));
            in_bp.push_back(bp.project(bp.mn(yc, sh)));
            in_ph.push_back(ph.project(ph.nm(h, y)));
            in_bp.push_back(bp.project(bp.nm(sh, yc)));
        }
    }
    const std::size_t dI_amb = ph.algebra().dim();
    const std::size_t dbp = bp.algebra().dim();
    Subspace span = Subspace::span(dI_amb, in_ph);
    out.ideal = ideal_closure(ph.algebra(), span);
    out.ideal_is_span = out.ideal == span;

    // sigma^id is well defined on I when every relation among generator
    // classes in p^h also holds among their images in b^p.
    Matrix gens_ph = Matrix::from_columns(in_ph, dI_amb);
    Matrix gens_bp = Matrix::from_columns(in_bp, dbp);
    out.connecting_well_defined = true;
    for (const auto& k : kernel(gens_ph).basis_vectors())
        if (!is_zero(gens_bp * k))
            out.connecting_well_defined = false;

    // The map I -> b^p on the RREF basis of I, through a right inverse of the
    // generator classes written in that basis.
    Matrix sigma_id(dbp, out.ideal.dim());
    if (out.ideal_is_span && out.connecting_well_defined && !in_ph.empty()) {
        Matrix coords(out.ideal.dim(), in_ph.size());
        for (std::size_t g = 0; g < in_ph.size(); ++g)
            set_column(coords, g, out.ideal.coordinates(in_ph[g]));
        sigma_id = gens_bp * right_inverse(coords);
    }

    auto isub = subalgebra(ph.algebra(), out.ideal, "I");
    out.xmod = {"(I,b^p,sigma^id)", isub.algebra, bp.algebra(), sigma_id,
                LeibnizAction::trivial(dbp, isub.algebra.dim())};
    out.abelian = isub.algebra.is_abelian() && bp.algebra().is_abelian();
    out.valid_xmod = out.ideal_is_span && out.connecting_well_defined && check_xmod(out.xmod).valid();

    // alpha : b^p -> p^p from the inclusion of b.
    Matrix alpha_amb(pp.ambient_dim(), bp.ambient_dim());
    for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t j = 0; j < dp; ++j) {
            Vector p = unit_vector(dp, j);
            set_column(alpha_amb, bp.mn_index(k, j), pp.mn(b[k], p));
            set_column(alpha_amb, bp.nm_index(j, k), pp.nm(p, b[k]));
        }
    Matrix alpha = bp.descend(alpha_amb, pp.quotient());
    Matrix beta = out.ideal.inclusion();
    out.into_exterior = {out.xmod, ext.xmod, beta, alpha};
    if (out.valid_xmod && !check_xmod_hom(out.into_exterior).valid())
        out.valid_xmod = false;

    out.image = {out.ideal, Subspace::image(alpha)};
    if (out.ideal_is_span && is_sub_xmod(ext.xmod, out.image)) {
        auto sub = sub_xmod(ext.xmod, out.image, "(I,alpha(b^p))");
        out.image_abelian_xmod = predicates(sub.xmod).abelian_by_components;
    }
    return out;
}

std::size_t ExactnessReport::exact_count() const
{
    std::size_t n = 0;
    for (const auto& c : checks)
        n += c.exact ? 1 : 0;
    return n;
}

ExactnessReport ExactnessReport::five_term() const
{
    ExactnessReport r;
    r.nodes.assign(nodes.begin() + 1, nodes.end());
    r.maps.assign(maps.begin() + 1, maps.end());
    r.checks.assign(checks.begin() + 1, checks.end());
    r.surjective_at_end = surjective_at_end;
    return r;
}

ExactnessReport six_term_report(const Extension& e)
{
    require_central(e, "six_term_report");
    auto induced = induced_exterior_hom(e.proj);
    auto mm = multiplier_functorial_map(induced);
    const Multiplier& mt = mm.source;
    const Multiplier& mq = mm.target;
    auto ideal = kernel_ideal_check(e, induced.source);
    if (!ideal.ideal_is_span)
        throw std::logic_error("ideal generated by the kernel symbols is larger than their span");
    auto theta = theta_star(e, mq, SectionPolicy::canonical);
    auto tab = abelianization(e.total);
    auto qab = abelianization(e.quotient);

    ExactnessReport r;
    r.nodes = {{"(I, b^p)", ideal.xmod.top.dim(), ideal.xmod.base.dim()},
               {"M(total)", mt.xmod().top.dim(), mt.xmod().base.dim()},
               {"M(quotient)", mq.xmod().top.dim(), mq.xmod().base.dim()},
               {"(a, b)", e.kernel.top.dim(), e.kernel.base.dim()},
               {"total_ab", tab.xmod.top.dim(), tab.xmod.base.dim()},
               {"quotient_ab", qab.xmod.top.dim(), qab.xmod.base.dim()}};

    SequenceMap f1{"(beta, alpha)",
                   restrict_or_throw(ideal.into_exterior.top_map, Subspace::full(ideal.xmod.top.dim()), mt.pair().top,
                                     "beta"),
                   restrict_or_throw(ideal.into_exterior.base_map, Subspace::full(ideal.xmod.base.dim()), mt.pair().base,
                                     "alpha")};
    SequenceMap f2{"M(proj)", mm.hom.top_map, mm.hom.base_map};
    SequenceMap f3{"theta*", theta.hom.top_map, theta.hom.base_map};
    SequenceMap f4{"kernel -> total_ab", tab.projection.top_map * e.kernel.top.inclusion(),
                   tab.projection.base_map * e.kernel.base.inclusion()};
    SequenceMap f5{"total_ab -> quotient_ab", abelianized_map(e, tab, qab, true), abelianized_map(e, tab, qab, false)};
    r.maps = {f1, f2, f3, f4, f5};

    for (std::size_t k = 1; k + 1 < r.nodes.size(); ++k) {
        const auto& node = r.nodes[k];
        NodeExactness c{node.name, image_pair(r.maps[k - 1]), kernel_pair(r.maps[k]), false};
        c.exact = c.image == c.kernel;
        r.checks.push_back(std::move(c));
    }
    r.surjective_at_end = surjective(f5.top) && surjective(f5.base);
    return r;
}

Extension stem_cover_of_perfect(const CrossedModule& xm)
{
    if (!predicates(xm).perfect)
        throw std::invalid_argument("not perfect: the exterior crossed module of " + xm.name +
                                    " maps onto it only when it equals its own commutator");
    auto d = exterior_square_data(xm);
    auto e = make_extension(d.xmod, xm, d.lambda(), d.mu());
    auto c = classify(e);
    if (!c.stem_cover)
        throw std::logic_error("exterior extension of a perfect crossed module is not a stem cover");
    auto flags = predicates(e.total);
    auto tab = abelianization(e.total);
    auto m = schur_multiplier(e.total);
    if (!flags.perfect || tab.xmod.top.dim() + tab.xmod.base.dim() != 0 ||
        m.xmod().top.dim() + m.xmod().base.dim() != 0)
        throw std::logic_error("stem cover of a perfect crossed module is not superperfect");
    return e;
}

CoverDimensions cover_dimension_check(const Extension& e1, const Extension& e2)
{
    if (!same_xmod(e1.quotient, e2.quotient))
        throw std::invalid_argument("cover_dimension_check: extensions have different quotients");
    auto dims = [](const Extension& e, CoverDimensions& r, bool first) {
        auto d = derived_xmod(e.total);
        auto z = center_xmod(e.total);
        std::pair<std::size_t, std::size_t> derived{d.top.dim(), d.base.dim()};
        std::pair<std::size_t, std::size_t> mod_center{e.total.top.dim() - z.top.dim(),
                                                       e.total.base.dim() - z.base.dim()};
        std::pair<std::size_t, std::size_t> cmk{z.top.dim() - e.kernel.top.dim(), z.base.dim() - e.kernel.base.dim()};
        (first ? r.derived1 : r.derived2) = derived;
        (first ? r.mod_center1 : r.mod_center2) = mod_center;
        (first ? r.center_mod_kernel1 : r.center_mod_kernel2) = cmk;
    };
    CoverDimensions r;
    dims(e1, r, true);
    dims(e2, r, false);
    return r;
}

}  // namespace leibxmod
