#include "leibxmod/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace leibxmod {

// -------------------------------------------------------- ValidityReport

void ValidityReport::add(std::string condition, std::vector<std::string> where, Vector residual)
{
    violations_.push_back({std::move(condition), std::move(where), std::move(residual)});
}

void ValidityReport::merge(const ValidityReport& other, const std::string& prefix)
{
    for (const auto& v : other.violations_)
        violations_.push_back({prefix.empty() ? v.condition : prefix + ": " + v.condition, v.where, v.residual});
}

std::string ValidityReport::summary() const
{
    if (valid())
        return "valid";
    std::ostringstream out;
    out << violations_.size() << " violation(s)";
    for (const auto& v : violations_) {
        out << "\n  " << v.condition << " at (";
        for (std::size_t i = 0; i < v.where.size(); ++i)
            out << (i ? "," : "") << v.where[i];
        out << ") residual [";
        for (std::size_t i = 0; i < v.residual.size(); ++i)
            out << (i ? " " : "") << to_string(v.residual[i]);
        out << "]";
    }
    return out.str();
}

// -------------------------------------------------------- LeibnizAlgebra

LeibnizAlgebra::LeibnizAlgebra(std::string name, std::vector<std::string> basis_names)
    : name_(std::move(name)), names_(std::move(basis_names))
{
    c_.resize(dim() * dim() * dim());
}

LeibnizAlgebra::LeibnizAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<Rational> constants)
    : name_(std::move(name)), names_(std::move(basis_names)), c_(std::move(constants))
{
    if (c_.size() != dim() * dim() * dim())
        throw std::invalid_argument("structure constant table has wrong size");
}

LeibnizAlgebra LeibnizAlgebra::abelian(std::string name, std::size_t dim)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i)
        names.push_back("e" + std::to_string(i + 1));
    return LeibnizAlgebra(std::move(name), std::move(names));
}

std::size_t LeibnizAlgebra::index_of(const std::string& basis_name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == basis_name)
            return i;
    throw std::out_of_range("algebra " + name_ + " has no basis element \"" + basis_name + "\"");
}

const Rational& LeibnizAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const
{
    return c_[(i * dim() + j) * dim() + k];
}

void LeibnizAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value)
{
    if (value.size() != dim())
        throw std::invalid_argument("bracket value has wrong length");
    for (std::size_t k = 0; k < dim(); ++k)
        c_[(i * dim() + j) * dim() + k] = value[k];
}

Vector LeibnizAlgebra::bracket_basis(std::size_t i, std::size_t j) const
{
    const std::size_t d = dim();
    auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d);
    return Vector(first, first + static_cast<std::ptrdiff_t>(d));
}

Vector LeibnizAlgebra::bracket(const Vector& x, const Vector& y) const
{
    const std::size_t d = dim();
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(x[i]) == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(y[j]) == 0)
                continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < d; ++k) {
                const Rational& c = c_[(i * d + j) * d + k];
                if (sgn(c) != 0)
                    out[k] += f * c;
            }
        }
    }
    return out;
}

Matrix LeibnizAlgebra::left_multiplication(const Vector& x) const
{
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        Vector col = bracket(x, unit_vector(dim(), j));
        for (std::size_t k = 0; k < dim(); ++k)
            m(k, j) = col[k];
    }
    return m;
}

Matrix LeibnizAlgebra::right_multiplication(const Vector& x) const
{
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        Vector col = bracket(unit_vector(dim(), j), x);
        for (std::size_t k = 0; k < dim(); ++k)
            m(k, j) = col[k];
    }
    return m;
}

bool LeibnizAlgebra::is_abelian() const
{
    return is_zero(c_);
}

// --------------------------------------------------------- LeibnizAction

LeibnizAction::LeibnizAction(std::size_t actor_dim, std::size_t acted_dim)
    : actor_dim_(actor_dim), acted_dim_(acted_dim),
      left_(actor_dim * acted_dim, Vector(acted_dim)),
      right_(actor_dim * acted_dim, Vector(acted_dim))
{
}

LeibnizAction LeibnizAction::trivial(std::size_t actor_dim, std::size_t acted_dim)
{
    return LeibnizAction(actor_dim, acted_dim);
}

LeibnizAction LeibnizAction::adjoint(const LeibnizAlgebra& q)
{
    LeibnizAction act(q.dim(), q.dim());
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j) {
            act.set_left(i, j, q.bracket_basis(i, j));
            act.set_right(j, i, q.bracket_basis(j, i));
        }
    return act;
}

void LeibnizAction::set_left(std::size_t actor, std::size_t acted, Vector value)
{
    if (value.size() != acted_dim_)
        throw std::invalid_argument("action value has wrong length");
    left_[actor * acted_dim_ + acted] = std::move(value);
}

void LeibnizAction::set_right(std::size_t acted, std::size_t actor, Vector value)
{
    if (value.size() != acted_dim_)
        throw std::invalid_argument("action value has wrong length");
    right_[acted * actor_dim_ + actor] = std::move(value);
}

Vector LeibnizAction::act_left(const Vector& m, const Vector& n) const
{
    Vector out(acted_dim_);
    for (std::size_t i = 0; i < actor_dim_; ++i) {
        if (sgn(m[i]) == 0)
            continue;
        for (std::size_t j = 0; j < acted_dim_; ++j)
            if (sgn(n[j]) != 0)
                axpy(out, m[i] * n[j], left(i, j));
    }
    return out;
}

Vector LeibnizAction::act_right(const Vector& n, const Vector& m) const
{
    Vector out(acted_dim_);
    for (std::size_t j = 0; j < acted_dim_; ++j) {
        if (sgn(n[j]) == 0)
            continue;
        for (std::size_t i = 0; i < actor_dim_; ++i)
            if (sgn(m[i]) != 0)
                axpy(out, n[j] * m[i], right(j, i));
    }
    return out;
}

bool LeibnizAction::is_trivial() const
{
    for (const auto& v : left_)
        if (!is_zero(v))
            return false;
    for (const auto& v : right_)
        if (!is_zero(v))
            return false;
    return true;
}

// ------------------------------------------------------------ validation

namespace {

Vector sub(Vector a, const Vector& b)
{
    axpy(a, -1, b);
    return a;
}

Vector add(Vector a, const Vector& b)
{
    axpy(a, 1, b);
    return a;
}

}  // namespace

ValidityReport check_leibniz(const LeibnizAlgebra& a)
{
    ValidityReport report;
    const std::size_t d = a.dim();
    const auto& names = a.basis_names();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vector x = unit_vector(d, i);
                Vector lhs = a.bracket(x, a.bracket_basis(j, k));
                Vector r1 = a.bracket(a.bracket_basis(i, j), unit_vector(d, k));
                Vector r2 = a.bracket(a.bracket_basis(i, k), unit_vector(d, j));
                Vector residual = add(sub(lhs, r1), r2);
                if (!is_zero(residual))
                    report.add("Leibniz identity", {names[i], names[j], names[k]}, std::move(residual));
            }
    return report;
}

bool is_lie(const LeibnizAlgebra& a)
{
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                if (sgn(a.constant(i, j, k) + a.constant(j, i, k)) != 0)
                    return false;
                if (i == j && sgn(a.constant(i, i, k)) != 0)
                    return false;
            }
    return true;
}

ValidityReport check_action(const LeibnizAlgebra& m, const LeibnizAlgebra& n, const LeibnizAction& act)
{
    ValidityReport report;
    if (act.actor_dim() != m.dim() || act.acted_dim() != n.dim())
        throw std::invalid_argument("action dimensions do not match the algebras");
    const std::size_t dm = m.dim();
    const std::size_t dn = n.dim();
    auto em = [&](std::size_t i) { return unit_vector(dm, i); };
    auto en = [&](std::size_t j) { return unit_vector(dn, j); };
    const auto& mn = m.basis_names();
    const auto& nn = n.basis_names();

    // Triples (m, m', n).
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t i2 = 0; i2 < dm; ++i2)
            for (std::size_t j = 0; j < dn; ++j) {
                const Vector& l_i2_j = act.left(i2, j);
                const Vector& r_j_i2 = act.right(j, i2);
                const Vector& l_i_j = act.left(i, j);
                const Vector& r_j_i = act.right(j, i);
                Vector mm = m.bracket_basis(i, i2);

                // ^{[m,m']}n = ^m(^{m'}n) + (^m n)^{m'}
                Vector r1 = sub(act.act_left(mm, en(j)),
                                add(act.act_left(em(i), l_i2_j), act.act_right(l_i_j, em(i2))));
                if (!is_zero(r1))
                    report.add("^[m,m']n = ^m(^m'n) + (^mn)^m'", {mn[i], mn[i2], nn[j]}, std::move(r1));

                // n^{[m,m']} = (n^m)^{m'} - (n^{m'})^m
                Vector r3 = sub(act.act_right(en(j), mm),
                                sub(act.act_right(r_j_i, em(i2)), act.act_right(r_j_i2, em(i))));
                if (!is_zero(r3))
                    report.add("n^[m,m'] = (n^m)^m' - (n^m')^m", {mn[i], mn[i2], nn[j]}, std::move(r3));

                // ^m(^{m'}n) = -^m(n^{m'})
                Vector r5 = add(act.act_left(em(i), l_i2_j), act.act_left(em(i), r_j_i2));
                if (!is_zero(r5))
                    report.add("^m(^m'n) = -^m(n^m')", {mn[i], mn[i2], nn[j]}, std::move(r5));
            }

    // Triples (m, n, n').
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j)
            for (std::size_t j2 = 0; j2 < dn; ++j2) {
                Vector nn2 = n.bracket_basis(j, j2);

                // ^m[n,n'] = [^m n, n'] - [^m n', n]
                Vector r2 = sub(act.act_left(em(i), nn2),
                                sub(n.bracket(act.left(i, j), en(j2)), n.bracket(act.left(i, j2), en(j))));
                if (!is_zero(r2))
                    report.add("^m[n,n'] = [^mn,n'] - [^mn',n]", {mn[i], nn[j], nn[j2]}, std::move(r2));

                // [n,n']^m = [n^m, n'] + [n, n'^m]
                Vector r4 = sub(act.act_right(nn2, em(i)),
                                add(n.bracket(act.right(j, i), en(j2)), n.bracket(en(j), act.right(j2, i))));
                if (!is_zero(r4))
                    report.add("[n,n']^m = [n^m,n'] + [n,n'^m]", {mn[i], nn[j], nn[j2]}, std::move(r4));

                // [n, ^m n'] = -[n, n'^m]
                Vector r6 = add(n.bracket(en(j), act.left(i, j2)), n.bracket(en(j), act.right(j2, i)));
                if (!is_zero(r6))
                    report.add("[n,^mn'] = -[n,n'^m]", {mn[i], nn[j], nn[j2]}, std::move(r6));
            }
    return report;
}

ValidityReport check_hom(const AlgebraHom& f)
{
    const auto& src = f.source;
    const auto& tgt = f.target;
    if (f.matrix.rows() != tgt.dim() || f.matrix.cols() != src.dim())
        throw std::invalid_argument("homomorphism matrix shape does not match source/target");
    ValidityReport report;
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
            Vector lhs = f.matrix * src.bracket_basis(i, j);
            Vector rhs = tgt.bracket(f.matrix.column(i), f.matrix.column(j));
            Vector residual = sub(lhs, rhs);
            if (!is_zero(residual))
                report.add("f([x,y]) = [f(x),f(y)]", {src.basis_names()[i], src.basis_names()[j]}, std::move(residual));
        }
    return report;
}

// -------------------------------------------------------------- subspaces

Subspace span_brackets(const LeibnizAlgebra& a, const Subspace& x, const Subspace& y)
{
    EchelonBuilder b(a.dim());
    for (const auto& u : x.basis_vectors())
        for (const auto& v : y.basis_vectors()) {
            if (b.full())
                break;
            b.add(a.bracket(u, v));
        }
    return Subspace::span(a.dim(), b.matrix().row_list());
}

Subspace derived_subspace(const LeibnizAlgebra& a)
{
    auto full = Subspace::full(a.dim());
    return span_brackets(a, full, full);
}

Subspace center(const LeibnizAlgebra& a)
{
    const std::size_t d = a.dim();
    // Rows of the stacked system: coefficient of x_i in [x, e_j]_k and [e_j, x]_k.
    Matrix stacked(2 * d * d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t i = 0; i < d; ++i) {
                stacked((j * d + k), i) = a.constant(i, j, k);
                stacked(d * d + (j * d + k), i) = a.constant(j, i, k);
            }
    return kernel(stacked);
}

bool is_two_sided_ideal(const LeibnizAlgebra& a, const Subspace& s)
{
    auto full = Subspace::full(a.dim());
    return s.contains(span_brackets(a, full, s)) && s.contains(span_brackets(a, s, full));
}

Subspace ideal_closure(const LeibnizAlgebra& a, const Subspace& seed)
{
    auto full = Subspace::full(a.dim());
    Subspace s = seed;
    for (;;) {
        Subspace next = s + span_brackets(a, full, s) + span_brackets(a, s, full);
        if (next.dim() == s.dim())
            return s;
        s = std::move(next);
    }
}

bool is_subalgebra(const LeibnizAlgebra& a, const Subspace& s)
{
    return s.contains(span_brackets(a, s, s));
}

QuotientAlgebra quotient_algebra(const LeibnizAlgebra& a, const Subspace& ideal)
{
    if (ideal.ambient_dim() != a.dim())
        throw std::invalid_argument("ideal lives in a space of the wrong dimension");
    if (!is_two_sided_ideal(a, ideal))
        throw std::invalid_argument("subspace is not a two-sided ideal of " + a.name());
    QuotientMap q(ideal);
    std::vector<std::string> names;
    for (auto f : q.free_coordinates())
        names.push_back(a.basis_names()[f]);
    LeibnizAlgebra quotient(a.name() + "/I", names);
    for (std::size_t x = 0; x < q.dim(); ++x)
        for (std::size_t y = 0; y < q.dim(); ++y)
            quotient.set_bracket(x, y, q.project(a.bracket_basis(q.free_coordinates()[x], q.free_coordinates()[y])));
    AlgebraHom proj{a, quotient, q.projection()};
    return {std::move(quotient), std::move(proj), std::move(q)};
}

Subalgebra subalgebra(const LeibnizAlgebra& a, const Subspace& s, const std::string& name)
{
    if (s.ambient_dim() != a.dim())
        throw std::invalid_argument("subspace lives in a space of the wrong dimension");
    if (!is_subalgebra(a, s))
        throw std::invalid_argument("subspace is not closed under the bracket of " + a.name());
    auto basis = s.basis_vectors();
    std::vector<std::string> names;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        // Name a basis vector after the ambient element when it is a unit vector.
        std::size_t nonzero = 0;
        std::size_t where = 0;
        for (std::size_t i = 0; i < basis[k].size(); ++i)
            if (sgn(basis[k][i]) != 0) {
                ++nonzero;
                where = i;
            }
        names.push_back(nonzero == 1 ? a.basis_names()[where] : "v" + std::to_string(k + 1));
    }
    LeibnizAlgebra sub(name.empty() ? a.name() + "_sub" : name, names);
    for (std::size_t x = 0; x < basis.size(); ++x)
        for (std::size_t y = 0; y < basis.size(); ++y)
            sub.set_bracket(x, y, s.coordinates(a.bracket(basis[x], basis[y])));
    AlgebraHom inc{sub, a, s.inclusion()};
    return {std::move(sub), std::move(inc), s};
}

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b, const std::string& name)
{
    std::vector<std::string> names = a.basis_names();
    for (const auto& n : b.basis_names())
        names.push_back(n + "'");
    LeibnizAlgebra s(name.empty() ? a.name() + "+" + b.name() : name, names);
    const std::size_t da = a.dim();
    const std::size_t d = s.dim();
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            Vector v(d);
            auto w = a.bracket_basis(i, j);
            std::copy(w.begin(), w.end(), v.begin());
            s.set_bracket(i, j, v);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) {
            Vector v(d);
            auto w = b.bracket_basis(i, j);
            std::copy(w.begin(), w.end(), v.begin() + static_cast<std::ptrdiff_t>(da));
            s.set_bracket(da + i, da + j, v);
        }
    return s;
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& a, const Matrix& basis, const std::string& name)
{
    Matrix inv = inverse(basis);
    LeibnizAlgebra out(name.empty() ? a.name() : name, a.basis_names());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            out.set_bracket(i, j, inv * a.bracket(basis.column(i), basis.column(j)));
    return out;
}

}  // namespace leibxmod
