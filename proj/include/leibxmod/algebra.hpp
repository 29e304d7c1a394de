#pragma once

// Finite-dimensional Leibniz algebras given by structure constants.
//
// Convention: [e_i, e_j] = sum_k c(i, j, k) e_k, and the (right) Leibniz
// identity reads [x, [y, z]] = [[x, y], z] - [[x, z], y].

#include "leibxmod/ratlin.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace leibxmod {

struct Violation {
    std::string condition;           // which axiom or identity failed
    std::vector<std::string> where;  // the basis elements involved
    Vector residual;
};

/// Collection of violations; valid iff empty.
class ValidityReport {
public:
    bool valid() const { return violations_.empty(); }
    const std::vector<Violation>& violations() const { return violations_; }

    void add(std::string condition, std::vector<std::string> where, Vector residual);
    void merge(const ValidityReport& other, const std::string& prefix = {});
    std::string summary() const;

private:
    std::vector<Violation> violations_;
};

class LeibnizAlgebra {
public:
    LeibnizAlgebra() = default;
    LeibnizAlgebra(std::string name, std::vector<std::string> basis_names);
    LeibnizAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<Rational> constants);

    static LeibnizAlgebra abelian(std::string name, std::size_t dim);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    /// Index of a basis element by name; throws std::out_of_range.
    std::size_t index_of(const std::string& basis_name) const;

    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const;
    void set_bracket(std::size_t i, std::size_t j, const Vector& value);

    Vector bracket_basis(std::size_t i, std::size_t j) const;
    Vector bracket(const Vector& x, const Vector& y) const;
    /// Matrix of y -> [x, y].
    Matrix left_multiplication(const Vector& x) const;
    /// Matrix of y -> [y, x].
    Matrix right_multiplication(const Vector& x) const;

    bool is_abelian() const;
    const std::vector<Rational>& constants() const { return c_; }

    /// Structural equality (names of the algebra and basis are ignored).
    bool same_structure(const LeibnizAlgebra& other) const { return c_ == other.c_ && dim() == other.dim(); }
    bool operator==(const LeibnizAlgebra& other) const = default;

private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<Rational> c_;  // (i * d + j) * d + k
};

/// A pair of bilinear maps describing how an algebra m (the actor) acts on an
/// algebra n: left(i, j) is the action of m_i on n_j from the left,
/// right(j, i) is n_j acted on by m_i from the right.
class LeibnizAction {
public:
    LeibnizAction() = default;
    LeibnizAction(std::size_t actor_dim, std::size_t acted_dim);

    static LeibnizAction trivial(std::size_t actor_dim, std::size_t acted_dim);
    /// The action of an algebra on itself by brackets.
    static LeibnizAction adjoint(const LeibnizAlgebra& q);

    std::size_t actor_dim() const { return actor_dim_; }
    std::size_t acted_dim() const { return acted_dim_; }

    const Vector& left(std::size_t actor, std::size_t acted) const { return left_[actor * acted_dim_ + acted]; }
    const Vector& right(std::size_t acted, std::size_t actor) const { return right_[acted * actor_dim_ + actor]; }
    void set_left(std::size_t actor, std::size_t acted, Vector value);
    void set_right(std::size_t acted, std::size_t actor, Vector value);

    Vector act_left(const Vector& m, const Vector& n) const;
    Vector act_right(const Vector& n, const Vector& m) const;

    bool is_trivial() const;
    bool operator==(const LeibnizAction& other) const = default;

private:
    std::size_t actor_dim_ = 0;
    std::size_t acted_dim_ = 0;
    std::vector<Vector> left_;
    std::vector<Vector> right_;
};

struct AlgebraHom {
    LeibnizAlgebra source;
    LeibnizAlgebra target;
    Matrix matrix;  // target.dim() x source.dim()

    bool is_surjective() const { return rank(matrix) == target.dim(); }
    bool is_injective() const { return rank(matrix) == source.dim(); }
};

ValidityReport check_leibniz(const LeibnizAlgebra& a);
bool is_lie(const LeibnizAlgebra& a);
/// Checks the six action axioms on all basis triples.
ValidityReport check_action(const LeibnizAlgebra& actor, const LeibnizAlgebra& acted, const LeibnizAction& act);
ValidityReport check_hom(const AlgebraHom& f);

/// span{[x, y] : x in X, y in Y}.
Subspace span_brackets(const LeibnizAlgebra& a, const Subspace& x, const Subspace& y);
Subspace derived_subspace(const LeibnizAlgebra& a);
/// Two-sided center {x : [x, a] = [a, x] = 0}.
Subspace center(const LeibnizAlgebra& a);
bool is_two_sided_ideal(const LeibnizAlgebra& a, const Subspace& s);
/// Smallest two-sided ideal containing seed.
Subspace ideal_closure(const LeibnizAlgebra& a, const Subspace& seed);
bool is_subalgebra(const LeibnizAlgebra& a, const Subspace& s);

struct QuotientAlgebra {
    LeibnizAlgebra algebra;
    AlgebraHom projection;
    QuotientMap map;
};

/// a / ideal with the canonical quotient basis. Throws std::invalid_argument
/// when ideal is not a two-sided ideal.
QuotientAlgebra quotient_algebra(const LeibnizAlgebra& a, const Subspace& ideal);

struct Subalgebra {
    LeibnizAlgebra algebra;  // basis = RREF basis of the subspace
    AlgebraHom inclusion;
    Subspace subspace;
};

/// Restriction of the bracket to a subalgebra. Throws std::invalid_argument
/// when s is not closed under brackets.
Subalgebra subalgebra(const LeibnizAlgebra& a, const Subspace& s, const std::string& name = {});

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b, const std::string& name = {});

/// Basis change: the new basis vectors are the columns of `basis` (expressed
/// in the old basis). Throws std::invalid_argument when singular.
LeibnizAlgebra change_basis(const LeibnizAlgebra& a, const Matrix& basis, const std::string& name = {});

}  // namespace leibxmod
