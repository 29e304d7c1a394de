#pragma once

// Leibniz crossed modules (n, q, delta) and their standard constructions.

#include "leibxmod/algebra.hpp"

#include <string>

namespace leibxmod {

struct CrossedModule {
    std::string name;
    LeibnizAlgebra top;    // n
    LeibnizAlgebra base;   // q
    Matrix delta;          // base.dim() x top.dim()
    LeibnizAction action;  // q acting on n

    Vector apply_delta(const Vector& n) const { return delta * n; }
};

/// A pair of subspaces (X of the top, Y of the base).
struct SubPair {
    Subspace top;
    Subspace base;

    bool operator==(const SubPair&) const = default;
    bool contains(const SubPair& other) const { return top.contains(other.top) && base.contains(other.base); }
};

SubPair zero_pair(const CrossedModule& xm);
SubPair full_pair(const CrossedModule& xm);
bool is_full(const CrossedModule& xm, const SubPair& p);

struct XModHom {
    CrossedModule source;
    CrossedModule target;
    Matrix top_map;   // target.top.dim() x source.top.dim()
    Matrix base_map;  // target.base.dim() x source.base.dim()
};

ValidityReport check_xmod(const CrossedModule& xm);
ValidityReport check_xmod_hom(const XModHom& f);

/// delta(X) in Y, Y an ideal of q, and ^q X, X^q, ^Y n, n^Y all in X.
bool is_crossed_ideal(const CrossedModule& xm, const SubPair& p);
/// X, Y subalgebras with delta(X) in Y and ^Y X, X^Y in X.
bool is_sub_xmod(const CrossedModule& xm, const SubPair& p);

SubPair crossed_ideal_closure(const CrossedModule& xm, const SubPair& seed);

struct Commutator {
    SubPair pair;
    /// False when closing the spanned pair under the crossed-ideal conditions
    /// enlarged it; `pair` is the unclosed span in that case.
    bool closed = true;
};

/// [a, b] = (<D_h(t), D_j(s)>, [h, j]) for crossed ideals a = (s, h), b = (t, j).
Commutator commutator(const CrossedModule& xm, const SubPair& a, const SubPair& b);
SubPair derived_xmod(const CrossedModule& xm);
/// (n^q, st_q(n) cap Z(q)).
SubPair center_xmod(const CrossedModule& xm);

struct QuotientXMod {
    CrossedModule xmod;
    XModHom projection;
    QuotientMap top_quotient;
    QuotientMap base_quotient;
};

/// Throws std::invalid_argument when p is not a crossed ideal.
QuotientXMod quotient_xmod(const CrossedModule& xm, const SubPair& p, const std::string& name = {});
QuotientXMod abelianization(const CrossedModule& xm);
/// Quotient by the crossed ideal generated by the squares; the result is a
/// crossed module of Lie algebras (checked, std::logic_error otherwise).
QuotientXMod liezation(const CrossedModule& xm);

struct SubXMod {
    CrossedModule xmod;
    XModHom inclusion;
    SubPair pair;
};

/// Throws std::invalid_argument when p is not a sub crossed module.
SubXMod sub_xmod(const CrossedModule& xm, const SubPair& p, const std::string& name = {});

struct XModFlags {
    bool perfect = false;
    bool abelian = false;
    /// Both algebras abelian and the action trivial.
    bool abelian_by_components = false;
    bool finite_dimensional = true;
};

XModFlags predicates(const CrossedModule& xm);

/// (n, q, inclusion) for a two-sided ideal n of q, acted on by brackets.
CrossedModule ideal_xmod(const LeibnizAlgebra& q, const Subspace& ideal, const std::string& name = {});
/// (q, q, id) with the adjoint action.
CrossedModule identity_xmod(const LeibnizAlgebra& q);
/// (0, q, 0).
CrossedModule zero_top_xmod(const LeibnizAlgebra& q);
/// (m, q, 0) for an abelian algebra m with a q-action.
CrossedModule module_xmod(const LeibnizAlgebra& m, const LeibnizAlgebra& q, const LeibnizAction& act);
/// Abelian crossed module (a, b, sigma) with trivial action.
CrossedModule abelian_xmod(std::size_t a, std::size_t b, const Matrix& sigma, const std::string& name = {});
CrossedModule direct_sum(const CrossedModule& x, const CrossedModule& y, const std::string& name = {});

}  // namespace leibxmod
