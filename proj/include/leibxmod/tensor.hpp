#pragma once

// Non-abelian tensor and exterior products of Leibniz algebras.
//
// Both are presented as a quotient of the free symbol space on basis pairs,
// laid out as [m_i * n_j at i*dn + j | n_j * m_i at dm*dn + j*dm + i].
// Multilinearity of the symbols is built into the layout, so only the
// bracket and action relations become relation rows. Every relation schema
// is multilinear, which makes basis tuples enough to span the relations.

#include "leibxmod/xmod.hpp"

#include <string>

namespace leibxmod {

/// Two algebras acting on each other.
struct MutualActionPair {
    LeibnizAlgebra m;
    LeibnizAlgebra n;
    LeibnizAction m_on_n;  // actor m, acted n
    LeibnizAction n_on_m;  // actor n, acted m
};

/// Actions of m and n on each other through a common base q, for crossed
/// modules eta : m -> q and delta : n -> q.
MutualActionPair induced_actions(const CrossedModule& eta, const CrossedModule& delta);
ValidityReport check_pair(const MutualActionPair& p);

class QuotientPresentation {
public:
    QuotientPresentation() = default;
    /// Builds the tensor product; extra relations (the square subspace for an
    /// exterior product) are added on top of the tensor relations. Throws
    /// std::logic_error when the induced bracket is not well defined.
    QuotientPresentation(MutualActionPair pair, const std::string& name, const Subspace* extra = nullptr);

    const MutualActionPair& pair() const { return pair_; }
    std::size_t dm() const { return pair_.m.dim(); }
    std::size_t dn() const { return pair_.n.dim(); }
    std::size_t ambient_dim() const { return 2 * dm() * dn(); }

    std::size_t mn_index(std::size_t i, std::size_t j) const { return i * dn() + j; }
    std::size_t nm_index(std::size_t j, std::size_t i) const { return dm() * dn() + j * dm() + i; }
    bool is_mn(std::size_t symbol) const { return symbol < dm() * dn(); }
    std::string symbol_name(std::size_t symbol) const;

    /// Bilinear symbols: mn(x, y) = x * y and nm(y, x) = y * x for x in m, y in n.
    Vector mn(const Vector& x, const Vector& y) const;
    Vector nm(const Vector& y, const Vector& x) const;

    /// The bracket on ambient vectors, always taking the m*n representative.
    Vector ambient_bracket(const Vector& u, const Vector& v) const;
    /// The n*m representative of the same bracket.
    Vector alternative_bracket(const Vector& u, const Vector& v) const;

    const Subspace& tensor_relations() const { return tensor_relations_; }
    const Subspace& relations() const { return quotient_.relations(); }
    const QuotientMap& quotient() const { return quotient_; }
    const LeibnizAlgebra& algebra() const { return algebra_; }

    Vector project(const Vector& ambient) const { return quotient_.project(ambient); }

    /// Class of a linear map defined on ambient symbols. Throws
    /// std::logic_error when the map does not send relations into
    /// `target_relations`.
    Matrix descend(const Matrix& ambient_map, const QuotientMap& target) const;
    Matrix descend(const Matrix& ambient_map) const;

private:
    MutualActionPair pair_;
    Matrix left_factor_;   // dm x ambient: symbol -> element of m used on the left of a bracket
    Matrix right_factor_;  // dn x ambient: symbol -> element of n used on the right
    Subspace tensor_relations_;
    QuotientMap quotient_;
    LeibnizAlgebra algebra_;
};

QuotientPresentation tensor_product(const MutualActionPair& p, const std::string& name = {});
/// Span of m*n' - n*m' over pairs (m, n), (m', n') with eta(m) = delta(n).
Subspace square_subspace(const CrossedModule& eta, const CrossedModule& delta);
QuotientPresentation exterior_product(const CrossedModule& eta, const CrossedModule& delta, const std::string& name = {});

/// (q^n, q^q, id^delta) together with phi = (lambda, mu) onto (n, q, delta).
struct ExteriorSquareData {
    CrossedModule source;
    QuotientPresentation qn;
    QuotientPresentation qq;
    CrossedModule xmod;
    XModHom phi;

    const Matrix& id_wedge_delta() const { return xmod.delta; }
    const Matrix& lambda() const { return phi.top_map; }
    const Matrix& mu() const { return phi.base_map; }
};

/// Throws std::invalid_argument for an invalid crossed module and
/// std::logic_error if any derived structure fails its checks.
ExteriorSquareData exterior_square_data(const CrossedModule& xm);

struct Multiplier {
    ExteriorSquareData exterior;
    SubXMod sub;  // (ker lambda, ker mu) inside the exterior crossed module

    const CrossedModule& xmod() const { return sub.xmod; }
    const SubPair& pair() const { return sub.pair; }
};

Multiplier schur_multiplier(const CrossedModule& xm);
Multiplier schur_multiplier(ExteriorSquareData data);

struct InducedExteriorHom {
    ExteriorSquareData source;
    ExteriorSquareData target;
    XModHom hom;     // (phi2 ^ phi1, phi2 ^ phi2)
    SubPair kernel;  // equal to the ideals generated by symbols with a leg in ker f
};

/// Throws std::invalid_argument when f is not surjective.
InducedExteriorHom induced_exterior_hom(const XModHom& f);

struct MultiplierMap {
    Multiplier source;
    Multiplier target;
    XModHom hom;
};

MultiplierMap multiplier_functorial_map(const XModHom& f);
/// Restriction to multipliers of an already induced exterior map.
MultiplierMap multiplier_functorial_map(const InducedExteriorHom& induced);

}  // namespace leibxmod
