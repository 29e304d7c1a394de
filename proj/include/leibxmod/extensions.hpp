#pragma once

// Extensions of crossed modules 0 -> (a,b) -> (h,p,sigma) -> (n,q,delta) -> 0,
// their classification, the connecting map theta*, and exactness reports.

#include "leibxmod/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibxmod {

struct Extension {
    CrossedModule total;     // (h, p, sigma)
    CrossedModule quotient;  // (n, q, delta)
    XModHom proj;
    SubPair kernel;          // (ker phi1, ker phi2)
};

/// Validates: proj is a surjective homomorphism, and total / kernel maps
/// isomorphically onto quotient. Throws std::invalid_argument otherwise.
Extension make_extension(const CrossedModule& total, const CrossedModule& quotient, const Matrix& top_map,
                         const Matrix& base_map);
/// total -> total / ideal.
Extension extension_from_ideal(const CrossedModule& total, const SubPair& ideal, const std::string& quotient_name = {});

/// The kernel pair as a crossed module of its own.
SubXMod kernel_xmod(const Extension& e);

/// (dim top, dim base, rank delta), the isomorphism type of an abelian
/// crossed module with trivial action.
struct AbelianType {
    std::size_t top = 0;
    std::size_t base = 0;
    std::size_t rank = 0;
    bool operator==(const AbelianType&) const = default;
};

AbelianType abelian_type(const CrossedModule& xm);

struct Classification {
    bool central = false;
    bool stem_extension = false;
    bool stem_cover = false;
    AbelianType kernel_type;
    AbelianType multiplier_type;
};

Classification classify(const Extension& e);

/// theta*(e) : M(quotient) -> kernel, in coordinates of the multiplier and of
/// the kernel subspaces. Throws std::invalid_argument when e is not central.
struct ThetaStar {
    Multiplier multiplier;  // M(quotient)
    SubXMod kernel;
    XModHom hom;
};

ThetaStar theta_star(const Extension& e, SectionPolicy policy = SectionPolicy::canonical);
ThetaStar theta_star(const Extension& e, const Multiplier& m, SectionPolicy policy);

struct StemCriteria {
    bool kernel_in_derived = false;
    bool theta_surjective = false;
    bool kernel_dies_in_abelianization = false;
    bool abelianizations_isomorphic = false;
    bool theta_bijective = false;
    bool multiplier_map_zero = false;
    bool cover = false;

    bool characterizations_agree() const;
    bool cover_criteria_agree() const;
};

StemCriteria stem_criteria(const Extension& e);

/// A node of an exact sequence of crossed modules, as (top dim, base dim).
struct SequenceNode {
    std::string name;
    std::size_t top = 0;
    std::size_t base = 0;
};

struct SequenceMap {
    std::string name;
    Matrix top;
    Matrix base;
};

struct NodeExactness {
    std::string node;
    SubPair image;   // of the incoming map
    SubPair kernel;  // of the outgoing map
    bool exact = false;
};

struct ExactnessReport {
    std::vector<SequenceNode> nodes;
    std::vector<SequenceMap> maps;  // maps[k] : nodes[k] -> nodes[k+1]
    std::vector<NodeExactness> checks;
    bool surjective_at_end = false;

    std::size_t exact_count() const;
    bool exact() const { return exact_count() == checks.size() && surjective_at_end; }
    /// The five-term tail starting at M(total).
    ExactnessReport five_term() const;
};

/// (I, b^p, sigma^id) with the maps into (p^h, p^p, id^sigma).
struct KernelIdealData {
    Subspace ideal;                 // I inside p^h
    QuotientPresentation b_wedge_p;
    CrossedModule xmod;             // (I, b^p, sigma^id), trivial action
    XModHom into_exterior;          // (beta, alpha)
    SubPair image;                  // (I, alpha(b^p)) inside the exterior crossed module
    bool ideal_is_span = false;     // closing the generator span added nothing
    /// Whether sigma^id lifts from p^p to b^p on I. It can fail: a generator
    /// class may vanish in p^h through a relation whose b-leg is not a
    /// bracket inside b.
    bool connecting_well_defined = false;
    bool abelian = false;
    bool valid_xmod = false;        // (I, b^p, sigma^id), only when the lift exists
    bool image_abelian_xmod = false;

    bool ok() const
    {
        return ideal_is_span && abelian && image_abelian_xmod && (!connecting_well_defined || valid_xmod);
    }
};

/// Throws std::invalid_argument when e is not central.
KernelIdealData kernel_ideal_check(const Extension& e);
KernelIdealData kernel_ideal_check(const Extension& e, const ExteriorSquareData& total_exterior);

ExactnessReport six_term_report(const Extension& e);

/// 0 -> M -> (q^n, q^q, id^delta) -> (n, q, delta) -> 0 for perfect xm.
/// Throws std::invalid_argument when xm is not perfect.
Extension stem_cover_of_perfect(const CrossedModule& xm);

struct CoverDimensions {
    std::pair<std::size_t, std::size_t> derived1, derived2;
    std::pair<std::size_t, std::size_t> mod_center1, mod_center2;
    std::pair<std::size_t, std::size_t> center_mod_kernel1, center_mod_kernel2;

    bool equal() const
    {
        return derived1 == derived2 && mod_center1 == mod_center2 && center_mod_kernel1 == center_mod_kernel2;
    }
};

/// Throws std::invalid_argument when the quotients differ.
CoverDimensions cover_dimension_check(const Extension& e1, const Extension& e2);

}  // namespace leibxmod
