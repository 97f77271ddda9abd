#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flagcoh/exponent.hpp"
#include "flagcoh/field.hpp"
#include "flagcoh/simplex.hpp"

namespace flagcoh {

/// Affine integer inequality a.e + c >= 0 on exponent vectors.
struct AffineInequality {
    std::vector<long> coeffs;
    long offset = 0;

    bool holds(const ExponentVector& e) const;
    std::string str() const;  // "a1*i1 + ... + an*in + c >= 0"
};

/// Lattice predicate cut out by finitely many affine inequalities.  The empty
/// constraint list denotes all of Z^n.
struct MonomialCone {
    int n = 0;
    std::vector<AffineInequality> constraints;

    static MonomialCone full(int n) { return MonomialCone{n, {}}; }
    bool contains(const ExponentVector& e) const;
    std::string str() const;
};

/// Membership test evaluating every inequality at e.
bool cone_contains(const MonomialCone& c, const ExponentVector& e);

/// Conjunction of constraint lists; membership is the pointwise AND.
MonomialCone cone_intersect(const MonomialCone& a, const MonomialCone& b);

/// The standard subspace cut out by nonnegativity of selected exponents: for
/// each omitted index j in {0,...,n-1} the constraint e_{n-j} >= 0.
MonomialCone standard_constraint_cone(int n, const std::set<int>& omitted);

/// Linear functional on coefficient vectors, realized as evaluation at a point
/// (c_1,...,c_n) of the ground field: the coefficient at exponent e carries
/// weight c_1^{e_1} ... c_n^{e_n}.
struct LinearConstraint {
    std::vector<FieldScalar> point;

    FieldScalar weight(const ExponentVector& e) const;  // 0^0 = 1; 0^neg throws
    std::string str() const;
};

/// A k-subspace of the local field: the span of a cone's monomials, cut down
/// by finitely many vanishing linear functionals on coefficients.
struct LinearSubspaceModel {
    MonomialCone cone;
    std::vector<LinearConstraint> coefficient_constraints;

    /// The monomial z^e lies in the subspace iff e is in the cone and every
    /// constraint gives it weight zero.
    bool contains_monomial(const ExponentVector& e) const;
};

/// Dimension of the model restricted to a window (optionally further cut by a
/// selector predicate): lattice point count minus the rank of the coefficient
/// constraints on those points.
long graded_dimension(const LinearSubspaceModel& s, const Window& w, FieldTag field,
                      const std::optional<MonomialCone>& selector = std::nullopt);

/// Assignment of a subspace model to every nonempty simplex of {0,...,n},
/// plus a distinguished model for the global sections.
struct SubspaceFamily {
    int n = 0;
    FieldTag field;
    std::map<std::uint32_t, LinearSubspaceModel> spaces;  // key: vertex mask
    LinearSubspaceModel global_sections;

    const LinearSubspaceModel& space(std::uint32_t mask) const;
    const LinearSubspaceModel& space(const Simplex& s) const;
    /// True when no model carries coefficient constraints.
    bool pure_cones() const;
    void validate_total() const;  // all 2^{n+1}-1 simplices present
};

struct FamilyViolation {
    ExponentVector exponent;
    std::uint32_t mask1 = 0;  // offending simplex (or pair) masks
    std::uint32_t mask2 = 0;
    std::string describe(int n) const;
};

struct FamilyCheckReport {
    bool passed = true;
    std::uint64_t points_checked = 0;
    std::uint64_t pairs_checked = 0;
    std::vector<FamilyViolation> violations;  // capped; first ones in scan order
};

/// For every containment sigma1 subset sigma2 and every window point,
/// membership in the smaller space must imply membership in the larger; the
/// global-sections model must sit inside every space.
FamilyCheckReport family_check_monotone(const SubspaceFamily& fam, const Window& w);

/// For every unordered pair (sigma1, sigma2) and window point, joint
/// membership must coincide with membership in the intersection simplex
/// (the global-sections model when the simplices are disjoint).
FamilyCheckReport family_check_intersections(const SubspaceFamily& fam, const Window& w);

}  // namespace flagcoh
