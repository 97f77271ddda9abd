#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "flagcoh/cones.hpp"
#include "flagcoh/exponent.hpp"
#include "flagcoh/linalg.hpp"
#include "flagcoh/simplex.hpp"

namespace flagcoh {

/// For a fixed exponent vector, the set of simplices whose subspace contains
/// the monomial.  Upward-closed under vertex inclusion for any family obeying
/// the imbedding laws; a violation is a detectable preset error.
struct MembershipProfile {
    ExponentVector exponent;
    int n = 0;
    std::uint64_t member_bits = 0;  // bit (1 << simplex_mask) set when member

    bool member(std::uint32_t simplex_mask) const { return (member_bits >> simplex_mask) & 1; }
    bool full(int n_) const;
    bool empty() const { return member_bits == 0; }
};

/// Computes the profile of e and verifies upward closure; on a violation
/// throws PresetError naming the witness pair of simplices.
MembershipProfile membership_profile(const ExponentVector& e, const SubspaceFamily& fam);

/// Sign convention of the complex: the i-th face map carries (-1)^i.
int face_sign(int i);

/// Sign matrix of the degree-k differential restricted to a profile:
/// rows index S_k members, columns S_{k-1} members, entry +/-1 for each face
/// inclusion.  Exposed so a corrupted sign convention can be tested.
Matrix profile_differential(const MembershipProfile& p, int n, int k, FieldTag field,
                            const std::function<int(int)>& sign = face_sign);

/// Per-degree contributions (b_0, ..., b_n) of one exponent: exact ranks of
/// the profile's cochain complex.  The full profile short-circuits to
/// (1, 0, ..., 0) (the simplex is connected and has no higher cohomology).
std::vector<long> exponent_cohomology(const MembershipProfile& p, int n, FieldTag field);

struct CohomologyReport {
    std::vector<long> dims;  // h^0 ... h^n
    Window window;
    bool boundary_contact = false;
    // Nonzero per-exponent contributions, kept only when requested.
    std::map<ExponentVector, std::vector<long>, KLexLess> per_exponent;

    std::string human_text() const;  // "h^0 = 1" lines
};

/// Sums exponent_cohomology over the window.  Requires a pure-cone family
/// (models with coefficient constraints are not multidegree-diagonal).
/// The boundary-contact flag marks nonzero contributions on the window
/// boundary; such a report is unreliable and the window should be widened.
CohomologyReport total_cohomology(const SubspaceFamily& fam, const Window& w,
                                  bool keep_per_exponent = false);

/// Assembles the per-degree sign matrices over the window's monomials and
/// verifies every composite vanishes exactly.
bool d_squared_zero(const SubspaceFamily& fam, const Window& w);
bool d_squared_zero_with_signs(const SubspaceFamily& fam, const Window& w,
                               const std::function<int(int)>& sign);

}  // namespace flagcoh
