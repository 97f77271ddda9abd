#pragma once

#include <utility>
#include <variant>

#include "flagcoh/cones.hpp"
#include "flagcoh/series.hpp"

namespace flagcoh {

// Chart and flag conventions, fixed once for every preset.
//
// Projective space P^n carries homogeneous coordinates (x_0 : ... : x_n); the
// flag member Y_i is the vanishing locus of the last i coordinates, so the
// marked point Y_n is (1 : 0 : ... : 0).  Around it we use the affine chart
// coordinates z_t = x_t / x_0 (t = 1..n); then z_{n-i+1} = 0 cuts Y_i out of
// Y_{i-1}.  Twists O(d) are trivialized near the marked point by x_0^{-d}, so
// the monomial x_0^{a_0} x_1^{a_1} ... x_n^{a_n} of degree d reads as
// z_1^{a_1} ... z_n^{a_n} with a_0 = d - (a_1 + ... + a_n).
//
// An elliptic curve y^2 = x^3 + a x + b is marked at its point at infinity
// with local parameter t = x / y, a uniformizer there.

struct ProjSpace {
    int n = 1;
    int d = 0;
};

struct ProjLine {
    int d = 0;
};

struct Elliptic {
    FieldScalar a;
    FieldScalar b;
};

/// Position of the point Q relative to the flag on P^2, for the ideal-sheaf
/// model.  Q = Y_2 is excluded.
enum class PointPosition { OffY1, OnY1OffY2 };

struct IdealPoint {
    PointPosition position = PointPosition::OffY1;
};

using SchemeModel = std::variant<ProjSpace, ProjLine, Elliptic, IdealPoint>;

/// The subspace family of O(d) on P^n (n in {1,2,3}) with the coordinate flag.
///
/// A monomial z^e is a section of the space at sigma exactly when its chart
/// numerator stays regular through the localizations sigma prescribes:
/// omitting j from sigma keeps the constraint e_{n-j} >= 0, and omitting the
/// vertex n keeps the x_0-exponent nonnegative, i.e. e_1 + ... + e_n <= d.
SubspaceFamily proj_space_family(int n, int d, FieldTag field);

/// The n = 1 family on P^1: spaces at (0), (1), (0,1) and the global sections
/// of O(d) (dimension max(d+1, 0)).
SubspaceFamily p1_family(int d, FieldTag field);

/// Laurent expansions of the coordinate functions at the point at infinity of
/// y^2 = x^3 + a x + b, in the parameter t = x/y: ord x = -2, ord y = -3, and
/// y^2 - x^3 - a x - b = 0 within precision N (N >= 8).
std::pair<TruncatedSeries, TruncatedSeries> elliptic_expansions(const FieldScalar& a,
                                                                const FieldScalar& b, int N);

/// 4 a^3 + 27 b^2; the curve is singular iff this vanishes.
FieldScalar elliptic_discriminant(const FieldScalar& a, const FieldScalar& b);

/// The family of the ideal sheaf m_Q of a point Q on P^2.  Spaces that see Q
/// acquire one vanishing-at-Q coefficient constraint; the rest coincide with
/// the structure-sheaf models.  The fixed charts put Q at (u,v) = (0,1) for
/// OffY1 and (1,0) for OnY1OffY2.
SubspaceFamily ideal_point_family(PointPosition position, FieldTag field);

/// Chart coordinates of Q for a position (used by checks and reports).
std::pair<FieldScalar, FieldScalar> ideal_point_chart_coords(PointPosition position, FieldTag field);

std::string position_name(PointPosition position);

}  // namespace flagcoh
