#include "flagcoh/presets.hpp"

namespace flagcoh {

namespace {

// Constraint e_1 + ... + e_n <= d, i.e. -sum(e) + d >= 0 (nonnegative
// x_0-exponent of the chart numerator).
AffineInequality degree_bound(int n, int d) {
    AffineInequality ineq;
    ineq.coeffs.assign(static_cast<std::size_t>(n), -1);
    ineq.offset = d;
    return ineq;
}

MonomialCone proj_space_cone(int n, int d, std::uint32_t sigma_mask) {
    std::set<int> omitted;
    for (int j = 0; j <= n - 1; ++j)
        if (!(sigma_mask & (1u << j))) omitted.insert(j);
    MonomialCone cone = standard_constraint_cone(n, omitted);
    if (!(sigma_mask & (1u << n))) cone.constraints.push_back(degree_bound(n, d));
    return cone;
}

}  // namespace

SubspaceFamily proj_space_family(int n, int d, FieldTag field) {
    if (n < 1 || n > 3) throw UsageError("projective-space preset supports n in {1,2,3}");
    SubspaceFamily fam;
    fam.n = n;
    fam.field = field;
    const std::uint32_t all = (1u << (n + 1)) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask)
        fam.spaces[mask] = LinearSubspaceModel{proj_space_cone(n, d, mask), {}};

    // Global sections: every chart exponent nonnegative and total degree <= d.
    MonomialCone h0 = MonomialCone::full(n);
    for (int t = 0; t < n; ++t) {
        AffineInequality ineq;
        ineq.coeffs.assign(static_cast<std::size_t>(n), 0);
        ineq.coeffs[static_cast<std::size_t>(t)] = 1;
        h0.constraints.push_back(std::move(ineq));
    }
    h0.constraints.push_back(degree_bound(n, d));
    fam.global_sections = LinearSubspaceModel{std::move(h0), {}};
    return fam;
}

SubspaceFamily p1_family(int d, FieldTag field) { return proj_space_family(1, d, field); }

FieldScalar elliptic_discriminant(const FieldScalar& a, const FieldScalar& b) {
    const FieldScalar four = FieldScalar::from_integer(4, a.tag());
    const FieldScalar twenty_seven = FieldScalar::from_integer(27, a.tag());
    return four * a.pow(3) + twenty_seven * b.pow(2);
}

std::pair<TruncatedSeries, TruncatedSeries> elliptic_expansions(const FieldScalar& a,
                                                                const FieldScalar& b, int N) {
    if (!(a.tag() == b.tag())) throw UsageError("elliptic coefficients live in different fields");
    const FieldTag field = a.tag();
    if (field.kind == FieldKind::Prime && field.p < 5)
        throw UsageError("elliptic preset needs characteristic 0 or p >= 5");
    if (N < 8) throw PrecisionError("elliptic expansions need precision N >= 8");
    if (elliptic_discriminant(a, b).is_zero())
        throw UsageError("singular curve: discriminant 4a^3 + 27b^2 vanishes");

    // Solve x = t^{-2} - a/x - b/x^2 by fixed-point iteration; each pass is
    // exact four orders further.  Work a little beyond N so derived products
    // (y = x/t, closure checks) stay certified through N.
    const int work = N + 4;
    const ExponentVector work_prec{work};
    const FieldScalar neg_a = -a, neg_b = -b;
    TruncatedSeries t_inv2 = TruncatedSeries::monomial({-2}, FieldScalar::one(field));
    TruncatedSeries x = t_inv2.truncated_to(work_prec);
    const int iterations = (work + 2) / 4 + 2;
    for (int it = 0; it < iterations; ++it) {
        TruncatedSeries xi = series_inverse(x, work_prec);
        TruncatedSeries next = series_add(t_inv2, series_scale(neg_a, xi));
        next = series_add(next, series_scale(neg_b, series_mul(xi, xi)));
        x = next.truncated_to(work_prec);
    }
    // y = x / t
    TruncatedSeries y = series_mul(x, TruncatedSeries::monomial({-1}, FieldScalar::one(field)));

    // Defining property, certified through N.
    TruncatedSeries residual = series_sub(series_mul(y, y), series_mul(series_mul(x, x), x));
    residual = series_sub(residual, series_scale(a, x));
    residual = series_sub(residual, TruncatedSeries::constant(1, b));
    for (const auto& [e, c] : residual.coefficients()) {
        if (e[0] < N)
            throw PresetError("elliptic expansion residual is nonzero at t^" +
                              std::to_string(e[0]));
    }
    auto vx = zn_valuation(x), vy = zn_valuation(y);
    if (!vx || *vx != -2 || !vy || *vy != -3)
        throw PresetError("elliptic expansions have unexpected valuations");
    return {x, y};
}

std::pair<FieldScalar, FieldScalar> ideal_point_chart_coords(PointPosition position,
                                                             FieldTag field) {
    switch (position) {
        case PointPosition::OffY1:
            return {FieldScalar::zero(field), FieldScalar::one(field)};  // (u,v) = (0,1)
        case PointPosition::OnY1OffY2:
            return {FieldScalar::one(field), FieldScalar::zero(field)};  // (u,v) = (1,0)
    }
    throw UsageError("invalid point position");
}

std::string position_name(PointPosition position) {
    return position == PointPosition::OffY1 ? "off-y1" : "on-y1-off-y2";
}

SubspaceFamily ideal_point_family(PointPosition position, FieldTag field) {
    SubspaceFamily fam = proj_space_family(2, 0, field);
    auto [u, v] = ideal_point_chart_coords(position, field);
    LinearConstraint vanish_at_q{{u, v}};

    // Exactly the spaces whose sections are evaluated where Q lives pick up
    // the vanishing condition; localization or completion elsewhere erases it.
    const std::uint32_t affected =
        position == PointPosition::OffY1 ? Simplex({0}).mask() : Simplex({1}).mask();
    fam.spaces[affected].coefficient_constraints.push_back(vanish_at_q);
    fam.global_sections.coefficient_constraints.push_back(vanish_at_q);
    return fam;
}

}  // namespace flagcoh
