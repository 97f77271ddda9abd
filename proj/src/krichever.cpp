#include "flagcoh/krichever.hpp"

#include <algorithm>
#include <sstream>

#include "flagcoh/linalg.hpp"

namespace flagcoh {

namespace {

constexpr std::size_t kMaxReportedViolations = 16;

MonomialCone degree_cone(int n, int bound) {
    // e_1 + ... + e_n <= bound
    AffineInequality ineq;
    ineq.coeffs.assign(static_cast<std::size_t>(n), -1);
    ineq.offset = bound;
    return MonomialCone{n, {std::move(ineq)}};
}

MonomialCone level_selector(int n, FiltrationIndex min_level) {
    // e_n >= min_level
    AffineInequality ineq;
    ineq.coeffs.assign(static_cast<std::size_t>(n), 0);
    ineq.coeffs.back() = 1;
    ineq.offset = static_cast<long>(-min_level);
    return MonomialCone{n, {std::move(ineq)}};
}

MonomialCone cone_slice(const MonomialCone& c, FiltrationIndex m) {
    MonomialCone r;
    r.n = c.n - 1;
    for (const auto& ineq : c.constraints) {
        AffineInequality s;
        s.coeffs.assign(ineq.coeffs.begin(), ineq.coeffs.end() - 1);
        s.offset = ineq.offset + ineq.coeffs.back() * static_cast<long>(m);
        r.constraints.push_back(std::move(s));
    }
    return r;
}

// Witness of pole order v in the elliptic coordinate ring: 1, x^{v/2}, or
// x^{(v-3)/2} y.  Pole order 1 has no witness (the Weierstrass gap).
std::optional<TruncatedSeries> elliptic_witness(const TruncatedSeries& x, const TruncatedSeries& y,
                                                long v) {
    if (v == 0) return TruncatedSeries::constant(1, FieldScalar::one(x.field()));
    if (v < 2) return std::nullopt;
    TruncatedSeries w = TruncatedSeries::constant(1, FieldScalar::one(x.field()));
    long xpow = (v % 2 == 0) ? v / 2 : (v - 3) / 2;
    for (long i = 0; i < xpow; ++i) w = series_mul(w, x);
    if (v % 2 == 1) w = series_mul(w, y);
    return w;
}

std::vector<SeriesWitness> elliptic_basis(const TruncatedSeries& x, const TruncatedSeries& y,
                                          long pole_cap) {
    std::vector<SeriesWitness> basis;
    for (long v = 0; v <= pole_cap; ++v) {
        auto w = elliptic_witness(x, y, v);
        if (w) basis.push_back({*w, v});
    }
    return basis;
}

std::vector<SeriesWitness> monomial_basis(int top_exponent, long count, FieldTag field) {
    // Exact monomials z^{top}, z^{top-1}, ...; pole order is -exponent.
    std::vector<SeriesWitness> basis;
    for (long k = 0; k < count; ++k) {
        int e = top_exponent - static_cast<int>(k);
        basis.push_back({TruncatedSeries::monomial({e}, FieldScalar::one(field)), -e});
    }
    return basis;
}

long closure_pole_cap(int precision) {
    // Products of two cap-order witnesses must stay certified through every
    // reduction-basis pole order plus one; with expansion precision N that
    // bounds the cap by (N + 5) / 4.
    return (precision + 5) / 4;
}

}  // namespace

KricheverPair phi(const GeometricData& data) {
    KricheverPair pair;
    pair.field = data.field;
    pair.window = data.window;
    pair.precision = data.precision;
    pair.twists = data.bundle.twists;
    if (data.bundle.rank() < 1) throw UsageError("bundle rank must be positive");

    if (const auto* ps = std::get_if<ProjSpace>(&data.scheme)) {
        if (ps->n < 1 || ps->n > 3) throw UsageError("projective-space preset supports n in {1,2,3}");
        pair.kind = ps->n == 1 ? PresetKind::ProjLine : PresetKind::ProjSpace;
        pair.n = ps->n;
        pair.cone_B = LinearSubspaceModel{degree_cone(ps->n, 0), {}};
        for (int d : data.bundle.twists)
            pair.cone_W.push_back(LinearSubspaceModel{degree_cone(ps->n, d), {}});
        if (ps->n == 1) {
            const long count = static_cast<long>(-data.window.lo.at(0)) + 1;
            pair.basis_B = monomial_basis(0, count, data.field);
            for (int d : data.bundle.twists)
                pair.basis_W.push_back(monomial_basis(d, count, data.field));
        }
        if (data.window.dim() != ps->n) throw UsageError("window dimension does not match the scheme");
        return pair;
    }
    if (const auto* pl = std::get_if<ProjLine>(&data.scheme)) {
        GeometricData as_pn = data;
        as_pn.scheme = ProjSpace{1, pl->d};
        if (data.bundle.twists == std::vector<int>{0} && pl->d != 0)
            as_pn.bundle.twists = {pl->d};
        return phi(as_pn);
    }
    if (const auto* el = std::get_if<Elliptic>(&data.scheme)) {
        if (data.bundle.rank() != 1 || data.bundle.twists[0] != 0)
            throw UsageError("the elliptic preset carries the trivial bundle");
        pair.kind = PresetKind::EllipticCurve;
        pair.n = 1;
        const long cap = closure_pole_cap(data.precision);
        if (cap < 3)
            throw PrecisionError("precision " + std::to_string(data.precision) +
                                 " is too small to certify any elliptic basis (need >= 8)");
        auto [x, y] = elliptic_expansions(el->a, el->b, data.precision);
        pair.basis_B = elliptic_basis(x, y, cap);
        pair.basis_W.push_back(pair.basis_B);
        return pair;
    }
    throw UsageError("the ideal-sheaf preset is not locally free and has no Krichever pair");
}

namespace {

// Eliminates leading poles of r against basis witnesses until the certified
// window is exhausted.  A pass leaves a stored-zero remainder.
struct ReductionOutcome {
    bool in_span = false;
    std::string detail;
};

ReductionOutcome reduce_against(TruncatedSeries r, const std::vector<SeriesWitness>& basis) {
    while (!r.is_stored_zero()) {
        auto val = zn_valuation(r);
        if (!val) break;
        const long pole = -static_cast<long>(*val);
        const SeriesWitness* hit = nullptr;
        for (const auto& w : basis)
            if (w.pole_order == pole) { hit = &w; break; }
        if (!hit) {
            return {false, "leading pole order " + std::to_string(pole) +
                               " has no basis witness; remainder " + print_series(r)};
        }
        const FieldScalar c =
            r.coefficients().begin()->second / hit->series.coefficients().begin()->second;
        r = series_sub(r, series_scale(c, hit->series));
        auto val2 = zn_valuation(r);
        if (val2 && *val2 <= *val)
            return {false, "reduction failed to raise the valuation at pole order " +
                               std::to_string(pole)};
    }
    return {true, ""};
}

ClosureReport cone_pair_closure(const LinearSubspaceModel& left, const LinearSubspaceModel& right,
                                const LinearSubspaceModel& target, const Window& w,
                                ClosureReport report) {
    std::vector<ExponentVector> lefts, rights;
    w.for_each_point([&](const ExponentVector& e) {
        if (left.contains_monomial(e)) lefts.push_back(e);
        if (right.contains_monomial(e)) rights.push_back(e);
    });
    for (const auto& e1 : lefts) {
        for (const auto& e2 : rights) {
            ++report.products_checked;
            ExponentVector s = exponent_add(e1, e2);
            if (!target.contains_monomial(s)) {
                report.passed = false;
                if (report.violations.size() < kMaxReportedViolations)
                    report.violations.push_back(
                        {exponent_str(e1), exponent_str(e2), "product " + exponent_str(s) + " escapes"});
            }
        }
    }
    return report;
}

// Extended witness list spanning every pole order a pairwise product can
// reach, used only to certify reductions.
std::vector<SeriesWitness> reduction_tier(const KricheverPair& pair,
                                          const std::vector<SeriesWitness>& basis) {
    long max_pole = 0;
    for (const auto& w : basis) max_pole = std::max(max_pole, w.pole_order);
    const long target = 2 * max_pole;
    if (pair.kind == PresetKind::ProjLine) {
        // Exact monomials extend freely.
        int top = 0;
        for (const auto& w : basis) top = std::max(top, static_cast<int>(-w.pole_order));
        std::vector<SeriesWitness> tier;
        for (long v = -top; v <= target; ++v)
            tier.push_back({TruncatedSeries::monomial({static_cast<int>(-v)},
                                                      FieldScalar::one(pair.field)),
                            v});
        return tier;
    }
    // Elliptic: rebuild x, y from the stored witnesses.
    const SeriesWitness* wx = nullptr;
    const SeriesWitness* wy = nullptr;
    for (const auto& w : basis) {
        if (w.pole_order == 2) wx = &w;
        if (w.pole_order == 3) wy = &w;
    }
    if (!wx || !wy)
        throw PrecisionError("basis lacks the pole-order-2 and pole-order-3 witnesses");
    return elliptic_basis(wx->series, wy->series, target);
}

ClosureReport basis_pair_closure(const KricheverPair& pair,
                                 const std::vector<SeriesWitness>& lefts,
                                 const std::vector<SeriesWitness>& rights,
                                 const std::vector<SeriesWitness>& reduction_basis,
                                 ClosureReport report) {
    long max_pole = 0;
    for (const auto& w : reduction_basis) max_pole = std::max(max_pole, w.pole_order);
    for (const auto& f : lefts) {
        for (const auto& g : rights) {
            ++report.products_checked;
            TruncatedSeries product = series_mul(f.series, g.series);
            // Certified window must reach past every reduction pole order.
            if (!precision_unbounded(product.precision().at(0)) &&
                product.precision().at(0) < max_pole + 1)
                throw PrecisionError("product of pole orders " + std::to_string(f.pole_order) +
                                     " and " + std::to_string(g.pole_order) +
                                     " is not certified through pole order " +
                                     std::to_string(max_pole) + " + 1");
            ReductionOutcome out = reduce_against(product, reduction_basis);
            if (!out.in_span) {
                report.passed = false;
                if (report.violations.size() < kMaxReportedViolations)
                    report.violations.push_back({"pole order " + std::to_string(f.pole_order),
                                                 "pole order " + std::to_string(g.pole_order),
                                                 out.detail});
            }
        }
    }
    return report;
}

}  // namespace

ClosureReport check_ring_closure(const KricheverPair& pair, const Window& w) {
    ClosureReport report;
    if (pair.has_basis()) {
        const TruncatedSeries one = TruncatedSeries::constant(1, FieldScalar::one(pair.field));
        report.contains_one = false;
        for (const auto& wit : pair.basis_B)
            if (wit.pole_order == 0 && agree_within_certified(wit.series, one))
                report.contains_one = true;
        auto tier = reduction_tier(pair, pair.basis_B);
        report = basis_pair_closure(pair, pair.basis_B, pair.basis_B, tier, std::move(report));
    } else if (pair.has_cones()) {
        report.contains_one =
            pair.cone_B->contains_monomial(ExponentVector(static_cast<std::size_t>(pair.n), 0));
        report = cone_pair_closure(*pair.cone_B, *pair.cone_B, *pair.cone_B, w, std::move(report));
    } else {
        throw UsageError("pair carries neither cones nor a witness basis");
    }
    if (!report.contains_one) report.passed = false;
    return report;
}

ClosureReport check_module_closure(const KricheverPair& pair, const Window& w) {
    ClosureReport report;
    if (pair.has_basis()) {
        for (const auto& basis_w : pair.basis_W) {
            auto tier = reduction_tier(pair, basis_w);
            report = basis_pair_closure(pair, pair.basis_B, basis_w, tier, std::move(report));
        }
    } else if (pair.has_cones()) {
        for (const auto& wj : pair.cone_W)
            report = cone_pair_closure(*pair.cone_B, wj, wj, w, std::move(report));
    } else {
        throw UsageError("pair carries neither cones nor a witness basis");
    }
    return report;
}

ReductionResult graded_reduction(const GeometricData& data, FiltrationIndex m_lo,
                                 FiltrationIndex m_hi) {
    if (m_lo > m_hi) throw UsageError("empty reduction range");
    KricheverPair pair = phi(data);
    if (!pair.has_cones() || pair.n < 2)
        throw UsageError("graded reduction needs a cone preset of dimension >= 2");
    const Window reduced_window = data.window.drop_last_axis();
    ReductionResult result;
    for (FiltrationIndex m = m_lo; m <= m_hi; ++m) {
        ReductionPiece piece;
        piece.m = m;
        // (B n K(m)) / (B n K(m+1)) as a predicate in the inner variables,
        // against the reduced scheme carrying the twist lowered by m.
        const MonomialCone b_slice = cone_slice(pair.cone_B->cone, m);
        const MonomialCone b_expected = degree_cone(pair.n - 1, static_cast<int>(-m));
        long dim = 0;
        reduced_window.for_each_point([&](const ExponentVector& e) {
            const bool got = b_slice.contains(e);
            const bool want = b_expected.contains(e);
            if (got) ++dim;
            if (got != want) {
                piece.B_matches = false;
                if (piece.mismatches.size() < kMaxReportedViolations)
                    piece.mismatches.push_back("B slice m=" + std::to_string(m) + " at " +
                                               exponent_str(e));
            }
        });
        piece.B_dim = dim;
        for (std::size_t j = 0; j < pair.cone_W.size(); ++j) {
            const MonomialCone w_slice = cone_slice(pair.cone_W[j].cone, m);
            const MonomialCone w_expected =
                degree_cone(pair.n - 1, pair.twists[j] - static_cast<int>(m));
            long wdim = 0;
            reduced_window.for_each_point([&](const ExponentVector& e) {
                const bool got = w_slice.contains(e);
                const bool want = w_expected.contains(e);
                if (got) ++wdim;
                if (got != want) {
                    piece.W_matches = false;
                    if (piece.mismatches.size() < kMaxReportedViolations)
                        piece.mismatches.push_back("W[" + std::to_string(j) + "] slice m=" +
                                                   std::to_string(m) + " at " + exponent_str(e));
                }
            });
            piece.W_dims.push_back(wdim);
        }
        if (!piece.B_matches || !piece.W_matches) result.passed = false;
        result.pieces.push_back(std::move(piece));
    }
    return result;
}

namespace {

FieldScalar series_coeff_at(const TruncatedSeries& f, int e) {
    return f.coefficient(ExponentVector{e});
}

}  // namespace

ReconstructionResult reconstruct_affine_ring(const KricheverPair& pair, PresetKind hint) {
    ReconstructionResult result;
    result.kind = hint;
    if (hint == PresetKind::ProjSpace)
        throw UsageError("reconstruction supports the curve presets");
    if (!pair.has_basis()) throw UsageError("reconstruction needs a witness basis");
    result.gaps = gap_sequence(pair);
    result.genus = static_cast<long>(result.gaps.size());
    if (hint == PresetKind::ProjLine) return result;

    const FieldTag field = pair.field;
    const TruncatedSeries one = TruncatedSeries::constant(1, FieldScalar::one(field));
    const SeriesWitness* w2 = nullptr;
    const SeriesWitness* w3 = nullptr;
    for (const auto& w : pair.basis_B) {
        if (w.pole_order == 2) w2 = &w;
        if (w.pole_order == 3) w3 = &w;
    }
    if (!w2 || !w3)
        throw PrecisionError("basis lacks pole-order-2 and pole-order-3 witnesses");

    // Short Weierstrass frame: leading coefficients 1, constant terms killed,
    // and the t^{-2} term of the order-3 witness absorbed into X.
    TruncatedSeries X = series_scale(series_coeff_at(w2->series, -2).inverse(), w2->series);
    X = series_sub(X, series_scale(series_coeff_at(X, 0), one));
    TruncatedSeries Y = series_scale(series_coeff_at(w3->series, -3).inverse(), w3->series);
    Y = series_sub(Y, series_scale(series_coeff_at(Y, -2), X));
    Y = series_sub(Y, series_scale(series_coeff_at(Y, 0), one));

    std::vector<TruncatedSeries> monomials = {
        one, X, Y, series_mul(X, X), series_mul(X, Y), series_mul(series_mul(X, X), X),
        series_mul(Y, Y)};
    int prec_min = kUnboundedPrecision;
    for (const auto& m : monomials) prec_min = std::min(prec_min, m.precision().at(0));
    if (prec_min < 18)
        throw PrecisionError("reconstruction needs the relation certified through t^18");

    Matrix mat(prec_min + 6, static_cast<int>(monomials.size()), field);
    for (int row = 0; row < mat.rows(); ++row) {
        const int e = row - 6;
        for (int col = 0; col < mat.cols(); ++col)
            mat.at(row, col) = series_coeff_at(monomials[static_cast<std::size_t>(col)], e);
    }
    auto kernel = nullspace(mat);
    if (kernel.empty())
        throw PrecisionError("no curve relation found within the certified precision");
    if (kernel.size() > 1)
        throw InconsistentInputError("several independent curve relations found");
    std::vector<FieldScalar> rel = kernel[0];
    if (rel[6].is_zero())
        throw InconsistentInputError("relation does not involve Y^2");
    const FieldScalar scale = rel[6].inverse();
    for (auto& c : rel) c = c * scale;
    const FieldScalar minus_one = -FieldScalar::one(field);
    if (!(rel[5] == minus_one) || !rel[2].is_zero() || !rel[3].is_zero() || !rel[4].is_zero())
        throw InconsistentInputError("relation is not in short Weierstrass form");
    result.a = -rel[1];
    result.b = -rel[0];
    return result;
}

HilbertReport hilbert_dims(const KricheverPair& pair, FiltrationIndex m_lo, FiltrationIndex m_hi,
                           const Window& w) {
    if (m_lo > m_hi) throw UsageError("empty filtration range");
    HilbertReport report;
    report.m_lo = m_lo;
    if (pair.has_cones()) {
        // A_(0) = B cut by the standard subspace omitting 1..n-1.
        std::set<int> omitted;
        for (int j = 1; j <= pair.n - 1; ++j) omitted.insert(j);
        const MonomialCone a0 =
            cone_intersect(pair.cone_B->cone, standard_constraint_cone(pair.n, omitted));
        for (FiltrationIndex m = m_lo; m <= m_hi; ++m) {
            const MonomialCone sel = level_selector(pair.n, -m);
            long count = 0;
            w.for_each_point([&](const ExponentVector& e) {
                if (!a0.contains(e) || !sel.contains(e)) return;
                ++count;
                if (w.on_boundary(e)) report.unreliable = true;
            });
            report.dims.push_back(count);
        }
        return report;
    }
    if (pair.has_basis()) {
        long cap = 0;
        for (const auto& wit : pair.basis_B) cap = std::max(cap, wit.pole_order);
        if (m_hi > cap)
            throw PrecisionError("filtration range exceeds the certified pole order cap " +
                                 std::to_string(cap));
        for (FiltrationIndex m = m_lo; m <= m_hi; ++m) {
            long count = 0;
            for (const auto& wit : pair.basis_B)
                if (wit.pole_order <= m) ++count;
            report.dims.push_back(count);
        }
        return report;
    }
    throw UsageError("pair carries neither cones nor a witness basis");
}

std::vector<long> gap_sequence(const KricheverPair& pair) {
    if (!pair.has_basis()) throw UsageError("gap sequence needs a witness basis");
    long cap = 0;
    for (const auto& w : pair.basis_B) cap = std::max(cap, w.pole_order);
    std::vector<long> gaps;
    for (long v = 1; v <= cap; ++v) {
        bool found = false;
        for (const auto& w : pair.basis_B)
            if (w.pole_order == v) { found = true; break; }
        if (!found) gaps.push_back(v);
    }
    return gaps;
}

CounterexampleReport counterexample_check(PointPosition position, bool use_ideal_sheaf,
                                          FieldTag field, const Window& w) {
    const SubspaceFamily fam =
        use_ideal_sheaf ? ideal_point_family(position, field) : proj_space_family(2, 0, field);
    CounterexampleReport report;

    const Simplex s01({0, 1});
    const Simplex s02({0, 2});
    const Simplex s12({1, 2});
    const Simplex s0({0});
    const Simplex s1({1});
    const bool off = position == PointPosition::OffY1;
    const Simplex& left = s01;
    const Simplex& right = off ? s02 : s12;
    const Simplex& meet = off ? s0 : s1;
    report.identity = "A_" + left.str() + " n A_" + right.str() + " = A_" + meet.str();

    const LinearSubspaceModel& ml = fam.space(left);
    const LinearSubspaceModel& mr = fam.space(right);
    const LinearSubspaceModel& mm = fam.space(meet);

    w.for_each_point([&](const ExponentVector& e) {
        if (ml.contains_monomial(e) && mr.contains_monomial(e) && !mm.contains_monomial(e)) {
            if (report.witnesses.size() < kMaxReportedViolations) report.witnesses.push_back(e);
        }
    });

    LinearSubspaceModel intersection;
    intersection.cone = cone_intersect(ml.cone, mr.cone);
    intersection.coefficient_constraints = ml.coefficient_constraints;
    intersection.coefficient_constraints.insert(intersection.coefficient_constraints.end(),
                                                mr.coefficient_constraints.begin(),
                                                mr.coefficient_constraints.end());
    report.dim_intersection = graded_dimension(intersection, w, field);
    report.dim_small_space = graded_dimension(mm, w, field);
    report.violation_found =
        !report.witnesses.empty() || report.dim_intersection != report.dim_small_space;
    return report;
}

StandardIntersectionReport check_standard_intersections(const LinearSubspaceModel& image,
                                                        const SubspaceFamily& fam,
                                                        const Window& w) {
    StandardIntersectionReport report;
    const int n = fam.n;
    const std::uint32_t all = (1u << (n + 1)) - 1;

    auto expected_member = [&](std::uint32_t mask, const ExponentVector& e) {
        std::set<int> omitted;
        for (int j = 0; j <= n - 1; ++j)
            if (!(mask & (1u << j))) omitted.insert(j);
        if (!standard_constraint_cone(n, omitted).contains(e)) return false;
        if (!(mask & (1u << n)) && !image.contains_monomial(e)) return false;
        return true;
    };

    w.for_each_point([&](const ExponentVector& e) {
        for (std::uint32_t mask = 1; mask <= all; ++mask) {
            if (fam.space(mask).contains_monomial(e) != expected_member(mask, e)) {
                report.passed = false;
                if (report.mismatches.size() < kMaxReportedViolations)
                    report.mismatches.push_back("sigma=" + Simplex::from_mask(mask).str() + " at " +
                                                exponent_str(e));
            }
        }
        // Global sections = the image meet the all-nonnegative standard subspace.
        std::set<int> all_omitted;
        for (int j = 0; j <= n - 1; ++j) all_omitted.insert(j);
        const bool expect_h0 = standard_constraint_cone(n, all_omitted).contains(e) &&
                               image.contains_monomial(e);
        if (fam.global_sections.contains_monomial(e) != expect_h0) {
            report.passed = false;
            if (report.mismatches.size() < kMaxReportedViolations)
                report.mismatches.push_back("H^0 at " + exponent_str(e));
        }
    });
    return report;
}

}  // namespace flagcoh
