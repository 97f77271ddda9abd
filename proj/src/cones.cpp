#include "flagcoh/cones.hpp"

#include <sstream>

#include "flagcoh/linalg.hpp"

namespace flagcoh {

namespace {
constexpr std::size_t kMaxReportedViolations = 16;
}

bool AffineInequality::holds(const ExponentVector& e) const {
    if (e.size() != coeffs.size()) throw UsageError("inequality dimension mismatch");
    long long v = offset;
    for (std::size_t t = 0; t < coeffs.size(); ++t)
        v += static_cast<long long>(coeffs[t]) * e[t];
    return v >= 0;
}

std::string AffineInequality::str() const {
    std::ostringstream os;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (t) os << " + ";
        os << coeffs[t] << "*i" << (t + 1);
    }
    if (!coeffs.empty()) os << " + ";
    os << offset << " >= 0";
    return os.str();
}

bool MonomialCone::contains(const ExponentVector& e) const {
    if (e.size() != static_cast<std::size_t>(n)) throw UsageError("cone dimension mismatch");
    for (const auto& ineq : constraints)
        if (!ineq.holds(e)) return false;
    return true;
}

std::string MonomialCone::str() const {
    if (constraints.empty()) return "all of Z^" + std::to_string(n);
    std::ostringstream os;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (i) os << "; ";
        os << constraints[i].str();
    }
    return os.str();
}

bool cone_contains(const MonomialCone& c, const ExponentVector& e) { return c.contains(e); }

MonomialCone cone_intersect(const MonomialCone& a, const MonomialCone& b) {
    if (a.n != b.n) throw UsageError("intersecting cones of different dimensions");
    MonomialCone r = a;
    r.constraints.insert(r.constraints.end(), b.constraints.begin(), b.constraints.end());
    return r;
}

MonomialCone standard_constraint_cone(int n, const std::set<int>& omitted) {
    if (n < 1) throw UsageError("variable count must be positive");
    MonomialCone c = MonomialCone::full(n);
    for (int j : omitted) {
        if (j < 0 || j > n - 1)
            throw UsageError("omitted index " + std::to_string(j) + " out of range [0," +
                             std::to_string(n - 1) + "]");
        // e_{n-j} >= 0
        AffineInequality ineq;
        ineq.coeffs.assign(static_cast<std::size_t>(n), 0);
        ineq.coeffs[static_cast<std::size_t>(n - j - 1)] = 1;
        ineq.offset = 0;
        c.constraints.push_back(std::move(ineq));
    }
    return c;
}

FieldScalar LinearConstraint::weight(const ExponentVector& e) const {
    if (e.size() != point.size()) throw UsageError("constraint dimension mismatch");
    if (point.empty()) throw UsageError("empty evaluation point");
    FieldScalar w = FieldScalar::one(point.front().tag());
    for (std::size_t t = 0; t < point.size(); ++t) {
        if (point[t].is_zero()) {
            if (e[t] > 0) return FieldScalar::zero(w.tag());
            if (e[t] < 0) throw UsageError("evaluation point has a zero coordinate at a pole");
            continue;  // 0^0 = 1
        }
        w = w * point[t].pow(e[t]);
    }
    return w;
}

std::string LinearConstraint::str() const {
    std::ostringstream os;
    os << "vanish_at(";
    for (std::size_t t = 0; t < point.size(); ++t) {
        if (t) os << ',';
        os << point[t].str();
    }
    os << ')';
    return os.str();
}

bool LinearSubspaceModel::contains_monomial(const ExponentVector& e) const {
    if (!cone.contains(e)) return false;
    for (const auto& ctr : coefficient_constraints)
        if (!ctr.weight(e).is_zero()) return false;
    return true;
}

long graded_dimension(const LinearSubspaceModel& s, const Window& w, FieldTag field,
                      const std::optional<MonomialCone>& selector) {
    std::vector<ExponentVector> points;
    w.for_each_point([&](const ExponentVector& e) {
        if (!s.cone.contains(e)) return;
        if (selector && !selector->contains(e)) return;
        points.push_back(e);
    });
    if (s.coefficient_constraints.empty()) return static_cast<long>(points.size());
    Matrix m(static_cast<int>(s.coefficient_constraints.size()), static_cast<int>(points.size()),
             field);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = s.coefficient_constraints[static_cast<std::size_t>(i)].weight(
                points[static_cast<std::size_t>(j)]);
    return static_cast<long>(points.size()) - exact_rank(m);
}

const LinearSubspaceModel& SubspaceFamily::space(std::uint32_t mask) const {
    auto it = spaces.find(mask);
    if (it == spaces.end())
        throw UsageError("family has no space for simplex mask " + std::to_string(mask));
    return it->second;
}

const LinearSubspaceModel& SubspaceFamily::space(const Simplex& s) const { return space(s.mask()); }

bool SubspaceFamily::pure_cones() const {
    if (!global_sections.coefficient_constraints.empty()) return false;
    for (const auto& [mask, model] : spaces)
        if (!model.coefficient_constraints.empty()) return false;
    return true;
}

void SubspaceFamily::validate_total() const {
    const std::uint32_t all = (1u << (n + 1)) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask)
        if (!spaces.count(mask))
            throw UsageError("family is missing the space for simplex " +
                             Simplex::from_mask(mask).str());
}

std::string FamilyViolation::describe(int) const {
    return "at " + exponent_str(exponent) + ": " + Simplex::from_mask(mask1).str() +
           (mask2 ? " vs " + Simplex::from_mask(mask2).str() : "");
}

namespace {

// Membership bits of one window point across all simplices, plus the
// global-sections bit at position 0 of the returned pair.
std::pair<bool, std::uint64_t> membership_bits(const SubspaceFamily& fam, const ExponentVector& e) {
    const std::uint32_t all = (1u << (fam.n + 1)) - 1;
    std::uint64_t bits = 0;
    for (std::uint32_t mask = 1; mask <= all; ++mask)
        if (fam.space(mask).contains_monomial(e)) bits |= (1ull << mask);
    return {fam.global_sections.contains_monomial(e), bits};
}

}  // namespace

FamilyCheckReport family_check_monotone(const SubspaceFamily& fam, const Window& w) {
    fam.validate_total();
    FamilyCheckReport report;
    const std::uint32_t all = (1u << (fam.n + 1)) - 1;

    std::vector<std::pair<std::uint32_t, std::uint32_t>> contained_pairs;
    for (std::uint32_t m1 = 1; m1 <= all; ++m1)
        for (std::uint32_t m2 = 1; m2 <= all; ++m2)
            if (m1 != m2 && (m1 & m2) == m1) contained_pairs.emplace_back(m1, m2);

    w.for_each_point([&](const ExponentVector& e) {
        ++report.points_checked;
        auto [h0, bits] = membership_bits(fam, e);
        for (auto [m1, m2] : contained_pairs) {
            ++report.pairs_checked;
            if ((bits >> m1) & 1 && !((bits >> m2) & 1)) {
                report.passed = false;
                if (report.violations.size() < kMaxReportedViolations)
                    report.violations.push_back({e, m1, m2});
            }
        }
        if (h0) {
            for (std::uint32_t mask = 1; mask <= all; ++mask) {
                if (!((bits >> mask) & 1)) {
                    report.passed = false;
                    if (report.violations.size() < kMaxReportedViolations)
                        report.violations.push_back({e, mask, 0});
                }
            }
        }
    });
    return report;
}

FamilyCheckReport family_check_intersections(const SubspaceFamily& fam, const Window& w) {
    fam.validate_total();
    FamilyCheckReport report;
    const std::uint32_t all = (1u << (fam.n + 1)) - 1;

    w.for_each_point([&](const ExponentVector& e) {
        ++report.points_checked;
        auto [h0, bits] = membership_bits(fam, e);
        for (std::uint32_t m1 = 1; m1 <= all; ++m1) {
            for (std::uint32_t m2 = m1 + 1; m2 <= all; ++m2) {
                ++report.pairs_checked;
                const bool joint = ((bits >> m1) & 1) && ((bits >> m2) & 1);
                const std::uint32_t meet = m1 & m2;
                const bool small = meet == 0 ? h0 : ((bits >> meet) & 1);
                if (joint != small) {
                    report.passed = false;
                    if (report.violations.size() < kMaxReportedViolations)
                        report.violations.push_back({e, m1, m2});
                }
            }
        }
    });
    return report;
}

}  // namespace flagcoh
