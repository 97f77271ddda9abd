#include "flagcoh/cohomology.hpp"

#include <sstream>
#include <unordered_map>

#include "flagcoh/linalg.hpp"

namespace flagcoh {

bool MembershipProfile::full(int n_) const {
    const std::uint32_t all = (1u << (n_ + 1)) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask)
        if (!member(mask)) return false;
    return true;
}

MembershipProfile membership_profile(const ExponentVector& e, const SubspaceFamily& fam) {
    fam.validate_total();
    MembershipProfile p;
    p.exponent = e;
    p.n = fam.n;
    const std::uint32_t all = (1u << (fam.n + 1)) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask)
        if (fam.space(mask).contains_monomial(e)) p.member_bits |= (1ull << mask);
    for (std::uint32_t m1 = 1; m1 <= all; ++m1) {
        if (!p.member(m1)) continue;
        for (std::uint32_t m2 = m1; m2 <= all; ++m2) {
            if ((m1 & m2) == m1 && !p.member(m2))
                throw PresetError("family is not upward-closed at " + exponent_str(e) + ": " +
                                  Simplex::from_mask(m1).str() + " is a member but " +
                                  Simplex::from_mask(m2).str() + " is not");
        }
    }
    return p;
}

int face_sign(int i) { return (i % 2 == 0) ? 1 : -1; }

Matrix profile_differential(const MembershipProfile& p, int n, int k, FieldTag field,
                            const std::function<int(int)>& sign) {
    if (k < 1 || k > n) throw UsageError("differential degree out of range");
    std::vector<Simplex> sources, targets;
    for (const Simplex& s : enumerate_simplices(n, k - 1))
        if (p.member(s.mask())) sources.push_back(s);
    for (const Simplex& s : enumerate_simplices(n, k))
        if (p.member(s.mask())) targets.push_back(s);

    Matrix m(static_cast<int>(targets.size()), static_cast<int>(sources.size()), field);
    for (int row = 0; row < m.rows(); ++row) {
        const Simplex& tgt = targets[static_cast<std::size_t>(row)];
        for (int i = 0; i <= tgt.dim(); ++i) {
            const Simplex f = face(tgt, i);
            if (!p.member(f.mask())) continue;
            for (int col = 0; col < m.cols(); ++col) {
                if (sources[static_cast<std::size_t>(col)] == f) {
                    m.at(row, col) =
                        m.at(row, col) + FieldScalar::from_integer(sign(i), field);
                    break;
                }
            }
        }
    }
    return m;
}

std::vector<long> exponent_cohomology(const MembershipProfile& p, int n, FieldTag field) {
    std::vector<long> dims(static_cast<std::size_t>(n) + 1, 0);
    if (p.empty()) return dims;
    if (p.full(n)) {
        // The full simplex cochain complex is the complex of a point: only h^0.
        dims[0] = 1;
        return dims;
    }
    std::vector<long> cdim(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k)
        for (const Simplex& s : enumerate_simplices(n, k))
            if (p.member(s.mask())) ++cdim[static_cast<std::size_t>(k)];
    std::vector<int> ranks(static_cast<std::size_t>(n) + 2, 0);  // ranks[k] = rank d^k
    for (int k = 1; k <= n; ++k)
        ranks[static_cast<std::size_t>(k)] = exact_rank(profile_differential(p, n, k, field));
    for (int k = 0; k <= n; ++k)
        dims[static_cast<std::size_t>(k)] = cdim[static_cast<std::size_t>(k)] -
                                            ranks[static_cast<std::size_t>(k)] -
                                            ranks[static_cast<std::size_t>(k) + 1];
    return dims;
}

std::string CohomologyReport::human_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dims.size(); ++i)
        os << "h^" << i << " = " << dims[i] << '\n';
    if (boundary_contact)
        os << "warning: nonzero contribution on the window boundary; widen the window\n";
    return os.str();
}

CohomologyReport total_cohomology(const SubspaceFamily& fam, const Window& w,
                                  bool keep_per_exponent) {
    if (w.dim() != fam.n) throw UsageError("window dimension does not match the family");
    if (!fam.pure_cones())
        throw UsageError(
            "total cohomology needs a pure monomial family; coefficient-constrained models are "
            "not multidegree-diagonal");
    CohomologyReport report;
    report.window = w;
    report.dims.assign(static_cast<std::size_t>(fam.n) + 1, 0);

    // Contributions depend only on the membership bits; cache per distinct profile.
    std::unordered_map<std::uint64_t, std::vector<long>> cache;
    w.for_each_point([&](const ExponentVector& e) {
        MembershipProfile p = membership_profile(e, fam);
        auto it = cache.find(p.member_bits);
        if (it == cache.end())
            it = cache.emplace(p.member_bits, exponent_cohomology(p, fam.n, fam.field)).first;
        const std::vector<long>& contrib = it->second;
        bool nonzero = false;
        for (std::size_t k = 0; k < contrib.size(); ++k) {
            report.dims[k] += contrib[k];
            if (contrib[k] != 0) nonzero = true;
        }
        if (nonzero) {
            if (w.on_boundary(e)) report.boundary_contact = true;
            if (keep_per_exponent) report.per_exponent.emplace(e, contrib);
        }
    });
    return report;
}

bool d_squared_zero_with_signs(const SubspaceFamily& fam, const Window& w,
                               const std::function<int(int)>& sign) {
    if (w.dim() != fam.n) throw UsageError("window dimension does not match the family");
    const FieldTag field = fam.field;
    bool ok = true;
    std::unordered_map<std::uint64_t, bool> cache;
    w.for_each_point([&](const ExponentVector& e) {
        if (!ok) return;
        MembershipProfile p = membership_profile(e, fam);
        auto it = cache.find(p.member_bits);
        if (it == cache.end()) {
            bool zero = true;
            for (int k = 1; k < fam.n && zero; ++k) {
                Matrix lo = profile_differential(p, fam.n, k, field, sign);
                Matrix hi = profile_differential(p, fam.n, k + 1, field, sign);
                for (int i = 0; i < hi.rows() && zero; ++i) {
                    for (int j = 0; j < lo.cols() && zero; ++j) {
                        FieldScalar s = FieldScalar::zero(field);
                        for (int m = 0; m < hi.cols(); ++m) s = s + hi.at(i, m) * lo.at(m, j);
                        if (!s.is_zero()) zero = false;
                    }
                }
            }
            it = cache.emplace(p.member_bits, zero).first;
        }
        if (!it->second) ok = false;
    });
    return ok;
}

bool d_squared_zero(const SubspaceFamily& fam, const Window& w) {
    return d_squared_zero_with_signs(fam, w, face_sign);
}

}  // namespace flagcoh
