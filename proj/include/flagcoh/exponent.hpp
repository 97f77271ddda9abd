#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "flagcoh/errors.hpp"

namespace flagcoh {

/// Exponent vector (i_1, ..., i_n) of a monomial z_1^{i_1} ... z_n^{i_n}.
using ExponentVector = std::vector<int>;

/// Sentinel for an unbounded (exact) precision bound in a variable.
inline constexpr int kUnboundedPrecision = std::numeric_limits<int>::max() / 4;

inline bool precision_unbounded(int p) { return p >= kUnboundedPrecision; }

/// Saturating add used for precision bookkeeping.
inline int precision_add(int p, int shift) {
    if (precision_unbounded(p)) return kUnboundedPrecision;
    long long s = static_cast<long long>(p) + shift;
    if (s >= kUnboundedPrecision) return kUnboundedPrecision;
    return static_cast<int>(s);
}

/// Term order making k((z_1))...((z_n)) a valued field: the outermost Laurent
/// variable z_n is compared first, then z_{n-1}, and so on.  The minimal
/// element under this order is the leading term.
struct KLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        for (int t = static_cast<int>(a.size()) - 1; t >= 0; --t)
            if (a[static_cast<std::size_t>(t)] != b[static_cast<std::size_t>(t)])
                return a[static_cast<std::size_t>(t)] < b[static_cast<std::size_t>(t)];
        return false;
    }
};

ExponentVector exponent_add(const ExponentVector& a, const ExponentVector& b);
ExponentVector exponent_min(const ExponentVector& a, const ExponentVector& b);
std::string exponent_str(const ExponentVector& e);  // "(a,b,c)"

/// Finite per-variable box [lo_t, hi_t] of exponent vectors; every subspace
/// and cohomology claim is certified on such a box.
struct Window {
    std::vector<int> lo;
    std::vector<int> hi;

    Window() = default;
    Window(std::vector<int> l, std::vector<int> h);
    /// Symmetric box [-margin, margin]^n.
    static Window symmetric(int n, int margin);

    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const ExponentVector& e) const;
    bool on_boundary(const ExponentVector& e) const;
    std::uint64_t point_count() const;
    /// Drops the last axis (used when passing to an (n-1)-variable check).
    Window drop_last_axis() const;

    /// Visits every lattice point in KLex-ascending order (z_n slowest).
    void for_each_point(const std::function<void(const ExponentVector&)>& fn) const;

    std::string str() const;  // "[-8,8]x[-8,8]"
    static Window parse(const std::string& text);

    bool operator==(const Window&) const = default;
};

}  // namespace flagcoh
