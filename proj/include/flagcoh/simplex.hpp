#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "flagcoh/errors.hpp"

namespace flagcoh {

/// Nonempty strictly increasing vertex tuple (eta_0, ..., eta_k) in {0,...,n}.
struct Simplex {
    std::vector<int> vertices;

    explicit Simplex(std::vector<int> v);
    static Simplex from_mask(std::uint32_t mask);

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    std::uint32_t mask() const;
    bool contains_vertex(int v) const;
    std::string str() const;  // "(0,1,2)"

    auto operator<=>(const Simplex&) const = default;
};

/// All binom(n+1, k+1) k-simplices on the vertex set {0,...,n}, in
/// lexicographic order of their vertex tuples.
std::vector<Simplex> enumerate_simplices(int n, int k);

/// Removes the i-th vertex (the i-th face map).
Simplex face(const Simplex& s, int i);

}  // namespace flagcoh
