#include "flagcoh/simplex.hpp"

#include <sstream>

namespace flagcoh {

Simplex::Simplex(std::vector<int> v) : vertices(std::move(v)) {
    if (vertices.empty()) throw UsageError("a simplex needs at least one vertex");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0) throw UsageError("negative simplex vertex");
        if (i > 0 && vertices[i - 1] >= vertices[i])
            throw UsageError("simplex vertices must be strictly increasing");
    }
}

Simplex Simplex::from_mask(std::uint32_t mask) {
    std::vector<int> v;
    for (int b = 0; b < 32; ++b)
        if (mask & (1u << b)) v.push_back(b);
    return Simplex(std::move(v));
}

std::uint32_t Simplex::mask() const {
    std::uint32_t m = 0;
    for (int v : vertices) m |= (1u << v);
    return m;
}

bool Simplex::contains_vertex(int v) const {
    for (int u : vertices)
        if (u == v) return true;
    return false;
}

std::string Simplex::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << ',';
        os << vertices[i];
    }
    os << ')';
    return os.str();
}

std::vector<Simplex> enumerate_simplices(int n, int k) {
    if (k < 0 || k > n) throw UsageError("simplex degree out of range");
    std::vector<Simplex> out;
    std::vector<int> cur(static_cast<std::size_t>(k) + 1);
    // Odometer over strictly increasing tuples, lexicographic.
    for (int i = 0; i <= k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.emplace_back(cur);
        int i = k;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (k - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j <= k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Simplex face(const Simplex& s, int i) {
    if (s.dim() < 1) throw UsageError("cannot take a face of a 0-simplex");
    if (i < 0 || i > s.dim()) throw UsageError("face index out of range");
    std::vector<int> v = s.vertices;
    v.erase(v.begin() + i);
    return Simplex(std::move(v));
}

}  // namespace flagcoh
