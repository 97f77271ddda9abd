#include "flagcoh/exponent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace flagcoh {

ExponentVector exponent_add(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw UsageError("exponent dimension mismatch");
    ExponentVector r(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) r[t] = a[t] + b[t];
    return r;
}

ExponentVector exponent_min(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw UsageError("exponent dimension mismatch");
    ExponentVector r(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) r[t] = std::min(a[t], b[t]);
    return r;
}

std::string exponent_str(const ExponentVector& e) {
    std::ostringstream os;
    os << '(';
    for (std::size_t t = 0; t < e.size(); ++t) {
        if (t) os << ',';
        os << e[t];
    }
    os << ')';
    return os.str();
}

Window::Window(std::vector<int> l, std::vector<int> h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo.size() != hi.size()) throw UsageError("window bound length mismatch");
    for (std::size_t t = 0; t < lo.size(); ++t)
        if (lo[t] > hi[t]) throw UsageError("empty window interval in variable " + std::to_string(t + 1));
}

Window Window::symmetric(int n, int margin) {
    if (n < 1 || margin < 0) throw UsageError("bad window parameters");
    return Window(std::vector<int>(static_cast<std::size_t>(n), -margin),
                  std::vector<int>(static_cast<std::size_t>(n), margin));
}

bool Window::contains(const ExponentVector& e) const {
    if (e.size() != lo.size()) throw UsageError("window dimension mismatch");
    for (std::size_t t = 0; t < lo.size(); ++t)
        if (e[t] < lo[t] || e[t] > hi[t]) return false;
    return true;
}

bool Window::on_boundary(const ExponentVector& e) const {
    if (!contains(e)) return false;
    for (std::size_t t = 0; t < lo.size(); ++t)
        if (e[t] == lo[t] || e[t] == hi[t]) return true;
    return false;
}

std::uint64_t Window::point_count() const {
    std::uint64_t c = 1;
    for (std::size_t t = 0; t < lo.size(); ++t)
        c *= static_cast<std::uint64_t>(hi[t] - lo[t] + 1);
    return c;
}

Window Window::drop_last_axis() const {
    if (dim() < 2) throw UsageError("cannot drop the last axis of a 1-dimensional window");
    return Window(std::vector<int>(lo.begin(), lo.end() - 1),
                  std::vector<int>(hi.begin(), hi.end() - 1));
}

void Window::for_each_point(const std::function<void(const ExponentVector&)>& fn) const {
    const int n = dim();
    ExponentVector e(lo.begin(), lo.end());
    while (true) {
        fn(e);
        int t = 0;  // z_1 fastest, z_n slowest: KLex-ascending visit order
        while (t < n) {
            if (e[static_cast<std::size_t>(t)] < hi[static_cast<std::size_t>(t)]) {
                ++e[static_cast<std::size_t>(t)];
                break;
            }
            e[static_cast<std::size_t>(t)] = lo[static_cast<std::size_t>(t)];
            ++t;
        }
        if (t == n) return;
    }
}

std::string Window::str() const {
    std::ostringstream os;
    for (int t = 0; t < dim(); ++t) {
        if (t) os << 'x';
        os << '[' << lo[static_cast<std::size_t>(t)] << ',' << hi[static_cast<std::size_t>(t)] << ']';
    }
    return os.str();
}

Window Window::parse(const std::string& text) {
    std::vector<int> lo, hi;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw UsageError("malformed window: '" + text + "'");
        return std::stoi(text.substr(start, i - start));
    };
    while (true) {
        skip_ws();
        if (i >= text.size() || text[i] != '[') throw UsageError("malformed window: '" + text + "'");
        ++i;
        int a = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != ',') throw UsageError("malformed window: '" + text + "'");
        ++i;
        int b = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != ']') throw UsageError("malformed window: '" + text + "'");
        ++i;
        lo.push_back(a);
        hi.push_back(b);
        skip_ws();
        if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
            ++i;
            continue;
        }
        break;
    }
    skip_ws();
    if (i != text.size()) throw UsageError("trailing characters in window: '" + text + "'");
    return Window(std::move(lo), std::move(hi));
}

}  // namespace flagcoh
