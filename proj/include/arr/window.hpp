#pragma once

#include <stdexcept>
#include <vector>

namespace arr {

/// Finite box of exponent vectors k in Z^N.  Always contains 0.
struct WindowBox {
    std::vector<int> lo, hi;

    WindowBox() = default;
    WindowBox(std::vector<int> l, std::vector<int> h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo.size() != hi.size()) throw std::invalid_argument("window bounds length mismatch");
        for (size_t i = 0; i < lo.size(); ++i)
            if (lo[i] > 0 || hi[i] < 0 || lo[i] > hi[i])
                throw std::invalid_argument("window must be nonempty and contain 0");
    }
    static WindowBox radius(int N, int R) {
        return WindowBox(std::vector<int>(N, -R), std::vector<int>(N, R));
    }

    int dim() const { return static_cast<int>(lo.size()); }

    bool contains(const std::vector<int>& k) const {
        if (k.size() != lo.size()) return false;
        for (size_t i = 0; i < k.size(); ++i)
            if (k[i] < lo[i] || k[i] > hi[i]) return false;
        return true;
    }

    /// All lattice points, lexicographically ordered.
    std::vector<std::vector<int>> points() const {
        std::vector<std::vector<int>> out;
        std::vector<int> cur = lo;
        if (lo.empty()) return {std::vector<int>{}};
        while (true) {
            out.push_back(cur);
            int i = dim() - 1;
            while (i >= 0 && cur[i] == hi[i]) {
                cur[i] = lo[i];
                --i;
            }
            if (i < 0) break;
            ++cur[i];
        }
        return out;
    }
};

}  // namespace arr
