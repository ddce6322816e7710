#include "arr/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace arr {

namespace {

// Gauss-Jordan elimination over the scalar field.  Pivots are chosen by
// least total degree, then lowest column index, then lowest row index.
// `rhs_cols` trailing columns are carried along but never pivoted on.
// Returns (col, row) pivot pairs in elimination order.
std::vector<std::pair<int, int>> eliminate(Mat& m, int rhs_cols) {
    std::vector<std::pair<int, int>> piv;
    if (m.empty()) return piv;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size()) - rhs_cols;
    std::vector<bool> row_done(rows, false);

    while (true) {
        int best_r = -1, best_c = -1, best_deg = 0;
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) {
                if (row_done[r] || m[r][c].is_zero()) continue;
                int deg = m[r][c].total_degree();
                if (best_r < 0 || deg < best_deg) {
                    best_r = r;
                    best_c = c;
                    best_deg = deg;
                }
            }
        if (best_r < 0) break;
        row_done[best_r] = true;
        piv.push_back({best_c, best_r});

        Scalar inv = m[best_r][best_c].inverse();
        for (auto& x : m[best_r]) x = x * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == best_r || m[r][best_c].is_zero()) continue;
            Scalar f = m[r][best_c];
            for (size_t c = 0; c < m[r].size(); ++c) m[r][c] = m[r][c] - f * m[best_r][c];
        }
    }
    return piv;
}

}  // namespace

std::vector<int> rref(Mat& m) {
    auto piv = eliminate(m, 0);
    std::sort(piv.begin(), piv.end());

    Mat sorted;
    sorted.reserve(m.size());
    std::vector<bool> used(m.size(), false);
    for (auto& [col, row] : piv) {
        sorted.push_back(std::move(m[row]));
        used[row] = true;
    }
    for (size_t r = 0; r < m.size(); ++r)
        if (!used[r]) sorted.push_back(std::move(m[r]));
    m = std::move(sorted);

    std::vector<int> cols;
    cols.reserve(piv.size());
    for (auto& [col, row] : piv) cols.push_back(col);
    return cols;
}

int rank(Mat m) {
    return static_cast<int>(eliminate(m, 0).size());
}

std::vector<Vec> kernel_basis(Mat m, int ncols) {
    std::vector<int> pivots;
    if (!m.empty()) {
        if (static_cast<int>(m[0].size()) != ncols)
            throw std::invalid_argument("kernel_basis: shape mismatch");
        pivots = rref(m);
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(ncols, Scalar(0));
        v[free] = Scalar(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(Mat m, Vec b) {
    const int rows = static_cast<int>(m.size());
    if (rows != static_cast<int>(b.size())) throw std::invalid_argument("solve: shape mismatch");
    if (rows == 0) return Vec();
    const int cols = static_cast<int>(m[0].size());
    for (int r = 0; r < rows; ++r) m[r].push_back(b[r]);

    auto piv = eliminate(m, 1);
    std::vector<bool> row_has_pivot(rows, false);
    for (auto& [col, row] : piv) row_has_pivot[row] = true;
    for (int r = 0; r < rows; ++r)
        if (!row_has_pivot[r] && !m[r][cols].is_zero()) return std::nullopt;

    // free variables zero: each pivot row contributes rhs to its pivot column
    Vec x(cols, Scalar(0));
    for (auto& [col, row] : piv) x[col] = m[row][cols];
    return x;
}

Vec apply(const Mat& m, const Vec& x) {
    Vec out(m.size(), Scalar(0));
    for (size_t r = 0; r < m.size(); ++r) {
        if (m[r].size() != x.size()) throw std::invalid_argument("apply: shape mismatch");
        for (size_t c = 0; c < x.size(); ++c) out[r] += m[r][c] * x[c];
    }
    return out;
}

bool in_span(const std::vector<Vec>& gens, const Vec& v) {
    if (gens.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    Mat m(v.size(), Vec(gens.size(), Scalar(0)));
    for (size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].size() != v.size()) throw std::invalid_argument("in_span: shape mismatch");
        for (size_t i = 0; i < v.size(); ++i) m[i][g] = gens[g][i];
    }
    return solve(std::move(m), v).has_value();
}

std::vector<Vec> row_space_basis(Mat m) {
    size_t pivot_count = rref(m).size();
    m.resize(pivot_count);
    return m;
}

std::vector<Vec> complement_representatives(const std::vector<Vec>& sub,
                                            const std::vector<Vec>& whole) {
    Mat acc = sub;
    int r = rank(acc);
    std::vector<Vec> reps;
    for (const auto& w : whole) {
        acc.push_back(w);
        int r2 = rank(acc);
        if (r2 > r) {
            reps.push_back(w);
            r = r2;
        } else {
            acc.pop_back();
        }
    }
    return reps;
}

}  // namespace arr
