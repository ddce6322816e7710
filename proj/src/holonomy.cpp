#include "arr/holonomy.hpp"

#include <algorithm>
#include <map>
#include <array>
#include <stdexcept>

namespace arr {

int HolonomyPresentation::pair_index(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("bad pair");
    // pairs (1,2),(1,3),...,(1,n),(2,3),...
    int idx = 0;
    for (int a = 1; a < i; ++a) idx += n - a;
    return idx + (j - i - 1);
}

HolonomyPresentation holonomy_presentation(const OSAlgebra& alg) {
    const int n = alg.n();
    const int pairs = n * (n - 1) / 2;
    const auto& basis2 = alg.basis(2);

    // cup matrix: rows = degree-2 NBC basis, columns = wedge pairs
    Mat cup(basis2.size(), Vec(pairs, Scalar(0)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            OSElement prod = alg.reduce_word({i, j});
            if (prod.is_zero()) continue;
            Vec col = alg.coords(prod, 2);
            int c = HolonomyPresentation::pair_index(n, i, j);
            for (size_t r = 0; r < basis2.size(); ++r) cup[r][c] = col[r];
        }

    HolonomyPresentation p;
    p.n = n;
    // the relation space is the image of the cup-product dual, i.e. the
    // annihilator of ker(cup) = the row space of the cup matrix
    p.relations = row_space_basis(cup);
    return p;
}

namespace {

// Lyndon words of length 3 over 1..n in lex order, with standard
// bracketing [x,[y,z]] for xyz (y<z suffix Lyndon) and [[x,z],y] otherwise.
std::vector<std::array<int, 3>> lyndon3(int n) {
    std::vector<std::array<int, 3>> words;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) {
                std::array<int, 3> w = {a, b, c};
                // Lyndon: strictly smaller than both proper rotations
                std::array<int, 3> r1 = {b, c, a}, r2 = {c, a, b};
                if (w < r1 && w < r2) words.push_back(w);
            }
    return words;
}

}  // namespace

std::vector<int> lcs_dims(const HolonomyPresentation& p, int max_degree) {
    if (max_degree < 1 || max_degree > 3)
        throw std::invalid_argument("lcs_dims supports degrees 1..3");
    const int n = p.n;
    std::vector<int> dims;
    dims.push_back(n);
    if (max_degree == 1) return dims;

    const int pairs = n * (n - 1) / 2;
    int rel_dim = static_cast<int>(p.relations.size());
    dims.push_back(pairs - rel_dim);
    if (max_degree == 2) return dims;

    // degree 3 of the free Lie algebra in the Lyndon basis
    auto words = lyndon3(n);
    std::map<std::array<int, 3>, int> index;
    for (size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);

    // [[i,j],k] (i<j) expanded over the Lyndon basis
    auto left_normed = [&](int i, int j, int k) {
        std::vector<std::pair<int, Scalar>> out;
        if (k == i) {
            out.push_back({index.at({i, i, j}), Scalar(-1)});  // -[i,[i,j]]
        } else if (k == j) {
            out.push_back({index.at({i, j, j}), Scalar(1)});  // [[i,j],j]
        } else if (k < i) {
            out.push_back({index.at({k, i, j}), Scalar(-1)});  // -[k,[i,j]]
        } else if (k < j) {
            out.push_back({index.at({i, j, k}), Scalar(1)});  // word izy form
        } else {
            // i < j < k: [[i,j],k] = [i,[j,k]] + [[i,k],j]
            out.push_back({index.at({i, j, k}), Scalar(1)});
            out.push_back({index.at({i, k, j}), Scalar(1)});
        }
        return out;
    };

    // ideal component: brackets of relations with generators
    std::vector<Vec> ideal;
    for (const auto& rel : p.relations)
        for (int k = 1; k <= n; ++k) {
            Vec v(words.size(), Scalar(0));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const Scalar& c = rel[HolonomyPresentation::pair_index(n, i, j)];
                    if (c.is_zero()) continue;
                    for (const auto& [idx, s] : left_normed(i, j, k)) v[idx] += c * s;
                }
            ideal.push_back(std::move(v));
        }
    dims.push_back(static_cast<int>(words.size()) - rank(ideal));
    return dims;
}

std::vector<int> lcs_dims_tensor_oracle(const HolonomyPresentation& p, int max_degree) {
    if (max_degree < 1 || max_degree > 3)
        throw std::invalid_argument("lcs_dims supports degrees 1..3");
    const int n = p.n;
    std::vector<int> dims;
    dims.push_back(n);
    if (max_degree == 1) return dims;

    // degree-2 tensors: [i,j] -> e_i x e_j - e_j x e_i
    auto wedge2 = [&](int i, int j) {
        Vec v(n * n, Scalar(0));
        v[(i - 1) * n + (j - 1)] = Scalar(1);
        v[(j - 1) * n + (i - 1)] = Scalar(-1);
        return v;
    };
    auto rel_tensor = [&](const Vec& rel) {
        Vec v(n * n, Scalar(0));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const Scalar& c = rel[HolonomyPresentation::pair_index(n, i, j)];
                if (c.is_zero()) continue;
                Vec w = wedge2(i, j);
                for (int t = 0; t < n * n; ++t) v[t] += c * w[t];
            }
        return v;
    };

    std::vector<Vec> rel2;
    for (const auto& r : p.relations) rel2.push_back(rel_tensor(r));
    dims.push_back(n * (n - 1) / 2 - rank(rel2));
    if (max_degree == 2) return dims;

    // [t, e_k] = t x e_k - e_k x t for a degree-2 tensor t
    auto bracket_with_gen = [&](const Vec& t, int k) {
        Vec v(n * n * n, Scalar(0));
        for (int x = 0; x < n * n; ++x) {
            if (t[x].is_zero()) continue;
            v[x * n + (k - 1)] += t[x];
            v[(k - 1) * n * n + x] -= t[x];
        }
        return v;
    };

    std::vector<Vec> lie3;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) lie3.push_back(bracket_with_gen(wedge2(i, j), k));
    int dim_l3 = rank(lie3);

    std::vector<Vec> ideal3;
    for (const auto& r : rel2)
        for (int k = 1; k <= n; ++k) ideal3.push_back(bracket_with_gen(r, k));
    dims.push_back(dim_l3 - rank(ideal3));
    return dims;
}

}  // namespace arr
