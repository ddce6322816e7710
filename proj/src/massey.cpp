#include "arr/massey.hpp"

#include <stdexcept>

namespace arr {

namespace {

// single-component degree-one input check; returns the component
std::vector<int> input_component(const WeightMatrix& a, const LaurentElement& x,
                                 const char* which) {
    if (x.is_zero()) return std::vector<int>(a.N(), 0);
    if (x.comps.size() != 1)
        throw std::invalid_argument(std::string(which) + ": expected a single component");
    const auto& [k, comp] = *x.comps.begin();
    if (!comp.is_homogeneous(1))
        throw std::invalid_argument(std::string(which) + ": expected a degree-one element");
    return k;
}

std::vector<int> vec_add(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

OSElement component_of(const LaurentElement& x, const std::vector<int>& k) {
    auto it = x.comps.find(k);
    return it == x.comps.end() ? OSElement() : it->second;
}

}  // namespace

MasseyResult massey_triple(const OSAlgebra& alg, const WeightMatrix& a, const LaurentElement& x1,
                           const LaurentElement& x2, const LaurentElement& x3,
                           const WindowBox& window) {
    a.validate(alg.n());
    if (window.dim() != a.N()) throw std::invalid_argument("window dimension mismatch");

    std::vector<int> k1 = input_component(a, x1, "x1");
    std::vector<int> k2 = input_component(a, x2, "x2");
    std::vector<int> k3 = input_component(a, x3, "x3");
    for (const auto* x : {&x1, &x2, &x3})
        if (!laurent_d(alg, a, *x).is_zero())
            throw std::invalid_argument("massey_triple: inputs must be closed");

    std::vector<int> k12 = vec_add(k1, k2), k23 = vec_add(k2, k3);
    std::vector<int> target = vec_add(k12, k3);
    if (!window.contains(k12) || !window.contains(k23) || !window.contains(target))
        throw std::invalid_argument(
            "massey_triple: window too small for the intermediate and target components");

    MasseyResult res;

    // solve d r = p at a component; the solver's free variables are zero,
    // which is the minimal-support choice under the NBC column order
    auto solve_primitive = [&](const std::vector<int>& k, const OSElement& p,
                               LaurentElement& out) -> bool {
        if (p.is_zero()) {
            out = LaurentElement();
            return true;
        }
        Mat d1 = aomoto_differential(alg, a.row_action(k), 1);
        auto sol = solve(d1, alg.coords(p, 2));
        if (!sol) return false;
        out = LaurentElement::component(k, alg.from_coords(*sol, 1));
        return true;
    };

    OSElement p12 = alg.multiply(component_of(x1, k1), component_of(x2, k2));
    OSElement p23 = alg.multiply(component_of(x2, k2), component_of(x3, k3));
    if (!solve_primitive(k12, p12, res.r12) || !solve_primitive(k23, p23, res.r23)) {
        res.defined = false;  // a cup product is nonzero in cohomology
        return res;
    }
    res.defined = true;

    // representative r12 ^ x3 + x1 ^ r23 at the target component
    OSElement rep = alg.multiply(component_of(res.r12, k12), component_of(x3, k3)) +
                    alg.multiply(component_of(x1, k1), component_of(res.r23, k23));
    res.representative = LaurentElement::component(target, rep);
    if (!laurent_d(alg, a, res.representative).is_zero())
        throw std::logic_error("massey representative is not closed");

    // coboundaries at the target component
    std::vector<Vec> span;
    {
        Mat d1 = aomoto_differential(alg, a.row_action(target), 1);
        const size_t dim2 = alg.basis(2).size();
        if (!d1.empty())
            for (size_t c = 0; c < d1[0].size(); ++c) {
                Vec v(dim2, Scalar(0));
                for (size_t r = 0; r < dim2; ++r) v[r] = d1[r][c];
                span.push_back(std::move(v));
            }
    }
    int base_rank = rank(span);

    // products of degree-one classes over all component pairs summing to the
    // target inside the window
    std::map<std::vector<int>, std::vector<OSElement>> h1_cache;
    auto h1_basis = [&](const std::vector<int>& k) -> const std::vector<OSElement>& {
        auto it = h1_cache.find(k);
        if (it == h1_cache.end())
            it = h1_cache.emplace(k, aomoto_cohomology(alg, a.row_action(k)).representatives[1])
                     .first;
        return it->second;
    };

    int cur_rank = base_rank;
    for (const auto& ka : window.points()) {
        std::vector<int> kb(ka.size());
        for (size_t i = 0; i < ka.size(); ++i) kb[i] = target[i] - ka[i];
        if (!window.contains(kb)) continue;
        const auto& ha = h1_basis(ka);
        if (ha.empty()) continue;
        for (const auto& u : ha)
            for (const auto& v : h1_basis(kb)) {
                OSElement prod = alg.multiply(u, v);
                if (prod.is_zero()) continue;
                span.push_back(alg.coords(prod, 2));
                int r2 = rank(span);
                if (r2 > cur_rank) {
                    cur_rank = r2;
                    res.indeterminacy_basis.push_back(LaurentElement::component(target, prod));
                } else {
                    span.pop_back();
                }
            }
    }

    res.nonzero_mod_indeterminacy = !rep.is_zero() && !in_span(span, alg.coords(rep, 2));
    return res;
}

}  // namespace arr
