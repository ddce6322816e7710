#include "arr/aomoto.hpp"

#include <stdexcept>

namespace arr {

void WeightMatrix::validate(int arrangement_n) const {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != arrangement_n)
            throw std::invalid_argument("weight matrix row has wrong length");
}

std::vector<Scalar> WeightMatrix::row_action(const std::vector<int>& k) const {
    if (static_cast<int>(k.size()) != N())
        throw std::invalid_argument("exponent vector has wrong length");
    std::vector<Scalar> w(n(), Scalar(0));
    for (int i = 0; i < N(); ++i) {
        if (k[i] == 0) continue;
        Scalar f(k[i]);
        for (int j = 0; j < n(); ++j) w[j] += f * rows[i][j];
    }
    return w;
}

namespace {

OSElement weight_form(const OSAlgebra& alg, const std::vector<Scalar>& w) {
    OSElement e;
    for (int j = 0; j < alg.n(); ++j) e.add_term({j + 1}, w[j]);
    return e;
}

}  // namespace

Mat aomoto_differential(const OSAlgebra& alg, const std::vector<Scalar>& w, int p) {
    if (static_cast<int>(w.size()) != alg.n())
        throw std::invalid_argument("weight row has wrong length");
    if (p < 0 || p >= alg.rank()) return Mat();
    OSElement dform = weight_form(alg, w) * Scalar(-1);
    const auto& src = alg.basis(p);
    const auto& dst = alg.basis(p + 1);
    Mat m(dst.size(), Vec(src.size(), Scalar(0)));
    for (size_t c = 0; c < src.size(); ++c) {
        OSElement b;
        b.add_term(src[c], Scalar(1));
        OSElement img = alg.multiply(dform, b);
        Vec col = alg.coords(img, p + 1);
        for (size_t r = 0; r < dst.size(); ++r) m[r][c] = col[r];
    }
    return m;
}

CohomologyReport aomoto_cohomology(const OSAlgebra& alg, const std::vector<Scalar>& w) {
    const int top = alg.rank();
    std::vector<Mat> d(top + 1);
    for (int p = 0; p < top; ++p) d[p] = aomoto_differential(alg, w, p);

    CohomologyReport rep;
    rep.dims.assign(top + 1, 0);
    rep.coboundary_dims.assign(top + 1, 0);
    rep.representatives.assign(top + 1, {});
    rep.esv_valid = esv_check(alg.arrangement(), w, &alg.projective_dense_flats()).valid;

    std::vector<int> ranks(top + 1, 0);  // rank of d_p
    for (int p = 0; p < top; ++p) ranks[p] = rank(d[p]);

    auto dim_at = [&](int p) { return static_cast<int>(alg.basis(p).size()); };
    for (int p = 0; p <= top; ++p) {
        int ker = p < top ? dim_at(p) - ranks[p] : dim_at(p);
        int im = p > 0 ? ranks[p - 1] : 0;
        rep.dims[p] = ker - im;
        rep.coboundary_dims[p] = im;
    }

    for (int p = 1; p <= 2 && p <= top; ++p) {
        std::vector<Vec> kernel =
            p < top ? kernel_basis(d[p], dim_at(p)) : kernel_basis(Mat(), dim_at(p));
        std::vector<Vec> image;
        if (p > 0 && !d[p - 1].empty()) {
            // columns of d_{p-1} span the coboundaries
            for (size_t c = 0; c < d[p - 1][0].size(); ++c) {
                Vec v(dim_at(p), Scalar(0));
                for (int r = 0; r < dim_at(p); ++r) v[r] = d[p - 1][r][c];
                image.push_back(std::move(v));
            }
        }
        for (const auto& v : complement_representatives(image, kernel))
            rep.representatives[p].push_back(alg.from_coords(v, p));
    }
    return rep;
}

int resonance_dim(const OSAlgebra& alg, const std::vector<Scalar>& w, int degree) {
    if (degree < 0 || degree > alg.rank()) throw std::invalid_argument("degree out of range");
    return aomoto_cohomology(alg, w).dims[degree];
}

namespace {

ProfileEntry profile_entry(const OSAlgebra& alg, const WeightMatrix& a,
                           const std::vector<int>& k) {
    CohomologyReport rep = aomoto_cohomology(alg, a.row_action(k));
    ProfileEntry e;
    e.h1 = rep.dims.size() > 1 ? rep.dims[1] : 0;
    e.h2 = rep.dims.size() > 2 ? rep.dims[2] : 0;
    e.esv_valid = rep.esv_valid;
    return e;
}

}  // namespace

Profile h1_completion_profile_serial(const OSAlgebra& alg, const WeightMatrix& a,
                                     const WindowBox& w) {
    a.validate(alg.n());
    if (w.dim() != a.N()) throw std::invalid_argument("window dimension mismatch");
    Profile out;
    for (const auto& k : w.points()) out[k] = profile_entry(alg, a, k);
    return out;
}

Profile h1_completion_profile(const OSAlgebra& alg, const WeightMatrix& a, const WindowBox& w) {
    a.validate(alg.n());
    if (w.dim() != a.N()) throw std::invalid_argument("window dimension mismatch");
    auto points = w.points();
    std::vector<ProfileEntry> entries(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(points.size()); ++i)
        entries[i] = profile_entry(alg, a, points[i]);
    Profile out;
    for (size_t i = 0; i < points.size(); ++i) out[points[i]] = entries[i];
    return out;
}

}  // namespace arr
