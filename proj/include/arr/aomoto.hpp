#pragma once

#include "arr/orlik_solomon.hpp"
#include "arr/window.hpp"

#include <map>

namespace arr {

/// The N x n matrix of exponents defining the character family and all the
/// twisted differentials.  Entries are exact scalars and may involve r.
struct WeightMatrix {
    std::vector<std::vector<Scalar>> rows;

    int N() const { return static_cast<int>(rows.size()); }
    int n() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    void validate(int arrangement_n) const;

    /// The weight row k a for an exponent vector k.
    std::vector<Scalar> row_action(const std::vector<int>& k) const;
};

struct CohomologyReport {
    std::vector<int> dims;             // dim H^p, p = 0..rank
    std::vector<int> coboundary_dims;  // dim im d_{p-1}
    // cocycle representatives, filled for degrees 1 and 2
    std::vector<std::vector<OSElement>> representatives;
    bool esv_valid = false;
};

/// Differential of (A, -w omega^T) from degree p, as a matrix in the NBC
/// bases (rows indexed by degree p+1, columns by degree p).
Mat aomoto_differential(const OSAlgebra& alg, const std::vector<Scalar>& w, int p);

CohomologyReport aomoto_cohomology(const OSAlgebra& alg, const std::vector<Scalar>& w);

int resonance_dim(const OSAlgebra& alg, const std::vector<Scalar>& w, int degree);

struct ProfileEntry {
    int h1 = 0;
    int h2 = 0;
    bool esv_valid = false;

    bool operator==(const ProfileEntry&) const = default;
};

using Profile = std::map<std::vector<int>, ProfileEntry>;

/// Twisted H^1/H^2 dimensions of (A, -k a omega^T) for every k in the
/// window.  The parallel version runs the independent per-k computations
/// under OpenMP; the serial version is the reference implementation.
Profile h1_completion_profile(const OSAlgebra& alg, const WeightMatrix& a, const WindowBox& w);
Profile h1_completion_profile_serial(const OSAlgebra& alg, const WeightMatrix& a,
                                     const WindowBox& w);

}  // namespace arr
