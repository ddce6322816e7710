#pragma once

#include "arr/orlik_solomon.hpp"

namespace arr {

/// Quadratic presentation of the holonomy Lie algebra: free Lie algebra on
/// n degree-one generators modulo the ideal generated by the image of the
/// cup-product dual.  Relations are stored as coordinate vectors over the
/// wedge basis x_i ^ x_j, (i,j) lexicographic with i < j.
struct HolonomyPresentation {
    int n = 0;
    std::vector<Vec> relations;  // reduced basis of the degree-2 relation space

    static int pair_index(int n, int i, int j);  // 1-based i < j
};

HolonomyPresentation holonomy_presentation(const OSAlgebra& alg);

/// Graded dimensions of L(n)/<relations> in degrees 1..max_degree.
/// Supported through degree 3.
std::vector<int> lcs_dims(const HolonomyPresentation& p, int max_degree);

/// Independent oracle: the same dimensions computed by expanding brackets
/// in the tensor algebra and taking exact ranks.
std::vector<int> lcs_dims_tensor_oracle(const HolonomyPresentation& p, int max_degree);

}  // namespace arr
