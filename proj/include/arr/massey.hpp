#pragma once

#include "arr/laurent.hpp"

namespace arr {

/// Result of a Massey triple product computation in H(A_a).
/// The coset convention follows the product of the whole degree-one
/// cohomology: the product is nonzero when the representative does not lie
/// in span(H^1 . H^1) + coboundaries at the target component.
struct MasseyResult {
    bool defined = false;
    LaurentElement representative;  // degree 2, single component k1+k2+k3
    std::vector<LaurentElement> indeterminacy_basis;
    bool nonzero_mod_indeterminacy = false;
    LaurentElement r12, r23;  // solved primitives, certificate
};

/// Massey triple product of closed degree-one single-component classes
/// x1 q^k1, x2 q^k2, x3 q^k3.  The window must contain k1+k2, k2+k3 and
/// the target k1+k2+k3, and bounds the pair-component enumeration for the
/// indeterminacy span.
MasseyResult massey_triple(const OSAlgebra& alg, const WeightMatrix& a, const LaurentElement& x1,
                           const LaurentElement& x2, const LaurentElement& x3,
                           const WindowBox& window);

}  // namespace arr
