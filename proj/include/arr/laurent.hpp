#pragma once

#include "arr/aomoto.hpp"
#include "arr/orlik_solomon.hpp"
#include "arr/window.hpp"

#include <map>
#include <string>

namespace arr {

/// Element of the Laurent-graded algebra: a finitely supported map from
/// exponent vectors k in Z^N to Orlik-Solomon elements.  Component k is
/// written with the q-monomial q1^k1 ... qN^kN following the sign
/// convention of the grading (the component of exponent k is A q^-k, and
/// elements print their k as given).
struct LaurentElement {
    std::map<std::vector<int>, OSElement> comps;

    bool is_zero() const { return comps.empty(); }
    void add(const std::vector<int>& k, const OSElement& x);
    LaurentElement operator+(const LaurentElement& o) const;
    LaurentElement operator-(const LaurentElement& o) const;
    LaurentElement operator*(const Scalar& c) const;
    bool operator==(const LaurentElement& o) const { return comps == o.comps; }

    /// Single-component element x q^k.
    static LaurentElement component(std::vector<int> k, OSElement x);

    std::string str() const;
};

LaurentElement parse_laurent(const std::string& text, int N);

/// Componentwise differential: left multiplication by -(k a) omega^T.
LaurentElement laurent_d(const OSAlgebra& alg, const WeightMatrix& a, const LaurentElement& x);

struct LaurentProduct {
    LaurentElement value;
    bool truncated = false;  // true when components fell outside the window
};

/// Convolution product; components outside the window are dropped and
/// reported through the flag.
LaurentProduct laurent_multiply(const OSAlgebra& alg, const LaurentElement& x,
                                const LaurentElement& y, const WindowBox& window);

/// Per-component cohomology of the window: delegates component k to the
/// Aomoto complex with weights k a.
std::map<std::vector<int>, CohomologyReport> laurent_cohomology(const OSAlgebra& alg,
                                                                const WeightMatrix& a,
                                                                const WindowBox& window);

}  // namespace arr
