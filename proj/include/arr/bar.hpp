#pragma once

#include "arr/aomoto.hpp"
#include "arr/laurent.hpp"
#include "arr/orlik_solomon.hpp"
#include "arr/window.hpp"

#include <map>
#include <vector>

namespace arr {

/// A connected commutative dga presented by a finite basis of its positive
/// degrees; degree zero is spanned by the unit alone.  Optionally every
/// basis letter carries a character exponent e with coaction
/// nu(r) = r (x) q^e, which is the diagonal coaction datum used by the
/// Hopf operations.
struct ConnectedDGA {
    int nq = 0;          // rank of the character lattice
    bool labeled = false;
    std::vector<int> degree;              // per letter, all >= 1
    std::vector<std::vector<int>> label;  // coaction exponents, empty unless labeled
    std::vector<std::map<int, Scalar>> diff;              // d(letter)
    std::map<std::pair<int, int>, std::map<int, Scalar>> prod;  // letter * letter

    int letters() const { return static_cast<int>(degree.size()); }
    std::map<int, Scalar> multiply(const std::map<int, Scalar>& x,
                                   const std::map<int, Scalar>& y) const;
    std::map<int, Scalar> d(const std::map<int, Scalar>& x) const;

    /// d^2 = 0 and Leibniz on basis pairs; throws on violation.
    void check_axioms() const;

    /// The untwisted Orlik-Solomon algebra as a dga with zero differential.
    /// Carries no coaction labels.
    static ConnectedDGA from_os_untwisted(const OSAlgebra& alg);

    /// Window of the cohomology of the Laurent-graded algebra with trivial
    /// differential; letters are cohomology class representatives in degrees
    /// 1 and 2, labeled by their component.  Products falling outside the
    /// window are truncated to zero.  Requires H^0 to vanish at every
    /// nonzero component (else the algebra is not connected).
    static ConnectedDGA cohomology_window(const OSAlgebra& alg, const WeightMatrix& a,
                                          const WindowBox& window);
};

/// Basis tensor [r_1|...|r_s] q^m of the reduced bar construction.
struct BarTerm {
    std::vector<int> letters;
    std::vector<int> q;  // exponent m, length nq

    auto operator<=>(const BarTerm&) const = default;
};

struct BarElement {
    std::map<BarTerm, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const BarTerm& t, const Scalar& c);
    BarElement operator+(const BarElement& o) const;
    BarElement operator-(const BarElement& o) const;
    BarElement operator*(const Scalar& c) const;
    bool operator==(const BarElement& o) const { return terms == o.terms; }

    static BarElement single(BarTerm t);
    /// Bar degree sum(deg r_i) - s of a homogeneous element; throws if mixed.
    int bar_degree(const ConnectedDGA& dga) const;
    int max_length() const;
};

/// Rank-k tensors of bar terms, used by the coproduct.
struct BarTensor {
    std::map<std::vector<BarTerm>, Scalar> terms;

    void add(const std::vector<BarTerm>& t, const Scalar& c);
    bool operator==(const BarTensor& o) const { return terms == o.terms; }
};

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BarElement bar_d(const ConnectedDGA& dga, const BarElement& x);

/// Shuffle product with Koszul signs for the shifted letters.  Throws
/// TruncationError when a resulting tensor would exceed s_max.
BarElement bar_shuffle(const ConnectedDGA& dga, const BarElement& x, const BarElement& y,
                       int s_max);

/// Diagonal-coaction coproduct.  Requires labels.
BarTensor bar_coproduct(const ConnectedDGA& dga, const BarElement& x);

/// Coproduct applied to one factor of a tensor (for coassociativity checks).
BarTensor bar_coproduct_at(const ConnectedDGA& dga, const BarTensor& t, int position);

/// Antipode: reversal with sign (-1)^s and inverted coefficients.
BarElement bar_antipode(const ConnectedDGA& dga, const BarElement& x);

/// Eilenberg-Moore page dimensions for a dga with zero differential.
/// Keys are (s, t) with s the bar length (column -s).
struct EMPages {
    std::map<std::pair<int, int>, int> e1;
    std::map<std::pair<int, int>, int> e2;
};

EMPages em_pages(const ConnectedDGA& h, int s_max);

}  // namespace arr
