#pragma once

#include "arr/arrangement.hpp"
#include "arr/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace arr {

/// Strictly increasing tuple of hyperplane indices in 1..n.
using OSMonomial = std::vector<int>;

/// Sparse element of the Orlik-Solomon algebra.  Algebra operations keep
/// every stored monomial an NBC basis monomial with nonzero coefficient.
struct OSElement {
    std::map<OSMonomial, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    // largest tuple length present, -1 when zero
    int top_degree() const;
    bool is_homogeneous(int deg) const;

    OSElement operator+(const OSElement& o) const;
    OSElement operator-(const OSElement& o) const;
    OSElement operator*(const Scalar& c) const;
    OSElement operator-() const { return *this * Scalar(-1); }
    bool operator==(const OSElement& o) const { return terms == o.terms; }

    void add_term(const OSMonomial& m, const Scalar& c);
    std::string str() const;

    static OSElement unit();
    static OSElement generator(int j);  // w_j
};

OSElement parse_os_element(const std::string& text);

/// The affine Orlik-Solomon algebra of an arrangement with its NBC monomial
/// basis.  Immutable after construction; reduction tables are precomputed
/// for every monomial up to the arrangement rank, so all queries are
/// const and safe to share across threads.
class OSAlgebra {
  public:
    explicit OSAlgebra(Arrangement arrangement);

    const Arrangement& arrangement() const { return arr_; }
    const FlatLattice& lattice() const { return affine_lattice_; }
    const std::vector<Flat>& projective_dense_flats() const { return dense_; }

    int rank() const { return rank_; }
    int n() const { return arr_.size(); }
    std::vector<int> dims() const;                       // degree 0..rank
    const std::vector<OSMonomial>& basis(int deg) const;

    /// NBC normal form of w_{word[0]} ^ ... ^ w_{word[k-1]}.
    OSElement reduce_word(const std::vector<int>& word, int sign = 1) const;

    OSElement multiply(const OSElement& x, const OSElement& y) const;

    /// Coordinates of a homogeneous element in the degree-d NBC basis.
    Vec coords(const OSElement& x, int deg) const;
    OSElement from_coords(const Vec& v, int deg) const;

  private:
    Arrangement arr_;
    FlatLattice affine_lattice_;
    std::vector<Flat> dense_;
    int rank_ = 0;
    std::vector<std::vector<OSMonomial>> basis_;          // per degree
    std::vector<std::map<OSMonomial, int>> basis_index_;  // per degree
    std::map<OSMonomial, OSElement> reduce_table_;        // all monomials, size <= rank

    OSElement reduce_monomial(const OSMonomial& m) const;
};

OSAlgebra build_os(const Arrangement& a);

}  // namespace arr
