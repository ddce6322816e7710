#pragma once

#include "arr/linalg.hpp"
#include "arr/scalar.hpp"

#include <string>
#include <vector>

namespace arr {

/// Affine form L(x) = coeffs . x + cst defining one hyperplane.
struct AffineForm {
    std::vector<Rat> coeffs;
    Rat cst;
};

/// Ordered affine hyperplane arrangement in Q^l.  Hyperplane indices are
/// 1..n; index 0 is reserved for the hyperplane at infinity of the
/// projective closure.
struct Arrangement {
    int ambient_dim = 0;
    std::vector<AffineForm> forms;

    int size() const { return static_cast<int>(forms.size()); }
    // rank of the coefficient matrix (dimension actually spanned)
    int rank() const;
    void validate() const;  // zero forms, proportional pairs
};

struct Flat {
    std::vector<int> hyperplanes;  // sorted; may contain 0 in projective lattices
    int rank = 0;
    long long moebius = 0;
    bool dense = false;
};

struct FlatLattice {
    bool projective = false;
    std::vector<Flat> flats;                   // sorted by (rank, hyperplane set)
    std::vector<std::pair<int, int>> covers;   // (lower, upper) indices into flats

    std::vector<const Flat*> by_rank(int r) const;
    int max_rank() const;
    // Whitney number: sum of |mu| over flats of the given rank
    long long whitney(int r) const;
    const Flat* find(const std::vector<int>& hyperplanes) const;
};

struct ESVViolation {
    Flat flat;
    Scalar sum;  // the offending sum over hyperplanes containing the flat
};

struct ESVReport {
    bool valid = true;
    std::vector<ESVViolation> violations;
};

Arrangement load_arrangement(const std::string& json_text);

FlatLattice intersection_lattice(const Arrangement& a, bool projective);

/// Flats of the projective closure with dense flags filled in.  A flat is
/// dense when the subarrangement of hyperplanes containing it is
/// irreducible; irreducibility is decided by connectivity of the graph
/// joining hyperplanes that share a circuit.  Rank-one flats (single
/// hyperplanes) are reported as not dense.
std::vector<Flat> dense_flats(const Arrangement& a);

/// Checks the non-resonance condition for the weight row w (length n):
/// with a_0 = -sum(w), every dense flat S of the projective closure must
/// have sum_{S in K_j} a_j not a positive integer.  Pass a precomputed
/// dense_flats() result to avoid rebuilding the projective lattice.
ESVReport esv_check(const Arrangement& a, const std::vector<Scalar>& w,
                    const std::vector<Flat>* flats = nullptr);

/// Brute-force irreducibility oracle used by the tests: searches for a
/// bipartition of the containing hyperplanes with additive rank.
bool irreducible_by_bipartition(const Arrangement& a, const std::vector<int>& hyperplanes);

}  // namespace arr
