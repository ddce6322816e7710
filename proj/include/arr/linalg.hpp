#pragma once

#include "arr/scalar.hpp"

#include <optional>
#include <vector>

namespace arr {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major, possibly empty

/// Reduced row echelon form computed in place.  Pivot entries are chosen by
/// least total degree, then lowest column index, then lowest row index, so
/// the result is deterministic.  Returns the pivot columns in pivot order.
std::vector<int> rref(Mat& m);

int rank(Mat m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column,
/// ordered by free-column index.
std::vector<Vec> kernel_basis(Mat m, int ncols);

/// One solution of m x = b with all free variables set to zero, or nullopt
/// when the system is inconsistent.
std::optional<Vec> solve(Mat m, Vec b);

/// Matrix-vector product.
Vec apply(const Mat& m, const Vec& x);

/// Span membership test.
bool in_span(const std::vector<Vec>& gens, const Vec& v);

/// Row-space basis in RREF order.
std::vector<Vec> row_space_basis(Mat m);

/// Deterministic representatives of W / U:  vectors from `whole` that extend
/// a row-reduced basis of `sub`.  Both spaces are given by spanning sets.
std::vector<Vec> complement_representatives(const std::vector<Vec>& sub,
                                            const std::vector<Vec>& whole);

}  // namespace arr
