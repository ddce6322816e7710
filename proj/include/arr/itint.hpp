#pragma once

#include "arr/aomoto.hpp"
#include "arr/orlik_solomon.hpp"

#include <complex>
#include <vector>

namespace arr {

using Cx = std::complex<double>;
using CxPoint = std::vector<Cx>;  // point of C^l

/// Closed polygonal loop: base -> vertices[0] -> ... -> back to base.
/// No vertex or segment point may come within min_distance of a hyperplane
/// (normalized by the coefficient norm).
struct Loop {
    CxPoint base;
    std::vector<CxPoint> vertices;
    int samples_per_segment = 64;

    std::vector<std::pair<CxPoint, CxPoint>> segments() const;
    Loop reversed() const;
    /// Concatenation of two loops with the same base point.
    static Loop composed(const Loop& a, const Loop& b);
};

/// Degree-one form with a component label: eta q^k.
struct TwistedForm {
    OSElement eta;       // degree-one, numeric coefficients after r is specialized
    std::vector<int> k;  // component in Z^N
};

/// Throws when the loop passes too close to a hyperplane.
void validate_loop(const Arrangement& a, const Loop& loop, double min_distance = 1e-9);

/// Periods of the loop: integral of omega_j over the loop for each j,
/// composite Gauss-Legendre per segment.
std::vector<Cx> loop_periods(const Arrangement& a, const Loop& loop);

/// Monodromy point exp(integral of a omega^T) in (C*)^N; the weight matrix
/// is specialized at the rational value r_value when it involves r.
std::vector<Cx> monodromy(const Arrangement& arr, const WeightMatrix& a, const Rat& r_value,
                          const Loop& loop);

/// Twisted iterated integral int_gamma (psi_1 ... psi_s | q^m) evaluated by
/// the ODE cascade with fixed-step RK4.
Cx iterated_integral(const Arrangement& arr, const WeightMatrix& a, const Rat& r_value,
                     const std::vector<TwistedForm>& forms, const std::vector<int>& phi_exp,
                     const Loop& loop);

/// Polygonal meridian of hyperplane j (>= 64 circle vertices) joined to the
/// base point through a complex detour; the construction certifies the
/// pairing row delta_{jk} against the omega basis before returning.
Loop standard_meridian(const Arrangement& a, int j, double radius, const CxPoint& base,
                       int circle_vertices = 64, int samples_per_segment = 96);

}  // namespace arr
