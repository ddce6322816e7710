#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace arr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial in r over Q.  Coefficient of r^i sits at
/// c[i]; the zero polynomial has an empty coefficient vector.
struct Poly {
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(Rat v);
    static Poly variable();

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_constant() const { return c.size() <= 1; }
    Rat constant_value() const { return c.empty() ? Rat(0) : c[0]; }
    const Rat& lead() const { return c.back(); }

    void trim();

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c == o.c; }

    // Euclidean division; remainder degree < divisor degree.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& rem);
    // Monic gcd.
    static Poly gcd(Poly a, Poly b);

    Rat eval(const Rat& x) const;
    std::string str() const;
};

/// Exact scalar: either a rational number or a rational function in r with
/// rational coefficients.  Always kept in canonical form: gcd-reduced,
/// monic denominator, and a constant/constant fraction collapses to the
/// rational tag.
class Scalar {
  public:
    Scalar() : rat_(0) {}
    Scalar(long v) : rat_(v) {}
    explicit Scalar(Rat v) : rat_(std::move(v)) {}
    static Scalar variable();
    static Scalar fraction(Poly num, Poly den);  // throws on zero denominator
    static Scalar parse(const std::string& text);

    bool is_rational() const { return !fun_; }
    bool is_zero() const { return !fun_ && rat_ == 0; }
    bool is_one() const { return !fun_ && rat_ == 1; }
    bool is_positive_integer() const;
    const Rat& rational() const;  // pre: is_rational()
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    // Pivot-size heuristic: deg(num) + deg(den), 0 on the rational tag.
    int total_degree() const;
    // Substitute a numeric value for r; throws if the denominator vanishes.
    Rat eval(const Rat& r) const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;  // throws on zero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // arbitrary total order for containers

    std::string str() const;

  private:
    bool fun_ = false;  // true: num_/den_ in play, false: rat_
    Rat rat_;
    Poly num_, den_;

    Poly as_poly() const;  // numerator view of a rational as a Poly
    void canonicalize();
};

std::string scalar_row_str(const std::vector<Scalar>& row);

}  // namespace arr
