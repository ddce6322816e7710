#include "arr/itint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arr {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Cx kTwoPiI(0.0, 2.0 * kPi);

// 8-point Gauss-Legendre on [-1, 1]
const double kGLNode[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                           -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                           0.7966664774136267,  0.9602898564975363};
const double kGLWeight[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                             0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                             0.2223810344533745, 0.1012285362903763};

double rat_to_double(const Rat& v) {
    return static_cast<double>(numerator(v)) / static_cast<double>(denominator(v));
}

struct SegmentForms {
    // L_j along the segment is A_j + t B_j
    std::vector<Cx> A, B;
};

SegmentForms segment_forms(const Arrangement& a, const CxPoint& z0, const CxPoint& z1) {
    SegmentForms sf;
    for (const auto& f : a.forms) {
        Cx v0 = Cx(rat_to_double(f.cst), 0.0), v1 = v0;
        for (int i = 0; i < a.ambient_dim; ++i) {
            double c = rat_to_double(f.coeffs[i]);
            v0 += c * z0[i];
            v1 += c * z1[i];
        }
        sf.A.push_back(v0);
        sf.B.push_back(v1 - v0);
    }
    return sf;
}

double coeff_norm(const AffineForm& f) {
    double s = 0;
    for (const auto& c : f.coeffs) {
        double x = rat_to_double(c);
        s += x * x;
    }
    return std::sqrt(s);
}

}  // namespace

std::vector<std::pair<CxPoint, CxPoint>> Loop::segments() const {
    std::vector<std::pair<CxPoint, CxPoint>> segs;
    if (vertices.empty()) return segs;
    CxPoint prev = base;
    for (const auto& v : vertices) {
        segs.push_back({prev, v});
        prev = v;
    }
    segs.push_back({prev, base});
    return segs;
}

Loop Loop::reversed() const {
    Loop out = *this;
    std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

Loop Loop::composed(const Loop& a, const Loop& b) {
    if (a.base != b.base) throw std::invalid_argument("composed loops must share the base point");
    Loop out;
    out.base = a.base;
    out.vertices = a.vertices;
    out.vertices.push_back(a.base);
    out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
    out.samples_per_segment = std::max(a.samples_per_segment, b.samples_per_segment);
    return out;
}

void validate_loop(const Arrangement& a, const Loop& loop, double min_distance) {
    if (loop.base.size() != static_cast<size_t>(a.ambient_dim))
        throw std::invalid_argument("loop base point has wrong dimension");
    for (const auto& v : loop.vertices)
        if (v.size() != static_cast<size_t>(a.ambient_dim))
            throw std::invalid_argument("loop vertex has wrong dimension");
    if (loop.samples_per_segment < 1) throw std::invalid_argument("samples_per_segment < 1");

    for (const auto& [z0, z1] : loop.segments()) {
        SegmentForms sf = segment_forms(a, z0, z1);
        for (int j = 0; j < a.size(); ++j) {
            const Cx &A = sf.A[j], &B = sf.B[j];
            // minimize |A + tB|^2 on [0,1]
            double t = 0.0;
            double b2 = std::norm(B);
            if (b2 > 0) t = std::clamp(-(A.real() * B.real() + A.imag() * B.imag()) / b2, 0.0, 1.0);
            double dist = std::abs(A + t * B) / coeff_norm(a.forms[j]);
            if (dist <= min_distance)
                throw std::domain_error("loop touches hyperplane " + std::to_string(j + 1));
        }
    }
}

std::vector<Cx> loop_periods(const Arrangement& a, const Loop& loop) {
    validate_loop(a, loop);
    std::vector<Cx> periods(a.size(), Cx(0, 0));
    for (const auto& [z0, z1] : loop.segments()) {
        SegmentForms sf = segment_forms(a, z0, z1);
        int panels = loop.samples_per_segment;
        for (int j = 0; j < a.size(); ++j) {
            if (std::norm(sf.B[j]) == 0) continue;  // constant along the segment
            Cx sum(0, 0);
            for (int p = 0; p < panels; ++p) {
                double lo = static_cast<double>(p) / panels, hi = (p + 1.0) / panels;
                double half = (hi - lo) / 2, mid = (hi + lo) / 2;
                for (int g = 0; g < 8; ++g) {
                    double t = mid + half * kGLNode[g];
                    sum += kGLWeight[g] * half * sf.B[j] / (sf.A[j] + t * sf.B[j]);
                }
            }
            periods[j] += sum / kTwoPiI;
        }
    }
    return periods;
}

namespace {

std::vector<std::vector<double>> numeric_matrix(const WeightMatrix& a, const Rat& r_value) {
    std::vector<std::vector<double>> m;
    for (const auto& row : a.rows) {
        std::vector<double> out;
        for (const auto& s : row) out.push_back(rat_to_double(s.eval(r_value)));
        m.push_back(std::move(out));
    }
    return m;
}

}  // namespace

std::vector<Cx> monodromy(const Arrangement& arr, const WeightMatrix& a, const Rat& r_value,
                          const Loop& loop) {
    a.validate(arr.size());
    std::vector<Cx> periods = loop_periods(arr, loop);
    auto m = numeric_matrix(a, r_value);
    std::vector<Cx> rho;
    for (const auto& row : m) {
        Cx s(0, 0);
        for (int j = 0; j < arr.size(); ++j) s += row[j] * periods[j];
        rho.push_back(std::exp(s));
    }
    return rho;
}

Cx iterated_integral(const Arrangement& arr, const WeightMatrix& a, const Rat& r_value,
                     const std::vector<TwistedForm>& forms, const std::vector<int>& phi_exp,
                     const Loop& loop) {
    a.validate(arr.size());
    if (static_cast<int>(phi_exp.size()) != a.N())
        throw std::invalid_argument("phi exponent has wrong length");
    validate_loop(arr, loop);

    const int N = a.N();
    const int s = static_cast<int>(forms.size());
    auto amat = numeric_matrix(a, r_value);

    // numeric coefficient rows of the forms
    std::vector<std::vector<double>> eta(s, std::vector<double>(arr.size(), 0.0));
    for (int m = 0; m < s; ++m) {
        if (static_cast<int>(forms[m].k.size()) != N)
            throw std::invalid_argument("form component has wrong length");
        for (const auto& [mono, c] : forms[m].eta.terms) {
            if (mono.size() != 1) throw std::invalid_argument("twisted form must have degree one");
            eta[m][mono[0] - 1] = rat_to_double(c.eval(r_value));
        }
    }

    // state: accumulated A in C^N, then F_1..F_s; F_0 == 1
    std::vector<Cx> state(N + s, Cx(0, 0));

    for (const auto& [z0, z1] : loop.segments()) {
        SegmentForms sf = segment_forms(arr, z0, z1);
        auto logderiv = [&](double t, std::vector<Cx>& h) {
            for (int j = 0; j < arr.size(); ++j)
                h[j] = std::norm(sf.B[j]) == 0 ? Cx(0, 0)
                                               : sf.B[j] / (sf.A[j] + t * sf.B[j]) / kTwoPiI;
        };
        auto deriv = [&](double t, const std::vector<Cx>& y, std::vector<Cx>& dy) {
            std::vector<Cx> h(arr.size());
            logderiv(t, h);
            for (int i = 0; i < N; ++i) {
                Cx v(0, 0);
                for (int j = 0; j < arr.size(); ++j) v += amat[i][j] * h[j];
                dy[i] = v;
            }
            for (int m = 0; m < s; ++m) {
                // dividing by the flat frame of the k-twisted connection
                // turns the component form into the invariant form upstairs
                Cx tw(0, 0);
                for (int i = 0; i < N; ++i) tw -= static_cast<double>(forms[m].k[i]) * y[i];
                Cx pull(0, 0);
                for (int j = 0; j < arr.size(); ++j) pull += eta[m][j] * h[j];
                Cx prev = m == 0 ? Cx(1, 0) : y[N + m - 1];
                dy[N + m] = std::exp(tw) * pull * prev;
            }
        };

        int steps = loop.samples_per_segment;
        double h = 1.0 / steps;
        std::vector<Cx> k1(N + s), k2(N + s), k3(N + s), k4(N + s), tmp(N + s);
        for (int st = 0; st < steps; ++st) {
            double t0 = st * h;
            deriv(t0, state, k1);
            for (int i = 0; i < N + s; ++i) tmp[i] = state[i] + 0.5 * h * k1[i];
            deriv(t0 + 0.5 * h, tmp, k2);
            for (int i = 0; i < N + s; ++i) tmp[i] = state[i] + 0.5 * h * k2[i];
            deriv(t0 + 0.5 * h, tmp, k3);
            for (int i = 0; i < N + s; ++i) tmp[i] = state[i] + h * k3[i];
            deriv(t0 + h, tmp, k4);
            for (int i = 0; i < N + s; ++i)
                state[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }

    Cx phi_rho(0, 0);
    for (int i = 0; i < N; ++i) phi_rho += static_cast<double>(phi_exp[i]) * state[i];
    Cx value = s == 0 ? Cx(1, 0) : state[N + s - 1];
    return std::exp(phi_rho) * value;
}

Loop standard_meridian(const Arrangement& a, int j, double radius, const CxPoint& base,
                       int circle_vertices, int samples_per_segment) {
    if (j < 1 || j > a.size()) throw std::invalid_argument("hyperplane index out of range");
    if (circle_vertices < 64) circle_vertices = 64;
    const AffineForm& f = a.forms[j - 1];
    const int l = a.ambient_dim;

    // min-norm point on the hyperplane and a real kernel direction
    std::vector<double> c(l);
    for (int i = 0; i < l; ++i) c[i] = rat_to_double(f.coeffs[i]);
    double cn2 = 0;
    for (double x : c) cn2 += x * x;
    double d = rat_to_double(f.cst);
    CxPoint p0(l);
    for (int i = 0; i < l; ++i) p0[i] = Cx(-d * c[i] / cn2, 0);
    std::vector<double> kerdir(l, 0.0);
    if (l == 1) {
        // no kernel; the hyperplane is the single point
    } else {
        // pick the coordinate pair giving a nonzero rotation of c
        int i0 = 0;
        for (int i = 0; i < l; ++i)
            if (std::abs(c[i]) > std::abs(c[i0])) i0 = i;
        int i1 = (i0 + 1) % l;
        kerdir[i0] = -c[i1];
        kerdir[i1] = c[i0];
        double kn = 0;
        for (double x : kerdir) kn += x * x;
        kn = std::sqrt(kn);
        for (double& x : kerdir) x /= kn;
    }

    // The straight tail from the base usually crosses other (real)
    // hyperplanes, so it detours through a waypoint pushed into imaginary
    // directions where the real lines cannot be met.
    const double shifts[] = {0.0, 0.5, -0.5, 1.0, -1.0, 1.5, -1.5, 2.0, -2.0, 3.0, -3.0};
    const double lifts[] = {0.5, 0.25, 1.0, 0.75, 1.5};
    for (double shift : shifts) {
        CxPoint p(l);
        for (int i = 0; i < l; ++i) p[i] = p0[i] + shift * kerdir[i];
        for (double lift : lifts) {
            Loop loop;
            loop.base = base;
            loop.samples_per_segment = samples_per_segment;
            CxPoint start(l);
            for (int i = 0; i < l; ++i)
                start[i] = p[i] + radius * c[i] / cn2;  // circle point at angle 0
            CxPoint waypoint(l);
            for (int i = 0; i < l; ++i)
                waypoint[i] = 0.5 * (base[i] + start[i]) + Cx(0, lift);
            loop.vertices.push_back(waypoint);
            for (int k = 0; k <= circle_vertices; ++k) {
                double ang = 2.0 * kPi * k / circle_vertices;
                Cx zeta = radius * Cx(std::cos(ang), std::sin(ang));
                CxPoint v(l);
                for (int i = 0; i < l; ++i) v[i] = p[i] + zeta * c[i] / cn2;
                loop.vertices.push_back(std::move(v));
            }
            loop.vertices.push_back(waypoint);
            try {
                validate_loop(a, loop, 1e-9);
                // certify the pairing row: the circle must link hyperplane j
                // once and no other (a large radius fails here)
                auto periods = loop_periods(a, loop);
                bool ok = true;
                for (int k = 0; k < a.size(); ++k) {
                    Cx expect = (k + 1 == j) ? Cx(1, 0) : Cx(0, 0);
                    if (std::abs(periods[k] - expect) > 1e-6) ok = false;
                }
                if (ok) return loop;
            } catch (const std::domain_error&) {
                // too close to a hyperplane, adjust the detour
            }
        }
    }
    throw std::domain_error("meridian construction failed: radius too large or no clear path");
}

}  // namespace arr
