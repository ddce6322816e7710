#include "arr/arrangement.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace arr {

namespace {

// Coned row of hyperplane j: linear part plus the constant as the last
// coordinate.  Index 0 is the hyperplane at infinity (0,...,0,1).
Vec coned_row(const Arrangement& a, int j) {
    Vec row(a.ambient_dim + 1, Scalar(0));
    if (j == 0) {
        row[a.ambient_dim] = Scalar(1);
        return row;
    }
    const AffineForm& f = a.forms[j - 1];
    for (int i = 0; i < a.ambient_dim; ++i) row[i] = Scalar(f.coeffs[i]);
    row[a.ambient_dim] = Scalar(f.cst);
    return row;
}

Vec linear_row(const Arrangement& a, int j) {
    const AffineForm& f = a.forms[j - 1];
    Vec row(a.ambient_dim, Scalar(0));
    for (int i = 0; i < a.ambient_dim; ++i) row[i] = Scalar(f.coeffs[i]);
    return row;
}

}  // namespace

int Arrangement::rank() const {
    std::vector<Vec> rows;
    for (int j = 1; j <= size(); ++j) rows.push_back(linear_row(*this, j));
    return arr::rank(rows);
}

void Arrangement::validate() const {
    if (ambient_dim < 1) throw std::invalid_argument("ambient_dim must be >= 1");
    for (const auto& f : forms) {
        if (static_cast<int>(f.coeffs.size()) != ambient_dim)
            throw std::invalid_argument("form has wrong coefficient count");
        bool zero = true;
        for (const auto& c : f.coeffs)
            if (c != 0) zero = false;
        if (zero) throw std::invalid_argument("zero coefficient vector");
    }
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j) {
            std::vector<Vec> rows = {coned_row(*this, i), coned_row(*this, j)};
            if (arr::rank(rows) < 2)
                throw std::invalid_argument("duplicate hyperplane: forms " + std::to_string(i) +
                                            " and " + std::to_string(j) + " are proportional");
        }
}

Arrangement load_arrangement(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed arrangement file: ") + e.what());
    }
    Arrangement a;
    if (!j.contains("ambient_dim") || !j.contains("forms"))
        throw std::invalid_argument("arrangement file needs ambient_dim and forms");
    a.ambient_dim = j["ambient_dim"].get<int>();
    for (const auto& fj : j["forms"]) {
        AffineForm f;
        for (const auto& cj : fj["coeffs"]) f.coeffs.push_back(Scalar::parse(cj.get<std::string>()).rational());
        f.cst = Scalar::parse(fj["const"].get<std::string>()).rational();
        a.forms.push_back(std::move(f));
    }
    a.validate();
    return a;
}

std::vector<const Flat*> FlatLattice::by_rank(int r) const {
    std::vector<const Flat*> out;
    for (const auto& f : flats)
        if (f.rank == r) out.push_back(&f);
    return out;
}

int FlatLattice::max_rank() const {
    int m = 0;
    for (const auto& f : flats) m = std::max(m, f.rank);
    return m;
}

long long FlatLattice::whitney(int r) const {
    long long s = 0;
    for (const auto& f : flats)
        if (f.rank == r) s += std::llabs(f.moebius);
    return s;
}

const Flat* FlatLattice::find(const std::vector<int>& hs) const {
    for (const auto& f : flats)
        if (f.hyperplanes == hs) return &f;
    return nullptr;
}

FlatLattice intersection_lattice(const Arrangement& a, bool projective) {
    const int n = a.size();
    std::vector<int> universe;
    if (projective) universe.push_back(0);
    for (int j = 1; j <= n; ++j) universe.push_back(j);

    std::vector<Vec> rows;
    for (int j : universe) rows.push_back(coned_row(a, j));
    const int m = static_cast<int>(universe.size());
    const int full = a.ambient_dim + 1;

    // Closure of a position subset: all hyperplanes whose coned row lies in
    // the row space.  For consistent affine systems this is exactly
    // containment of the flat; projectively we only exclude the cone point.
    auto closure = [&](const std::vector<int>& subset_pos, int& rank_out, bool& ok) {
        std::vector<Vec> sys;
        for (int p : subset_pos) sys.push_back(rows[p]);
        int rk = arr::rank(sys);
        ok = true;
        std::vector<int> cl;
        if (projective) {
            if (rk >= full) {
                ok = false;
                return cl;
            }
        } else {
            std::vector<Vec> lin;
            for (int p : subset_pos) {
                Vec row = rows[p];
                row.pop_back();
                lin.push_back(std::move(row));
            }
            if (arr::rank(lin) != rk) {  // empty affine intersection
                ok = false;
                return cl;
            }
        }
        rank_out = rk;
        for (int p = 0; p < m; ++p) {
            std::vector<Vec> ext = sys;
            ext.push_back(rows[p]);
            if (arr::rank(ext) == rk) cl.push_back(universe[p]);
        }
        return cl;
    };

    std::map<std::vector<int>, int> seen;  // closure -> rank
    const int max_rank = projective ? std::min(full - 1, m) : std::min(a.rank(), m);
    {
        bool ok;
        int rk = 0;
        std::vector<int> cl = closure({}, rk, ok);
        seen[cl] = 0;
    }
    std::vector<std::vector<int>> frontier = {{}};
    for (int depth = 1; depth <= max_rank; ++depth) {
        std::vector<std::vector<int>> next;
        for (const auto& sub : frontier) {
            int start = sub.empty() ? 0 : sub.back() + 1;
            for (int p = start; p < m; ++p) {
                std::vector<int> ext = sub;
                ext.push_back(p);
                bool ok;
                int rk = 0;
                std::vector<int> cl = closure(ext, rk, ok);
                if (!ok || rk != depth) continue;  // dependent or empty extension
                if (!seen.count(cl)) seen[cl] = rk;
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }

    FlatLattice lat;
    lat.projective = projective;
    for (const auto& [hs, rk] : seen) {
        Flat f;
        f.hyperplanes = hs;
        f.rank = rk;
        lat.flats.push_back(std::move(f));
    }
    std::sort(lat.flats.begin(), lat.flats.end(), [](const Flat& x, const Flat& y) {
        if (x.rank != y.rank) return x.rank < y.rank;
        return x.hyperplanes < y.hyperplanes;
    });

    auto leq = [](const Flat& x, const Flat& y) {
        return std::includes(y.hyperplanes.begin(), y.hyperplanes.end(), x.hyperplanes.begin(),
                             x.hyperplanes.end());
    };

    for (size_t i = 0; i < lat.flats.size(); ++i) {
        if (lat.flats[i].rank == 0) {
            lat.flats[i].moebius = 1;
            continue;
        }
        long long s = 0;
        for (size_t k = 0; k < lat.flats.size(); ++k)
            if (k != i && lat.flats[k].rank < lat.flats[i].rank && leq(lat.flats[k], lat.flats[i]))
                s += lat.flats[k].moebius;
        lat.flats[i].moebius = -s;
    }

    for (size_t i = 0; i < lat.flats.size(); ++i)
        for (size_t k = 0; k < lat.flats.size(); ++k)
            if (lat.flats[i].rank + 1 == lat.flats[k].rank && leq(lat.flats[i], lat.flats[k]))
                lat.covers.push_back({static_cast<int>(i), static_cast<int>(k)});
    return lat;
}

namespace {

// All circuits (minimal dependent subsets) among the given rows, as sorted
// position sets.  Subsets are visited in size order, so minimality reduces
// to containing no previously found circuit.
std::vector<std::vector<int>> circuits_among(const std::vector<Vec>& rows) {
    const int m = static_cast<int>(rows.size());
    std::vector<std::vector<int>> circuits;
    int full_rank = arr::rank(rows);

    std::vector<std::vector<int>> layer = {{}};
    for (int size = 1; size <= full_rank + 1; ++size) {
        std::vector<std::vector<int>> next;
        for (const auto& sub : layer) {
            int start = sub.empty() ? 0 : sub.back() + 1;
            for (int p = start; p < m; ++p) {
                std::vector<int> ext = sub;
                ext.push_back(p);
                bool contains_circuit = false;
                for (const auto& c : circuits)
                    if (std::includes(ext.begin(), ext.end(), c.begin(), c.end())) {
                        contains_circuit = true;
                        break;
                    }
                if (contains_circuit) continue;
                std::vector<Vec> sys;
                for (int q : ext) sys.push_back(rows[q]);
                if (arr::rank(sys) < static_cast<int>(ext.size()))
                    circuits.push_back(ext);
                else
                    next.push_back(std::move(ext));
            }
        }
        layer = std::move(next);
    }
    return circuits;
}

}  // namespace

std::vector<Flat> dense_flats(const Arrangement& a) {
    FlatLattice lat = intersection_lattice(a, true);
    std::vector<Flat> out;
    for (auto& f : lat.flats) {
        if (f.rank == 0) continue;
        Flat g = f;
        if (g.hyperplanes.size() == 1) {
            // single hyperplane: reported as not dense, see README on the
            // non-resonance check
            g.dense = false;
        } else {
            std::vector<Vec> rows;
            for (int j : g.hyperplanes) rows.push_back(coned_row(a, j));
            auto circuits = circuits_among(rows);
            const int m = static_cast<int>(rows.size());
            std::vector<int> comp(m);
            for (int i = 0; i < m; ++i) comp[i] = i;
            std::function<int(int)> find = [&](int x) {
                return comp[x] == x ? x : comp[x] = find(comp[x]);
            };
            for (const auto& c : circuits)
                for (size_t i = 1; i < c.size(); ++i) comp[find(c[0])] = find(c[i]);
            std::set<int> roots;
            for (int i = 0; i < m; ++i) roots.insert(find(i));
            g.dense = roots.size() == 1;
        }
        out.push_back(std::move(g));
    }
    return out;
}

bool irreducible_by_bipartition(const Arrangement& a, const std::vector<int>& hyperplanes) {
    std::vector<Vec> rows;
    for (int j : hyperplanes) rows.push_back(coned_row(a, j));
    const int m = static_cast<int>(rows.size());
    int total = arr::rank(rows);
    for (int mask = 1; mask < (1 << m) - 1; mask += 2) {  // element 0 stays on one side
        std::vector<Vec> s1, s2;
        for (int i = 0; i < m; ++i) (mask >> i & 1 ? s1 : s2).push_back(rows[i]);
        if (arr::rank(s1) + arr::rank(s2) == total) return false;
    }
    return true;
}

ESVReport esv_check(const Arrangement& a, const std::vector<Scalar>& w,
                    const std::vector<Flat>* flats) {
    if (static_cast<int>(w.size()) != a.size())
        throw std::invalid_argument("esv_check: weight row has wrong length");
    Scalar a0(0);
    for (const auto& x : w) a0 -= x;

    std::vector<Flat> local;
    if (!flats) {
        local = dense_flats(a);
        flats = &local;
    }
    ESVReport report;
    for (const auto& f : *flats) {
        if (!f.dense) continue;
        Scalar sum(0);
        for (int j : f.hyperplanes) sum += j == 0 ? a0 : w[j - 1];
        if (sum.is_positive_integer()) {
            report.valid = false;
            report.violations.push_back({f, sum});
        }
    }
    return report;
}

}  // namespace arr
