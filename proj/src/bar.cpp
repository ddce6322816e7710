#include "arr/bar.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace arr {

std::map<int, Scalar> ConnectedDGA::multiply(const std::map<int, Scalar>& x,
                                             const std::map<int, Scalar>& y) const {
    std::map<int, Scalar> out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            auto it = prod.find({a, b});
            if (it == prod.end()) continue;
            for (const auto& [t, ct] : it->second) {
                Scalar& slot = out[t];
                slot += ca * cb * ct;
                if (slot.is_zero()) out.erase(t);
            }
        }
    return out;
}

std::map<int, Scalar> ConnectedDGA::d(const std::map<int, Scalar>& x) const {
    std::map<int, Scalar> out;
    for (const auto& [a, ca] : x)
        for (const auto& [t, ct] : diff[a]) {
            Scalar& slot = out[t];
            slot += ca * ct;
            if (slot.is_zero()) out.erase(t);
        }
    return out;
}

void ConnectedDGA::check_axioms() const {
    for (int a = 0; a < letters(); ++a) {
        for (const auto& [t, c] : diff[a])
            if (degree[t] != degree[a] + 1) throw std::logic_error("differential degree mismatch");
        if (!d(diff[a]).empty()) throw std::logic_error("d^2 != 0 on letter");
    }
    for (int a = 0; a < letters(); ++a)
        for (int b = 0; b < letters(); ++b) {
            std::map<int, Scalar> xa = {{a, Scalar(1)}}, xb = {{b, Scalar(1)}};
            auto lhs = d(multiply(xa, xb));
            auto t1 = multiply(d(xa), xb);
            auto t2 = multiply(xa, d(xb));
            Scalar sgn(degree[a] % 2 == 0 ? 1 : -1);
            std::map<int, Scalar> rhs = t1;
            for (const auto& [t, c] : t2) {
                Scalar& slot = rhs[t];
                slot += sgn * c;
                if (slot.is_zero()) rhs.erase(t);
            }
            if (lhs != rhs) throw std::logic_error("Leibniz fails on basis pair");
        }
}

ConnectedDGA ConnectedDGA::from_os_untwisted(const OSAlgebra& alg) {
    ConnectedDGA dga;
    dga.nq = 0;
    dga.labeled = false;
    std::vector<std::pair<int, int>> ids;  // (degree, index in basis)
    std::map<std::pair<int, int>, int> letter_of;
    for (int p = 1; p <= alg.rank(); ++p)
        for (size_t i = 0; i < alg.basis(p).size(); ++i) {
            letter_of[{p, static_cast<int>(i)}] = dga.letters();
            dga.degree.push_back(p);
            ids.push_back({p, static_cast<int>(i)});
        }
    dga.label.assign(dga.letters(), {});
    dga.diff.assign(dga.letters(), {});
    for (int a = 0; a < dga.letters(); ++a)
        for (int b = 0; b < dga.letters(); ++b) {
            auto [pa, ia] = ids[a];
            auto [pb, ib] = ids[b];
            if (pa + pb > alg.rank()) continue;
            OSElement ea, eb;
            ea.add_term(alg.basis(pa)[ia], Scalar(1));
            eb.add_term(alg.basis(pb)[ib], Scalar(1));
            OSElement prod = alg.multiply(ea, eb);
            if (prod.is_zero()) continue;
            Vec v = alg.coords(prod, pa + pb);
            std::map<int, Scalar> entry;
            for (size_t t = 0; t < v.size(); ++t)
                if (!v[t].is_zero()) entry[letter_of.at({pa + pb, static_cast<int>(t)})] = v[t];
            if (!entry.empty()) dga.prod[{a, b}] = std::move(entry);
        }
    return dga;
}

ConnectedDGA ConnectedDGA::cohomology_window(const OSAlgebra& alg, const WeightMatrix& a,
                                             const WindowBox& window) {
    a.validate(alg.n());
    if (window.dim() != a.N()) throw std::invalid_argument("window dimension mismatch");
    ConnectedDGA dga;
    dga.nq = a.N();
    dga.labeled = true;

    struct CompData {
        CohomologyReport rep;
        std::vector<int> h1_letters, h2_letters;
        Mat d1;  // for projection onto cohomology
    };
    std::map<std::vector<int>, CompData> comp;

    for (const auto& k : window.points()) {
        CompData cd;
        cd.rep = aomoto_cohomology(alg, a.row_action(k));
        bool zero_k = std::all_of(k.begin(), k.end(), [](int x) { return x == 0; });
        if (!zero_k && cd.rep.dims[0] != 0)
            throw std::invalid_argument("window is not connected: H^0 != 0 at a nonzero component");
        cd.d1 = aomoto_differential(alg, a.row_action(k), 1);
        std::vector<int> neg(k.size());
        for (size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
        for (size_t i = 0; i < cd.rep.representatives[1].size(); ++i) {
            cd.h1_letters.push_back(dga.letters());
            dga.degree.push_back(1);
            dga.label.push_back(neg);
        }
        if (alg.rank() >= 2)
            for (size_t i = 0; i < cd.rep.representatives[2].size(); ++i) {
                cd.h2_letters.push_back(dga.letters());
                dga.degree.push_back(2);
                dga.label.push_back(neg);
            }
        comp.emplace(k, std::move(cd));
    }
    dga.diff.assign(dga.letters(), {});  // cohomology carries the trivial differential

    // degree-1 products: cup the representatives and express the class in
    // the target component's representative basis modulo coboundaries
    for (const auto& [ka, ca] : comp)
        for (const auto& [kb, cb] : comp) {
            if (alg.rank() < 2) continue;
            std::vector<int> kt(ka.size());
            for (size_t i = 0; i < ka.size(); ++i) kt[i] = ka[i] + kb[i];
            if (!window.contains(kt)) continue;  // truncated to zero
            const CompData& ct = comp.at(kt);
            for (size_t ia = 0; ia < ca.h1_letters.size(); ++ia)
                for (size_t ib = 0; ib < cb.h1_letters.size(); ++ib) {
                    OSElement w = alg.multiply(ca.rep.representatives[1][ia],
                                               cb.rep.representatives[1][ib]);
                    if (w.is_zero()) continue;
                    // solve w = reps * c + d1 * u
                    const auto& reps = ct.rep.representatives[2];
                    size_t dim2 = alg.basis(2).size();
                    size_t cols = reps.size() + (ct.d1.empty() ? 0 : ct.d1[0].size());
                    Mat m(dim2, Vec(cols, Scalar(0)));
                    for (size_t c = 0; c < reps.size(); ++c) {
                        Vec col = alg.coords(reps[c], 2);
                        for (size_t r = 0; r < dim2; ++r) m[r][c] = col[r];
                    }
                    if (!ct.d1.empty())
                        for (size_t c = 0; c < ct.d1[0].size(); ++c)
                            for (size_t r = 0; r < dim2; ++r) m[r][reps.size() + c] = ct.d1[r][c];
                    auto sol = solve(m, alg.coords(w, 2));
                    if (!sol) throw std::logic_error("cup class does not decompose");
                    std::map<int, Scalar> entry;
                    for (size_t c = 0; c < reps.size(); ++c)
                        if (!(*sol)[c].is_zero()) entry[ct.h2_letters[c]] = (*sol)[c];
                    if (!entry.empty())
                        dga.prod[{ca.h1_letters[ia], cb.h1_letters[ib]}] = std::move(entry);
                }
        }
    return dga;
}

// ---------------------------------------------------------------------------

void BarElement::add(const BarTerm& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

BarElement BarElement::operator+(const BarElement& o) const {
    BarElement out = *this;
    for (const auto& [t, c] : o.terms) out.add(t, c);
    return out;
}

BarElement BarElement::operator-(const BarElement& o) const {
    BarElement out = *this;
    for (const auto& [t, c] : o.terms) out.add(t, -c);
    return out;
}

BarElement BarElement::operator*(const Scalar& c) const {
    BarElement out;
    if (c.is_zero()) return out;
    for (const auto& [t, x] : terms) out.terms[t] = x * c;
    return out;
}

BarElement BarElement::single(BarTerm t) {
    BarElement e;
    e.terms[std::move(t)] = Scalar(1);
    return e;
}

int BarElement::bar_degree(const ConnectedDGA& dga) const {
    int deg = 0;
    bool first = true;
    for (const auto& [t, c] : terms) {
        int d = 0;
        for (int l : t.letters) d += dga.degree[l] - 1;
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            throw std::invalid_argument("bar element is not homogeneous");
        }
    }
    return deg;
}

int BarElement::max_length() const {
    int s = 0;
    for (const auto& [t, c] : terms) s = std::max(s, static_cast<int>(t.letters.size()));
    return s;
}

void BarTensor::add(const std::vector<BarTerm>& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

namespace {

void check_term(const ConnectedDGA& dga, const BarTerm& t) {
    if (static_cast<int>(t.q.size()) != dga.nq)
        throw std::invalid_argument("bar term q-exponent rank mismatch");
    for (int l : t.letters)
        if (l < 0 || l >= dga.letters()) throw std::invalid_argument("bar letter out of range");
}

}  // namespace

BarElement bar_d(const ConnectedDGA& dga, const BarElement& x) {
    BarElement out;
    for (const auto& [term, coeff] : x.terms) {
        check_term(dga, term);
        const auto& L = term.letters;
        const int s = static_cast<int>(L.size());
        int prefix = 0;  // sum of degrees of letters before position j
        for (int j = 0; j < s; ++j) {
            // inner differential: (-1)^{j+1} [Jr_1|..|Jr_{j-1}|dr_j|..]
            int sign = ((j + 1) % 2 ? -1 : 1) * (prefix % 2 ? -1 : 1);
            for (const auto& [t, ct] : dga.diff[L[j]]) {
                BarTerm nt = term;
                nt.letters[j] = t;
                out.add(nt, coeff * ct * Scalar(sign));
            }
            // product with the next letter: (-1)^j [..|Jr_j ^ r_{j+1}|..]
            if (j + 1 < s) {
                int psign = (j % 2 ? -1 : 1) * ((prefix + dga.degree[L[j]]) % 2 ? -1 : 1);
                auto it = dga.prod.find({L[j], L[j + 1]});
                if (it != dga.prod.end())
                    for (const auto& [t, ct] : it->second) {
                        BarTerm nt;
                        nt.q = term.q;
                        nt.letters.reserve(s - 1);
                        for (int i = 0; i < s; ++i) {
                            if (i == j + 1) continue;
                            nt.letters.push_back(i == j ? t : L[i]);
                        }
                        out.add(nt, coeff * ct * Scalar(psign));
                    }
            }
            prefix += dga.degree[L[j]];
        }
    }
    return out;
}

BarElement bar_shuffle(const ConnectedDGA& dga, const BarElement& x, const BarElement& y,
                       int s_max) {
    BarElement out;
    for (const auto& [tx, cx] : x.terms)
        for (const auto& [ty, cy] : y.terms) {
            check_term(dga, tx);
            check_term(dga, ty);
            const int p = static_cast<int>(tx.letters.size());
            const int q = static_cast<int>(ty.letters.size());
            if (p + q > s_max)
                throw TruncationError("shuffle exceeds bar length truncation s_max=" +
                                      std::to_string(s_max));
            std::vector<int> qexp(tx.q.size());
            for (size_t i = 0; i < qexp.size(); ++i) qexp[i] = tx.q[i] + ty.q[i];

            // shifted degrees
            std::vector<int> sx(p), sy(q);
            for (int i = 0; i < p; ++i) sx[i] = dga.degree[tx.letters[i]] - 1;
            for (int i = 0; i < q; ++i) sy[i] = dga.degree[ty.letters[i]] - 1;
            std::vector<int> sx_tail(p + 1, 0);
            for (int i = p - 1; i >= 0; --i) sx_tail[i] = sx_tail[i + 1] + sx[i];

            std::vector<int> acc;
            std::function<void(int, int, int)> rec = [&](int i, int j, int sign) {
                if (i == p && j == q) {
                    BarTerm nt;
                    nt.letters.reserve(p + q);
                    for (int idx : acc) nt.letters.push_back(idx < p ? tx.letters[idx]
                                                                     : ty.letters[idx - p]);
                    nt.q = qexp;
                    out.add(nt, cx * cy * Scalar(sign));
                    return;
                }
                if (i < p) {
                    acc.push_back(i);
                    rec(i + 1, j, sign);
                    acc.pop_back();
                }
                if (j < q) {
                    // letter y_j moves past the remaining x letters
                    int flip = (sy[j] * sx_tail[i]) % 2 ? -1 : 1;
                    acc.push_back(p + j);
                    rec(i, j + 1, sign * flip);
                    acc.pop_back();
                }
            };
            rec(0, 0, 1);
        }
    return out;
}

BarTensor bar_coproduct(const ConnectedDGA& dga, const BarElement& x) {
    if (!dga.labeled) throw std::invalid_argument("coproduct requires character labels");
    BarTensor out;
    for (const auto& [term, coeff] : x.terms) {
        check_term(dga, term);
        const int s = static_cast<int>(term.letters.size());
        for (int i = 0; i <= s; ++i) {
            BarTerm left, right;
            left.letters.assign(term.letters.begin(), term.letters.begin() + i);
            right.letters.assign(term.letters.begin() + i, term.letters.end());
            right.q = term.q;
            left.q = term.q;
            for (int l = i; l < s; ++l) {
                const auto& e = dga.label[term.letters[l]];
                for (size_t t = 0; t < left.q.size(); ++t) left.q[t] += e[t];
            }
            out.add({left, right}, coeff);
        }
    }
    return out;
}

BarTensor bar_coproduct_at(const ConnectedDGA& dga, const BarTensor& t, int position) {
    BarTensor out;
    for (const auto& [factors, coeff] : t.terms) {
        if (position < 0 || position >= static_cast<int>(factors.size()))
            throw std::invalid_argument("coproduct position out of range");
        BarElement part = BarElement::single(factors[position]);
        BarTensor inner = bar_coproduct(dga, part);
        for (const auto& [pair, c2] : inner.terms) {
            std::vector<BarTerm> nf;
            for (int i = 0; i < static_cast<int>(factors.size()); ++i) {
                if (i == position) {
                    nf.push_back(pair[0]);
                    nf.push_back(pair[1]);
                } else {
                    nf.push_back(factors[i]);
                }
            }
            out.add(nf, coeff * c2);
        }
    }
    return out;
}

BarElement bar_antipode(const ConnectedDGA& dga, const BarElement& x) {
    if (!dga.labeled) throw std::invalid_argument("antipode requires character labels");
    BarElement out;
    for (const auto& [term, coeff] : x.terms) {
        check_term(dga, term);
        const int s = static_cast<int>(term.letters.size());
        BarTerm nt;
        nt.letters.assign(term.letters.rbegin(), term.letters.rend());
        nt.q.assign(term.q.size(), 0);
        for (size_t t = 0; t < term.q.size(); ++t) nt.q[t] = -term.q[t];
        for (int l : term.letters) {
            const auto& e = dga.label[l];
            for (size_t t = 0; t < nt.q.size(); ++t) nt.q[t] -= e[t];
        }
        out.add(nt, coeff * Scalar(s % 2 ? -1 : 1));
    }
    return out;
}

EMPages em_pages(const ConnectedDGA& h, int s_max) {
    for (const auto& dl : h.diff)
        if (!dl.empty()) throw std::invalid_argument("em_pages expects a zero differential");

    // enumerate letter tuples by length up to s_max + 1 (the extra column
    // feeds the incoming differential of column s_max)
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> tensors;  // (s,t) -> tuples
    std::map<std::pair<int, int>, std::map<std::vector<int>, int>> index;
    tensors[{0, 0}] = {{}};
    index[{0, 0}][{}] = 0;
    std::vector<std::vector<int>> layer = {{}};
    for (int s = 1; s <= s_max + 1; ++s) {
        std::vector<std::vector<int>> next;
        for (const auto& tup : layer)
            for (int l = 0; l < h.letters(); ++l) {
                std::vector<int> nt = tup;
                nt.push_back(l);
                int t = 0;
                for (int x : nt) t += h.degree[x];
                auto key = std::make_pair(s, t);
                index[key][nt] = static_cast<int>(tensors[key].size());
                tensors[key].push_back(nt);
                next.push_back(std::move(nt));
            }
        layer = std::move(next);
    }

    // d1 on a tuple: adjacent products with bar signs (inner d vanishes)
    auto d1_of = [&](const std::vector<int>& L) {
        std::map<std::vector<int>, Scalar> out;
        const int s = static_cast<int>(L.size());
        int prefix = 0;
        for (int j = 0; j + 1 < s; ++j) {
            int psign = (j % 2 ? -1 : 1) * ((prefix + h.degree[L[j]]) % 2 ? -1 : 1);
            auto it = h.prod.find({L[j], L[j + 1]});
            if (it != h.prod.end())
                for (const auto& [t, ct] : it->second) {
                    std::vector<int> nt;
                    nt.reserve(s - 1);
                    for (int i = 0; i < s; ++i) {
                        if (i == j + 1) continue;
                        nt.push_back(i == j ? t : L[i]);
                    }
                    Scalar& slot = out[nt];
                    slot += ct * Scalar(psign);
                    if (slot.is_zero()) out.erase(nt);
                }
            prefix += h.degree[L[j]];
        }
        return out;
    };

    auto d1_matrix = [&](int s, int t) -> Mat {
        auto src_it = tensors.find({s, t});
        if (src_it == tensors.end() || src_it->second.empty()) return Mat();
        auto dst_it = tensors.find({s - 1, t});
        size_t rows = dst_it == tensors.end() ? 0 : dst_it->second.size();
        Mat m(rows, Vec(src_it->second.size(), Scalar(0)));
        for (size_t c = 0; c < src_it->second.size(); ++c)
            for (const auto& [nt, coeff] : d1_of(src_it->second[c])) {
                if (rows == 0) throw std::logic_error("d1 target bidegree missing");
                m[index.at({s - 1, t}).at(nt)][c] = coeff;
            }
        return m;
    };

    EMPages pages;
    int max_deg = 0;
    for (int d : h.degree) max_deg = std::max(max_deg, d);
    for (int s = 0; s <= s_max; ++s)
        for (int t = 0; t <= max_deg * s; ++t) {
            auto it = tensors.find({s, t});
            int dim = it == tensors.end() ? 0 : static_cast<int>(it->second.size());
            if (s == 0 && t == 0) dim = 1;
            if (dim == 0 && !(s == 0 && t == 0)) continue;
            pages.e1[{s, t}] = dim;

            Mat out_d = d1_matrix(s, t);
            Mat in_d = d1_matrix(s + 1, t);
            int ker = out_d.empty() ? dim : dim - rank(out_d);
            int im = in_d.empty() ? 0 : rank(in_d);
            pages.e2[{s, t}] = ker - im;
        }
    return pages;
}

}  // namespace arr
