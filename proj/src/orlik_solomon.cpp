#include "arr/orlik_solomon.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <stdexcept>

namespace arr {

int OSElement::top_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, static_cast<int>(m.size()));
    return d;
}

bool OSElement::is_homogeneous(int deg) const {
    for (const auto& [m, c] : terms)
        if (static_cast<int>(m.size()) != deg) return false;
    return true;
}

OSElement OSElement::operator+(const OSElement& o) const {
    OSElement out = *this;
    for (const auto& [m, c] : o.terms) out.add_term(m, c);
    return out;
}

OSElement OSElement::operator-(const OSElement& o) const {
    OSElement out = *this;
    for (const auto& [m, c] : o.terms) out.add_term(m, -c);
    return out;
}

OSElement OSElement::operator*(const Scalar& c) const {
    OSElement out;
    if (c.is_zero()) return out;
    for (const auto& [m, x] : terms) out.terms[m] = x * c;
    return out;
}

void OSElement::add_term(const OSMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

OSElement OSElement::unit() {
    OSElement e;
    e.terms[{}] = Scalar(1);
    return e;
}

OSElement OSElement::generator(int j) {
    OSElement e;
    e.terms[{j}] = Scalar(1);
    return e;
}

namespace {

std::string monomial_str(const OSMonomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) out += "^";
        out += "w" + std::to_string(m[i]);
    }
    return out;
}

bool has_toplevel_sum(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && i > 0 && (s[i] == '+' || s[i] == '-')) return true;
    }
    return false;
}

}  // namespace

std::string OSElement::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        std::string cs = c.str();
        // multi-term numerators are already parenthesized by Scalar::str,
        // so a leading '-' can always be pulled out
        bool neg = !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        std::string body;
        if (m.empty()) {
            body = mag;
        } else if (mag == "1") {
            body = monomial_str(m);
        } else {
            if (has_toplevel_sum(mag)) mag = "(" + mag + ")";
            body = mag + "*" + monomial_str(m);
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

OSElement parse_os_element(const std::string& text) {
    OSElement out;
    // split into signed terms at top parenthesis level
    std::vector<std::pair<int, std::string>> parts;
    int depth = 0, sign = 1;
    std::string cur;
    auto blank = [](const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; };
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-')) {
            if (blank(cur)) {  // sign prefix of the upcoming term
                if (ch == '-') sign = -sign;
            } else {
                parts.push_back({sign, cur});
                cur.clear();
                sign = ch == '-' ? -1 : 1;
            }
            continue;
        }
        cur += ch;
    }
    if (!blank(cur)) parts.push_back({sign, cur});
    if (parts.empty()) throw std::invalid_argument("empty element text");

    for (auto& [sg, term] : parts) {
        // the scalar part ends before the first 'w'
        size_t wpos = term.find('w');
        Scalar coeff(sg);
        OSMonomial mono;
        if (wpos == std::string::npos) {
            coeff = coeff * Scalar::parse(term);
        } else {
            std::string head = term.substr(0, wpos);
            size_t star = head.find_last_of('*');
            if (star != std::string::npos) head = head.substr(0, star);
            head.erase(head.find_last_not_of(" \t") + 1);
            if (!head.empty()) coeff = coeff * Scalar::parse(head);
            std::string tail = term.substr(wpos);
            size_t pos = 0;
            while (pos < tail.size()) {
                if (tail[pos] == 'w') {
                    size_t q = pos + 1, start = q;
                    while (q < tail.size() && std::isdigit(static_cast<unsigned char>(tail[q])))
                        ++q;
                    if (q == start) throw std::invalid_argument("bad monomial in: " + term);
                    mono.push_back(std::stoi(tail.substr(start, q - start)));
                    pos = q;
                } else if (tail[pos] == '^' || std::isspace(static_cast<unsigned char>(tail[pos]))) {
                    ++pos;
                } else {
                    throw std::invalid_argument("bad monomial in: " + term);
                }
            }
        }
        if (!std::is_sorted(mono.begin(), mono.end()))
            throw std::invalid_argument("monomial indices must increase: " + term);
        out.add_term(mono, coeff);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

Vec coned_row_of(const Arrangement& a, int j) {
    Vec row(a.ambient_dim + 1, Scalar(0));
    const AffineForm& f = a.forms[j - 1];
    for (int i = 0; i < a.ambient_dim; ++i) row[i] = Scalar(f.coeffs[i]);
    row[a.ambient_dim] = Scalar(f.cst);
    return row;
}

}  // namespace

OSAlgebra::OSAlgebra(Arrangement arrangement) : arr_(std::move(arrangement)) {
    arr_.validate();
    rank_ = arr_.rank();
    affine_lattice_ = intersection_lattice(arr_, false);
    dense_ = dense_flats(arr_);

    const int n = arr_.size();
    std::vector<Vec> rows;
    for (int j = 1; j <= n; ++j) rows.push_back(coned_row_of(arr_, j));

    auto coned_rank = [&](const OSMonomial& s) {
        std::vector<Vec> sys;
        for (int j : s) sys.push_back(rows[j - 1]);
        return arr::rank(sys);
    };
    auto affine_consistent = [&](const OSMonomial& s) {
        std::vector<Vec> sys, lin;
        for (int j : s) {
            sys.push_back(rows[j - 1]);
            Vec l = rows[j - 1];
            l.pop_back();
            lin.push_back(std::move(l));
        }
        return arr::rank(sys) == arr::rank(lin);
    };

    // circuits of the coned matroid restricted to the finite hyperplanes,
    // visited in size order for minimality
    std::vector<OSMonomial> circuits;
    std::vector<OSMonomial> layer = {{}};
    for (int size = 1; size <= rank_ + 1 && size <= n; ++size) {
        std::vector<OSMonomial> next;
        for (const auto& sub : layer) {
            int start = sub.empty() ? 1 : sub.back() + 1;
            for (int j = start; j <= n; ++j) {
                OSMonomial ext = sub;
                ext.push_back(j);
                bool has_circuit = false;
                for (const auto& c : circuits)
                    if (std::includes(ext.begin(), ext.end(), c.begin(), c.end())) {
                        has_circuit = true;
                        break;
                    }
                if (has_circuit) continue;
                if (coned_rank(ext) < static_cast<int>(ext.size()))
                    circuits.push_back(ext);
                else
                    next.push_back(std::move(ext));
            }
        }
        layer = std::move(next);
    }

    // broken circuit -> full circuit (smallest circuit if several break alike)
    std::map<OSMonomial, OSMonomial> broken;
    for (const auto& c : circuits) {
        OSMonomial b(c.begin() + 1, c.end());
        if (!broken.count(b)) broken[b] = c;
    }

    auto contains_broken = [&](const OSMonomial& s, OSMonomial& hit) {
        for (const auto& [b, c] : broken) {
            if (b.size() > s.size()) continue;
            if (std::includes(s.begin(), s.end(), b.begin(), b.end())) {
                hit = b;
                return true;
            }
        }
        return false;
    };

    // NBC basis per degree
    basis_.assign(rank_ + 1, {});
    basis_index_.assign(rank_ + 1, {});
    basis_[0].push_back({});
    std::vector<OSMonomial> indep = {{}};
    for (int size = 1; size <= rank_; ++size) {
        std::vector<OSMonomial> next;
        for (const auto& sub : indep) {
            int start = sub.empty() ? 1 : sub.back() + 1;
            for (int j = start; j <= n; ++j) {
                OSMonomial ext = sub;
                ext.push_back(j);
                if (coned_rank(ext) < static_cast<int>(ext.size())) continue;
                if (!affine_consistent(ext)) continue;
                OSMonomial hit;
                if (contains_broken(ext, hit)) continue;
                basis_[size].push_back(ext);
                next.push_back(std::move(ext));
            }
        }
        indep = std::move(next);
    }
    for (int d = 0; d <= rank_; ++d) {
        std::sort(basis_[d].begin(), basis_[d].end());
        for (size_t i = 0; i < basis_[d].size(); ++i)
            basis_index_[d][basis_[d][i]] = static_cast<int>(i);
    }

    // Precompute the normal form of every monomial of length <= rank.
    // Straightening replaces the lex-least broken circuit; each replacement
    // is strictly lex-decreasing, so processing monomials in lex order lets
    // the table be filled by lookups.
    std::vector<OSMonomial> all;
    std::vector<OSMonomial> grow = {{}};
    all.push_back({});
    for (int size = 1; size <= rank_; ++size) {
        std::vector<OSMonomial> next;
        for (const auto& sub : grow) {
            int start = sub.empty() ? 1 : sub.back() + 1;
            for (int j = start; j <= n; ++j) {
                OSMonomial ext = sub;
                ext.push_back(j);
                all.push_back(ext);
                next.push_back(std::move(ext));
            }
        }
        grow = std::move(next);
    }
    std::sort(all.begin(), all.end());
    for (const auto& mono : all) {
        OSElement nf;
        if (!affine_consistent(mono)) {
            // empty intersection: zero
        } else {
            OSMonomial b;
            if (!contains_broken(mono, b)) {
                nf.add_term(mono, Scalar(1));
            } else {
                // substitute e_B using the circuit relation, then reduce each
                // replacement through the table (all lex-smaller, so present)
                const OSMonomial& c = broken.at(b);
                OSMonomial rest;
                std::set_difference(mono.begin(), mono.end(), b.begin(), b.end(),
                                    std::back_inserter(rest));
                // e_mono = sigma * e_B ^ e_rest
                int sigma = 1;
                {
                    std::vector<int> concat0 = b;
                    concat0.insert(concat0.end(), rest.begin(), rest.end());
                    for (size_t x = 0; x < concat0.size(); ++x)
                        for (size_t y = x + 1; y < concat0.size(); ++y)
                            if (concat0[x] > concat0[y]) sigma = -sigma;
                }
                // e_B = sum_{i>=1} (-1)^{i+1} e_{C \ c_i}
                for (size_t i = 1; i < c.size(); ++i) {
                    OSMonomial cb;  // C minus c[i], keeps c0
                    for (size_t t = 0; t < c.size(); ++t)
                        if (t != i) cb.push_back(c[t]);
                    int sgn = (i % 2 == 1) ? 1 : -1;

                    std::vector<int> concat = cb;
                    concat.insert(concat.end(), rest.begin(), rest.end());
                    // sort with sign; a duplicate index kills the term
                    bool dup = false;
                    int sort_sign = 1;
                    for (size_t x = 0; x < concat.size(); ++x)
                        for (size_t y = x + 1; y < concat.size(); ++y) {
                            if (concat[x] == concat[y]) dup = true;
                            if (concat[x] > concat[y]) sort_sign = -sort_sign;
                        }
                    if (dup) continue;
                    OSMonomial merged = concat;
                    std::sort(merged.begin(), merged.end());

                    auto it = reduce_table_.find(merged);
                    if (it == reduce_table_.end())
                        throw std::logic_error("straightening order violated");
                    nf = nf + it->second * Scalar(sigma * sgn * sort_sign);
                }
            }
        }
        reduce_table_.emplace(mono, std::move(nf));
    }
}

std::vector<int> OSAlgebra::dims() const {
    std::vector<int> d;
    for (const auto& b : basis_) d.push_back(static_cast<int>(b.size()));
    return d;
}

const std::vector<OSMonomial>& OSAlgebra::basis(int deg) const {
    if (deg < 0 || deg > rank_) throw std::out_of_range("basis degree out of range");
    return basis_[deg];
}

OSElement OSAlgebra::reduce_monomial(const OSMonomial& m) const {
    if (static_cast<int>(m.size()) > rank_) return OSElement();
    auto it = reduce_table_.find(m);
    if (it == reduce_table_.end()) throw std::invalid_argument("monomial index out of range");
    return it->second;
}

OSElement OSAlgebra::reduce_word(const std::vector<int>& word, int sign) const {
    for (int j : word)
        if (j < 1 || j > n()) throw std::invalid_argument("hyperplane index out of range");
    // sort with sign, duplicates give zero
    std::vector<int> w = word;
    int sgn = sign;
    for (size_t x = 0; x < w.size(); ++x)
        for (size_t y = x + 1; y < w.size(); ++y) {
            if (w[x] == w[y]) return OSElement();
            if (w[x] > w[y]) sgn = -sgn;
        }
    std::sort(w.begin(), w.end());
    if (static_cast<int>(w.size()) > rank_) return OSElement();
    return reduce_monomial(w) * Scalar(sgn);
}

OSElement OSAlgebra::multiply(const OSElement& x, const OSElement& y) const {
    OSElement out;
    for (const auto& [mx, cx] : x.terms)
        for (const auto& [my, cy] : y.terms) {
            std::vector<int> word = mx;
            word.insert(word.end(), my.begin(), my.end());
            OSElement piece = reduce_word(word, 1);
            if (piece.is_zero()) continue;
            out = out + piece * (cx * cy);
        }
    return out;
}

Vec OSAlgebra::coords(const OSElement& x, int deg) const {
    Vec v(basis_[deg].size(), Scalar(0));
    for (const auto& [m, c] : x.terms) {
        if (static_cast<int>(m.size()) != deg)
            throw std::invalid_argument("coords: element not homogeneous of requested degree");
        auto it = basis_index_[deg].find(m);
        if (it == basis_index_[deg].end())
            throw std::invalid_argument("coords: monomial not in NBC basis");
        v[it->second] = c;
    }
    return v;
}

OSElement OSAlgebra::from_coords(const Vec& v, int deg) const {
    if (v.size() != basis_[deg].size()) throw std::invalid_argument("from_coords: wrong length");
    OSElement x;
    for (size_t i = 0; i < v.size(); ++i) x.add_term(basis_[deg][i], v[i]);
    return x;
}

OSAlgebra build_os(const Arrangement& a) {
    return OSAlgebra(a);
}

}  // namespace arr
