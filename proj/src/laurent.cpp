#include "arr/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace arr {

void LaurentElement::add(const std::vector<int>& k, const OSElement& x) {
    if (x.is_zero()) return;
    auto it = comps.find(k);
    if (it == comps.end()) {
        comps.emplace(k, x);
    } else {
        it->second = it->second + x;
        if (it->second.is_zero()) comps.erase(it);
    }
}

LaurentElement LaurentElement::operator+(const LaurentElement& o) const {
    LaurentElement out = *this;
    for (const auto& [k, x] : o.comps) out.add(k, x);
    return out;
}

LaurentElement LaurentElement::operator-(const LaurentElement& o) const {
    LaurentElement out = *this;
    for (const auto& [k, x] : o.comps) out.add(k, -x);
    return out;
}

LaurentElement LaurentElement::operator*(const Scalar& c) const {
    LaurentElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, x] : comps) out.comps[k] = x * c;
    return out;
}

LaurentElement LaurentElement::component(std::vector<int> k, OSElement x) {
    LaurentElement e;
    e.add(k, std::move(x));
    return e;
}

std::string LaurentElement::str() const {
    if (comps.empty()) return "0";
    std::string out;
    for (const auto& [k, x] : comps) {
        std::string qs;
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            if (!qs.empty()) qs += " ";
            qs += "q" + std::to_string(i + 1) + "^" + std::to_string(k[i]);
        }
        std::string xs = x.str();
        if (x.terms.size() > 1) xs = "(" + xs + ")";
        std::string piece = qs.empty() ? xs : xs + " * " + qs;
        out += out.empty() ? piece : " + " + piece;
    }
    return out;
}

LaurentElement parse_laurent(const std::string& text, int N) {
    // components are separated by '+' at depth 0 outside q-monomials;
    // each component is "<os element> [* q1^a q2^b ...]" with the element
    // parenthesized when it is a sum
    LaurentElement out;
    std::vector<std::string> parts;
    {
        int depth = 0;
        std::string cur;
        for (char ch : text) {
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (depth == 0 && ch == '+') {
                parts.push_back(cur);
                cur.clear();
                continue;
            }
            cur += ch;
        }
        parts.push_back(cur);
    }
    for (const auto& part : parts) {
        if (part.find_first_not_of(" \t") == std::string::npos) continue;
        // split off the q-monomial: first 'q' at depth 0
        int depth = 0;
        size_t qpos = std::string::npos;
        for (size_t i = 0; i < part.size(); ++i) {
            if (part[i] == '(') ++depth;
            if (part[i] == ')') --depth;
            if (depth == 0 && part[i] == 'q') {
                qpos = i;
                break;
            }
        }
        std::string head = part.substr(0, qpos == std::string::npos ? part.size() : qpos);
        std::vector<int> k(N, 0);
        if (qpos != std::string::npos) {
            size_t star = head.find_last_of('*');
            if (star != std::string::npos) head = head.substr(0, star);
            std::string tail = part.substr(qpos);
            size_t i = 0;
            while (i < tail.size()) {
                if (std::isspace(static_cast<unsigned char>(tail[i])) || tail[i] == '*') {
                    ++i;
                    continue;
                }
                if (tail[i] != 'q') throw std::invalid_argument("bad q-monomial: " + tail);
                ++i;
                size_t s = i;
                while (i < tail.size() && std::isdigit(static_cast<unsigned char>(tail[i]))) ++i;
                int idx = std::stoi(tail.substr(s, i - s));
                if (idx < 1 || idx > N) throw std::invalid_argument("q index out of range");
                int exp = 1;
                if (i < tail.size() && tail[i] == '^') {
                    ++i;
                    int sign = 1;
                    if (i < tail.size() && tail[i] == '-') {
                        sign = -1;
                        ++i;
                    }
                    s = i;
                    while (i < tail.size() && std::isdigit(static_cast<unsigned char>(tail[i])))
                        ++i;
                    exp = sign * std::stoi(tail.substr(s, i - s));
                }
                k[idx - 1] += exp;
            }
        }
        // strip one layer of parens around the element if it wraps the whole head
        std::string body = head;
        {
            size_t a = body.find_first_not_of(" \t");
            size_t b = body.find_last_not_of(" \t");
            if (a != std::string::npos) body = body.substr(a, b - a + 1);
            if (!body.empty() && body.front() == '(' && body.back() == ')') {
                int d = 0;
                bool wraps = true;
                for (size_t i = 0; i < body.size(); ++i) {
                    if (body[i] == '(') ++d;
                    if (body[i] == ')') --d;
                    if (d == 0 && i + 1 < body.size()) {
                        wraps = false;
                        break;
                    }
                }
                if (wraps) body = body.substr(1, body.size() - 2);
            }
        }
        out.add(k, parse_os_element(body));
    }
    return out;
}

LaurentElement laurent_d(const OSAlgebra& alg, const WeightMatrix& a, const LaurentElement& x) {
    a.validate(alg.n());
    LaurentElement out;
    for (const auto& [k, comp] : x.comps) {
        std::vector<Scalar> w = a.row_action(k);
        OSElement form;
        for (int j = 0; j < alg.n(); ++j) form.add_term({j + 1}, -w[j]);
        out.add(k, alg.multiply(form, comp));
    }
    return out;
}

LaurentProduct laurent_multiply(const OSAlgebra& alg, const LaurentElement& x,
                                const LaurentElement& y, const WindowBox& window) {
    LaurentProduct out;
    for (const auto& [kx, cx] : x.comps)
        for (const auto& [ky, cy] : y.comps) {
            if (kx.size() != ky.size()) throw std::invalid_argument("component dim mismatch");
            std::vector<int> k(kx.size());
            for (size_t i = 0; i < k.size(); ++i) k[i] = kx[i] + ky[i];
            OSElement prod = alg.multiply(cx, cy);
            if (prod.is_zero()) continue;
            if (!window.contains(k)) {
                out.truncated = true;
                continue;
            }
            out.value.add(k, prod);
        }
    return out;
}

std::map<std::vector<int>, CohomologyReport> laurent_cohomology(const OSAlgebra& alg,
                                                                const WeightMatrix& a,
                                                                const WindowBox& window) {
    a.validate(alg.n());
    if (window.dim() != a.N()) throw std::invalid_argument("window dimension mismatch");
    std::map<std::vector<int>, CohomologyReport> out;
    for (const auto& k : window.points()) out[k] = aomoto_cohomology(alg, a.row_action(k));
    return out;
}

}  // namespace arr
