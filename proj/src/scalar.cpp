#include "arr/scalar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace arr {

Poly::Poly(Rat v) {
    if (v != 0) c.push_back(std::move(v));
}

Poly Poly::variable() {
    Poly p;
    p.c = {Rat(0), Rat(1)};
    return p;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly out;
    out.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) out.c[i] += o.c[i];
    out.trim();
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out;
    out.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) out.c[i] -= o.c[i];
    out.trim();
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly out;
    out.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
    out.trim();
    return out;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = Poly();
    rem = a;
    if (a.degree() < b.degree()) return;
    q.c.assign(a.degree() - b.degree() + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rat f = rem.lead() / b.lead();
        q.c[shift] += f;
        for (size_t i = 0; i < b.c.size(); ++i) rem.c[i + shift] -= f * b.c[i];
        rem.trim();
    }
    q.trim();
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rat lead = a.lead();
        for (auto& x : a.c) x /= lead;
    }
    return a;
}

Rat Poly::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

namespace {

std::string rat_str(const Rat& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

bool rat_is_positive_integer(const Rat& v) {
    return v > 0 && denominator(v) == 1;
}

}  // namespace

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rat& co = c[d];
        if (co == 0) continue;
        Rat a = co;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (d == 0) {
            out += rat_str(a);
        } else {
            if (a != 1) out += rat_str(a) + "*";
            out += d == 1 ? "r" : "r^" + std::to_string(d);
        }
    }
    return out;
}

Scalar Scalar::variable() {
    Scalar s;
    s.fun_ = true;
    s.num_ = Poly::variable();
    s.den_ = Poly(Rat(1));
    return s;
}

Scalar Scalar::fraction(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    Scalar s;
    s.fun_ = true;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.canonicalize();
    return s;
}

Poly Scalar::as_poly() const {
    return fun_ ? num_ : Poly(rat_);
}

void Scalar::canonicalize() {
    if (!fun_) return;
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        fun_ = false;
        rat_ = 0;
        num_ = Poly();
        den_ = Poly();
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
    }
    // monic denominator
    Rat lead = den_.lead();
    if (lead != 1) {
        for (auto& x : den_.c) x /= lead;
        for (auto& x : num_.c) x /= lead;
    }
    if (num_.is_constant() && den_.is_constant()) {
        rat_ = num_.constant_value();  // den is monic constant = 1
        fun_ = false;
        num_ = Poly();
        den_ = Poly();
    }
}

bool Scalar::is_positive_integer() const {
    return !fun_ && rat_is_positive_integer(rat_);
}

const Rat& Scalar::rational() const {
    if (fun_) throw std::logic_error("Scalar is not rational");
    return rat_;
}

int Scalar::total_degree() const {
    return fun_ ? num_.degree() + den_.degree() : 0;
}

Rat Scalar::eval(const Rat& r) const {
    if (!fun_) return rat_;
    Rat d = den_.eval(r);
    if (d == 0) throw std::domain_error("denominator vanishes at r = " + rat_str(r));
    return num_.eval(r) / d;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (!fun_ && !o.fun_) return Scalar(rat_ + o.rat_);
    Poly an = as_poly(), ad = fun_ ? den_ : Poly(Rat(1));
    Poly bn = o.as_poly(), bd = o.fun_ ? o.den_ : Poly(Rat(1));
    return fraction(an * bd + bn * ad, ad * bd);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (!fun_ && !o.fun_) return Scalar(rat_ * o.rat_);
    Poly an = as_poly(), ad = fun_ ? den_ : Poly(Rat(1));
    Poly bn = o.as_poly(), bd = o.fun_ ? o.den_ : Poly(Rat(1));
    return fraction(an * bn, ad * bd);
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    if (!fun_) return Scalar(-rat_);
    Scalar s = *this;
    for (auto& x : s.num_.c) x = -x;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (!fun_) return Scalar(Rat(1) / rat_);
    return fraction(den_, num_);
}

bool Scalar::operator==(const Scalar& o) const {
    if (fun_ != o.fun_) return false;
    if (!fun_) return rat_ == o.rat_;
    return num_ == o.num_ && den_ == o.den_;
}

bool Scalar::operator<(const Scalar& o) const {
    // canonical forms make a lexicographic comparison a total order
    if (fun_ != o.fun_) return !fun_;
    if (!fun_) return rat_ < o.rat_;
    if (num_.c != o.num_.c) return num_.c < o.num_.c;
    return den_.c < o.den_.c;
}

std::string Scalar::str() const {
    if (!fun_) return rat_str(rat_);
    bool num_sum = false;
    {
        int terms = 0;
        for (const auto& x : num_.c)
            if (x != 0) ++terms;
        num_sum = terms > 1;
    }
    int den_terms = 0;
    for (const auto& x : den_.c)
        if (x != 0) ++den_terms;

    std::string ns = num_.str();
    if (den_.is_constant()) return ns;  // monic constant denominator is 1
    if (num_sum) ns = "(" + ns + ")";
    std::string ds = den_.str();
    if (den_terms > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

std::string scalar_row_str(const std::vector<Scalar>& row) {
    std::string out = "(";
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += ", ";
        out += row[i].str();
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// Parser.  Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/')? factor)*        (implicit multiplication)
//   factor := '-'* atom ('^' nat)?
//   atom   := nat | 'r' | '(' expr ')'
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("scalar parse error at position " + std::to_string(pos) +
                                    ": " + what);
    }

    bool atom_ahead() {
        skip();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'r' || c == '(';
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        while (true) {
            if (eat('+'))
                v = v + parse_term();
            else if (eat('-'))
                v = v - parse_term();
            else
                break;
        }
        return v;
    }

    Scalar parse_term() {
        Scalar v = parse_factor();
        while (true) {
            if (eat('*'))
                v = v * parse_factor();
            else if (eat('/'))
                v = v / parse_factor();
            else if (atom_ahead())
                v = v * parse_factor();  // "2r", "2(r+1)"
            else
                break;
        }
        return v;
    }

    Scalar parse_factor() {
        int sign = 1;
        while (eat('-')) sign = -sign;
        Scalar v = parse_atom();
        if (eat('^')) {
            long e = parse_nat();
            Scalar p(1);
            for (long i = 0; i < e; ++i) p = p * v;
            v = p;
        }
        return sign < 0 ? -v : v;
    }

    Scalar parse_atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == 'r') {
            ++pos;
            return Scalar::variable();
        }
        if (c == '(') {
            ++pos;
            Scalar v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rat(Int(parse_digits())));
        fail("expected number, 'r' or '('");
    }

    long parse_nat() {
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected exponent");
        return std::stol(parse_digits());
    }

    std::string parse_digits() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return s.substr(start, pos - start);
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    Parser p(text);
    Scalar v = p.parse_expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace arr
