#include "cftor/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cftor {

Poly::Poly(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(Rational c) {
    Poly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(Rational c, int power) {
    Poly p;
    if (c != 0) {
        if (power < 0) throw Error("monomial power must be non-negative");
        p.coeffs_.assign(static_cast<size_t>(power) + 1, Rational(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

Rational Poly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& Poly::lc() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s == 0) return Poly();
    Poly r = p;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Poly operator/(const Poly& p, const Rational& s) {
    if (s == 0) throw DivisionByZero("polynomial divided by zero scalar");
    Poly r = p;
    for (auto& c : r.coeffs_) c /= s;
    return r;
}

Rational Poly::eval(const Rational& x0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly r = a, q;
    const int db = b.degree();
    const Rational& blc = b.lc();
    while (!r.is_zero() && r.degree() >= db) {
        Rational c = r.lc() / blc;
        int k = r.degree() - db;
        Poly t = Poly::monomial(c, k);
        q += t;
        r -= t * b;
    }
    return {std::move(q), std::move(r)};
}

Poly poly_quo(const Poly& a, const Poly& b) { return poly_divrem(a, b).first; }
Poly poly_rem(const Poly& a, const Poly& b) { return poly_divrem(a, b).second; }

Poly poly_exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw InexactDivisionError("polynomial division left a remainder");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd of two zero polynomials");
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = poly_rem(u, v);
        u = std::move(v);
        v = std::move(r);
        // normalize to keep coefficient growth in check
        if (!v.is_zero()) v = v / v.lc();
    }
    return u / u.lc();
}

Rational resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw Error("resultant of zero polynomial");
    Poly u = a, v = b;
    Rational res(1);
    while (true) {
        int du = u.degree(), dv = v.degree();
        if (dv == 0) return res * rational_pow(v.lc(), du);
        Poly r = poly_rem(u, v);
        if (r.is_zero()) return Rational(0);
        int dr = r.degree();
        if ((du % 2) && (dv % 2)) res = -res;
        res *= rational_pow(v.lc(), du - dr);
        u = std::move(v);
        v = std::move(r);
    }
}

Poly derivative(const Poly& p) {
    if (p.degree() <= 0) return Poly();
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) c.push_back(Rational(i) * p.coeff(i));
    return Poly(std::move(c));
}

Poly poly_pow(const Poly& p, unsigned e) {
    Poly acc = Poly::one(), base = p;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Poly compose_affine(const Poly& p, const Rational& a, const Rational& b) {
    Poly lin(std::vector<Rational>{b, a});
    Poly acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * lin + Poly::constant(p.coeff(i));
    }
    return acc;
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    Poly result;
    for (size_t i = 0; i < points.size(); ++i) {
        Poly basis = Poly::one();
        Rational denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis *= Poly(std::vector<Rational>{-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        if (denom == 0) throw Error("interpolation nodes must be distinct");
        result += (points[i].second / denom) * basis;
    }
    return result;
}

std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) throw Error("rational roots of the zero polynomial");
    // Scale to integer coefficients.
    Integer lcm_den(1);
    for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, denominator(c));
    std::vector<Integer> ic;
    for (const auto& c : p.coeffs()) ic.push_back(numerator(c * Rational(lcm_den)));
    std::vector<Rational> roots;
    // strip trailing zero coefficients -> root 0
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low + 1 >= ic.size()) return roots;
    Integer a0 = abs(ic[low]), an = abs(ic.back());
    auto divisors = [](const Integer& n) {
        std::vector<Integer> ds;
        for (Integer d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        }
        return ds;
    };
    for (const auto& pnum : divisors(a0)) {
        for (const auto& qden : divisors(an)) {
            if (gcd(pnum, qden) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign * pnum);
                cand /= Rational(qden);
                if (p.eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string to_coeff_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) out += ',';
        out += to_string(p.coeff(i));
    }
    return out;
}

std::string to_expr_string(const Poly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        bool first = out.empty();
        if (c > 0 && !first) out += '+';
        std::string cs = to_string(c);
        if (i == 0) {
            out += cs;
        } else {
            if (c == 1) {
                // omit unit coefficient
            } else if (c == -1) {
                out += '-';
            } else {
                out += cs;
                out += '*';
            }
            out += var;
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

namespace {

// Recursive-descent parser for sums of terms "c", "c*x^k", "x^k", "-x", etc.
class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    Poly parse() {
        Poly result;
        skip_ws();
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
            } else if (!first) {
                throw ParseError("expected '+' or '-' in polynomial expression");
            }
            result += term(sign);
            skip_ws();
            first = false;
        }
        if (first) throw ParseError("empty polynomial expression");
        return result;
    }

private:
    std::string_view s_;
    size_t pos_ = 0;

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Rational number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a number in polynomial expression");
        Rational value{Integer(std::string(s_.substr(start, pos_ - start)))};
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == dstart) throw ParseError("expected denominator digits");
            Integer den(std::string(s_.substr(dstart, pos_ - dstart)));
            if (den == 0) throw DivisionByZero("zero denominator in coefficient");
            value /= Rational(den);
        }
        return value;
    }

    Poly term(int sign) {
        skip_ws();
        Rational coeff(sign);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= number();
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            } else if (peek() != 'x') {
                return Poly::constant(coeff);
            }
        }
        if (peek() != 'x') {
            if (have_coeff) return Poly::constant(coeff);
            throw ParseError("expected coefficient or 'x' in term");
        }
        ++pos_;
        int power = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) throw ParseError("expected exponent digits");
            power = std::stoi(std::string(s_.substr(start, pos_ - start)));
        }
        return Poly::monomial(coeff, power);
    }
};

} // namespace

Poly parse_poly(std::string_view text) {
    // Coefficient-list format iff a comma is present or the text is a bare
    // rational literal (no 'x').
    if (text.find('x') == std::string_view::npos) {
        std::vector<Rational> coeffs;
        size_t start = 0;
        while (start <= text.size()) {
            size_t comma = text.find(',', start);
            std::string_view tok = text.substr(
                start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            coeffs.push_back(parse_rational(tok));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return Poly(std::move(coeffs));
    }
    return ExprParser(text).parse();
}

} // namespace cftor
