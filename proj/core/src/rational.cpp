#include "cftor/rational.hpp"

#include <cctype>

namespace cftor {

std::string to_string(const Rational& q) {
    return q.str(); // GMP canonical form already prints "p/q" or "p"
}

namespace {

Integer parse_integer(std::string_view text) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b == e) throw ParseError("empty integer token");
    std::string tok(text.substr(b, e - b));
    size_t i = 0;
    if (tok[0] == '+' || tok[0] == '-') i = 1;
    if (i == tok.size()) throw ParseError("sign without digits: '" + tok + "'");
    for (size_t k = i; k < tok.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(tok[k])))
            throw ParseError("invalid integer: '" + tok + "'");
    return Integer(tok);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DivisionByZero("zero denominator in rational literal");
    Rational r(num);
    r /= Rational(den); // division canonicalizes sign and gcd
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    return rational_nth_root(q, 2);
}

namespace {

// Exact integer n-th root: returns root if value is a perfect n-th power.
std::optional<Integer> integer_nth_root(const Integer& value, unsigned n) {
    if (value < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = integer_nth_root(-value, n);
        if (!r) return std::nullopt;
        return -*r;
    }
    mpz_t root;
    mpz_init(root);
    int exact = mpz_root(root, value.backend().data(), n);
    Integer result(root);
    mpz_clear(root);
    if (!exact) return std::nullopt;
    return result;
}

} // namespace

std::optional<Rational> rational_nth_root(const Rational& q, unsigned n) {
    if (n == 0) throw Error("zeroth root is undefined");
    auto rn = integer_nth_root(numerator(q), n);
    if (!rn) return std::nullopt;
    auto rd = integer_nth_root(denominator(q), n);
    if (!rd) return std::nullopt;
    Rational r(*rn);
    r /= Rational(*rd);
    return r;
}

Rational rational_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (x == 0) throw DivisionByZero("negative power of zero");
        return Rational(1) / rational_pow(x, -e);
    }
    Rational base = x, acc(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

} // namespace cftor
