#include "cftor/multipoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace cftor {

namespace {
struct VarRegistry {
    std::mutex mu;
    std::unordered_map<std::string, VarId> ids;
    std::vector<std::string> names;
};
VarRegistry& registry() {
    static VarRegistry r;
    return r;
}
} // namespace

VarId VarTable::intern(const std::string& name) {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.ids.find(name);
    if (it != r.ids.end()) return it->second;
    VarId id = static_cast<VarId>(r.names.size());
    r.ids.emplace(name, id);
    r.names.push_back(name);
    return id;
}

std::string VarTable::name(VarId id) {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    if (id < 0 || static_cast<size_t>(id) >= r.names.size())
        throw Error("unknown variable id");
    return r.names[static_cast<size_t>(id)];
}

Monomial Monomial::var(VarId v, int e) {
    Monomial m;
    if (e < 0) throw Error("negative exponent in monomial");
    if (e > 0) m.f_.emplace_back(v, e);
    return m;
}

int Monomial::degree_in(VarId v) const {
    for (const auto& [var, e] : f_)
        if (var == v) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [var, e] : f_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
            out.f_.push_back(*a++);
        } else if (a == f_.end() || b->first < a->first) {
            out.f_.push_back(*b++);
        } else {
            out.f_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial out;
    auto a = f_.begin();
    for (const auto& [var, e] : o.f_) {
        while (a != f_.end() && a->first < var) out.f_.push_back(*a++);
        if (a == f_.end() || a->first != var || a->second < e) return std::nullopt;
        if (a->second > e) out.f_.emplace_back(a->first, a->second - e);
        ++a;
    }
    while (a != f_.end()) out.f_.push_back(*a++);
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    int da = total_degree(), db = o.total_degree();
    if (da != db) return da <=> db;
    auto i = f_.begin();
    auto j = o.f_.begin();
    while (i != f_.end() || j != o.f_.end()) {
        // a positive exponent at an earlier variable makes a monomial larger
        bool ia = i != f_.end(), jb = j != o.f_.end();
        if (ia && (!jb || i->first < j->first)) return std::strong_ordering::greater;
        if (jb && (!ia || j->first < i->first)) return std::strong_ordering::less;
        if (i->second != j->second) return i->second <=> j->second;
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
    if (f_.empty()) return "1";
    std::string s;
    for (const auto& [var, e] : f_) {
        if (!s.empty()) s += '*';
        s += VarTable::name(var);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::constant(Rational c) {
    MultiPoly p;
    p.add_term(Monomial(), c);
    return p;
}

MultiPoly MultiPoly::variable(VarId v) {
    MultiPoly p;
    p.add_term(Monomial::var(v), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(Rational c, Monomial m) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value of non-constant polynomial");
    return terms_.begin()->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
    if (s == 0) return MultiPoly();
    MultiPoly out = p;
    for (auto& [m, c] : out.terms_) c *= s;
    return out;
}

int MultiPoly::degree_in(VarId v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

std::vector<VarId> MultiPoly::variables() const {
    std::vector<VarId> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, e] : m.factors())
            if (std::find(vs.begin(), vs.end(), var) == vs.end()) vs.push_back(var);
    std::sort(vs.begin(), vs.end());
    return vs;
}

MultiPoly MultiPoly::coeff_of(VarId v, int k) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.degree_in(v) != k) continue;
        auto reduced = m.divide(Monomial::var(v, k));
        out.add_term(*reduced, c);
    }
    return out;
}

Rational MultiPoly::content() const {
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    if (num_gcd == 0) return Rational(1);
    Rational r(abs(num_gcd));
    r /= Rational(den_lcm);
    return r;
}

Monomial MultiPoly::monomial_content() const {
    if (terms_.empty()) return Monomial();
    Monomial acc = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        Monomial next;
        for (const auto& [var, e] : acc.factors()) {
            int d = std::min(e, m.degree_in(var));
            if (d > 0) next = next * Monomial::var(var, d);
        }
        acc = next;
        if (acc.is_unit()) break;
    }
    return acc;
}

MultiPoly MultiPoly::divide_by(const Monomial& m) const {
    MultiPoly out;
    for (const auto& [mono, c] : terms_) {
        auto q = mono.divide(m);
        if (!q) throw Error("monomial does not divide every term");
        out.add_term(*q, c);
    }
    return out;
}

MultiPoly MultiPoly::divide_by(const Rational& c) const {
    if (c == 0) throw DivisionByZero("division of polynomial by zero scalar");
    return (Rational(1) / c) * *this;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw DivisionByZero("multivariate division by zero");
    MultiPoly rem = num, quo;
    const auto& lead = *den.terms_.rbegin(); // largest monomial in map order
    while (!rem.is_zero()) {
        const auto& top = *rem.terms_.rbegin();
        auto q = top.first.divide(lead.first);
        if (!q) return std::nullopt;
        MultiPoly t = MultiPoly::monomial(top.second / lead.second, *q);
        quo += t;
        rem -= t * den;
    }
    return quo;
}

Rational MultiPoly::eval(const std::map<VarId, Rational>& values) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [var, e] : m.factors()) {
            auto it = values.find(var);
            if (it == values.end())
                throw Error("unassigned variable in evaluation: " + VarTable::name(var));
            term *= rational_pow(it->second, e);
        }
        acc += term;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print in descending monomial order for readability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (m.is_unit()) {
            out << cftor::to_string(a);
        } else {
            if (a != 1) out << cftor::to_string(a) << '*';
            out << m.to_string();
        }
        first = false;
    }
    return out.str();
}

MultiPoly multi_pow(const MultiPoly& p, unsigned e) {
    MultiPoly acc = MultiPoly::constant(Rational(1)), base = p;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

MultiFraction MultiFraction::of(MultiPoly n, MultiPoly d) {
    if (d.is_zero()) throw ZeroDenominatorError("zero denominator in symbolic fraction");
    if (n.is_zero())
        return MultiFraction{MultiPoly(), MultiPoly::constant(Rational(1))};
    // try exact division first
    if (auto q = MultiPoly::divide_exact(n, d))
        return MultiFraction{std::move(*q), MultiPoly::constant(Rational(1))};
    // cancel common monomial factor
    Monomial mn = n.monomial_content(), md = d.monomial_content();
    Monomial common;
    for (const auto& [var, e] : mn.factors()) {
        int k = std::min(e, md.degree_in(var));
        if (k > 0) common = common * Monomial::var(var, k);
    }
    if (!common.is_unit()) {
        n = n.divide_by(common);
        d = d.divide_by(common);
    }
    // scale so the denominator has leading coefficient 1
    Rational lead = d.terms().rbegin()->second;
    n = n.divide_by(lead);
    d = d.divide_by(lead);
    return MultiFraction{std::move(n), std::move(d)};
}

MultiFraction MultiFraction::operator-() const { return MultiFraction{-num, den}; }

MultiFraction MultiFraction::operator+(const MultiFraction& o) const {
    return of(num * o.den + o.num * den, den * o.den);
}

MultiFraction MultiFraction::operator-(const MultiFraction& o) const {
    return of(num * o.den - o.num * den, den * o.den);
}

MultiFraction MultiFraction::operator*(const MultiFraction& o) const {
    return of(num * o.num, den * o.den);
}

MultiFraction MultiFraction::operator/(const MultiFraction& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero symbolic fraction");
    return of(num * o.den, den * o.num);
}

bool MultiFraction::equivalent(const MultiFraction& o) const {
    return num * o.den == o.num * den;
}

std::string MultiFraction::to_string() const {
    if (den.is_constant() && den.constant_value() == 1) return num.to_string();
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

MultiFraction substitute(const MultiPoly& p, VarId v, const MultiFraction& value) {
    int d = p.degree_in(v);
    if (d == 0) return MultiFraction{p, MultiPoly::constant(Rational(1))};
    // sum_k coeff_k * num^k * den^(d-k), over den^d
    MultiPoly acc;
    for (int k = 0; k <= d; ++k) {
        MultiPoly ck = p.coeff_of(v, k);
        if (ck.is_zero()) continue;
        acc += ck * multi_pow(value.num, static_cast<unsigned>(k)) *
               multi_pow(value.den, static_cast<unsigned>(d - k));
    }
    return MultiFraction::of(std::move(acc), multi_pow(value.den, static_cast<unsigned>(d)));
}

MultiFraction substitute_all(const MultiPoly& p, const std::map<VarId, MultiFraction>& env) {
    MultiFraction acc = MultiFraction::constant(Rational(0));
    for (const auto& [m, c] : p.terms()) {
        MultiFraction term = MultiFraction::constant(c);
        for (const auto& [var, e] : m.factors()) {
            auto it = env.find(var);
            MultiFraction base =
                (it != env.end()) ? it->second : MultiFraction::variable(var);
            for (int k = 0; k < e; ++k) term = term * base;
        }
        acc = acc + term;
    }
    return acc;
}

MultiFraction substitute_all(const MultiFraction& f, const std::map<VarId, MultiFraction>& env) {
    return substitute_all(f.num, env) / substitute_all(f.den, env);
}

} // namespace cftor
