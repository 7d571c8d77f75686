#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cftor/rational.hpp"

namespace cftor {

/// Interned variable identifier; names are process-global and thread-safe.
using VarId = int;

class VarTable {
public:
    static VarId intern(const std::string& name);
    static std::string name(VarId id);
};

/// Product of variable powers, exponents > 0, factors sorted by VarId.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(VarId v, int e = 1);

    bool is_unit() const { return f_.empty(); }
    int degree_in(VarId v) const;
    int total_degree() const;
    const std::vector<std::pair<VarId, int>>& factors() const { return f_; }

    Monomial operator*(const Monomial& o) const;
    /// this / o when o divides this, else nullopt.
    std::optional<Monomial> divide(const Monomial& o) const;

    /// Graded lexicographic monomial order (total degree, then exponent
    /// vectors; compatible with multiplication, as division requires).
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return f_ == o.f_; }
    std::string to_string() const;

private:
    std::vector<std::pair<VarId, int>> f_;
};

/// Sparse multivariate polynomial over Rational.
class MultiPoly {
public:
    MultiPoly() = default;
    static MultiPoly constant(Rational c);
    static MultiPoly variable(VarId v);
    static MultiPoly monomial(Rational c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value when is_constant() (zero polynomial gives 0).
    Rational constant_value() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b, a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b, a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    int degree_in(VarId v) const;
    bool contains(VarId v) const { return degree_in(v) > 0; }
    std::vector<VarId> variables() const;
    /// Coefficient of v^k, as a polynomial in the remaining variables.
    MultiPoly coeff_of(VarId v, int k) const;

    /// Gcd of the absolute coefficient values (1 for convenience when zero).
    Rational content() const;
    /// Largest monomial dividing every term (unit for the zero polynomial).
    Monomial monomial_content() const;
    /// Division by a monomial that divides every term.
    MultiPoly divide_by(const Monomial& m) const;
    MultiPoly divide_by(const Rational& c) const;

    /// Exact multivariate division; nullopt when not divisible.
    static std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den);

    /// Full evaluation; every variable present must be assigned.
    Rational eval(const std::map<VarId, Rational>& values) const;

    std::string to_string() const;

private:
    std::map<Monomial, Rational> terms_;
    void add_term(const Monomial& m, const Rational& c);
};

MultiPoly multi_pow(const MultiPoly& p, unsigned e);

/// Quotient of two MultiPoly values, kept normalized: rational and monomial
/// content common to numerator and denominator is cancelled, exact division
/// is attempted, the denominator's leading coefficient is made 1.
struct MultiFraction {
    MultiPoly num;
    MultiPoly den = MultiPoly::constant(Rational(1));

    static MultiFraction of(MultiPoly n, MultiPoly d);
    static MultiFraction constant(Rational c) {
        return MultiFraction{MultiPoly::constant(std::move(c)), MultiPoly::constant(Rational(1))};
    }
    static MultiFraction variable(VarId v) {
        return MultiFraction{MultiPoly::variable(v), MultiPoly::constant(Rational(1))};
    }

    bool is_zero() const { return num.is_zero(); }
    MultiFraction operator-() const;
    MultiFraction operator+(const MultiFraction& o) const;
    MultiFraction operator-(const MultiFraction& o) const;
    MultiFraction operator*(const MultiFraction& o) const;
    MultiFraction operator/(const MultiFraction& o) const;
    /// Mathematical equality (cross multiplication).
    bool equivalent(const MultiFraction& o) const;

    std::string to_string() const;
};

/// Substitutes value for v in p; the result is a fraction with denominator a
/// power of value.den.
MultiFraction substitute(const MultiPoly& p, VarId v, const MultiFraction& value);

/// Substitutes every variable that appears in `env` (variables absent from
/// env are left symbolic).
MultiFraction substitute_all(const MultiPoly& p, const std::map<VarId, MultiFraction>& env);
MultiFraction substitute_all(const MultiFraction& f, const std::map<VarId, MultiFraction>& env);

} // namespace cftor
