#include "cftor/igusa.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>

namespace cftor {

namespace {

// ---------------------------------------------------------------------------
// Fast polynomial arithmetic in exactly six variables (the curve roots),
// used only to generate the invariant formulas once.
// Exponent vectors are packed into a 64-bit key, root 0 most significant, so
// numeric comparison is lexicographic comparison of exponent vectors.
using Key = std::uint64_t;

Key pack(const std::array<int, 6>& e) {
    Key k = 0;
    for (int i = 0; i < 6; ++i) k = (k << 8) | static_cast<Key>(e[static_cast<size_t>(i)]);
    return k;
}

std::array<int, 6> unpack(Key k) {
    std::array<int, 6> e{};
    for (int i = 5; i >= 0; --i) {
        e[static_cast<size_t>(i)] = static_cast<int>(k & 0xff);
        k >>= 8;
    }
    return e;
}

struct RootPoly {
    // descending keys: begin() is the lexicographically leading term
    std::map<Key, Rational, std::greater<Key>> t;

    void add(Key k, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = t.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
    RootPoly operator*(const RootPoly& o) const {
        RootPoly out;
        for (const auto& [ka, ca] : t)
            for (const auto& [kb, cb] : o.t) out.add(ka + kb, ca * cb);
        return out;
    }
    RootPoly& operator-=(const RootPoly& o) {
        for (const auto& [k, c] : o.t) add(k, -c);
        return *this;
    }
    static RootPoly var(int i) {
        std::array<int, 6> e{};
        e[static_cast<size_t>(i)] = 1;
        RootPoly p;
        p.add(pack(e), Rational(1));
        return p;
    }
    static RootPoly constant(const Rational& c) {
        RootPoly p;
        p.add(0, c);
        return p;
    }
};

// difference alpha_i - alpha_j
RootPoly root_diff(int i, int j) {
    RootPoly p = RootPoly::var(i);
    p -= RootPoly::var(j);
    return p;
}

// elementary symmetric polynomials e_1..e_6 of the six roots
const std::array<RootPoly, 7>& elementary_polys() {
    static const std::array<RootPoly, 7> es = [] {
        std::array<RootPoly, 7> out;
        out[0] = RootPoly::constant(Rational(1));
        // build prod (1 + alpha_i z) layer by layer; out[k] = z^k coefficient
        std::vector<RootPoly> acc = {RootPoly::constant(Rational(1))};
        for (int i = 0; i < 6; ++i) {
            std::vector<RootPoly> next(acc.size() + 1);
            for (size_t d = 0; d < acc.size(); ++d) {
                for (const auto& [k, c] : acc[d].t) next[d].add(k, c);
                RootPoly shifted = acc[d] * RootPoly::var(i);
                for (const auto& [k, c] : shifted.t) next[d + 1].add(k, c);
            }
            acc = std::move(next);
        }
        for (int k = 1; k <= 6; ++k) out[static_cast<size_t>(k)] = acc[static_cast<size_t>(k)];
        return out;
    }();
    return es;
}

// One invariant formula: sum of c * prod e_i^{mu_i}.
using Formula = std::vector<std::pair<std::array<int, 6>, Rational>>;

// Rewrites a symmetric RootPoly in terms of e_1..e_6 by repeatedly removing
// the lexicographically leading term.
Formula reduce_to_elementary(RootPoly p) {
    Formula out;
    std::map<std::array<int, 6>, RootPoly> cache;
    while (!p.t.empty()) {
        auto [key, coeff] = *p.t.begin();
        std::array<int, 6> lambda = unpack(key);
        for (int i = 0; i < 5; ++i)
            if (lambda[static_cast<size_t>(i)] < lambda[static_cast<size_t>(i + 1)])
                throw NotSymmetricError("leading exponents not weakly decreasing");
        std::array<int, 6> mu{};
        for (int i = 0; i < 6; ++i)
            mu[static_cast<size_t>(i)] =
                lambda[static_cast<size_t>(i)] - (i < 5 ? lambda[static_cast<size_t>(i + 1)] : 0);
        auto it = cache.find(mu);
        if (it == cache.end()) {
            RootPoly prod = RootPoly::constant(Rational(1));
            for (int i = 0; i < 6; ++i)
                for (int k = 0; k < mu[static_cast<size_t>(i)]; ++k)
                    prod = prod * elementary_polys()[static_cast<size_t>(i + 1)];
            it = cache.emplace(mu, std::move(prod)).first;
        }
        RootPoly scaled;
        for (const auto& [k, c] : it->second.t) scaled.add(k, c * coeff);
        p -= scaled;
        out.emplace_back(mu, coeff);
    }
    return out;
}

// ---------------------------------------------------------------------------
// The three classical genus-2 invariant formulas, generated once:
//   A: 15 pairings of the six roots into three pairs,
//   B: 10 splits into two unordered triples,
//   C: 60 = 10 splits x 6 matchings between the triples.
struct InvariantFormulas {
    Formula A, B, C;
};

RootPoly squared_diff_product(const std::vector<std::pair<int, int>>& pairs) {
    RootPoly p = RootPoly::constant(Rational(1));
    for (auto [i, j] : pairs) {
        RootPoly d = root_diff(i, j);
        p = p * d * d;
    }
    return p;
}

const InvariantFormulas& invariant_formulas() {
    static const InvariantFormulas fs = [] {
        InvariantFormulas out;

        // all partitions of {0..5} into three unordered pairs
        RootPoly sumA;
        std::vector<int> rest = {1, 2, 3, 4, 5};
        for (int a = 0; a < 5; ++a) {
            int pa = rest[static_cast<size_t>(a)];
            std::vector<int> r2;
            for (int v : rest)
                if (v != pa) r2.push_back(v);
            for (int b = 1; b < 4; ++b) {
                int pb = r2[static_cast<size_t>(b)];
                std::vector<int> r3;
                for (int v : r2)
                    if (v != pb && v != r2[0]) r3.push_back(v);
                RootPoly term = squared_diff_product({{0, pa}, {r2[0], pb}, {r3[0], r3[1]}});
                for (const auto& [k, c] : term.t) sumA.add(k, c);
            }
        }
        out.A = reduce_to_elementary(sumA);

        // splits into two triples (10, fixing root 0 in the first triple)
        RootPoly sumB, sumC;
        for (int i = 1; i < 6; ++i) {
            for (int j = i + 1; j < 6; ++j) {
                std::array<int, 3> t1 = {0, i, j};
                std::array<int, 3> t2{};
                int idx = 0;
                for (int v = 1; v < 6; ++v)
                    if (v != i && v != j) t2[static_cast<size_t>(idx++)] = v;
                RootPoly inner =
                    squared_diff_product({{t1[0], t1[1]}, {t1[1], t1[2]}, {t1[2], t1[0]},
                                          {t2[0], t2[1]}, {t2[1], t2[2]}, {t2[2], t2[0]}});
                for (const auto& [k, c] : inner.t) sumB.add(k, c);
                // six matchings of t1 against t2
                std::array<int, 3> perm = {0, 1, 2};
                std::sort(perm.begin(), perm.end());
                do {
                    RootPoly cross = squared_diff_product(
                        {{t1[0], t2[static_cast<size_t>(perm[0])]},
                         {t1[1], t2[static_cast<size_t>(perm[1])]},
                         {t1[2], t2[static_cast<size_t>(perm[2])]}});
                    RootPoly term = inner * cross;
                    for (const auto& [k, c] : term.t) sumC.add(k, c);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
        out.B = reduce_to_elementary(sumB);
        out.C = reduce_to_elementary(sumC);
        return out;
    }();
    return fs;
}

// Evaluates a formula with e_i = (-1)^i u_i / u_0 and overall factor u_0^w,
// generically over a coefficient ring R (exact rationals or polynomials in a
// parameter). u[i] is the coefficient of x^{6-i}.
template <typename R>
R evaluate_formula(const Formula& formula, const std::array<R, 7>& u, int w, const R& one) {
    R acc = Rational(0) * one;
    for (const auto& [mu, c] : formula) {
        R term = c * one;
        int total = 0;
        for (int i = 0; i < 6; ++i) {
            int e = mu[static_cast<size_t>(i)];
            total += e;
            for (int k = 0; k < e; ++k) {
                term = term * u[static_cast<size_t>(i + 1)];
                if ((i + 1) % 2 == 1) term = Rational(-1) * term;
            }
        }
        if (total > w) throw InternalError("invariant formula exceeds its coefficient weight");
        for (int k = 0; k < w - total; ++k) term = term * u[0];
        acc += term;
    }
    return acc;
}

std::array<Rational, 7> descending_coeffs(const Poly& f) {
    std::array<Rational, 7> u;
    for (int i = 0; i <= 6; ++i) u[static_cast<size_t>(i)] = f.coeff(6 - i);
    return u;
}

} // namespace

MultiPoly symmetric_reduce(const MultiPoly& expr, const std::array<VarId, 6>& roots) {
    // symmetry check via the generators of the permutation group
    auto permute = [&](const MultiPoly& p, const std::array<int, 6>& sigma) {
        MultiPoly out;
        for (const auto& [mono, c] : p.terms()) {
            Monomial m;
            for (const auto& [var, e] : mono.factors()) {
                int slot = -1;
                for (int i = 0; i < 6; ++i)
                    if (roots[static_cast<size_t>(i)] == var) slot = i;
                VarId target =
                    (slot < 0) ? var : roots[static_cast<size_t>(sigma[static_cast<size_t>(slot)])];
                m = m * Monomial::var(target, e);
            }
            out += MultiPoly::monomial(c, m);
        }
        return out;
    };
    if (permute(expr, {1, 0, 2, 3, 4, 5}) != expr || permute(expr, {1, 2, 3, 4, 5, 0}) != expr)
        throw NotSymmetricError("expression is not symmetric in the six roots");

    RootPoly p;
    for (const auto& [mono, c] : expr.terms()) {
        std::array<int, 6> e{};
        for (const auto& [var, exp] : mono.factors()) {
            int slot = -1;
            for (int i = 0; i < 6; ++i)
                if (roots[static_cast<size_t>(i)] == var) slot = i;
            if (slot < 0) throw NotSymmetricError("expression contains a non-root variable");
            if (exp > 255) throw Error("exponent too large for symmetric reduction");
            e[static_cast<size_t>(slot)] = exp;
        }
        p.add(pack(e), c);
    }

    Formula formula = reduce_to_elementary(std::move(p));
    MultiPoly out;
    for (const auto& [mu, c] : formula) {
        Monomial m;
        for (int i = 0; i < 6; ++i)
            if (mu[static_cast<size_t>(i)] > 0)
                m = m * Monomial::var(VarTable::intern("e" + std::to_string(i + 1)),
                                      mu[static_cast<size_t>(i)]);
        out += MultiPoly::monomial(c, m);
    }
    return out;
}

std::array<Rational, 4> igusa_ABCD(const Poly& sextic) {
    if (sextic.degree() != 6) throw NotSexticError("invariants require a degree-6 polynomial");
    const auto& fs = invariant_formulas();
    auto u = descending_coeffs(sextic);
    Rational one(1);
    Rational A = evaluate_formula(fs.A, u, 2, one);
    Rational B = evaluate_formula(fs.B, u, 4, one);
    Rational C = evaluate_formula(fs.C, u, 6, one);
    Rational D = -resultant(sextic, derivative(sextic)) / sextic.lc();
    return {A, B, C, D};
}

IgusaInvariants igusa_j(const Poly& sextic) {
    auto [A, B, C, D] = igusa_ABCD(sextic);
    if (D == 0) throw SingularCurveError("discriminant vanishes");
    IgusaInvariants inv;
    inv.A = A;
    inv.B = B;
    inv.C = C;
    inv.D = D;
    inv.j1 = rational_pow(A, 5) / D;
    inv.j2 = rational_pow(A, 3) * B / D;
    inv.j3 = rational_pow(A, 2) * C / D;
    return inv;
}

Poly SexticFamily::at(const Rational& t) const {
    std::vector<Rational> cs(7);
    for (int i = 0; i <= 6; ++i) cs[static_cast<size_t>(i)] = coeff[static_cast<size_t>(i)].eval(t);
    return Poly(std::move(cs));
}

std::array<Poly, 4> igusa_ABCD_family(const SexticFamily& fam) {
    const auto& fs = invariant_formulas();
    std::array<Poly, 7> u;
    int max_param_deg = 0;
    for (int i = 0; i <= 6; ++i) {
        u[static_cast<size_t>(i)] = fam.coeff[static_cast<size_t>(6 - i)];
        max_param_deg = std::max(max_param_deg,
                                 std::max(0, u[static_cast<size_t>(i)].degree()));
    }
    Poly one = Poly::one();
    Poly A = evaluate_formula(fs.A, u, 2, one);
    Poly B = evaluate_formula(fs.B, u, 4, one);
    Poly C = evaluate_formula(fs.C, u, 6, one);

    // D(t) by evaluation/interpolation: D is weight-10 in the coefficients
    int bound = 10 * max_param_deg;
    std::vector<std::pair<Rational, Rational>> samples;
    for (int k = 0; static_cast<int>(samples.size()) <= bound; ++k) {
        Rational t0 = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k / 2 + 1));
        if (fam.coeff[6].eval(t0) == 0) continue; // keep the model a true sextic
        Poly f = fam.at(t0);
        samples.emplace_back(t0, -resultant(f, derivative(f)) / f.lc());
    }
    Poly D = interpolate(samples);
    return {A, B, C, D};
}

namespace {

// j-invariant numerators (A^5, A^3 B, A^4 C) and the shared denominator D.
struct FamilyInvariantData {
    std::array<Poly, 3> num;
    Poly den;
};

FamilyInvariantData family_invariants(const SexticFamily& fam) {
    auto [A, B, C, D] = igusa_ABCD_family(fam);
    FamilyInvariantData d;
    d.num[0] = poly_pow(A, 5);
    d.num[1] = poly_pow(A, 3) * B;
    d.num[2] = poly_pow(A, 2) * C;
    d.den = D;
    if (d.den.is_zero()) throw DegenerateFamilyError("discriminant vanishes identically");
    for (int k = 0; k < 3; ++k) {
        // j_k constant in the parameter <=> num_k is a constant multiple of D
        Poly g = poly_gcd(d.num[static_cast<size_t>(k)].is_zero() ? d.den
                                                                  : d.num[static_cast<size_t>(k)],
                          d.den);
        bool constant_j =
            d.num[static_cast<size_t>(k)].is_zero() ||
            (d.num[static_cast<size_t>(k)].degree() == d.den.degree() && g.degree() == d.den.degree());
        if (constant_j)
            throw DegenerateFamilyError("j-invariant " + std::to_string(k + 1) +
                                        " is constant in the parameter");
    }
    return d;
}

// ---- modular gcd certificate ------------------------------------------------
// gcd(f mod p, g mod p) constant (with p dividing neither leading coefficient)
// proves that gcd(f, g) over the rationals is constant: the primitive integer
// gcd divides both inputs in Z[x], its leading coefficient divides theirs, so
// its image mod p keeps full degree and divides the modular gcd.

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::optional<std::vector<std::uint64_t>> reduce_mod(const Poly& f, std::uint64_t prime) {
    Integer p(prime);
    std::vector<std::uint64_t> out;
    for (const auto& c : f.coeffs()) {
        Integer num = numerator(c) % p;
        if (num < 0) num += p;
        Integer den = denominator(c) % p;
        if (den == 0) return std::nullopt;
        std::uint64_t inv = pow_mod(den.convert_to<std::uint64_t>(), prime - 2, prime);
        out.push_back(num.convert_to<std::uint64_t>() * inv % prime);
    }
    if (!out.empty() && out.back() == 0) return std::nullopt; // lost the degree
    return out;
}

int modular_gcd_degree(const Poly& f, const Poly& g) {
    // primes below 2^31 so products fit in 64 bits
    for (std::uint64_t prime : {2147483647ull, 2147483629ull, 2147483587ull, 2147483579ull}) {
        auto ra = reduce_mod(f, prime), rb = reduce_mod(g, prime);
        if (!ra || !rb) continue;
        auto a = *ra, b = *rb;
        while (!b.empty()) {
            std::uint64_t lead_inv = pow_mod(b.back(), prime - 2, prime);
            while (a.size() >= b.size()) {
                std::uint64_t q = a.back() * lead_inv % prime;
                size_t off = a.size() - b.size();
                for (size_t i = 0; i < b.size(); ++i) {
                    std::uint64_t sub = q * b[i] % prime;
                    a[off + i] = (a[off + i] + prime - sub) % prime;
                }
                while (!a.empty() && a.back() == 0) a.pop_back();
                if (a.empty()) break;
            }
            std::swap(a, b);
        }
        return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
    }
    throw InternalError("no usable prime for the modular gcd certificate");
}

// strips factor^k to full multiplicity, returns k
int strip_factor(Poly& p, const Poly& factor) {
    int k = 0;
    while (true) {
        auto [q, r] = poly_divrem(p, factor);
        if (!r.is_zero() || q.is_zero()) break;
        p = q;
        ++k;
    }
    return k;
}

// Resultant with respect to u of two bivariate polynomials given as
// u-coefficient lists of Polys in t, by evaluation/interpolation.
Poly bivariate_resultant(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    auto deg_t = [](const std::vector<Poly>& f) {
        int d = 0;
        for (const auto& c : f) d = std::max(d, std::max(0, c.degree()));
        return d;
    };
    const int du_a = static_cast<int>(a.size()) - 1, du_b = static_cast<int>(b.size()) - 1;
    const int bound = du_b * deg_t(a) + du_a * deg_t(b);
    std::vector<std::pair<Rational, Rational>> samples;
    for (int k = 0; static_cast<int>(samples.size()) <= bound; ++k) {
        Rational t0 = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k / 2 + 1));
        if (a.back().eval(t0) == 0 || b.back().eval(t0) == 0) continue;
        auto specialize = [&](const std::vector<Poly>& f) {
            std::vector<Rational> cs;
            for (const auto& c : f) cs.push_back(c.eval(t0));
            return Poly(std::move(cs));
        };
        samples.emplace_back(t0, resultant(specialize(a), specialize(b)));
    }
    return interpolate(samples);
}

} // namespace

std::string DistinguishReport::to_string() const {
    std::ostringstream out;
    out << "verdict: " << (verdict == FamilyVerdict::Disjoint ? "DISJOINT" : "OVERLAP") << "\n";
    for (const auto& [t, u] : witnesses)
        out << "witness: t=" << cftor::to_string(t) << " u=" << cftor::to_string(u) << "\n";
    for (const auto& [name, mult] : stripped)
        out << "stripped: (" << name << ")^" << mult << "\n";
    for (const auto& d : details) out << "note: " << d << "\n";
    return out.str();
}

DistinguishReport distinguish_families(const SexticFamily& F, const SexticFamily& G,
                                       const std::vector<Poly>& trivial_factors,
                                       bool full_symbolic) {
    FamilyInvariantData fd = family_invariants(F);
    FamilyInvariantData gd = family_invariants(G);
    DistinguishReport report;

    if (!full_symbolic) {
        const std::vector<Rational> t_samples = {Rational(1), Rational(2), Rational(-1),
                                                 Rational(1) / Rational(3), Rational(5)};
        for (const Rational& t0 : t_samples) {
            Rational Dt = fd.den.eval(t0);
            if (Dt == 0) {
                report.details.push_back("skipped singular sample t=" + cftor::to_string(t0));
                continue;
            }
            // specialized numerators of j_k(t0) - j_k(u)
            std::array<Poly, 3> n;
            for (int k = 0; k < 3; ++k) {
                Rational jk = fd.num[static_cast<size_t>(k)].eval(t0) / Dt;
                n[static_cast<size_t>(k)] = jk * gd.den - gd.num[static_cast<size_t>(k)];
            }
            Poly g;
            bool any = false;
            for (const auto& nk : n) {
                if (nk.is_zero()) continue;
                g = any ? poly_gcd(g, nk) : nk / nk.lc();
                any = true;
            }
            if (!any) {
                report.verdict = FamilyVerdict::Overlap;
                report.details.push_back("all specialized numerators vanish at t=" +
                                         cftor::to_string(t0));
                continue;
            }
            if (g.degree() == 0) {
                report.details.push_back("no matching u for t=" + cftor::to_string(t0) +
                                         " (gcd constant)");
                continue;
            }
            report.verdict = FamilyVerdict::Overlap;
            bool found = false;
            auto try_match = [&](const Rational& u0) {
                if (g.eval(u0) != 0 || gd.den.eval(u0) == 0) return;
                for (const auto& [wt, wu] : report.witnesses)
                    if (wt == t0 && wu == u0) return;
                for (int k = 0; k < 3; ++k)
                    if (n[static_cast<size_t>(k)].eval(u0) != 0) return;
                report.witnesses.emplace_back(t0, u0);
                found = true;
            };
            // cheap candidates first; full rational-root search only as backup
            for (const Rational& u0 :
                 {t0, Rational(1), Rational(2), Rational(-1), Rational(1) / 2, Rational(-2),
                  Rational(3), Rational(1) / 3, Rational(5)})
                try_match(u0);
            if (!found)
                for (const Rational& u0 : rational_roots(g)) try_match(u0);
            if (!found)
                report.details.push_back("common root over an extension field at t=" +
                                         cftor::to_string(t0));
        }
        return report;
    }

    // full symbolic path: res_u of the bivariate j-difference numerators
    auto difference_numerator = [&](int k) {
        // n_k(t,u) = numF_k(t) D_G(u) - D_F(t) numG_k(u), as u-coefficients
        size_t width = static_cast<size_t>(
            std::max(gd.den.degree(), gd.num[static_cast<size_t>(k)].degree()) + 1);
        std::vector<Poly> out(width);
        for (size_t j = 0; j < width; ++j)
            out[j] = fd.num[static_cast<size_t>(k)] * gd.den.coeff(static_cast<int>(j)) -
                     fd.den * gd.num[static_cast<size_t>(k)].coeff(static_cast<int>(j));
        while (out.size() > 1 && out.back().is_zero()) out.pop_back();
        return out;
    };
    auto n1 = difference_numerator(0), n2 = difference_numerator(1), n3 = difference_numerator(2);
    Poly res12 = bivariate_resultant(n1, n2);
    Poly res13 = bivariate_resultant(n1, n3);
    if (res12.is_zero() || res13.is_zero()) {
        report.verdict = FamilyVerdict::Overlap;
        report.details.push_back("resultant vanishes identically (shared component)");
        return report;
    }
    std::vector<Poly> factors = trivial_factors;
    factors.insert(factors.begin(), Poly::x()); // powers of the parameter itself
    for (const auto& fac : factors) {
        int m12 = strip_factor(res12, fac);
        int m13 = strip_factor(res13, fac);
        report.stripped.emplace_back(to_expr_string(fac, F.param_name) + " in res12", m12);
        report.stripped.emplace_back(to_expr_string(fac, F.param_name) + " in res13", m13);
    }
    // integer content gcd (a huge constant) and modular coprimality
    auto content_int = [](const Poly& p) -> Integer {
        Integer den_lcm(1);
        for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, denominator(c));
        Integer g(0);
        for (const auto& c : p.coeffs()) g = gcd(g, Integer(numerator(c * Rational(den_lcm))));
        return abs(g);
    };
    Integer c12 = content_int(res12), c13 = content_int(res13);
    Integer shared_content = gcd(c12, c13);
    report.details.push_back("gcd of integer contents has " +
                             std::to_string(shared_content.str().size()) + " digits");
    int gcd_deg = modular_gcd_degree(res12, res13);
    if (gcd_deg <= 0) {
        report.verdict = FamilyVerdict::Disjoint;
        report.details.push_back("stripped resultants are coprime (modular certificate)");
    } else {
        report.verdict = FamilyVerdict::Overlap;
        Poly g = poly_gcd(res12, res13);
        for (const Rational& u0 : rational_roots(g)) report.witnesses.emplace_back(u0, u0);
        report.details.push_back("nonconstant gcd of degree >= " + std::to_string(gcd_deg));
    }
    return report;
}

} // namespace cftor
