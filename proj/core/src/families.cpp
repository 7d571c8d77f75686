#include "cftor/families.hpp"

namespace cftor {

SexticFamily flynn_family() {
    SexticFamily fam;
    fam.param_name = "t";
    fam.coeff[6] = Poly::one();
    fam.coeff[5] = Poly::constant(Rational(2));
    fam.coeff[4] = parse_poly("2*x+3");
    fam.coeff[3] = Poly::constant(Rational(2));
    fam.coeff[2] = parse_poly("x^2+1");
    fam.coeff[1] = parse_poly("-2*x^2+2*x");
    fam.coeff[0] = parse_poly("x^2");
    return fam;
}

Poly flynn_curve(const Rational& t) { return flynn_family().at(t); }

SexticFamily g_family() {
    SexticFamily fam;
    fam.param_name = "u";
    fam.coeff[6] = Poly::one();
    fam.coeff[5] = Poly::constant(Rational(-4));
    fam.coeff[4] = parse_poly("8*x+8");
    fam.coeff[3] = parse_poly("-32*x-10");
    fam.coeff[2] = parse_poly("16*x^2+48*x+8");
    fam.coeff[1] = parse_poly("-64*x^2-24*x-4");
    fam.coeff[0] = parse_poly("64*x^2+1");
    return fam;
}

Poly g_curve(const Rational& u) { return g_family().at(u); }

SexticFamily h_family() {
    SexticFamily fam;
    fam.param_name = "s";
    fam.coeff[6] = Poly::one();
    fam.coeff[5] = Poly::one();
    fam.coeff[4] = Poly::x();
    fam.coeff[3] = Poly::one();
    fam.coeff[2] = Poly::one();
    fam.coeff[1] = Poly::one();
    fam.coeff[0] = Poly::one();
    return fam;
}

Poly h_curve(const Rational& s) { return h_family().at(s); }

std::vector<Poly> flynn_trivial_factors() {
    return {parse_poly("16*x^3+432*x^2-104*x+9"), parse_poly("4*x^3+56*x^2-16*x+3")};
}

} // namespace cftor
