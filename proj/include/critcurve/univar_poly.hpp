#ifndef CRITCURVE_UNIVAR_POLY_HPP
#define CRITCURVE_UNIVAR_POLY_HPP

#include "critcurve/bivar_poly.hpp"

#include <string>
#include <vector>

namespace critcurve {

/// Exact integer polynomial in one indeterminate X; coeffs[k] is the
/// coefficient of X^k, leading coefficient nonzero (zero poly is empty).
struct UnivarPoly {
    std::vector<Int> coeffs;

    UnivarPoly() = default;
    explicit UnivarPoly(std::vector<Int> cs) : coeffs(std::move(cs)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Int coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[static_cast<std::size_t>(k)] : Int(0);
    }

    UnivarPoly operator+(const UnivarPoly& o) const;
    UnivarPoly operator-(const UnivarPoly& o) const;
    UnivarPoly operator*(const UnivarPoly& o) const;
    bool operator==(const UnivarPoly& o) const { return coeffs == o.coeffs; }
    bool operator!=(const UnivarPoly& o) const { return coeffs != o.coeffs; }

    double eval(double x) const;

    std::string to_string(const std::string& var = "X") const;
};

/// Exact division; throws if the remainder is nonzero.
UnivarPoly divexact(const UnivarPoly& num, const UnivarPoly& den);

/// U_{-1} = -1, U_0 = 0, U_{n+1} = X U_n - U_{n-1}; degree n-1 for n >= 1.
UnivarPoly chebyshev_u(int n);

/// n-th cyclotomic polynomial, computed by iterated exact division of x^n - 1.
UnivarPoly cyclotomic(int n);

/// Psi_1 = X-2, Psi_2 = X+2; for n >= 3 the monic polynomial of degree
/// phi(n)/2 whose roots are 2cos(2 pi k/n) with gcd(k, n) = 1, obtained from
/// the cyclotomic polynomial via X = x + 1/x.
UnivarPoly psi(int n);

/// All real roots (ascending, multiplicity collapsed) found by recursive
/// derivative-based isolation + bisection.  Intended for the modest degrees
/// of asymptote polynomials.
std::vector<double> real_roots(const UnivarPoly& p);

} // namespace critcurve

#endif
