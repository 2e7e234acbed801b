#include "critcurve/generation.hpp"

#include <cmath>
#include <stdexcept>

namespace critcurve {

double zeta(int j) {
    if (j < 1) throw std::invalid_argument("zeta: j must be >= 1");
    return 2.0 * std::cos(M_PI / static_cast<double>(j));
}

Rank1Curve rank1_curve(Letter letter, int kappa) {
    if (kappa < 2) throw std::invalid_argument("rank1_curve: kappa must be >= 2");
    Rank1Curve rc;
    rc.word = word_block(letter, kappa);
    rc.line = zeta(kappa);
    rc.letter = letter;
    rc.kappa = kappa;
    return rc;
}

AxisSpec axis_word(int kappa, int ell) {
    if (kappa < 2 || ell < 2) throw std::invalid_argument("axis_word: kappa, ell must be >= 2");
    AxisSpec ax;
    ax.kappa = kappa;
    ax.ell = ell;
    ax.word = word_cat(word_block(Letter::A, kappa + 1), word_block(Letter::B, ell));
    ax.e1 = {zeta(kappa), zeta(ell + 1)};
    ax.e2 = {zeta(kappa + 1), zeta(ell)};
    return ax;
}

ThetaZetaValue theta_zeta(char sign, int j, int m) {
    long long den = static_cast<long long>(m) * j + (sign == '+' ? 1 : -1);
    if (den == 0) throw std::invalid_argument("theta_zeta: degenerate denominator m*j +- 1 = 0");
    ThetaZetaValue tz;
    tz.theta = Rational64(m, den);
    tz.zetaVal = 2.0 * std::cos(M_PI * tz.theta.value());
    return tz;
}

PencilSpec pencil(int family, int kappa, int ell, int m) {
    if (m < 1) throw std::invalid_argument("pencil: m must be >= 1");
    if (family == 1 || family == 2) {
        if (kappa < 2 || ell <= 2)
            throw std::invalid_argument("pencil: families 1-2 need kappa >= 2, ell > 2");
    } else if (family == 3 || family == 4) {
        if (kappa <= 2 || ell < 2)
            throw std::invalid_argument("pencil: families 3-4 need kappa > 2, ell >= 2");
    } else {
        throw std::invalid_argument("pencil: family must be 1..4");
    }

    PencilSpec ps;
    ps.family = family;
    ps.kappa = kappa;
    ps.ell = ell;
    ps.m = m;

    const Word A1 = word_block(Letter::A, kappa + 1);
    const Word A0 = word_block(Letter::A, kappa);
    const Word B1 = word_block(Letter::B, ell + 1);
    const Word B0 = word_block(Letter::B, ell);

    switch (family) {
        case 1:   // (a^{kappa+1} b^ell)^m a^kappa
            ps.word = word_cat(word_pow(word_cat(A1, B0), m), A0);
            ps.e = {zeta(kappa), zeta(ell + 1)};
            ps.thetaE = Rational64(1, kappa + ell + 1);
            {
                auto tz = theta_zeta('-', ell, m);
                ps.em = {zeta(kappa + 1), tz.zetaVal};
            }
            ps.thetaEm = theta_zeta('-', kappa + ell + 1, m).theta;
            break;
        case 2:   // a^{kappa+1} (b^ell a^kappa)^m
            ps.word = word_cat(A1, word_pow(word_cat(B0, A0), m));
            ps.e = {zeta(kappa + 1), zeta(ell - 1)};
            ps.thetaE = Rational64(1, kappa + ell);
            {
                auto tz = theta_zeta('+', ell, m);
                ps.em = {zeta(kappa), tz.zetaVal};
            }
            ps.thetaEm = theta_zeta('+', kappa + ell, m).theta;
            break;
        case 3:   // (b^{ell+1} a^kappa)^m b^ell
            ps.word = word_cat(word_pow(word_cat(B1, A0), m), B0);
            ps.e = {zeta(kappa + 1), zeta(ell)};
            ps.thetaE = Rational64(1, kappa + ell + 1);
            {
                auto tz = theta_zeta('-', kappa, m);
                ps.em = {tz.zetaVal, zeta(ell + 1)};
            }
            ps.thetaEm = theta_zeta('-', kappa + ell + 1, m).theta;
            break;
        case 4:   // b^{ell+1} (a^kappa b^ell)^m
            ps.word = word_cat(B1, word_pow(word_cat(A0, B0), m));
            ps.e = {zeta(kappa - 1), zeta(ell + 1)};
            ps.thetaE = Rational64(1, kappa + ell);
            {
                auto tz = theta_zeta('+', kappa, m);
                ps.em = {tz.zetaVal, zeta(ell)};
            }
            ps.thetaEm = theta_zeta('+', kappa + ell, m).theta;
            break;
    }
    return ps;
}

Rational64 grid_theta(char sign, int kappa, int ell, int n, int m) {
    if (kappa < 2 || ell < 2) throw std::invalid_argument("grid_theta: kappa, ell must be >= 2");
    if (n < 0 || m < 0) throw std::invalid_argument("grid_theta: n, m must be >= 0");
    return theta_zeta(sign, kappa + ell + 1, n + m + 1).theta;
}

} // namespace critcurve
