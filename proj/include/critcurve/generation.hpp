#ifndef CRITCURVE_GENERATION_HPP
#define CRITCURVE_GENERATION_HPP

#include "critcurve/rational.hpp"
#include "critcurve/word.hpp"

#include <utility>

namespace critcurve {

/// zeta_j = 2 cos(pi/j)
double zeta(int j);

struct Rank1Curve {
    Word word;          // a^kappa or b^kappa
    double line = 0.0;  // the fixed coordinate zeta_kappa
    Letter letter = Letter::A;
    int kappa = 0;
};

Rank1Curve rank1_curve(Letter letter, int kappa);

struct AxisSpec {
    Word word;                          // a^{kappa+1} b^ell
    int kappa = 0, ell = 0;
    std::pair<double, double> e1;       // c_{kappa, ell+1}
    std::pair<double, double> e2;       // c_{kappa+1, ell}
};

AxisSpec axis_word(int kappa, int ell);

struct ThetaZetaValue {
    Rational64 theta;   // m/(m j +- 1)
    double zetaVal = 0.0;
};

/// sign '+' or '-'; requires m j +- 1 != 0.
ThetaZetaValue theta_zeta(char sign, int j, int m);

struct PencilSpec {
    int family = 0;
    int kappa = 0, ell = 0, m = 0;
    Word word;
    std::pair<double, double> e;    // basis
    std::pair<double, double> em;
    Rational64 thetaE;
    Rational64 thetaEm;
};

/// First-generation pencil constructor; family constraints are
/// kappa >= 2, ell > 2 (families 1-2) and kappa > 2, ell >= 2 (families 3-4),
/// m >= 1.
PencilSpec pencil(int family, int kappa, int ell, int m);

/// Rotation number of the grid intersection: theta^-+_{kappa+ell+1, n+m+1}.
Rational64 grid_theta(char sign, int kappa, int ell, int n, int m);

} // namespace critcurve

#endif
