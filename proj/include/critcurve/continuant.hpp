#ifndef CRITCURVE_CONTINUANT_HPP
#define CRITCURVE_CONTINUANT_HPP

#include "critcurve/bivar_poly.hpp"
#include "critcurve/univar_poly.hpp"
#include "critcurve/word.hpp"

#include <array>
#include <vector>

namespace critcurve {

inline BivarPoly letter_poly(Letter l) {
    return l == Letter::A ? BivarPoly::var_a() : BivarPoly::var_b();
}

/// Q_0..Q_n for a word, built from Q_0 = 0, Q_1 = 1 and
/// Q_{t+1} = w_t Q_t - Q_{t-1}, the letters substituted by the
/// indeterminates a/b.  Q_t depends only on the reduced-word letters
/// w_1..w_{t-1}; Q_{-1} = -1 is implicit.
struct ContinuantSeq {
    Word word;
    std::vector<BivarPoly> Q;   // Q[t], t = 0..n
    int k = 0;                  // floor(n/2)
};

ContinuantSeq q_sequence(const Word& w);

/// General continuant over an explicit letter-polynomial sequence:
/// returns Q_{m+1}(v_1, ..., v_m) where v = letters.
BivarPoly continuant_of(const std::vector<BivarPoly>& letters);

/// Euler-rule enumeration oracle: sum over all strike-outs of disjoint
/// adjacent pairs, each pair contributing a factor -1.  Exponential;
/// capped at 20 letters.
BivarPoly continuant_bruteforce(const std::vector<BivarPoly>& letters);

struct MatrixWord {
    std::array<std::array<BivarPoly, 2>, 2> m;
    BivarPoly det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

/// M_[w] = M_{w_{t-1}} ... M_{w_0}, each factor [[x, -1], [1, 0]].
MatrixWord matrix_of_word(const Word& w);

struct CurvePolys {
    BivarPoly C;
    BivarPoly Ctilde;
    bool rankOdd = true;
};

/// Odd rank: C and C~ from Q_{k+1} -+ Q_k (n odd) or Q_{k+1}-Q_{k-1}, Q_k
/// (n even).  Even rank: C = Q_n, C~ = 1.
CurvePolys curve_polys(const Word& w);

/// Exact check Q_n == C * C~.  Requires a palindromic reduced word.
bool verify_factorization(const Word& w);

/// The cofactor S_t with Q_{n-t} - Q_t = C_w * S_t, in closed form
/// (no polynomial division).  Requires a palindromic reduced word and
/// 0 <= t <= n.
BivarPoly symmetry_cofactor(const Word& w, int t);

/// Q values along the one-dimensional orbit: Q_0..Q_n evaluated at (a,b)
/// by the double-precision three-term recurrence.
std::vector<double> q_values(const Word& w, double a, double b);

} // namespace critcurve

#endif
