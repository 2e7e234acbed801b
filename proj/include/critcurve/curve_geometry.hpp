#ifndef CRITCURVE_CURVE_GEOMETRY_HPP
#define CRITCURVE_CURVE_GEOMETRY_HPP

#include "critcurve/config.hpp"
#include "critcurve/continuant.hpp"
#include "critcurve/dynamics.hpp"
#include "critcurve/rational.hpp"
#include "critcurve/word.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace critcurve {

/// Precomputed word-derived data shared by the geometric operations.
class CurveContext {
public:
    explicit CurveContext(const Word& w);

    const Word& word() const { return word_; }
    int n() const { return n_; }
    int rank() const { return rank_; }
    char sign() const { return sign_; }
    const CurvePolys& polys() const { return cp_; }
    const ContinuantSeq& seq() const { return seq_; }

    double evalC(double a, double b) const { return C_(a, b); }
    double evalCa(double a, double b) const { return Ca_(a, b); }
    double evalCb(double a, double b) const { return Cb_(a, b); }
    double scaleC(double a, double b) const { return C_.abs_scale(a, b); }

    bool on_curve(double a, double b, double eps_c) const;

private:
    Word word_;
    int n_ = 0;
    int rank_ = 0;
    char sign_ = '+';
    ContinuantSeq seq_;
    CurvePolys cp_;
    PolyEvaluator C_, Ca_, Cb_;
};

struct Anchor {
    int j = 0;
    double zeta = 0.0;            // 2 cos(pi j / n)
    bool onCriticalFactor = false; // C_w vanishes there (else C~_w)
    bool legal = false;           // j equals the word's rank
};

/// Diagonal crossings zeta_{n,j}, j = 1..n-1, of the curve Q_n = 0 with the
/// line a = b, split between the C and C~ factors.
std::vector<Anchor> diagonal_anchors(const Word& w);

struct LegalCheck {
    bool legal = false;
    bool terminalOk = false;
    Word properCode;              // the simulated branch letters (length n)
    std::set<int> freePositions;  // boundary-hit letter indices, always contains 0
};

/// Fixed-length simulation of the word's boundary segment at (a,b):
/// n steps from the sign-matched start ray; legal iff the terminal ray is the
/// parity-expected boundary ray and the codes agree outside free positions.
LegalCheck legal_check(const CurveContext& ctx, double a, double b,
                       const Config& cfg = Config());

/// Spec-facing wrapper; throws if |C_w(a,b)| exceeds eps_c at (a,b).
bool is_legal_point(const Word& w, double a, double b, const Config& cfg = Config());

struct Asymptotes {
    UnivarPoly horizontalPoly;        // coefficient of a^{n_a} in Q_n, in b
    UnivarPoly verticalPoly;          // coefficient of b^{n_b} in Q_n, in a
    std::vector<double> horizontal;   // real roots (b = const asymptotes)
    std::vector<double> vertical;     // real roots (a = const asymptotes)
    int horizontalCount = 0;          // degree, with multiplicity
    int verticalCount = 0;
};

Asymptotes asymptotes(const Word& w);

struct Decomposition {
    int t = 0;
    Word u, v, uPrime;
    int rankU = 0, rankV = 0, rankUPrime = 0;
};

struct IntersectionData {
    std::vector<int> T;
    bool paired = true;        // t in T <=> n-t in T
    int period = 0;            // t_2 when |T| >= 2
    std::vector<Decomposition> decompositions;
    Word codeUsed;             // proper code when recoverable, else the input word
    bool properCodeUsed = false;
};

/// T = { t in 1..n-1 : |Q_t(a,b)| < eps_q * max(1, max_t |Q_t|) }, with the
/// pairing t <-> n-t validated.  Decompositions w = u v u' are cut from the
/// proper code recovered by orbit simulation at legal points.
IntersectionData intersection_sequence(const Word& w, double a, double b,
                                       const Config& cfg = Config());

struct Polygonal {
    std::vector<std::array<double, 2>> Gamma;   // Gamma_0..Gamma_{n-1}
    std::array<double, 2> medianFrom{{0.0, 0.0}};
    std::array<double, 2> medianTo{{0.0, 0.0}};
    std::vector<int> vertices;            // indices where the code changes
    std::vector<int> intersectionPoints;  // t with Q_t ~ 0
    bool regular = true;                  // no intersection point on the median
    int edges = 0;
};

Polygonal polygonal(const Word& w, double a, double b, const Config& cfg = Config());

struct DeltaSeq {
    std::vector<BivarPoly> Delta;   // Delta_0..Delta_n
    std::vector<BivarPoly> Xi;      // Xi_0..Xi_{n-1}
    bool sumIdentity = false;       // Delta_t == sum_{i<t} Xi_i, exactly
    bool bracketIdentity = false;   // n odd: Delta_{k+1} == {Q_k,Q_{k+1}} C, exactly
};

DeltaSeq delta_sequence(const Word& w);

/// |cross(grad C, Gamma_{n-1})| / (|grad C| |Gamma_{n-1}|) at a curve point.
double gradient_parallel_residual(const Word& w, double a, double b,
                                  const Config& cfg = Config());

struct AngleSum {
    double S = 0.0;             // sum of atan2(Q_{t-1}, Q_t), t = 1..n
    double residualModPi = 0.0; // remainder(S - pi n/4, pi)
    double refModPi = 0.0;      // pi n/4 reduced mod pi
};

AngleSum angle_sum(const Word& w, double a, double b, const Config& cfg = Config());

struct EndpointInfo {
    double a = 0.0, b = 0.0;
    std::vector<int> T;
    bool regular = false;       // polygonal regularity at the end-point
    bool simpleT = false;       // prefix of length t_1 equivalent to a rank-1 word
    int refinedWithQ = 0;       // the Q_t index bisected to pin the flip
    bool atWindowEdge = false;
};

struct CurveSample {
    double a = 0.0, b = 0.0;
    bool legal = false;
};

struct CurveTrace {
    Word word;
    std::vector<CurveSample> samples;     // ordered along the branch
    std::vector<Anchor> anchors;
    std::vector<EndpointInfo> endpoints;  // refined legality flips
};

struct TraceOptions {
    double step = 1e-3;
    double tol = 1e-12;           // root-polish bracket tolerance
    double windowLo = 0.0;        // trace window [lo,hi]^2 (first quadrant default)
    double windowHi = 2.0;
    bool fullAnnulus = false;     // widen the window to [-2,2]^2
};

struct TraceError : std::runtime_error {
    double lastA, lastB;
    TraceError(const std::string& what, double a, double b)
        : std::runtime_error(what + " (last good sample a=" + std::to_string(a) +
                             ", b=" + std::to_string(b) + ")"),
          lastA(a), lastB(b) {}
};

/// Trace the legal branch of C_w across the window, starting from the legal
/// diagonal anchor, tagging every sample with its legality and refining every
/// legality flip into an end-point.  Odd rank only.
CurveTrace trace_branch(const Word& w, const TraceOptions& opt = TraceOptions(),
                        const Config& cfg = Config());

/// Same continuation applied to the even-rank boundary curve Q_n = 0 (axes).
CurveTrace trace_axis(const Word& w, const TraceOptions& opt = TraceOptions(),
                      const Config& cfg = Config());

/// Re-derive refined end-points from a traced branch.
std::vector<EndpointInfo> detect_endpoints(const Word& w, const CurveTrace& trace,
                                           const TraceOptions& opt = TraceOptions(),
                                           const Config& cfg = Config());

/// Rotation number at a legal intersection of two distinct critical curves.
Rational64 rotation_at_double_point(const Word& w, const Word& w2, double a, double b,
                                    const Config& cfg = Config());

} // namespace critcurve

#endif
