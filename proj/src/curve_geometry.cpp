#include "critcurve/curve_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace critcurve {

CurveContext::CurveContext(const Word& w) : word_(w) {
    n_ = w.n();
    WordStats st = word_stats(w);
    rank_ = st.rank;
    sign_ = st.sign;
    seq_ = q_sequence(w);
    cp_ = curve_polys(w);
    C_ = PolyEvaluator(cp_.C);
    Ca_ = PolyEvaluator(cp_.C.partial_a());
    Cb_ = PolyEvaluator(cp_.C.partial_b());
}

bool CurveContext::on_curve(double a, double b, double eps_c) const {
    return std::fabs(C_(a, b)) <= eps_c * std::max(1.0, C_.abs_scale(a, b));
}

std::vector<Anchor> diagonal_anchors(const Word& w) {
    CurveContext ctx(w);
    const int n = ctx.n();
    std::vector<Anchor> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 1; j <= n - 1; ++j) {
        Anchor an;
        an.j = j;
        an.zeta = 2.0 * std::cos(M_PI * static_cast<double>(j) / static_cast<double>(n));
        double v = ctx.evalC(an.zeta, an.zeta);
        an.onCriticalFactor = std::fabs(v) <= 1e-9 * std::max(1.0, ctx.scaleC(an.zeta, an.zeta));
        an.legal = (j == ctx.rank());
        out.push_back(an);
    }
    return out;
}

LegalCheck legal_check(const CurveContext& ctx, double a, double b, const Config& cfg) {
    const int n = ctx.n();
    LegalCheck res;
    Ray start = (ctx.sign() == '+') ? ray_Lminus() : ray_Lplus();
    OrbitTrace tr = orbit_code(a, b, start, n, cfg.eps_b);

    // Expected terminal: opposite boundary ray for odd rank, same for even.
    const bool odd = (ctx.rank() % 2 == 1);
    const bool startMinus = (ctx.sign() == '+');
    const bool endPlus = startMinus ? odd : !odd;
    const Ray& zn = tr.rays.back();
    res.terminalOk =
        std::fabs(zn.x) <= cfg.eps_b && (endPlus ? zn.y > 0.0 : zn.y < 0.0);

    res.properCode = tr.code;
    for (const auto& hit : tr.boundaryHits)
        if (hit.index < n) res.freePositions.insert(hit.index);
    res.freePositions.insert(0);

    res.legal = res.terminalOk &&
                boundary_equivalent(ctx.word(), res.properCode, res.freePositions);
    return res;
}

bool is_legal_point(const Word& w, double a, double b, const Config& cfg) {
    CurveContext ctx(w);
    if (!ctx.on_curve(a, b, cfg.eps_c))
        throw std::invalid_argument("is_legal_point: point not on curve");
    return legal_check(ctx, a, b, cfg).legal;
}

Asymptotes asymptotes(const Word& w) {
    ContinuantSeq seq = q_sequence(w);
    const BivarPoly& Qn = seq.Q.back();
    Asymptotes as;
    const int na = Qn.deg_a();
    const int nb = Qn.deg_b();
    as.horizontalPoly = UnivarPoly(Qn.coeff_of_a_power(na));
    as.verticalPoly = UnivarPoly(Qn.coeff_of_b_power(nb));
    as.horizontalCount = std::max(0, as.horizontalPoly.degree());
    as.verticalCount = std::max(0, as.verticalPoly.degree());
    if (as.horizontalPoly.degree() > 0) as.horizontal = real_roots(as.horizontalPoly);
    if (as.verticalPoly.degree() > 0) as.vertical = real_roots(as.verticalPoly);
    return as;
}

IntersectionData intersection_sequence(const Word& w, double a, double b, const Config& cfg) {
    CurveContext ctx(w);
    if (!ctx.on_curve(a, b, cfg.eps_c))
        throw std::invalid_argument("intersection_sequence: point not on curve");
    const int n = ctx.n();

    std::vector<double> q = q_values(w, a, b);
    double scale = 1.0;
    for (double v : q) scale = std::max(scale, std::fabs(v));
    const double thr = cfg.eps_q * scale;

    IntersectionData data;
    for (int t = 1; t <= n - 1; ++t)
        if (std::fabs(q[static_cast<std::size_t>(t)]) < thr) data.T.push_back(t);

    data.paired = true;
    for (int t : data.T)
        if (!std::binary_search(data.T.begin(), data.T.end(), n - t)) data.paired = false;
    if (data.T.size() % 2 != 0) data.paired = false;
    data.period = data.T.size() >= 2 ? data.T[1] : 0;

    LegalCheck lc = legal_check(ctx, a, b, cfg);
    data.properCodeUsed = lc.legal;
    data.codeUsed = lc.legal ? lc.properCode : w;

    if (data.paired) {
        const std::size_t half = data.T.size() / 2;
        for (std::size_t j = 0; j < half; ++j) {
            int t = data.T[j];
            Decomposition dec;
            dec.t = t;
            dec.u = data.codeUsed.sub(0, t);
            dec.v = data.codeUsed.sub(t, n - 2 * t);
            dec.uPrime = data.codeUsed.sub(n - t, t);
            dec.rankU = word_stats(dec.u).rank;
            dec.rankV = word_stats(dec.v).rank;
            dec.rankUPrime = word_stats(dec.uPrime).rank;
            data.decompositions.push_back(std::move(dec));
        }
    }
    return data;
}

Polygonal polygonal(const Word& w, double a, double b, const Config& cfg) {
    CurveContext ctx(w);
    if (!ctx.on_curve(a, b, cfg.eps_c))
        throw std::invalid_argument("polygonal: point not on curve");
    const int n = ctx.n();

    std::vector<double> q = q_values(w, a, b);
    double scale = 1.0;
    for (double v : q) scale = std::max(scale, std::fabs(v));
    const double thr = cfg.eps_q * scale;

    Polygonal pg;
    pg.Gamma.reserve(static_cast<std::size_t>(n));
    double gx = 0.0, gy = 0.0;
    for (int t = 0; t < n; ++t) {
        double q2 = q[static_cast<std::size_t>(t)] * q[static_cast<std::size_t>(t)];
        if (w.at(t) == Letter::A) gx += q2; else gy += q2;
        pg.Gamma.push_back({gx, gy});
        if (t >= 1 && std::fabs(q[static_cast<std::size_t>(t)]) < thr)
            pg.intersectionPoints.push_back(t);
        if (t + 1 < n && w.at(t) != w.at(t + 1)) pg.vertices.push_back(t);
    }
    pg.medianFrom = pg.Gamma.front();
    pg.medianTo = pg.Gamma.back();
    pg.edges = static_cast<int>(pg.vertices.size()) + 1;

    // Regular: no intersection point on the median (relative line distance).
    const double mx = pg.medianTo[0] - pg.medianFrom[0];
    const double my = pg.medianTo[1] - pg.medianFrom[1];
    const double mlen = std::hypot(mx, my);
    pg.regular = true;
    for (int t : pg.intersectionPoints) {
        const auto& g = pg.Gamma[static_cast<std::size_t>(t)];
        double cross = mx * (g[1] - pg.medianFrom[1]) - my * (g[0] - pg.medianFrom[0]);
        double dist = std::fabs(cross) / std::max(mlen, 1e-300);
        if (dist <= cfg.eps_g * mlen) { pg.regular = false; break; }
    }
    return pg;
}

DeltaSeq delta_sequence(const Word& w) {
    const int n = w.n();
    ContinuantSeq seq = q_sequence(w);
    CurvePolys cp = curve_polys(w);
    const BivarPoly Ca = cp.C.partial_a();
    const BivarPoly Cb = cp.C.partial_b();

    DeltaSeq ds;
    ds.Xi.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const BivarPoly& Qi = seq.Q[static_cast<std::size_t>(i)];
        BivarPoly q2 = Qi * Qi;
        ds.Xi.push_back(w.at(i) == Letter::B ? q2 * Ca : -(q2 * Cb));
    }

    // brackets {Q_t, C}
    std::vector<BivarPoly> B(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) {
        const BivarPoly& Qt = seq.Q[static_cast<std::size_t>(t)];
        B[static_cast<std::size_t>(t)] = Qt.partial_a() * Cb - Qt.partial_b() * Ca;
    }
    ds.Delta.resize(static_cast<std::size_t>(n) + 1);
    ds.Delta[0] = BivarPoly();   // Q_0 = 0 and {Q_{-1}, C} = 0
    for (int t = 1; t <= n; ++t)
        ds.Delta[static_cast<std::size_t>(t)] =
            seq.Q[static_cast<std::size_t>(t)] * B[static_cast<std::size_t>(t) - 1] -
            seq.Q[static_cast<std::size_t>(t) - 1] * B[static_cast<std::size_t>(t)];

    ds.sumIdentity = true;
    BivarPoly acc;
    for (int t = 1; t <= n; ++t) {
        acc += ds.Xi[static_cast<std::size_t>(t) - 1];
        if (!(ds.Delta[static_cast<std::size_t>(t)] == acc)) { ds.sumIdentity = false; break; }
    }

    ds.bracketIdentity = true;
    if (n % 2 == 1) {
        const int k = n / 2;
        BivarPoly rhs = poisson_bracket(seq.Q[static_cast<std::size_t>(k)],
                                        seq.Q[static_cast<std::size_t>(k) + 1]) * cp.C;
        ds.bracketIdentity = (ds.Delta[static_cast<std::size_t>(k) + 1] == rhs);
    }
    return ds;
}

double gradient_parallel_residual(const Word& w, double a, double b, const Config& cfg) {
    CurveContext ctx(w);
    if (!ctx.on_curve(a, b, cfg.eps_c))
        throw std::invalid_argument("gradient_parallel_residual: point not on curve");
    const int n = ctx.n();

    std::vector<double> q = q_values(w, a, b);
    double gx = 0.0, gy = 0.0;
    for (int t = 0; t < n; ++t) {
        double q2 = q[static_cast<std::size_t>(t)] * q[static_cast<std::size_t>(t)];
        if (w.at(t) == Letter::A) gx += q2; else gy += q2;
    }
    double ca = ctx.evalCa(a, b), cb = ctx.evalCb(a, b);
    double gn = std::hypot(ca, cb), gl = std::hypot(gx, gy);
    if (gn == 0.0 || gl == 0.0)
        throw std::runtime_error("gradient_parallel_residual: zero gradient or zero polygonal");
    return std::fabs(ca * gy - cb * gx) / (gn * gl);
}

AngleSum angle_sum(const Word& w, double a, double b, const Config& cfg) {
    CurveContext ctx(w);
    if (!ctx.on_curve(a, b, cfg.eps_c))
        throw std::invalid_argument("angle_sum: point not on curve");
    const int n = ctx.n();
    std::vector<double> q = q_values(w, a, b);
    AngleSum out;
    for (int t = 1; t <= n; ++t)
        out.S += std::atan2(q[static_cast<std::size_t>(t) - 1], q[static_cast<std::size_t>(t)]);
    out.refModPi = std::remainder(M_PI * n / 4.0, M_PI);
    out.residualModPi = std::remainder(out.S - M_PI * n / 4.0, M_PI);
    return out;
}

// ---------------------------------------------------------------------------
// Branch tracing
// ---------------------------------------------------------------------------

namespace {

struct InternalSample {
    double a = 0.0, b = 0.0;
    bool legal = false;
    bool inWindow = true;
};

struct TracerEnv {
    const CurveContext& ctx;
    const Config& cfg;
    TraceOptions opt;
    double winLo, winHi;     // reported window
    double extLo, extHi;     // probing window (margin beyond)
};

bool in_window(const TracerEnv& env, double a, double b) {
    return a >= env.winLo - 1e-12 && a <= env.winHi + 1e-12 &&
           b >= env.winLo - 1e-12 && b <= env.winHi + 1e-12;
}

bool in_ext(const TracerEnv& env, double a, double b) {
    return a >= env.extLo && a <= env.extHi && b >= env.extLo && b <= env.extHi;
}

// Bisect C(a, .) = 0 (fixB = false) or C(., b) = 0 (fixB = true) on a bracket.
double bisect_curve(const TracerEnv& env, bool solveB, double fixed, double lo, double hi,
                    double flo) {
    for (int it = 0; it < 200 && hi - lo > env.opt.tol * std::max(1.0, std::fabs(lo)); ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = solveB ? env.ctx.evalC(fixed, mid) : env.ctx.evalC(mid, fixed);
        if (fm == 0.0) return mid;
        if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; } else { hi = mid; }
    }
    return 0.5 * (lo + hi);
}

// Solve the non-driving coordinate on the branch near a previous value.
// searchDir: the sign of the expected movement of the solved coordinate.
std::optional<double> solve_other(const TracerEnv& env, bool solveB, double fixed,
                                  double prevOther, double searchDir, double expectedMove) {
    const double pad = 0.05 * env.opt.step;
    double near = prevOther - searchDir * pad;    // just behind the previous value
    double fnear = solveB ? env.ctx.evalC(fixed, near) : env.ctx.evalC(near, fixed);
    if (fnear == 0.0) return near;
    double d = std::max({4.0 * std::fabs(expectedMove), env.opt.step, 1e-9});
    for (int attempt = 0; attempt < 60; ++attempt) {
        double far = prevOther + searchDir * d;
        double ffar = solveB ? env.ctx.evalC(fixed, far) : env.ctx.evalC(far, fixed);
        if (ffar == 0.0) return far;
        if ((ffar < 0) != (fnear < 0)) {
            double lo = std::min(near, far), hi = std::max(near, far);
            double flo = (lo == near) ? fnear : ffar;
            return bisect_curve(env, solveB, fixed, lo, hi, flo);
        }
        d *= 2.0;
        if (d > 1.5 * (env.extHi - env.extLo)) break;
    }
    return std::nullopt;
}

// Continuation in one direction; dir = +1 advances a (b falls), -1 the reverse.
// Appends samples (excluding the start point).
void trace_direction(const TracerEnv& env, double a0, double b0, int dir,
                     std::vector<InternalSample>& out) {
    double a = a0, b = b0;
    double ca = env.ctx.evalCa(a, b), cb = env.ctx.evalCb(a, b);
    bool driveA = std::fabs(cb) >= 0.1 * std::fabs(ca);   // db/da = -ca/cb
    double lastMove = env.opt.step;                        // movement of solved coord
    const long maxSamples = static_cast<long>(4.0 * (env.extHi - env.extLo) / env.opt.step) + 64;

    for (long i = 0; i < maxSamples; ++i) {
        double na, nb;
        if (driveA) {
            na = a + dir * env.opt.step;
            if (na < env.extLo || na > env.extHi) return;
            auto r = solve_other(env, /*solveB=*/true, na, b, -static_cast<double>(dir), lastMove);
            if (!r) throw TraceError("trace: failed to bracket the curve in b", a, b);
            nb = *r;
            lastMove = std::fabs(nb - b);
            if (lastMove > 10.0 * env.opt.step) driveA = false;   // steep: drive b
        } else {
            nb = b - dir * env.opt.step;
            if (nb < env.extLo || nb > env.extHi) return;
            auto r = solve_other(env, /*solveB=*/false, nb, a, static_cast<double>(dir), lastMove);
            if (!r) throw TraceError("trace: failed to bracket the curve in a", a, b);
            na = *r;
            lastMove = std::fabs(na - a);
            if (lastMove > 10.0 * env.opt.step) driveA = true;
        }
        if (!in_ext(env, na, nb)) return;
        InternalSample s;
        s.a = na;
        s.b = nb;
        s.inWindow = in_window(env, na, nb);
        s.legal = legal_check(env.ctx, na, nb, env.cfg).legal;
        out.push_back(s);
        a = na;
        b = nb;
    }
}

// Pin a legality flip by bisecting a sign-changing Q_t along the branch.
std::optional<EndpointInfo> refine_flip(const TracerEnv& env, const InternalSample& sLegal,
                                        const InternalSample& sIllegal) {
    const Word& w = env.ctx.word();
    const int n = env.ctx.n();
    std::vector<double> qL = q_values(w, sLegal.a, sLegal.b);
    std::vector<double> qI = q_values(w, sIllegal.a, sIllegal.b);

    int tStar = 0;
    double best = 0.0;
    for (int t = 1; t <= n - 1; ++t) {
        double vL = qL[static_cast<std::size_t>(t)], vI = qI[static_cast<std::size_t>(t)];
        if (vL == 0.0 || vI == 0.0 || (vL < 0) != (vI < 0)) {
            double m = std::fabs(vL) + std::fabs(vI);
            if (tStar == 0 || m < best) { tStar = t; best = m; }
        }
    }
    if (tStar == 0) return std::nullopt;

    // Parametrize by the coordinate with the larger spread.
    const bool byA = std::fabs(sIllegal.a - sLegal.a) >= std::fabs(sIllegal.b - sLegal.b);
    double lo = byA ? sLegal.a : sLegal.b;
    double hi = byA ? sIllegal.a : sIllegal.b;
    double otherLo = byA ? sLegal.b : sLegal.a;
    double otherHi = byA ? sIllegal.b : sIllegal.a;

    auto point_at = [&](double s) -> std::pair<double, double> {
        double oLo = std::min(otherLo, otherHi) - 1e-9;
        double oHi = std::max(otherLo, otherHi) + 1e-9;
        double flo = byA ? env.ctx.evalC(s, oLo) : env.ctx.evalC(oLo, s);
        double fhi = byA ? env.ctx.evalC(s, oHi) : env.ctx.evalC(oHi, s);
        double other;
        if ((flo < 0) != (fhi < 0))
            other = bisect_curve(env, byA, s, oLo, oHi, flo);
        else
            other = 0.5 * (oLo + oHi);   // degenerate; flat stretch
        return byA ? std::make_pair(s, other) : std::make_pair(other, s);
    };

    auto qval = [&](double s) {
        auto [pa, pb] = point_at(s);
        return q_values(w, pa, pb)[static_cast<std::size_t>(tStar)];
    };

    double flo = qval(lo);
    double fhi = qval(hi);
    if (flo != 0.0 && fhi != 0.0 && (flo < 0) == (fhi < 0)) return std::nullopt;
    for (int it = 0; it < 120 && std::fabs(hi - lo) > 1e-14 * std::max(1.0, std::fabs(lo)); ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = qval(mid);
        if (fm == 0.0) { lo = hi = mid; break; }
        if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; } else { hi = mid; }
    }
    auto [ea, eb] = point_at(0.5 * (lo + hi));

    EndpointInfo ep;
    ep.a = ea;
    ep.b = eb;
    ep.refinedWithQ = tStar;
    IntersectionData x = intersection_sequence(w, ea, eb, env.cfg);
    ep.T = x.T;
    ep.regular = polygonal(w, ea, eb, env.cfg).regular;
    if (!ep.T.empty()) {
        int t1 = ep.T.front();
        ep.simpleT = true;
        for (int i = 1; i < t1; ++i)
            if (w.at(i) != w.at(1)) { ep.simpleT = false; break; }
    } else {
        ep.simpleT = true;
    }
    ep.atWindowEdge = !(ea > env.winLo + 1e-9 && ea < env.winHi - 1e-9 &&
                        eb > env.winLo + 1e-9 && eb < env.winHi - 1e-9);
    return ep;
}

void collect_endpoints(const TracerEnv& env, const std::vector<InternalSample>& all,
                       std::vector<EndpointInfo>& eps) {
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        if (all[i].legal == all[i + 1].legal) continue;
        const InternalSample& L = all[i].legal ? all[i] : all[i + 1];
        const InternalSample& I = all[i].legal ? all[i + 1] : all[i];
        auto ep = refine_flip(env, L, I);
        if (ep) eps.push_back(*ep);
    }
}

CurveTrace trace_curve_impl(const Word& w, const TraceOptions& optIn, const Config& cfg,
                            bool wantOddRank) {
    CurveContext ctx(w);
    const bool odd = (ctx.rank() % 2 == 1);
    if (wantOddRank && !odd)
        throw std::invalid_argument("trace_branch: even-rank word (use trace_axis)");
    if (!wantOddRank && odd)
        throw std::invalid_argument("trace_axis: odd-rank word (use trace_branch)");

    TraceOptions opt = optIn;
    TracerEnv env{ctx, cfg, opt,
                  opt.fullAnnulus ? -2.0 : opt.windowLo,
                  opt.fullAnnulus ? 2.0 : opt.windowHi,
                  0.0, 0.0};
    const double margin = 32.0 * opt.step;
    env.extLo = env.winLo - margin;
    env.extHi = env.winHi + margin;

    CurveTrace trace;
    trace.word = w;
    trace.anchors = diagonal_anchors(w);

    const Anchor* legalAnchor = nullptr;
    for (const auto& an : trace.anchors)
        if (an.legal) legalAnchor = &an;
    if (!legalAnchor)
        throw TraceError("trace: word has no legal diagonal anchor", 0.0, 0.0);

    const BivarPoly& C = ctx.polys().C;
    std::vector<InternalSample> all;

    if (C.deg_b() <= 0 || C.deg_a() <= 0) {
        // Degenerate branches: vertical (C in a only) or horizontal lines.
        const bool vertical = C.deg_b() <= 0;
        double z = legalAnchor->zeta;
        // polish the line coordinate on the diagonal polynomial
        double h = 1e-6;
        double root = z;
        for (; h < 0.5; h *= 2.0) {
            double f1 = vertical ? ctx.evalC(z - h, z) : ctx.evalC(z, z - h);
            double f2 = vertical ? ctx.evalC(z + h, z) : ctx.evalC(z, z + h);
            if ((f1 < 0) != (f2 < 0)) {
                root = bisect_curve(env, !vertical, z, z - h, z + h, f1);
                break;
            }
        }
        for (double s = env.extLo; s <= env.extHi + 1e-12; s += opt.step) {
            InternalSample smp;
            smp.a = vertical ? root : s;
            smp.b = vertical ? s : root;
            smp.inWindow = in_window(env, smp.a, smp.b);
            smp.legal = legal_check(ctx, smp.a, smp.b, cfg).legal;
            all.push_back(smp);
        }
    } else {
        // General branch through the legal anchor; trace both ways.
        double za = legalAnchor->zeta;
        InternalSample anchorSample;
        anchorSample.a = za;
        anchorSample.b = za;
        anchorSample.inWindow = in_window(env, za, za);
        anchorSample.legal = legal_check(ctx, za, za, cfg).legal;

        std::vector<InternalSample> up, down;
        trace_direction(env, za, za, +1, up);
        trace_direction(env, za, za, -1, down);
        all.reserve(up.size() + down.size() + 1);
        for (auto it = down.rbegin(); it != down.rend(); ++it) all.push_back(*it);
        if (in_ext(env, za, za)) all.push_back(anchorSample);
        for (const auto& s : up) all.push_back(s);
    }

    collect_endpoints(env, all, trace.endpoints);
    for (const auto& s : all)
        if (s.inWindow) trace.samples.push_back({s.a, s.b, s.legal});
    return trace;
}

} // namespace

CurveTrace trace_branch(const Word& w, const TraceOptions& opt, const Config& cfg) {
    return trace_curve_impl(w, opt, cfg, /*wantOddRank=*/true);
}

CurveTrace trace_axis(const Word& w, const TraceOptions& opt, const Config& cfg) {
    return trace_curve_impl(w, opt, cfg, /*wantOddRank=*/false);
}

std::vector<EndpointInfo> detect_endpoints(const Word& w, const CurveTrace& trace,
                                           const TraceOptions& optIn, const Config& cfg) {
    CurveContext ctx(w);
    TraceOptions opt = optIn;
    TracerEnv env{ctx, cfg, opt,
                  opt.fullAnnulus ? -2.0 : opt.windowLo,
                  opt.fullAnnulus ? 2.0 : opt.windowHi,
                  0.0, 0.0};
    const double margin = 32.0 * opt.step;
    env.extLo = env.winLo - margin;
    env.extHi = env.winHi + margin;

    std::vector<InternalSample> all;
    all.reserve(trace.samples.size());
    for (const auto& s : trace.samples) all.push_back({s.a, s.b, s.legal, true});

    std::vector<EndpointInfo> eps;
    collect_endpoints(env, all, eps);
    return eps;
}

Rational64 rotation_at_double_point(const Word& wIn, const Word& w2In, double a, double b,
                                    const Config& cfg) {
    Word w = wIn, w2 = w2In;
    WordStats s1 = word_stats(w), s2 = word_stats(w2);
    if (s2.rank > s1.rank) { std::swap(w, w2); std::swap(s1, s2); }

    CurveContext c1(w), c2(w2);
    if (!c1.on_curve(a, b, cfg.eps_c) || !c2.on_curve(a, b, cfg.eps_c))
        throw std::invalid_argument("rotation_at_double_point: point not on both curves");
    if (!legal_check(c1, a, b, cfg).legal || !legal_check(c2, a, b, cfg).legal)
        throw std::invalid_argument("rotation_at_double_point: point not legal for both words");

    if (s1.sign != s2.sign)
        return Rational64(s1.rank + s2.rank, 2LL * (w.n() + w2.n()));

    if (s1.rank != s2.rank)
        return Rational64(s1.rank - s2.rank, 2LL * (w.n() - w2.n()));

    // Equal sign and rank: take w'' = prefix of w2 of odd-order length in T.
    IntersectionData x = intersection_sequence(w2, a, b, cfg);
    if (x.T.empty())
        throw std::runtime_error(
            "rotation_at_double_point: equal ranks with empty intersection sequence");
    int t = x.T[0];   // first element has odd order
    Word wpp = w2.sub(0, t);
    int rpp = word_stats(wpp).rank;
    return Rational64(s1.rank - rpp, 2LL * (w.n() - t));
}

} // namespace critcurve
