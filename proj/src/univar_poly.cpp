#include "critcurve/univar_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace critcurve {

UnivarPoly UnivarPoly::operator+(const UnivarPoly& o) const {
    std::vector<Int> out(std::max(coeffs.size(), o.coeffs.size()), Int(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) out[i] += o.coeffs[i];
    return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator-(const UnivarPoly& o) const {
    std::vector<Int> out(std::max(coeffs.size(), o.coeffs.size()), Int(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) out[i] -= o.coeffs[i];
    return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator*(const UnivarPoly& o) const {
    if (is_zero() || o.is_zero()) return UnivarPoly();
    std::vector<Int> out(coeffs.size() + o.coeffs.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs.size(); ++j)
            out[i + j] += coeffs[i] * o.coeffs[j];
    return UnivarPoly(std::move(out));
}

double UnivarPoly::eval(double x) const {
    double r = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        r = r * x + coeffs[i].convert_to<double>();
    return r;
}

std::string UnivarPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Int c = coeff(k);
        if (c == 0) continue;
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (ac != 1 || k == 0) os << ac.str();
        if (k > 0) { os << var; if (k > 1) os << "^" << k; }
    }
    return os.str();
}

UnivarPoly divexact(const UnivarPoly& num, const UnivarPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("divexact: division by zero polynomial");
    std::vector<Int> rem = num.coeffs;
    if (num.degree() < den.degree()) {
        if (!num.is_zero()) throw std::runtime_error("divexact: nonzero remainder");
        return UnivarPoly();
    }
    std::vector<Int> quo(static_cast<std::size_t>(num.degree() - den.degree() + 1), Int(0));
    const Int& lead = den.coeffs.back();
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        Int& top = rem[static_cast<std::size_t>(k + den.degree())];
        if (top % lead != 0) throw std::runtime_error("divexact: non-integral quotient");
        Int q = top / lead;
        quo[static_cast<std::size_t>(k)] = q;
        if (q != 0)
            for (int i = 0; i <= den.degree(); ++i)
                rem[static_cast<std::size_t>(k + i)] -= q * den.coeffs[static_cast<std::size_t>(i)];
    }
    for (auto& c : rem)
        if (c != 0) throw std::runtime_error("divexact: nonzero remainder");
    return UnivarPoly(std::move(quo));
}

UnivarPoly chebyshev_u(int n) {
    if (n < -1) throw std::invalid_argument("chebyshev_u: n must be >= -1");
    UnivarPoly prev(std::vector<Int>{Int(-1)});   // U_{-1}
    if (n == -1) return prev;
    UnivarPoly cur;                                // U_0 = 0
    for (int t = 0; t < n; ++t) {
        // U_{t+1} = X U_t - U_{t-1}
        std::vector<Int> shifted(cur.coeffs.size() + 1, Int(0));
        for (std::size_t i = 0; i < cur.coeffs.size(); ++i) shifted[i + 1] = cur.coeffs[i];
        UnivarPoly next = UnivarPoly(std::move(shifted)) - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

UnivarPoly cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
    static std::map<int, UnivarPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1
    std::vector<Int> xn(static_cast<std::size_t>(n + 1), Int(0));
    xn[0] = -1;
    xn[static_cast<std::size_t>(n)] = 1;
    UnivarPoly p(std::move(xn));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divexact(p, cyclotomic(d));
    cache.emplace(n, p);
    return p;
}

UnivarPoly psi(int n) {
    if (n < 1) throw std::invalid_argument("psi: n must be >= 1");
    if (n == 1) return UnivarPoly(std::vector<Int>{Int(-2), Int(1)});
    if (n == 2) return UnivarPoly(std::vector<Int>{Int(2), Int(1)});

    UnivarPoly cn = cyclotomic(n);
    const int phi = cn.degree();
    if (phi % 2 != 0) throw std::logic_error("psi: cyclotomic degree not even");
    const int h = phi / 2;

    // C_n(x)/x^h = c_h + sum_{k>=1} c_{h+k} (x^k + x^{-k}); rewrite the
    // power sums with p_0 = 2, p_1 = X, p_k = X p_{k-1} - p_{k-2}.
    UnivarPoly result(std::vector<Int>{cn.coeff(h)});
    UnivarPoly pPrev(std::vector<Int>{Int(2)});
    UnivarPoly pCur(std::vector<Int>{Int(0), Int(1)});
    for (int k = 1; k <= h; ++k) {
        Int c = cn.coeff(h + k);
        if (c != 0) result = result + UnivarPoly(std::vector<Int>{c}) * pCur;
        std::vector<Int> shifted(pCur.coeffs.size() + 1, Int(0));
        for (std::size_t i = 0; i < pCur.coeffs.size(); ++i) shifted[i + 1] = pCur.coeffs[i];
        UnivarPoly pNext = UnivarPoly(std::move(shifted)) - pPrev;
        pPrev = pCur;
        pCur = pNext;
    }
    return result;
}

namespace {

double cauchy_bound(const std::vector<double>& c) {
    const double lead = std::fabs(c.back());
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, std::fabs(c[i]));
    return 1.0 + m / lead;
}

double horner(const std::vector<double>& c, double x) {
    double r = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

void roots_rec(const std::vector<double>& c, std::vector<double>& out) {
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return;
    if (deg == 1) {
        out.push_back(-c[0] / c[1]);
        return;
    }
    std::vector<double> dc(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) dc[i - 1] = c[i] * static_cast<double>(i);
    std::vector<double> crit;
    roots_rec(dc, crit);
    std::sort(crit.begin(), crit.end());

    const double B = cauchy_bound(c);
    std::vector<double> pts;
    pts.push_back(-B);
    for (double x : crit)
        if (x > -B && x < B) pts.push_back(x);
    pts.push_back(B);

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1];
        double flo = horner(c, lo), fhi = horner(c, hi);
        if (flo == 0.0) { out.push_back(lo); continue; }
        if (fhi == 0.0) continue;       // handled as the next interval's lo
        if ((flo < 0) == (fhi < 0)) continue;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::fabs(lo)); ++it) {
            double mid = 0.5 * (lo + hi);
            double fm = horner(c, mid);
            if (fm == 0.0) { lo = hi = mid; break; }
            if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; } else { hi = mid; }
        }
        out.push_back(0.5 * (lo + hi));
    }
}

} // namespace

std::vector<double> real_roots(const UnivarPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
    std::vector<double> c(p.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs[i].convert_to<double>();
    std::vector<double> out;
    roots_rec(c, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](double x, double y) {
                  return std::fabs(x - y) < 1e-12 * std::max(1.0, std::fabs(x));
              }),
              out.end());
    return out;
}

} // namespace critcurve
