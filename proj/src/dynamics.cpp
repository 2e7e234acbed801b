#include "critcurve/dynamics.hpp"

#include "critcurve/univar_poly.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace critcurve {

double Ray::angle() const { return std::atan2(y, x); }

Ray make_ray(double x, double y) {
    double n = std::hypot(x, y);
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::invalid_argument("make_ray: non-normalizable direction");
    return Ray{x / n, y / n};
}

std::pair<Ray, Letter> step(const Ray& r, double a, double b, double eps_b) {
    // Within the boundary band the branch follows the sign of y, which is the
    // paper's convention on x = 0.
    bool useA;
    if (std::fabs(r.x) <= eps_b) useA = (r.y <= 0.0);
    else useA = (r.x > 0.0);
    double p = useA ? a : b;
    double nx = p * r.x - r.y;
    double ny = r.x;
    return {make_ray(nx, ny), useA ? Letter::A : Letter::B};
}

std::pair<Ray, Letter> inverse_step(const Ray& r, double a, double b, double eps_b) {
    auto [img, letter] = step(Ray{r.y, r.x}, a, b, eps_b);
    return {Ray{img.y, img.x}, letter};
}

OrbitTrace orbit_code(double a, double b, Ray start, int n, double eps_b) {
    if (n < 1) throw std::invalid_argument("orbit_code: n must be >= 1");
    OrbitTrace tr;
    tr.rays.reserve(static_cast<std::size_t>(n) + 1);
    tr.code.letters.reserve(static_cast<std::size_t>(n));
    Ray z = start;
    tr.rays.push_back(z);
    if (std::fabs(z.x) <= eps_b)
        tr.boundaryHits.push_back({0, z.y > 0.0 ? +1 : -1});
    for (int t = 0; t < n; ++t) {
        auto [nz, letter] = step(z, a, b, eps_b);
        tr.code.letters.push_back(letter);
        z = nz;
        tr.rays.push_back(z);
        if (std::fabs(z.x) <= eps_b)
            tr.boundaryHits.push_back({t + 1, z.y > 0.0 ? +1 : -1});
    }
    return tr;
}

std::optional<std::pair<Word, OrbitTrace>>
boundary_segment(double a, double b, char sign, long maxSteps, double eps_b) {
    if (maxSteps < 2) throw std::invalid_argument("boundary_segment: maxSteps must be >= 2");
    OrbitTrace tr;
    Ray z = (sign == '+') ? ray_Lminus() : ray_Lplus();
    tr.rays.push_back(z);
    tr.boundaryHits.push_back({0, sign == '+' ? -1 : +1});
    for (long t = 0; t < maxSteps; ++t) {
        auto [nz, letter] = step(z, a, b, eps_b);
        tr.code.letters.push_back(letter);
        z = nz;
        tr.rays.push_back(z);
        if (std::fabs(z.x) <= eps_b && t + 1 >= 2) {
            tr.boundaryHits.push_back({static_cast<int>(t + 1), z.y > 0.0 ? +1 : -1});
            return std::make_pair(tr.code, tr);
        }
    }
    return std::nullopt;
}

RotEstimate rotation_density(double a, double b, long iters, double eps_b) {
    if (iters < 1000) throw std::invalid_argument("rotation_density: iters must be >= 10^3");
    RotEstimate est;
    est.iters = iters;
    est.errBound = 2.0 / static_cast<double>(iters);
    est.theta0Interior = (region_classify(a, b) == Region::InteriorTheta0);

    long countAB = 0, countAplus = 0, countAminus = 0;
    Letter prev = Letter::B;
    Ray z = ray_Lplus();
    for (long t = 0; t < iters; ++t) {
        auto [nz, letter] = step(z, a, b, eps_b);
        if (letter == Letter::A) ++countAplus;
        if (t > 0 && prev == Letter::A && letter == Letter::B) ++countAB;
        prev = letter;
        z = nz;
    }
    z = ray_Lminus();
    for (long t = 0; t < iters; ++t) {
        auto [nz, letter] = step(z, a, b, eps_b);
        if (letter == Letter::A) ++countAminus;
        z = nz;
    }
    est.theta = static_cast<double>(countAB) / static_cast<double>(iters);
    est.rho = static_cast<double>(countAplus + countAminus) / (2.0 * static_cast<double>(iters));
    return est;
}

Rank1Theta theta_on_rank1(int kappa, double b) {
    if (kappa < 2) throw std::invalid_argument("theta_on_rank1: kappa must be >= 2");
    Rank1Theta r;
    if (b > 2.0) r.theta = 0.0;
    else if (b < -2.0) r.theta = 1.0 / static_cast<double>(kappa + 1);
    else {
        double phi = std::acos(b / 2.0);
        r.theta = phi / (static_cast<double>(kappa) * phi + M_PI);
    }
    r.rho = static_cast<double>(kappa) * r.theta;
    return r;
}

SectorRays sector_rays(double a, int kappa) {
    if (kappa < 2) throw std::invalid_argument("sector_rays: kappa must be >= 2");
    const double lo = 2.0 * std::cos(M_PI / static_cast<double>(kappa - 1));
    const double hi = 2.0 * std::cos(M_PI / static_cast<double>(kappa));
    const double tol = 1e-12;
    if (!(a > lo + tol) || !(a <= hi + tol))
        throw std::invalid_argument("sector_rays: a outside (zeta_{kappa-1}, zeta_kappa]");
    SectorRays out;
    out.degenerate = std::fabs(a - hi) <= tol;
    // U_j(a) by the three-term recurrence
    double uPrev = 0.0, uCur = 1.0;   // U_0, U_1
    for (int j = 1; j <= kappa - 1; ++j) {
        double uNext = a * uCur - uPrev;   // U_{j+1}
        out.rays.push_back(make_ray(uCur, uNext));
        uPrev = uCur;
        uCur = uNext;
    }
    return out;
}

double mobius_slope(double a, double m) {
    if (std::isinf(m)) return 0.0;
    double d = a - m;
    if (d == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / d;
}

Region region_classify(double a, double b, double tol) {
    double mx = std::max(a, b);
    if (std::fabs(mx - 2.0) <= tol) return Region::Boundary;
    if (mx > 2.0) return Region::InteriorTheta0;
    if (a < 0.0 && b < 0.0) {
        if (std::fabs(a * b - 4.0) <= tol) return Region::Boundary;
        if (a * b < 4.0) return Region::InteriorThetaHalf;
    }
    return Region::Annulus;
}

const char* region_name(Region r) {
    switch (r) {
        case Region::InteriorTheta0: return "interiorTheta0";
        case Region::InteriorThetaHalf: return "interiorThetaHalf";
        case Region::Annulus: return "annulus";
        case Region::Boundary: return "boundary";
    }
    return "?";
}

} // namespace critcurve
