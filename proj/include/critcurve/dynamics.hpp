#ifndef CRITCURVE_DYNAMICS_HPP
#define CRITCURVE_DYNAMICS_HPP

#include "critcurve/config.hpp"
#include "critcurve/word.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace critcurve {

/// Unit ray through the origin.
struct Ray {
    double x = 0.0;
    double y = 0.0;
    double angle() const;
};

Ray make_ray(double x, double y);   // normalizes

inline Ray ray_Lplus() { return Ray{0.0, 1.0}; }
inline Ray ray_Lminus() { return Ray{0.0, -1.0}; }

/// One application of the map: M_a if x > 0 or (|x| <= eps_b and y <= 0),
/// else M_b; the image is renormalized.
std::pair<Ray, Letter> step(const Ray& r, double a, double b, double eps_b = 1e-9);

/// Inverse step via the reversing symmetry R: (x,y) -> (y,x).
std::pair<Ray, Letter> inverse_step(const Ray& r, double a, double b, double eps_b = 1e-9);

struct BoundaryHit {
    int index = 0;     // step index t with |x_t| <= eps_b
    int which = 0;     // +1 for L+, -1 for L-
};

struct OrbitTrace {
    std::vector<Ray> rays;               // z_0..z_n
    Word code;                           // n letters
    std::vector<BoundaryHit> boundaryHits;
};

/// n steps from `start`, recording rays, branch letters and boundary hits.
OrbitTrace orbit_code(double a, double b, Ray start, int n, double eps_b = 1e-9);

/// Iterate from L- (sign '+') or L+ (sign '-') until the ray returns to a
/// boundary ray (|x| <= eps_b, t >= 2), or give up after maxSteps.
std::optional<std::pair<Word, OrbitTrace>>
boundary_segment(double a, double b, char sign, long maxSteps, double eps_b = 1e-9);

struct RotEstimate {
    double theta = 0.0;
    double rho = 0.0;
    long iters = 0;
    double errBound = 0.0;
    bool theta0Interior = false;   // parameters inside the Theta(0) interior
};

/// Frequency-count estimates: theta from the ab-factor count of the orbit of
/// (0,1); rho averaged over the a-letter frequencies of the (0,1) and (0,-1)
/// orbits.  errBound = 2/iters.
RotEstimate rotation_density(double a, double b, long iters, double eps_b = 1e-9);

struct Rank1Theta {
    double theta = 0.0;
    double rho = 0.0;
};

/// Exact rotation number on the rank-1 line a = zeta_kappa as a function of
/// b (0 for b > 2, arccos(b/2)/(kappa*arccos(b/2) + pi) for |b| <= 2,
/// 1/(kappa+1) for b < -2); rho = kappa * theta.
Rank1Theta theta_on_rank1(int kappa, double b);

struct SectorRays {
    std::vector<Ray> rays;     // r_j, j = 1..kappa-1
    bool degenerate = false;   // a at the right end zeta_kappa: last ray is (1,0)
};

/// Sector-delimiting rays r_j = normalize(U_j(a), U_{j+1}(a)) of dom(M_a)
/// for a in (zeta_{kappa-1}, zeta_kappa]; the closed right end is reported
/// as degenerate.
SectorRays sector_rays(double a, int kappa);

/// Slope map m -> 1/(a-m) on the projective line; infinities (either sign)
/// denote the point at infinity, mapped to 0; m = a maps to infinity.
double mobius_slope(double a, double m);

enum class Region { InteriorTheta0, InteriorThetaHalf, Annulus, Boundary };

/// Membership per the displayed resonance sets Theta(0) = {max(a,b) >= 2}
/// and Theta(1/2) = {ab <= 4, a,b < 0}; equality within tol is Boundary.
Region region_classify(double a, double b, double tol = 1e-12);

const char* region_name(Region r);

} // namespace critcurve

#endif
