#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critcurve/dynamics.hpp"
#include "critcurve/generation.hpp"

#include <cmath>
#include <random>

using namespace critcurve;

TEST_CASE("step on boundary rays and (1,0)") {
    auto [r1, l1] = step(ray_Lplus(), 0.7, -0.3);
    CHECK(l1 == Letter::B);
    CHECK(r1.x == doctest::Approx(-1.0));
    CHECK(r1.y == doctest::Approx(0.0));

    auto [r2, l2] = step(ray_Lminus(), 0.7, -0.3);
    CHECK(l2 == Letter::A);
    CHECK(r2.x == doctest::Approx(1.0));
    CHECK(r2.y == doctest::Approx(0.0));

    double a = 0.7;
    auto [r3, l3] = step(Ray{1.0, 0.0}, a, -0.3);
    CHECK(l3 == Letter::A);
    double n = std::hypot(a, 1.0);
    CHECK(r3.x == doctest::Approx(a / n));
    CHECK(r3.y == doctest::Approx(1.0 / n));
}

TEST_CASE("orbit at the origin parameter is the quarter-turn") {
    OrbitTrace tr = orbit_code(0.0, 0.0, ray_Lminus(), 4);
    CHECK(to_string(tr.code) == "a^2b^2");
    CHECK(tr.rays.back().x == doctest::Approx(0.0));
    CHECK(tr.rays.back().y == doctest::Approx(-1.0));
    REQUIRE(tr.boundaryHits.size() >= 3);   // t = 0, 2, 4
}

TEST_CASE("orbit at a = zeta_3 = 1 hits L+ after the block aaa") {
    OrbitTrace tr = orbit_code(1.0, 0.4321, ray_Lminus(), 3);
    CHECK(to_string(tr.code) == "a^3");
    CHECK(std::fabs(tr.rays.back().x) < 1e-12);
    CHECK(tr.rays.back().y > 0);
}

TEST_CASE("orbit at (0, zeta_5) follows the proper code of the worked example") {
    double z5 = 2.0 * std::cos(M_PI / 5.0);
    OrbitTrace tr = orbit_code(0.0, z5, ray_Lminus(), 23);
    CHECK(std::fabs(tr.rays.back().x) < 1e-9);
    CHECK(tr.rays.back().y > 0);

    std::set<int> freePos{0};
    for (const auto& h : tr.boundaryHits)
        if (h.index < 23) freePos.insert(h.index);
    CHECK(boundary_equivalent(parse_word("(a^2b^5)^3a^2"), tr.code, freePos));
    CHECK(boundary_equivalent(parse_word("(a^3b^4)^3a^2"), tr.code, freePos));
}

TEST_CASE("boundary_segment finds rank-1 words and reports escape as absent") {
    auto seg = boundary_segment(std::sqrt(2.0), 0.77, '+', 1000);
    REQUIRE(seg.has_value());
    CHECK(to_string(seg->first) == "a^4");
    CHECK(seg->first.n() == 4);

    auto esc = boundary_segment(3.0, 2.5, '+', 5000);
    CHECK_FALSE(esc.has_value());
}

TEST_CASE("rotation_density at reference parameters") {
    RotEstimate e0 = rotation_density(0.0, 0.0, 10000);
    CHECK(std::fabs(e0.theta - 0.25) <= e0.errBound);
    CHECK(std::fabs(e0.rho - 0.5) <= e0.errBound);

    // kappa = 3 rank-1 line with b < -2: theta = 1/4
    RotEstimate e1 = rotation_density(1.0, -3.0, 20000);
    CHECK(std::fabs(e1.theta - 0.25) <= e1.errBound);

    // a in (zeta_2, zeta_3), b in (zeta_3, zeta_4): kappa=3, ell=4 bounds
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        double a = 0.05 + 0.9 * (static_cast<double>(rng() % 1000) / 1000.0);
        double b = 1.05 + (std::sqrt(2.0) - 1.1) * (static_cast<double>(rng() % 1000) / 1000.0);
        RotEstimate e = rotation_density(a, b, 20000);
        CHECK(e.theta >= 1.0 / 7.0 - e.errBound);
        CHECK(e.theta <= 1.0 / 5.0 + e.errBound);
        CHECK(e.rho >= 2.0 / 6.0 - e.errBound);
        CHECK(e.rho <= 3.0 / 6.0 + e.errBound);
    }

    CHECK(rotation_density(3.0, 0.0, 1000).theta0Interior);
    CHECK_THROWS_AS(rotation_density(0.0, 0.0, 10), std::invalid_argument);
}

TEST_CASE("theta_on_rank1 piecewise formula") {
    CHECK(theta_on_rank1(3, 2.5).theta == 0.0);
    CHECK(theta_on_rank1(3, -2.5).theta == doctest::Approx(0.25));
    // b = zeta_ell gives 1/(kappa+ell)
    for (int kappa = 2; kappa <= 6; ++kappa)
        for (int ell = 2; ell <= 6; ++ell) {
            Rank1Theta t = theta_on_rank1(kappa, zeta(ell));
            CHECK(t.theta == doctest::Approx(1.0 / (kappa + ell)).epsilon(1e-12));
            CHECK(t.rho == doctest::Approx(static_cast<double>(kappa) / (kappa + ell)).epsilon(1e-12));
        }
}

TEST_CASE("theta estimate matches the rank-1 formula") {
    std::mt19937_64 rng(7);
    for (int kappa = 2; kappa <= 4; ++kappa) {
        for (int trial = 0; trial < 3; ++trial) {
            double b = -1.9 + 3.8 * (static_cast<double>(rng() % 1000) / 1000.0);
            RotEstimate est = rotation_density(zeta(kappa), b, 100000);
            Rank1Theta exact = theta_on_rank1(kappa, b);
            CHECK(std::fabs(est.theta - exact.theta) <= est.errBound);
        }
    }
}

TEST_CASE("sector rays") {
    // kappa = 2: a in (-2, 0), single ray (1, a) normalized
    SectorRays s2 = sector_rays(-0.8, 2);
    REQUIRE(s2.rays.size() == 1);
    double n = std::hypot(1.0, -0.8);
    CHECK(s2.rays[0].x == doctest::Approx(1.0 / n));
    CHECK(s2.rays[0].y == doctest::Approx(-0.8 / n));
    CHECK_FALSE(s2.degenerate);

    // kappa = 3: a in (0, 1), rays (1, a), (a, a^2 - 1)
    SectorRays s3 = sector_rays(0.5, 3);
    REQUIRE(s3.rays.size() == 2);
    CHECK(s3.rays[1].x == doctest::Approx(0.5 / std::hypot(0.5, -0.75)));

    // right end: degenerate, last ray is (1, 0)
    SectorRays sd = sector_rays(zeta(4), 4);
    CHECK(sd.degenerate);
    CHECK(sd.rays.back().x == doctest::Approx(1.0));
    CHECK(sd.rays.back().y == doctest::Approx(0.0).epsilon(1e-9));

    CHECK_THROWS_AS(sector_rays(1.5, 3), std::invalid_argument);
}

TEST_CASE("sector rays rotate anti-clockwise as a increases") {
    for (int kappa = 3; kappa <= 6; ++kappa) {
        double lo = zeta(kappa - 1), hi = zeta(kappa);
        double a1 = lo + 0.3 * (hi - lo), a2 = lo + 0.7 * (hi - lo);
        SectorRays r1 = sector_rays(a1, kappa), r2 = sector_rays(a2, kappa);
        for (std::size_t j = 0; j < r1.rays.size(); ++j)
            CHECK(r2.rays[j].angle() > r1.rays[j].angle());
    }
}

TEST_CASE("mobius slope map") {
    CHECK(mobius_slope(1.3, std::numeric_limits<double>::infinity()) == 0.0);
    CHECK(std::isinf(mobius_slope(1.3, 1.3)));

    // fixed points for |a| > 2 multiply to 1
    double a = 2.6;
    double lp = a / 2.0 + std::sqrt(a * a / 4.0 - 1.0);
    double lm = a / 2.0 - std::sqrt(a * a / 4.0 - 1.0);
    CHECK(mobius_slope(a, lp) == doctest::Approx(lp));
    CHECK(mobius_slope(a, lm) == doctest::Approx(lm));
    CHECK(lp * lm == doctest::Approx(1.0));

    // m -> 1/m conjugates mu_a to its inverse
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        double m = -5.0 + 10.0 * (static_cast<double>(rng() % 10000) / 10000.0);
        if (std::fabs(m) < 1e-3) continue;
        double lhs = 1.0 / mobius_slope(a, 1.0 / m);
        double inverse = a - 1.0 / m;   // mu_a^{-1}(m)
        CHECK(lhs == doctest::Approx(inverse).epsilon(1e-9));
    }
}

TEST_CASE("region classification follows the displayed sets") {
    CHECK(region_classify(3.0, 0.0) == Region::InteriorTheta0);
    CHECK(region_classify(-3.0, -3.0) == Region::Annulus);
    CHECK(region_classify(0.0, 0.0) == Region::Annulus);
    CHECK(region_classify(2.0, 0.0) == Region::Boundary);
    CHECK(region_classify(-1.0, -1.0) == Region::InteriorThetaHalf);
    CHECK(region_classify(-2.0, -2.0) == Region::Boundary);
}

TEST_CASE("reversibility: F^{-k+1}(0,-1) = R F^k(0,1)") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        double a = -1.9 + 3.8 * (static_cast<double>(rng() % 10000) / 10000.0);
        double b = -1.9 + 3.8 * (static_cast<double>(rng() % 10000) / 10000.0);
        if (a < 0 && b < 0) { b = -b; }
        Ray fwd = ray_Lplus();
        Ray bwd = ray_Lminus();
        for (int k = 1; k <= 50; ++k) {
            fwd = step(fwd, a, b).first;              // F^k (0,1)
            if (k >= 2) bwd = inverse_step(bwd, a, b).first;   // F^{-k+1}(0,-1)
            CHECK(std::fabs(bwd.x - fwd.y) < 1e-9);
            CHECK(std::fabs(bwd.y - fwd.x) < 1e-9);
        }
    }
}

TEST_CASE("maximal a-blocks have kappa-1 or kappa letters") {
    std::mt19937_64 rng(21);
    for (int kappa = 2; kappa <= 5; ++kappa) {
        double lo = zeta(kappa - 1), hi = zeta(kappa);
        for (int trial = 0; trial < 3; ++trial) {
            double a = lo + (0.1 + 0.8 * (static_cast<double>(rng() % 1000) / 1000.0)) * (hi - lo);
            double b = 0.3 + 0.4 * (static_cast<double>(rng() % 1000) / 1000.0);
            OrbitTrace tr = orbit_code(a, b, Ray{0.6, -0.8}, 10000);
            const auto& L = tr.code.letters;
            std::size_t i = 0;
            while (i < L.size()) {
                std::size_t j = i;
                while (j < L.size() && L[j] == L[i]) ++j;
                // interior maximal blocks only
                if (L[i] == Letter::A && i > 0 && j < L.size()) {
                    long len = static_cast<long>(j - i);
                    CHECK(len >= kappa - 1);
                    CHECK(len <= kappa);
                }
                i = j;
            }
        }
    }
}

TEST_CASE("parameter exchange conjugacy under T swaps codes") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 10; ++trial) {
        double a = -1.5 + 3.0 * (static_cast<double>(rng() % 1000) / 1000.0);
        double b = -1.5 + 3.0 * (static_cast<double>(rng() % 1000) / 1000.0);
        OrbitTrace ab = orbit_code(a, b, ray_Lminus(), 2000);
        OrbitTrace ba = orbit_code(b, a, ray_Lplus(), 2000);
        for (int t = 0; t < 2000; ++t)
            CHECK(ab.code.at(t) == other(ba.code.at(t)));
    }
}

TEST_CASE("symmetry-line crossing of boundary segments") {
    // odd n: middle ray on y = x
    auto seg = boundary_segment(1.0, 0.3, '+', 100);   // word a^3, n = 3
    REQUIRE(seg.has_value());
    REQUIRE(seg->first.n() == 3);
    const Ray& mid = seg->second.rays[2];   // z_{k+1}, k = 1
    CHECK(std::fabs(mid.x - mid.y) < 1e-9);

    // even n: z_{k+1} on Fix(F R): x = (param/2) y
    auto seg4 = boundary_segment(std::sqrt(2.0), -0.8, '+', 100);   // word a^4
    REQUIRE(seg4.has_value());
    REQUIRE(seg4->first.n() == 4);
    const Ray& q = seg4->second.rays[3];    // z_{k+1}, k = 2
    double p = (q.y > 0) ? std::sqrt(2.0) : -0.8;
    CHECK(std::fabs(q.x - 0.5 * p * q.y) < 1e-9);
}
