#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critcurve/bivar_poly.hpp"
#include "critcurve/univar_poly.hpp"

#include <cmath>
#include <random>

using namespace critcurve;

namespace {

const BivarPoly A = BivarPoly::var_a();
const BivarPoly B = BivarPoly::var_b();
const BivarPoly One = BivarPoly::constant(1);

BivarPoly random_poly(std::mt19937_64& rng, int maxDeg = 4, int terms = 6) {
    BivarPoly p;
    for (int t = 0; t < terms; ++t) {
        int i = static_cast<int>(rng() % static_cast<unsigned>(maxDeg + 1));
        int j = static_cast<int>(rng() % static_cast<unsigned>(maxDeg + 1));
        long c = static_cast<long>(rng() % 21) - 10;
        p += Int(c) * [&] {
            BivarPoly m = One;
            for (int k = 0; k < i; ++k) m = m * A;
            for (int k = 0; k < j; ++k) m = m * B;
            return m;
        }();
    }
    return p;
}

long long phi_euler(int n) {
    long long r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

} // namespace

TEST_CASE("basic arithmetic in canonical form") {
    CHECK((A * B).to_string() == "ab");
    BivarPoly abm1 = A * B - One;
    CHECK((abm1 * abm1).to_string() == "a^2b^2 - 2ab + 1");
    BivarPoly left = A * A - A - One;
    BivarPoly right = A + One;
    CHECK((left + right) == A * A);
    CHECK((left + right).to_string() == "a^2");
}

TEST_CASE("ring axioms hold exactly on random triples") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        BivarPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("partial derivatives") {
    CHECK((A * B * B).partial_a() == B * B);
    CHECK((A * A - BivarPoly::constant(2)).partial_b().is_zero());
    BivarPoly p = A * B * B - A - B;
    CHECK(p.partial_b() == Int(2) * (A * B) - One);
}

TEST_CASE("poisson bracket") {
    CHECK(poisson_bracket(A, B) == One);
    CHECK(poisson_bracket(A * A, B) == Int(2) * A);
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        BivarPoly f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        CHECK(poisson_bracket(f, f).is_zero());
        CHECK(poisson_bracket(f, g) == -poisson_bracket(g, f));
        // bilinearity and Leibniz rule
        CHECK(poisson_bracket(f + g, h) == poisson_bracket(f, h) + poisson_bracket(g, h));
        CHECK(poisson_bracket(f * g, h) == f * poisson_bracket(g, h) + g * poisson_bracket(f, h));
    }
}

TEST_CASE("evaluation, floating and exact") {
    // Q_5 of the a^2 b^2 family
    BivarPoly q5 = A * A * B * B - A * B - B * B - A * A + One;
    CHECK(q5.eval(0.0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(q5.eval_exact(Rat(0), Rat(1)) == Rat(0));

    BivarPoly p = A * B * B - A - B;
    CHECK(p.eval(1.0, 1.0) == doctest::Approx(-1.0));
    CHECK(p.eval_exact(Rat(1), Rat(1)) == Rat(-1));

    BivarPoly am1 = A - One;
    CHECK(am1.eval(1.0, 123.456) == 0.0);
    CHECK(am1.eval_exact(Rat(1), Rat(77, 3)) == Rat(0));

    // rational point
    CHECK(p.eval_exact(Rat(1, 2), Rat(1, 3)) == Rat(1, 2) * Rat(1, 9) - Rat(1, 2) - Rat(1, 3));
}

TEST_CASE("chebyshev U basics") {
    CHECK(chebyshev_u(-1) == UnivarPoly(std::vector<Int>{Int(-1)}));
    CHECK(chebyshev_u(0).is_zero());
    CHECK(chebyshev_u(1) == UnivarPoly(std::vector<Int>{Int(1)}));
    CHECK(chebyshev_u(2).to_string() == "X");
    CHECK(chebyshev_u(3).to_string() == "X^2 - 1");
    for (int n = 1; n <= 20; ++n) CHECK(chebyshev_u(n).degree() == n - 1);
    CHECK(std::fabs(chebyshev_u(5).eval(2.0 * std::cos(M_PI / 5.0))) < 1e-12);
}

TEST_CASE("U_n(2cos t) = sin(nt)/sin(t) on a grid") {
    for (int n = 1; n <= 25; ++n) {
        UnivarPoly u = chebyshev_u(n);
        for (int k = 1; k <= 20; ++k) {
            double t = 0.123 + k * 0.15;
            if (std::fabs(std::sin(t)) < 1e-3) continue;
            double lhs = u.eval(2.0 * std::cos(t));
            double rhs = std::sin(n * t) / std::sin(t);
            CHECK(std::fabs(lhs - rhs) < 1e-9);
        }
    }
}

TEST_CASE("U splitting identity U_n = U_k U_{n-k+1} - U_{k-1} U_{n-k}") {
    for (int n = 1; n <= 40; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(chebyshev_u(n) ==
                  chebyshev_u(k) * chebyshev_u(n - k + 1) - chebyshev_u(k - 1) * chebyshev_u(n - k));
}

TEST_CASE("psi small cases") {
    CHECK(psi(1).to_string() == "X - 2");
    CHECK(psi(2).to_string() == "X + 2");
    CHECK(psi(5).to_string() == "X^2 + X - 1");
    CHECK(psi(6).to_string() == "X - 1");
    CHECK(std::fabs(psi(6).eval(2.0 * std::cos(M_PI / 3.0))) < 1e-12);
    CHECK(std::fabs(psi(5).eval(2.0 * std::cos(2.0 * M_PI / 5.0))) < 1e-12);
}

TEST_CASE("psi is monic of degree phi(n)/2 with roots 2cos(2 pi k/n)") {
    for (int n = 3; n <= 40; ++n) {
        UnivarPoly p = psi(n);
        CHECK(p.degree() == phi_euler(n) / 2);
        CHECK(p.coeffs.back() == 1);
        for (int k = 1; k <= n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            CHECK(std::fabs(p.eval(2.0 * std::cos(2.0 * M_PI * k / n))) < 1e-9);
        }
    }
}

TEST_CASE("cyclotomic sanity") {
    CHECK(cyclotomic(1).to_string("x") == "x - 1");
    CHECK(cyclotomic(2).to_string("x") == "x + 1");
    CHECK(cyclotomic(6).to_string("x") == "x^2 - x + 1");
    // product over divisors of 12 reconstructs x^12 - 1
    UnivarPoly prod(std::vector<Int>{Int(1)});
    for (int d : {1, 2, 3, 4, 6, 12}) prod = prod * cyclotomic(d);
    std::vector<Int> x12(13, Int(0));
    x12[0] = -1;
    x12[12] = 1;
    CHECK(prod == UnivarPoly(std::move(x12)));
}

TEST_CASE("real_roots finds simple roots") {
    // (X-1)(X+2)(X-3) = X^3 - 2X^2 - 5X + 6
    UnivarPoly p(std::vector<Int>{Int(6), Int(-5), Int(-2), Int(1)});
    auto roots = real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(-2.0));
    CHECK(roots[1] == doctest::Approx(1.0));
    CHECK(roots[2] == doctest::Approx(3.0));
}
