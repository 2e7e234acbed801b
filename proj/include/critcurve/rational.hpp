#ifndef CRITCURVE_RATIONAL_HPP
#define CRITCURVE_RATIONAL_HPP

#include <numeric>
#include <stdexcept>
#include <string>

namespace critcurve {

/// Small exact rational for rotation numbers (numerators/denominators here
/// are word ranks and lengths, far below overflow range).
struct Rational64 {
    long long num = 0;
    long long den = 1;

    Rational64() = default;
    Rational64(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational64: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
    bool operator==(const Rational64& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational64& o) const { return !(*this == o); }
};

} // namespace critcurve

#endif
