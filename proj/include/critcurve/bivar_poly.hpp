#ifndef CRITCURVE_BIVAR_POLY_HPP
#define CRITCURVE_BIVAR_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace critcurve {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

/// Exact dense integer polynomial in the indeterminates a and b,
/// stored as a canonical coefficient map (no zero entries).
class BivarPoly {
public:
    using Key = std::pair<int, int>;           // (i, j) for a^i b^j
    using Map = std::map<Key, Int>;

    BivarPoly() = default;
    static BivarPoly constant(Int c);
    static BivarPoly var_a();
    static BivarPoly var_b();

    bool is_zero() const { return coeffs_.empty(); }
    int deg_a() const;
    int deg_b() const;
    std::size_t term_count() const { return coeffs_.size(); }
    const Map& terms() const { return coeffs_; }
    Int coeff(int i, int j) const;
    void set_coeff(int i, int j, Int c);

    BivarPoly operator-() const;
    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    bool operator==(const BivarPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const BivarPoly& o) const { return coeffs_ != o.coeffs_; }

    BivarPoly partial_a() const;
    BivarPoly partial_b() const;

    /// Floating evaluation (two-level Horner).  Overflow surfaces as +-inf.
    double eval(double a, double b) const;
    /// Exact evaluation at rational points.
    Rat eval_exact(const Rat& a, const Rat& b) const;

    /// Coefficient of a^i, as a polynomial in b (dense coefficient list,
    /// index = power of b).  Used for asymptote extraction.
    std::vector<Int> coeff_of_a_power(int i) const;
    /// Coefficient of b^j, as a polynomial in a.
    std::vector<Int> coeff_of_b_power(int j) const;

    /// Sum of |c_ij * a^i * b^j|; conditioning scale for zero tests.
    double eval_abs(double a, double b) const;

    /// Canonical text: terms "c a^i b^j" sorted by total degree descending,
    /// then by i descending.
    std::string to_string() const;

private:
    Map coeffs_;
    void add_term(int i, int j, const Int& c);
};

BivarPoly operator*(const Int& c, const BivarPoly& p);

/// {f, g} = f_a g_b - f_b g_a
BivarPoly poisson_bracket(const BivarPoly& f, const BivarPoly& g);

/// Dense double-precision mirror of a BivarPoly for hot evaluation paths.
class PolyEvaluator {
public:
    PolyEvaluator() = default;
    explicit PolyEvaluator(const BivarPoly& p);
    double operator()(double a, double b) const;
    double abs_scale(double a, double b) const;     // sum of |term| values
    int deg_a() const { return na_; }
    int deg_b() const { return nb_; }

private:
    int na_ = -1, nb_ = -1;
    std::vector<double> c_;      // row-major: c_[i*(nb_+1)+j]
    std::vector<double> cabs_;
};

} // namespace critcurve

#endif
