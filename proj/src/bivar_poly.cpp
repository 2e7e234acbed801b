#include "critcurve/bivar_poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace critcurve {

BivarPoly BivarPoly::constant(Int c) {
    BivarPoly p;
    if (c != 0) p.coeffs_[{0, 0}] = std::move(c);
    return p;
}

BivarPoly BivarPoly::var_a() {
    BivarPoly p;
    p.coeffs_[{1, 0}] = 1;
    return p;
}

BivarPoly BivarPoly::var_b() {
    BivarPoly p;
    p.coeffs_[{0, 1}] = 1;
    return p;
}

int BivarPoly::deg_a() const {
    int d = 0;
    for (auto& [k, c] : coeffs_) d = std::max(d, k.first);
    return coeffs_.empty() ? -1 : d;
}

int BivarPoly::deg_b() const {
    int d = 0;
    for (auto& [k, c] : coeffs_) d = std::max(d, k.second);
    return coeffs_.empty() ? -1 : d;
}

Int BivarPoly::coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Int(0) : it->second;
}

void BivarPoly::set_coeff(int i, int j, Int c) {
    if (c == 0) coeffs_.erase({i, j});
    else coeffs_[{i, j}] = std::move(c);
}

void BivarPoly::add_term(int i, int j, const Int& c) {
    if (c == 0) return;
    auto it = coeffs_.find({i, j});
    if (it == coeffs_.end()) {
        coeffs_.emplace(Key{i, j}, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
    return r;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    r += o;
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
    BivarPoly r = *this;
    r -= o;
    return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (auto& [k, c] : o.coeffs_) add_term(k.first, k.second, -c);
    return *this;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (auto& [k1, c1] : coeffs_)
        for (auto& [k2, c2] : o.coeffs_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

BivarPoly operator*(const Int& c, const BivarPoly& p) {
    return BivarPoly::constant(c) * p;
}

BivarPoly BivarPoly::partial_a() const {
    BivarPoly r;
    for (auto& [k, c] : coeffs_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * k.first);
    return r;
}

BivarPoly BivarPoly::partial_b() const {
    BivarPoly r;
    for (auto& [k, c] : coeffs_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, c * k.second);
    return r;
}

double BivarPoly::eval(double a, double b) const {
    return PolyEvaluator(*this)(a, b);
}

double BivarPoly::eval_abs(double a, double b) const {
    return PolyEvaluator(*this).abs_scale(a, b);
}

Rat BivarPoly::eval_exact(const Rat& a, const Rat& b) const {
    // Horner in b over rows collected by power of a.
    const int na = deg_a(), nb = deg_b();
    if (coeffs_.empty()) return Rat(0);
    Rat result(0);
    Rat apow(1);
    for (int i = 0; i <= na; ++i) {
        Rat row(0);
        for (int j = nb; j >= 0; --j) {
            row *= b;
            Int c = coeff(i, j);
            if (c != 0) row += Rat(c);
        }
        result += row * apow;
        apow *= a;
    }
    return result;
}

std::vector<Int> BivarPoly::coeff_of_a_power(int i) const {
    std::vector<Int> out(static_cast<std::size_t>(std::max(0, deg_b() + 1)), Int(0));
    for (auto& [k, c] : coeffs_)
        if (k.first == i) out[static_cast<std::size_t>(k.second)] = c;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<Int> BivarPoly::coeff_of_b_power(int j) const {
    std::vector<Int> out(static_cast<std::size_t>(std::max(0, deg_a() + 1)), Int(0));
    for (auto& [k, c] : coeffs_)
        if (k.second == j) out[static_cast<std::size_t>(k.first)] = c;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::string BivarPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    // total degree descending, then i descending
    std::vector<std::pair<Key, Int>> terms(coeffs_.begin(), coeffs_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        int tx = x.first.first + x.first.second, ty = y.first.first + y.first.second;
        if (tx != ty) return tx > ty;
        return x.first.first > y.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms) {
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool hasVars = k.first > 0 || k.second > 0;
        if (ac != 1 || !hasVars) os << ac.str();
        if (k.first > 0) { os << "a"; if (k.first > 1) os << "^" << k.first; }
        if (k.second > 0) { os << "b"; if (k.second > 1) os << "^" << k.second; }
    }
    return os.str();
}

BivarPoly poisson_bracket(const BivarPoly& f, const BivarPoly& g) {
    return f.partial_a() * g.partial_b() - f.partial_b() * g.partial_a();
}

PolyEvaluator::PolyEvaluator(const BivarPoly& p) {
    na_ = std::max(0, p.deg_a());
    nb_ = std::max(0, p.deg_b());
    c_.assign(static_cast<std::size_t>((na_ + 1) * (nb_ + 1)), 0.0);
    cabs_.assign(c_.size(), 0.0);
    for (auto& [k, c] : p.terms()) {
        double v = c.convert_to<double>();
        c_[static_cast<std::size_t>(k.first * (nb_ + 1) + k.second)] = v;
        cabs_[static_cast<std::size_t>(k.first * (nb_ + 1) + k.second)] = std::fabs(v);
    }
}

double PolyEvaluator::operator()(double a, double b) const {
    if (c_.empty()) return 0.0;
    double result = 0.0;
    for (int i = na_; i >= 0; --i) {
        const double* row = &c_[static_cast<std::size_t>(i * (nb_ + 1))];
        double r = 0.0;
        for (int j = nb_; j >= 0; --j) r = r * b + row[j];
        result = result * a + r;
    }
    return result;
}

double PolyEvaluator::abs_scale(double a, double b) const {
    if (cabs_.empty()) return 0.0;
    const double aa = std::fabs(a), ab = std::fabs(b);
    double result = 0.0;
    for (int i = na_; i >= 0; --i) {
        const double* row = &cabs_[static_cast<std::size_t>(i * (nb_ + 1))];
        double r = 0.0;
        for (int j = nb_; j >= 0; --j) r = r * ab + row[j];
        result = result * aa + r;
    }
    return result;
}

} // namespace critcurve
