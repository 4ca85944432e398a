#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degdyn {

/// Bivariate homogeneous form of degree d.
///
/// Stored densely: coeff(j) multiplies x^(d-j) y^j for j = 0..d.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial() : degree_(0), c_(1, 0.0) {}

    HomogeneousPolynomial(int degree, std::vector<double> coeffs)
        : degree_(degree), c_(std::move(coeffs)) {
        if (degree_ < 0)
            throw std::invalid_argument("HomogeneousPolynomial: negative degree");
        if (degree_ > kMaxDegree)
            throw std::invalid_argument("HomogeneousPolynomial: degree too large");
        if (static_cast<int>(c_.size()) != degree_ + 1)
            throw std::invalid_argument(
                "HomogeneousPolynomial: coefficient count must equal degree + 1");
        for (double v : c_)
            if (!std::isfinite(v))
                throw std::invalid_argument("HomogeneousPolynomial: non-finite coefficient");
    }

    static HomogeneousPolynomial zero(int degree) {
        return HomogeneousPolynomial(degree, std::vector<double>(degree + 1, 0.0));
    }

    /// c * x^ax * y^ay
    static HomogeneousPolynomial monomial(int ax, int ay, double c) {
        if (ax < 0 || ay < 0)
            throw std::invalid_argument("monomial: negative exponent");
        HomogeneousPolynomial p = zero(ax + ay);
        p.c_[ay] = c;
        return p;
    }

    int degree() const { return degree_; }
    double coeff(int j) const { return c_[static_cast<std::size_t>(j)]; }
    const std::vector<double>& coeffs() const { return c_; }

    double eval(double x, double y) const {
        // running powers keep sign flips exact, so odd forms satisfy
        // p(-x,-y) == -p(x,y) bit for bit
        double xp[kMaxDegree + 1];
        xp[0] = 1.0;
        for (int i = 1; i <= degree_; ++i) xp[i] = xp[i - 1] * x;
        double acc = 0.0, yj = 1.0;
        for (int j = 0; j <= degree_; ++j) {
            acc += c_[static_cast<std::size_t>(j)] * xp[degree_ - j] * yj;
            yj *= y;
        }
        return acc;
    }

    HomogeneousPolynomial dx() const {
        if (degree_ == 0)
            throw std::invalid_argument("dx: degree 0 form has no derivative here");
        HomogeneousPolynomial r = zero(degree_ - 1);
        for (int j = 0; j < degree_; ++j)
            r.c_[j] = c_[j] * static_cast<double>(degree_ - j);
        return r;
    }

    HomogeneousPolynomial dy() const {
        if (degree_ == 0)
            throw std::invalid_argument("dy: degree 0 form has no derivative here");
        HomogeneousPolynomial r = zero(degree_ - 1);
        for (int j = 1; j <= degree_; ++j)
            r.c_[j - 1] = c_[j] * static_cast<double>(j);
        return r;
    }

    /// Sum of |coeff|.  Bounds |p| <= coeff_abs_sum() * r^degree on both the
    /// euclidean and the sup ball of radius r.
    double coeff_abs_sum() const {
        double s = 0.0;
        for (double v : c_) s += std::abs(v);
        return s;
    }

    bool operator==(const HomogeneousPolynomial& o) const {
        return degree_ == o.degree_ && c_ == o.c_;
    }

    static constexpr int kMaxDegree = 63;

private:
    int degree_;
    std::vector<double> c_;
};

/// a*p + b*q for forms of equal degree.
inline HomogeneousPolynomial linear_combine(double a, const HomogeneousPolynomial& p,
                                            double b, const HomogeneousPolynomial& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("linear_combine: degree mismatch");
    std::vector<double> c(static_cast<std::size_t>(p.degree()) + 1);
    for (int j = 0; j <= p.degree(); ++j) c[j] = a * p.coeff(j) + b * q.coeff(j);
    return HomogeneousPolynomial(p.degree(), std::move(c));
}

inline HomogeneousPolynomial operator+(const HomogeneousPolynomial& p,
                                       const HomogeneousPolynomial& q) {
    return linear_combine(1.0, p, 1.0, q);
}

inline HomogeneousPolynomial operator-(const HomogeneousPolynomial& p,
                                       const HomogeneousPolynomial& q) {
    return linear_combine(1.0, p, -1.0, q);
}

inline HomogeneousPolynomial operator*(double a, const HomogeneousPolynomial& p) {
    return linear_combine(a, p, 0.0, p);
}

} // namespace degdyn
