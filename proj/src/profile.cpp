#include "relcharge/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace relcharge {

namespace {

double eval_poly(const std::vector<double>& c, double s) {
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * s + c[k];
    return v;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<double>(k));
    return d;
}

// p(s) -> p(s) * s
std::vector<double> poly_shift(const std::vector<double>& c) {
    std::vector<double> r(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) r[k + 1] = c[k];
    return r;
}

std::vector<double> poly_axpy(const std::vector<double>& a, double s, const std::vector<double>& b) {
    std::vector<double> r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0.0);
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += s * b[k];
    return r;
}

}  // namespace

Profile Profile::zero() { return Profile{}; }

Profile Profile::sinusoid(double amplitude, double omega) {
    if (omega <= 0.0) throw std::invalid_argument("profile omega must be positive");
    Profile p;
    p.kind_ = Kind::sinusoid;
    p.amplitude_ = amplitude;
    p.omega_ = omega;
    return p;
}

Profile Profile::cosine(double amplitude, double omega) {
    if (omega <= 0.0) throw std::invalid_argument("profile omega must be positive");
    Profile p;
    p.kind_ = Kind::cosine;
    p.amplitude_ = amplitude;
    p.omega_ = omega;
    return p;
}

Profile Profile::polynomial(std::vector<double> coeffs) {
    Profile p;
    p.kind_ = Kind::polynomial;
    p.coeffs_ = std::move(coeffs);
    return p;
}

Profile Profile::gaussian_sinusoid(double amplitude, double omega, double sigma) {
    if (omega <= 0.0) throw std::invalid_argument("profile omega must be positive");
    if (sigma <= 0.0) throw std::invalid_argument("profile sigma must be positive");
    Profile p;
    p.kind_ = Kind::gaussian_sinusoid;
    p.amplitude_ = amplitude;
    p.omega_ = omega;
    p.sigma_ = sigma;
    // Derivative recurrence for g (P sin + Q cos) with g = exp(-s^2/2sigma^2):
    //   P_{k+1} = P' - (s/sigma^2) P - w Q
    //   Q_{k+1} = Q' - (s/sigma^2) Q + w P
    p.gp_[0] = {1.0};
    p.gq_[0] = {};
    double inv_s2 = 1.0 / (sigma * sigma);
    for (int k = 0; k < 3; ++k) {
        const auto& P = p.gp_[k];
        const auto& Q = p.gq_[k];
        p.gp_[k + 1] = poly_axpy(poly_axpy(poly_derivative(P), -inv_s2, poly_shift(P)), -omega, Q);
        p.gq_[k + 1] = poly_axpy(poly_axpy(poly_derivative(Q), -inv_s2, poly_shift(Q)), omega, P);
    }
    return p;
}

double Profile::derivative(int order, double s) const {
    switch (kind_) {
        case Kind::zero:
            return 0.0;
        case Kind::sinusoid: {
            // f = -(a/w) cos(w s)
            double a = amplitude_, w = omega_;
            switch (order) {
                case 0: return -(a / w) * std::cos(w * s);
                case 1: return a * std::sin(w * s);
                case 2: return a * w * std::cos(w * s);
                default: return -a * w * w * std::sin(w * s);
            }
        }
        case Kind::cosine: {
            // f = (a/w) sin(w s)
            double a = amplitude_, w = omega_;
            switch (order) {
                case 0: return (a / w) * std::sin(w * s);
                case 1: return a * std::cos(w * s);
                case 2: return -a * w * std::sin(w * s);
                default: return -a * w * w * std::cos(w * s);
            }
        }
        case Kind::polynomial: {
            std::vector<double> c = coeffs_;
            for (int k = 0; k < order; ++k) c = poly_derivative(c);
            return eval_poly(c, s);
        }
        case Kind::gaussian_sinusoid: {
            double g = std::exp(-0.5 * s * s / (sigma_ * sigma_));
            return amplitude_ * g *
                   (eval_poly(gp_[order], s) * std::sin(omega_ * s) +
                    eval_poly(gq_[order], s) * std::cos(omega_ * s));
        }
    }
    return 0.0;
}

double Profile::value(double s) const { return derivative(0, s); }
double Profile::d1(double s) const { return derivative(1, s); }
double Profile::d2(double s) const { return derivative(2, s); }
double Profile::d3(double s) const { return derivative(3, s); }

Profile Profile::with_amplitude(double amplitude) const {
    if (kind_ == Kind::zero || kind_ == Kind::polynomial)
        throw std::invalid_argument("profile has no amplitude parameter");
    Profile p = *this;
    p.amplitude_ = amplitude;
    return p;
}

}  // namespace relcharge
