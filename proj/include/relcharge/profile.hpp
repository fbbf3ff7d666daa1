#pragma once

#include <array>
#include <string>
#include <vector>

namespace relcharge {

// Scalar pulse/profile shape f(s) carried together with its analytic
// derivatives.  Potentials use f', field strengths f'' and their
// gradients f''', so all are supplied in closed form per shape.
class Profile {
public:
    enum class Kind { zero, sinusoid, cosine, polynomial, gaussian_sinusoid };

    static Profile zero();
    // f = -(a/w) cos(w s), so f' = a sin(w s)
    static Profile sinusoid(double amplitude, double omega);
    // f = (a/w) sin(w s), so f' = a cos(w s)
    static Profile cosine(double amplitude, double omega);
    // f = sum_k coeffs[k] s^k
    static Profile polynomial(std::vector<double> coeffs);
    // f = a exp(-s^2 / (2 sigma^2)) sin(w s)
    static Profile gaussian_sinusoid(double amplitude, double omega, double sigma);

    double value(double s) const;  // f(s)
    double d1(double s) const;     // f'(s)
    double d2(double s) const;
    double d3(double s) const;

    Kind kind() const { return kind_; }
    double amplitude() const { return amplitude_; }
    double omega() const { return omega_; }
    double sigma() const { return sigma_; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    // Rescale the overall amplitude (used by parameter sweeps).
    Profile with_amplitude(double amplitude) const;

private:
    Profile() = default;

    double derivative(int order, double s) const;

    Kind kind_{Kind::zero};
    double amplitude_{0}, omega_{1}, sigma_{1};
    std::vector<double> coeffs_;
    // gaussian_sinusoid: f^(k) = a g(s) (P_k(s) sin(w s) + Q_k(s) cos(w s))
    std::array<std::vector<double>, 4> gp_, gq_;
};

}  // namespace relcharge
