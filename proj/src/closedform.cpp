#include "relcharge/closedform.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "relcharge/quadrature.hpp"

namespace relcharge {

Eigen::Matrix4d matrix_exponential(const Eigen::Matrix4d& m) {
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Eigen::Matrix4d a = m / std::pow(2.0, squarings);

    // diagonal Pade(6, 6)
    constexpr double c[7] = {1.0,         1.0 / 2,      5.0 / 44, 1.0 / 66,
                             1.0 / 792,   1.0 / 15840,  1.0 / 665280};
    const Eigen::Matrix4d a2 = a * a;
    Eigen::Matrix4d even = c[0] * Eigen::Matrix4d::Identity() + c[2] * a2;
    Eigen::Matrix4d odd = c[1] * Eigen::Matrix4d::Identity() + c[3] * a2;
    Eigen::Matrix4d a_pow = a2;
    for (int k = 4; k < 7; k += 2) {
        a_pow = a_pow * a2;
        even += c[k] * a_pow;
        if (k + 1 < 7) odd += c[k + 1] * a_pow;
    }
    odd = a * odd;
    const Eigen::Matrix4d numer = even + odd;
    const Eigen::Matrix4d denom = even - odd;
    Eigen::Matrix4d f = denom.partialPivLu().solve(numer);
    for (int i = 0; i < squarings; ++i) f = f * f;
    return f;
}

ClosedFormOrbit plane_wave_orbit(const PlaneWave& spec, const FrontFormState& initial) {
    if (initial.p_minus == 0.0) throw std::domain_error("zero longitudinal momentum");
    const double u0 = initial.x_plus;
    const double q1 = initial.p1, q2 = initial.p2, q3 = initial.p_minus;
    const double q4 = 2.0 * initial.x * q3 + u0 * q1 - spec.f1.value(u0);
    const double q5 = 2.0 * initial.y * q3 + u0 * q2 - spec.f2.value(u0);
    const double xm0 = initial.x_minus;
    const Profile f1 = spec.f1, f2 = spec.f2;

    auto eval = [=](double u) {
        FrontFormState s;
        s.x_plus = u;
        s.x = (q4 + f1.value(u) - q1 * u) / (2.0 * q3);
        s.y = (q5 + f2.value(u) - q2 * u) / (2.0 * q3);
        s.p_minus = q3;
        s.p1 = q1;
        s.p2 = q2;
        s.x_minus = xm0 + integrate_gk(
                              [&](double w) {
                                  const double a = q1 - f1.d1(w);
                                  const double b = q2 - f2.d1(w);
                                  return (1.0 + a * a + b * b) / (4.0 * q3 * q3);
                              },
                              u0, u, {1e-10, 48});
        return s;
    };
    return ClosedFormOrbit("plane_wave", u0, eval);
}

ClosedFormOrbit tm_orbit(const TmMode& spec, const FrontFormState& initial) {
    const double u0 = initial.x_plus;
    if (u0 == 0.0) throw std::domain_error("singular launch time");
    const double pm = initial.p_minus;
    const Profile f = spec.f;

    auto check_path = [f, u0, pm](double u) {
        if (u == 0.0 || (u > 0) != (u0 > 0)) throw std::domain_error("quadrature pole");
        if (sign_change_on([&](double s) { return 2.0 * pm + f.value(s); }, u0, u))
            throw std::domain_error("quadrature pole");
    };
    check_path(u0);

    const double q1 = 2.0 * initial.x * pm + u0 * initial.p1;
    const double q2 = 2.0 * initial.y * pm + u0 * initial.p2;
    const double q5 = initial.x / u0;      // anchored quadrature vanishes at launch
    const double q4t = initial.y / u0;
    const double xm0 = initial.x_minus;

    auto quad_i = [f, u0, pm, check_path](double u) {
        check_path(u);
        return integrate_gk(
            [&](double s) { return 1.0 / (s * s * (2.0 * pm + f.value(s))); }, u0, u, {1e-10, 48});
    };

    auto eval = [=](double u) {
        const double i = quad_i(u);
        FrontFormState s;
        s.x_plus = u;
        s.x = (q5 - q1 * i) * u;
        s.y = (q4t - q2 * i) * u;
        s.p_minus = pm;
        s.p1 = (q1 - 2.0 * s.x * pm) / u;
        s.p2 = (q2 - 2.0 * s.y * pm) / u;
        s.x_minus = xm0 + integrate_gk(
                              [&](double w) {
                                  const double iw = quad_i(w);
                                  const double xw = (q5 - q1 * iw) * w;
                                  const double yw = (q4t - q2 * iw) * w;
                                  const double fw = f.value(w);
                                  const double pi1 = (q1 - 2.0 * xw * pm) / w - xw * fw / w;
                                  const double pi2 = (q2 - 2.0 * yw * pm) / w - yw * fw / w;
                                  const double den = 2.0 * pm + fw;
                                  return (1.0 + pi1 * pi1 + pi2 * pi2) / (den * den);
                              },
                              u0, u, {1e-10, 48});
        return s;
    };
    return ClosedFormOrbit("tm_mode", u0, eval);
}

OscillatorTrajectory::OscillatorTrajectory(double eps, const OscillatorState& initial)
    : eps_(eps), initial_(initial) {
    const double ep = 0.25 + eps, em = 0.25 - eps;
    m_ << 0, 0, 1, 0,
          0, 0, 0, 1,
          ep, 0, 0, 1,
          0, em, -1, 0;
    y0_ << initial.alpha, initial.beta, initial.p_alpha + 0.5 * initial.beta,
        initial.p_beta - 0.5 * initial.alpha;
}

OscillatorState OscillatorTrajectory::at(double phi) const {
    const Eigen::Vector4d y = matrix_exponential(m_ * (phi - initial_.phi)) * y0_;
    OscillatorState s;
    s.phi = phi;
    s.alpha = y(0);
    s.beta = y(1);
    s.p_alpha = y(2) - 0.5 * y(1);
    s.p_beta = y(3) + 0.5 * y(0);
    return s;
}

OscillatorTrajectory vortex_transverse_orbit(double eps, const OscillatorState& initial) {
    return OscillatorTrajectory(eps, initial);
}

OscillatorState to_oscillator(const Vortex& spec, const FrontFormState& s) {
    if (s.p_minus == 0.0) throw std::domain_error("zero longitudinal momentum");
    const double phi = spec.omega * s.x_plus;
    const std::complex<double> rot = std::polar(1.0, -0.5 * phi);
    const std::complex<double> z{s.x, s.y};
    const std::complex<double> chi = rot * z;

    const Covector a = potential(spec, position_of(s));
    const std::complex<double> v{-(s.p1 - a[1]) / (2.0 * s.p_minus),
                                 -(s.p2 - a[2]) / (2.0 * s.p_minus)};
    const std::complex<double> zp = v / spec.omega;  // dz/dphi
    const std::complex<double> chip = rot * (zp - std::complex<double>(0, 0.5) * z);

    OscillatorState osc;
    osc.phi = phi;
    osc.alpha = chi.real();
    osc.beta = chi.imag();
    osc.p_alpha = chip.real() - 0.5 * osc.beta;
    osc.p_beta = chip.imag() + 0.5 * osc.alpha;
    return osc;
}

FrontFormState from_oscillator(const Vortex& spec, const OscillatorState& osc, double p_minus,
                               double x_minus) {
    if (p_minus == 0.0) throw std::domain_error("zero longitudinal momentum");
    const double phi = osc.phi;
    const std::complex<double> rot = std::polar(1.0, 0.5 * phi);
    const std::complex<double> chi{osc.alpha, osc.beta};
    const std::complex<double> z = rot * chi;
    // chi' + i chi / 2 = p_alpha + i p_beta
    const std::complex<double> zp = rot * std::complex<double>(osc.p_alpha, osc.p_beta);
    const std::complex<double> v = spec.omega * zp;

    FrontFormState s;
    s.x_plus = phi / spec.omega;
    s.x = z.real();
    s.y = z.imag();
    s.x_minus = x_minus;
    s.p_minus = p_minus;
    const Covector a = potential(spec, position_of(s));
    s.p1 = -2.0 * p_minus * v.real() + a[1];
    s.p2 = -2.0 * p_minus * v.imag() + a[2];
    return s;
}

double vortex_xminus(const Vortex& spec, const OscillatorTrajectory& orbit, double p_minus,
                     double launch_x_plus, double launch_x_minus, double x_plus) {
    if (p_minus == 0.0) throw std::domain_error("zero longitudinal momentum");
    const double w = spec.omega;
    auto h_over_pm = [&](double u) {
        const OscillatorState osc = orbit.at(w * u);
        const double h = p_minus * w * w * (osc.p_alpha * osc.p_alpha + osc.p_beta * osc.p_beta) +
                         1.0 / (4.0 * p_minus);
        return h / p_minus;
    };
    return launch_x_minus + integrate_gk(h_over_pm, launch_x_plus, x_plus, {1e-10, 48});
}

ClosedFormOrbit vortex_orbit(const Vortex& spec, const FrontFormState& initial) {
    if (initial.p_minus == 0.0) throw std::domain_error("zero longitudinal momentum");
    const double eps = spec.B0 / (2.0 * spec.omega * initial.p_minus);
    const OscillatorTrajectory transverse(eps, to_oscillator(spec, initial));
    const double pm = initial.p_minus;
    const double u0 = initial.x_plus;
    const double xm0 = initial.x_minus;
    const Vortex vx = spec;

    auto eval = [=](double u) {
        FrontFormState s = from_oscillator(vx, transverse.at(vx.omega * u), pm, 0.0);
        s.x_minus = vortex_xminus(vx, transverse, pm, u0, xm0, u);
        return s;
    };
    return ClosedFormOrbit("vortex", u0, eval);
}

ClosedFormOrbit closed_form_orbit(const FieldSpec& spec, const FrontFormState& initial) {
    if (const auto* pw = std::get_if<PlaneWave>(&spec)) return plane_wave_orbit(*pw, initial);
    if (const auto* tm = std::get_if<TmMode>(&spec)) return tm_orbit(*tm, initial);
    if (const auto* vx = std::get_if<Vortex>(&spec)) return vortex_orbit(*vx, initial);
    if (std::holds_alternative<Free>(spec))
        return plane_wave_orbit(PlaneWave{Profile::zero(), Profile::zero()}, initial);
    throw std::invalid_argument("no closed form");
}

}  // namespace relcharge
