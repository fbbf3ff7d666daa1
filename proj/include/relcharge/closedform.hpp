#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>

#include "relcharge/fields.hpp"
#include "relcharge/invariants.hpp"

namespace relcharge {

// exp(M) by scaling and squaring with a diagonal Pade approximant.
// Chosen over eigendecomposition because the oscillator matrices become
// defective at resonant parameter values.
Eigen::Matrix4d matrix_exponential(const Eigen::Matrix4d& m);

// Analytic orbit through `initial`, usable as an oracle for the
// numerical integrator.  Conserved quantities are fixed at launch and
// x- comes from an adaptive quadrature anchored there.
class ClosedFormOrbit {
public:
    ClosedFormOrbit(std::string system, double launch_time,
                    std::function<FrontFormState(double)> eval)
        : system_(std::move(system)), launch_time_(launch_time), eval_(std::move(eval)) {}

    const std::string& system() const { return system_; }
    double launch_time() const { return launch_time_; }
    FrontFormState at(double x_plus) const { return eval_(x_plus); }

private:
    std::string system_;
    double launch_time_;
    std::function<FrontFormState(double)> eval_;
};

// x(x+) = (Q4 + f1(x+) - Q1 x+) / (2 Q3), y likewise; x- by quadrature.
ClosedFormOrbit plane_wave_orbit(const PlaneWave& spec, const FrontFormState& initial);

// Transverse coordinates from the conserved Q5/Q4tilde pair, momenta read
// off algebraically, x- by the remaining quadrature.
ClosedFormOrbit tm_orbit(const TmMode& spec, const FrontFormState& initial);

// Linear evolution of the coupled-oscillator reduction (alpha, beta,
// alpha', beta') by matrix exponential.
class OscillatorTrajectory {
public:
    OscillatorTrajectory(double eps, const OscillatorState& initial);

    OscillatorState at(double phi) const;
    double eps() const { return eps_; }
    const OscillatorState& initial() const { return initial_; }

private:
    double eps_;
    OscillatorState initial_;
    Eigen::Matrix4d m_;
    Eigen::Vector4d y0_;
};

OscillatorTrajectory vortex_transverse_orbit(double eps, const OscillatorState& initial);

// Transverse oscillator coordinates of a front-form vortex state and back.
OscillatorState to_oscillator(const Vortex& spec, const FrontFormState& s);
FrontFormState from_oscillator(const Vortex& spec, const OscillatorState& osc, double p_minus,
                               double x_minus);

// x-(x+) from dx-/dx+ = H / p_- along a known transverse orbit.
double vortex_xminus(const Vortex& spec, const OscillatorTrajectory& orbit, double p_minus,
                     double launch_x_plus, double launch_x_minus, double x_plus);

// Full front-form vortex orbit assembled from the pieces above.
ClosedFormOrbit vortex_orbit(const Vortex& spec, const FrontFormState& initial);

// Dispatcher; throws std::invalid_argument("no closed form") for systems
// without one (free is a plane wave with vanishing profiles).
ClosedFormOrbit closed_form_orbit(const FieldSpec& spec, const FrontFormState& initial);

}  // namespace relcharge
