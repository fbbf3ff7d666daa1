#pragma once

#include <string>
#include <vector>

#include "relcharge/dynamics.hpp"
#include "relcharge/fields.hpp"

namespace relcharge {

// Named conserved quantities of one background, plus algebraic identities
// between them that hold pointwise (residuals expected to vanish).
template <class State>
struct InvariantSet {
    std::string system;
    std::vector<PhaseFunction<State>> quantities;
    std::vector<PhaseFunction<State>> identities;

    const PhaseFunction<State>* find(const std::string& name) const;
    std::vector<std::string> quantity_names() const;
};

// Q1 = p_1, Q2 = p_2, Q3 = p_-,
// Q4 = 2 x p_- + x+ p_1 - f1(x+), Q5 = 2 y p_- + x+ p_2 - f2(x+)
InvariantSet<FrontFormState> plane_wave_invariants(const PlaneWave& f);

// Q1 = 2 x p_- + x+ p_1, Q2 = 2 y p_- + x+ p_2, Q3 = p_-, Q4 = L_z,
// Q5 = x/x+ + Q1 I(x+), Q4tilde = y/x+ + Q2 I(x+)
// with I the quadrature of 1/(s^2 (2 p_- + f(s))) anchored at launch_time.
// Identity: Q2 Q5 - Q1 Q4tilde - Q4 = 0.
InvariantSet<FrontFormState> tm_invariants(const TmMode& f, double launch_time);

// Q1 = p_1, Q2 = p_2, Q3 = H, Q4 = p_3 + w L_z,
// u = Q3^2 - Q1^2 - Q2^2 - 1 - b0^2.
// Identities: r1 = p_3^2 - 2 b0 (p_1 cos(wz) + p_2 sin(wz)) - u and the
// turning-point-free differential residual r2 = dy/dt p_3 - dz/dt (p_2 - b0 sin(wz)).
InvariantSet<InstantFormState> undulator_invariants(const Undulator& f);

// Q1 = p_- plus the hyperbolic/trigonometric quartet Q2..Q5 and the
// quadratic boost charge Q2tilde; identity: Q2tilde equals
// Q1/2 (Q2^2 - Q3^2 + Q4^2 + Q5^2) + 1/(4 Q1).
InvariantSet<FrontFormState> helical_invariants(const HelicalBoost& f);

// Q1 = p_-, Q2 = H + (w/2) L_z
InvariantSet<FrontFormState> vortex_invariants(const Vortex& f);

// Dispatchers used by the CLI; launch_time anchors quadrature-defined
// quantities.  The free field has no invariant set.
InvariantSet<FrontFormState> front_invariants(const FieldSpec& spec, double launch_time);
InvariantSet<InstantFormState> instant_invariants(const FieldSpec& spec);

// --- vortex transverse reduction -------------------------------------------

// Coupled-oscillator coordinates of the vortex transverse motion; phi is
// the oscillator time.  This auxiliary system uses the textbook sign
// convention q' = +dH/dp, p' = -dH/dq.
struct OscillatorState {
    double phi{0};
    double alpha{0}, beta{0}, p_alpha{0}, p_beta{0};
};

double oscillator_hamiltonian(double eps, const OscillatorState& s);

struct OscillatorVelocity {
    double alpha, beta, p_alpha, p_beta;
};
OscillatorVelocity oscillator_rhs(double eps, const OscillatorState& s);

struct TransverseInvariants {
    double X1, X2, H_E;
};

// Quadratic first integrals of the oscillator pair; X1 + X2 = 2 H_E.
// eps must be nonzero (X contains eps_+/eps and eps_-/eps terms).
TransverseInvariants vortex_transverse_invariants(double eps, const OscillatorState& s);

struct OscillatorGradient {
    double d_alpha, d_beta, d_p_alpha, d_p_beta;
};
OscillatorGradient oscillator_hamiltonian_gradient(double eps, const OscillatorState& s);
OscillatorGradient x1_gradient(double eps, const OscillatorState& s);
OscillatorGradient x2_gradient(double eps, const OscillatorState& s);
double oscillator_bracket(const OscillatorGradient& f, const OscillatorGradient& g);

// --- tables and drift -------------------------------------------------------

// Pairwise Poisson brackets of a quantity set sampled over states.
// Where an entry is nonzero the table attempts the fit {Qi, Qj} = c p_-.
struct BracketTable {
    std::vector<std::string> names;
    std::vector<std::vector<double>> max_abs;
    std::vector<std::vector<double>> p_minus_coeff;  // NaN if no p_- fit
};

template <class State>
BracketTable bracket_table(const InvariantSet<State>& set, const std::vector<State>& states);

struct DriftSummary {
    std::string name;
    double initial{0};
    double max_abs_drift{0};
    double max_rel_drift{0};  // relative to max(1, |initial|)
};

template <class State>
std::vector<DriftSummary> drift_along(const Trajectory<State>& traj);

}  // namespace relcharge
