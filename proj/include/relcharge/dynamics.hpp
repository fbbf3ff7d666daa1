#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "relcharge/core.hpp"
#include "relcharge/fields.hpp"

// Evolution convention, fixed by the canonical momentum p_mu = u_mu + A_mu
// carrying a lower index in the (+,-,-,-) metric:
//
//   dQ/dt = dQ/dt|_explicit - {Q, H}
//
// so coordinates move with dq/dt = -dH/dp and momenta with dp/dt = +dH/dq.

namespace relcharge {

enum class Form { instant, front };

// Uniform view of a state: evolution time, three coordinates, three
// conjugate momenta, in canonical order.
//   front:   time = x+, q = (x-, x, y),  p = (p_-, p_1, p_2)
//   instant: time = t,  q = (x, y, z),   p = (p_1, p_2, p_3)
struct PhaseCoords {
    double time{0};
    std::array<double, 3> q{}, p{};
};

PhaseCoords coords_of(const FrontFormState& s);
PhaseCoords coords_of(const InstantFormState& s);
FrontFormState front_state_from(const PhaseCoords& c);
InstantFormState instant_state_from(const PhaseCoords& c);

template <class State>
State state_from(const PhaseCoords& c);

std::vector<std::string> state_column_names(Form form);

// Partial derivatives of a phase function, same ordering as PhaseCoords.
struct PhaseGradient {
    double d_time{0};
    std::array<double, 3> d_q{}, d_p{};
};

// A scalar function of phase space with an optional analytic gradient;
// brackets fall back to central finite differences when it is absent.
template <class State>
struct PhaseFunction {
    std::string name;
    std::function<double(const State&)> value;
    std::function<PhaseGradient(const State&)> gradient;  // may be empty
};

struct DerivativeOptions {
    double step_scale{1e-5};
    // Apply one Richardson refinement to finite differences; on by
    // default since tight bracket tolerances need it.
    bool richardson{true};
};

template <class State>
PhaseGradient numeric_gradient(const PhaseFunction<State>& f, const State& s,
                               const DerivativeOptions& opts = {});

template <class State>
PhaseGradient gradient_of(const PhaseFunction<State>& f, const State& s,
                          const DerivativeOptions& opts = {});

// --- Hamiltonians ---------------------------------------------------------

double hamiltonian(const FieldSpec& spec, const FrontFormState& s);
double hamiltonian(const FieldSpec& spec, const InstantFormState& s);

PhaseGradient hamiltonian_gradient(const FieldSpec& spec, const FrontFormState& s);
PhaseGradient hamiltonian_gradient(const FieldSpec& spec, const InstantFormState& s);

template <class State>
PhaseFunction<State> hamiltonian_function(const FieldSpec& spec);

// Canonical 4-momentum with the missing component completed on shell
// through the active Hamiltonian.
Covector four_momentum(const FieldSpec& spec, const FrontFormState& s);
Covector four_momentum(const FieldSpec& spec, const InstantFormState& s);

// Noether pairing xi.p of a generator with a state's on-shell momentum.
template <class State>
double charge(const PoincareGenerator& g, const FieldSpec& spec, const State& s);

// d x^mu / d(evolution time) along the Hamiltonian flow.
template <class State>
FourVector four_velocity(const FieldSpec& spec, const State& s);

// --- Brackets and the evolution law ---------------------------------------

template <class State>
double poisson_bracket(const PhaseFunction<State>& f, const PhaseFunction<State>& g,
                       const State& s, const DerivativeOptions& opts = {});

template <class State>
double total_time_derivative(const PhaseFunction<State>& q, const FieldSpec& spec,
                             const State& s, const DerivativeOptions& opts = {});

// Scale of the terms entering dQ/dt at this state; conservation tests are
// relative to it.
template <class State>
double time_derivative_scale(const PhaseFunction<State>& q, const FieldSpec& spec,
                             const State& s, const DerivativeOptions& opts = {});

// Phase-space velocity (dq/dt, dp/dt), canonical ordering.
struct PhaseVelocity {
    std::array<double, 3> dq{}, dp{};
};

PhaseVelocity hamilton_rhs(const FieldSpec& spec, const FrontFormState& s);
PhaseVelocity hamilton_rhs(const FieldSpec& spec, const InstantFormState& s);

// --- Trajectory integration ------------------------------------------------

struct IntegrateOptions {
    double rel_tol{1e-10};
    double abs_tol{1e-12};
    double initial_step{0};  // 0 = automatic
    double max_step{0};      // 0 = unbounded
    std::size_t max_steps{2'000'000};
    // Front form only: stop before |p_- - A_-| falls below this.
    double boundary_eps{1e-9};
};

enum class TerminationStatus { completed, step_underflow, domain_boundary };

std::string to_string(TerminationStatus s);

template <class State>
struct TrajectorySample {
    double time{0};
    State state{};
    std::vector<double> tracked;
};

// Dormand-Prince 5(4) output: accepted samples plus per-step Hermite data.
template <class State>
class Trajectory {
public:
    Form form{};
    std::vector<std::string> tracked_names;
    std::vector<TrajectorySample<State>> samples;

    struct Segment {
        double t0, t1;
        std::array<double, 6> y0, y1, f0, f1;
    };
    std::vector<Segment> segments;

    std::size_t steps{0};
    std::size_t rejected_steps{0};
    double rel_tol{0}, abs_tol{0};
    TerminationStatus status{TerminationStatus::completed};
    std::string diagnostic;

    double start_time() const { return samples.front().time; }
    double end_time() const { return samples.back().time; }
    const State& final_state() const { return samples.back().state; }

    // Cubic Hermite interpolation between accepted steps.
    State state_at(double time) const;
};

template <class State>
Trajectory<State> integrate(const FieldSpec& spec, const State& initial, double end_time,
                            const std::vector<PhaseFunction<State>>& tracked = {},
                            const IntegrateOptions& opts = {});

}  // namespace relcharge
