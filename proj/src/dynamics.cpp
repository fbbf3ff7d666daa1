#include "relcharge/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relcharge {

PhaseCoords coords_of(const FrontFormState& s) {
    return {s.x_plus, {s.x_minus, s.x, s.y}, {s.p_minus, s.p1, s.p2}};
}

PhaseCoords coords_of(const InstantFormState& s) {
    return {s.t, {s.x, s.y, s.z}, {s.p1, s.p2, s.p3}};
}

FrontFormState front_state_from(const PhaseCoords& c) {
    return {c.time, c.q[0], c.q[1], c.q[2], c.p[0], c.p[1], c.p[2]};
}

InstantFormState instant_state_from(const PhaseCoords& c) {
    return {c.time, c.q[0], c.q[1], c.q[2], c.p[0], c.p[1], c.p[2]};
}

template <>
FrontFormState state_from<FrontFormState>(const PhaseCoords& c) {
    return front_state_from(c);
}

template <>
InstantFormState state_from<InstantFormState>(const PhaseCoords& c) {
    return instant_state_from(c);
}

namespace {

Form form_of(const FrontFormState&) { return Form::front; }
Form form_of(const InstantFormState&) { return Form::instant; }

// Directional derivatives of the covariant potential components along the
// phase-space coordinates of a form, assembled from the Cartesian Jacobian.
struct FrontPotential {
    // values
    double a_plus, a_minus, a1, a2;
    // derivatives with respect to (x+, x-, x, y), same component set
    std::array<double, 4> d_a_plus, d_a_minus, d_a1, d_a2;
};

FrontPotential front_potential(const FieldSpec& spec, const SpacetimePoint& pos) {
    const Covector A = potential(spec, pos);
    const PotentialJacobian dA = grad_potential(spec, pos);
    FrontPotential fp{};
    fp.a_plus = A.lf_plus();
    fp.a_minus = A.lf_minus();
    fp.a1 = A[1];
    fp.a2 = A[2];
    // d/dx+ = (d_0 + d_3)/2, d/dx- = (d_0 - d_3)/2, d/dx = d_1, d/dy = d_2
    const std::array<std::array<double, 4>, 4> dir = {{
        {{0.5 * (dA[0][0] + dA[3][0]), 0.5 * (dA[0][1] + dA[3][1]),
          0.5 * (dA[0][2] + dA[3][2]), 0.5 * (dA[0][3] + dA[3][3])}},
        {{0.5 * (dA[0][0] - dA[3][0]), 0.5 * (dA[0][1] - dA[3][1]),
          0.5 * (dA[0][2] - dA[3][2]), 0.5 * (dA[0][3] - dA[3][3])}},
        {{dA[1][0], dA[1][1], dA[1][2], dA[1][3]}},
        {{dA[2][0], dA[2][1], dA[2][2], dA[2][3]}},
    }};
    for (int d = 0; d < 4; ++d) {
        fp.d_a_plus[d] = 0.5 * (dir[d][0] + dir[d][3]);
        fp.d_a_minus[d] = 0.5 * (dir[d][0] - dir[d][3]);
        fp.d_a1[d] = dir[d][1];
        fp.d_a2[d] = dir[d][2];
    }
    return fp;
}

constexpr double kLightConeEps = 1e-12;

}  // namespace

double hamiltonian(const FieldSpec& spec, const FrontFormState& s) {
    const SpacetimePoint pos = position_of(s);
    const Covector A = potential(spec, pos);
    const double pi_minus = s.p_minus - A.lf_minus();
    if (std::abs(pi_minus) < kLightConeEps) throw std::domain_error("on light cone");
    const double pi1 = s.p1 - A[1];
    const double pi2 = s.p2 - A[2];
    return (pi1 * pi1 + pi2 * pi2 + 1.0) / (4.0 * pi_minus) + A.lf_plus();
}

double hamiltonian(const FieldSpec& spec, const InstantFormState& s) {
    const SpacetimePoint pos = position_of(s);
    const Covector A = potential(spec, pos);
    const double pi1 = s.p1 - A[1];
    const double pi2 = s.p2 - A[2];
    const double pi3 = s.p3 - A[3];
    return std::sqrt(1.0 + pi1 * pi1 + pi2 * pi2 + pi3 * pi3) + A[0];
}

PhaseGradient hamiltonian_gradient(const FieldSpec& spec, const FrontFormState& s) {
    const SpacetimePoint pos = position_of(s);
    const FrontPotential fp = front_potential(spec, pos);
    const double pi_minus = s.p_minus - fp.a_minus;
    if (std::abs(pi_minus) < kLightConeEps) throw std::domain_error("on light cone");
    const double pi1 = s.p1 - fp.a1;
    const double pi2 = s.p2 - fp.a2;
    const double kin = pi1 * pi1 + pi2 * pi2 + 1.0;

    PhaseGradient g;
    g.d_p = {-kin / (4.0 * pi_minus * pi_minus), pi1 / (2.0 * pi_minus), pi2 / (2.0 * pi_minus)};
    // directions: 0 = x+, 1 = x-, 2 = x, 3 = y
    auto coord_deriv = [&](int d) {
        return -(pi1 * fp.d_a1[d] + pi2 * fp.d_a2[d]) / (2.0 * pi_minus) +
               kin * fp.d_a_minus[d] / (4.0 * pi_minus * pi_minus) + fp.d_a_plus[d];
    };
    g.d_time = coord_deriv(0);
    g.d_q = {coord_deriv(1), coord_deriv(2), coord_deriv(3)};
    return g;
}

PhaseGradient hamiltonian_gradient(const FieldSpec& spec, const InstantFormState& s) {
    const SpacetimePoint pos = position_of(s);
    const Covector A = potential(spec, pos);
    const PotentialJacobian dA = grad_potential(spec, pos);
    const std::array<double, 3> pi = {s.p1 - A[1], s.p2 - A[2], s.p3 - A[3]};
    const double e_kin = std::sqrt(1.0 + pi[0] * pi[0] + pi[1] * pi[1] + pi[2] * pi[2]);

    PhaseGradient g;
    for (int j = 0; j < 3; ++j) g.d_p[j] = pi[j] / e_kin;
    auto coord_deriv = [&](int mu) {
        double v = dA[mu][0];
        for (int k = 0; k < 3; ++k) v -= pi[k] * dA[mu][k + 1] / e_kin;
        return v;
    };
    g.d_time = coord_deriv(0);
    g.d_q = {coord_deriv(1), coord_deriv(2), coord_deriv(3)};
    return g;
}

template <class State>
PhaseFunction<State> hamiltonian_function(const FieldSpec& spec) {
    PhaseFunction<State> f;
    f.name = "H";
    f.value = [spec](const State& s) { return hamiltonian(spec, s); };
    f.gradient = [spec](const State& s) { return hamiltonian_gradient(spec, s); };
    return f;
}

template PhaseFunction<FrontFormState> hamiltonian_function<FrontFormState>(const FieldSpec&);
template PhaseFunction<InstantFormState> hamiltonian_function<InstantFormState>(const FieldSpec&);

Covector four_momentum(const FieldSpec& spec, const FrontFormState& s) {
    const double p_plus = hamiltonian(spec, s);
    return {{p_plus + s.p_minus, s.p1, s.p2, p_plus - s.p_minus}};
}

Covector four_momentum(const FieldSpec& spec, const InstantFormState& s) {
    return {{hamiltonian(spec, s), s.p1, s.p2, s.p3}};
}

template <class State>
double charge(const PoincareGenerator& g, const FieldSpec& spec, const State& s) {
    return contract(xi_at(g, position_of(s)), four_momentum(spec, s));
}

template double charge<FrontFormState>(const PoincareGenerator&, const FieldSpec&, const FrontFormState&);
template double charge<InstantFormState>(const PoincareGenerator&, const FieldSpec&, const InstantFormState&);

FourVector four_velocity(const FieldSpec& spec, const FrontFormState& s) {
    const PhaseVelocity v = hamilton_rhs(spec, s);
    // dt = (dx+ + dx-)/2, dz = (dx+ - dx-)/2 with dx+/dx+ = 1
    return {{0.5 * (1.0 + v.dq[0]), v.dq[1], v.dq[2], 0.5 * (1.0 - v.dq[0])}};
}

FourVector four_velocity(const FieldSpec& spec, const InstantFormState& s) {
    const PhaseVelocity v = hamilton_rhs(spec, s);
    return {{1.0, v.dq[0], v.dq[1], v.dq[2]}};
}

template <class State>
FourVector four_velocity(const FieldSpec& spec, const State& s);
template <>
FourVector four_velocity<FrontFormState>(const FieldSpec& spec, const FrontFormState& s) {
    return four_velocity(spec, s);
}
template <>
FourVector four_velocity<InstantFormState>(const FieldSpec& spec, const InstantFormState& s) {
    return four_velocity(spec, s);
}

template <class State>
PhaseGradient numeric_gradient(const PhaseFunction<State>& f, const State& s,
                               const DerivativeOptions& opts) {
    const PhaseCoords base = coords_of(s);
    auto eval = [&](const PhaseCoords& c) { return f.value(state_from<State>(c)); };

    auto central = [&](int slot, double h) {
        PhaseCoords a = base, b = base;
        double* pa = nullptr;
        double* pb = nullptr;
        if (slot == 0) {
            pa = &a.time;
            pb = &b.time;
        } else if (slot <= 3) {
            pa = &a.q[slot - 1];
            pb = &b.q[slot - 1];
        } else {
            pa = &a.p[slot - 4];
            pb = &b.p[slot - 4];
        }
        *pa += h;
        *pb -= h;
        return (eval(a) - eval(b)) / (2.0 * h);
    };

    PhaseGradient g;
    for (int slot = 0; slot < 7; ++slot) {
        double v = slot == 0 ? base.time : (slot <= 3 ? base.q[slot - 1] : base.p[slot - 4]);
        const double h = opts.step_scale * std::max(1.0, std::abs(v));
        double d = central(slot, h);
        if (opts.richardson) {
            const double d_half = central(slot, 0.5 * h);
            d = (4.0 * d_half - d) / 3.0;
        }
        if (slot == 0)
            g.d_time = d;
        else if (slot <= 3)
            g.d_q[slot - 1] = d;
        else
            g.d_p[slot - 4] = d;
    }
    return g;
}

template PhaseGradient numeric_gradient<FrontFormState>(const PhaseFunction<FrontFormState>&,
                                                        const FrontFormState&,
                                                        const DerivativeOptions&);
template PhaseGradient numeric_gradient<InstantFormState>(const PhaseFunction<InstantFormState>&,
                                                          const InstantFormState&,
                                                          const DerivativeOptions&);

template <class State>
PhaseGradient gradient_of(const PhaseFunction<State>& f, const State& s,
                          const DerivativeOptions& opts) {
    if (f.gradient) return f.gradient(s);
    return numeric_gradient(f, s, opts);
}

template PhaseGradient gradient_of<FrontFormState>(const PhaseFunction<FrontFormState>&,
                                                   const FrontFormState&, const DerivativeOptions&);
template PhaseGradient gradient_of<InstantFormState>(const PhaseFunction<InstantFormState>&,
                                                     const InstantFormState&,
                                                     const DerivativeOptions&);

template <class State>
double poisson_bracket(const PhaseFunction<State>& f, const PhaseFunction<State>& g,
                       const State& s, const DerivativeOptions& opts) {
    const PhaseGradient df = gradient_of(f, s, opts);
    const PhaseGradient dg = gradient_of(g, s, opts);
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) sum += df.d_q[i] * dg.d_p[i] - df.d_p[i] * dg.d_q[i];
    return sum;
}

template double poisson_bracket<FrontFormState>(const PhaseFunction<FrontFormState>&,
                                                const PhaseFunction<FrontFormState>&,
                                                const FrontFormState&, const DerivativeOptions&);
template double poisson_bracket<InstantFormState>(const PhaseFunction<InstantFormState>&,
                                                  const PhaseFunction<InstantFormState>&,
                                                  const InstantFormState&,
                                                  const DerivativeOptions&);

template <class State>
double total_time_derivative(const PhaseFunction<State>& q, const FieldSpec& spec,
                             const State& s, const DerivativeOptions& opts) {
    const PhaseGradient dq = gradient_of(q, s, opts);
    const PhaseGradient dh = hamiltonian_gradient(spec, s);
    double bracket = 0.0;
    for (int i = 0; i < 3; ++i) bracket += dq.d_q[i] * dh.d_p[i] - dq.d_p[i] * dh.d_q[i];
    return dq.d_time - bracket;
}

template double total_time_derivative<FrontFormState>(const PhaseFunction<FrontFormState>&,
                                                      const FieldSpec&, const FrontFormState&,
                                                      const DerivativeOptions&);
template double total_time_derivative<InstantFormState>(const PhaseFunction<InstantFormState>&,
                                                        const FieldSpec&, const InstantFormState&,
                                                        const DerivativeOptions&);

template <class State>
double time_derivative_scale(const PhaseFunction<State>& q, const FieldSpec& spec, const State& s,
                             const DerivativeOptions& opts) {
    const PhaseGradient dq = gradient_of(q, s, opts);
    const PhaseGradient dh = hamiltonian_gradient(spec, s);
    double scale = std::abs(dq.d_time);
    for (int i = 0; i < 3; ++i)
        scale += std::abs(dq.d_q[i] * dh.d_p[i]) + std::abs(dq.d_p[i] * dh.d_q[i]);
    return std::max(1.0, scale);
}

template double time_derivative_scale<FrontFormState>(const PhaseFunction<FrontFormState>&,
                                                      const FieldSpec&, const FrontFormState&,
                                                      const DerivativeOptions&);
template double time_derivative_scale<InstantFormState>(const PhaseFunction<InstantFormState>&,
                                                        const FieldSpec&, const InstantFormState&,
                                                        const DerivativeOptions&);

PhaseVelocity hamilton_rhs(const FieldSpec& spec, const FrontFormState& s) {
    const PhaseGradient g = hamiltonian_gradient(spec, s);
    PhaseVelocity v;
    for (int i = 0; i < 3; ++i) {
        v.dq[i] = -g.d_p[i];
        v.dp[i] = g.d_q[i];
    }
    return v;
}

PhaseVelocity hamilton_rhs(const FieldSpec& spec, const InstantFormState& s) {
    const PhaseGradient g = hamiltonian_gradient(spec, s);
    PhaseVelocity v;
    for (int i = 0; i < 3; ++i) {
        v.dq[i] = -g.d_p[i];
        v.dp[i] = g.d_q[i];
    }
    return v;
}

std::vector<std::string> state_column_names(Form form) {
    if (form == Form::front) return {"x_plus", "x_minus", "x", "y", "p_minus", "p1", "p2"};
    return {"t", "x", "y", "z", "p1", "p2", "p3"};
}

std::string to_string(TerminationStatus s) {
    switch (s) {
        case TerminationStatus::completed: return "completed";
        case TerminationStatus::step_underflow: return "step underflow";
        case TerminationStatus::domain_boundary: return "domain boundary reached";
    }
    return "unknown";
}

// --- Dormand-Prince 5(4) ----------------------------------------------------

namespace {

using Vec6 = std::array<double, 6>;

Vec6 axpy(const Vec6& y, double h, const Vec6& k) {
    Vec6 r;
    for (int i = 0; i < 6; ++i) r[i] = y[i] + h * k[i];
    return r;
}

constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// difference between the 5th- and the embedded 4th-order weights
constexpr double kE[7] = {71.0 / 57600,     0.0,          -71.0 / 16695, 71.0 / 1920,
                          -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

template <class State>
struct RhsAdapter {
    const FieldSpec& spec;

    bool operator()(double time, const Vec6& y, Vec6& dydt) const {
        PhaseCoords c;
        c.time = time;
        c.q = {y[0], y[1], y[2]};
        c.p = {y[3], y[4], y[5]};
        State s = state_from<State>(c);
        PhaseVelocity v;
        try {
            v = hamilton_rhs(spec, s);
        } catch (const std::domain_error&) {
            return false;
        }
        dydt = {v.dq[0], v.dq[1], v.dq[2], v.dp[0], v.dp[1], v.dp[2]};
        for (double d : dydt)
            if (!std::isfinite(d)) return false;
        return true;
    }
};

double error_norm(const Vec6& err, const Vec6& y0, const Vec6& y1, double rtol, double atol) {
    double sum = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double e = err[i] / scale;
        sum += e * e;
    }
    return std::sqrt(sum / 6.0);
}

// Hairer-style automatic initial step size.
template <class Rhs>
double initial_step(const Rhs& rhs, double t0, const Vec6& y0, const Vec6& f0, double span,
                    double rtol, double atol) {
    auto scaled_norm = [&](const Vec6& v) {
        double sum = 0.0;
        for (int i = 0; i < 6; ++i) {
            const double scale = atol + rtol * std::abs(y0[i]);
            sum += (v[i] / scale) * (v[i] / scale);
        }
        return std::sqrt(sum / 6.0);
    };
    const double d0 = scaled_norm(y0);
    const double d1 = scaled_norm(f0);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, 0.1 * std::abs(span));
    Vec6 f1;
    if (!rhs(t0 + h0, axpy(y0, h0, f0), f1)) return std::min(1e-6, 0.1 * std::abs(span));
    Vec6 df;
    for (int i = 0; i < 6; ++i) df[i] = f1[i] - f0[i];
    const double d2 = scaled_norm(df) / h0;
    double h1;
    if (std::max(d1, d2) <= 1e-15)
        h1 = std::max(1e-6, h0 * 1e-3);
    else
        h1 = std::pow(0.01 / std::max(d1, d2), 0.2);
    return std::min({100.0 * h0, h1, std::abs(span)});
}

bool near_light_cone(const FieldSpec& spec, const FrontFormState& s, double eps) {
    const Covector A = potential(spec, position_of(s));
    return std::abs(s.p_minus - A.lf_minus()) < eps;
}

bool near_light_cone(const FieldSpec&, const InstantFormState&, double) { return false; }

}  // namespace

template <class State>
State Trajectory<State>::state_at(double time) const {
    if (segments.empty()) return samples.front().state;
    // segments are ordered in integration direction
    const bool forward = segments.back().t1 >= segments.front().t0;
    std::size_t lo = 0, hi = segments.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const bool before = forward ? (segments[mid].t1 < time) : (segments[mid].t1 > time);
        if (before)
            lo = mid + 1;
        else
            hi = mid;
    }
    const Segment& seg = segments[lo];
    const double h = seg.t1 - seg.t0;
    const double th = (time - seg.t0) / h;
    Vec6 y;
    for (int i = 0; i < 6; ++i) {
        const double d = seg.y1[i] - seg.y0[i];
        // cubic Hermite in Horner-ish form
        y[i] = seg.y0[i] + th * (h * seg.f0[i] +
                                 th * ((3.0 * d - h * (2.0 * seg.f0[i] + seg.f1[i])) +
                                       th * (h * (seg.f0[i] + seg.f1[i]) - 2.0 * d)));
    }
    PhaseCoords c;
    c.time = time;
    c.q = {y[0], y[1], y[2]};
    c.p = {y[3], y[4], y[5]};
    return state_from<State>(c);
}

template class Trajectory<FrontFormState>;
template class Trajectory<InstantFormState>;

template <class State>
Trajectory<State> integrate(const FieldSpec& spec, const State& initial, double end_time,
                            const std::vector<PhaseFunction<State>>& tracked,
                            const IntegrateOptions& opts) {
    Trajectory<State> traj;
    traj.form = form_of(initial);
    traj.rel_tol = opts.rel_tol;
    traj.abs_tol = opts.abs_tol;
    for (const auto& f : tracked) traj.tracked_names.push_back(f.name);

    const PhaseCoords c0 = coords_of(initial);
    const double t0 = c0.time;
    const double span = end_time - t0;
    const double direction = span >= 0 ? 1.0 : -1.0;

    if (near_light_cone(spec, initial, opts.boundary_eps))
        throw std::domain_error("on light cone");

    auto record = [&](double time, const Vec6& y) {
        PhaseCoords c;
        c.time = time;
        c.q = {y[0], y[1], y[2]};
        c.p = {y[3], y[4], y[5]};
        TrajectorySample<State> sample;
        sample.time = time;
        sample.state = state_from<State>(c);
        sample.tracked.reserve(tracked.size());
        for (const auto& f : tracked) sample.tracked.push_back(f.value(sample.state));
        traj.samples.push_back(std::move(sample));
    };

    Vec6 y = {c0.q[0], c0.q[1], c0.q[2], c0.p[0], c0.p[1], c0.p[2]};
    double t = t0;
    record(t, y);
    if (span == 0.0) return traj;

    const RhsAdapter<State> rhs{spec};
    Vec6 f0;
    if (!rhs(t, y, f0)) throw std::domain_error("initial state outside field domain");

    double h = opts.initial_step > 0
                   ? std::min(opts.initial_step, std::abs(span))
                   : initial_step(rhs, t, y, f0, span, opts.rel_tol, opts.abs_tol);
    if (opts.max_step > 0) h = std::min(h, opts.max_step);
    h *= direction;

    Vec6 k[7];
    k[0] = f0;

    while (traj.steps + traj.rejected_steps < opts.max_steps) {
        const double remaining = end_time - t;
        if (direction * remaining <= 0) break;
        if (std::abs(h) > std::abs(remaining)) h = remaining;

        bool ok = true;
        Vec6 y_new{};
        for (int stage = 1; stage < 7 && ok; ++stage) {
            Vec6 yi = y;
            for (int j = 0; j < stage; ++j)
                for (int i = 0; i < 6; ++i) yi[i] += h * kA[stage][j] * k[j][i];
            if (stage == 6) y_new = yi;  // b-row equals the last a-row (FSAL)
            ok = rhs(t + kC[stage] * h, yi, k[stage]);
        }

        double err = 2.0;
        if (ok) {
            Vec6 err_vec;
            for (int i = 0; i < 6; ++i) {
                double e = 0.0;
                for (int j = 0; j < 7; ++j) e += kE[j] * k[j][i];
                err_vec[i] = h * e;
            }
            err = error_norm(err_vec, y, y_new, opts.rel_tol, opts.abs_tol);
        }

        if (err <= 1.0) {
            typename Trajectory<State>::Segment seg;
            seg.t0 = t;
            seg.t1 = t + h;
            seg.y0 = y;
            seg.y1 = y_new;
            seg.f0 = k[0];
            seg.f1 = k[6];
            traj.segments.push_back(seg);

            t += h;
            y = y_new;
            k[0] = k[6];  // FSAL
            ++traj.steps;
            record(t, y);

            if (near_light_cone(spec, traj.samples.back().state, opts.boundary_eps)) {
                traj.status = TerminationStatus::domain_boundary;
                traj.diagnostic = "front-form momentum p_- - A_- reached the light-cone guard at time " +
                                  std::to_string(t);
                return traj;
            }

            const double grow = err <= 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
            h *= grow;
        } else {
            ++traj.rejected_steps;
            const double shrink =
                (ok && std::isfinite(err)) ? std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9) : 0.25;
            h *= shrink;
        }
        if (opts.max_step > 0 && std::abs(h) > opts.max_step) h = direction * opts.max_step;

        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t))) {
            traj.status = TerminationStatus::step_underflow;
            traj.diagnostic = "step underflow at time " + std::to_string(t);
            return traj;
        }
    }

    if (direction * (end_time - t) > 0) {
        traj.status = TerminationStatus::step_underflow;
        traj.diagnostic = "maximum step count reached at time " + std::to_string(t);
    }
    return traj;
}

template Trajectory<FrontFormState> integrate<FrontFormState>(
    const FieldSpec&, const FrontFormState&, double,
    const std::vector<PhaseFunction<FrontFormState>>&, const IntegrateOptions&);
template Trajectory<InstantFormState> integrate<InstantFormState>(
    const FieldSpec&, const InstantFormState&, double,
    const std::vector<PhaseFunction<InstantFormState>>&, const IntegrateOptions&);

}  // namespace relcharge
