#include "relcharge/invariants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "relcharge/quadrature.hpp"

namespace relcharge {

template <class State>
const PhaseFunction<State>* InvariantSet<State>::find(const std::string& name) const {
    for (const auto& f : quantities)
        if (f.name == name) return &f;
    for (const auto& f : identities)
        if (f.name == name) return &f;
    return nullptr;
}

template <class State>
std::vector<std::string> InvariantSet<State>::quantity_names() const {
    std::vector<std::string> names;
    for (const auto& f : quantities) names.push_back(f.name);
    return names;
}

template struct InvariantSet<FrontFormState>;
template struct InvariantSet<InstantFormState>;

// --- plane wave --------------------------------------------------------------

InvariantSet<FrontFormState> plane_wave_invariants(const PlaneWave& f) {
    InvariantSet<FrontFormState> set;
    set.system = "plane_wave";

    set.quantities.push_back({"Q1", [](const FrontFormState& s) { return s.p1; },
                              [](const FrontFormState&) {
                                  PhaseGradient g;
                                  g.d_p[1] = 1.0;
                                  return g;
                              }});
    set.quantities.push_back({"Q2", [](const FrontFormState& s) { return s.p2; },
                              [](const FrontFormState&) {
                                  PhaseGradient g;
                                  g.d_p[2] = 1.0;
                                  return g;
                              }});
    set.quantities.push_back({"Q3", [](const FrontFormState& s) { return s.p_minus; },
                              [](const FrontFormState&) {
                                  PhaseGradient g;
                                  g.d_p[0] = 1.0;
                                  return g;
                              }});

    const Profile f1 = f.f1;
    set.quantities.push_back(
        {"Q4",
         [f1](const FrontFormState& s) {
             return 2.0 * s.x * s.p_minus + s.x_plus * s.p1 - f1.value(s.x_plus);
         },
         [f1](const FrontFormState& s) {
             PhaseGradient g;
             g.d_q[1] = 2.0 * s.p_minus;
             g.d_p[0] = 2.0 * s.x;
             g.d_p[1] = s.x_plus;
             g.d_time = s.p1 - f1.d1(s.x_plus);
             return g;
         }});
    const Profile f2 = f.f2;
    set.quantities.push_back(
        {"Q5",
         [f2](const FrontFormState& s) {
             return 2.0 * s.y * s.p_minus + s.x_plus * s.p2 - f2.value(s.x_plus);
         },
         [f2](const FrontFormState& s) {
             PhaseGradient g;
             g.d_q[2] = 2.0 * s.p_minus;
             g.d_p[0] = 2.0 * s.y;
             g.d_p[2] = s.x_plus;
             g.d_time = s.p2 - f2.d1(s.x_plus);
             return g;
         }});
    return set;
}

// --- TM mode -----------------------------------------------------------------

namespace {

// I(x+, p_-) and its p_- derivative; anchored at s0.
struct TmQuadrature {
    Profile f;
    double s0;

    void check_domain(double x_plus, double p_minus) const {
        if (x_plus == 0.0 || s0 == 0.0) throw std::domain_error("TM potential singular at x+ = 0");
        if ((x_plus > 0) != (s0 > 0)) throw std::domain_error("quadrature pole");
        auto denom = [&](double s) { return 2.0 * p_minus + f.value(s); };
        if (sign_change_on(denom, s0, x_plus)) throw std::domain_error("quadrature pole");
    }

    double integral(double x_plus, double p_minus) const {
        check_domain(x_plus, p_minus);
        return integrate_gk(
            [&](double s) { return 1.0 / (s * s * (2.0 * p_minus + f.value(s))); }, s0, x_plus,
            {1e-10, 48});
    }

    double d_p_minus(double x_plus, double p_minus) const {
        check_domain(x_plus, p_minus);
        return integrate_gk(
            [&](double s) {
                const double d = 2.0 * p_minus + f.value(s);
                return -2.0 / (s * s * d * d);
            },
            s0, x_plus, {1e-10, 48});
    }
};

}  // namespace

InvariantSet<FrontFormState> tm_invariants(const TmMode& f, double launch_time) {
    if (launch_time == 0.0) throw std::domain_error("TM potential singular at x+ = 0");
    InvariantSet<FrontFormState> set;
    set.system = "tm_mode";

    set.quantities.push_back(
        {"Q1", [](const FrontFormState& s) { return 2.0 * s.x * s.p_minus + s.x_plus * s.p1; },
         [](const FrontFormState& s) {
             PhaseGradient g;
             g.d_q[1] = 2.0 * s.p_minus;
             g.d_p[0] = 2.0 * s.x;
             g.d_p[1] = s.x_plus;
             g.d_time = s.p1;
             return g;
         }});
    set.quantities.push_back(
        {"Q2", [](const FrontFormState& s) { return 2.0 * s.y * s.p_minus + s.x_plus * s.p2; },
         [](const FrontFormState& s) {
             PhaseGradient g;
             g.d_q[2] = 2.0 * s.p_minus;
             g.d_p[0] = 2.0 * s.y;
             g.d_p[2] = s.x_plus;
             g.d_time = s.p2;
             return g;
         }});
    set.quantities.push_back({"Q3", [](const FrontFormState& s) { return s.p_minus; },
                              [](const FrontFormState&) {
                                  PhaseGradient g;
                                  g.d_p[0] = 1.0;
                                  return g;
                              }});
    set.quantities.push_back(
        {"Q4", [](const FrontFormState& s) { return s.x * s.p2 - s.y * s.p1; },
         [](const FrontFormState& s) {
             PhaseGradient g;
             g.d_q[1] = s.p2;
             g.d_q[2] = -s.p1;
             g.d_p[1] = -s.y;
             g.d_p[2] = s.x;
             return g;
         }});

    const TmQuadrature quad{f.f, launch_time};
    const Profile prof = f.f;

    auto q5_value = [quad](const FrontFormState& s) {
        const double i = quad.integral(s.x_plus, s.p_minus);
        const double q1 = 2.0 * s.x * s.p_minus + s.x_plus * s.p1;
        return s.x / s.x_plus + q1 * i;
    };
    auto q5_grad = [quad, prof](const FrontFormState& s) {
        const double i = quad.integral(s.x_plus, s.p_minus);
        const double j = quad.d_p_minus(s.x_plus, s.p_minus);
        const double q1 = 2.0 * s.x * s.p_minus + s.x_plus * s.p1;
        PhaseGradient g;
        g.d_q[1] = 1.0 / s.x_plus + 2.0 * s.p_minus * i;
        g.d_p[1] = s.x_plus * i;
        g.d_p[0] = 2.0 * s.x * i + q1 * j;
        g.d_time = -s.x / (s.x_plus * s.x_plus) + s.p1 * i +
                   q1 / (s.x_plus * s.x_plus * (2.0 * s.p_minus + prof.value(s.x_plus)));
        return g;
    };
    set.quantities.push_back({"Q5", q5_value, q5_grad});

    auto q4t_value = [quad](const FrontFormState& s) {
        const double i = quad.integral(s.x_plus, s.p_minus);
        const double q2 = 2.0 * s.y * s.p_minus + s.x_plus * s.p2;
        return s.y / s.x_plus + q2 * i;
    };
    auto q4t_grad = [quad, prof](const FrontFormState& s) {
        const double i = quad.integral(s.x_plus, s.p_minus);
        const double j = quad.d_p_minus(s.x_plus, s.p_minus);
        const double q2 = 2.0 * s.y * s.p_minus + s.x_plus * s.p2;
        PhaseGradient g;
        g.d_q[2] = 1.0 / s.x_plus + 2.0 * s.p_minus * i;
        g.d_p[2] = s.x_plus * i;
        g.d_p[0] = 2.0 * s.y * i + q2 * j;
        g.d_time = -s.y / (s.x_plus * s.x_plus) + s.p2 * i +
                   q2 / (s.x_plus * s.x_plus * (2.0 * s.p_minus + prof.value(s.x_plus)));
        return g;
    };
    set.quantities.push_back({"Q4tilde", q4t_value, q4t_grad});

    set.identities.push_back(
        {"tm_combination",
         [q5_value, q4t_value](const FrontFormState& s) {
             const double q1 = 2.0 * s.x * s.p_minus + s.x_plus * s.p1;
             const double q2 = 2.0 * s.y * s.p_minus + s.x_plus * s.p2;
             const double q4 = s.x * s.p2 - s.y * s.p1;
             return q2 * q5_value(s) - q1 * q4t_value(s) - q4;
         },
         nullptr});
    return set;
}

// --- undulator ---------------------------------------------------------------

InvariantSet<InstantFormState> undulator_invariants(const Undulator& f) {
    InvariantSet<InstantFormState> set;
    set.system = "undulator";
    const double b0 = f.B0 / f.omega;
    const double w = f.omega;
    const FieldSpec spec = f;

    set.quantities.push_back({"Q1", [](const InstantFormState& s) { return s.p1; },
                              [](const InstantFormState&) {
                                  PhaseGradient g;
                                  g.d_p[0] = 1.0;
                                  return g;
                              }});
    set.quantities.push_back({"Q2", [](const InstantFormState& s) { return s.p2; },
                              [](const InstantFormState&) {
                                  PhaseGradient g;
                                  g.d_p[1] = 1.0;
                                  return g;
                              }});
    set.quantities.push_back({"Q3", [spec](const InstantFormState& s) { return hamiltonian(spec, s); },
                              [spec](const InstantFormState& s) { return hamiltonian_gradient(spec, s); }});
    set.quantities.push_back(
        {"Q4", [w](const InstantFormState& s) { return s.p3 + w * (s.x * s.p2 - s.y * s.p1); },
         [w](const InstantFormState& s) {
             PhaseGradient g;
             g.d_q[0] = w * s.p2;
             g.d_q[1] = -w * s.p1;
             g.d_p[0] = -w * s.y;
             g.d_p[1] = w * s.x;
             g.d_p[2] = 1.0;
             return g;
         }});
    set.quantities.push_back(
        {"u",
         [spec, b0](const InstantFormState& s) {
             const double h = hamiltonian(spec, s);
             return h * h - s.p1 * s.p1 - s.p2 * s.p2 - 1.0 - b0 * b0;
         },
         [spec](const InstantFormState& s) {
             const double h = hamiltonian(spec, s);
             PhaseGradient g = hamiltonian_gradient(spec, s);
             g.d_time *= 2.0 * h;
             for (int i = 0; i < 3; ++i) {
                 g.d_q[i] *= 2.0 * h;
                 g.d_p[i] *= 2.0 * h;
             }
             g.d_p[0] -= 2.0 * s.p1;
             g.d_p[1] -= 2.0 * s.p2;
             return g;
         }});

    set.identities.push_back(
        {"r1",
         [spec, b0, w](const InstantFormState& s) {
             const double h = hamiltonian(spec, s);
             const double u = h * h - s.p1 * s.p1 - s.p2 * s.p2 - 1.0 - b0 * b0;
             return s.p3 * s.p3 -
                    2.0 * b0 * (s.p1 * std::cos(w * s.z) + s.p2 * std::sin(w * s.z)) - u;
         },
         nullptr});
    set.identities.push_back(
        {"r2",
         [spec, b0, w](const InstantFormState& s) {
             const PhaseVelocity v = hamilton_rhs(spec, s);
             return v.dq[1] * s.p3 - v.dq[2] * (s.p2 - b0 * std::sin(w * s.z));
         },
         nullptr});
    return set;
}

// --- helical boosts ------------------------------------------------------------

namespace {

struct HelicalTerms {
    double omega_r;  // sqrt(F0 / (2 p_-))
    double sh, ch, sn, cs;
    double s, p, d, r;
    // partials: [x, y, p1, p2, p_minus, time]
    std::array<double, 6> s_d, p_d, d_d, r_d;
    double omega_dp;  // d omega_r / d p_-
};

HelicalTerms helical_terms(const HelicalBoost& hb, const FrontFormState& st) {
    if (st.p_minus == 0.0 || hb.F0 / (2.0 * st.p_minus) <= 0.0)
        throw std::domain_error("omega imaginary");
    HelicalTerms t{};
    const double w = hb.omega;
    const double pm = st.p_minus;
    const double om2 = hb.F0 / (2.0 * pm);
    t.omega_r = std::sqrt(om2);
    t.omega_dp = -0.5 * t.omega_r / pm;
    const double u = st.x_plus;
    const double theta = t.omega_r * u;
    t.sh = std::sinh(theta);
    t.ch = std::cosh(theta);
    t.sn = std::sin(theta);
    t.cs = std::cos(theta);

    const double sx = st.x + st.y, dx = st.x - st.y;
    const double sp = (st.p1 + st.p2) / (2.0 * pm), dp = (st.p1 - st.p2) / (2.0 * pm);

    t.s = sx - w * u * u - 2.0 * w / om2;
    t.p = sp + u * (om2 * (w * u * u / 3.0 - sx) + 2.0 * w);
    t.d = dx - w * u * u + 2.0 * w / om2;
    t.r = dp - u * (om2 * (w * u * u / 3.0 - dx) - 2.0 * w);

    t.s_d = {1.0, 1.0, 0.0, 0.0, -4.0 * w / hb.F0, -2.0 * w * u};
    t.p_d = {-u * om2, -u * om2, 1.0 / (2.0 * pm), 1.0 / (2.0 * pm),
             -sp / pm - u * (w * u * u / 3.0 - sx) * om2 / pm, om2 * (w * u * u - sx) + 2.0 * w};
    t.d_d = {1.0, -1.0, 0.0, 0.0, 4.0 * w / hb.F0, -2.0 * w * u};
    t.r_d = {u * om2, -u * om2, 1.0 / (2.0 * pm), -1.0 / (2.0 * pm),
             -dp / pm + u * (w * u * u / 3.0 - dx) * om2 / pm, -(om2 * (w * u * u - dx) - 2.0 * w)};
    return t;
}

PhaseGradient pack_helical_gradient(const std::array<double, 6>& d) {
    // [x, y, p1, p2, p_minus, time] -> PhaseGradient slots
    PhaseGradient g;
    g.d_q[1] = d[0];
    g.d_q[2] = d[1];
    g.d_p[1] = d[2];
    g.d_p[2] = d[3];
    g.d_p[0] = d[4];
    g.d_time = d[5];
    return g;
}

}  // namespace

InvariantSet<FrontFormState> helical_invariants(const HelicalBoost& f) {
    InvariantSet<FrontFormState> set;
    set.system = "helical_boost";
    const HelicalBoost hb = f;
    const FieldSpec spec = f;

    set.quantities.push_back({"Q1", [](const FrontFormState& s) { return s.p_minus; },
                              [](const FrontFormState&) {
                                  PhaseGradient g;
                                  g.d_p[0] = 1.0;
                                  return g;
                              }});

    // Q2 and Q3: hyperbolic pair in x + y; Q4 and Q5: trigonometric pair in x - y.
    auto quantity = [hb](int which) {
        return [hb, which](const FrontFormState& st) {
            const HelicalTerms t = helical_terms(hb, st);
            switch (which) {
                case 2: return t.omega_r * t.s * t.sh + t.p * t.ch;
                case 3: return t.omega_r * t.s * t.ch + t.p * t.sh;
                case 4: return t.omega_r * t.d * t.cs + t.r * t.sn;
                default: return t.omega_r * t.d * t.sn - t.r * t.cs;
            }
        };
    };
    auto gradient = [hb](int which) {
        return [hb, which](const FrontFormState& st) {
            const HelicalTerms t = helical_terms(hb, st);
            const double u = st.x_plus;
            std::array<double, 6> d{};
            for (int v = 0; v < 6; ++v) {
                // theta = omega_r * x+ varies through p_- (v = 4) and time (v = 5)
                double om_v = v == 4 ? t.omega_dp : 0.0;
                double theta_v = v == 4 ? t.omega_dp * u : (v == 5 ? t.omega_r : 0.0);
                switch (which) {
                    case 2:
                        d[v] = om_v * t.s * t.sh + t.omega_r * t.s_d[v] * t.sh +
                               t.omega_r * t.s * t.ch * theta_v + t.p_d[v] * t.ch +
                               t.p * t.sh * theta_v;
                        break;
                    case 3:
                        d[v] = om_v * t.s * t.ch + t.omega_r * t.s_d[v] * t.ch +
                               t.omega_r * t.s * t.sh * theta_v + t.p_d[v] * t.sh +
                               t.p * t.ch * theta_v;
                        break;
                    case 4:
                        d[v] = om_v * t.d * t.cs + t.omega_r * t.d_d[v] * t.cs -
                               t.omega_r * t.d * t.sn * theta_v + t.r_d[v] * t.sn +
                               t.r * t.cs * theta_v;
                        break;
                    default:
                        d[v] = om_v * t.d * t.sn + t.omega_r * t.d_d[v] * t.sn +
                               t.omega_r * t.d * t.cs * theta_v - t.r_d[v] * t.cs +
                               t.r * t.sn * theta_v;
                        break;
                }
            }
            return pack_helical_gradient(d);
        };
    };
    set.quantities.push_back({"Q2", quantity(2), gradient(2)});
    set.quantities.push_back({"Q3", quantity(3), gradient(3)});
    set.quantities.push_back({"Q4", quantity(4), gradient(4)});
    set.quantities.push_back({"Q5", quantity(5), gradient(5)});

    const double w = f.omega, f0 = f.F0;
    auto q2t_value = [spec, w, f0](const FrontFormState& s) {
        return hamiltonian(spec, s) + 2.0 * w * (2.0 * s.p_minus * s.x + s.x_plus * s.p1) -
               f0 * s.y * (s.x + w * s.x_plus * s.x_plus);
    };
    set.quantities.push_back(
        {"Q2tilde", q2t_value, [spec, w, f0](const FrontFormState& s) {
             PhaseGradient g = hamiltonian_gradient(spec, s);
             g.d_q[1] += 4.0 * w * s.p_minus - f0 * s.y;
             g.d_q[2] += -f0 * (s.x + w * s.x_plus * s.x_plus);
             g.d_p[0] += 4.0 * w * s.x;
             g.d_p[1] += 2.0 * w * s.x_plus;
             g.d_time += 2.0 * w * s.p1 - 2.0 * w * f0 * s.y * s.x_plus;
             return g;
         }});

    set.identities.push_back(
        {"helical_combination",
         [quantity, q2t_value](const FrontFormState& s) {
             const double q1 = s.p_minus;
             const double q2 = quantity(2)(s), q3 = quantity(3)(s);
             const double q4 = quantity(4)(s), q5 = quantity(5)(s);
             return q2t_value(s) -
                    (0.5 * q1 * (q2 * q2 - q3 * q3 + q4 * q4 + q5 * q5) + 1.0 / (4.0 * q1));
         },
         nullptr});
    return set;
}

// --- vortex --------------------------------------------------------------------

InvariantSet<FrontFormState> vortex_invariants(const Vortex& f) {
    InvariantSet<FrontFormState> set;
    set.system = "vortex";
    const FieldSpec spec = f;
    const double w = f.omega;

    set.quantities.push_back({"Q1", [](const FrontFormState& s) { return s.p_minus; },
                              [](const FrontFormState&) {
                                  PhaseGradient g;
                                  g.d_p[0] = 1.0;
                                  return g;
                              }});
    set.quantities.push_back(
        {"Q2",
         [spec, w](const FrontFormState& s) {
             return hamiltonian(spec, s) + 0.5 * w * (s.x * s.p2 - s.y * s.p1);
         },
         [spec, w](const FrontFormState& s) {
             PhaseGradient g = hamiltonian_gradient(spec, s);
             g.d_q[1] += 0.5 * w * s.p2;
             g.d_q[2] -= 0.5 * w * s.p1;
             g.d_p[1] -= 0.5 * w * s.y;
             g.d_p[2] += 0.5 * w * s.x;
             return g;
         }});
    return set;
}

InvariantSet<FrontFormState> front_invariants(const FieldSpec& spec, double launch_time) {
    if (const auto* pw = std::get_if<PlaneWave>(&spec)) return plane_wave_invariants(*pw);
    if (const auto* tm = std::get_if<TmMode>(&spec)) return tm_invariants(*tm, launch_time);
    if (const auto* hb = std::get_if<HelicalBoost>(&spec)) return helical_invariants(*hb);
    if (const auto* vx = std::get_if<Vortex>(&spec)) return vortex_invariants(*vx);
    InvariantSet<FrontFormState> empty;
    empty.system = field_name(spec);
    return empty;
}

InvariantSet<InstantFormState> instant_invariants(const FieldSpec& spec) {
    if (const auto* und = std::get_if<Undulator>(&spec)) return undulator_invariants(*und);
    InvariantSet<InstantFormState> empty;
    empty.system = field_name(spec);
    return empty;
}

// --- vortex transverse reduction -------------------------------------------------

double oscillator_hamiltonian(double eps, const OscillatorState& s) {
    const double ep = 0.25 + eps, em = 0.25 - eps;
    const double a = s.p_alpha + 0.5 * s.beta;
    const double b = s.p_beta - 0.5 * s.alpha;
    return 0.5 * (a * a + b * b - ep * s.alpha * s.alpha - em * s.beta * s.beta);
}

OscillatorVelocity oscillator_rhs(double eps, const OscillatorState& s) {
    const OscillatorGradient g = oscillator_hamiltonian_gradient(eps, s);
    return {g.d_p_alpha, g.d_p_beta, -g.d_alpha, -g.d_beta};
}

TransverseInvariants vortex_transverse_invariants(double eps, const OscillatorState& s) {
    if (eps == 0.0) throw std::domain_error("epsilon zero");
    const double ep = 0.25 + eps, em = 0.25 - eps;
    const double a = s.p_alpha + 0.5 * s.beta;
    const double b = s.p_beta - 0.5 * s.alpha;
    TransverseInvariants out;
    out.X1 = a * a - ep * s.alpha * s.alpha - (ep / eps) * s.alpha * s.p_beta +
             (em / eps) * s.beta * s.p_alpha;
    out.X2 = b * b - em * s.beta * s.beta + (ep / eps) * s.alpha * s.p_beta -
             (em / eps) * s.beta * s.p_alpha;
    out.H_E = oscillator_hamiltonian(eps, s);
    return out;
}

OscillatorGradient oscillator_hamiltonian_gradient(double eps, const OscillatorState& s) {
    const double ep = 0.25 + eps, em = 0.25 - eps;
    const double a = s.p_alpha + 0.5 * s.beta;
    const double b = s.p_beta - 0.5 * s.alpha;
    return {-0.5 * b - ep * s.alpha, 0.5 * a - em * s.beta, a, b};
}

OscillatorGradient x1_gradient(double eps, const OscillatorState& s) {
    if (eps == 0.0) throw std::domain_error("epsilon zero");
    const double ep = 0.25 + eps, em = 0.25 - eps;
    const double a = s.p_alpha + 0.5 * s.beta;
    return {-2.0 * ep * s.alpha - (ep / eps) * s.p_beta, a + (em / eps) * s.p_alpha,
            2.0 * a + (em / eps) * s.beta, -(ep / eps) * s.alpha};
}

OscillatorGradient x2_gradient(double eps, const OscillatorState& s) {
    if (eps == 0.0) throw std::domain_error("epsilon zero");
    const double ep = 0.25 + eps, em = 0.25 - eps;
    const double b = s.p_beta - 0.5 * s.alpha;
    return {-b + (ep / eps) * s.p_beta, -2.0 * em * s.beta - (em / eps) * s.p_alpha,
            -(em / eps) * s.beta, 2.0 * b + (ep / eps) * s.alpha};
}

double oscillator_bracket(const OscillatorGradient& f, const OscillatorGradient& g) {
    return f.d_alpha * g.d_p_alpha - f.d_p_alpha * g.d_alpha + f.d_beta * g.d_p_beta -
           f.d_p_beta * g.d_beta;
}

// --- tables and drift -------------------------------------------------------------

namespace {

double p_minus_of(const FrontFormState& s) { return s.p_minus; }
double p_minus_of(const InstantFormState&) { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

template <class State>
BracketTable bracket_table(const InvariantSet<State>& set, const std::vector<State>& states) {
    const std::size_t n = set.quantities.size();
    BracketTable table;
    table.names = set.quantity_names();
    table.max_abs.assign(n, std::vector<double>(n, 0.0));
    table.p_minus_coeff.assign(n, std::vector<double>(n, std::numeric_limits<double>::quiet_NaN()));

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double max_abs = 0.0;
            double coeff_sum = 0.0;
            std::size_t coeff_count = 0;
            std::vector<double> values;
            values.reserve(states.size());
            for (const auto& s : states) {
                const double v = poisson_bracket(set.quantities[i], set.quantities[j], s);
                values.push_back(v);
                max_abs = std::max(max_abs, std::abs(v));
                const double pm = p_minus_of(s);
                if (std::isfinite(pm) && std::abs(pm) > 1e-12) {
                    coeff_sum += v / pm;
                    ++coeff_count;
                }
            }
            table.max_abs[i][j] = max_abs;
            if (max_abs > 1e-8 && coeff_count == states.size() && coeff_count > 0) {
                const double c = coeff_sum / static_cast<double>(coeff_count);
                double fit_residual = 0.0;
                for (std::size_t k = 0; k < states.size(); ++k)
                    fit_residual = std::max(
                        fit_residual, std::abs(values[k] - c * p_minus_of(states[k])));
                if (fit_residual <= 1e-6 * std::max(1.0, std::abs(c)))
                    table.p_minus_coeff[i][j] = c;
            }
        }
    }
    return table;
}

template BracketTable bracket_table<FrontFormState>(const InvariantSet<FrontFormState>&,
                                                    const std::vector<FrontFormState>&);
template BracketTable bracket_table<InstantFormState>(const InvariantSet<InstantFormState>&,
                                                      const std::vector<InstantFormState>&);

template <class State>
std::vector<DriftSummary> drift_along(const Trajectory<State>& traj) {
    std::vector<DriftSummary> out;
    if (traj.samples.empty()) return out;
    for (std::size_t k = 0; k < traj.tracked_names.size(); ++k) {
        DriftSummary d;
        d.name = traj.tracked_names[k];
        d.initial = traj.samples.front().tracked[k];
        for (const auto& s : traj.samples)
            d.max_abs_drift = std::max(d.max_abs_drift, std::abs(s.tracked[k] - d.initial));
        d.max_rel_drift = d.max_abs_drift / std::max(1.0, std::abs(d.initial));
        out.push_back(d);
    }
    return out;
}

template std::vector<DriftSummary> drift_along<FrontFormState>(const Trajectory<FrontFormState>&);
template std::vector<DriftSummary> drift_along<InstantFormState>(const Trajectory<InstantFormState>&);

}  // namespace relcharge
