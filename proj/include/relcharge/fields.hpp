#pragma once

#include <array>
#include <string>
#include <variant>

#include "relcharge/core.hpp"
#include "relcharge/profile.hpp"

namespace relcharge {

// Background field specifications.  Gauges follow the closed forms the
// potentials were taken from: light-front gauge A_- = 0 for plane wave,
// helical boost and vortex; Weyl gauge A_0 = 0 for the undulator; the
// TM mode uses all four components.

struct Free {};

// A_j = f_j'(x+), j in {1, 2}
struct PlaneWave {
    Profile f1, f2;
};

// A_+ = -x_perp^2 f(x+) / (2 x+^2), A_- = -f(x+)/2, A_perp = x_perp f(x+)/x+
// Singular on the surface x+ = 0.
struct TmMode {
    Profile f;
};

// A_perp = (B0/w) (cos(w z), sin(w z)); static helical magnetic field.
struct Undulator {
    double B0{0};
    double omega{1};
};

// A_1 = F0 x+ y, A_2 = F0 x+ (x - w x+^2 / 3)
struct HelicalBoost {
    double F0{0};
    double omega{1};
};

// A_1 = B0 (x sin(phi) - y cos(phi)), A_2 = -B0 (x cos(phi) + y sin(phi)),
// phi = w x+
struct Vortex {
    double B0{0};
    double omega{1};
};

using FieldSpec = std::variant<Free, PlaneWave, TmMode, Undulator, HelicalBoost, Vortex>;

std::string field_name(const FieldSpec& spec);

// d_mu A_nu, covariant Cartesian indices
using PotentialJacobian = std::array<std::array<double, 4>, 4>;

Covector potential(const FieldSpec& spec, const SpacetimePoint& p);
PotentialJacobian grad_potential(const FieldSpec& spec, const SpacetimePoint& p);
AntisymTensor field_strength(const FieldSpec& spec, const SpacetimePoint& p);
// [sigma] -> d_sigma F
std::array<AntisymTensor, 4> grad_field_strength(const FieldSpec& spec, const SpacetimePoint& p);

// Electric and magnetic 3-vectors extracted with the fixed convention
//   E_i = F_{0i},  B_i = -1/2 eps_{ijk} F_{jk}.
struct EBFields {
    std::array<double, 3> E{};
    std::array<double, 3> B{};
};

EBFields eb_fields(const FieldSpec& spec, const SpacetimePoint& p);

// Replace the leading amplitude (profile amplitude, B0 or F0); used by
// parameter sweeps.
FieldSpec with_amplitude(const FieldSpec& spec, double amplitude);

}  // namespace relcharge
