#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "relcharge/core.hpp"
#include "relcharge/dynamics.hpp"
#include "relcharge/fields.hpp"

namespace relcharge {

// Lie derivative of the potential along a Poincare generator,
//   (L_xi A)_mu = xi.dA_mu + A_nu d_mu xi^nu
Covector lie_derivative_potential(const FieldSpec& spec, const PoincareGenerator& g,
                                  const SpacetimePoint& p);

// Lie derivative of the field strength,
//   (L_xi F)_{mu nu} = xi.dF_{mu nu} + F_{sigma nu} d_mu xi^sigma
//                      + F_{mu sigma} d_nu xi^sigma
AntisymTensor lie_derivative_field_strength(const FieldSpec& spec, const PoincareGenerator& g,
                                            const SpacetimePoint& p);

struct SymmetryScanResult {
    // orthonormal coefficients in the ten-generator basis, one row per
    // detected symmetry direction
    std::vector<std::array<double, 10>> coefficients;
    std::vector<PoincareGenerator> basis;
    std::array<double, 10> singular_values{};  // descending
    std::vector<double> residuals;             // max |L_xi F| per basis element
    std::size_t sample_count{0};

    int dimension() const { return static_cast<int>(basis.size()); }
};

// Nullspace of the linear map from generator coefficients to the stacked
// L_xi F components over the sample points.  Directions with singular
// value below tol * sigma_max count as symmetries.
SymmetryScanResult symmetry_scan(const FieldSpec& spec,
                                 const std::vector<SpacetimePoint>& sample_points,
                                 double tol = 1e-9);

// Low-discrepancy sample points in a box avoiding the spec's singular
// surfaces; deterministic for a given seed.
std::vector<SpacetimePoint> scan_sample_points(const FieldSpec& spec, std::size_t count,
                                               std::uint64_t seed);

// Gauge function difference Lambda(p) - Lambda(base), recovered as the
// line integral of L_xi A.  Requires L_xi F = 0 along the path; the value
// is cross-checked on a second route.
double gauge_term(const FieldSpec& spec, const PoincareGenerator& g, const SpacetimePoint& p,
                  const SpacetimePoint& base);

// Q = xi.p - Lambda
double noether_charge(const PoincareGenerator& g, double lambda_value, const Covector& p4,
                      const SpacetimePoint& at);

template <class State>
double noether_charge(const PoincareGenerator& g, double lambda_value, const FieldSpec& spec,
                      const State& s) {
    return noether_charge(g, lambda_value, four_momentum(spec, s), position_of(s));
}

}  // namespace relcharge
