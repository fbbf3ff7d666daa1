#pragma once

#include <functional>

namespace relcharge {

struct QuadratureOptions {
    double abs_tol{1e-10};
    int max_depth{48};
};

// Adaptive Gauss-Kronrod 15(7) on [a, b]; a > b integrates with sign.
// Throws std::runtime_error if the tolerance cannot be reached.
double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    const QuadratureOptions& opts = {});

// True if g changes sign (or vanishes) somewhere on [a, b], sampled at
// `samples` points.  Used to detect poles of quadrature integrands.
bool sign_change_on(const std::function<double(double)>& g, double a, double b,
                    int samples = 256);

}  // namespace relcharge
