#include "relcharge/symmetry.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

#include "relcharge/quadrature.hpp"

namespace relcharge {

namespace {

// d_mu xi^nu as a mixed matrix W[nu][mu] = g^{nu nu} omega_{nu mu}
std::array<std::array<double, 4>, 4> generator_jacobian(const PoincareGenerator& g) {
    std::array<std::array<double, 4>, 4> w{};
    for (int nu = 0; nu < 4; ++nu) {
        const double sign = nu == 0 ? 1.0 : -1.0;
        for (int mu = 0; mu < 4; ++mu) w[nu][mu] = sign * g.omega(nu, mu);
    }
    return w;
}

}  // namespace

Covector lie_derivative_potential(const FieldSpec& spec, const PoincareGenerator& g,
                                  const SpacetimePoint& p) {
    const Covector A = potential(spec, p);
    const PotentialJacobian dA = grad_potential(spec, p);
    const FourVector xi_up = raise_index(xi_at(g, p));
    const auto w = generator_jacobian(g);

    Covector out{};
    for (int mu = 0; mu < 4; ++mu) {
        double v = 0.0;
        for (int nu = 0; nu < 4; ++nu) v += xi_up[nu] * dA[nu][mu] + A[nu] * w[nu][mu];
        out[mu] = v;
    }
    return out;
}

AntisymTensor lie_derivative_field_strength(const FieldSpec& spec, const PoincareGenerator& g,
                                            const SpacetimePoint& p) {
    const AntisymTensor F = field_strength(spec, p);
    const auto dF = grad_field_strength(spec, p);
    const FourVector xi_up = raise_index(xi_at(g, p));
    const auto w = generator_jacobian(g);

    AntisymTensor out;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu + 1; nu < 4; ++nu) {
            double v = 0.0;
            for (int s = 0; s < 4; ++s) {
                v += xi_up[s] * dF[s](mu, nu);
                v += F(s, nu) * w[s][mu] + F(mu, s) * w[s][nu];
            }
            out.set(mu, nu, v);
        }
    }
    return out;
}

SymmetryScanResult symmetry_scan(const FieldSpec& spec,
                                 const std::vector<SpacetimePoint>& sample_points, double tol) {
    const std::size_t rows = 6 * sample_points.size();
    if (rows < 10) throw std::invalid_argument("insufficient samples");

    const auto& basis = generator_basis();
    Eigen::MatrixXd m(rows, 10);
    for (int k = 0; k < 10; ++k) {
        std::size_t r = 0;
        for (const auto& p : sample_points) {
            const AntisymTensor lf = lie_derivative_field_strength(spec, basis[k], p);
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu + 1; nu < 4; ++nu) m(r++, k) = lf(mu, nu);
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();

    SymmetryScanResult result;
    result.sample_count = sample_points.size();
    for (int i = 0; i < 10; ++i) result.singular_values[i] = sv(i);

    const double sigma_max = sv(0);
    for (int i = 0; i < 10; ++i) {
        if (sv(i) >= tol * sigma_max && sigma_max > 0.0) continue;
        std::array<double, 10> coeff{};
        PoincareGenerator gen;
        for (int k = 0; k < 10; ++k) {
            coeff[k] = svd.matrixV()(k, i);
            gen += coeff[k] * basis[k];
        }
        double residual = 0.0;
        for (const auto& p : sample_points)
            residual = std::max(residual, lie_derivative_field_strength(spec, gen, p).max_abs());
        result.coefficients.push_back(coeff);
        result.basis.push_back(gen);
        result.residuals.push_back(residual);
    }
    return result;
}

namespace {

double halton(std::uint64_t index, unsigned base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::vector<SpacetimePoint> scan_sample_points(const FieldSpec& spec, std::size_t count,
                                               std::uint64_t seed) {
    const bool tm = std::holds_alternative<TmMode>(spec);
    std::uint64_t s = seed;
    std::array<double, 4> shift{};
    for (double& v : shift) v = static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;

    constexpr unsigned bases[4] = {2, 3, 5, 7};
    std::vector<SpacetimePoint> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::array<double, 4> u{};
        for (int d = 0; d < 4; ++d) {
            double v = halton(i + 1, bases[d]) + shift[d];
            u[d] = v - std::floor(v);
        }
        LightFrontPoint lf;
        lf.x_plus = tm ? 0.5 + 2.0 * u[0] : -1.5 + 3.0 * u[0];
        lf.x_minus = -1.5 + 3.0 * u[1];
        lf.x = -1.5 + 3.0 * u[2];
        lf.y = -1.5 + 3.0 * u[3];
        points.push_back(from_light_front(lf));
    }
    return points;
}

namespace {

double line_integral(const FieldSpec& spec, const PoincareGenerator& g, const SpacetimePoint& a,
                     const SpacetimePoint& b) {
    const std::array<double, 4> d = {b.t - a.t, b.x - a.x, b.y - a.y, b.z - a.z};
    auto integrand = [&](double s) {
        const SpacetimePoint x{a.t + s * d[0], a.x + s * d[1], a.y + s * d[2], a.z + s * d[3]};
        const Covector la = lie_derivative_potential(spec, g, x);
        return la[0] * d[0] + la[1] * d[1] + la[2] * d[2] + la[3] * d[3];
    };
    return integrate_gk(integrand, 0.0, 1.0, {1e-10, 48});
}

void require_symmetry_on_segment(const FieldSpec& spec, const PoincareGenerator& g,
                                 const SpacetimePoint& a, const SpacetimePoint& b) {
    const std::array<double, 4> d = {b.t - a.t, b.x - a.x, b.y - a.y, b.z - a.z};
    double worst = 0.0, field_scale = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double s = i / 20.0;
        const SpacetimePoint x{a.t + s * d[0], a.x + s * d[1], a.y + s * d[2], a.z + s * d[3]};
        worst = std::max(worst, lie_derivative_field_strength(spec, g, x).max_abs());
        field_scale = std::max(field_scale, field_strength(spec, x).max_abs());
    }
    if (worst > 1e-8 * std::max(1.0, field_scale)) throw std::domain_error("not a symmetry");
}

}  // namespace

double gauge_term(const FieldSpec& spec, const PoincareGenerator& g, const SpacetimePoint& p,
                  const SpacetimePoint& base) {
    require_symmetry_on_segment(spec, g, base, p);
    const double direct = line_integral(spec, g, base, p);

    // second route: two legs through an axis-aligned intermediate point
    const SpacetimePoint mid{p.t, p.x, base.y, base.z};
    require_symmetry_on_segment(spec, g, base, mid);
    require_symmetry_on_segment(spec, g, mid, p);
    const double routed = line_integral(spec, g, base, mid) + line_integral(spec, g, mid, p);

    if (std::abs(direct - routed) > 1e-6 * std::max(1.0, std::abs(direct)))
        throw std::runtime_error("path-dependent");
    return direct;
}

double noether_charge(const PoincareGenerator& g, double lambda_value, const Covector& p4,
                      const SpacetimePoint& at) {
    return contract(xi_at(g, at), p4) - lambda_value;
}

}  // namespace relcharge
