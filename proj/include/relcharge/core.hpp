#pragma once

#include <array>
#include <cstddef>
#include <string>

// Conventions used throughout the library:
//   - natural units, c = 1, particle mass = charge = 1
//   - Cartesian basis (t, x, y, z), metric signature (+, -, -, -)
//   - light-front coordinates x+ = t + z, x- = t - z, so that
//     a.b = (a+ b- + a- b+)/2 - a_perp.b_perp and the covariant
//     components obey w_+ = (w_0 + w_3)/2, w_- = (w_0 - w_3)/2
//   - the free mass shell reads 4 p_+ p_- - p_perp^2 = 1
// Index raising/lowering lives here and nowhere else.

namespace relcharge {

// Spacetime event, contravariant components x^mu = (t, x, y, z).
struct SpacetimePoint {
    double t{0}, x{0}, y{0}, z{0};

    double component(int mu) const;
};

// The same event in light-front coordinates.
struct LightFrontPoint {
    double x_plus{0}, x_minus{0}, x{0}, y{0};
};

LightFrontPoint to_light_front(const SpacetimePoint& p);
SpacetimePoint from_light_front(const LightFrontPoint& p);

// Covariant components w_mu in the Cartesian basis.
struct Covector {
    std::array<double, 4> c{};

    double& operator[](int mu) { return c[mu]; }
    double operator[](int mu) const { return c[mu]; }

    // light-front components of the same covector
    double lf_plus() const { return 0.5 * (c[0] + c[3]); }
    double lf_minus() const { return 0.5 * (c[0] - c[3]); }

    Covector& operator+=(const Covector& o);
    Covector& operator*=(double s);
};

// Contravariant components v^mu.
struct FourVector {
    std::array<double, 4> c{};

    double& operator[](int mu) { return c[mu]; }
    double operator[](int mu) const { return c[mu]; }
};

FourVector raise_index(const Covector& w);
Covector lower_index(const FourVector& v);

// xi^mu p_mu for covariant xi and p.
double contract(const Covector& xi, const Covector& p);

// Antisymmetric rank-2 tensor, covariant components F_{mu nu}.
// Only the six independent entries are stored, so F + F^T = 0 holds
// exactly by construction.
class AntisymTensor {
public:
    double operator()(int mu, int nu) const;
    void set(int mu, int nu, double value);
    void add(int mu, int nu, double value);

    double max_abs() const;

    AntisymTensor& operator+=(const AntisymTensor& o);
    AntisymTensor& operator*=(double s);

    static int slot(int mu, int nu);  // -1 on the diagonal

private:
    std::array<double, 6> m_{};  // (01, 02, 03, 12, 13, 23)
};

// Infinitesimal Poincare transformation xi_mu(x) = a_mu + omega_{mu nu} x^nu
// with omega antisymmetric (stored like AntisymTensor, so exactly so).
class PoincareGenerator {
public:
    PoincareGenerator() = default;

    const Covector& translation() const { return a_; }
    double omega(int mu, int nu) const { return omega_(mu, nu); }

    void set_translation(const Covector& a) { a_ = a; }
    void set_omega(int mu, int nu, double value) { omega_.set(mu, nu, value); }

    PoincareGenerator& operator+=(const PoincareGenerator& o);
    PoincareGenerator& operator*=(double s);
    friend PoincareGenerator operator+(PoincareGenerator a, const PoincareGenerator& b) { return a += b; }
    friend PoincareGenerator operator*(double s, PoincareGenerator g) { return g *= s; }

    // Named basis adapted to the front form.  The conserved free-particle
    // charge xi.p of each element is listed on the right.
    static PoincareGenerator p_plus();   // p_+ (= H)
    static PoincareGenerator p_minus();  // p_-
    static PoincareGenerator p_1();      // p_1
    static PoincareGenerator p_2();      // p_2
    static PoincareGenerator l_z();      // x p_2 - y p_1
    static PoincareGenerator k_z();      // x- p_- - x+ H
    static PoincareGenerator t_1();      // 2 x p_- + x+ p_1
    static PoincareGenerator t_2();      // 2 y p_- + x+ p_2
    static PoincareGenerator u_1();      // 2 x H + x- p_1
    static PoincareGenerator u_2();      // 2 y H + x- p_2

    // Instant-form translations, for convenience.
    static PoincareGenerator p_0();      // p_0
    static PoincareGenerator p_3();      // p_3

private:
    Covector a_{};
    AntisymTensor omega_{};
};

// Fixed ordering of the ten basis generators used in scans and reports.
const std::array<PoincareGenerator, 10>& generator_basis();
const std::array<std::string, 10>& generator_basis_names();

// Value of the generator field at an event.
Covector xi_at(const PoincareGenerator& g, const SpacetimePoint& p);

// Phase-space point of the front form.  Evolution parameter is x+;
// canonical pairs are (x-, p_-), (x, p_1), (y, p_2).
struct FrontFormState {
    double x_plus{0};
    double x_minus{0}, x{0}, y{0};
    double p_minus{0}, p1{0}, p2{0};
};

// Phase-space point of the instant form.  Evolution parameter is t;
// canonical pairs are (x, p_1), (y, p_2), (z, p_3).
struct InstantFormState {
    double t{0};
    double x{0}, y{0}, z{0};
    double p1{0}, p2{0}, p3{0};
};

SpacetimePoint position_of(const FrontFormState& s);
SpacetimePoint position_of(const InstantFormState& s);

// Free-field on-shell completion of the canonical 4-momentum.
// The field-dependent version lives in dynamics.hpp.
Covector four_momentum_free(const FrontFormState& s);
Covector four_momentum_free(const InstantFormState& s);

}  // namespace relcharge
