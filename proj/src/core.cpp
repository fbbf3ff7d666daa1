#include "relcharge/core.hpp"

#include <cmath>
#include <stdexcept>

namespace relcharge {

double SpacetimePoint::component(int mu) const {
    switch (mu) {
        case 0: return t;
        case 1: return x;
        case 2: return y;
        case 3: return z;
    }
    throw std::out_of_range("spacetime index");
}

LightFrontPoint to_light_front(const SpacetimePoint& p) {
    return {p.t + p.z, p.t - p.z, p.x, p.y};
}

SpacetimePoint from_light_front(const LightFrontPoint& p) {
    return {0.5 * (p.x_plus + p.x_minus), p.x, p.y, 0.5 * (p.x_plus - p.x_minus)};
}

Covector& Covector::operator+=(const Covector& o) {
    for (int mu = 0; mu < 4; ++mu) c[mu] += o.c[mu];
    return *this;
}

Covector& Covector::operator*=(double s) {
    for (int mu = 0; mu < 4; ++mu) c[mu] *= s;
    return *this;
}

FourVector raise_index(const Covector& w) {
    return {{w.c[0], -w.c[1], -w.c[2], -w.c[3]}};
}

Covector lower_index(const FourVector& v) {
    return {{v.c[0], -v.c[1], -v.c[2], -v.c[3]}};
}

double contract(const Covector& xi, const Covector& p) {
    return xi.c[0] * p.c[0] - xi.c[1] * p.c[1] - xi.c[2] * p.c[2] - xi.c[3] * p.c[3];
}

int AntisymTensor::slot(int mu, int nu) {
    if (mu == nu) return -1;
    int a = mu < nu ? mu : nu;
    int b = mu < nu ? nu : mu;
    if (a == 0) return b - 1;       // 01, 02, 03 -> 0, 1, 2
    if (a == 1) return b + 1;       // 12, 13     -> 3, 4
    return 5;                       // 23
}

double AntisymTensor::operator()(int mu, int nu) const {
    int s = slot(mu, nu);
    if (s < 0) return 0.0;
    return mu < nu ? m_[s] : -m_[s];
}

void AntisymTensor::set(int mu, int nu, double value) {
    int s = slot(mu, nu);
    if (s < 0) {
        if (value != 0.0) throw std::invalid_argument("diagonal entry of antisymmetric tensor");
        return;
    }
    m_[s] = mu < nu ? value : -value;
}

void AntisymTensor::add(int mu, int nu, double value) {
    int s = slot(mu, nu);
    if (s < 0) return;
    m_[s] += mu < nu ? value : -value;
}

double AntisymTensor::max_abs() const {
    double m = 0.0;
    for (double v : m_) m = std::max(m, std::abs(v));
    return m;
}

AntisymTensor& AntisymTensor::operator+=(const AntisymTensor& o) {
    for (int i = 0; i < 6; ++i) m_[i] += o.m_[i];
    return *this;
}

AntisymTensor& AntisymTensor::operator*=(double s) {
    for (double& v : m_) v *= s;
    return *this;
}

PoincareGenerator& PoincareGenerator::operator+=(const PoincareGenerator& o) {
    a_ += o.a_;
    omega_ += o.omega_;
    return *this;
}

PoincareGenerator& PoincareGenerator::operator*=(double s) {
    a_ *= s;
    omega_ *= s;
    return *this;
}

namespace {

PoincareGenerator pure_translation(const Covector& a) {
    PoincareGenerator g;
    g.set_translation(a);
    return g;
}

}  // namespace

PoincareGenerator PoincareGenerator::p_plus() { return pure_translation({{0.5, 0, 0, -0.5}}); }
PoincareGenerator PoincareGenerator::p_minus() { return pure_translation({{0.5, 0, 0, 0.5}}); }
PoincareGenerator PoincareGenerator::p_1() { return pure_translation({{0, -1, 0, 0}}); }
PoincareGenerator PoincareGenerator::p_2() { return pure_translation({{0, 0, -1, 0}}); }
PoincareGenerator PoincareGenerator::p_0() { return pure_translation({{1, 0, 0, 0}}); }
PoincareGenerator PoincareGenerator::p_3() { return pure_translation({{0, 0, 0, -1}}); }

PoincareGenerator PoincareGenerator::l_z() {
    PoincareGenerator g;
    g.set_omega(1, 2, 1.0);
    return g;
}

PoincareGenerator PoincareGenerator::k_z() {
    PoincareGenerator g;
    g.set_omega(0, 3, -1.0);
    return g;
}

PoincareGenerator PoincareGenerator::t_1() {
    PoincareGenerator g;
    g.set_omega(0, 1, 1.0);
    g.set_omega(1, 3, -1.0);
    return g;
}

PoincareGenerator PoincareGenerator::t_2() {
    PoincareGenerator g;
    g.set_omega(0, 2, 1.0);
    g.set_omega(2, 3, -1.0);
    return g;
}

PoincareGenerator PoincareGenerator::u_1() {
    PoincareGenerator g;
    g.set_omega(0, 1, 1.0);
    g.set_omega(1, 3, 1.0);
    return g;
}

PoincareGenerator PoincareGenerator::u_2() {
    PoincareGenerator g;
    g.set_omega(0, 2, 1.0);
    g.set_omega(2, 3, 1.0);
    return g;
}

const std::array<PoincareGenerator, 10>& generator_basis() {
    static const std::array<PoincareGenerator, 10> basis = {
        PoincareGenerator::p_plus(), PoincareGenerator::p_minus(),
        PoincareGenerator::p_1(),    PoincareGenerator::p_2(),
        PoincareGenerator::l_z(),    PoincareGenerator::k_z(),
        PoincareGenerator::t_1(),    PoincareGenerator::t_2(),
        PoincareGenerator::u_1(),    PoincareGenerator::u_2()};
    return basis;
}

const std::array<std::string, 10>& generator_basis_names() {
    static const std::array<std::string, 10> names = {
        "P_plus", "P_minus", "P1", "P2", "Lz", "Kz", "T1", "T2", "U1", "U2"};
    return names;
}

Covector xi_at(const PoincareGenerator& g, const SpacetimePoint& p) {
    Covector xi = g.translation();
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            xi[mu] += g.omega(mu, nu) * p.component(nu);
    return xi;
}

SpacetimePoint position_of(const FrontFormState& s) {
    return from_light_front({s.x_plus, s.x_minus, s.x, s.y});
}

SpacetimePoint position_of(const InstantFormState& s) {
    return {s.t, s.x, s.y, s.z};
}

Covector four_momentum_free(const FrontFormState& s) {
    if (s.p_minus == 0.0) throw std::domain_error("on light cone");
    double p_plus = (s.p1 * s.p1 + s.p2 * s.p2 + 1.0) / (4.0 * s.p_minus);
    return {{p_plus + s.p_minus, s.p1, s.p2, p_plus - s.p_minus}};
}

Covector four_momentum_free(const InstantFormState& s) {
    double p0 = std::sqrt(1.0 + s.p1 * s.p1 + s.p2 * s.p2 + s.p3 * s.p3);
    return {{p0, s.p1, s.p2, s.p3}};
}

}  // namespace relcharge
