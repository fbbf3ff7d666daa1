#include "relcharge/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace relcharge {

namespace {

void require_tm_domain(double u) {
    if (u == 0.0) throw std::domain_error("TM potential singular at x+ = 0");
}

}  // namespace

std::string field_name(const FieldSpec& spec) {
    struct Visitor {
        std::string operator()(const Free&) const { return "free"; }
        std::string operator()(const PlaneWave&) const { return "plane_wave"; }
        std::string operator()(const TmMode&) const { return "tm_mode"; }
        std::string operator()(const Undulator&) const { return "undulator"; }
        std::string operator()(const HelicalBoost&) const { return "helical_boost"; }
        std::string operator()(const Vortex&) const { return "vortex"; }
    };
    return std::visit(Visitor{}, spec);
}

Covector potential(const FieldSpec& spec, const SpacetimePoint& p) {
    const double u = p.t + p.z;
    Covector A{};
    if (const auto* pw = std::get_if<PlaneWave>(&spec)) {
        A[1] = pw->f1.d1(u);
        A[2] = pw->f2.d1(u);
    } else if (const auto* tm = std::get_if<TmMode>(&spec)) {
        require_tm_domain(u);
        const double f = tm->f.value(u);
        const double r2 = p.x * p.x + p.y * p.y;
        const double a_plus = -0.5 * r2 * f / (u * u);
        const double a_minus = -0.5 * f;
        A[0] = a_plus + a_minus;
        A[3] = a_plus - a_minus;
        A[1] = p.x * f / u;
        A[2] = p.y * f / u;
    } else if (const auto* und = std::get_if<Undulator>(&spec)) {
        const double b0 = und->B0 / und->omega;
        A[1] = b0 * std::cos(und->omega * p.z);
        A[2] = b0 * std::sin(und->omega * p.z);
    } else if (const auto* hb = std::get_if<HelicalBoost>(&spec)) {
        A[1] = hb->F0 * u * p.y;
        A[2] = hb->F0 * u * (p.x - hb->omega * u * u / 3.0);
    } else if (const auto* vx = std::get_if<Vortex>(&spec)) {
        const double s = std::sin(vx->omega * u);
        const double c = std::cos(vx->omega * u);
        A[1] = vx->B0 * (p.x * s - p.y * c);
        A[2] = -vx->B0 * (p.x * c + p.y * s);
    }
    return A;
}

PotentialJacobian grad_potential(const FieldSpec& spec, const SpacetimePoint& p) {
    const double u = p.t + p.z;
    PotentialJacobian dA{};
    if (const auto* pw = std::get_if<PlaneWave>(&spec)) {
        const double d1 = pw->f1.d2(u);
        const double d2 = pw->f2.d2(u);
        dA[0][1] = dA[3][1] = d1;
        dA[0][2] = dA[3][2] = d2;
    } else if (const auto* tm = std::get_if<TmMode>(&spec)) {
        require_tm_domain(u);
        const double f = tm->f.value(u);
        const double f1 = tm->f.d1(u);
        const double r2 = p.x * p.x + p.y * p.y;
        // u-derivative of A_0 and A_3; transverse parts are explicit
        const double du_radial = -0.5 * r2 * f1 / (u * u) + r2 * f / (u * u * u);
        dA[0][0] = dA[3][0] = du_radial - 0.5 * f1;
        dA[0][3] = dA[3][3] = du_radial + 0.5 * f1;
        const double du_perp = f1 / u - f / (u * u);
        dA[0][1] = dA[3][1] = p.x * du_perp;
        dA[0][2] = dA[3][2] = p.y * du_perp;
        dA[1][0] = -p.x * f / (u * u);
        dA[2][0] = -p.y * f / (u * u);
        dA[1][3] = -p.x * f / (u * u);
        dA[2][3] = -p.y * f / (u * u);
        dA[1][1] = f / u;
        dA[2][2] = f / u;
    } else if (const auto* und = std::get_if<Undulator>(&spec)) {
        dA[3][1] = -und->B0 * std::sin(und->omega * p.z);
        dA[3][2] = und->B0 * std::cos(und->omega * p.z);
    } else if (const auto* hb = std::get_if<HelicalBoost>(&spec)) {
        dA[0][1] = dA[3][1] = hb->F0 * p.y;
        dA[2][1] = hb->F0 * u;
        dA[0][2] = dA[3][2] = hb->F0 * (p.x - hb->omega * u * u);
        dA[1][2] = hb->F0 * u;
    } else if (const auto* vx = std::get_if<Vortex>(&spec)) {
        const double w = vx->omega;
        const double s = std::sin(w * u);
        const double c = std::cos(w * u);
        dA[0][1] = dA[3][1] = vx->B0 * w * (p.x * c + p.y * s);
        dA[1][1] = vx->B0 * s;
        dA[2][1] = -vx->B0 * c;
        dA[0][2] = dA[3][2] = vx->B0 * w * (p.x * s - p.y * c);
        dA[1][2] = -vx->B0 * c;
        dA[2][2] = -vx->B0 * s;
    }
    return dA;
}

AntisymTensor field_strength(const FieldSpec& spec, const SpacetimePoint& p) {
    const double u = p.t + p.z;
    AntisymTensor F;
    if (const auto* pw = std::get_if<PlaneWave>(&spec)) {
        const double d1 = pw->f1.d2(u);
        const double d2 = pw->f2.d2(u);
        F.set(0, 1, d1);
        F.set(0, 2, d2);
        F.set(1, 3, -d1);
        F.set(2, 3, -d2);
    } else if (const auto* tm = std::get_if<TmMode>(&spec)) {
        require_tm_domain(u);
        const double e = tm->f.d1(u) / u;
        F.set(0, 1, e * p.x);
        F.set(0, 2, e * p.y);
        F.set(0, 3, tm->f.d1(u));
        F.set(1, 3, -e * p.x);
        F.set(2, 3, -e * p.y);
    } else if (const auto* und = std::get_if<Undulator>(&spec)) {
        F.set(1, 3, und->B0 * std::sin(und->omega * p.z));
        F.set(2, 3, -und->B0 * std::cos(und->omega * p.z));
    } else if (const auto* hb = std::get_if<HelicalBoost>(&spec)) {
        const double ex = hb->F0 * p.y;
        const double ey = hb->F0 * (p.x - hb->omega * u * u);
        F.set(0, 1, ex);
        F.set(0, 2, ey);
        F.set(1, 3, -ex);
        F.set(2, 3, -ey);
    } else if (const auto* vx = std::get_if<Vortex>(&spec)) {
        const double w = vx->omega;
        const double s = std::sin(w * u);
        const double c = std::cos(w * u);
        const double g1 = vx->B0 * w * (p.x * c + p.y * s);
        const double g2 = vx->B0 * w * (p.x * s - p.y * c);
        F.set(0, 1, g1);
        F.set(0, 2, g2);
        F.set(1, 3, -g1);
        F.set(2, 3, -g2);
    }
    return F;
}

std::array<AntisymTensor, 4> grad_field_strength(const FieldSpec& spec, const SpacetimePoint& p) {
    const double u = p.t + p.z;
    std::array<AntisymTensor, 4> dF{};
    if (const auto* pw = std::get_if<PlaneWave>(&spec)) {
        const double d1 = pw->f1.d3(u);
        const double d2 = pw->f2.d3(u);
        for (int mu : {0, 3}) {
            dF[mu].set(0, 1, d1);
            dF[mu].set(0, 2, d2);
            dF[mu].set(1, 3, -d1);
            dF[mu].set(2, 3, -d2);
        }
    } else if (const auto* tm = std::get_if<TmMode>(&spec)) {
        require_tm_domain(u);
        const double e = tm->f.d1(u) / u;
        const double de = tm->f.d2(u) / u - tm->f.d1(u) / (u * u);
        for (int mu : {0, 3}) {
            dF[mu].set(0, 1, de * p.x);
            dF[mu].set(0, 2, de * p.y);
            dF[mu].set(0, 3, tm->f.d2(u));
            dF[mu].set(1, 3, -de * p.x);
            dF[mu].set(2, 3, -de * p.y);
        }
        dF[1].set(0, 1, e);
        dF[1].set(1, 3, -e);
        dF[2].set(0, 2, e);
        dF[2].set(2, 3, -e);
    } else if (const auto* und = std::get_if<Undulator>(&spec)) {
        dF[3].set(1, 3, und->B0 * und->omega * std::cos(und->omega * p.z));
        dF[3].set(2, 3, und->B0 * und->omega * std::sin(und->omega * p.z));
    } else if (const auto* hb = std::get_if<HelicalBoost>(&spec)) {
        dF[2].set(0, 1, hb->F0);
        dF[2].set(1, 3, -hb->F0);
        dF[1].set(0, 2, hb->F0);
        dF[1].set(2, 3, -hb->F0);
        for (int mu : {0, 3}) {
            dF[mu].set(0, 2, -2.0 * hb->omega * hb->F0 * u);
            dF[mu].set(2, 3, 2.0 * hb->omega * hb->F0 * u);
        }
    } else if (const auto* vx = std::get_if<Vortex>(&spec)) {
        const double w = vx->omega;
        const double s = std::sin(w * u);
        const double c = std::cos(w * u);
        const double g1 = vx->B0 * w * (p.x * c + p.y * s);
        const double g2 = vx->B0 * w * (p.x * s - p.y * c);
        for (int mu : {0, 3}) {
            dF[mu].set(0, 1, -w * g2);
            dF[mu].set(0, 2, w * g1);
            dF[mu].set(1, 3, w * g2);
            dF[mu].set(2, 3, -w * g1);
        }
        dF[1].set(0, 1, vx->B0 * w * c);
        dF[1].set(0, 2, vx->B0 * w * s);
        dF[1].set(1, 3, -vx->B0 * w * c);
        dF[1].set(2, 3, -vx->B0 * w * s);
        dF[2].set(0, 1, vx->B0 * w * s);
        dF[2].set(0, 2, -vx->B0 * w * c);
        dF[2].set(1, 3, -vx->B0 * w * s);
        dF[2].set(2, 3, vx->B0 * w * c);
    }
    return dF;
}

EBFields eb_fields(const FieldSpec& spec, const SpacetimePoint& p) {
    const AntisymTensor F = field_strength(spec, p);
    EBFields eb;
    eb.E = {F(0, 1), F(0, 2), F(0, 3)};
    eb.B = {-F(2, 3), F(1, 3), -F(1, 2)};
    return eb;
}

FieldSpec with_amplitude(const FieldSpec& spec, double amplitude) {
    FieldSpec out = spec;
    if (auto* pw = std::get_if<PlaneWave>(&out)) {
        bool any = false;
        for (Profile* f : {&pw->f1, &pw->f2}) {
            if (f->kind() != Profile::Kind::zero && f->kind() != Profile::Kind::polynomial) {
                *f = f->with_amplitude(amplitude);
                any = true;
            }
        }
        if (!any) throw std::invalid_argument("plane wave profiles have no amplitude parameter");
    } else if (auto* tm = std::get_if<TmMode>(&out)) {
        tm->f = tm->f.with_amplitude(amplitude);
    } else if (auto* und = std::get_if<Undulator>(&out)) {
        und->B0 = amplitude;
    } else if (auto* hb = std::get_if<HelicalBoost>(&out)) {
        hb->F0 = amplitude;
    } else if (auto* vx = std::get_if<Vortex>(&out)) {
        vx->B0 = amplitude;
    } else {
        throw std::invalid_argument("free field has no amplitude parameter");
    }
    return out;
}

}  // namespace relcharge
