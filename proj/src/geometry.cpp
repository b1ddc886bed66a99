#include "tripatch/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tripatch/span.hpp"

namespace tripatch {

TorusParams::TorusParams(double rho_, double mu_) : rho(rho_), mu(mu_) {
    if (!(mu > 0.0) || !(mu <= rho))
        throw std::invalid_argument("torus radii must satisfy 0 < mu <= rho");
}

Vec3 torus_point(const TorusParams& tp, double u, double v) {
    const double ring = tp.rho + tp.mu * std::sin(u);
    return {ring * std::cos(v), ring * std::sin(v), tp.mu * std::cos(u)};
}

ControlNet torus_net(const TorusParams& tp, double alpha) {
    ShapeParam check(alpha);
    const double rho = tp.rho, mu = tp.mu;
    const double sa = std::sin(alpha), ca = std::cos(alpha);
    const double s2 = std::sin(alpha / 2.0), c2 = std::cos(alpha / 2.0);
    const double ta2 = std::tan(alpha / 2.0);
    const double s32 = std::sin(3.0 * alpha / 2.0), c32 = std::cos(3.0 * alpha / 2.0);

    ControlNet net{2, {}};
    auto set = [&](Family f, int i, int j, double x, double y, double z) {
        net.points[{f, i, j}] = {x, y, z};
    };

    set(Family::Center, 2, 2,
        (6 * rho * (3 + 2 * ca) + mu * (9 + ca) * sa) / (20 + 10 * ca),
        (10 * rho * sa + mu * (7 + ca) * (1 - ca)) / (20 + 10 * ca),
        3 * mu * (3 + 2 * ca) / (10 + 5 * ca));

    set(Family::R, 0, 0, rho + mu * sa, 0.0, mu * ca);
    set(Family::R, 1, 0, rho + mu / 2 * (ta2 + sa), 0.0, mu / 2 * (1 + ca));
    set(Family::R, 2, 0, rho + 3 * mu * sa / (4 + 2 * ca), 0.0, 3 * mu * (1 + ca) / (4 + 2 * ca));
    set(Family::R, 3, 0, rho + mu / 2 * ta2, 0.0, mu);
    set(Family::R, 1, 1,
        rho + 3 * mu * sa / (4 + 2 * ca),
        (3 * rho * sa + mu * (3 + ca) * (1 - ca)) / (8 + 4 * ca),
        3 * mu * (1 + ca) / (4 + 2 * ca));
    set(Family::R, 2, 1,
        rho + 3 * mu * (2 + ca) * sa / ((1 + ca) * (10 + 2 * ca)),
        (2 * rho * (sa + ta2) + 3 * mu * (1 - ca)) / (10 + 2 * ca),
        3 * mu * (3 + ca) / (10 + 2 * ca));

    set(Family::G, 0, 0, rho, 0.0, mu);
    set(Family::G, 1, 0, rho, rho / 2 * ta2, mu);
    set(Family::G, 2, 0, 3 * rho * (1 + ca) / (4 + 2 * ca), 3 * rho * sa / (4 + 2 * ca), mu);
    set(Family::G, 3, 0, rho / 2 * (1 + ca), rho / 2 * (ta2 + sa), mu);
    set(Family::G, 1, 1,
        rho + 3 * mu * sa / (8 + 4 * ca),
        (3 * rho * sa + 2 * mu * (1 - ca)) / (8 + 4 * ca), mu);
    set(Family::G, 2, 1,
        (3 * rho * (3 + ca) + 3 * mu * sa) / (10 + 2 * ca),
        (3 * rho * (3 * s2 + s32) + 3 * mu * (c2 - c32)) / ((20 + 4 * ca) * c2), mu);

    set(Family::B, 0, 0, rho * ca, rho * sa, mu);
    set(Family::B, 1, 0,
        rho / 2 * (1 + ca) + mu / 2 * ta2 * ca,
        rho / 2 * (ta2 + sa) + mu / 2 * (1 - ca), mu);
    set(Family::B, 2, 0,
        3 * rho * (1 + ca) / (4 + 2 * ca) + mu / 2 * sa,
        (3 * rho * sa + mu * (3 + ca) * (1 - ca)) / (4 + 2 * ca),
        3 * mu * (1 + ca) / (4 + 2 * ca));
    set(Family::B, 3, 0,
        rho + mu / 2 * (ta2 + sa),
        rho / 2 * ta2 + mu / 2 * (1 - ca), mu / 2 * (1 + ca));
    set(Family::B, 1, 1,
        3 * rho * (1 + ca) / (4 + 2 * ca) + mu / 4 * sa,
        (6 * rho * sa + mu * (1 - ca) * (3 + ca)) / (8 + 4 * ca), mu);
    set(Family::B, 2, 1,
        (3 * rho * (3 + ca) * c2 + mu * (3 * s2 + 2 * s32)) / ((10 + 2 * ca) * c2),
        (3 * rho * (3 * s2 + s32) + 4 * mu * (c2 - c32)) / ((20 + 4 * ca) * c2),
        3 * mu * (3 + ca) / (10 + 2 * ca));

    return net;
}

CyclideParams::CyclideParams(double a_, double b_, double c_, double mu_, double phi_, double psi_)
    : a(a_), b(b_), c(c_), mu(mu_), phi(phi_), psi(psi_) {
    if (std::fabs(a * a - b * b - c * c) > 1e-12 * std::max(1.0, a * a))
        throw std::invalid_argument("cyclide parameters must satisfy a^2 = b^2 + c^2");
    if (!(c >= 0.0) || !(c < mu) || !(mu <= a))
        throw std::invalid_argument("cyclide parameters must satisfy 0 <= c < mu <= a");
}

Vec3 cyclide_point(const CyclideParams& cp, double u, double v) {
    const double cu = std::cos(u + cp.phi), su = std::sin(u + cp.phi);
    const double cv = std::cos(v + cp.psi), sv = std::sin(v + cp.psi);
    const double d = cp.a - cp.c * cu * cv;
    return {(cp.mu * (cp.c - cp.a * cu * cv) + cp.b * cp.b * cu) / d,
            (cp.a - cp.mu * cv) * cp.b * su / d,
            (cp.c * cu - cp.mu) * cp.b * sv / d};
}

double cyclide_implicit(const CyclideParams& cp, const Vec3& q) {
    const double lhs =
        (q.x * q.x + q.y * q.y + q.z * q.z + cp.b * cp.b - cp.mu * cp.mu) *
        (q.x * q.x + q.y * q.y + q.z * q.z + cp.b * cp.b - cp.mu * cp.mu);
    const double rhs = 4 * (cp.a * q.x - cp.c * cp.mu) * (cp.a * q.x - cp.c * cp.mu) +
                       4 * cp.b * cp.b * q.y * q.y;
    return std::fabs(lhs - rhs) / std::max(std::fabs(lhs), 1.0);
}

RationalTrigPatch cyclide_patch(const CyclideParams& cp, double alpha,
                                const NormalizationTable& table) {
    if (table.order != 2)
        throw std::invalid_argument("the cyclide fit needs an order-2 normalization table");
    const double fit_tol = 1e-8;

    auto denom = [&](const DomainPoint& p) {
        return cp.a - cp.c * std::cos(p.u + cp.phi) * std::cos(p.v + cp.psi);
    };
    SpanFit wfit = fit_in_span(2, alpha, denom, table, fit_tol);

    SpanFit coord_fit[3];
    for (int k = 0; k < 3; ++k) {
        auto f = [&, k](const DomainPoint& p) {
            const Vec3 q = cyclide_point(cp, p.u, p.v);
            const double comp = (k == 0) ? q.x : (k == 1) ? q.y : q.z;
            return comp * denom(p);
        };
        coord_fit[k] = fit_in_span(2, alpha, f, table, fit_tol);
    }
    if (!wfit.in_span || !coord_fit[0].in_span || !coord_fit[1].in_span || !coord_fit[2].in_span) {
        std::ostringstream msg;
        msg << "cyclide fit residuals (" << wfit.residual << ", " << coord_fit[0].residual << ", "
            << coord_fit[1].residual << ", " << coord_fit[2].residual
            << ") exceed tolerance; the target left the order-2 span";
        throw std::runtime_error(msg.str());
    }

    ControlNet net{2, {}};
    WeightNet wnet;
    const auto idx = canonical_indices(2);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const double w = wfit.coords[k];
        net.points[idx[k]] = {coord_fit[0].coords[k] / w, coord_fit[1].coords[k] / w,
                              coord_fit[2].coords[k] / w};
        wnet.weights[idx[k]] = w;
    }
    return make_rational_patch(std::move(net), std::move(wnet), table);
}

}  // namespace tripatch
