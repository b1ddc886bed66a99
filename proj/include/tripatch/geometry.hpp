#pragma once

#include "tripatch/patch.hpp"

namespace tripatch {

// Ring torus: center-circle radius rho, tube radius mu, 0 < mu <= rho.
struct TorusParams {
    double rho = 0.0, mu = 0.0;
    TorusParams(double rho_, double mu_);
};

// Parametric point ((rho + mu sin u) cos v, (rho + mu sin u) sin v, mu cos u).
Vec3 torus_point(const TorusParams& tp, double u, double v);

// Closed-form order-2 control net reproducing the torus triangle
// u in [0, alpha], v in [0, alpha - u] exactly.
ControlNet torus_net(const TorusParams& tp, double alpha);

// Ring Dupin cyclide with a^2 = b^2 + c^2 and c < mu <= a; phi and psi slide
// the parameter window over the surface.
struct CyclideParams {
    double a = 0.0, b = 0.0, c = 0.0, mu = 0.0, phi = 0.0, psi = 0.0;
    CyclideParams(double a_, double b_, double c_, double mu_, double phi_ = 0.0,
                  double psi_ = 0.0);
};

Vec3 cyclide_point(const CyclideParams& cp, double u, double v);

// Relative residual of the quartic implicit form
// (x^2+y^2+z^2+b^2-mu^2)^2 = 4(ax - c mu)^2 + 4 b^2 y^2.
double cyclide_implicit(const CyclideParams& cp, const Vec3& q);

// Rational order-2 patch matching the cyclide exactly, built by fitting the
// denominator a - c cos(u+phi) cos(v+psi) into the blending span (weights)
// and each numerator coordinate likewise (weighted points). Throws when a
// fit residual exceeds what an in-span target can produce.
RationalTrigPatch cyclide_patch(const CyclideParams& cp, double alpha,
                                const NormalizationTable& table);

}  // namespace tripatch
