#pragma once

#include <numbers>

namespace tripatch {

// Side length of the barycentric domain. Values at or beyond pi lose the
// shape-preserving properties of the basis, so construction rejects them.
struct ShapeParam {
    double alpha;
    explicit ShapeParam(double a);
};

// Point of the triangular domain u + v + w = alpha, all components >= 0.
// Built from (u, v); w is derived from the constraint rather than validated,
// which keeps the three coordinates consistent under floating point.
struct DomainPoint {
    double u = 0.0, v = 0.0, w = 0.0;
    DomainPoint(double u_, double v_, double alpha);
};

inline constexpr double kPi = std::numbers::pi;

}  // namespace tripatch
