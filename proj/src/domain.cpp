#include "tripatch/domain.hpp"

#include <stdexcept>
#include <string>

namespace tripatch {

ShapeParam::ShapeParam(double a) : alpha(a) {
    if (!(a > 0.0) || !(a < kPi))
        throw std::domain_error("shape parameter alpha must lie strictly inside (0, pi), got " +
                                std::to_string(a));
}

DomainPoint::DomainPoint(double u_, double v_, double alpha) : u(u_), v(v_) {
    ShapeParam check(alpha);
    const double slack = 1e-12 * alpha;
    if (u < -slack || v < -slack || u + v > alpha + slack)
        throw std::domain_error("barycentric point (" + std::to_string(u_) + ", " +
                                std::to_string(v_) + ") outside the triangle of side " +
                                std::to_string(alpha));
    if (u < 0.0) u = 0.0;
    if (v < 0.0) v = 0.0;
    w = alpha - u - v;
    if (w < 0.0) w = 0.0;
}

}  // namespace tripatch
