#pragma once

#include <map>
#include <vector>

#include "tripatch/normalization.hpp"
#include "tripatch/vec3.hpp"

namespace tripatch {

// Control points keyed by basis index; the three families share the single
// Center entry.
struct ControlNet {
    int order = 0;
    std::map<BasisIndex, Vec3> points;
};

// Throws unless the net covers the canonical index set exactly.
void validate_net(const ControlNet& net);

struct WeightNet {
    std::map<BasisIndex, double> weights;
};

struct TrigPatch {
    ControlNet net;
    NormalizationTable table;
};

struct RationalTrigPatch {
    ControlNet net;
    WeightNet wnet;
    NormalizationTable table;
};

// Validating assemblers: orders must agree, nets must be complete, weights
// must be non-negative with a positive sum.
TrigPatch make_patch(ControlNet net, NormalizationTable table);
RationalTrigPatch make_rational_patch(ControlNet net, WeightNet wnet, NormalizationTable table);

// Blended surface point. Corners reproduce their control points exactly: the
// blending system is exactly Kronecker there, which the evaluator honors by
// returning the corner entry itself.
Vec3 eval_patch(const TrigPatch& patch, const DomainPoint& p);

// Weighted (projective) counterpart; equal weights reduce it to eval_patch.
Vec3 eval_rational(const RationalTrigPatch& patch, const DomainPoint& p);

// Curve traced on the named edge; a univariate combination of that edge's
// level-0 control points. t = 0 and t = alpha give the corner points.
Vec3 boundary_curve(const TrigPatch& patch, Edge edge, double t);

struct AffineMap3 {
    double linear[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    Vec3 translation;
    Vec3 operator()(const Vec3& p) const;
};

// Max over the samples of |surface of the mapped net - mapped surface|.
double affine_check(const TrigPatch& patch, const AffineMap3& map,
                    const std::vector<DomainPoint>& samples);

}  // namespace tripatch
