#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tripatch/patch.hpp"

namespace tripatch {

// Triangular Bernstein-Bezier net of the given degree; keys (d, e, f) with
// d + e + f = degree.
struct BezierTriangleNet {
    int degree = 0;
    std::map<std::array<int, 3>, Vec3> points;
};

// Bernstein evaluation on the unit simplex, (x, y, 1-x-y).
Vec3 eval_bezier(const BezierTriangleNet& net, double x, double y);

// Rewrites an order-1 net in the order-2 basis without changing the surface.
// All combination weights are non-negative and each row sums to 1.
ControlNet elevate_1_to_2(const ControlNet& net1, double alpha);

// The matching coefficient-table map: squaring the order-1 partition of
// unity yields the order-2 normalization coefficients.
NormalizationTable coefficient_relation_1_to_2(const NormalizationTable& table1);

struct Rational {
    std::int64_t num = 0, den = 1;
};

// One Bezier point as a convex combination of control-net entries.
using BezierCombination = std::vector<std::pair<BasisIndex, Rational>>;

// Full alpha-independent conversion tables for orders 2 and 3 (degrees 5 and
// 8). One symmetry sector is stored; the rest follows from the cyclic family
// relabeling R->G->B->R paired with rotating (d, e, f) -> (e, f, d).
std::map<std::array<int, 3>, BezierCombination> bezier_combinations(int n);

// Degenerate-alpha limit of an order-2 or order-3 patch: the Bezier net of
// degree 3n-1 whose patch the trigonometric surface converges to as the
// domain shrinks.
BezierTriangleNet to_bezier_limit(const ControlNet& net);

}  // namespace tripatch
