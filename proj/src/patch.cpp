#include "tripatch/patch.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tripatch/univariate.hpp"

namespace tripatch {

void validate_net(const ControlNet& net) {
    const auto idx = canonical_indices(net.order);
    if (net.points.size() != idx.size())
        throw std::invalid_argument("control net holds " + std::to_string(net.points.size()) +
                                    " points; order " + std::to_string(net.order) + " needs " +
                                    std::to_string(idx.size()));
    for (const BasisIndex& k : idx)
        if (!net.points.contains(k))
            throw std::invalid_argument("control net misses an index of the canonical layout");
}

TrigPatch make_patch(ControlNet net, NormalizationTable table) {
    if (net.order != table.order)
        throw std::invalid_argument("control net and normalization table orders differ");
    validate_net(net);
    return {std::move(net), std::move(table)};
}

RationalTrigPatch make_rational_patch(ControlNet net, WeightNet wnet, NormalizationTable table) {
    if (net.order != table.order)
        throw std::invalid_argument("control net and normalization table orders differ");
    validate_net(net);
    double total = 0.0;
    for (const auto& [idx, w] : wnet.weights) {
        if (!net.points.contains(idx))
            throw std::invalid_argument("weight keyed outside the control net layout");
        if (w < 0.0) throw std::invalid_argument("weights must be non-negative");
        total += w;
    }
    if (wnet.weights.size() != net.points.size())
        throw std::invalid_argument("every control point needs a weight");
    if (!(total > 0.0)) throw std::invalid_argument("weight sum must be positive");
    return {std::move(net), std::move(wnet), std::move(table)};
}

namespace {

// The two vanished coordinates name the corner; its sole surviving blending
// function equals 1 exactly there.
const BasisIndex* corner_index(const DomainPoint& p) {
    static const BasisIndex r{Family::R, 0, 0};
    static const BasisIndex g{Family::G, 0, 0};
    static const BasisIndex b{Family::B, 0, 0};
    if (p.v == 0.0 && p.w == 0.0) return &r;
    if (p.u == 0.0 && p.w == 0.0) return &b;
    if (p.u == 0.0 && p.v == 0.0) return &g;
    return nullptr;
}

}  // namespace

Vec3 eval_patch(const TrigPatch& patch, const DomainPoint& p) {
    if (const BasisIndex* corner = corner_index(p)) return patch.net.points.at(*corner);
    Vec3 acc;
    double total = 0.0;
    for (const auto& [idx, pt] : patch.net.points) {
        const double b = eval_blending(patch.table, idx, p);
        acc += b * pt;
        total += b;
    }
    // The blending sum is 1 up to solver accuracy; dividing it out keeps the
    // combination exactly affine.
    return acc / total;
}

Vec3 eval_rational(const RationalTrigPatch& patch, const DomainPoint& p) {
    // At a corner the quotient collapses to w*pt/w, but only while the
    // corner's own weight stays positive.
    if (const BasisIndex* corner = corner_index(p)) {
        if (patch.wnet.weights.at(*corner) > 0.0) return patch.net.points.at(*corner);
        throw std::runtime_error("rational patch denominator vanished at the evaluation point");
    }
    Vec3 acc;
    double denom = 0.0, wmax = 0.0;
    for (const auto& [idx, pt] : patch.net.points) {
        const double w = patch.wnet.weights.at(idx);
        const double wb = w * eval_blending(patch.table, idx, p);
        acc += wb * pt;
        denom += wb;
        wmax = std::max(wmax, w);
    }
    if (denom <= 1e-12 * wmax)
        throw std::runtime_error("rational patch denominator vanished at the evaluation point");
    return acc / denom;
}

Vec3 boundary_curve(const TrigPatch& patch, Edge edge, double t) {
    const int n = patch.net.order;
    const double alpha = patch.table.alpha;
    if (t < 0.0 || t > alpha)
        throw std::domain_error("edge parameter t = " + std::to_string(t) + " outside [0, alpha]");
    const auto survivors = boundary_indices(n, edge);
    if (t == 0.0) return patch.net.points.at(survivors.back());
    if (t == alpha) return patch.net.points.at(survivors.front());
    UnivariateBasis univ = make_univariate(n, alpha);
    Vec3 acc;
    double total = 0.0;
    for (int k = 0; k <= 2 * n; ++k) {
        const double a = eval_A(univ, 2 * n - k, t);
        acc += a * patch.net.points.at(survivors[k]);
        total += a;
    }
    return acc / total;
}

Vec3 AffineMap3::operator()(const Vec3& p) const {
    return {linear[0][0] * p.x + linear[0][1] * p.y + linear[0][2] * p.z + translation.x,
            linear[1][0] * p.x + linear[1][1] * p.y + linear[1][2] * p.z + translation.y,
            linear[2][0] * p.x + linear[2][1] * p.y + linear[2][2] * p.z + translation.z};
}

double affine_check(const TrigPatch& patch, const AffineMap3& map,
                    const std::vector<DomainPoint>& samples) {
    TrigPatch mapped = patch;
    for (auto& [idx, pt] : mapped.net.points) pt = map(pt);
    double worst = 0.0;
    for (const DomainPoint& p : samples)
        worst = std::max(worst, max_abs(eval_patch(mapped, p) - map(eval_patch(patch, p))));
    return worst;
}

}  // namespace tripatch
