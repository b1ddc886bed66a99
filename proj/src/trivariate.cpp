#include "tripatch/trivariate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tripatch/detail.hpp"

namespace tripatch {

using detail::ipow;

std::size_t dimension(int n) {
    if (n < 0) throw std::invalid_argument("order must be >= 0");
    return static_cast<std::size_t>(3 * n * (n + 1) + 1);
}

std::vector<BasisIndex> canonical_indices(int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<BasisIndex> idx;
    idx.reserve(dimension(n));
    idx.push_back({Family::Center, n, n});
    for (Family fam : {Family::R, Family::G, Family::B})
        for (int j = 0; j < n; ++j)
            for (int i = j; i <= 2 * n - 1 - j; ++i) idx.push_back({fam, i, j});
    return idx;
}

TrivariateSystem make_system(int n, double alpha) {
    ShapeParam check(alpha);
    return {n, alpha, canonical_indices(n)};
}

namespace {

double eval_raw(int n, int i, int j, double u, double v, double w) {
    if (i >= n + 1) return eval_raw(n, 2 * n - i, j, w, v, u);
    return ipow(std::sin(u / 2.0), 2 * n - i) * ipow(std::sin(w / 2.0), i) *
           ipow(std::cos(v / 2.0), i - j) * ipow(std::sin(v / 2.0), j);
}

void check_index(int n, int i, int j) {
    if (j < 0 || j > n || i < j || i > 2 * n - j)
        throw std::out_of_range("basis index (i=" + std::to_string(i) +
                                ", j=" + std::to_string(j) + ") invalid for order " +
                                std::to_string(n));
}

}  // namespace

double eval_R(int n, double alpha, int i, int j, const DomainPoint& p) {
    (void)alpha;
    check_index(n, i, j);
    return eval_raw(n, i, j, p.u, p.v, p.w);
}

double eval_family(int n, double alpha, const BasisIndex& idx, const DomainPoint& p) {
    (void)alpha;
    switch (idx.family) {
        case Family::Center: {
            double s = std::sin(p.u / 2.0) * std::sin(p.v / 2.0) * std::sin(p.w / 2.0);
            return ipow(s, n);
        }
        case Family::R:
            check_index(n, idx.i, idx.j);
            return eval_raw(n, idx.i, idx.j, p.u, p.v, p.w);
        case Family::G:
            check_index(n, idx.i, idx.j);
            return eval_raw(n, idx.i, idx.j, p.w, p.u, p.v);
        case Family::B:
            check_index(n, idx.i, idx.j);
            return eval_raw(n, idx.i, idx.j, p.v, p.w, p.u);
    }
    throw std::logic_error("unreachable family");
}

std::vector<double> eval_all(const TrivariateSystem& sys, const DomainPoint& p) {
    std::vector<double> out;
    out.reserve(sys.index_list.size());
    for (const BasisIndex& idx : sys.index_list)
        out.push_back(eval_family(sys.order, sys.alpha, idx, p));
    return out;
}

std::vector<BasisIndex> boundary_indices(int n, Edge edge) {
    std::vector<BasisIndex> out;
    out.reserve(2 * n + 1);
    // Level-0 run of the family whose corner the edge leaves, closed by the
    // first level-0 function of the family it arrives at.
    Family run, last;
    switch (edge) {
        case Edge::V0: run = Family::R, last = Family::G; break;
        case Edge::U0: run = Family::G, last = Family::B; break;
        case Edge::W0: run = Family::B, last = Family::R; break;
        default: throw std::logic_error("unreachable edge");
    }
    for (int k = 0; k < 2 * n; ++k) out.push_back({run, k, 0});
    out.push_back({last, 0, 0});
    return out;
}

std::vector<double> restrict_boundary(int n, double alpha, Edge edge, double t) {
    if (t < 0.0 || t > alpha)
        throw std::domain_error("edge parameter t = " + std::to_string(t) + " outside [0, alpha]");
    // Edge parametrizations: v=0 runs in u, u=0 runs in w, w=0 runs in v.
    DomainPoint p = [&]() -> DomainPoint {
        switch (edge) {
            case Edge::V0: return {t, 0.0, alpha};
            case Edge::U0: return {0.0, alpha - t, alpha};
            case Edge::W0: return {alpha - t, t, alpha};
        }
        throw std::logic_error("unreachable edge");
    }();
    std::vector<double> vals;
    vals.reserve(2 * n + 1);
    for (const BasisIndex& idx : boundary_indices(n, edge))
        vals.push_back(eval_family(n, alpha, idx, p));
    return vals;
}

}  // namespace tripatch
