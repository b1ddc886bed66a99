#include "tripatch/elevation.hpp"

#include <cmath>
#include <stdexcept>

#include "tripatch/detail.hpp"

namespace tripatch {

using detail::binomial;
using detail::ipow;

Vec3 eval_bezier(const BezierTriangleNet& net, double x, double y) {
    const int m = net.degree;
    const double z = 1.0 - x - y;
    Vec3 acc;
    for (const auto& [key, pt] : net.points) {
        const auto [d, e, f] = key;
        const double w = static_cast<double>(binomial(m, d) * binomial(m - d, e)) * ipow(x, d) *
                         ipow(y, e) * ipow(z, f);
        acc += w * pt;
    }
    return acc;
}

namespace {

Family next_family(Family f) {
    switch (f) {
        case Family::R: return Family::G;
        case Family::G: return Family::B;
        case Family::B: return Family::R;
        default: return Family::Center;
    }
}

Family prev_family(Family f) {
    switch (f) {
        case Family::R: return Family::B;
        case Family::G: return Family::R;
        case Family::B: return Family::G;
        default: return Family::Center;
    }
}

}  // namespace

ControlNet elevate_1_to_2(const ControlNet& net1, double alpha) {
    if (net1.order != 1)
        throw std::invalid_argument("order elevation is implemented for order-1 nets");
    validate_net(net1);
    ShapeParam check(alpha);
    const double C2 = std::cos(alpha / 2.0) * std::cos(alpha / 2.0);
    const double S2 = std::sin(alpha / 2.0) * std::sin(alpha / 2.0);

    auto old0 = [&](Family f) { return net1.points.at({f, 0, 0}); };
    auto old1 = [&](Family f) { return net1.points.at({f, 1, 0}); };
    const Vec3 ctr = net1.points.at({Family::Center, 1, 1});

    ControlNet out{2, {}};
    Vec3 acc0, acc1;
    for (Family f : {Family::R, Family::G, Family::B}) {
        acc0 += old0(f);
        acc1 += old1(f);
    }
    out.points[{Family::Center, 2, 2}] =
        (acc0 + 4 * C2 * acc1 + 2 * S2 * ctr) / (5 + 10 * C2);

    for (Family f : {Family::R, Family::G, Family::B}) {
        const Family nx = next_family(f), pv = prev_family(f);
        out.points[{f, 0, 0}] = old0(f);
        out.points[{f, 1, 0}] = 0.5 * (old0(f) + old1(f));
        out.points[{f, 2, 0}] = old0(f) / (2 + 4 * C2) + (2 * C2 / (1 + 2 * C2)) * old1(f) +
                                old0(nx) / (2 + 4 * C2);
        out.points[{f, 3, 0}] = 0.5 * (old1(f) + old0(nx));
        out.points[{f, 1, 1}] = old0(f) / (2 + 4 * C2) + (C2 / (1 + 2 * C2)) * old1(f) +
                                (S2 / (2 + 4 * C2)) * ctr + (C2 / (2 + 4 * C2)) * old1(nx) +
                                (C2 / (1 + 2 * C2)) * old1(pv);
        out.points[{f, 2, 1}] = old0(f) / (8 + 4 * C2) + ((1 + C2) / (4 + 2 * C2)) * old1(f) +
                                (S2 / (4 + 2 * C2)) * ctr + old0(nx) / (8 + 4 * C2) +
                                ((1 + 2 * C2) / (8 + 4 * C2)) * old1(nx) +
                                ((1 + 2 * C2) / (8 + 4 * C2)) * old1(pv);
    }
    return out;
}

NormalizationTable coefficient_relation_1_to_2(const NormalizationTable& table1) {
    if (table1.order != 1)
        throw std::invalid_argument("the coefficient relation maps an order-1 table");
    const double alpha = table1.alpha;
    const double r00 = table1.reduced.at({0, 0});
    const double r10 = table1.reduced.at({1, 0});
    const double r11 = table1.reduced.at({1, 1});
    const double sa = std::sin(alpha);
    const double s = std::sin(alpha / 2.0), c = std::cos(alpha / 2.0);
    const double C2 = c * c, t = std::tan(alpha / 2.0);

    NormalizationTable out{2, alpha, {}};
    out.reduced[{0, 0}] = r00 * r00;
    out.reduced[{1, 0}] = 2 * r00 * r10;
    out.reduced[{2, 0}] = 2 * r00 * r00 + r10 * r10;
    out.reduced[{1, 1}] = 2 * r00 * r11 + r00 * r00 * r10 * sa + 2 * (1 + r00 * C2) * r10 * r10 * s;
    out.reduced[{2, 1}] = 2 * r10 * r11 + 2 * r00 * r10 * r10 * t + 2 * ipow(r10, 3) * s;
    out.reduced[{2, 2}] = r11 * r11 + 6 * r00 * r00 + 6 * r10 * r10;
    return out;
}

namespace {

struct SectorEntry {
    std::array<int, 3> key;
    BezierCombination combo;
};

// One symmetry sector of the degree-5 conversion (order 2).
std::vector<SectorEntry> sector_order2() {
    auto R = [](int i, int j) { return BasisIndex{Family::R, i, j}; };
    auto G = [](int i, int j) { return BasisIndex{Family::G, i, j}; };
    auto B = [](int i, int j) { return BasisIndex{Family::B, i, j}; };
    return {
        {{5, 0, 0}, {{R(0, 0), {1, 1}}}},
        {{4, 0, 1}, {{R(0, 0), {1, 5}}, {R(1, 0), {4, 5}}}},
        {{3, 0, 2}, {{R(1, 0), {2, 5}}, {R(2, 0), {3, 5}}}},
        {{2, 0, 3}, {{R(2, 0), {3, 5}}, {R(3, 0), {2, 5}}}},
        {{1, 0, 4}, {{R(3, 0), {4, 5}}, {G(0, 0), {1, 5}}}},
        {{3, 1, 1}, {{R(1, 0), {1, 5}}, {R(1, 1), {3, 5}}, {B(3, 0), {1, 5}}}},
        {{2, 1, 2}, {{R(2, 0), {1, 5}}, {R(2, 1), {4, 5}}}},
    };
}

// One symmetry sector of the degree-8 conversion (order 3).
std::vector<SectorEntry> sector_order3() {
    auto R = [](int i, int j) { return BasisIndex{Family::R, i, j}; };
    auto G = [](int i, int j) { return BasisIndex{Family::G, i, j}; };
    auto B = [](int i, int j) { return BasisIndex{Family::B, i, j}; };
    return {
        {{8, 0, 0}, {{R(0, 0), {1, 1}}}},
        {{7, 0, 1}, {{R(0, 0), {1, 4}}, {R(1, 0), {3, 4}}}},
        {{6, 0, 2}, {{R(0, 0), {1, 28}}, {R(1, 0), {3, 7}}, {R(2, 0), {15, 28}}}},
        {{5, 0, 3}, {{R(1, 0), {3, 28}}, {R(2, 0), {15, 28}}, {R(3, 0), {5, 14}}}},
        {{4, 0, 4}, {{R(2, 0), {3, 14}}, {R(3, 0), {4, 7}}, {R(4, 0), {3, 14}}}},
        {{3, 0, 5}, {{R(3, 0), {5, 14}}, {R(4, 0), {15, 28}}, {R(5, 0), {3, 28}}}},
        {{2, 0, 6}, {{R(4, 0), {15, 28}}, {R(5, 0), {3, 7}}, {G(0, 0), {1, 28}}}},
        {{1, 0, 7}, {{R(5, 0), {3, 4}}, {G(0, 0), {1, 4}}}},
        {{6, 1, 1},
         {{R(0, 0), {1, 28}}, {R(1, 0), {3, 14}}, {R(1, 1), {15, 28}}, {B(5, 0), {3, 14}}}},
        {{5, 1, 2},
         {{R(1, 0), {1, 14}},
          {R(2, 0), {5, 28}},
          {R(1, 1), {5, 28}},
          {R(2, 1), {15, 28}},
          {B(5, 0), {1, 28}}}},
        {{4, 1, 3},
         {{R(2, 0), {3, 28}}, {R(3, 0), {1, 7}}, {R(2, 1), {9, 28}}, {R(3, 1), {3, 7}}}},
        {{3, 1, 4},
         {{R(3, 0), {1, 7}}, {R(4, 0), {3, 28}}, {R(3, 1), {3, 7}}, {R(4, 1), {9, 28}}}},
        {{2, 1, 5},
         {{R(4, 0), {5, 28}},
          {R(5, 0), {1, 14}},
          {R(4, 1), {15, 28}},
          {G(1, 0), {1, 28}},
          {G(1, 1), {5, 28}}}},
        {{1, 1, 6},
         {{R(5, 0), {3, 14}}, {G(0, 0), {1, 28}}, {G(1, 0), {3, 14}}, {G(1, 1), {15, 28}}}},
        {{4, 2, 2},
         {{R(2, 0), {1, 28}},
          {R(2, 1), {3, 14}},
          {B(4, 0), {1, 28}},
          {B(4, 1), {3, 14}},
          {R(2, 2), {1, 2}}}},
        {{3, 2, 3}, {{R(3, 0), {1, 28}}, {R(3, 1), {3, 14}}, {R(3, 2), {3, 4}}}},
    };
}

std::array<int, 3> rotate_key(const std::array<int, 3>& k) { return {k[1], k[2], k[0]}; }

}  // namespace

std::map<std::array<int, 3>, BezierCombination> bezier_combinations(int n) {
    if (n != 2 && n != 3)
        throw std::invalid_argument("Bezier-limit conversion covers orders 2 and 3");
    const auto sector = (n == 2) ? sector_order2() : sector_order3();
    std::map<std::array<int, 3>, BezierCombination> table;
    for (const SectorEntry& s : sector) table.emplace(s.key, s.combo);

    const int m = 3 * n - 1;
    std::map<std::array<int, 3>, BezierCombination> out;
    for (int d = m; d >= 0; --d) {
        for (int e = m - d; e >= 0; --e) {
            std::array<int, 3> key{d, e, m - d - e};
            std::array<int, 3> probe = key;
            int rot = 0;
            while (rot < 3 && !table.contains(probe)) {
                probe = rotate_key(probe);
                ++rot;
            }
            if (rot == 3)
                throw std::logic_error("conversion sector does not cover the Bezier index set");
            BezierCombination combo = table.at(probe);
            // Rotating the Bezier key forward corresponds to relabeling the
            // source families backward.
            for (auto& entry : combo)
                for (int s = 0; s < rot; ++s) entry.first.family = prev_family(entry.first.family);
            out.emplace(key, std::move(combo));
        }
    }
    return out;
}

BezierTriangleNet to_bezier_limit(const ControlNet& net) {
    if (net.order != 2 && net.order != 3)
        throw std::invalid_argument("Bezier-limit conversion covers orders 2 and 3");
    validate_net(net);
    BezierTriangleNet out{3 * net.order - 1, {}};
    for (const auto& [key, combo] : bezier_combinations(net.order)) {
        Vec3 acc;
        for (const auto& [idx, w] : combo)
            acc += (static_cast<double>(w.num) / static_cast<double>(w.den)) * net.points.at(idx);
        out.points[key] = acc;
    }
    return out;
}

}  // namespace tripatch
