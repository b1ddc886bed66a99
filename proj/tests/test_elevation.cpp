#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tripatch/elevation.hpp"
#include "tripatch/patch.hpp"

using namespace tripatch;

namespace {

ControlNet wavy_net(int n) {
    ControlNet net;
    net.order = n;
    int k = 0;
    for (const BasisIndex& idx : canonical_indices(n)) {
        net.points[idx] = Vec3{std::cos(1.7 * k + 0.3), std::sin(2.3 * k + 1.1),
                               0.5 * std::cos(0.9 * k)};
        ++k;
    }
    return net;
}

}  // namespace

TEST_CASE("Bezier triangle evaluation") {
    BezierTriangleNet net;
    net.degree = 1;
    net.points[{1, 0, 0}] = Vec3{1, 0, 0};
    net.points[{0, 1, 0}] = Vec3{0, 1, 0};
    net.points[{0, 0, 1}] = Vec3{0, 0, 1};
    const Vec3 q = eval_bezier(net, 0.2, 0.3);
    CHECK(q.x == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(q.y == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(q.z == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("elevation accepts only order 1") {
    CHECK_THROWS_AS(elevate_1_to_2(wavy_net(2), 1.0), std::invalid_argument);
}

TEST_CASE("elevation preserves the surface") {
    for (double alpha : {0.3, kPi / 2, 2.8}) {
        const ControlNet net1 = wavy_net(1);
        const ControlNet net2 = elevate_1_to_2(net1, alpha);
        REQUIRE(net2.order == 2);
        REQUIRE(net2.points.size() == 19);
        const TrigPatch p1 = make_patch(net1, closed_form_table(1, alpha));
        const TrigPatch p2 = make_patch(net2, closed_form_table(2, alpha));
        for (int i = 0; i <= 12; ++i)
            for (int j = 0; j <= 12 - i; ++j) {
                const DomainPoint p(alpha * i / 12, alpha * j / 12, alpha);
                CHECK(max_abs(eval_patch(p1, p) - eval_patch(p2, p)) <= 1e-12);
            }
    }
}

TEST_CASE("corner rows copy the corner points") {
    const double alpha = 1.1;
    const ControlNet net1 = wavy_net(1);
    const ControlNet net2 = elevate_1_to_2(net1, alpha);
    for (Family f : {Family::R, Family::G, Family::B})
        CHECK((net2.points.at(BasisIndex{f, 0, 0}) ==
               net1.points.at(BasisIndex{f, 0, 0})));
}

TEST_CASE("elevation weights form convex combinations") {
    for (double alpha : {0.3, kPi / 2, 2.8}) {
        const auto idx1 = canonical_indices(1);
        std::map<BasisIndex, double> row_sum;
        double wmin = 1e300;
        for (const BasisIndex& src : idx1) {
            ControlNet ind;
            ind.order = 1;
            for (const BasisIndex& k : idx1)
                ind.points[k] = (k == src) ? Vec3{1, 0, 0} : Vec3{0, 0, 0};
            for (const auto& [k2, pt] : elevate_1_to_2(ind, alpha).points) {
                row_sum[k2] += pt.x;
                wmin = std::min(wmin, pt.x);
            }
        }
        CHECK(wmin >= 0.0);
        for (const auto& [k2, s] : row_sum)
            CHECK(std::fabs(s - 1.0) <= 1e-14);
    }
}

TEST_CASE("squares of the order-1 coefficients give order 2") {
    for (double alpha : {0.4, kPi / 2, 2.9}) {
        const NormalizationTable t1 = closed_form_table(1, alpha);
        const NormalizationTable t2 = closed_form_table(2, alpha);
        const NormalizationTable rel = coefficient_relation_1_to_2(t1);
        REQUIRE(rel.order == 2);
        for (const auto& [key, ref] : t2.reduced) {
            const double got = rel.reduced.at(key);
            CHECK(std::fabs(got - ref) / std::fabs(ref) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(coefficient_relation_1_to_2(closed_form_table(2, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("combination tables exist for orders 2 and 3") {
    CHECK_THROWS_AS(bezier_combinations(1), std::invalid_argument);
    CHECK_THROWS_AS(bezier_combinations(4), std::invalid_argument);
    CHECK(bezier_combinations(2).size() == 21);  // degree 5
    CHECK(bezier_combinations(3).size() == 45);  // degree 8
}

TEST_CASE("combination rows are exact convex weights") {
    for (int n : {2, 3}) {
        for (const auto& [key, combo] : bezier_combinations(n)) {
            REQUIRE(key[0] + key[1] + key[2] == 3 * n - 1);
            // exact rational accumulation
            long long num = 0, den = 1;
            for (const auto& [idx, r] : combo) {
                CHECK(idx.family != Family::Center);
                CHECK(r.num > 0);
                CHECK(r.den > 0);
                num = num * r.den + r.num * den;
                den *= r.den;
            }
            CHECK(num == den);
        }
    }
}

TEST_CASE("corner combinations are single points") {
    const auto combos = bezier_combinations(2);
    const auto& at_u = combos.at({5, 0, 0});
    REQUIRE(at_u.size() == 1);
    CHECK((at_u[0].first == BasisIndex{Family::R, 0, 0}));
    const auto& at_w = combos.at({0, 0, 5});
    REQUIRE(at_w.size() == 1);
    CHECK((at_w[0].first == BasisIndex{Family::G, 0, 0}));
    const auto& at_v = combos.at({0, 5, 0});
    REQUIRE(at_v.size() == 1);
    CHECK((at_v[0].first == BasisIndex{Family::B, 0, 0}));
}

TEST_CASE("limit net matches the shrunk patch") {
    for (int n : {2, 3}) {
        const ControlNet net = wavy_net(n);
        const BezierTriangleNet bez = to_bezier_limit(net);
        CHECK(bez.degree == 3 * n - 1);
        CHECK(bez.points.size() == static_cast<size_t>((3 * n) * (3 * n + 1) / 2));

        // corners carry over exactly
        CHECK((bez.points.at({3 * n - 1, 0, 0}) ==
               net.points.at(BasisIndex{Family::R, 0, 0})));

        auto deviation = [&](double a) {
            const TrigPatch patch = make_patch(net, closed_form_table(n, a));
            double worst = 0.0;
            for (int i = 0; i <= 10; ++i)
                for (int j = 0; j <= 10 - i; ++j) {
                    const double x = i / 10.0, y = j / 10.0;
                    const Vec3 diff = eval_patch(patch, DomainPoint(a * x, a * y, a)) -
                                      eval_bezier(bez, x, y);
                    worst = std::max(worst, max_abs(diff));
                }
            return worst;
        };
        const double d2 = deviation(1e-2), d3 = deviation(1e-3);
        CHECK(std::fabs(std::log10(d2 / d3) - 2.0) <= 0.2);
        CHECK(d3 <= 1e-5);
    }
    CHECK_THROWS_AS(to_bezier_limit(wavy_net(1)), std::invalid_argument);
}
