#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tripatch/geometry.hpp"
#include "tripatch/span.hpp"

using namespace tripatch;

TEST_CASE("hand-checked equivalence relations") {
    CHECK(equivalent({0, 0, 1}, {1, 1, 0}, 3));
    CHECK(equivalent({1, 3, 2}, {2, 0, 1}, 3));
    CHECK(equivalent({2, 0, 1}, {0, 2, 1}, 3));
    CHECK(equivalent({1, 3, 2}, {0, 2, 1}, 3));
    CHECK_FALSE(equivalent({1, 0, 0}, {0, 1, 0}, 3));
}

TEST_CASE("equivalence matches canonical representatives exhaustively") {
    // for n <= 3 check every pair: equivalent iff the canonical forms agree;
    // this covers reflexivity, symmetry and transitivity in one sweep
    for (int n = 1; n <= 3; ++n) {
        std::vector<CoeffTriple> all;
        for (int r = 0; r <= n; ++r)
            for (int g = 0; g <= n; ++g)
                for (int b = 0; b <= n; ++b) all.push_back({r, g, b});
        for (const CoeffTriple& t1 : all)
            for (const CoeffTriple& t2 : all) {
                const bool eq = equivalent(t1, t2, n);
                const bool canon_eq = canonical_rep(t1) == canonical_rep(t2);
                if (eq != canon_eq) {
                    CAPTURE(t1.r);
                    CAPTURE(t1.g);
                    CAPTURE(t1.b);
                    CAPTURE(t2.r);
                    CAPTURE(t2.g);
                    CAPTURE(t2.b);
                    CHECK(eq == canon_eq);
                }
            }
    }
}

TEST_CASE("class recursion counts") {
    CHECK(build_V(0).function_count() == 1);
    CHECK(build_V(1).function_count() == 7);
    for (int n = 0; n <= 8; ++n) {
        const SpanBasisV vb = build_V(n);
        CHECK(vb.function_count() == 3 * n * (n + 1) + 1);
        if (n >= 1)
            CHECK(vb.function_count() - build_V(n - 1).function_count() ==
                  static_cast<size_t>(6 * n));
    }
}

TEST_CASE("order-2 class list") {
    const SpanBasisV vb = build_V(2);
    REQUIRE(vb.classes.size() == 10);
    const CoeffTriple expected[10] = {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0},
                                      {0, 0, 2}, {0, 1, 2}, {2, 0, 0}, {2, 0, 1},
                                      {0, 2, 0}, {1, 2, 0}};
    for (int k = 0; k < 10; ++k) CHECK(vb.classes[k] == expected[k]);
    // the recursion appends, so earlier orders are prefixes
    const SpanBasisV v1 = build_V(1);
    for (size_t k = 0; k < v1.classes.size(); ++k)
        CHECK(v1.classes[k] == vb.classes[k]);
}

TEST_CASE("Fourier-side evaluation") {
    const SpanBasisV vb = build_V(1);
    const double alpha = 1.3;
    const DomainPoint p(0.4, 0.6, alpha);
    const std::vector<double> vals = eval_V(vb, alpha, p);
    REQUIRE(vals.size() == 7);
    CHECK(vals[0] == 1.0);
    CHECK(vals[1] == doctest::Approx(std::cos(p.w)).epsilon(1e-15));
    CHECK(vals[2] == doctest::Approx(std::sin(p.w)).epsilon(1e-15));
    CHECK(vals[3] == doctest::Approx(std::cos(p.u)).epsilon(1e-15));
    CHECK(vals[4] == doctest::Approx(std::sin(p.u)).epsilon(1e-15));
    CHECK(vals[5] == doctest::Approx(std::cos(p.v)).epsilon(1e-15));
    CHECK(vals[6] == doctest::Approx(std::sin(p.v)).epsilon(1e-15));
}

TEST_CASE("rank sample points are deterministic and interior") {
    const auto pts = rank_sample_points(2, 1.5);
    CHECK(pts.size() == dimension(2) + 20);
    const auto again = rank_sample_points(2, 1.5);
    for (size_t k = 0; k < pts.size(); ++k) {
        CHECK(pts[k].u == again[k].u);
        CHECK(pts[k].v == again[k].v);
        CHECK(pts[k].u > 0.0);
        CHECK(pts[k].v > 0.0);
        CHECK(pts[k].w > 0.0);
    }
}

TEST_CASE("numerical rank certifies the dimension") {
    const double alpha = 3.0;
    for (int n = 1; n <= 4; ++n) {
        const int d = static_cast<int>(dimension(n));
        CHECK(independence_rank(n, alpha, SystemKind::T) == d);
        CHECK(independence_rank(n, alpha, SystemKind::V) == d);
        CHECK(independence_rank(n, alpha, SystemKind::Joint) == d);
    }
    CHECK_THROWS_AS(independence_rank(7, alpha, SystemKind::T), std::invalid_argument);
}

TEST_CASE("fitting the constant recovers all ones") {
    const NormalizationTable t = closed_form_table(2, 1.1);
    const SpanFit fit = fit_in_span(
        2, 1.1, [](const DomainPoint&) { return 1.0; }, t);
    CHECK(fit.in_span);
    CHECK(fit.residual <= 1e-12);
    for (double c : fit.coords) CHECK(c == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("an in-span target is reproduced at fresh points") {
    const double alpha = 1.2;
    const NormalizationTable t = closed_form_table(1, alpha);
    auto f = [](const DomainPoint& p) { return std::cos(p.u); };
    const SpanFit fit = fit_in_span(1, alpha, f, t);
    REQUIRE(fit.in_span);
    const auto order = canonical_indices(1);
    for (const DomainPoint& p : rank_sample_points(1, alpha)) {
        double acc = 0.0;
        for (size_t k = 0; k < order.size(); ++k)
            acc += fit.coords[k] * eval_blending(t, order[k], p);
        CHECK(std::fabs(acc - f(p)) <= 1e-10);
    }
}

TEST_CASE("torus coordinates live in the order-2 span") {
    const double alpha = kPi / 2;
    const TorusParams tp(2.0, 1.0);
    const NormalizationTable t = closed_form_table(2, alpha);
    const ControlNet net = torus_net(tp, alpha);
    const SpanFit fit = fit_in_span(
        2, alpha, [&](const DomainPoint& p) { return torus_point(tp, p.u, p.v).x; }, t);
    REQUIRE(fit.in_span);
    // the fitted coordinates are the x components of the closed-form net
    const auto order = canonical_indices(2);
    for (size_t k = 0; k < order.size(); ++k)
        CHECK(std::fabs(fit.coords[k] - net.points.at(order[k]).x) <= 1e-9);
}

TEST_CASE("an out-of-span target reports without throwing") {
    const NormalizationTable t = closed_form_table(1, 1.2);
    const SpanFit fit = fit_in_span(
        1, 1.2, [](const DomainPoint& p) { return std::cos(3 * p.u); }, t);
    CHECK_FALSE(fit.in_span);
    CHECK(fit.residual > 1e-3);
}

TEST_CASE("fit validates the table order") {
    const NormalizationTable t = closed_form_table(1, 1.2);
    CHECK_THROWS_AS(fit_in_span(2, 1.2, [](const DomainPoint&) { return 1.0; }, t),
                    std::invalid_argument);
}
