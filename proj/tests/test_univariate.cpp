#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tripatch/domain.hpp"
#include "tripatch/univariate.hpp"

using namespace tripatch;

TEST_CASE("shape parameter range") {
    CHECK_NOTHROW(ShapeParam(0.1));
    CHECK_NOTHROW(ShapeParam(3.14));
    CHECK_THROWS_AS(ShapeParam(0.0), std::domain_error);
    CHECK_THROWS_AS(ShapeParam(-0.5), std::domain_error);
    CHECK_THROWS_AS(ShapeParam{kPi}, std::domain_error);
    CHECK_THROWS_AS(ShapeParam(4.0), std::domain_error);
}

TEST_CASE("coefficients match the closed forms") {
    const double alpha = 1.1;
    const UnivariateBasis b1 = make_univariate(1, alpha);
    const double s2 = std::sin(alpha / 2) * std::sin(alpha / 2);
    CHECK(b1.coeffs.size() == 3);
    CHECK(b1.coeffs[0] == doctest::Approx(1.0 / s2).epsilon(1e-15));
    CHECK(b1.coeffs[1] == doctest::Approx(2.0 * std::cos(alpha / 2) / s2).epsilon(1e-15));
    CHECK(b1.coeffs[2] == b1.coeffs[0]);

    // order 2, fixed reference values
    const UnivariateBasis b2 = make_univariate(2, alpha);
    CHECK(b2.coeffs[0] == doctest::Approx(13.39776773031428850919).epsilon(1e-14));
    CHECK(b2.coeffs[1] == doctest::Approx(45.68770212380183136715).epsilon(1e-14));
    CHECK(b2.coeffs[2] == doctest::Approx(65.74542187771979877932).epsilon(1e-14));
    const double s4 = s2 * s2;
    CHECK(b2.coeffs[2] ==
          doctest::Approx((2 + 4 * std::cos(alpha / 2) * std::cos(alpha / 2)) / s4)
              .epsilon(1e-14));
}

TEST_CASE("coefficient symmetry and positivity") {
    for (int n = 1; n <= 5; ++n) {
        for (double alpha : {0.4, kPi / 2, 2.9}) {
            const UnivariateBasis b = make_univariate(n, alpha);
            REQUIRE(b.coeffs.size() == static_cast<size_t>(2 * n + 1));
            for (int i = 0; i <= n; ++i) {
                CHECK(b.coeffs[i] > 0.0);
                CHECK(b.coeffs[i] ==
                      doctest::Approx(b.coeffs[2 * n - i]).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("basis values at fixed points") {
    const UnivariateBasis bq = make_univariate(2, kPi / 2);
    CHECK(eval_A(bq, 2, kPi / 4) ==
          doctest::Approx(0.3431457505076198047932).epsilon(1e-15));
    const UnivariateBasis b = make_univariate(2, 1.1);
    CHECK(eval_A(b, 2, 0.55) ==
          doctest::Approx(0.3574745678458527516575).epsilon(1e-15));
}

TEST_CASE("partition of unity and non-negativity") {
    for (int n = 1; n <= 5; ++n) {
        for (double alpha : {0.3, 1.5, 3.0}) {
            const UnivariateBasis b = make_univariate(n, alpha);
            for (int k = 0; k <= 1000; ++k) {
                const double t = alpha * k / 1000;
                double sum = 0.0;
                for (int i = 0; i <= 2 * n; ++i) {
                    const double v = eval_A(b, i, t);
                    CHECK(v >= 0.0);
                    sum += v;
                }
                CHECK(std::fabs(sum - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("endpoint Kronecker property") {
    for (int n = 1; n <= 4; ++n) {
        const double alpha = 2.0;
        const UnivariateBasis b = make_univariate(n, alpha);
        for (int i = 0; i <= 2 * n; ++i) {
            // all but the first function carry a sin(0) factor at t = 0
            if (i == 0) {
                CHECK(eval_A(b, i, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
            } else {
                CHECK(eval_A(b, i, 0.0) == 0.0);
            }
            if (i == 2 * n) {
                CHECK(eval_A(b, i, alpha) == doctest::Approx(1.0).epsilon(1e-15));
            } else {
                CHECK(eval_A(b, i, alpha) == 0.0);
            }
        }
    }
}

TEST_CASE("argument validation") {
    const UnivariateBasis b = make_univariate(2, 1.0);
    CHECK_THROWS_AS(eval_A(b, 2, -0.1), std::domain_error);
    CHECK_THROWS_AS(eval_A(b, 2, 1.1), std::domain_error);
    CHECK_THROWS_AS(eval_A(b, -1, 0.5), std::out_of_range);
    CHECK_THROWS_AS(eval_A(b, 5, 0.5), std::out_of_range);
    CHECK_THROWS_AS(make_univariate(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_univariate(2, -1.0), std::domain_error);
}

TEST_CASE("Bernstein polynomials") {
    CHECK(bernstein(2, 0, 0.0) == doctest::Approx(1.0));
    CHECK(bernstein(2, 1, 0.5) == doctest::Approx(0.5));
    CHECK(bernstein(4, 2, 0.3) == doctest::Approx(6 * 0.09 * 0.49).epsilon(1e-15));
    for (double s : {0.0, 0.2, 0.7, 1.0}) {
        double sum = 0.0;
        for (int i = 0; i <= 6; ++i) sum += bernstein(6, i, s);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("Bernstein limit decays quadratically in alpha") {
    for (int n = 1; n <= 3; ++n) {
        double err[3];
        int k = 0;
        for (double alpha : {1e-2, 1e-3, 1e-4}) {
            double worst = 0.0;
            for (int m = 0; m <= 20; ++m)
                worst = std::max(worst, bernstein_limit_error(n, m / 20.0, alpha));
            err[k++] = worst;
        }
        const double slope1 = std::log10(err[0] / err[1]);
        const double slope2 = std::log10(err[1] / err[2]);
        CHECK(std::fabs(slope1 - 2.0) <= 0.1);
        CHECK(std::fabs(slope2 - 2.0) <= 0.1);
        CHECK(bernstein_limit_error(n, 0.0, 1e-3) <= 1e-12);  // endpoint exact
    }
}
