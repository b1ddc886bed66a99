#include "tripatch/univariate.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

#include "tripatch/detail.hpp"

namespace tripatch {

using detail::binomial;
using detail::ipow;

UnivariateBasis make_univariate(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("univariate basis order must be >= 1");
    ShapeParam check(alpha);
    const double c = std::cos(alpha / 2.0);
    const double s = std::sin(alpha / 2.0);
    const double s2n = ipow(s, 2 * n);
    if (s2n < 1e-300)
        std::cerr << "warning: sin(alpha/2)^(2n) underflows for alpha = " << alpha
                  << ", n = " << n << "; coefficients are unreliable\n";

    UnivariateBasis basis{n, alpha, std::vector<double>(2 * n + 1)};
    for (int i = 0; i <= 2 * n; ++i) {
        double acc = 0.0;
        for (int r = 0; r <= i / 2; ++r)
            acc += static_cast<double>(binomial(n, i - r) * binomial(i - r, r)) *
                   ipow(2.0 * c, i - 2 * r);
        basis.coeffs[i] = acc / s2n;
    }
    return basis;
}

double eval_A(const UnivariateBasis& basis, int i, double t) {
    const int n = basis.order;
    if (i < 0 || i > 2 * n) throw std::out_of_range("basis function index out of range");
    if (t < 0.0 || t > basis.alpha)
        throw std::domain_error("parameter t = " + std::to_string(t) + " outside [0, alpha]");
    return basis.coeffs[i] * ipow(std::sin((basis.alpha - t) / 2.0), 2 * n - i) *
           ipow(std::sin(t / 2.0), i);
}

double bernstein(int m, int i, double s) {
    if (i < 0 || i > m) return 0.0;
    return static_cast<double>(binomial(m, i)) * ipow(s, i) * ipow(1.0 - s, m - i);
}

double bernstein_limit_error(int n, double s, double alpha_small) {
    UnivariateBasis basis = make_univariate(n, alpha_small);
    double worst = 0.0;
    for (int i = 0; i <= 2 * n; ++i)
        worst = std::max(worst, std::fabs(eval_A(basis, i, alpha_small * s) - bernstein(2 * n, i, s)));
    return worst;
}

}  // namespace tripatch
