#pragma once

#include <vector>

#include "tripatch/domain.hpp"

namespace tripatch {

// Normalized trigonometric basis of order n on [0, alpha]:
//   A_i(t) = c_i sin^(2n-i)((alpha - t)/2) sin^i(t/2),  i = 0..2n,
// where the c_i are the unique positive constants making the family sum to 1.
// As alpha -> 0 the family converges to the Bernstein basis of degree 2n.
struct UnivariateBasis {
    int order = 0;               // n; the basis has 2n+1 members
    double alpha = 0.0;
    std::vector<double> coeffs;  // c_0..c_2n, symmetric under i <-> 2n-i
};

UnivariateBasis make_univariate(int n, double alpha);

double eval_A(const UnivariateBasis& basis, int i, double t);

// Bernstein polynomial B_i^m(s) on [0, 1].
double bernstein(int m, int i, double s);

// max_i |A_i(alpha*s) - B_i^2n(s)| at one parameter s; decays like alpha^2.
double bernstein_limit_error(int n, double s, double alpha_small);

}  // namespace tripatch
