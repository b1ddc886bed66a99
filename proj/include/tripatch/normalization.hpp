#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tripatch/trivariate.hpp"

namespace tripatch {

// Coefficients that turn the joint system into a partition of unity.
// Only the reduced set is stored: keys (i, j) with 0 <= j <= n, j <= i <= n.
// The full table follows from the mirror rule (i <-> 2n-i shares one entry)
// and from the three families sharing identical coefficients.
struct NormalizationTable {
    int order = 0;
    double alpha = 0.0;
    std::map<std::pair<int, int>, double> reduced;

    double coefficient(const BasisIndex& idx) const;
    // All dimension(order) coefficients in canonical index order.
    std::vector<double> expanded() const;
};

// Closed-form tables; available for n = 1, 2, 3.
NormalizationTable closed_form_table(int n, double alpha);

// Closed form of the level-1 row (j = 1), valid for n >= 2, 1 <= i <= n.
double level1_closed_form(int n, double alpha, int i);

// Collocation least-squares solve of the partition-of-unity conditions for
// the entries with j >= 1 (level 0 is fixed by the boundary to the univariate
// coefficients). Deterministic; throws when the fit residual exceeds tol or
// the collocation matrix is rank deficient.
NormalizationTable solve_table(int n, double alpha, double tol = 1e-9);

// Blending function: expanded coefficient times the basis function.
double eval_blending(const NormalizationTable& table, const BasisIndex& idx, const DomainPoint& p);

// Sum of all blending functions at p; identically 1 up to solver accuracy.
double blending_sum(const NormalizationTable& table, const DomainPoint& p);

}  // namespace tripatch
