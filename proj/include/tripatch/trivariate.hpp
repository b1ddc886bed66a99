#pragma once

#include <cstddef>
#include <vector>

#include "tripatch/domain.hpp"

namespace tripatch {

// The joint system consists of three rotationally symmetric families R, G, B
// plus one center function shared by all three. Within a family, j is the
// level (nesting depth toward the center) and i the position along it.
enum class Family : unsigned char { Center = 0, R = 1, G = 2, B = 3 };

struct BasisIndex {
    Family family = Family::Center;
    int i = 0, j = 0;

    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
    // Canonical order: Center, R, G, B; inside a family j ascending, then i.
    friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

// Number of functions of order n: 3n(n+1) + 1.
std::size_t dimension(int n);

// All indices of order n in canonical order. Families hold j = 0..n-1,
// i = j..2n-1-j; the center carries i = j = n.
std::vector<BasisIndex> canonical_indices(int n);

struct TrivariateSystem {
    int order = 0;
    double alpha = 0.0;
    std::vector<BasisIndex> index_list;
};

TrivariateSystem make_system(int n, double alpha);

// R-family function. For i <= n:
//   sin^(2n-i)(u/2) sin^i(w/2) cos^(i-j)(v/2) sin^j(v/2);
// for i >= n+1 the reflected form with (u, w) swapped and i -> 2n-i.
// Valid for 0 <= j <= n, j <= i <= 2n-j; i = j = n is the center function.
double eval_R(int n, double alpha, int i, int j, const DomainPoint& p);

// Dispatches to eval_R under the cyclic argument rotation of the family:
// R reads (u,v,w), G reads (w,u,v), B reads (v,w,u).
double eval_family(int n, double alpha, const BasisIndex& idx, const DomainPoint& p);

// All dimension(n) values at p, canonical order.
std::vector<double> eval_all(const TrivariateSystem& sys, const DomainPoint& p);

// Domain edge named by the barycentric coordinate that vanishes on it.
enum class Edge { U0, V0, W0 };

// The 2n+1 basis functions that survive on the named edge, evaluated at edge
// parameter t in [0, alpha]; every other function vanishes there. Entry k
// equals A_(2n-k)(t) / c_(2n-k) of the univariate basis.
std::vector<double> restrict_boundary(int n, double alpha, Edge edge, double t);

// The surviving indices themselves, in the same order restrict_boundary uses.
std::vector<BasisIndex> boundary_indices(int n, Edge edge);

}  // namespace tripatch
