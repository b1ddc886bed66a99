#pragma once

#include <functional>
#include <vector>

#include "tripatch/normalization.hpp"

namespace tripatch {

// Integer coefficient triple of the linear form r*u + g*v + b*w.
struct CoeffTriple {
    int r = 0, g = 0, b = 0;
    friend bool operator==(const CoeffTriple&, const CoeffTriple&) = default;
    friend auto operator<=>(const CoeffTriple&, const CoeffTriple&) = default;
};

// On the plane u + v + w = alpha, two linear forms whose coefficient sum or
// difference is constant across the three slots generate the same cos/sin
// pair up to phase; this is the equivalence the class count is built on.
bool equivalent(const CoeffTriple& t1, const CoeffTriple& t2, int n);

// Deterministic class representative: shift the minimum to zero, then take
// the lexicographic minimum of the shifted triple and its reflection.
CoeffTriple canonical_rep(const CoeffTriple& t);

// Fourier-side basis of the span: the constant function plus a cos/sin pair
// per nontrivial class, accumulated by the order recursion. Listing order is
// the recursion order, so a prefix of classes(n) is exactly classes(n-1).
struct SpanBasisV {
    int order = 0;
    std::vector<CoeffTriple> classes;  // (0,0,0) first, standing for the constant
    std::size_t function_count() const { return 2 * classes.size() - 1; }
};

SpanBasisV build_V(int n);

// Values [1, cos a_1, sin a_1, cos a_2, ...] with a_k the class linear forms.
std::vector<double> eval_V(const SpanBasisV& vb, double alpha, const DomainPoint& p);

enum class SystemKind { T, V, Joint };

// Numerical rank of the chosen system sampled at dimension(n) + 20
// deterministic interior points (Halton sequence, folded into the triangle
// and pulled slightly toward the centroid). Columns are scaled to unit norm
// before the SVD; singular values above dim * sigma_max * 1e-10 count.
int independence_rank(int n, double alpha, SystemKind kind, int cap = 6);

// The sample points the rank check uses, exposed for reproducibility.
std::vector<DomainPoint> rank_sample_points(int n, double alpha);

struct SpanFit {
    std::vector<double> coords;  // coordinates in the blending system, canonical order
    double residual = 0.0;       // max abs misfit over the collocation points
    bool in_span = false;        // residual <= tol
};

// Least-squares coordinates of f in the normalized blending system. The
// lattice is shifted half a cell against the solver's, so membership is
// certified at points that played no role in building the table.
SpanFit fit_in_span(int n, double alpha, const std::function<double(const DomainPoint&)>& f,
                    const NormalizationTable& table, double tol = 1e-9);

}  // namespace tripatch
