#include "tripatch/span.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tripatch {

bool equivalent(const CoeffTriple& t1, const CoeffTriple& t2, int n) {
    (void)n;  // the shift constant is bounded by the triple bounds themselves
    const int d0 = t2.r - t1.r, d1 = t2.g - t1.g, d2 = t2.b - t1.b;
    if (d0 == d1 && d1 == d2) return true;
    const int s0 = t2.r + t1.r, s1 = t2.g + t1.g, s2 = t2.b + t1.b;
    return s0 == s1 && s1 == s2;
}

CoeffTriple canonical_rep(const CoeffTriple& t) {
    const int lo = std::min({t.r, t.g, t.b});
    const int hi = std::max({t.r, t.g, t.b});
    CoeffTriple down{t.r - lo, t.g - lo, t.b - lo};
    CoeffTriple flip{hi - t.r, hi - t.g, hi - t.b};
    return std::min(down, flip);
}

SpanBasisV build_V(int n) {
    if (n < 0) throw std::invalid_argument("order must be >= 0");
    SpanBasisV vb{n, {{0, 0, 0}}};
    for (int k = 1; k <= n; ++k) {
        for (int g = 0; g < k; ++g) vb.classes.push_back({0, g, k});
        for (int b = 0; b < k; ++b) vb.classes.push_back({k, 0, b});
        for (int r = 0; r < k; ++r) vb.classes.push_back({r, k, 0});
    }
    return vb;
}

std::vector<double> eval_V(const SpanBasisV& vb, double alpha, const DomainPoint& p) {
    (void)alpha;
    std::vector<double> out;
    out.reserve(vb.function_count());
    out.push_back(1.0);
    for (std::size_t k = 1; k < vb.classes.size(); ++k) {
        const CoeffTriple& t = vb.classes[k];
        const double arg = t.r * p.u + t.g * p.v + t.b * p.w;
        out.push_back(std::cos(arg));
        out.push_back(std::sin(arg));
    }
    return out;
}

namespace {

double radical_inverse(int base, int k) {
    double f = 1.0, r = 0.0;
    while (k > 0) {
        f /= base;
        r += f * (k % base);
        k /= base;
    }
    return r;
}

}  // namespace

std::vector<DomainPoint> rank_sample_points(int n, double alpha) {
    const std::size_t count = dimension(n) + 20;
    std::vector<DomainPoint> pts;
    pts.reserve(count);
    constexpr double lam = 0.97;  // pull toward the centroid, off the boundary
    for (int k = 1; pts.size() < count; ++k) {
        double x = radical_inverse(2, k);
        double y = radical_inverse(3, k);
        if (x + y > 1.0) {
            x = 1.0 - x;
            y = 1.0 - y;
        }
        x = 1.0 / 3.0 + lam * (x - 1.0 / 3.0);
        y = 1.0 / 3.0 + lam * (y - 1.0 / 3.0);
        pts.emplace_back(alpha * x, alpha * y, alpha);
    }
    return pts;
}

int independence_rank(int n, double alpha, SystemKind kind, int cap) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (n > cap) throw std::invalid_argument("order exceeds the rank-check cap");
    const auto pts = rank_sample_points(n, alpha);
    const std::size_t d = dimension(n);

    TrivariateSystem sys = make_system(n, alpha);
    SpanBasisV vb = build_V(n);
    const std::size_t cols = (kind == SystemKind::Joint) ? 2 * d : d;

    Eigen::MatrixXd M(pts.size(), cols);
    for (std::size_t r = 0; r < pts.size(); ++r) {
        std::size_t c = 0;
        if (kind == SystemKind::T || kind == SystemKind::Joint)
            for (double v : eval_all(sys, pts[r])) M(r, c++) = v;
        if (kind == SystemKind::V || kind == SystemKind::Joint)
            for (double v : eval_V(vb, alpha, pts[r])) M(r, c++) = v;
    }
    // Column scaling is rank neutral and stops wildly different coefficient
    // magnitudes from masking small-but-genuine singular values.
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
        const double nrm = M.col(c).norm();
        if (nrm > 0.0) M.col(c) /= nrm;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    const double thresh = static_cast<double>(d) * sv(0) * 1e-10;
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > thresh) ++rank;
    return rank;
}

SpanFit fit_in_span(int n, double alpha, const std::function<double(const DomainPoint&)>& f,
                    const NormalizationTable& table, double tol) {
    if (table.order != n) throw std::invalid_argument("normalization table order mismatch");
    const std::size_t d = dimension(n);
    int m = 1;
    while (static_cast<std::size_t>((m + 1) * (m + 2) / 2) < 2 * d) ++m;

    std::vector<DomainPoint> pts;
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m - p; ++q)
            pts.emplace_back(alpha * (p + 0.5) / (m + 2), alpha * (q + 0.5) / (m + 2), alpha);

    const auto idx = canonical_indices(n);
    Eigen::MatrixXd A(pts.size(), d);
    Eigen::VectorXd b(pts.size());
    for (std::size_t r = 0; r < pts.size(); ++r) {
        for (std::size_t c = 0; c < d; ++c) A(r, c) = eval_blending(table, idx[c], pts[r]);
        b(r) = f(pts[r]);
    }
    Eigen::VectorXd x = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(A).solve(b);

    SpanFit fit;
    fit.coords.assign(x.data(), x.data() + x.size());
    fit.residual = (A * x - b).cwiseAbs().maxCoeff();
    fit.in_span = fit.residual <= tol;
    return fit;
}

}  // namespace tripatch
