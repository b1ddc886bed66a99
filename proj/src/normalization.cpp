#include "tripatch/normalization.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tripatch/detail.hpp"
#include "tripatch/univariate.hpp"

namespace tripatch {

using detail::ipow;

double NormalizationTable::coefficient(const BasisIndex& idx) const {
    const int n = order;
    if (idx.family == Family::Center) return reduced.at({n, n});
    return reduced.at({std::min(idx.i, 2 * n - idx.i), idx.j});
}

std::vector<double> NormalizationTable::expanded() const {
    std::vector<double> out;
    const auto idx = canonical_indices(order);
    out.reserve(idx.size());
    for (const BasisIndex& k : idx) out.push_back(coefficient(k));
    return out;
}

NormalizationTable closed_form_table(int n, double alpha) {
    ShapeParam check(alpha);
    const double s = std::sin(alpha / 2.0);
    const double c = std::cos(alpha / 2.0);
    NormalizationTable t{n, alpha, {}};
    switch (n) {
        case 1:
            t.reduced = {{{0, 0}, 1 / ipow(s, 2)},
                         {{1, 0}, 2 * c / ipow(s, 2)},
                         {{1, 1}, 2 / s}};
            return t;
        case 2:
            t.reduced = {{{0, 0}, 1 / ipow(s, 4)},
                         {{1, 0}, 4 * c / ipow(s, 4)},
                         {{2, 0}, (2 + 4 * c * c) / ipow(s, 4)},
                         {{1, 1}, (4 + 8 * c * c) / ipow(s, 5)},
                         {{2, 1}, (16 * c + 8 * ipow(c, 3)) / ipow(s, 5)},
                         {{2, 2}, (10 + 20 * c * c) / ipow(s, 4)}};
            return t;
        case 3:
            t.reduced = {{{0, 0}, 1 / ipow(s, 6)},
                         {{1, 0}, 6 * c / ipow(s, 6)},
                         {{2, 0}, (12 * c * c + 3) / ipow(s, 6)},
                         {{3, 0}, (8 * ipow(c, 3) + 12 * c) / ipow(s, 6)},
                         {{1, 1}, (24 * c * c + 6) / ipow(s, 7)},
                         {{2, 1}, (48 * ipow(c, 3) + 42 * c) / ipow(s, 7)},
                         {{3, 1}, (24 * ipow(c, 4) + 84 * c * c + 12) / ipow(s, 7)},
                         {{2, 2}, (24 * ipow(c, 4) + 162 * c * c + 24) / ipow(s, 8)},
                         {{3, 2}, (24 * ipow(c, 5) + 252 * ipow(c, 3) + 144 * c) / ipow(s, 8)},
                         {{3, 3}, (-104 * ipow(c, 6) - 276 * ipow(c, 4) + 324 * c * c + 56) /
                                      ipow(s, 9)}};
            return t;
        default:
            throw std::invalid_argument("closed-form normalization tables exist for orders 1..3");
    }
}

double level1_closed_form(int n, double alpha, int i) {
    if (n < 2) throw std::invalid_argument("the level-1 closed form requires order >= 2");
    if (i < 1 || i > n) throw std::out_of_range("level-1 position must satisfy 1 <= i <= n");
    const double s = std::sin(alpha / 2.0);
    const double c = std::cos(alpha / 2.0);
    UnivariateBasis basis = make_univariate(n, alpha);
    if (i == 1) return 2.0 / s * basis.coeffs[2 * n - 2];
    return i / s * basis.coeffs[2 * n - i] * c + (i + 1) / s * basis.coeffs[2 * n - i - 1];
}

NormalizationTable solve_table(int n, double alpha, double tol) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    ShapeParam check(alpha);
    UnivariateBasis univ = make_univariate(n, alpha);
    auto level0 = [&](int i) { return univ.coeffs[2 * n - std::min(i, 2 * n - i)]; };

    // Unknowns: reduced entries with j >= 1, ordered j ascending then i.
    std::vector<std::pair<int, int>> unknowns;
    for (int j = 1; j <= n; ++j)
        for (int i = j; i <= n; ++i) unknowns.emplace_back(i, j);
    const int nun = static_cast<int>(unknowns.size());

    // Interior lattice; density 3n keeps the collocation matrix well
    // conditioned (the coarser 2n lattice aliases the trigonometric system).
    const int m = 3 * n;
    std::vector<DomainPoint> pts;
    for (int p = 1; p <= m + 1; ++p)
        for (int q = 1; q <= m + 1 - p; ++q)
            pts.emplace_back(alpha * p / (m + 2), alpha * q / (m + 2), alpha);

    Eigen::MatrixXd A(pts.size(), nun);
    Eigen::VectorXd b(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const DomainPoint& p = pts[k];
        double rhs = 1.0;
        for (Family fam : {Family::R, Family::G, Family::B})
            for (int i = 0; i < 2 * n; ++i)
                rhs -= level0(i) * eval_family(n, alpha, {fam, i, 0}, p);
        b(k) = rhs;
        for (int col = 0; col < nun; ++col) {
            auto [i, j] = unknowns[col];
            if (i == n && j == n) {
                A(k, col) = eval_family(n, alpha, {Family::Center, n, n}, p);
                continue;
            }
            double acc = 0.0;
            for (Family fam : {Family::R, Family::G, Family::B}) {
                acc += eval_family(n, alpha, {fam, i, j}, p);
                if (j + 1 <= i && i <= n - 1)
                    acc += eval_family(n, alpha, {fam, 2 * n - i, j}, p);
            }
            A(k, col) = acc;
        }
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (qr.rank() < nun) {
        std::ostringstream msg;
        msg << "normalization collocation system is rank deficient (rank " << qr.rank() << " of "
            << nun << ")";
        throw std::runtime_error(msg.str());
    }
    Eigen::VectorXd x = qr.solve(b);
    const double residual = (A * x - b).cwiseAbs().maxCoeff();
    if (residual > tol) {
        std::ostringstream msg;
        msg << "normalization solve residual " << residual << " exceeds tolerance " << tol;
        throw std::runtime_error(msg.str());
    }

    NormalizationTable table{n, alpha, {}};
    for (int i = 0; i <= n; ++i) table.reduced[{i, 0}] = level0(i);
    for (int col = 0; col < nun; ++col) table.reduced[unknowns[col]] = x(col);

    // The level-1 row has an independent closed form; a disagreement means
    // the collocation solution drifted.
    if (n >= 2) {
        for (int i = 1; i <= n; ++i) {
            const double ref = level1_closed_form(n, alpha, i);
            if (std::fabs(table.reduced.at({i, 1}) - ref) > 1e-8 * std::fabs(ref)) {
                std::ostringstream msg;
                msg << "solved level-1 entry (i=" << i << ") deviates from its closed form";
                throw std::runtime_error(msg.str());
            }
        }
    }
    return table;
}

double eval_blending(const NormalizationTable& table, const BasisIndex& idx,
                     const DomainPoint& p) {
    return table.coefficient(idx) * eval_family(table.order, table.alpha, idx, p);
}

double blending_sum(const NormalizationTable& table, const DomainPoint& p) {
    double s = 0.0;
    for (const BasisIndex& idx : canonical_indices(table.order))
        s += eval_blending(table, idx, p);
    return s;
}

}  // namespace tripatch
