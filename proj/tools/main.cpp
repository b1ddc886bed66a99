// Command-line front end: basis tables, patch evaluation, net generation,
// mesh export, conversions, and a self-verification suite.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "tripatch/detail.hpp"
#include "tripatch/elevation.hpp"
#include "tripatch/geometry.hpp"
#include "tripatch/mesh.hpp"
#include "tripatch/netio.hpp"
#include "tripatch/normalization.hpp"
#include "tripatch/patch.hpp"
#include "tripatch/span.hpp"
#include "tripatch/trivariate.hpp"
#include "tripatch/univariate.hpp"

namespace {

using namespace tripatch;

std::string fmt(double v) { return detail::format_double(v); }

// Closed forms exist for n <= 3; beyond that the collocation solver takes over.
NormalizationTable make_table(int n, double alpha) {
    return n <= 3 ? closed_form_table(n, alpha) : solve_table(n, alpha);
}

struct Reporter {
    bool ok = true;
    void check(const std::string& name, double residual, double tol) {
        const bool pass = residual <= tol;
        if (!pass) ok = false;
        std::cout << (pass ? "pass" : "FAIL") << "  " << name
                  << "  residual=" << fmt(residual) << "  tol=" << fmt(tol) << '\n';
    }
    void check_true(const std::string& name, bool pass) {
        if (!pass) ok = false;
        std::cout << (pass ? "pass" : "FAIL") << "  " << name << '\n';
    }
    void info(const std::string& msg) { std::cout << "info  " << msg << '\n'; }
};

// Deterministic control net used by the self-checks: coordinates are smooth
// but unstructured functions of the index position.
ControlNet scrambled_net(int n) {
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

std::vector<DomainPoint> grid_points(double alpha, int per_side) {
    std::vector<DomainPoint> pts;
    for (int i = 0; i < per_side; ++i) {
        const double u = alpha * i / (per_side - 1);
        for (int j = 0; j < per_side; ++j) {
            const double v = (alpha - u) * j / (per_side - 1);
            pts.emplace_back(u, v, alpha);
        }
    }
    return pts;
}

void verify_unity(Reporter& rep, int n_flag, double alpha_flag) {
    const double a = alpha_flag > 0.0 ? alpha_flag : kPi / 2;
    std::vector<int> ns = n_flag > 0 ? std::vector<int>{n_flag}
                                     : std::vector<int>{1, 2, 3, 4};
    for (int n : ns) {
        const NormalizationTable table = make_table(n, a);
        double worst = 0.0;
        for (const DomainPoint& p : grid_points(a, 21))
            worst = std::max(worst, std::fabs(blending_sum(table, p) - 1.0));
        for (const DomainPoint& p : rank_sample_points(n, a))
            worst = std::max(worst, std::fabs(blending_sum(table, p) - 1.0));
        rep.check("unity n=" + std::to_string(n) + " alpha=" + fmt(a), worst, 1e-9);
    }
}

void verify_boundary(Reporter& rep, int n_flag, double alpha_flag) {
    const double a = alpha_flag > 0.0 ? alpha_flag : kPi / 2;
    std::vector<int> ns = n_flag > 0 ? std::vector<int>{n_flag}
                                     : std::vector<int>{1, 2, 3};
    for (int n : ns) {
        const UnivariateBasis basis = make_univariate(n, a);
        double worst = 0.0;
        for (Edge edge : {Edge::U0, Edge::V0, Edge::W0}) {
            for (int k = 0; k <= 50; ++k) {
                const double t = a * k / 50;
                const std::vector<double> vals = restrict_boundary(n, a, edge, t);
                for (int m = 0; m <= 2 * n; ++m) {
                    const double ref =
                        eval_A(basis, 2 * n - m, t) / basis.coeffs[2 * n - m];
                    worst = std::max(worst, std::fabs(vals[m] - ref));
                }
            }
        }
        rep.check("boundary n=" + std::to_string(n) + " alpha=" + fmt(a), worst, 1e-12);
    }
}

void verify_dimension(Reporter& rep, int n_flag, double alpha_flag) {
    const double a = alpha_flag > 0.0 ? alpha_flag : 3.0;
    std::vector<int> ns = n_flag > 0 ? std::vector<int>{n_flag}
                                     : std::vector<int>{1, 2, 3, 4};
    for (int n : ns) {
        const auto d = dimension(n);
        rep.check_true("dimension n=" + std::to_string(n) + " delta=" + std::to_string(d),
                       canonical_indices(n).size() == d &&
                           build_V(n).function_count() == d);
        if (n <= 4) {
            const int rT = independence_rank(n, a, SystemKind::T);
            const int rV = independence_rank(n, a, SystemKind::V);
            const int rJ = independence_rank(n, a, SystemKind::Joint);
            rep.check_true("rank n=" + std::to_string(n) + " T=" + std::to_string(rT) +
                               " V=" + std::to_string(rV) + " joint=" + std::to_string(rJ),
                           rT == static_cast<int>(d) && rV == static_cast<int>(d) &&
                               rJ == static_cast<int>(d));
        } else if (n <= 6) {
            const int rT = independence_rank(n, a, SystemKind::T);
            const int rV = independence_rank(n, a, SystemKind::V);
            rep.info("rank survey n=" + std::to_string(n) + " T=" + std::to_string(rT) +
                     " V=" + std::to_string(rV) +
                     " (not asserted: beyond double-precision conditioning)");
        }
    }
}

void verify_torus(Reporter& rep, double alpha_flag) {
    const double a = alpha_flag > 0.0 ? alpha_flag : kPi / 2;
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    const TorusParams tp(3.0 * golden, 3.0);
    const TrigPatch patch = make_patch(torus_net(tp, a), make_table(2, a));
    double worst = 0.0;
    for (int i = 0; i < 30; ++i) {
        const double u = a * i / 29;
        for (int j = 0; j < 30; ++j) {
            const double v = (a - u) * j / 29;
            const Vec3 diff =
                eval_patch(patch, DomainPoint(u, v, a)) - torus_point(tp, u, v);
            worst = std::max(worst, max_abs(diff));
        }
    }
    rep.check("torus surface alpha=" + fmt(a), worst, 1e-9);

    const Mesh mesh = tessellate(patch, 30);
    double imp = 0.0;
    for (const Vec3& q : mesh.vertices) {
        const double r = std::sqrt(q.x * q.x + q.y * q.y) - tp.rho;
        imp = std::max(imp, std::fabs(r * r + q.z * q.z - tp.mu * tp.mu));
    }
    rep.check("torus mesh implicit K=30", imp, 1e-8);
}

void verify_cyclide(Reporter& rep, double alpha_flag) {
    const double a = alpha_flag > 0.0 ? alpha_flag : kPi / 2;
    const CyclideParams cp(6.0, 4.0 * std::sqrt(2.0), 2.0, 3.0);
    const RationalTrigPatch patch = cyclide_patch(cp, a, make_table(2, a));

    double wmin = 1e300;
    for (const auto& [idx, w] : patch.wnet.weights) wmin = std::min(wmin, w);
    rep.check_true("cyclide weights positive (min=" + fmt(wmin) + ")", wmin > 0.0);

    double worst = 0.0, imp = 0.0;
    for (int i = 0; i < 25; ++i) {
        const double u = a * i / 24;
        for (int j = 0; j < 20; ++j) {
            const double v = (a - u) * j / 19;
            const Vec3 q = eval_rational(patch, DomainPoint(u, v, a));
            worst = std::max(worst, max_abs(q - cyclide_point(cp, u, v)));
            imp = std::max(imp, cyclide_implicit(cp, q));
        }
    }
    rep.check("cyclide surface alpha=" + fmt(a) + " (500 samples)", worst, 1e-8);
    rep.check("cyclide implicit residual", imp, 1e-6);

    // sliding the phases must stay on the same implicit surface
    const CyclideParams cp2(6.0, 4.0 * std::sqrt(2.0), 2.0, 3.0, 0.3, 0.5);
    const RationalTrigPatch patch2 = cyclide_patch(cp2, a, make_table(2, a));
    double imp2 = 0.0;
    for (const DomainPoint& p : grid_points(a, 12))
        imp2 = std::max(imp2, cyclide_implicit(cp, eval_rational(patch2, p)));
    rep.check("cyclide phase slide implicit", imp2, 1e-6);
}

void verify_elevation(Reporter& rep, double alpha_flag) {
    std::vector<double> alphas = alpha_flag > 0.0
                                     ? std::vector<double>{alpha_flag}
                                     : std::vector<double>{0.3, kPi / 2, 2.8};
    for (double a : alphas) {
        const NormalizationTable t1 = closed_form_table(1, a);
        const NormalizationTable t2 = closed_form_table(2, a);
        const ControlNet net1 = scrambled_net(1);
        const ControlNet net2 = elevate_1_to_2(net1, a);
        const TrigPatch p1 = make_patch(net1, t1);
        const TrigPatch p2 = make_patch(net2, t2);
        double worst = 0.0;
        for (const DomainPoint& p : grid_points(a, 15))
            worst = std::max(worst, max_abs(eval_patch(p1, p) - eval_patch(p2, p)));
        rep.check("elevation surface alpha=" + fmt(a), worst, 1e-12);

        // weight rows, recovered through indicator nets: x-coordinates of the
        // elevated net are exactly the weights of one source point
        const auto idx1 = canonical_indices(1);
        std::map<BasisIndex, double> row_sum;
        double wneg = 0.0;
        for (const BasisIndex& src : idx1) {
            ControlNet ind;
            ind.order = 1;
            for (const BasisIndex& k : idx1)
                ind.points[k] = (k == src) ? Vec3{1, 0, 0} : Vec3{0, 0, 0};
            const ControlNet lifted = elevate_1_to_2(ind, a);
            for (const auto& [k2, pt] : lifted.points) {
                row_sum[k2] += pt.x;
                wneg = std::min(wneg, pt.x);
            }
        }
        double rowdev = 0.0;
        for (const auto& [k2, s] : row_sum) rowdev = std::max(rowdev, std::fabs(s - 1.0));
        rep.check_true("elevation weights non-negative alpha=" + fmt(a), wneg >= 0.0);
        rep.check("elevation weight row sums alpha=" + fmt(a), rowdev, 1e-14);

        const NormalizationTable rel = coefficient_relation_1_to_2(t1);
        double cdev = 0.0;
        for (const auto& [key, val] : t2.reduced) {
            const double ref = rel.reduced.at(key);
            cdev = std::max(cdev, std::fabs(val - ref) / std::max(1.0, std::fabs(val)));
        }
        rep.check("elevation coefficient relation alpha=" + fmt(a), cdev, 1e-12);
    }
}

Rational add_rational(Rational x, Rational y) {
    std::int64_t num = x.num * y.den + y.num * x.den;
    std::int64_t den = x.den * y.den;
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

void verify_bezier(Reporter& rep, int n_flag) {
    std::vector<int> ns = n_flag > 0 ? std::vector<int>{n_flag}
                                     : std::vector<int>{2, 3};
    for (int n : ns) {
        const auto combos = bezier_combinations(n);
        bool sums_one = true, no_center = true;
        for (const auto& [key, combo] : combos) {
            Rational acc{0, 1};
            for (const auto& [idx, r] : combo) {
                acc = add_rational(acc, r);
                if (idx.family == Family::Center) no_center = false;
            }
            if (!(acc.num == 1 && acc.den == 1)) sums_one = false;
        }
        rep.check_true("bezier combination rows sum to 1 exactly, n=" + std::to_string(n),
                       sums_one);
        rep.check_true("bezier combinations never use the center, n=" + std::to_string(n),
                       no_center);

        const ControlNet net = scrambled_net(n);
        const BezierTriangleNet bez = to_bezier_limit(net);
        auto deviation = [&](double a) {
            const TrigPatch patch = make_patch(net, make_table(n, a));
            double worst = 0.0;
            for (int i = 0; i <= 12; ++i) {
                for (int j = 0; j <= 12 - i; ++j) {
                    const double x = static_cast<double>(i) / 12;
                    const double y = static_cast<double>(j) / 12;
                    const Vec3 diff = eval_patch(patch, DomainPoint(a * x, a * y, a)) -
                                      eval_bezier(bez, x, y);
                    worst = std::max(worst, max_abs(diff));
                }
            }
            return worst;
        };
        const double d2 = deviation(1e-2);
        const double d3 = deviation(1e-3);
        const double slope = std::log10(d2 / d3);
        rep.check_true("bezier limit quadratic decay n=" + std::to_string(n) +
                           " slope=" + fmt(slope),
                       std::fabs(slope - 2.0) <= 0.2);
        rep.check("bezier limit deviation at alpha=0.001, n=" + std::to_string(n), d3, 1e-5);
    }
}

int run_verify(const std::string& suite, int n_flag, double alpha_flag) {
    Reporter rep;
    if (suite == "unity" || suite == "all") verify_unity(rep, n_flag, alpha_flag);
    if (suite == "boundary" || suite == "all") verify_boundary(rep, n_flag, alpha_flag);
    if (suite == "dimension" || suite == "all") verify_dimension(rep, n_flag, alpha_flag);
    if (suite == "torus" || suite == "all") verify_torus(rep, alpha_flag);
    if (suite == "cyclide" || suite == "all") verify_cyclide(rep, alpha_flag);
    if (suite == "elevation" || suite == "all") verify_elevation(rep, alpha_flag);
    if (suite == "bezier-limit" || suite == "all") verify_bezier(rep, n_flag);
    return rep.ok ? 0 : 1;
}

DomainPoint parse_point(const std::vector<double>& uv, double alpha) {
    return DomainPoint(uv.at(0), uv.at(1), alpha);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangular trigonometric patch toolkit"};
    app.require_subcommand(1);

    // basis
    int basis_n = 1;
    double basis_alpha = kPi / 2;
    double basis_at = -1.0;
    auto* basis_cmd = app.add_subcommand(
        "basis", "Univariate basis: coefficients, or values at a parameter");
    basis_cmd->add_option("--n", basis_n, "order")->required();
    basis_cmd->add_option("--alpha", basis_alpha, "domain length")->required();
    basis_cmd->add_option("--at", basis_at, "evaluate at t instead of printing coefficients");

    // eval-basis
    int eb_n = 1;
    double eb_alpha = kPi / 2;
    std::vector<double> eb_point;
    auto* eb_cmd = app.add_subcommand(
        "eval-basis", "Evaluate every trivariate basis function at a domain point");
    eb_cmd->add_option("--n", eb_n, "order")->required();
    eb_cmd->add_option("--alpha", eb_alpha, "domain length")->required();
    eb_cmd->add_option("--point", eb_point, "u,v")->delimiter(',')->expected(2)->required();

    // coeffs
    int co_n = 1;
    double co_alpha = kPi / 2;
    double co_tol = 1e-9;
    bool co_closed = false, co_full = false;
    auto* co_cmd = app.add_subcommand("coeffs", "Normalization coefficient table");
    co_cmd->add_option("--n", co_n, "order")->required();
    co_cmd->add_option("--alpha", co_alpha, "domain length")->required();
    co_cmd->add_flag("--closed-form", co_closed, "use the closed-form tables (n <= 3)");
    co_cmd->add_flag("--full", co_full, "emit the expanded table in canonical order");
    co_cmd->add_option("--tol", co_tol, "solver residual tolerance");

    // dim
    int dim_n = 1;
    auto* dim_cmd = app.add_subcommand("dim", "Dimension and span class list");
    dim_cmd->add_option("--n", dim_n, "order")->required();

    // eval
    std::string ev_net;
    std::vector<double> ev_point;
    auto* ev_cmd = app.add_subcommand("eval", "Evaluate a patch from a net file");
    ev_cmd->add_option("--net", ev_net, "control net file")->required();
    ev_cmd->add_option("--point", ev_point, "u,v")->delimiter(',')->expected(2)->required();

    // mesh
    std::string me_net, me_out;
    int me_subdiv = 16;
    bool me_normals = false;
    auto* me_cmd = app.add_subcommand("mesh", "Tessellate a patch into an OBJ file");
    me_cmd->add_option("--net", me_net, "control net file")->required();
    me_cmd->add_option("--subdiv", me_subdiv, "subdivision level K")
        ->required()
        ->check(CLI::PositiveNumber);
    me_cmd->add_option("--out", me_out, "output OBJ path")->required();
    me_cmd->add_flag("--normals", me_normals, "emit finite-difference normals");

    // fit
    int fit_n = 1;
    double fit_alpha = kPi / 2, fit_tol = 1e-9, fit_rho = 2.0, fit_mu = 1.0;
    std::string fit_target;
    auto* fit_cmd = app.add_subcommand("fit", "Fit a builtin function into the blending span");
    fit_cmd->add_option("--n", fit_n, "order")->required();
    fit_cmd->add_option("--alpha", fit_alpha, "domain length")->required();
    fit_cmd
        ->add_option("--target", fit_target,
                     "one of: one, cos-u, sin-u, cos-v, sin-v, cos-w, sin-w, "
                     "torus-x, torus-y, torus-z")
        ->required()
        ->check(CLI::IsMember({"one", "cos-u", "sin-u", "cos-v", "sin-v", "cos-w",
                               "sin-w", "torus-x", "torus-y", "torus-z"}));
    fit_cmd->add_option("--rho", fit_rho, "torus center radius for torus-* targets");
    fit_cmd->add_option("--mu", fit_mu, "torus tube radius for torus-* targets");
    fit_cmd->add_option("--tol", fit_tol, "in-span residual tolerance");

    // net torus / net cyclide
    auto* net_cmd = app.add_subcommand("net", "Generate canonical-surface control nets");
    net_cmd->require_subcommand(1);
    double nt_rho = 2.0, nt_mu = 1.0, nt_alpha = kPi / 2;
    std::string nt_out;
    auto* nt_cmd = net_cmd->add_subcommand("torus", "Closed-form order-2 torus net");
    nt_cmd->add_option("--rho", nt_rho, "center-circle radius")->required();
    nt_cmd->add_option("--mu", nt_mu, "tube radius")->required();
    nt_cmd->add_option("--alpha", nt_alpha, "domain length")->required();
    nt_cmd->add_option("--out", nt_out, "output net file")->required();

    double nc_a = 6.0, nc_b = 0.0, nc_c = 0.0, nc_mu = 3.0, nc_phi = 0.0, nc_psi = 0.0,
           nc_alpha = kPi / 2;
    std::string nc_out;
    auto* nc_cmd = net_cmd->add_subcommand("cyclide", "Fitted rational order-2 cyclide net");
    nc_cmd->add_option("--a", nc_a, "major parameter")->required();
    nc_cmd->add_option("--b", nc_b, "minor parameter (a^2 = b^2 + c^2)")->required();
    nc_cmd->add_option("--c", nc_c, "focal parameter")->required();
    nc_cmd->add_option("--mu", nc_mu, "radius parameter, c < mu <= a")->required();
    nc_cmd->add_option("--phi", nc_phi, "u phase");
    nc_cmd->add_option("--psi", nc_psi, "v phase");
    nc_cmd->add_option("--alpha", nc_alpha, "domain length")->required();
    nc_cmd->add_option("--out", nc_out, "output net file")->required();

    // elevate
    std::string el_net, el_out;
    auto* el_cmd = app.add_subcommand("elevate", "Rewrite an order-1 net at order 2");
    el_cmd->add_option("--net", el_net, "order-1 control net file")->required();
    el_cmd->add_option("--out", el_out, "output net file")->required();

    // bezier-limit
    std::string bz_net, bz_out;
    auto* bz_cmd = app.add_subcommand(
        "bezier-limit", "Convert an order-2 or order-3 net to its limit Bezier net");
    bz_cmd->add_option("--net", bz_net, "control net file")->required();
    bz_cmd->add_option("--out", bz_out, "output Bezier net file")->required();

    // verify
    std::string vf_suite;
    int vf_n = 0;
    double vf_alpha = 0.0;
    auto* vf_cmd = app.add_subcommand("verify", "Run a named self-verification suite");
    vf_cmd->add_option("suite", vf_suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"unity", "boundary", "dimension", "torus", "cyclide",
                               "elevation", "bezier-limit", "all"}));
    vf_cmd->add_option("--n", vf_n, "restrict to one order (default: suite range)");
    vf_cmd->add_option("--alpha", vf_alpha, "domain length (default: per suite)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*basis_cmd) {
            const UnivariateBasis basis = make_univariate(basis_n, basis_alpha);
            for (int i = 0; i <= 2 * basis_n; ++i) {
                const double value =
                    basis_at >= 0.0 ? eval_A(basis, i, basis_at) : basis.coeffs[size_t(i)];
                std::cout << i << ',' << fmt(value) << '\n';
            }
        } else if (*eb_cmd) {
            const TrivariateSystem sys = make_system(eb_n, eb_alpha);
            const DomainPoint p = parse_point(eb_point, eb_alpha);
            const std::vector<double> vals = eval_all(sys, p);
            for (std::size_t k = 0; k < vals.size(); ++k) {
                const BasisIndex& idx = sys.index_list[k];
                std::cout << family_name(idx.family) << ',' << idx.i << ',' << idx.j
                          << ',' << fmt(vals[k]) << '\n';
            }
        } else if (*co_cmd) {
            const NormalizationTable table = co_closed
                                                 ? closed_form_table(co_n, co_alpha)
                                                 : solve_table(co_n, co_alpha, co_tol);
            if (co_full) {
                const std::vector<BasisIndex> order = canonical_indices(co_n);
                const std::vector<double> coeffs = table.expanded();
                for (std::size_t k = 0; k < order.size(); ++k)
                    std::cout << family_name(order[k].family) << ',' << order[k].i << ','
                              << order[k].j << ',' << fmt(coeffs[k]) << '\n';
            } else {
                for (int j = 0; j <= co_n; ++j)
                    for (int i = j; i <= co_n; ++i)
                        std::cout << j << ',' << i << ','
                                  << fmt(table.reduced.at({i, j})) << '\n';
            }
        } else if (*dim_cmd) {
            const SpanBasisV vb = build_V(dim_n);
            std::cout << "delta " << dimension(dim_n) << '\n';
            for (const CoeffTriple& c : vb.classes)
                std::cout << c.r << ' ' << c.g << ' ' << c.b << '\n';
        } else if (*ev_cmd) {
            const NetFile file = read_net(ev_net);
            const NormalizationTable table = make_table(file.net.order, file.alpha);
            const DomainPoint p = parse_point(ev_point, file.alpha);
            const Vec3 q = file.weights
                               ? eval_rational(make_rational_patch(file.net, *file.weights,
                                                                   table),
                                               p)
                               : eval_patch(make_patch(file.net, table), p);
            std::cout << fmt(q.x) << ' ' << fmt(q.y) << ' ' << fmt(q.z) << '\n';
        } else if (*me_cmd) {
            const NetFile file = read_net(me_net);
            const NormalizationTable table = make_table(file.net.order, file.alpha);
            const Mesh mesh =
                file.weights
                    ? tessellate(make_rational_patch(file.net, *file.weights, table),
                                 me_subdiv, me_normals)
                    : tessellate(make_patch(file.net, table), me_subdiv, me_normals);
            std::ofstream out(me_out);
            if (!out) throw std::runtime_error("cannot open output file: " + me_out);
            write_obj(mesh, out);
        } else if (*fit_cmd) {
            const NormalizationTable table = make_table(fit_n, fit_alpha);
            const TorusParams tp(fit_rho, fit_mu);
            std::function<double(const DomainPoint&)> f;
            if (fit_target == "one")
                f = [](const DomainPoint&) { return 1.0; };
            else if (fit_target == "cos-u")
                f = [](const DomainPoint& p) { return std::cos(p.u); };
            else if (fit_target == "sin-u")
                f = [](const DomainPoint& p) { return std::sin(p.u); };
            else if (fit_target == "cos-v")
                f = [](const DomainPoint& p) { return std::cos(p.v); };
            else if (fit_target == "sin-v")
                f = [](const DomainPoint& p) { return std::sin(p.v); };
            else if (fit_target == "cos-w")
                f = [](const DomainPoint& p) { return std::cos(p.w); };
            else if (fit_target == "sin-w")
                f = [](const DomainPoint& p) { return std::sin(p.w); };
            else if (fit_target == "torus-x")
                f = [tp](const DomainPoint& p) { return torus_point(tp, p.u, p.v).x; };
            else if (fit_target == "torus-y")
                f = [tp](const DomainPoint& p) { return torus_point(tp, p.u, p.v).y; };
            else
                f = [tp](const DomainPoint& p) { return torus_point(tp, p.u, p.v).z; };
            const SpanFit fit = fit_in_span(fit_n, fit_alpha, f, table, fit_tol);
            const std::vector<BasisIndex> order = canonical_indices(fit_n);
            for (std::size_t k = 0; k < order.size(); ++k)
                std::cout << family_name(order[k].family) << ',' << order[k].i << ','
                          << order[k].j << ',' << fmt(fit.coords[k]) << '\n';
            std::cout << "residual," << fmt(fit.residual) << '\n';
            std::cout << "in-span," << (fit.in_span ? "yes" : "no") << '\n';
            return fit.in_span ? 0 : 1;
        } else if (*nt_cmd) {
            const TorusParams tp(nt_rho, nt_mu);
            write_net(nt_out, torus_net(tp, nt_alpha), nt_alpha);
        } else if (*nc_cmd) {
            const CyclideParams cp(nc_a, nc_b, nc_c, nc_mu, nc_phi, nc_psi);
            const RationalTrigPatch patch =
                cyclide_patch(cp, nc_alpha, make_table(2, nc_alpha));
            write_net(nc_out, patch.net, nc_alpha, &patch.wnet);
        } else if (*el_cmd) {
            const NetFile file = read_net(el_net);
            if (file.weights)
                throw std::invalid_argument("elevate: weighted nets are not supported");
            write_net(el_out, elevate_1_to_2(file.net, file.alpha), file.alpha);
        } else if (*bz_cmd) {
            const NetFile file = read_net(bz_net);
            if (file.weights)
                throw std::invalid_argument("bezier-limit: weighted nets are not supported");
            write_bezier_net(bz_out, to_bezier_limit(file.net));
        } else if (*vf_cmd) {
            return run_verify(vf_suite, vf_n, vf_alpha);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
