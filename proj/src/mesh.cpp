#include "tripatch/mesh.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "tripatch/detail.hpp"
#include "tripatch/domain.hpp"

namespace tripatch {

namespace {

using EvalFn = std::function<Vec3(const DomainPoint&)>;

Vec3 fd_normal(const EvalFn& eval, double u, double v, double alpha) {
    // Central differences in (u,v); the stencil is pulled inside the
    // triangle when a point sits on the boundary.
    const double h = alpha * 1e-6;
    auto clamp_pair = [&](double a, double b) {
        if (a < 0.0) a = 0.0;
        if (b < 0.0) b = 0.0;
        const double over = a + b - alpha;
        if (over > 0.0) {
            // push back along the offending direction
            if (a >= b)
                a -= over;
            else
                b -= over;
        }
        return DomainPoint(a, b, alpha);
    };
    const Vec3 du_p = eval(clamp_pair(u + h, v));
    const Vec3 du_m = eval(clamp_pair(u - h, v));
    const Vec3 dv_p = eval(clamp_pair(u, v + h));
    const Vec3 dv_m = eval(clamp_pair(u, v - h));
    const Vec3 su = du_p - du_m;
    const Vec3 sv = dv_p - dv_m;
    Vec3 nrm = cross(su, sv);
    const double len = norm(nrm);
    if (len > 0.0) nrm = nrm / len;
    return nrm;
}

Mesh tessellate_impl(const EvalFn& eval, double alpha, int subdiv,
                     bool with_normals) {
    if (subdiv < 1) throw std::invalid_argument("tessellate: subdiv must be >= 1");
    const int K = subdiv;
    Mesh mesh;
    mesh.vertices.reserve(static_cast<size_t>((K + 1) * (K + 2) / 2));

    // row-major over p with rows shrinking as q ranges over 0..K-p
    std::vector<int> row_start(static_cast<size_t>(K) + 1);
    int acc = 0;
    for (int p = 0; p <= K; ++p) {
        row_start[static_cast<size_t>(p)] = acc;
        acc += K + 1 - p;
    }
    auto id = [&](int p, int q) { return row_start[static_cast<size_t>(p)] + q; };

    for (int p = 0; p <= K; ++p) {
        for (int q = 0; q <= K - p; ++q) {
            const double u = alpha * static_cast<double>(p) / K;
            const double v = alpha * static_cast<double>(q) / K;
            const DomainPoint pt(u, v, alpha);
            mesh.vertices.push_back(eval(pt));
            if (with_normals)
                mesh.normals.push_back(fd_normal(eval, u, v, alpha));
        }
    }

    mesh.faces.reserve(static_cast<size_t>(K) * K);
    for (int p = 0; p < K; ++p) {
        for (int q = 0; q < K - p; ++q) {
            mesh.faces.push_back({id(p, q), id(p + 1, q), id(p, q + 1)});
            if (q <= K - 2 - p)
                mesh.faces.push_back({id(p + 1, q), id(p + 1, q + 1), id(p, q + 1)});
        }
    }
    return mesh;
}

}  // namespace

Mesh tessellate(const TrigPatch& patch, int subdiv, bool with_normals) {
    return tessellate_impl(
        [&patch](const DomainPoint& pt) { return eval_patch(patch, pt); },
        patch.table.alpha, subdiv, with_normals);
}

Mesh tessellate(const RationalTrigPatch& patch, int subdiv, bool with_normals) {
    return tessellate_impl(
        [&patch](const DomainPoint& pt) { return eval_rational(patch, pt); },
        patch.table.alpha, subdiv, with_normals);
}

void write_obj(const Mesh& mesh, std::ostream& out) {
    for (const Vec3& v : mesh.vertices) {
        out << "v " << detail::format_double(v.x) << ' '
            << detail::format_double(v.y) << ' '
            << detail::format_double(v.z) << '\n';
    }
    const bool has_normals = !mesh.normals.empty();
    if (has_normals) {
        for (const Vec3& n : mesh.normals) {
            out << "vn " << detail::format_double(n.x) << ' '
                << detail::format_double(n.y) << ' '
                << detail::format_double(n.z) << '\n';
        }
    }
    for (const auto& f : mesh.faces) {
        if (has_normals) {
            out << "f " << f[0] + 1 << "//" << f[0] + 1 << ' ' << f[1] + 1 << "//"
                << f[1] + 1 << ' ' << f[2] + 1 << "//" << f[2] + 1 << '\n';
        } else {
            out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
        }
    }
}

}  // namespace tripatch
