#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tripatch/geometry.hpp"
#include "tripatch/mesh.hpp"

using namespace tripatch;

namespace {

TrigPatch torus_patch(double rho, double mu, double alpha) {
    return make_patch(torus_net(TorusParams(rho, mu), alpha),
                      closed_form_table(2, alpha));
}

}  // namespace

TEST_CASE("vertex and face counts") {
    const TrigPatch patch = torus_patch(2.0, 1.0, 1.2);
    const Mesh m1 = tessellate(patch, 1);
    CHECK(m1.vertices.size() == 3);
    CHECK(m1.faces.size() == 1);
    const Mesh m2 = tessellate(patch, 2);
    CHECK(m2.vertices.size() == 6);
    CHECK(m2.faces.size() == 4);
    const Mesh m10 = tessellate(patch, 10);
    CHECK(m10.vertices.size() == 66);
    CHECK(m10.faces.size() == 100);
    CHECK_THROWS_AS(tessellate(patch, 0), std::invalid_argument);
}

TEST_CASE("face indices are valid and non-degenerate") {
    const TrigPatch patch = torus_patch(2.0, 1.0, 1.2);
    const Mesh m = tessellate(patch, 7);
    for (const auto& f : m.faces) {
        for (int k = 0; k < 3; ++k) {
            CHECK(f[k] >= 0);
            CHECK(f[k] < static_cast<int>(m.vertices.size()));
        }
        CHECK(f[0] != f[1]);
        CHECK(f[1] != f[2]);
        CHECK(f[0] != f[2]);
    }
}

TEST_CASE("subdivision 1 yields the patch corners") {
    const double alpha = 1.2;
    const TrigPatch patch = torus_patch(2.0, 1.0, alpha);
    const Mesh m = tessellate(patch, 1);
    // vertex order: (p, q) lattice, p outer; (0,0), (0,1), (1,0)
    CHECK((m.vertices[0] == eval_patch(patch, DomainPoint(0.0, 0.0, alpha))));
    CHECK((m.vertices[1] == eval_patch(patch, DomainPoint(0.0, alpha, alpha))));
    CHECK((m.vertices[2] == eval_patch(patch, DomainPoint(alpha, 0.0, alpha))));
}

TEST_CASE("torus mesh satisfies the implicit equation") {
    const double rho = 2.0, mu = 1.0;
    const TrigPatch patch = torus_patch(rho, mu, kPi / 2);
    const Mesh m = tessellate(patch, 30);
    for (const Vec3& q : m.vertices) {
        const double r = std::sqrt(q.x * q.x + q.y * q.y) - rho;
        CHECK(std::fabs(r * r + q.z * q.z - mu * mu) <= 1e-8);
    }
}

TEST_CASE("normals are unit length and orthogonal to the surface") {
    const double rho = 2.0, mu = 1.0, alpha = kPi / 2;
    const TrigPatch patch = torus_patch(rho, mu, alpha);
    const Mesh m = tessellate(patch, 8, true);
    REQUIRE(m.normals.size() == m.vertices.size());
    for (size_t k = 0; k < m.vertices.size(); ++k) {
        CHECK(norm(m.normals[k]) == doctest::Approx(1.0).epsilon(1e-9));
        // analytic torus normal: from the tube center to the point
        const Vec3& q = m.vertices[k];
        const double ring = std::sqrt(q.x * q.x + q.y * q.y);
        const Vec3 center{rho * q.x / ring, rho * q.y / ring, 0.0};
        const Vec3 radial = (q - center) / mu;
        CHECK(std::fabs(dot(m.normals[k], radial)) == doctest::Approx(1.0).epsilon(1e-4));
    }
}

TEST_CASE("rational patches tessellate the same way") {
    const double alpha = kPi / 2;
    const CyclideParams cp(6.0, 4.0 * std::sqrt(2.0), 2.0, 3.0);
    const RationalTrigPatch patch = cyclide_patch(cp, alpha, closed_form_table(2, alpha));
    const Mesh m = tessellate(patch, 12);
    CHECK(m.vertices.size() == 91);
    CHECK(m.faces.size() == 144);
    for (const Vec3& q : m.vertices) CHECK(cyclide_implicit(cp, q) <= 1e-6);
}

TEST_CASE("OBJ records") {
    const TrigPatch patch = torus_patch(2.0, 1.0, 1.0);

    SUBCASE("vertices and faces only") {
        const Mesh m = tessellate(patch, 3);
        std::ostringstream out;
        write_obj(m, out);
        std::istringstream in(out.str());
        std::string line;
        int nv = 0, nf = 0, nn = 0;
        while (std::getline(in, line)) {
            if (line.rfind("v ", 0) == 0) ++nv;
            if (line.rfind("f ", 0) == 0) ++nf;
            if (line.rfind("vn ", 0) == 0) ++nn;
        }
        CHECK(nv == 10);
        CHECK(nf == 9);
        CHECK(nn == 0);
    }

    SUBCASE("with normals") {
        const Mesh m = tessellate(patch, 2, true);
        std::ostringstream out;
        write_obj(m, out);
        const std::string text = out.str();
        CHECK(text.find("vn ") != std::string::npos);
        CHECK(text.find("//") != std::string::npos);
    }

    SUBCASE("indices are 1-based") {
        const Mesh m = tessellate(patch, 1);
        std::ostringstream out;
        write_obj(m, out);
        CHECK(out.str().find("f 1 3 2\n") != std::string::npos);
    }
}
