#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "tripatch/patch.hpp"
#include "tripatch/vec3.hpp"

namespace tripatch {

// Triangulated surface sample of a patch. Faces are zero-based index
// triples with counterclockwise winding in parameter space.
struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    std::vector<Vec3> normals;  // empty unless requested
};

Mesh tessellate(const TrigPatch& patch, int subdiv, bool with_normals = false);
Mesh tessellate(const RationalTrigPatch& patch, int subdiv,
                bool with_normals = false);

// OBJ with v/f records only; vn + "f a//a" when normals are present.
void write_obj(const Mesh& mesh, std::ostream& out);

}  // namespace tripatch
