#pragma once

#include <optional>
#include <string>

#include "tripatch/elevation.hpp"
#include "tripatch/patch.hpp"

namespace tripatch {

// Control-net file layout (JSON): top-level "order", "alpha", "points"
// (records {family, i, j, xyz}), optional "weights" (records {family, i, j,
// w}), optional "center" shorthand for the single center point. Bezier nets
// replace "order"/"alpha" with "degree" and key points by {d, e, f}.

struct NetFile {
    ControlNet net;
    double alpha = 0.0;
    std::optional<WeightNet> weights;
};

NetFile read_net(const std::string& path);
void write_net(const std::string& path, const ControlNet& net, double alpha,
               const WeightNet* weights = nullptr);

BezierTriangleNet read_bezier_net(const std::string& path);
void write_bezier_net(const std::string& path, const BezierTriangleNet& net);

std::string family_name(Family f);
Family family_from_name(const std::string& name);

}  // namespace tripatch
