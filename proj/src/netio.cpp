#include "tripatch/netio.hpp"

#include <fstream>
#include <json.hpp>
#include <stdexcept>

namespace tripatch {

using nlohmann::json;

std::string family_name(Family f) {
    switch (f) {
        case Family::Center: return "Center";
        case Family::R: return "R";
        case Family::G: return "G";
        case Family::B: return "B";
    }
    throw std::logic_error("unreachable family");
}

Family family_from_name(const std::string& name) {
    if (name == "Center") return Family::Center;
    if (name == "R") return Family::R;
    if (name == "G") return Family::G;
    if (name == "B") return Family::B;
    throw std::runtime_error("unknown family name '" + name + "'");
}

namespace {

json vec_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::runtime_error("xyz must be a 3-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

void store(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

}  // namespace

NetFile read_net(const std::string& path) {
    const json j = load(path);
    NetFile file;
    try {
        file.net.order = j.at("order").get<int>();
        file.alpha = j.at("alpha").get<double>();
        const int n = file.net.order;
        for (const json& rec : j.at("points")) {
            BasisIndex idx{family_from_name(rec.at("family").get<std::string>()),
                           rec.at("i").get<int>(), rec.at("j").get<int>()};
            file.net.points[idx] = vec_from_json(rec.at("xyz"));
        }
        if (j.contains("center"))
            file.net.points[{Family::Center, n, n}] = vec_from_json(j.at("center"));
        if (j.contains("weights")) {
            WeightNet wnet;
            for (const json& rec : j.at("weights")) {
                BasisIndex idx{family_from_name(rec.at("family").get<std::string>()),
                               rec.at("i").get<int>(), rec.at("j").get<int>()};
                wnet.weights[idx] = rec.at("w").get<double>();
            }
            file.weights = std::move(wnet);
        }
    } catch (const json::exception& e) {
        throw std::runtime_error("malformed control net in '" + path + "': " + e.what());
    }
    validate_net(file.net);
    return file;
}

void write_net(const std::string& path, const ControlNet& net, double alpha,
               const WeightNet* weights) {
    validate_net(net);
    json j;
    j["order"] = net.order;
    j["alpha"] = alpha;
    json pts = json::array();
    for (const BasisIndex& idx : canonical_indices(net.order)) {
        json rec;
        rec["family"] = family_name(idx.family);
        rec["i"] = idx.i;
        rec["j"] = idx.j;
        rec["xyz"] = vec_to_json(net.points.at(idx));
        pts.push_back(std::move(rec));
    }
    j["points"] = std::move(pts);
    if (weights) {
        json ws = json::array();
        for (const BasisIndex& idx : canonical_indices(net.order)) {
            json rec;
            rec["family"] = family_name(idx.family);
            rec["i"] = idx.i;
            rec["j"] = idx.j;
            rec["w"] = weights->weights.at(idx);
            ws.push_back(std::move(rec));
        }
        j["weights"] = std::move(ws);
    }
    store(path, j);
}

BezierTriangleNet read_bezier_net(const std::string& path) {
    const json j = load(path);
    BezierTriangleNet net;
    try {
        net.degree = j.at("degree").get<int>();
        for (const json& rec : j.at("points")) {
            std::array<int, 3> key{rec.at("d").get<int>(), rec.at("e").get<int>(),
                                   rec.at("f").get<int>()};
            if (key[0] + key[1] + key[2] != net.degree)
                throw std::runtime_error("Bezier index does not sum to the degree");
            net.points[key] = vec_from_json(rec.at("xyz"));
        }
    } catch (const json::exception& e) {
        throw std::runtime_error("malformed Bezier net in '" + path + "': " + e.what());
    }
    const std::size_t expect =
        static_cast<std::size_t>((net.degree + 1) * (net.degree + 2) / 2);
    if (net.points.size() != expect)
        throw std::runtime_error("Bezier net in '" + path + "' is incomplete");
    return net;
}

void write_bezier_net(const std::string& path, const BezierTriangleNet& net) {
    json j;
    j["degree"] = net.degree;
    json pts = json::array();
    for (const auto& [key, p] : net.points) {
        json rec;
        rec["d"] = key[0];
        rec["e"] = key[1];
        rec["f"] = key[2];
        rec["xyz"] = vec_to_json(p);
        pts.push_back(std::move(rec));
    }
    j["points"] = std::move(pts);
    store(path, j);
}

}  // namespace tripatch
