#include "mink/scene.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mink {

using nlohmann::json;

namespace {

Point2 parse_point(const json& j, const std::string& where) {
    require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
            where + ": expected [x, y]");
    Point2 p{j[0].get<double>(), j[1].get<double>()};
    require(p.finite(), where + ": coordinates must be finite");
    return p;
}

std::vector<Point2> parse_points(const json& j, const std::string& where) {
    require(j.is_array(), where + ": expected an array of points");
    std::vector<Point2> pts;
    for (size_t i = 0; i < j.size(); ++i)
        pts.push_back(parse_point(j[i], where + "[" + std::to_string(i) + "]"));
    return pts;
}

NormSpec parse_norm(const json& j, int discretization, std::string& echo) {
    require(j.is_object() && j.contains("type"), "norm: expected {\"type\": ...}");
    std::string type = j["type"].get<std::string>();
    echo = json(j).dump();
    if (type == "polygon") {
        require(j.contains("vertices"), "norm: polygon needs \"vertices\"");
        auto half = parse_points(j["vertices"], "norm.vertices");
        return NormSpec::polygon(SymmetricPolygon::from_half(half));
    }
    if (type == "lp") {
        require(j.contains("p"), "norm: lp needs \"p\"");
        return NormSpec::lp(j["p"].get<double>(), discretization);
    }
    if (type == "mixed") {
        require(j.contains("p"), "norm: mixed needs \"p\"");
        return NormSpec::mixed(j["p"].get<double>(), discretization);
    }
    if (type == "euclidean") return NormSpec::euclidean(discretization);
    throw validation_error("norm: unknown type \"" + type + "\"");
}

} // namespace

const ConvexPolygon& Scene::polygon(const std::string& name) const {
    auto it = polygons.find(name);
    require(it != polygons.end(), "scene has no polygon named \"" + name + "\"");
    return it->second;
}

const Triangle& Scene::triangle(const std::string& name) const {
    auto it = triangles.find(name);
    require(it != triangles.end(), "scene has no triangle named \"" + name + "\"");
    return it->second;
}

const std::vector<Point2>& Scene::points(const std::string& name) const {
    auto it = point_sets.find(name);
    require(it != point_sets.end(), "scene has no point set named \"" + name + "\"");
    return it->second;
}

const ConvexPolygon& Scene::first_polygon() const {
    require(!polygons.empty(), "scene has no polygon body");
    return polygons.begin()->second;
}

const Triangle& Scene::first_triangle() const {
    require(!triangles.empty(), "scene has no triangle body");
    return triangles.begin()->second;
}

Scene parse_scene(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        // recover line/column from the byte offset
        size_t line = 1, col = 1;
        for (size_t i = 0; i < json_text.size() && i + 1 < static_cast<size_t>(e.byte); ++i) {
            if (json_text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream msg;
        msg << "malformed JSON at line " << line << ", column " << col << ": " << e.what();
        throw validation_error(msg.str());
    }
    require(j.is_object(), "scene: expected a JSON object");
    require(j.contains("norm"), "scene: missing \"norm\"");

    SceneOptions opt;
    if (j.contains("options")) {
        const json& o = j["options"];
        require(o.is_object(), "options: expected an object");
        if (o.contains("seed")) opt.seed = o["seed"].get<std::uint64_t>();
        if (o.contains("trials")) opt.trials = o["trials"].get<int>();
        if (o.contains("discretization")) opt.discretization = o["discretization"].get<int>();
        if (o.contains("ngon")) opt.ngon = o["ngon"].get<int>();
        if (o.contains("partitions")) opt.partitions = o["partitions"].get<int>();
        if (o.contains("area_unit")) opt.area_unit = o["area_unit"].get<double>();
        if (o.contains("tolerances")) {
            const json& t = o["tolerances"];
            if (t.contains("exact")) opt.tol_exact = t["exact"].get<double>();
            if (t.contains("opt")) opt.tol_opt = t["opt"].get<double>();
        }
        require(opt.trials > 0, "options.trials must be positive");
        require(opt.area_unit > 0 && std::isfinite(opt.area_unit),
                "options.area_unit must be positive");
    }
    // The area unit scales the symplectic form; conjugating all coordinates
    // by sqrt(area_unit) realizes exactly that with the form held fixed.
    double coord = std::sqrt(opt.area_unit);

    std::string echo;
    json norm_scaled = j["norm"];
    if (coord != 1.0 && norm_scaled.contains("vertices")) {
        for (auto& v : norm_scaled["vertices"])
            v = json::array({v[0].get<double>() * coord, v[1].get<double>() * coord});
    }
    Scene scene{parse_norm(norm_scaled, opt.discretization, echo), "", {}, {}, {}, opt};
    scene.norm_descriptor = echo;

    if (j.contains("bodies")) {
        const json& bodies = j["bodies"];
        require(bodies.is_object(), "bodies: expected an object of named entries");
        for (auto it = bodies.begin(); it != bodies.end(); ++it) {
            const std::string& name = it.key();
            const json& b = it.value();
            require(b.is_object() && b.contains("kind"),
                    "bodies." + name + ": expected {\"kind\": ...}");
            std::string kind = b["kind"].get<std::string>();
            if (kind == "polygon") {
                auto pts = parse_points(b["vertices"], "bodies." + name + ".vertices");
                for (auto& p : pts) p = p * coord;
                scene.polygons.emplace(name, ConvexPolygon(pts));
            } else if (kind == "triangle") {
                auto pts = parse_points(b["vertices"], "bodies." + name + ".vertices");
                require(pts.size() == 3, "bodies." + name + ": triangle needs 3 vertices");
                scene.triangles.emplace(name,
                                        Triangle(pts[0] * coord, pts[1] * coord, pts[2] * coord));
            } else if (kind == "points") {
                auto pts = parse_points(b["points"], "bodies." + name + ".points");
                for (auto& p : pts) p = p * coord;
                scene.point_sets.emplace(name, pts);
            } else {
                throw validation_error("bodies." + name + ": unknown kind \"" + kind + "\"");
            }
        }
    }
    return scene;
}

Scene load_scene_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open scene file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

} // namespace mink
