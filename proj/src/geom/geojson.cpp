#include "gridshed/geom/geojson.hpp"

#include <fstream>

#include "gridshed/errors.hpp"
#include "gridshed/kernels.hpp"

namespace gridshed::geom {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double ring_signed_area(const Ring& r) {
    if (r.size() < 4) return 0;
    std::vector<double> xs(r.size()), ys(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        xs[i] = r[i].x;
        ys[i] = r[i].y;
    }
    return 0.5 * kernels::signed_area2(xs.data(), ys.data(), r.size());
}

ordered_json ring_to_json(const Ring& r, bool want_ccw) {
    Ring oriented = r;
    const double a = ring_signed_area(r);
    if ((want_ccw && a < 0) || (!want_ccw && a > 0))
        std::reverse(oriented.begin(), oriented.end());
    ordered_json arr = ordered_json::array();
    for (const Point& p : oriented) arr.push_back(ordered_json::array({p.x, p.y}));
    return arr;
}

Ring ring_from_json(const json& arr) {
    Ring r;
    r.reserve(arr.size());
    for (const auto& pos : arr) {
        if (!pos.is_array() || pos.size() < 2)
            throw Error(ErrorCode::bad_input, "GeoJSON position is not [x, y]");
        r.push_back({pos[0].get<double>(), pos[1].get<double>()});
    }
    return r;
}

Polygon polygon_from_json(const json& rings) {
    Polygon p;
    if (rings.empty()) return p;
    p.exterior = ring_from_json(rings[0]);
    for (std::size_t i = 1; i < rings.size(); ++i)
        p.holes.push_back(ring_from_json(rings[i]));
    return p;
}

}  // namespace

nlohmann::ordered_json geometry_to_json(const MultiPolygon& shape) {
    ordered_json g;
    if (shape.parts.size() == 1) {
        g["type"] = "Polygon";
        ordered_json rings = ordered_json::array();
        rings.push_back(ring_to_json(shape.parts[0].exterior, true));
        for (const Ring& h : shape.parts[0].holes) rings.push_back(ring_to_json(h, false));
        g["coordinates"] = std::move(rings);
    } else {
        g["type"] = "MultiPolygon";
        ordered_json polys = ordered_json::array();
        for (const Polygon& part : shape.parts) {
            ordered_json rings = ordered_json::array();
            rings.push_back(ring_to_json(part.exterior, true));
            for (const Ring& h : part.holes) rings.push_back(ring_to_json(h, false));
            polys.push_back(std::move(rings));
        }
        g["coordinates"] = std::move(polys);
    }
    return g;
}

MultiPolygon geometry_from_json(const json& geometry) {
    MultiPolygon shape;
    if (!geometry.is_object() || !geometry.contains("type"))
        throw Error(ErrorCode::bad_input, "GeoJSON geometry without a type");
    const std::string type = geometry.at("type").get<std::string>();
    const auto& coords = geometry.at("coordinates");
    if (type == "Polygon") {
        shape.parts.push_back(polygon_from_json(coords));
    } else if (type == "MultiPolygon") {
        for (const auto& rings : coords) shape.parts.push_back(polygon_from_json(rings));
    } else {
        throw Error(ErrorCode::bad_input, "unsupported GeoJSON geometry type " + type);
    }
    return shape;
}

FeatureCollection read_feature_collection(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::bad_input, path.string() + ": " + e.what());
    }

    FeatureCollection fc;
    const std::string type = doc.value("type", "");
    if (type == "FeatureCollection") {
        for (const auto& f : doc.at("features")) {
            Feature feat;
            feat.geometry = geometry_from_json(f.at("geometry"));
            if (f.contains("properties") && f.at("properties").is_object())
                feat.properties = f.at("properties");
            fc.features.push_back(std::move(feat));
        }
    } else if (type == "Feature") {
        Feature feat;
        feat.geometry = geometry_from_json(doc.at("geometry"));
        if (doc.contains("properties") && doc.at("properties").is_object())
            feat.properties = doc.at("properties");
        fc.features.push_back(std::move(feat));
    } else if (type == "Polygon" || type == "MultiPolygon") {
        Feature feat;
        feat.geometry = geometry_from_json(doc);
        fc.features.push_back(std::move(feat));
    } else {
        throw Error(ErrorCode::bad_input, path.string() + ": not a GeoJSON document");
    }
    return fc;
}

void write_feature_collection(const std::filesystem::path& path,
                              const FeatureCollection& fc) {
    ordered_json doc;
    doc["type"] = "FeatureCollection";
    ordered_json feats = ordered_json::array();
    for (const Feature& f : fc.features) {
        ordered_json jf;
        jf["type"] = "Feature";
        jf["properties"] = f.properties;
        jf["geometry"] = geometry_to_json(f.geometry);
        feats.push_back(std::move(jf));
    }
    doc["features"] = std::move(feats);

    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io_error, "cannot write " + path.string());
    out << doc.dump(1) << "\n";
}

MultiPolygon read_shape(const std::filesystem::path& path) {
    const FeatureCollection fc = read_feature_collection(path);
    MultiPolygon shape;
    for (const Feature& f : fc.features)
        for (const Polygon& part : f.geometry.parts) shape.parts.push_back(part);
    return shape;
}

}  // namespace gridshed::geom
