#include "sympb/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "sympb/radon.hpp"

namespace sympb {

using nlohmann::json;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

std::shared_ptr<PlaneCurve> curve_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "support_fourier") {
        double c0 = j.at("c0").get<double>();
        std::vector<std::pair<double, double>> coeffs;
        for (const auto& pair : j.value("coeffs", json::array()))
            coeffs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
        return std::make_shared<SupportFourierCurve>(c0, std::move(coeffs));
    }
    if (type == "ellipse")
        return std::make_shared<EllipseCurve>(j.at("a").get<double>(), j.at("b").get<double>());
    if (type == "radon") return std::make_shared<RadonCurve>(j.at("p").get<double>());
    if (type == "lp_circle") return std::make_shared<LpCircleCurve>(j.at("p").get<double>());
    throw std::invalid_argument("unknown curve type '" + type + "'");
}

}  // namespace

std::shared_ptr<PlaneCurve> load_curve_file(const std::string& path) {
    return curve_from_json(read_json(path));
}

std::shared_ptr<PlaneCurve> parse_curve_spec(const std::string& spec) {
    auto args_of = [&](const std::string& name) -> std::optional<std::vector<double>> {
        if (spec.rfind(name, 0) != 0) return std::nullopt;
        if (spec == name) return std::vector<double>{};
        if (spec[name.size()] != '(' || spec.back() != ')') return std::nullopt;
        std::vector<double> vals;
        std::string body = spec.substr(name.size() + 1, spec.size() - name.size() - 2);
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
            vals.push_back(std::stod(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return vals;
    };
    if (auto a = args_of("circle")) {
        double r = a->empty() ? 1.0 : (*a)[0];
        return make_circle(r);
    }
    if (auto a = args_of("ellipse"); a && a->size() == 2)
        return std::make_shared<EllipseCurve>((*a)[0], (*a)[1]);
    if (auto a = args_of("radon"); a && a->size() == 1)
        return std::make_shared<RadonCurve>((*a)[0]);
    if (auto a = args_of("lp"); a && a->size() == 1)
        return std::make_shared<LpCircleCurve>((*a)[0]);
    return load_curve_file(spec);
}

ConvexPolygon load_polygon_file(const std::string& path) {
    json j = read_json(path);
    if (j.at("type").get<std::string>() != "polygon")
        throw std::invalid_argument("expected a polygon description");
    std::vector<RVec2> verts;
    for (const auto& v : j.at("vertices"))
        verts.push_back({parse_rational(v.at(0).get<std::string>()),
                         parse_rational(v.at(1).get<std::string>())});
    return ConvexPolygon(std::move(verts));
}

TableVariant load_table_file(const std::string& path) {
    json j = read_json(path);
    std::string type = j.at("type").get<std::string>();
    if (type == "weighted_sphere")
        return WeightedSphere(j.at("a").get<std::vector<double>>());
    if (type == "level_set_quartic") {
        int dim = j.at("dim").get<int>();
        if (dim % 2 != 0) throw std::invalid_argument("level set dimension must be even");
        return std::shared_ptr<LevelSetBody>(
            std::make_shared<QuarticBody>(j.at("eps").get<double>(), dim / 2));
    }
    throw std::invalid_argument("unknown table type '" + type + "'");
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace sympb
