#include "lcf/serialize.hpp"

#include <stdexcept>

namespace lcf {

namespace {

Json set_json(ColorSet s) { return Json(s.members()); }

ColorSet set_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("color list must be an array");
    const auto labels = j.get<std::vector<int>>();
    return ColorSet::from_labels(labels);
}

} // namespace

Json to_json(const CanonicalAssignment& a) {
    return Json{{"m", a.m()}, {"n", a.n()}, {"d", a.d()}, {"z", a.z()}};
}

CanonicalAssignment canonical_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("d") || !j.contains("z"))
        throw std::invalid_argument("canonical assignment needs m, d and z");
    CanonicalAssignment a(j.at("m").get<int>(), j.at("d").get<int>(), j.at("z").get<std::vector<std::uint64_t>>());
    if (j.contains("n") && j.at("n").get<std::uint64_t>() != a.n())
        throw std::invalid_argument("canonical assignment: n does not match sum of z");
    return a;
}

Json to_json(const ListAssignment& a) {
    Json x = Json::array();
    Json y = Json::array();
    for (ColorSet s : a.x) x.push_back(set_json(s));
    for (ColorSet s : a.y) y.push_back(set_json(s));
    return Json{{"x", x}, {"y", y}};
}

ListAssignment lists_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) throw std::invalid_argument("list assignment needs x and y");
    ListAssignment a;
    for (const auto& s : j.at("x")) a.x.push_back(set_from_json(s));
    for (const auto& s : j.at("y")) a.y.push_back(set_from_json(s));
    if (a.x.empty() || a.y.empty()) throw std::invalid_argument("list assignment: x and y must be non-empty");
    return a;
}

Json to_json(const Provenance& p) {
    Json j{{"family", std::string(construction_family_name(p.family))}, {"m", p.m}};
    if (p.family != ConstructionFamily::exhaustive_search) j["t"] = p.t;
    if (p.family == ConstructionFamily::balanced_extension) j["c"] = p.c;
    if (p.family == ConstructionFamily::general_knt) j["n"] = p.n;
    return j;
}

Json to_json(const Witness& w) {
    Json j = w.assignment ? to_json(*w.assignment) : Json{{"lists", to_json(w.lists)}};
    j["count"] = to_decimal(w.count);
    j["provenance"] = to_json(w.provenance);
    return j;
}

Json to_json(const DMinimum& d) {
    Json j{{"d", d.d}, {"found", d.found}};
    if (d.found) {
        j["value"] = to_decimal(d.value);
        j["z"] = d.z;
    }
    j["states"] = d.states;
    j["complete"] = d.complete;
    return j;
}

Json to_json(const Verdict& v) {
    Json j{{"n", v.n}, {"m", v.m}, {"relation", std::string(relation_name(v.relation))}};
    j["min_value"] = v.min_value ? Json(to_decimal(*v.min_value)) : Json(nullptr);
    if (v.witness)
        j["witness"] = to_json(*v.witness);
    else if (v.explicit_witness)
        j["witness"] = Json{{"lists", to_json(*v.explicit_witness)}};
    else
        j["witness"] = nullptr;
    j["chromatic"] = to_decimal(v.chromatic);
    j["complete"] = v.complete;
    j["states"] = v.states;
    j["source"] = v.source;
    Json per_d = Json::array();
    for (const auto& d : v.per_d) per_d.push_back(to_json(d));
    j["per_d"] = per_d;
    return j;
}

Json to_json(const CompositionVector& a) { return Json(a.parts); }

Json to_json(const ScanLine& line) {
    Json j{{"m", line.m}, {"n", line.n}, {"status", line.good ? "good" : "first-bad"}};
    if (!line.good) {
        j["failing_family"] = line.failing_family;
        j["failing_composition"] = to_json(*line.failing_composition);
    }
    if (line.near_tie) j["near_tie"] = true;
    return j;
}

} // namespace lcf
