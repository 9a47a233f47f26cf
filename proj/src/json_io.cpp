#include "ldp/json_io.hpp"

#include <stdexcept>

namespace ldp {

namespace {

using nlohmann::json;

long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::runtime_error("coordinate too large for JSON");
    return v.get_si();
}

}  // namespace

json to_json(const LatticePoint& p) { return json::array({to_long(p.x), to_long(p.y)}); }

json to_json(const RationalPoint& p) {
    return json::array({to_string(p.x), to_string(p.y)});
}

json to_json(const LatticePolygon& p) {
    json verts = json::array();
    for (const LatticePoint& v : p.vertices) verts.push_back(to_json(v));
    return json{{"vertices", std::move(verts)}};
}

json to_json(const RationalPolygon& p) {
    json verts = json::array();
    for (const RationalPoint& v : p.vertices) verts.push_back(to_json(v));
    return json{{"vertices", std::move(verts)}};
}

json to_json(const Cone& c) {
    return json{{"u1", to_json(c.u1)},
                {"u2", to_json(c.u2)},
                {"V", to_long(c.V)},
                {"a", to_long(c.a)},
                {"w", to_json(c.w)}};
}

json to_json(const Sail& s) {
    json boundary = json::array();
    for (const LatticePoint& b : s.boundary) boundary.push_back(to_json(b));
    json functionals = json::array();
    for (const LatticePoint& f : s.functionals) functionals.push_back(to_json(f));
    return json{{"boundary", std::move(boundary)},
                {"m_sigma", to_json(s.m_sigma)},
                {"functionals", std::move(functionals)}};
}

json to_json(const ConeCheck& c) {
    json j = to_json(c.cone);
    j["lhs_direct"] = to_string(c.lhs_direct);
    j["lhs_closed"] = to_string(c.lhs_closed);
    j["rhs"] = to_string(c.rhs);
    j["ok"] = c.ok;
    return j;
}

json to_json(const ReductionStep& s) {
    return json{{"case", s.case_tag == ReductionCase::I ? "I" : "II"},
                {"V", to_long(s.before.V)},
                {"a", to_long(s.before.a)},
                {"V_hat", to_long(s.after.V)},
                {"a_hat", to_long(s.after.a)},
                {"lambda", to_long(s.lambda)},
                {"delta", to_string(s.delta_lhs)}};
}

json to_json(const DecompositionCheck& d) {
    return json{{"dual_volume", to_string(d.dual_volume)},
                {"sails_volume", to_long(d.sails_volume)},
                {"ray_count", to_long(d.ray_count)},
                {"triangle_total", to_string(d.triangle_total)},
                {"chain_total", to_long(d.chain_total)},
                {"diff_identity_ok", d.diff_identity_ok},
                {"dual_chain_identity_ok", d.dual_chain_identity_ok},
                {"sails_match_rays", d.sails_match_rays}};
}

json to_json(const VerificationReport& r) {
    json dets = json::array();
    for (const Int& d : r.dual_chain.dets) dets.push_back(to_long(d));
    json j{{"polygon", to_json(r.polygon)},
           {"reflexive", r.reflexive},
           {"lhs", to_string(r.lhs)},
           {"rhs", to_string(r.rhs)},
           {"nvol", to_long(r.nvol)},
           {"nvol_dual", to_string(r.nvol_dual)},
           {"global_identity_ok", r.global_identity_ok},
           {"cone_identity_ok", r.cone_identity_ok},
           {"twelve_ok", r.twelve_ok},
           {"twelve_sum", to_long(r.twelve_sum)},
           {"decomposition_ok", r.decomposition.ok()},
           {"decomposition", to_json(r.decomposition)},
           {"dual_chain", json{{"dets", std::move(dets)}, {"total", to_long(r.dual_chain.total)}}}};
    if (!r.cones.empty()) {
        json cones = json::array();
        for (const ConeCheck& c : r.cones) cones.push_back(to_json(c));
        j["per_cone"] = std::move(cones);
    }
    return j;
}

LatticePoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw std::invalid_argument("point must be a 2-element integer array");
    }
    return {Int(j[0].get<long>()), Int(j[1].get<long>())};
}

LatticePolygon polygon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
        throw std::invalid_argument("polygon JSON needs a \"vertices\" array");
    }
    std::vector<LatticePoint> pts;
    for (const json& v : j["vertices"]) pts.push_back(point_from_json(v));
    return polygon_from_points(pts);
}

}  // namespace ldp
