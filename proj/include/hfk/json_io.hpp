#pragma once

#include "hfk/diagram.hpp"
#include "hfk/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace hfk {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) fail("SyntaxError", where + ": missing key '" + key + "'");
    return j.at(key);
}

inline std::string need_string(const json& j, const std::string& where) {
    if (!j.is_string()) fail("SyntaxError", where + ": expected a string");
    return j.get<std::string>();
}

inline int need_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail("SyntaxError", where + ": expected an integer");
    return j.get<int>();
}

inline const json& need_array(const json& j, const std::string& where) {
    if (!j.is_array()) fail("SyntaxError", where + ": expected a list");
    return j;
}

template <class Map>
void insert_unique(Map& m, const std::string& id, int value, const char* what) {
    if (!m.emplace(id, value).second) fail("DuplicateId", std::string(what) + " '" + id + "' declared twice");
}

}  // namespace detail

inline HeegaardDiagram parse_diagram(const std::string& text) {
    using namespace detail;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("SyntaxError", e.what());
    }
    if (!root.is_object()) fail("SyntaxError", "top level must be an object");

    HeegaardDiagram d;
    d.name = root.contains("name") ? need_string(root["name"], "name") : "";

    const json& ao = need_array(need(root, "alpha_orders", "diagram"), "alpha_orders");
    const json& bo = need_array(need(root, "beta_orders", "diagram"), "beta_orders");
    if (ao.empty()) fail("SyntaxError", "alpha_count = 0");
    if (bo.empty()) fail("SyntaxError", "beta_count = 0");
    for (const char* key : {"alpha_count", "beta_count"}) {
        if (!root.contains(key)) continue;
        int n = need_int(root[key], key);
        std::size_t have = std::string(key) == "alpha_count" ? ao.size() : bo.size();
        if (n <= 0) fail("SyntaxError", std::string(key) + " = " + std::to_string(n));
        if (static_cast<std::size_t>(n) != have) fail("SyntaxError", std::string(key) + " disagrees with the orders");
    }

    const json& pts = need_array(need(root, "intersections", "diagram"), "intersections");
    for (auto& p : pts) {
        Intersection x;
        x.id = need_string(need(p, "id", "intersection"), "intersection id");
        x.alpha = need_int(need(p, "alpha", x.id), x.id + ".alpha");
        x.beta = need_int(need(p, "beta", x.id), x.id + ".beta");
        x.sign = need_int(need(p, "sign", x.id), x.id + ".sign");
        if (x.alpha < 0 || x.alpha >= static_cast<int>(ao.size()))
            fail("DanglingReference", x.id + " names alpha curve " + std::to_string(x.alpha));
        if (x.beta < 0 || x.beta >= static_cast<int>(bo.size()))
            fail("DanglingReference", x.id + " names beta curve " + std::to_string(x.beta));
        insert_unique(d.point_index, x.id, static_cast<int>(d.points.size()), "intersection");
        d.points.push_back(std::move(x));
    }
    auto point_ref = [&](const json& j, const std::string& where) {
        std::string id = need_string(j, where);
        auto it = d.point_index.find(id);
        if (it == d.point_index.end()) fail("DanglingReference", where + " names unknown intersection '" + id + "'");
        return it->second;
    };
    for (auto [src, dst, label] : {std::tuple{&ao, &d.alpha_orders, "alpha_orders"},
                                   std::tuple{&bo, &d.beta_orders, "beta_orders"}}) {
        for (auto& curve : *src) {
            std::vector<int> order;
            for (auto& id : need_array(curve, label)) order.push_back(point_ref(id, label));
            dst->push_back(std::move(order));
        }
    }

    const json& regs = need_array(need(root, "regions", "diagram"), "regions");
    for (auto& r : regs) {
        Region reg;
        reg.id = need_string(need(r, "id", "region"), "region id");
        for (auto& s : need_array(need(r, "boundary", reg.id), reg.id + ".boundary")) {
            const json& a = need_array(need(s, "arc", reg.id), reg.id + ".arc");
            if (a.size() != 3) fail("SyntaxError", reg.id + ": arc must be [kind, curve, position]");
            std::string kind = need_string(a[0], reg.id + ".arc kind");
            if (kind != "alpha" && kind != "beta") fail("SyntaxError", reg.id + ": arc kind '" + kind + "'");
            BoundaryStep st;
            st.arc = {kind == "alpha" ? CurveKind::alpha : CurveKind::beta, need_int(a[1], reg.id),
                      need_int(a[2], reg.id)};
            st.direction = need_int(need(s, "direction", reg.id), reg.id + ".direction");
            if (st.direction != 1 && st.direction != -1) fail("SyntaxError", reg.id + ": direction must be +1 or -1");
            if (!d.arc_exists(st.arc))
                fail("DanglingReference", reg.id + " uses undeclared arc " + kind + ":" + std::to_string(st.arc.curve) +
                                              ":" + std::to_string(st.arc.pos));
            reg.boundary.push_back(st);
        }
        if (r.contains("corners")) {
            std::vector<Corner> cs;
            for (auto& c : need_array(r["corners"], reg.id + ".corners")) {
                if (!c.is_array() || c.size() != 2) fail("SyntaxError", reg.id + ": corner must be [point, quadrant]");
                int q = need_int(c[1], reg.id + ".corner quadrant");
                if (q < 0 || q > 3) fail("SyntaxError", reg.id + ": quadrant out of range");
                cs.push_back({point_ref(c[0], reg.id + ".corners"), q});
            }
            reg.declared_corners = std::move(cs);
        }
        insert_unique(d.region_index, reg.id, static_cast<int>(d.regions.size()), "region");
        d.regions.push_back(std::move(reg));
    }

    const json& bps = need_array(need(root, "basepoints", "diagram"), "basepoints");
    for (auto& b : bps) {
        Basepoint bp;
        bp.id = need_string(need(b, "id", "basepoint"), "basepoint id");
        std::string kind = need_string(need(b, "kind", bp.id), bp.id + ".kind");
        if (kind != "w" && kind != "z") fail("SyntaxError", bp.id + ": kind must be w or z");
        bp.kind = kind[0];
        std::string reg = need_string(need(b, "region", bp.id), bp.id + ".region");
        auto it = d.region_index.find(reg);
        if (it == d.region_index.end()) fail("DanglingReference", bp.id + " names unknown region '" + reg + "'");
        bp.region = it->second;
        insert_unique(d.basepoint_index, bp.id, static_cast<int>(d.basepoints.size()), "basepoint");
        d.basepoints.push_back(std::move(bp));
    }
    auto bp_ref = [&](const json& j, const std::string& where) {
        std::string id = need_string(j, where);
        auto it = d.basepoint_index.find(id);
        if (it == d.basepoint_index.end()) fail("DanglingReference", where + " names unknown basepoint '" + id + "'");
        return it->second;
    };

    if (root.contains("link_components")) {
        for (auto& c : need_array(root["link_components"], "link_components")) {
            LinkComponent lc;
            lc.name = need_string(need(c, "name", "link component"), "component name");
            for (auto& p : need_array(need(c, "pairs", lc.name), lc.name + ".pairs")) {
                if (!p.is_array() || p.size() != 2) fail("SyntaxError", lc.name + ": pair must be [z, w]");
                lc.pairs.emplace_back(bp_ref(p[0], lc.name), bp_ref(p[1], lc.name));
            }
            d.components.push_back(std::move(lc));
        }
    }

    if (root.contains("involution") && !root["involution"].is_null()) {
        const json& inv = root["involution"];
        InvolutionData data;
        data.points.assign(d.points.size(), -1);
        data.regions.assign(d.regions.size(), -1);
        const json& pm = need(inv, "intersections", "involution");
        const json& rm = need(inv, "regions", "involution");
        if (!pm.is_object() || !rm.is_object()) fail("SyntaxError", "involution maps must be objects");
        for (auto& [k, v] : pm.items()) {
            auto it = d.point_index.find(k);
            if (it == d.point_index.end()) fail("DanglingReference", "involution names unknown intersection '" + k + "'");
            data.points[it->second] = point_ref(v, "involution");
        }
        for (auto& [k, v] : rm.items()) {
            auto it = d.region_index.find(k);
            if (it == d.region_index.end()) fail("DanglingReference", "involution names unknown region '" + k + "'");
            std::string to = need_string(v, "involution");
            auto jt = d.region_index.find(to);
            if (jt == d.region_index.end()) fail("DanglingReference", "involution names unknown region '" + to + "'");
            data.regions[it->second] = jt->second;
        }
        const json& fixed = need_array(need(inv, "fixed", "involution"), "involution.fixed");
        if (fixed.size() != 2) fail("SyntaxError", "involution.fixed must be [z0, w0]");
        data.z0 = bp_ref(fixed[0], "involution.fixed");
        data.w0 = bp_ref(fixed[1], "involution.fixed");
        d.involution = std::move(data);
    }

    finalize(d);
    return d;
}

inline HeegaardDiagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileNotFound", path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_diagram(ss.str());
}

inline json diagram_to_json(const HeegaardDiagram& d) {
    json j;
    j["name"] = d.name;
    for (auto [key, ords] : {std::pair{"alpha_orders", &d.alpha_orders}, std::pair{"beta_orders", &d.beta_orders}}) {
        json arr = json::array();
        for (auto& o : *ords) {
            json c = json::array();
            for (int p : o) c.push_back(d.points[p].id);
            arr.push_back(c);
        }
        j[key] = arr;
    }
    j["intersections"] = json::array();
    for (auto& p : d.points) j["intersections"].push_back({{"id", p.id}, {"alpha", p.alpha}, {"beta", p.beta}, {"sign", p.sign}});
    j["regions"] = json::array();
    for (auto& r : d.regions) {
        json b = json::array();
        for (auto& s : r.boundary)
            b.push_back({{"arc", json::array({kind_name(s.arc.kind), s.arc.curve, s.arc.pos})}, {"direction", s.direction}});
        json c = json::array();
        for (auto& k : r.corners) c.push_back(json::array({d.points[k.point].id, k.quadrant}));
        j["regions"].push_back({{"id", r.id}, {"boundary", b}, {"corners", c}});
    }
    j["basepoints"] = json::array();
    for (auto& b : d.basepoints)
        j["basepoints"].push_back({{"id", b.id}, {"kind", std::string(1, b.kind)}, {"region", d.regions[b.region].id}});
    j["link_components"] = json::array();
    for (auto& c : d.components) {
        json pairs = json::array();
        for (auto& [z, w] : c.pairs) pairs.push_back(json::array({d.basepoints[z].id, d.basepoints[w].id}));
        j["link_components"].push_back({{"name", c.name}, {"pairs", pairs}});
    }
    if (d.involution) {
        json pm = json::object(), rm = json::object();
        for (int p = 0; p < d.num_points(); ++p) pm[d.points[p].id] = d.points[d.involution->points[p]].id;
        for (int r = 0; r < d.num_regions(); ++r) rm[d.regions[r].id] = d.regions[d.involution->regions[r]].id;
        j["involution"] = {{"intersections", pm},
                           {"regions", rm},
                           {"fixed", json::array({d.basepoints[d.involution->z0].id, d.basepoints[d.involution->w0].id})}};
    }
    return j;
}

// Diagram file text: one line per list entry.
inline std::string dump_diagram(const HeegaardDiagram& d) {
    json j = diagram_to_json(d);
    std::string out = "{\n";
    bool first = true;
    for (auto& [key, val] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += "  \"" + key + "\": ";
        bool per_line = val.is_array() && !val.empty() && val[0].is_object();
        if (per_line) {
            out += "[\n";
            for (std::size_t i = 0; i < val.size(); ++i)
                out += "    " + val[i].dump() + (i + 1 < val.size() ? ",\n" : "\n");
            out += "  ]";
        } else {
            out += val.dump();
        }
    }
    out += "\n}\n";
    return out;
}

}  // namespace hfk
