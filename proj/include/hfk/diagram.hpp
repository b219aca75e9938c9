#pragma once

#include "hfk/error.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hfk {

enum class CurveKind { alpha, beta };

inline const char* kind_name(CurveKind k) { return k == CurveKind::alpha ? "alpha" : "beta"; }

struct ArcRef {
    CurveKind kind = CurveKind::alpha;
    int curve = 0;
    int pos = 0;
    auto operator<=>(const ArcRef&) const = default;
};

struct BoundaryStep {
    ArcRef arc;
    int direction = 1;
    bool operator==(const BoundaryStep&) const = default;
};

struct Intersection {
    std::string id;
    int alpha = 0;
    int beta = 0;
    int sign = 1;
};

// Quadrant q of point p: the sector counterclockwise from ray q, where the rays at p are
// numbered counterclockwise starting from the outgoing alpha ray.
struct Corner {
    int point = 0;
    int quadrant = 0;
    auto operator<=>(const Corner&) const = default;
};

struct Region {
    std::string id;
    std::vector<BoundaryStep> boundary;
    std::vector<Corner> corners;                        // derived from the boundary word
    std::optional<std::vector<Corner>> declared_corners;  // as written in the file, if any
};

struct Basepoint {
    std::string id;
    char kind = 'w';  // 'w' or 'z'
    int region = 0;
};

struct LinkComponent {
    std::string name;
    std::vector<std::pair<int, int>> pairs;  // (z, w) basepoint indices
};

struct InvolutionData {
    std::vector<int> points;   // tau on intersection indices
    std::vector<int> regions;  // tau on region indices
    int z0 = -1;               // fixed basepoints
    int w0 = -1;
};

struct ValidationFailure {
    std::string rule;
    std::string detail;
    std::vector<std::string> cells;
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;
    bool passed() const { return failures.empty(); }
    bool has(const std::string& rule) const {
        return std::any_of(failures.begin(), failures.end(), [&](auto& f) { return f.rule == rule; });
    }
};

struct HeegaardDiagram {
    std::string name;
    std::vector<Intersection> points;
    std::vector<std::vector<int>> alpha_orders;
    std::vector<std::vector<int>> beta_orders;
    std::vector<Region> regions;
    std::vector<Basepoint> basepoints;
    std::vector<LinkComponent> components;
    std::optional<InvolutionData> involution;

    int alpha_count() const { return static_cast<int>(alpha_orders.size()); }
    int beta_count() const { return static_cast<int>(beta_orders.size()); }
    int num_points() const { return static_cast<int>(points.size()); }
    int num_regions() const { return static_cast<int>(regions.size()); }

    const std::vector<std::vector<int>>& orders(CurveKind k) const {
        return k == CurveKind::alpha ? alpha_orders : beta_orders;
    }

    int num_arcs() const {
        int n = 0;
        for (auto& o : alpha_orders) n += static_cast<int>(o.size());
        for (auto& o : beta_orders) n += static_cast<int>(o.size());
        return n;
    }

    bool arc_exists(const ArcRef& a) const {
        auto& o = orders(a.kind);
        return a.curve >= 0 && a.curve < static_cast<int>(o.size()) && a.pos >= 0 &&
               a.pos < static_cast<int>(o[static_cast<std::size_t>(a.curve)].size());
    }

    int arc_start(const ArcRef& a) const { return orders(a.kind)[a.curve][a.pos]; }
    int arc_end(const ArcRef& a) const {
        auto& o = orders(a.kind)[a.curve];
        return o[(static_cast<std::size_t>(a.pos) + 1) % o.size()];
    }
    int step_tail(const BoundaryStep& s) const { return s.direction == 1 ? arc_start(s.arc) : arc_end(s.arc); }
    int step_head(const BoundaryStep& s) const { return s.direction == 1 ? arc_end(s.arc) : arc_start(s.arc); }

    // Counterclockwise ray index at the tail of s for the ray that s leaves along.
    int out_ray(const BoundaryStep& s) const {
        int sign = points[step_tail(s)].sign;
        if (s.arc.kind == CurveKind::alpha) return s.direction == 1 ? 0 : 2;
        if (s.direction == 1) return sign == 1 ? 1 : 3;
        return sign == 1 ? 3 : 1;
    }
    // Ray index at the head of s for the ray that s arrives along.
    int in_ray(const BoundaryStep& s) const {
        int sign = points[step_head(s)].sign;
        if (s.arc.kind == CurveKind::alpha) return s.direction == 1 ? 2 : 0;
        if (s.direction == 1) return sign == 1 ? 3 : 1;
        return sign == 1 ? 1 : 3;
    }

    // Outgoing boundary step at point p along ray q.
    BoundaryStep ray_step(int p, int q) const {
        const auto& pt = points[p];
        auto pos_on = [&](CurveKind k, int c) {
            auto& o = orders(k)[c];
            return static_cast<int>(std::find(o.begin(), o.end(), p) - o.begin());
        };
        auto prev = [&](CurveKind k, int c, int pos) {
            int n = static_cast<int>(orders(k)[c].size());
            return (pos + n - 1) % n;
        };
        if (q == 0) return {{CurveKind::alpha, pt.alpha, pos_on(CurveKind::alpha, pt.alpha)}, 1};
        if (q == 2) {
            int pos = pos_on(CurveKind::alpha, pt.alpha);
            return {{CurveKind::alpha, pt.alpha, prev(CurveKind::alpha, pt.alpha, pos)}, -1};
        }
        bool forward = (q == 1) == (pt.sign == 1);
        int pos = pos_on(CurveKind::beta, pt.beta);
        if (forward) return {{CurveKind::beta, pt.beta, pos}, 1};
        return {{CurveKind::beta, pt.beta, prev(CurveKind::beta, pt.beta, pos)}, -1};
    }

    // Derived lookups; filled by index().
    std::map<std::string, int> point_index, region_index, basepoint_index;
    std::vector<std::array<int, 4>> quadrant_region;  // -1 when no region claims the quadrant
    std::map<std::pair<ArcRef, int>, int> side_region;  // (arc, direction) -> region on its left

    void index() {
        point_index.clear();
        region_index.clear();
        basepoint_index.clear();
        for (int i = 0; i < num_points(); ++i) point_index[points[i].id] = i;
        for (int i = 0; i < num_regions(); ++i) region_index[regions[i].id] = i;
        for (int i = 0; i < static_cast<int>(basepoints.size()); ++i) basepoint_index[basepoints[i].id] = i;
        quadrant_region.assign(points.size(), {-1, -1, -1, -1});
        side_region.clear();
        for (int r = 0; r < num_regions(); ++r) {
            for (auto& c : regions[r].corners)
                if (c.point >= 0 && c.point < num_points() && c.quadrant >= 0 && c.quadrant < 4)
                    quadrant_region[c.point][c.quadrant] = r;
            for (auto& s : regions[r].boundary) side_region[{s.arc, s.direction}] = r;
        }
    }

    int point_id(const std::string& id) const {
        auto it = point_index.find(id);
        if (it == point_index.end()) fail("DanglingReference", "unknown intersection '" + id + "'");
        return it->second;
    }
    int region_id(const std::string& id) const {
        auto it = region_index.find(id);
        if (it == region_index.end()) fail("DanglingReference", "unknown region '" + id + "'");
        return it->second;
    }
    int basepoint_id(const std::string& id) const {
        auto it = basepoint_index.find(id);
        if (it == basepoint_index.end()) fail("DanglingReference", "unknown basepoint '" + id + "'");
        return it->second;
    }

    // Component index of a basepoint, or -1.
    int component_of(int b) const {
        for (int c = 0; c < static_cast<int>(components.size()); ++c)
            for (auto& [z, w] : components[c].pairs)
                if (z == b || w == b) return c;
        return -1;
    }

    std::vector<int> basepoints_in(int region) const {
        std::vector<int> out;
        for (int b = 0; b < static_cast<int>(basepoints.size()); ++b)
            if (basepoints[b].region == region) out.push_back(b);
        return out;
    }
};

// Corner list of a boundary word: one corner per step, at its tail.
inline std::vector<Corner> corners_from_boundary(const HeegaardDiagram& d, const std::vector<BoundaryStep>& b) {
    std::vector<Corner> out;
    for (auto& s : b) out.push_back({d.step_tail(s), d.out_ray(s)});
    return out;
}

// Faces of the planar structure determined by curve orders and signs. Each face is traced
// with its interior on the left; the rotation at a point is alpha+, beta+, alpha-, beta-
// counterclockwise for sign +1 and alpha+, beta-, alpha-, beta+ for sign -1.
inline std::vector<std::vector<BoundaryStep>> trace_faces(const HeegaardDiagram& d) {
    std::set<std::pair<ArcRef, int>> seen;
    std::vector<std::vector<BoundaryStep>> faces;
    for (CurveKind k : {CurveKind::alpha, CurveKind::beta}) {
        auto& ords = d.orders(k);
        for (int c = 0; c < static_cast<int>(ords.size()); ++c) {
            for (int p = 0; p < static_cast<int>(ords[c].size()); ++p) {
                for (int dir : {1, -1}) {
                    BoundaryStep h{{k, c, p}, dir};
                    if (seen.count({h.arc, h.direction})) continue;
                    std::vector<BoundaryStep> face;
                    while (!seen.count({h.arc, h.direction})) {
                        seen.insert({h.arc, h.direction});
                        face.push_back(h);
                        int v = d.step_head(h);
                        int q = (d.in_ray(h) + 3) % 4;
                        h = d.ray_step(v, q);
                    }
                    faces.push_back(std::move(face));
                }
            }
        }
    }
    return faces;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Region classes obtained by merging across every arc of the given kind: merging across
// beta arcs gives the components of the complement of the alpha curves.
inline std::vector<int> complement_classes(const HeegaardDiagram& d, CurveKind merge_across) {
    detail::UnionFind uf(d.num_regions());
    for (auto& [key, r] : d.side_region) {
        if (key.first.kind != merge_across || key.second != 1) continue;
        auto it = d.side_region.find({key.first, -1});
        if (it != d.side_region.end()) uf.unite(r, it->second);
    }
    std::vector<int> cls(static_cast<std::size_t>(d.num_regions()));
    for (int r = 0; r < d.num_regions(); ++r) cls[r] = uf.find(r);
    return cls;
}

// Link components traced through the basepoints: from a z to the w sharing its alpha
// complement component, then to the z sharing that w's beta complement component.
inline std::vector<std::vector<int>> traced_link_cycles(const HeegaardDiagram& d) {
    auto acls = complement_classes(d, CurveKind::beta);
    auto bcls = complement_classes(d, CurveKind::alpha);
    int nb = static_cast<int>(d.basepoints.size());
    std::vector<bool> used(static_cast<std::size_t>(nb), false);
    std::vector<std::vector<int>> cycles;
    auto partner = [&](int b, char kind, const std::vector<int>& cls) {
        for (int o = 0; o < nb; ++o)
            if (o != b && d.basepoints[o].kind == kind && cls[d.basepoints[o].region] == cls[d.basepoints[b].region])
                return o;
        return -1;
    };
    for (int s = 0; s < nb; ++s) {
        if (used[s] || d.basepoints[s].kind != 'z') continue;
        std::vector<int> cyc;
        int z = s;
        while (z >= 0 && !used[z]) {
            used[z] = true;
            cyc.push_back(z);
            int w = partner(z, 'w', acls);
            if (w < 0 || used[w]) break;
            used[w] = true;
            cyc.push_back(w);
            z = partner(w, 'z', bcls);
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

inline ValidationReport validate(const HeegaardDiagram& d) {
    ValidationReport rep;
    auto add = [&](std::string rule, std::string detail, std::vector<std::string> cells = {}) {
        rep.failures.push_back({std::move(rule), std::move(detail), std::move(cells)});
    };
    const int V = d.num_points();

    if (d.alpha_count() == 0 || d.alpha_count() != d.beta_count())
        add("curve-count", "need equally many alpha and beta curves, at least one each");

    // curve orders: each point appears exactly once on its own alpha and beta curve
    bool orders_ok = true;
    for (CurveKind k : {CurveKind::alpha, CurveKind::beta}) {
        std::vector<int> seen(static_cast<std::size_t>(V), 0);
        auto& ords = d.orders(k);
        for (int c = 0; c < static_cast<int>(ords.size()); ++c) {
            if (ords[c].empty()) {
                add("curve-orders", std::string(kind_name(k)) + " curve " + std::to_string(c) + " has no points");
                orders_ok = false;
            }
            for (int p : ords[c]) {
                ++seen[p];
                int own = k == CurveKind::alpha ? d.points[p].alpha : d.points[p].beta;
                if (own != c) {
                    add("curve-orders", "point listed on the wrong " + std::string(kind_name(k)) + " curve",
                        {d.points[p].id});
                    orders_ok = false;
                }
            }
        }
        for (int p = 0; p < V; ++p)
            if (seen[p] != 1) {
                add("curve-orders",
                    "point appears " + std::to_string(seen[p]) + " times on " + kind_name(k) + " curves",
                    {d.points[p].id});
                orders_ok = false;
            }
    }
    for (int p = 0; p < V; ++p)
        if (d.points[p].sign != 1 && d.points[p].sign != -1) {
            add("curve-orders", "sign must be +1 or -1", {d.points[p].id});
            orders_ok = false;
        }
    if (!orders_ok) return rep;  // later rules rely on well-formed orders

    // boundary words
    std::map<std::pair<ArcRef, int>, int> usage;
    for (auto& r : d.regions) {
        const int n = static_cast<int>(r.boundary.size());
        if (n == 0) {
            add("boundary-continuity", "empty boundary", {r.id});
            continue;
        }
        bool ok = true;
        for (auto& s : r.boundary) {
            if (!d.arc_exists(s.arc) || (s.direction != 1 && s.direction != -1)) {
                add("boundary-continuity", "bad arc reference", {r.id});
                ok = false;
            }
        }
        if (!ok) continue;
        for (auto& s : r.boundary) ++usage[{s.arc, s.direction}];
        for (int i = 0; i < n; ++i) {
            auto& a = r.boundary[i];
            auto& b = r.boundary[(i + 1) % n];
            if (d.step_head(a) != d.step_tail(b)) {
                add("boundary-continuity", "consecutive arcs do not meet", {r.id, d.points[d.step_head(a)].id});
                ok = false;
            } else if (a.arc.kind == b.arc.kind) {
                add("corner-consistency", "boundary does not turn at a corner", {r.id, d.points[d.step_head(a)].id});
                ok = false;
            } else if (d.in_ray(a) != (d.out_ray(b) + 1) % 4) {
                add("corner-consistency", "turn disagrees with the intersection sign",
                    {r.id, d.points[d.step_head(a)].id});
                ok = false;
            }
        }
        if (ok && r.declared_corners) {
            auto want = r.corners;
            auto got = *r.declared_corners;
            std::sort(want.begin(), want.end());
            std::sort(got.begin(), got.end());
            if (want != got) add("corner-consistency", "declared corners differ from the boundary word", {r.id});
        }
    }
    for (CurveKind k : {CurveKind::alpha, CurveKind::beta}) {
        auto& ords = d.orders(k);
        for (int c = 0; c < static_cast<int>(ords.size()); ++c)
            for (int p = 0; p < static_cast<int>(ords[c].size()); ++p)
                for (int dir : {1, -1}) {
                    int u = usage.count({ArcRef{k, c, p}, dir}) ? usage[{ArcRef{k, c, p}, dir}] : 0;
                    if (u != 1)
                        add("arc-usage",
                            std::string(kind_name(k)) + " arc " + std::to_string(c) + ":" + std::to_string(p) +
                                (dir == 1 ? " forward" : " backward") + " used " + std::to_string(u) + " times");
                }
    }

    // corner incidences: every quadrant of every point exactly once
    std::vector<std::array<int, 4>> qcount(static_cast<std::size_t>(V), {0, 0, 0, 0});
    for (auto& r : d.regions)
        for (auto& c : r.corners)
            if (c.point >= 0 && c.point < V && c.quadrant >= 0 && c.quadrant < 4) ++qcount[c.point][c.quadrant];
    for (int p = 0; p < V; ++p) {
        int total = qcount[p][0] + qcount[p][1] + qcount[p][2] + qcount[p][3];
        bool each = qcount[p][0] == 1 && qcount[p][1] == 1 && qcount[p][2] == 1 && qcount[p][3] == 1;
        if (!each)
            add("corner-count", "point has " + std::to_string(total) + " corner incidences", {d.points[p].id});
    }

    const int E = d.num_arcs();
    const int F = d.num_regions();
    if (V - E + F != 2)
        add("euler-characteristic", "V - E + F = " + std::to_string(V - E + F) + ", expected 2 (genus 0)");

    // basepoints
    for (int r = 0; r < F; ++r) {
        int nw = 0, nz = 0;
        for (int b : d.basepoints_in(r)) (d.basepoints[b].kind == 'w' ? nw : nz)++;
        if (nw > 1 || nz > 1) add("basepoint-region", "region holds two basepoints of one kind", {d.regions[r].id});
    }
    for (auto across : {CurveKind::beta, CurveKind::alpha}) {
        auto cls = complement_classes(d, across);
        std::map<int, std::pair<int, int>> counts;
        for (int r = 0; r < F; ++r) counts[cls[r]];
        for (auto& b : d.basepoints) (b.kind == 'w' ? counts[cls[b.region]].first : counts[cls[b.region]].second)++;
        for (auto& [c, wz] : counts)
            if (wz.first != 1 || wz.second != 1)
                add("basepoint-distribution",
                    std::string("component of the ") + (across == CurveKind::beta ? "alpha" : "beta") +
                        " complement holds " + std::to_string(wz.first) + " w and " + std::to_string(wz.second) +
                        " z basepoints",
                    {d.regions[c].id});
    }

    // link components
    {
        std::vector<int> seen(d.basepoints.size(), 0);
        bool ok = true;
        for (auto& comp : d.components) {
            if (comp.pairs.empty()) {
                add("link-components", "component without basepoints", {comp.name});
                ok = false;
            }
            for (auto& [z, w] : comp.pairs) {
                ++seen[z];
                ++seen[w];
                if (d.basepoints[z].kind != 'z' || d.basepoints[w].kind != 'w') {
                    add("link-components", "pair must be (z, w)", {comp.name, d.basepoints[z].id, d.basepoints[w].id});
                    ok = false;
                }
            }
        }
        for (std::size_t b = 0; b < seen.size(); ++b)
            if (seen[b] != 1) {
                add("link-components", "basepoint must lie in exactly one pair", {d.basepoints[b].id});
                ok = false;
            }
        if (ok && !rep.has("basepoint-distribution")) {
            std::set<std::set<int>> traced, declared;
            for (auto& cyc : traced_link_cycles(d)) traced.insert(std::set<int>(cyc.begin(), cyc.end()));
            for (auto& comp : d.components) {
                std::set<int> s;
                for (auto& [z, w] : comp.pairs) s.insert({z, w});
                declared.insert(s);
            }
            if (traced != declared) add("link-components", "components disagree with the traced link");
        }
    }

    // involution
    if (d.involution) {
        const auto& inv = *d.involution;
        bool shape = static_cast<int>(inv.points.size()) == V && static_cast<int>(inv.regions.size()) == F;
        if (!shape) {
            add("involution", "involution must map every intersection and region");
        } else {
            for (int p = 0; p < V; ++p) {
                int q = inv.points[p];
                if (q < 0 || q >= V || inv.points[q] != p) {
                    add("involution", "not an involution on intersections", {d.points[p].id});
                    continue;
                }
                if (q == p) add("involution", "fixes an intersection", {d.points[p].id});
                if (d.points[q].sign != d.points[p].sign) add("involution", "changes a sign", {d.points[p].id});
            }
            for (CurveKind k : {CurveKind::alpha, CurveKind::beta})
                for (auto& o : d.orders(k)) {
                    auto curve_of = [&](int p) { return k == CurveKind::alpha ? d.points[p].alpha : d.points[p].beta; };
                    int target = curve_of(inv.points[o.front()]);
                    for (int p : o)
                        if (curve_of(inv.points[p]) != target)
                            add("involution", std::string("does not map ") + kind_name(k) + " curves to curves",
                                {d.points[p].id});
                }
            std::set<int> fixed_expected;
            if (inv.z0 >= 0) fixed_expected.insert(d.basepoints[inv.z0].region);
            if (inv.w0 >= 0) fixed_expected.insert(d.basepoints[inv.w0].region);
            for (int r = 0; r < F; ++r) {
                int s = inv.regions[r];
                if (s < 0 || s >= F || inv.regions[s] != r) {
                    add("involution", "not an involution on regions", {d.regions[r].id});
                    continue;
                }
                if ((s == r) != (fixed_expected.count(r) > 0))
                    add("involution", "fixed regions must be exactly the z0 and w0 regions", {d.regions[r].id});
                std::vector<Corner> img;
                for (auto& c : d.regions[r].corners) img.push_back({inv.points[c.point], c.quadrant});
                auto other = d.regions[s].corners;
                std::sort(img.begin(), img.end());
                std::sort(other.begin(), other.end());
                if (img != other) add("involution", "region corners do not match their image", {d.regions[r].id});
                auto kinds = [&](int reg) {
                    std::multiset<char> ks;
                    for (int b : d.basepoints_in(reg)) ks.insert(d.basepoints[b].kind);
                    return ks;
                };
                if (kinds(r) != kinds(s)) add("involution", "basepoints do not match their image", {d.regions[r].id});
            }
        }
    }
    return rep;
}

// Fills derived corners and lookups; call after editing the raw fields.
inline void finalize(HeegaardDiagram& d) {
    bool orders_ok = true;
    for (CurveKind k : {CurveKind::alpha, CurveKind::beta})
        for (auto& o : d.orders(k))
            for (int p : o)
                if (p < 0 || p >= d.num_points()) orders_ok = false;
    for (auto& r : d.regions) {
        bool ok = orders_ok;
        for (auto& s : r.boundary)
            if (!d.arc_exists(s.arc)) ok = false;
        for (int i = 0; ok && i < static_cast<int>(d.points.size()); ++i)
            if (d.points[i].alpha < 0 || d.points[i].beta < 0) ok = false;
        if (ok) {
            // ray indices need the point on its own curves; skip derivation if orders are broken
            r.corners = corners_from_boundary(d, r.boundary);
        } else if (r.declared_corners) {
            r.corners = *r.declared_corners;
        }
    }
    d.index();
}

// Region list from traced faces; ids are assigned by the caller-supplied namer.
template <class Namer>
std::vector<Region> regions_from_faces(const HeegaardDiagram& d, const std::vector<std::vector<BoundaryStep>>& faces,
                                       Namer&& namer) {
    std::vector<Region> out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        Region r;
        r.boundary = faces[i];
        r.corners = corners_from_boundary(d, r.boundary);
        r.id = namer(i, r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hfk
