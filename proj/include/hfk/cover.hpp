#pragma once

#include "hfk/diagram.hpp"
#include "hfk/error.hpp"

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hfk {

// A cover diagram together with its quotient and the cell-level projection. The deck
// involution lives in cover.involution.
struct EquivariantDiagram {
    HeegaardDiagram cover;
    HeegaardDiagram quotient;
    std::vector<int> point_proj;                 // cover point -> quotient point
    std::vector<std::array<int, 2>> point_lift;  // quotient point -> its two lifts
    std::vector<int> region_proj;                // cover region -> quotient region
    std::vector<std::vector<int>> region_lift;   // quotient region -> one or two cover regions
    std::vector<int> basepoint_proj;             // cover basepoint -> quotient basepoint
    int z0 = -1;                                 // branch basepoints, indices in the quotient
    int w0 = -1;

    const InvolutionData& tau() const { return *cover.involution; }
};

namespace detail {

inline std::string lifted_name(const std::string& base, int sheet) { return base + "^" + std::to_string(sheet + 1); }

// Regions adjacent across each arc, as an ordered adjacency list keyed by region id.
inline std::vector<std::vector<std::pair<int, ArcRef>>> dual_graph(const HeegaardDiagram& d) {
    std::vector<std::vector<std::pair<int, ArcRef>>> adj(static_cast<std::size_t>(d.num_regions()));
    for (auto& [key, r] : d.side_region) {
        if (key.second != 1) continue;
        auto it = d.side_region.find({key.first, -1});
        if (it == d.side_region.end()) continue;
        adj[r].push_back({it->second, key.first});
        adj[it->second].push_back({r, key.first});
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end(), [&](auto& x, auto& y) {
            if (x.first != y.first) return d.regions[x.first].id < d.regions[y.first].id;
            return x.second < y.second;
        });
    return adj;
}

}  // namespace detail

// Arcs crossed by the branch cut: a shortest dual path from the z0 region to the w0 region,
// neighbours visited in region-id order.
inline std::set<ArcRef> branch_cut(const HeegaardDiagram& d, int from_region, int to_region) {
    auto adj = detail::dual_graph(d);
    std::vector<int> prev(static_cast<std::size_t>(d.num_regions()), -1);
    std::vector<ArcRef> via(static_cast<std::size_t>(d.num_regions()));
    std::vector<bool> seen(static_cast<std::size_t>(d.num_regions()), false);
    std::deque<int> q{from_region};
    seen[from_region] = true;
    while (!q.empty()) {
        int r = q.front();
        q.pop_front();
        for (auto& [s, arc] : adj[r]) {
            if (seen[s]) continue;
            seen[s] = true;
            prev[s] = r;
            via[s] = arc;
            q.push_back(s);
        }
    }
    if (!seen[to_region]) fail("InvalidDiagram", "branch regions are not connected");
    std::set<ArcRef> cut;
    for (int r = to_region; r != from_region; r = prev[r]) cut.insert(via[r]);
    return cut;
}

inline EquivariantDiagram branched_double_cover(const HeegaardDiagram& d, const std::string& z0_id,
                                                const std::string& w0_id) {
    auto rep = validate(d);
    if (!rep.passed()) fail("InvalidDiagram", rep.failures.front().rule + ": " + rep.failures.front().detail);
    const int z0 = d.basepoint_id(z0_id);
    const int w0 = d.basepoint_id(w0_id);
    const int rz = d.basepoints[z0].region;
    const int rw = d.basepoints[w0].region;
    if (z0 == w0 || rz == rw) fail("BranchPointsCoincide", z0_id + " and " + w0_id + " share a region");

    auto cut = branch_cut(d, rz, rw);
    auto voltage = [&](const ArcRef& a) { return cut.count(a) ? 1 : 0; };

    EquivariantDiagram ed;
    ed.quotient = d;
    ed.z0 = z0;
    ed.w0 = w0;
    HeegaardDiagram& c = ed.cover;
    c.name = d.name;
    {
        const std::string suffix = "-quotient";
        if (c.name.size() > suffix.size() && c.name.compare(c.name.size() - suffix.size(), suffix.size(), suffix) == 0)
            c.name = c.name.substr(0, c.name.size() - suffix.size()) + "-cover";
        else
            c.name += "-cover";
    }

    // points (p, s) -> index 2p + s
    const int V = d.num_points();
    for (int p = 0; p < V; ++p)
        for (int s = 0; s < 2; ++s)
            c.points.push_back({detail::lifted_name(d.points[p].id, s), 0, 0, d.points[p].sign});
    ed.point_proj.resize(static_cast<std::size_t>(2 * V));
    ed.point_lift.resize(static_cast<std::size_t>(V));
    for (int p = 0; p < V; ++p) {
        ed.point_proj[2 * p] = ed.point_proj[2 * p + 1] = p;
        ed.point_lift[p] = {2 * p, 2 * p + 1};
    }

    // curve lifts: lift 2k starts at sheet 0 of order[0], lift 2k+1 at sheet 1
    for (CurveKind k : {CurveKind::alpha, CurveKind::beta}) {
        auto& src = d.orders(k);
        auto& dst = k == CurveKind::alpha ? c.alpha_orders : c.beta_orders;
        for (int ci = 0; ci < static_cast<int>(src.size()); ++ci) {
            const auto& o = src[ci];
            int total = 0;
            for (int pos = 0; pos < static_cast<int>(o.size()); ++pos) total ^= voltage({k, ci, pos});
            if (total)
                fail("InvalidDiagram", std::string(kind_name(k)) + " curve " + std::to_string(ci) +
                                           " separates the branch points");
            for (int start = 0; start < 2; ++start) {
                std::vector<int> lifted;
                int s = start;
                for (int pos = 0; pos < static_cast<int>(o.size()); ++pos) {
                    lifted.push_back(2 * o[pos] + s);
                    auto& pt = c.points[2 * o[pos] + s];
                    (k == CurveKind::alpha ? pt.alpha : pt.beta) = static_cast<int>(dst.size());
                    s ^= voltage({k, ci, pos});
                }
                dst.push_back(std::move(lifted));
            }
        }
    }

    // regions
    auto faces = trace_faces(c);
    c.regions = regions_from_faces(c, faces, [](std::size_t, const Region&) { return std::string(); });
    c.index();
    auto proj_step = [&](const BoundaryStep& s) {
        int ci = s.arc.curve / 2;
        return BoundaryStep{{s.arc.kind, ci, s.arc.pos}, s.direction};
    };
    const int F = d.num_regions();
    ed.region_proj.assign(c.regions.size(), -1);
    ed.region_lift.assign(static_cast<std::size_t>(F), {});
    for (int r = 0; r < c.num_regions(); ++r) {
        auto q = proj_step(c.regions[r].boundary.front());
        ed.region_proj[r] = d.side_region.at({q.arc, q.direction});
        ed.region_lift[ed.region_proj[r]].push_back(r);
    }
    // sheet 1 of a quotient region is the lift containing its first boundary step at sheet 0
    auto lift_step = [&](const BoundaryStep& s, int sheet) {
        auto& o = d.orders(s.arc.kind)[s.arc.curve];
        int start_point = o[s.arc.pos];
        int cover_point = 2 * start_point + sheet;
        int cc = s.arc.kind == CurveKind::alpha ? c.points[cover_point].alpha : c.points[cover_point].beta;
        return BoundaryStep{{s.arc.kind, cc, s.arc.pos}, s.direction};
    };
    std::vector<int> region_sheet(c.regions.size(), 0);
    for (int r = 0; r < F; ++r) {
        auto& lifts = ed.region_lift[r];
        if (lifts.size() == 1) {
            c.regions[lifts[0]].id = d.regions[r].id;
            continue;
        }
        if (lifts.size() != 2) fail("InvalidDiagram", "region " + d.regions[r].id + " does not lift to two regions");
        auto s0 = lift_step(d.regions[r].boundary.front(), 0);
        int first = c.side_region.at({s0.arc, s0.direction});
        if (lifts[0] != first) std::swap(lifts[0], lifts[1]);
        c.regions[lifts[0]].id = detail::lifted_name(d.regions[r].id, 0);
        c.regions[lifts[1]].id = detail::lifted_name(d.regions[r].id, 1);
        region_sheet[lifts[1]] = 1;
    }
    // regions sorted by id for a stable file layout
    {
        std::vector<int> order(c.regions.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return c.regions[a].id < c.regions[b].id; });
        std::vector<int> newpos(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) newpos[order[i]] = static_cast<int>(i);
        std::vector<Region> regs;
        std::vector<int> proj;
        for (int o : order) {
            regs.push_back(c.regions[o]);
            proj.push_back(ed.region_proj[o]);
        }
        c.regions = std::move(regs);
        ed.region_proj = std::move(proj);
        for (auto& l : ed.region_lift)
            for (auto& x : l) x = newpos[x];
        std::vector<int> sh(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) sh[newpos[i]] = region_sheet[i];
        region_sheet = std::move(sh);
    }

    // basepoints
    std::vector<std::array<int, 2>> bp_lift(d.basepoints.size(), {-1, -1});
    for (int b = 0; b < static_cast<int>(d.basepoints.size()); ++b) {
        const auto& bp = d.basepoints[b];
        auto& lifts = ed.region_lift[bp.region];
        if (lifts.size() == 1) {
            bp_lift[b] = {static_cast<int>(c.basepoints.size()), static_cast<int>(c.basepoints.size())};
            c.basepoints.push_back({bp.id, bp.kind, lifts[0]});
            ed.basepoint_proj.push_back(b);
            continue;
        }
        for (int s = 0; s < 2; ++s) {
            bp_lift[b][s] = static_cast<int>(c.basepoints.size());
            c.basepoints.push_back({detail::lifted_name(bp.id, s), bp.kind, lifts[s]});
            ed.basepoint_proj.push_back(b);
        }
    }
    c.index();

    // involution
    InvolutionData inv;
    for (int p = 0; p < 2 * V; ++p) inv.points.push_back(p ^ 1);
    inv.regions.resize(c.regions.size());
    for (int r = 0; r < c.num_regions(); ++r) {
        auto& l = ed.region_lift[ed.region_proj[r]];
        inv.regions[r] = l.size() == 1 ? r : (l[0] == r ? l[1] : l[0]);
    }
    inv.z0 = bp_lift[z0][0];
    inv.w0 = bp_lift[w0][0];
    c.involution = inv;

    // link components: each quotient pair lifts to pairs joined the same way
    auto qa = complement_classes(d, CurveKind::beta);
    auto ca = complement_classes(c, CurveKind::beta);
    auto cb = complement_classes(c, CurveKind::alpha);
    auto cycles = traced_link_cycles(c);
    std::vector<int> cycle_of(c.basepoints.size(), -1);
    for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
        for (int b : cycles[i]) cycle_of[b] = i;
    for (auto& comp : d.components) {
        std::map<int, std::vector<std::pair<int, int>>> by_cycle;
        for (auto& [z, w] : comp.pairs) {
            bool alpha_side = qa[d.basepoints[z].region] == qa[d.basepoints[w].region];
            const auto& cls = alpha_side ? ca : cb;
            std::set<int> zs{bp_lift[z][0], bp_lift[z][1]};
            for (int zl : zs) {
                int partner = -1;
                for (int wl : {bp_lift[w][0], bp_lift[w][1]})
                    if (cls[c.basepoints[wl].region] == cls[c.basepoints[zl].region]) partner = wl;
                if (partner < 0) fail("InvalidDiagram", "cannot pair the lifts of " + d.basepoints[z].id);
                by_cycle[cycle_of[zl]].push_back({zl, partner});
            }
        }
        int idx = 0;
        for (auto& [cyc, pairs] : by_cycle) {
            std::string name = by_cycle.size() == 1 ? comp.name : detail::lifted_name(comp.name, idx);
            c.components.push_back({name, pairs});
            ++idx;
        }
    }
    c.index();
    auto crep = validate(c);
    if (!crep.passed()) fail("InvalidDiagram", "cover: " + crep.failures.front().rule + ": " + crep.failures.front().detail);
    return ed;
}

// Cell-level isomorphism between two diagrams preserving curve families, regions, basepoint
// kinds and the link-component partition. Either family may have all of its orientations
// reversed; reversing a curve flips the sign at its points, and reversing alpha curves also
// shifts quadrant labels by two.
struct DiagramIsomorphism {
    std::vector<int> points;
    std::vector<int> regions;
    std::vector<int> basepoints;
    bool alpha_reversed = false;
    bool beta_reversed = false;
};

inline std::vector<DiagramIsomorphism> find_isomorphisms(const HeegaardDiagram& a, const HeegaardDiagram& b) {
    std::vector<DiagramIsomorphism> out;
    const int V = a.num_points();
    if (V != b.num_points() || a.num_regions() != b.num_regions() || a.alpha_count() != b.alpha_count() ||
        a.basepoints.size() != b.basepoints.size() || a.components.size() != b.components.size() || V == 0)
        return out;
    auto pos_in = [](const std::vector<int>& o, int p) {
        return static_cast<int>(std::find(o.begin(), o.end(), p) - o.begin());
    };
    auto neighbours = [&](const HeegaardDiagram& d, int p, bool ra, bool rb) {
        std::array<int, 4> n{};
        int i = 0;
        for (CurveKind k : {CurveKind::alpha, CurveKind::beta}) {
            auto& o = d.orders(k)[k == CurveKind::alpha ? d.points[p].alpha : d.points[p].beta];
            int m = static_cast<int>(o.size());
            int at = pos_in(o, p);
            bool rev = k == CurveKind::alpha ? ra : rb;
            n[i++] = o[(at + (rev ? m - 1 : 1)) % m];
            n[i++] = o[(at + (rev ? 1 : m - 1)) % m];
        }
        return n;
    };
    std::map<std::vector<Corner>, int> b_regions;
    for (int r = 0; r < b.num_regions(); ++r) {
        auto cs = b.regions[r].corners;
        std::sort(cs.begin(), cs.end());
        b_regions[cs] = r;
    }

    for (int flips = 0; flips < 4; ++flips) {
        const bool ra = flips & 1, rb = flips & 2;
        const int sign_factor = (ra != rb) ? -1 : 1;
        const int qshift = ra ? 2 : 0;
        for (int anchor = 0; anchor < V; ++anchor) {
            if (b.points[anchor].sign != sign_factor * a.points[0].sign) continue;
            std::vector<int> m(static_cast<std::size_t>(V), -1), inv(static_cast<std::size_t>(V), -1);
            std::deque<int> q{0};
            m[0] = anchor;
            inv[anchor] = 0;
            bool ok = true;
            while (!q.empty() && ok) {
                int p = q.front();
                q.pop_front();
                auto na = neighbours(a, p, false, false);
                auto nb = neighbours(b, m[p], ra, rb);
                for (int i = 0; i < 4 && ok; ++i) {
                    int x = na[i], y = nb[i];
                    if (m[x] == -1 && inv[y] == -1) {
                        if (b.points[y].sign != sign_factor * a.points[x].sign) ok = false;
                        m[x] = y;
                        inv[y] = x;
                        q.push_back(x);
                    } else if (m[x] != y) {
                        ok = false;
                    }
                }
            }
            if (!ok || std::count(m.begin(), m.end(), -1)) continue;
            DiagramIsomorphism iso;
            iso.points = m;
            iso.alpha_reversed = ra;
            iso.beta_reversed = rb;
            for (int r = 0; r < a.num_regions() && ok; ++r) {
                std::vector<Corner> cs;
                for (auto& c : a.regions[r].corners) cs.push_back({m[c.point], (c.quadrant + qshift) % 4});
                std::sort(cs.begin(), cs.end());
                auto it = b_regions.find(cs);
                if (it == b_regions.end()) ok = false;
                else iso.regions.push_back(it->second);
            }
            if (!ok) continue;
            for (int p = 0; p < static_cast<int>(a.basepoints.size()) && ok; ++p) {
                int target = -1;
                for (int o : b.basepoints_in(iso.regions[a.basepoints[p].region]))
                    if (b.basepoints[o].kind == a.basepoints[p].kind) target = o;
                if (target < 0) ok = false;
                iso.basepoints.push_back(target);
            }
            if (!ok) continue;
            std::set<std::set<int>> pa, pb;
            for (auto& c : a.components) {
                std::set<int> s;
                for (auto& [z, w] : c.pairs) s.insert({iso.basepoints[z], iso.basepoints[w]});
                pa.insert(s);
            }
            for (auto& c : b.components) {
                std::set<int> s;
                for (auto& [z, w] : c.pairs) s.insert({z, w});
                pb.insert(s);
            }
            if (pa != pb) continue;
            out.push_back(std::move(iso));
        }
    }
    return out;
}

// Re-expresses a branched double cover on a hand-labelled copy of the cover diagram, using
// an isomorphism that intertwines the two involutions.
inline EquivariantDiagram attach_cover(const EquivariantDiagram& computed, const HeegaardDiagram& labelled) {
    if (!labelled.involution) fail("InvalidDiagram", labelled.name + " carries no involution");
    const auto& tl = *labelled.involution;
    const auto& tc = computed.tau();
    for (auto& iso : find_isomorphisms(computed.cover, labelled)) {
        bool ok = true;
        for (int p = 0; p < computed.cover.num_points() && ok; ++p)
            ok = iso.points[tc.points[p]] == tl.points[iso.points[p]];
        for (int r = 0; r < computed.cover.num_regions() && ok; ++r)
            ok = iso.regions[tc.regions[r]] == tl.regions[iso.regions[r]];
        if (!ok) continue;
        EquivariantDiagram ed;
        ed.cover = labelled;
        ed.quotient = computed.quotient;
        ed.z0 = computed.z0;
        ed.w0 = computed.w0;
        ed.point_proj.assign(labelled.points.size(), -1);
        ed.region_proj.assign(labelled.regions.size(), -1);
        ed.basepoint_proj.assign(labelled.basepoints.size(), -1);
        for (int p = 0; p < computed.cover.num_points(); ++p) ed.point_proj[iso.points[p]] = computed.point_proj[p];
        for (int r = 0; r < computed.cover.num_regions(); ++r) ed.region_proj[iso.regions[r]] = computed.region_proj[r];
        for (int b = 0; b < static_cast<int>(computed.cover.basepoints.size()); ++b)
            ed.basepoint_proj[iso.basepoints[b]] = computed.basepoint_proj[b];
        ed.point_lift.resize(computed.point_lift.size());
        for (std::size_t p = 0; p < computed.point_lift.size(); ++p)
            for (int s = 0; s < 2; ++s) ed.point_lift[p][s] = iso.points[computed.point_lift[p][s]];
        ed.region_lift.resize(computed.region_lift.size());
        for (std::size_t r = 0; r < computed.region_lift.size(); ++r)
            for (int x : computed.region_lift[r]) ed.region_lift[r].push_back(iso.regions[x]);
        for (auto& l : ed.region_lift) std::sort(l.begin(), l.end());
        return ed;
    }
    fail("InvalidDiagram", labelled.name + " is not an equivariant copy of the computed cover");
}

}  // namespace hfk
