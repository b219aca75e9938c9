#pragma once

#include "hfk/diagram.hpp"
#include "hfk/error.hpp"
#include "hfk/gf2.hpp"
#include "hfk/gradings.hpp"
#include "hfk/intlin.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace hfk {

// link: disks avoid every basepoint. knot: disks may cross the z basepoints of one
// distinguished component (the axis U) and avoid everything else.
enum class Flavor { link, knot };

inline const char* flavor_name(Flavor f) { return f == Flavor::link ? "link" : "knot"; }

inline Flavor parse_flavor(const std::string& s) {
    if (s == "link") return Flavor::link;
    if (s == "knot") return Flavor::knot;
    fail("UsageError", "flavor must be link or knot, got '" + s + "'");
}

// The component whose z basepoints the knot flavor lets disks cross: the one named U, or
// failing that the last one.
inline int free_component(const HeegaardDiagram& d) {
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
        if (d.components[c].name == "U") return c;
    return static_cast<int>(d.components.size()) - 1;
}

inline std::set<int> forbidden_basepoints(const HeegaardDiagram& d, Flavor f) {
    std::set<int> out;
    int fc = free_component(d);
    for (int b = 0; b < static_cast<int>(d.basepoints.size()); ++b) {
        if (f == Flavor::knot && d.basepoints[b].kind == 'z' && d.component_of(b) == fc) continue;
        out.insert(b);
    }
    return out;
}

// Alexander axes preserved by the differential of a flavor.
inline std::vector<int> preserved_axes(const HeegaardDiagram& d, Flavor f) {
    std::vector<int> out;
    int fc = free_component(d);
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
        if (f == Flavor::link || c != fc) out.push_back(c);
    return out;
}

struct NicenessReport {
    std::vector<std::string> offending;  // region ids
    bool nice() const { return offending.empty(); }
};

inline NicenessReport check_niceness(const HeegaardDiagram& d, Flavor f) {
    auto forbidden = forbidden_basepoints(d, f);
    NicenessReport rep;
    for (int r = 0; r < d.num_regions(); ++r) {
        bool marked = false;
        for (int b : d.basepoints_in(r)) marked |= forbidden.count(b) > 0;
        if (!marked && d.regions[r].corners.size() > 4) rep.offending.push_back(d.regions[r].id);
    }
    return rep;
}

struct GradedComplex {
    Flavor flavor = Flavor::link;
    GradingTable gradings;
    std::vector<int> axes;                        // preserved Alexander axes
    Gf2Matrix differential;                       // column x holds dx
    std::map<std::pair<int, int>, int> disk_counts;  // (x, y) -> number of empty embedded disks
    std::vector<IntVec> disk_domains;             // every counted disk, for cross-checks
    std::vector<std::pair<int, int>> disk_ends;

    std::size_t size() const { return gradings.generators.size(); }
};

namespace detail {

// Whether a 0/1 domain from x to y is an empty embedded bigon or square.
inline bool is_empty_disk(const HeegaardDiagram& d, const IntVec& m, const Generator& x, const Generator& y) {
    std::set<int> xs(x.points.begin(), x.points.end()), ys(y.points.begin(), y.points.end());
    int moved = 0;
    for (int p : xs) moved += ys.count(p) ? 0 : 1;
    if (moved < 1 || moved > 2) return false;
    for (int p = 0; p < d.num_points(); ++p) {
        int on = 0;
        for (int q = 0; q < 4; ++q) on += static_cast<int>(m[d.quadrant_region[p][q]]);
        bool in_x = xs.count(p) > 0, in_y = ys.count(p) > 0;
        if (in_x && in_y && on != 0) return false;
        if (in_x != in_y && on != 1) return false;
    }
    // connected with Euler characteristic one
    std::vector<int> support;
    for (int r = 0; r < d.num_regions(); ++r)
        if (m[r]) support.push_back(r);
    if (support.empty()) return false;
    UnionFind uf(d.num_regions());
    std::set<std::pair<ArcRef, int>> edges;
    std::set<int> verts;
    for (int r : support)
        for (auto& s : d.regions[r].boundary) {
            edges.insert({s.arc, 0});
            verts.insert(d.step_tail(s));
            auto other = d.side_region.find({s.arc, -s.direction});
            if (other != d.side_region.end() && m[other->second]) uf.unite(r, other->second);
        }
    for (int r : support)
        if (uf.find(r) != uf.find(support.front())) return false;
    long long chi = static_cast<long long>(verts.size()) - static_cast<long long>(edges.size()) +
                    static_cast<long long>(support.size());
    return chi == 1;
}

}  // namespace detail

inline GradedComplex differential(const HeegaardDiagram& d, Flavor f, bool require_admissible = true) {
    auto nice = check_niceness(d, f);
    if (!nice.nice()) fail("NotNice", d.name + ": region " + nice.offending.front() + " has more than four corners");
    auto forbidden = forbidden_basepoints(d, f);
    if (require_admissible) {
        auto adm = check_admissibility(d, basepoints_of_kind(d, 'w'));
        if (!adm.admissible()) fail("NotAdmissible", d.name + ": w-punctured diagram has a one-signed periodic domain");
    }

    GradedComplex c;
    c.flavor = f;
    c.gradings = relative_gradings(d);
    c.axes = preserved_axes(d, f);
    const auto& gens = c.gradings.generators;
    const int n = static_cast<int>(gens.size());
    c.differential = Gf2Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));

    IntMat A = corner_matrix(d);
    std::set<int> zero_regions;
    for (int b : forbidden) zero_regions.insert(d.basepoints[b].region);
    for (int r : zero_regions) {
        IntVec row(static_cast<std::size_t>(d.num_regions()), 0);
        row[r] = 1;
        A.push_back(row);
    }
    RationalSystem sys(A, static_cast<std::size_t>(d.num_regions()));

    for (int xi = 0; xi < n; ++xi) {
        for (int yi = 0; yi < n; ++yi) {
            if (xi == yi) continue;
            int diff = 0;
            for (std::size_t k = 0; k < gens[xi].points.size(); ++k) diff += gens[xi].points[k] != gens[yi].points[k];
            // a bigon moves one point; a square moves two (possibly on swapped beta curves)
            if (diff == 0 || diff > 2) continue;
            IntVec b = corner_rhs(d, gens[xi], gens[yi]);
            b.resize(A.size(), 0);
            int count = 0;
            sys.enumerate_binary(b, [&](const IntVec& m) {
                if (!detail::is_empty_disk(d, m, gens[xi], gens[yi])) return;
                ++count;
                c.disk_domains.push_back(m);
                c.disk_ends.push_back({xi, yi});
            });
            if (count) {
                c.disk_counts[{xi, yi}] = count;
                if (count % 2) c.differential.set(static_cast<std::size_t>(yi), static_cast<std::size_t>(xi));
            }
        }
    }
    return c;
}

// Gradings used to split homology: preserved Alexander axes (doubled) then Maslov.
inline std::vector<long long> block_key(const GradedComplex& c, int g) {
    std::vector<long long> k;
    for (int a : c.axes) k.push_back(c.gradings.alexander2[g][a]);
    return k;
}

struct HomologyGroup {
    std::vector<long long> alexander2;  // on the preserved axes
    long long maslov = 0;
    int rank = 0;
    std::vector<BitVec> representatives;
};

struct HomologyResult {
    std::vector<HomologyGroup> groups;  // only nonzero ranks, sorted by grading
    int total = 0;
};

inline void check_square_zero(const GradedComplex& c) {
    auto dd = c.differential * c.differential;
    for (std::size_t j = 0; j < dd.ncols(); ++j)
        if (dd.cols[j].any())
            fail("DifferentialNotSquareZero", "d(d(" + c.gradings.names[j] + ")) != 0");
}

// Homology of a subcomplex spanned by the given generators, split by Maslov grading.
inline std::vector<HomologyGroup> block_homology(const GradedComplex& c, const std::vector<int>& block) {
    const std::size_t n = c.size();
    std::map<long long, std::vector<int>> by_m;
    for (int g : block) by_m[c.gradings.maslov[g]].push_back(g);
    std::vector<HomologyGroup> out;
    for (auto& [m, gs] : by_m) {
        // cycles in degree m
        std::vector<BitVec> images;
        for (int g : gs) images.push_back(c.differential.cols[g]);
        auto ker = kernel(images, n);
        EchelonBasis span(n, 0);
        auto it = by_m.find(m + 1);
        if (it != by_m.end())
            for (int g : it->second) span.insert(c.differential.cols[g]);
        HomologyGroup hg;
        hg.maslov = m;
        for (auto& comb : ker) {
            BitVec z(n);
            for (auto i : comb.ones()) z.set(static_cast<std::size_t>(gs[i]));
            if (span.insert(z)) hg.representatives.push_back(z);
        }
        hg.rank = static_cast<int>(hg.representatives.size());
        if (hg.rank) out.push_back(std::move(hg));
    }
    return out;
}

inline HomologyResult homology(const GradedComplex& c) {
    check_square_zero(c);
    for (std::size_t x = 0; x < c.size(); ++x)
        for (auto y : c.differential.cols[x].ones()) {
            if (c.gradings.maslov[x] - c.gradings.maslov[y] != 1 ||
                block_key(c, static_cast<int>(x)) != block_key(c, static_cast<int>(y)))
                fail("GradingViolation", c.gradings.names[x] + " -> " + c.gradings.names[y]);
        }
    std::map<std::vector<long long>, std::vector<int>> blocks;
    for (int g = 0; g < static_cast<int>(c.size()); ++g) blocks[block_key(c, g)].push_back(g);
    HomologyResult res;
    for (auto& [key, gs] : blocks)
        for (auto& hg : block_homology(c, gs)) {
            hg.alexander2 = key;
            res.total += hg.rank;
            res.groups.push_back(std::move(hg));
        }
    return res;
}

inline std::string chain_to_string(const GradedComplex& c, const BitVec& v) {
    std::string s;
    for (auto i : v.ones()) {
        if (!s.empty()) s += " + ";
        s += c.gradings.names[i];
    }
    return s.empty() ? "0" : s;
}

// Ranks summed over Maslov gradings, keyed by the preserved Alexander gradings (doubled).
inline std::map<std::vector<long long>, int> alexander_ranks(const HomologyResult& h) {
    std::map<std::vector<long long>, int> out;
    for (auto& g : h.groups) out[g.alexander2] += g.rank;
    return out;
}

}  // namespace hfk
