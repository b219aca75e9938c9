#pragma once

#include "hfk/complex.hpp"
#include "hfk/invariants.hpp"
#include "hfk/json_io.hpp"
#include "hfk/tate.hpp"

#include <string>
#include <vector>

namespace hfk {

inline constexpr const char* kSchema = "hfk/1";

struct FlavorAnalysis {
    GradedComplex complex;
    HomologyResult homology;
    AbsolutePinning pin;
    GradingRanks pinned;
};

struct TateAnalysis {
    TateComplex complex;
    TateResult result;
    GradingRanks e1;    // pinned
    GradingRanks einf;  // pinned
};

// The whole pipeline for a quotient diagram and its equivariant cover.
struct PairAnalysis {
    HeegaardDiagram quotient, cover;
    int lambda = 1;
    FlavorAnalysis quotient_link, quotient_knot, cover_link, cover_knot;
    TateAnalysis tate_link, tate_knot;
    LaurentPoly chi_quotient{{"t1", "t2"}}, chi_cover{{"t1", "t2"}};
    LaurentPoly delta_quotient_link{{"t1", "t2"}}, delta_cover_link{{"t1", "t2"}};
    LaurentPoly delta_quotient{{"t"}}, delta_cover{{"t"}};
    MurasugiResult murasugi;
    CorrespondenceReport correspondence_link, correspondence_knot;
    TopologyReport topology;
};

inline FlavorAnalysis analyze_flavor(const HeegaardDiagram& d, Flavor f, std::optional<int> lambda) {
    FlavorAnalysis a;
    a.complex = differential(d, f);
    a.homology = homology(a.complex);
    a.pin = pin_absolute(d, a.complex, a.homology, lambda);
    a.pinned = pinned_ranks(homology_ranks(a.homology), a.pin);
    return a;
}

inline TateAnalysis analyze_tate(const HeegaardDiagram& cover, const FlavorAnalysis& fa) {
    TateAnalysis t;
    t.complex = tate_complex(fa.complex, involution_map(cover, fa.complex));
    t.result = tate_pages(t.complex);
    t.e1 = pinned_ranks(block_ranks(t.result.pages.front()), fa.pin);
    t.einf = pinned_ranks(block_ranks(t.result.pages.back()), fa.pin);
    return t;
}

inline int pairs_on(const HeegaardDiagram& d, int component) {
    return static_cast<int>(d.components.at(component).pairs.size());
}

inline PairAnalysis analyze_pair(const HeegaardDiagram& quotient, const HeegaardDiagram& cover) {
    if (quotient.components.size() != 2 || cover.components.size() != 2)
        fail("InvalidDiagram", "the pipeline needs two-component links (knot and axis)");
    PairAnalysis a;
    a.quotient = quotient;
    a.cover = cover;
    // A_1 is the first axis throughout, so the knot must come before the axis U
    if (free_component(quotient) != 1 || free_component(cover) != 1)
        fail("InvalidDiagram", "list the knot component before the axis U");

    // lambda is the linking number of the quotient link, read off its Alexander polynomial
    auto ql = differential(quotient, Flavor::link);
    a.chi_quotient = euler_characteristic(ql);
    std::vector<int> qpairs{pairs_on(quotient, 0), pairs_on(quotient, 1)};
    a.delta_quotient_link = alexander_from_euler(a.chi_quotient, qpairs);
    a.lambda = linking_from_alexander(a.delta_quotient_link);

    a.quotient_link = analyze_flavor(quotient, Flavor::link, a.lambda);
    a.quotient_knot = analyze_flavor(quotient, Flavor::knot, std::nullopt);
    a.cover_link = analyze_flavor(cover, Flavor::link, a.lambda);
    a.cover_knot = analyze_flavor(cover, Flavor::knot, std::nullopt);

    a.chi_cover = euler_characteristic(a.cover_link.complex);
    std::vector<int> cpairs{pairs_on(cover, 0), pairs_on(cover, 1)};
    a.delta_cover_link = alexander_from_euler(a.chi_cover, cpairs);
    if (linking_from_alexander(a.delta_cover_link) != a.lambda)
        fail("CorrespondenceViolation", "cover and quotient linking numbers differ");
    a.delta_quotient = specialize_two_component(a.delta_quotient_link, a.lambda);
    a.delta_cover = specialize_two_component(a.delta_cover_link, a.lambda);
    a.murasugi = murasugi_check(a.delta_cover, a.delta_quotient, {2, 2, 1, a.lambda});

    a.tate_link = analyze_tate(cover, a.cover_link);
    a.tate_knot = analyze_tate(cover, a.cover_knot);
    a.correspondence_link =
        grading_correspondence(a.tate_link.e1, a.tate_link.einf, a.quotient_link.pinned, a.lambda, Flavor::link);
    a.correspondence_knot =
        grading_correspondence(a.tate_knot.e1, a.tate_knot.einf, a.quotient_knot.pinned, a.lambda, Flavor::knot);

    TopologyInputs in;
    in.cover_knot = a.cover_knot.pinned;
    in.quotient_knot = a.quotient_knot.pinned;
    in.cover_einf = a.tate_knot.einf;
    in.cover_link = a.cover_link.pinned;
    in.quotient_link = a.quotient_link.pinned;
    in.cover_extra_pairs = pairs_on(cover, 0) - 1;
    in.quotient_extra_pairs = pairs_on(quotient, 0) - 1;
    in.lambda = a.lambda;
    a.topology = topology_report(in);
    return a;
}

// ----- JSON -----

inline json halves_json(const std::vector<long long>& v) {
    json out = json::array();
    for (auto x : v) out.push_back(half_to_string(static_cast<int>(x)));
    return out;
}

inline json poly_json(const LaurentPoly& p) {
    json terms = json::array();
    for (auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", c}});
    return {{"variables", p.vars()}, {"text", p.to_string()}, {"terms", terms}};
}

inline json ranks_json(const GradingRanks& r) {
    json out = json::array();
    for (auto& [g, k] : r) out.push_back({{"grading", halves_json(g)}, {"rank", k}});
    return out;
}

inline json gradings_json(const HeegaardDiagram& d, const GradedComplex& c) {
    json gens = json::array();
    for (std::size_t g = 0; g < c.size(); ++g) {
        std::vector<long long> a = c.gradings.alexander2[g];
        gens.push_back({{"generator", c.gradings.names[g]}, {"maslov", c.gradings.maslov[g]}, {"alexander", halves_json(a)}});
    }
    return {{"diagram", d.name},
            {"base_generator", c.gradings.names[c.gradings.base]},
            {"components", c.gradings.component_names},
            {"generators", gens}};
}

inline json homology_json(const HeegaardDiagram& d, const FlavorAnalysis& fa) {
    const auto& c = fa.complex;
    json disks = json::array();
    for (auto& [k, n] : c.disk_counts)
        disks.push_back({{"from", c.gradings.names[k.first]}, {"to", c.gradings.names[k.second]}, {"count", n}});
    json groups = json::array();
    for (auto& g : fa.homology.groups) {
        std::vector<long long> pinned = g.alexander2;
        for (std::size_t i = 0; i < pinned.size(); ++i) pinned[i] += fa.pin.shift2[i];
        json reps = json::array();
        for (auto& r : g.representatives) reps.push_back(chain_to_string(c, r));
        groups.push_back({{"alexander", halves_json(pinned)},
                          {"maslov_relative", g.maslov},
                          {"rank", g.rank},
                          {"representatives", reps}});
    }
    std::vector<std::string> axes;
    for (int a : c.axes) axes.push_back(d.components[a].name);
    return {{"schema", kSchema},
            {"diagram", d.name},
            {"flavor", flavor_name(c.flavor)},
            {"generators", c.size()},
            {"axes", axes},
            {"pinning_shift", halves_json(fa.pin.shift2)},
            {"disks", disks},
            {"total_rank", fa.homology.total},
            {"groups", groups}};
}

inline json pages_json(const TateComplex& tc, const TateResult& res, const std::vector<long long>& shift2) {
    json pages = json::array();
    for (auto& p : res.pages) {
        json blocks = json::array();
        for (auto& b : p.blocks) {
            std::vector<long long> g = b.key;
            for (std::size_t i = 0; i < g.size() && i < shift2.size(); ++i) g[i] += shift2[i];
            json reps = json::array();
            for (auto& r : b.representatives) {
                std::string s;
                for (auto i : r.ones()) s += (s.empty() ? "" : " + ") + tc.names[i];
                reps.push_back(s);
            }
            blocks.push_back({{"grading", halves_json(g)}, {"rank", b.rank}, {"d_r_rank", b.d_rank}, {"representatives", reps}});
        }
        pages.push_back({{"r", p.r}, {"total", p.total}, {"blocks", blocks}, {"stabilized", p.stabilized},
                         {"e_infinity_total", res.e_infinity}});
    }
    return pages;
}

inline json correspondence_json(const CorrespondenceReport& r) {
    json rows = json::array();
    for (auto& row : r.rows)
        rows.push_back({{"cover", halves_json(row.cover)},
                        {"quotient", halves_json(row.quotient)},
                        {"e1_rank", row.e1_rank},
                        {"e_infinity_rank", row.e_infinity_rank},
                        {"quotient_rank", row.quotient_rank}});
    return {{"rows", rows}, {"rank_inequality", r.rank_inequality}};
}

inline json topology_json(const TopologyReport& t) {
    json j = {{"genus_cover", t.genus_cover},
              {"genus_quotient", t.genus_quotient},
              {"lambda", t.lambda},
              {"edmonds_holds", t.edmonds_holds},
              {"edmonds_sharp", t.edmonds_sharp},
              {"cover_top_rank", t.cover_top_rank},
              {"quotient_top_rank", t.quotient_top_rank},
              {"e_infinity_top_rank", t.einf_top_rank},
              {"cover_fibred", t.cover_fibred},
              {"quotient_fibred", t.quotient_fibred},
              {"fibredness_transfer_applies", t.transfer_applies},
              {"fibredness_transfer_confirmed", t.transfer_confirmed},
              {"inconsistencies", t.inconsistencies}};
    if (t.thurston_cover_k)
        j["thurston_norm"] = {{"knot", {{"cover", *t.thurston_cover_k}, {"quotient", *t.thurston_quotient_k}}}};
    if (t.thurston_cover_u)
        j["thurston_norm"]["axis"] = {{"cover", *t.thurston_cover_u}, {"quotient", *t.thurston_quotient_u}};
    return j;
}

inline json murasugi_json(const MurasugiResult& m) {
    return {{"holds", m.holds},
            {"witness_shift", half_to_string(static_cast<int>(m.witness_shift2))},
            {"sign", m.sign},
            {"cover_mod_p", m.lhs.to_string()},
            {"rhs_mod_p", m.rhs.to_string()}};
}

inline json full_report_json(const PairAnalysis& a) {
    return {{"schema", kSchema},
            {"quotient", a.quotient.name},
            {"cover", a.cover.name},
            {"lambda", a.lambda},
            {"euler_characteristic", {{"quotient", poly_json(a.chi_quotient)}, {"cover", poly_json(a.chi_cover)}}},
            {"alexander",
             {{"quotient_link", poly_json(a.delta_quotient_link)},
              {"cover_link", poly_json(a.delta_cover_link)},
              {"quotient_knot", poly_json(a.delta_quotient)},
              {"cover_knot", poly_json(a.delta_cover)}}},
            {"murasugi", murasugi_json(a.murasugi)},
            {"correspondence",
             {{"link", correspondence_json(a.correspondence_link)}, {"knot", correspondence_json(a.correspondence_knot)}}},
            {"topology", topology_json(a.topology)}};
}

inline std::vector<int> page_totals(const TateResult& r) {
    std::vector<int> out;
    for (auto& p : r.pages) out.push_back(p.total);
    return out;
}

// Compact summary compared against the stored expectations of `examples run`.
inline json summary_json(const std::string& family, const PairAnalysis& a) {
    return {{"family", family},
            {"generators", {{"quotient", a.quotient_link.complex.size()}, {"cover", a.cover_link.complex.size()}}},
            {"lambda", a.lambda},
            {"link",
             {{"quotient_rank", a.quotient_link.homology.total},
              {"page_totals", page_totals(a.tate_link.result)},
              {"e_infinity", a.tate_link.result.e_infinity}}},
            {"knot",
             {{"quotient_rank", a.quotient_knot.homology.total},
              {"page_totals", page_totals(a.tate_knot.result)},
              {"e_infinity", a.tate_knot.result.e_infinity}}},
            {"murasugi", a.murasugi.holds},
            {"genus", {{"cover", a.topology.genus_cover}, {"quotient", a.topology.genus_quotient}}},
            {"edmonds", {{"holds", a.topology.edmonds_holds}, {"sharp", a.topology.edmonds_sharp}}},
            {"fibred", {{"cover", a.topology.cover_fibred}, {"quotient", a.topology.quotient_fibred}}}};
}

// Paths in `expected` whose values differ from `actual`.
inline void json_diff(const json& expected, const json& actual, const std::string& path, std::vector<std::string>& out) {
    if (expected.is_object()) {
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            std::string p = path + "/" + it.key();
            if (!actual.is_object() || !actual.contains(it.key()))
                out.push_back(p + ": missing");
            else
                json_diff(it.value(), actual.at(it.key()), p, out);
        }
        return;
    }
    if (expected != actual) out.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
}

}  // namespace hfk
