// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "generators.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace hfk;

namespace {

struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }

    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream s;
            s << what << " (got " << got << ", want " << want << ")";
            failures.push_back(s.str());
        }
    }
};

GradingRanks ranks(std::initializer_list<std::pair<std::vector<long long>, int>> list) {
    GradingRanks out;
    for (auto& [k, v] : list) out[k] = v;
    return out;
}

int total(const GradingRanks& r) {
    int s = 0;
    for (auto& [k, v] : r) s += v;
    return s;
}

std::vector<int> page_totals_of(const TateResult& res) {
    std::vector<int> out;
    for (auto& p : res.pages) out.push_back(p.total);
    return out;
}

std::string show(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

const PairAnalysis& pair(const std::string& fam) {
    static std::map<std::string, PairAnalysis> cache;
    auto it = cache.find(fam);
    if (it == cache.end())
        it = cache.emplace(fam, analyze_pair(builtin_diagram(fam + "-quotient"), builtin_diagram(fam + "-cover"))).first;
    return it->second;
}

// A chain is zero on page r when its part in every block is.
bool zero_on_page(const TateComplex& tc, const TateResult& res, int r, const BitVec& v) {
    std::map<std::vector<long long>, BitVec> parts;
    for (auto g : v.ones()) {
        auto [it, fresh] = parts.try_emplace(tc.keys[g], tc.size());
        it->second.set(g);
    }
    for (auto& [k, part] : parts)
        if (!same_class(tc, res, r, part, BitVec(tc.size()))) return false;
    return true;
}

// Whether the chains survive to page r and stay linearly independent there.
bool independent_on_page(const TateComplex& tc, const TateResult& res, int r, const std::vector<BitVec>& chains) {
    for (auto& c : chains)
        if (!page_differential(tc, res, r, c)) return false;
    for (unsigned mask = 1; mask < (1u << chains.size()); ++mask) {
        BitVec sum(tc.size());
        for (std::size_t i = 0; i < chains.size(); ++i)
            if (mask >> i & 1) sum ^= chains[i];
        if (zero_on_page(tc, res, r, sum)) return false;
    }
    return true;
}

std::vector<long long> pinned_key(const TateComplex& tc, const AbsolutePinning& pin, int g) {
    auto k = tc.keys[static_cast<std::size_t>(g)];
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += pin.shift2[i];
    return k;
}

int index_of(const TateComplex& tc, const std::string& name) {
    for (std::size_t i = 0; i < tc.names.size(); ++i)
        if (tc.names[i] == name) return static_cast<int>(i);
    fail("UnknownGenerator", name);
}

int page_d_rank(const TatePage& p) {
    int s = 0;
    for (auto& b : p.blocks) s += b.d_rank;
    return s;
}

void criterion1(Check& c) {
    const std::map<std::string, std::size_t> want = {
        {"unknot-quotient", 4}, {"unknot-cover", 8}, {"trefoil-quotient", 12}, {"trefoil-cover", 72}};
    for (auto& [name, n] : want) c.equal(enumerate_generators(builtin_diagram(name)).size(), n, name + " generators");
}

void criterion2(Check& c) {
    const auto& a = pair("unknot");
    c.expect(a.quotient_link.complex.disk_counts.empty(), "quotient link differential is nonzero");
    const auto& t = a.tate_link;
    c.equal(show(page_totals_of(t.result)), show({8, 4}), "link page totals");
    c.equal(t.result.e_infinity, 4, "E_inf rank");
    const std::map<std::string, std::vector<long long>> classes = {
        {"a^1a^2", {1, 1}}, {"b^1b^2", {-3, 1}}, {"c^1c^2", {-3, -1}}, {"e^1e^2", {1, -1}}};
    std::vector<BitVec> chains;
    for (auto& [name, g] : classes) {
        chains.push_back(chain_of(t.complex, {name}));
        c.expect(pinned_key(t.complex, a.cover_link.pin, index_of(t.complex, name)) == g, name + " grading");
    }
    c.expect(independent_on_page(t.complex, t.result, 2, chains), "total lifts do not span E_2");
    c.expect(t.einf == ranks({{{-3, -1}, 1}, {{-3, 1}, 1}, {{1, -1}, 1}, {{1, 1}, 1}}), "E_inf grading table");
}

void criterion3(Check& c) {
    const auto& a = pair("unknot");
    std::map<std::pair<std::string, std::string>, int> got;
    const auto& q = a.quotient_knot.complex;
    for (auto& [k, n] : q.disk_counts) got[{q.gradings.names[k.first], q.gradings.names[k.second]}] = n;
    c.expect(got == (std::map<std::pair<std::string, std::string>, int>{{{"b", "c"}, 1}, {{"a", "e"}, 2}}),
             "quotient knot disk counts");
    const auto& t = a.tate_knot;
    c.equal(show(page_totals_of(t.result)), show({4, 4, 2}), "knot page totals");
    c.equal(t.result.e_infinity, 2, "E_inf rank");
    auto z = chain_of(t.complex, {"c^1e^2"});
    auto d2 = page_differential(t.complex, t.result, 2, z);
    c.expect(d2.has_value(), "[c^1e^2] does not reach E_2");
    if (d2) {
        c.expect(!zero_on_page(t.complex, t.result, 2, *d2), "d_2[c^1e^2] is zero");
        c.expect(zero_on_page(t.complex, t.result, 2, *d2 ^ chain_of(t.complex, {"a^1b^2", "b^1a^2"})),
                 "d_2[c^1e^2] is not [a^1b^2 + b^1a^2]");
    }
    // the theta-power of d_r is r, so the first nonzero differential here shifts by theta^2
    c.equal(page_d_rank(t.result.pages.at(0)), 0, "d_1 rank");
    c.expect(page_d_rank(t.result.pages.at(1)) > 0, "d_2 vanishes");
}

void criterion4(Check& c) {
    const auto& a = pair("trefoil");
    const auto& t = a.tate_link;
    c.equal(t.result.pages.front().total, 24, "E_1 rank");
    c.expect(t.e1 == ranks({{{-7, 1}, 1}, {{-7, 3}, 1}, {{-5, 1}, 2}, {{-5, 3}, 2}, {{-3, -1}, 1}, {{-3, 1}, 2},
                            {{-3, 3}, 1}, {{-1, -1}, 2}, {{-1, 1}, 2}, {{1, -3}, 1}, {{1, -1}, 2}, {{1, 1}, 1},
                            {{3, -3}, 2}, {{3, -1}, 2}, {{5, -3}, 1}, {{5, -1}, 1}}),
             "E_1 grading distribution");
    c.equal(show(page_totals_of(t.result)), show({24, 12}), "link page totals");
    c.equal(t.result.e_infinity, 12, "E_inf rank");
    c.equal(total(a.quotient_link.pinned), 12, "quotient homology rank");
    int matched = 0;
    for (auto& row : a.correspondence_link.rows) {
        c.expect(row.e_infinity_rank == row.quotient_rank, "row rank mismatch");
        c.expect(row.cover[0] == 2 * (row.quotient[0] - 1) + 1 && row.cover[1] == row.quotient[1], "row grading map");
        matched += row.e_infinity_rank;
    }
    c.equal(matched, 12, "ranks matched through the correspondence");
}

void criterion5(Check& c) {
    const auto& a = pair("trefoil");
    const auto& t = a.tate_knot;
    c.equal(show(page_totals_of(t.result)), show({12, 4, 2}), "knot page totals");
    std::vector<BitVec> chains;
    for (auto names : std::vector<std::vector<std::string>>{{"a^1g^2"}, {"h^1m^2", "m^1h^2"}, {"m^1m^2"}, {"a^1a^2"}})
        chains.push_back(chain_of(t.complex, names));
    c.expect(independent_on_page(t.complex, t.result, 2, chains), "listed classes do not span E_2");
    c.equal(page_d_rank(t.result.pages.at(1)), 1, "d_2 rank");
    c.equal(t.result.e_infinity, 2, "E_inf rank");
    c.expect(independent_on_page(t.complex, t.result, 3, {chains[2], chains[3]}), "[m^1m^2], [a^1a^2] do not span E_3");
    c.expect(t.einf == ranks({{{2}, 2}}), "E_inf not concentrated at A_1 = 1");
}

void criterion6(Check& c) {
    for (auto fam : {"unknot", "trefoil"}) c.expect(pair(fam).murasugi.holds, std::string(fam) + " pipeline congruence");
    auto m = murasugi_check(parse_laurent("t-1+t^-1"), parse_laurent("1"), {2, 2, 1, 3});
    c.expect(m.holds, "standalone check on the trefoil");
    c.expect(m.rhs == parse_laurent("1+t+t^2").mod(2), "right side is not 1+t+t^2 mod 2");
}

void criterion7(Check& c) {
    const auto& r = pair("trefoil").topology;
    c.equal(r.genus_cover, 1, "cover genus");
    c.equal(r.genus_quotient, 0, "quotient genus");
    c.equal(r.lambda, 3, "lambda");
    c.expect(r.edmonds_sharp, "Edmonds not sharp");
    c.expect(r.transfer_confirmed, "fibredness transfer");
    c.equal(r.cover_top_rank, 2, "cover top rank");
    c.equal(r.einf_top_rank, 2, "E_inf top rank");
    c.equal(r.quotient_top_rank, 2, "quotient top rank");
}

bool nice_both(const HeegaardDiagram& d) {
    return check_niceness(d, Flavor::link).nice() && check_niceness(d, Flavor::knot).nice();
}

bool square_zero(const GradedComplex& g) {
    auto dd = oracle::to_dense(g.differential);
    return oracle::is_zero(oracle::multiply(dd, dd, g.size(), g.size()));
}

// Chain map, grading preservation and (1 + tau)^2 = 0 for a cover complex.
void check_involution(Check& c, const GradedComplex& g, const Involution& t, const std::string& where) {
    const std::size_t n = g.size();
    auto dd = oracle::to_dense(g.differential);
    auto pm = oracle::to_dense(permutation_matrix(t.perm));
    c.expect(oracle::multiply(dd, pm, n, n) == oracle::multiply(pm, dd, n, n), where + ": tau is not a chain map");
    auto one_plus = pm;
    for (std::size_t i = 0; i < n; ++i) one_plus[i][i] ^= 1;
    c.expect(oracle::is_zero(oracle::multiply(one_plus, one_plus, n, n)), where + ": (1+tau)^2 != 0");
    for (std::size_t i = 0; i < n; ++i)
        c.expect(g.gradings.maslov[i] == g.gradings.maslov[t.perm[i]] &&
                     g.gradings.alexander2[i] == g.gradings.alexander2[t.perm[i]],
                 where + ": tau moves a grading");
}

void criterion8(Check& c) {
    gen::Rng rng(2024);
    // exhaustive on the built-ins
    for (auto& name : builtin_names())
        for (auto f : {Flavor::link, Flavor::knot})
            c.expect(square_zero(differential(builtin_diagram(name), f)), name + ": d^2 != 0");
    for (auto fam : {"unknot", "trefoil"}) {
        auto ed = builtin_equivariant(fam);
        for (auto f : {Flavor::link, Flavor::knot}) {
            auto g = differential(ed.cover, f);
            check_involution(c, g, involution_map(ed, g), fam);
        }
    }
    auto tref = builtin_equivariant("trefoil");
    auto cover_gens = enumerate_generators(tref.cover);
    c.equal(cover_gens.size(), 72u, "trefoil cover generators");
    for (auto& s : cover_gens) {
        auto parts = partition_projection(tref, s);
        std::multiset<int> joined, proj;
        for (auto& p : parts) joined.insert(p.points.begin(), p.points.end());
        for (int q : s.points) proj.insert(tref.point_proj[q]);
        c.expect(parts.size() == 2 && joined == proj, "partition fails");
    }

    // randomized: nice finger-moved quotients and their covers
    int cases = 0;
    for (int trial = 0; trial < 2000 && cases < 100; ++trial) {
        auto fam = trial % 2 ? "trefoil-quotient" : "unknot-quotient";
        auto e = gen::random_finger_move(builtin_diagram(fam), rng, "f");
        if (!e || !nice_both(*e)) continue;
        auto ed = branched_double_cover(*e, "z0", "w0");
        if (!nice_both(ed.cover)) continue;
        ++cases;
        const std::string where = std::string(fam) + " move " + std::to_string(trial);
        for (auto f : {Flavor::link, Flavor::knot}) {
            c.expect(square_zero(differential(*e, f)), where + ": quotient d^2 != 0");
            auto g = differential(ed.cover, f);
            c.expect(square_zero(g), where + ": cover d^2 != 0");
            check_involution(c, g, involution_map(ed, g), where);
        }
        auto gens = enumerate_generators(*e);
        const int n = static_cast<int>(gens.size());
        auto pick = [&]() -> const Generator& { return gens[static_cast<std::size_t>(gen::uniform(rng, 0, n - 1))]; };
        const auto &x = pick(), &y = pick(), &z = pick();

        // index additivity
        auto dxy = find_domain(*e, x, y), dyz = find_domain(*e, y, z);
        IntVec sum(dxy.mult.size());
        for (std::size_t r = 0; r < sum.size(); ++r) sum[r] = dxy.mult[r] + dyz.mult[r];
        c.expect(oracle::lipshitz_index(*e, sum, x, z) ==
                     oracle::lipshitz_index(*e, dxy.mult, x, y) + oracle::lipshitz_index(*e, dyz.mult, y, z),
                 where + ": index not additive");

        // adding periodic domains changes no grading
        IntVec moved = dxy.mult;
        for (auto& b : periodic_domains(*e, all_basepoints(*e))) {
            long long k = gen::uniform(rng, -3, 3);
            for (std::size_t r = 0; r < moved.size(); ++r) moved[r] += k * b[r];
        }
        c.expect(oracle::lipshitz_index(*e, moved, x, y) == oracle::lipshitz_index(*e, dxy.mult, x, y) &&
                     alexander_drop(*e, moved) == alexander_drop(*e, dxy.mult),
                 where + ": periodic domain changes a grading");

        // lifted index law
        auto lifted = lift_domain(ed, dxy);
        long long branch = multiplicity_at(*e, dxy.mult, ed.z0) + multiplicity_at(*e, dxy.mult, ed.w0);
        c.expect(oracle::lipshitz_index(ed.cover, lifted.mult, lifted.from, lifted.to) ==
                     Rational(2) * oracle::lipshitz_index(*e, dxy.mult, x, y) - Rational(branch),
                 where + ": lifted index law");

        // total-lift grading doubling
        auto tq = relative_gradings(ed.quotient);
        auto tc = relative_gradings(ed.cover);
        int i = *find_generator(tq.generators, x), j = *find_generator(tq.generators, y);
        int li = *find_generator(tc.generators, total_lift(ed, x));
        int lj = *find_generator(tc.generators, total_lift(ed, y));
        long long da1 = tq.alexander2[i][0] - tq.alexander2[j][0], da2 = tq.alexander2[i][1] - tq.alexander2[j][1];
        c.expect(tc.alexander2[li][0] - tc.alexander2[lj][0] == 2 * da1 &&
                     tc.alexander2[li][1] - tc.alexander2[lj][1] == da2 &&
                     tc.maslov[li] - tc.maslov[lj] == 2 * (tq.maslov[i] - tq.maslov[j]) - da2 / 2,
                 where + ": total-lift law");
    }
    c.expect(cases >= 100, "only " + std::to_string(cases) + " finger-move cases");

    // cascade against the Smith form and the filtered-complex oracle on random triples
    for (int trial = 0; trial < 200; ++trial) {
        auto t = gen::random_triple(rng, 20);
        auto res = tate_pages(t.tc);
        auto blocks = oracle::blocks_of(t.tc);
        bool ok = blocks.size() == res.block_e_infinity.size();
        for (std::size_t b = 0; ok && b < blocks.size(); ++b)
            ok = res.block_e_infinity[b] == oracle::stable_rank(blocks[b], rng);
        ok = ok && localized_rank(total_differential(t.tc)) == res.e_infinity;
        for (auto& page : res.pages) {
            std::vector<int> got;
            for (auto& b : page.blocks) got.push_back(b.rank);
            ok = ok && got == oracle::page_ranks(t.tc, page.r);
        }
        c.expect(ok, "random triple " + std::to_string(trial) + ": cascade disagrees");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"generator counts 4/8/12/72", criterion1},
        {"unknot link flavor: E1 8, E2 = E_inf 4 on the total lifts", criterion2},
        {"unknot knot flavor: disk counts, d2[c^1e^2], E3 = E_inf 2", criterion3},
        {"trefoil link flavor: E1 24, E_inf 12 matching the quotient", criterion4},
        {"trefoil knot flavor: pages 12/4/2, one d2, E_inf at A1 = 1", criterion5},
        {"Murasugi congruence end to end and standalone", criterion6},
        {"Edmonds report and fibredness transfer", criterion7},
        {"property suites", criterion8},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = c.failures.empty();
        all = all && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << static_cast<int>(secs * 1000) << " ms)\n";
        for (std::size_t k = 0; k < c.failures.size() && k < 10; ++k) std::cout << "  " << c.failures[k] << "\n";
    }
    return all ? 0 : 1;
}
