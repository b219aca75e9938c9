#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hfk;

namespace {

std::string tag_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.tag();
    }
    return "";
}

// One-variable polynomials as doubled exponent -> coefficient, for the congruence oracle.
using Poly1 = std::map<int, long long>;

Poly1 to_poly1(const LaurentPoly& p) {
    Poly1 out;
    for (auto& [e, c] : p.terms()) out[e.at(0)] += c;
    return out;
}

Poly1 mul(const Poly1& a, const Poly1& b) {
    Poly1 out;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) out[ea + eb] += ca * cb;
    return out;
}

Poly1 reduce(const Poly1& a, long long p) {
    Poly1 out;
    for (auto& [e, c] : a)
        if (long long r = ((c % p) + p) % p) out[e] = r;
    return out;
}

// Whether cover = +-t^i * S^(q-1) * quotient^q mod p, by trying every shift.
bool congruence_oracle(const LaurentPoly& cover, const LaurentPoly& quotient, int q, int p, int lambda) {
    Poly1 s;
    for (int i = 0; i < lambda; ++i) s[2 * i] = 1;
    Poly1 rhs = {{0, 1}};
    for (int i = 0; i < q - 1; ++i) rhs = mul(rhs, s);
    for (int i = 0; i < q; ++i) rhs = mul(rhs, to_poly1(quotient));
    rhs = reduce(rhs, p);
    Poly1 lhs = reduce(to_poly1(cover), p);
    if (lhs.empty() || rhs.empty()) return lhs.empty() && rhs.empty();
    for (int sign : {1, -1})
        for (int shift = -200; shift <= 200; ++shift) {
            Poly1 moved;
            for (auto& [e, c] : rhs) moved[e + shift] = c * sign;
            if (reduce(moved, p) == lhs) return true;
        }
    return false;
}

// Graded Euler characteristic of the homology, which must equal that of the chain complex.
LaurentPoly euler_of_homology(const GradedComplex& c) {
    const std::size_t k = c.gradings.component_names.size();
    LaurentPoly chi(variable_names(k));
    long long m0 = c.gradings.maslov[c.gradings.base];
    for (auto& [key, rank] : oracle::graded_homology(c)) {
        LaurentPoly::Exps e(key.first.begin(), key.first.end());
        chi.add_term(e, ((key.second - m0) % 2 == 0 ? 1 : -1) * rank);
    }
    return chi;
}

LaurentPoly rename_t(const LaurentPoly& p) {
    LaurentPoly out({"t"});
    for (auto& [e, c] : p.terms()) out.add_term(e, c);
    return out;
}

GradingRanks ranks(std::initializer_list<std::pair<std::vector<long long>, int>> list) {
    GradingRanks out;
    for (auto& [k, v] : list) out[k] = v;
    return out;
}

const PairAnalysis& trefoil() {
    static const PairAnalysis a = analyze_pair(builtin_diagram("trefoil-quotient"), builtin_diagram("trefoil-cover"));
    return a;
}

const PairAnalysis& unknot() {
    static const PairAnalysis a = analyze_pair(builtin_diagram("unknot-quotient"), builtin_diagram("unknot-cover"));
    return a;
}

}  // namespace

TEST(EulerCharacteristic, EqualsThatOfHomology) {
    for (auto& name : builtin_names()) {
        auto c = differential(builtin_diagram(name), Flavor::link);
        EXPECT_EQ(euler_characteristic(c), euler_of_homology(c)) << name;
    }
}

TEST(EulerCharacteristic, UnknotQuotientIsTheHopfLink) {
    auto c = differential(builtin_diagram("unknot-quotient"), Flavor::link);
    auto chi = euler_characteristic(c);
    std::vector<std::string> v = {"t1", "t2"};
    EXPECT_TRUE(equivalent(chi, one_minus_inverse(v, 0) * one_minus_inverse(v, 1)));
    EXPECT_EQ(alexander_from_euler(chi, {1, 1}), LaurentPoly::constant(v, 1));
    EXPECT_EQ(linking_from_alexander(alexander_from_euler(chi, {1, 1})), 1);
}

TEST(Alexander, TrefoilPair) {
    const auto& a = trefoil();
    EXPECT_EQ(a.lambda, 3);
    // the cover's two-variable polynomial at t2 = 1
    auto at_one = rename_t(a.delta_cover_link.specialize_one(1));
    EXPECT_TRUE(equivalent(at_one, geometric_sum(3) * parse_laurent("t-1+t^-1")));
    EXPECT_TRUE(equivalent(a.delta_cover, parse_laurent("t^2-t+1")));
    EXPECT_TRUE(equivalent(a.delta_quotient, parse_laurent("1")));
    EXPECT_EQ(linking_from_alexander(a.delta_cover_link), 3);
}

TEST(Alexander, UnknotPair) {
    const auto& a = unknot();
    EXPECT_EQ(a.lambda, 1);
    EXPECT_TRUE(equivalent(a.delta_cover, parse_laurent("1")));
    EXPECT_TRUE(equivalent(a.delta_quotient, parse_laurent("1")));
}

TEST(Alexander, SpecializeGuards) {
    EXPECT_EQ(tag_of([] { specialize_two_component(parse_laurent("t+1"), 1); }), "InvalidPolynomial");
    LaurentPoly two({"t1", "t2"});
    two.add_term({0, 0}, 1);
    EXPECT_EQ(tag_of([&] { specialize_two_component(two, 0); }), "InvalidConfig");
    // dividing by 1 + t + t^2 must be exact
    EXPECT_EQ(tag_of([&] { specialize_two_component(two, 3); }), "NotDivisible");
}

TEST(Murasugi, Examples) {
    auto trefoil_res = murasugi_check(parse_laurent("t-1+t^-1"), parse_laurent("1"), {2, 2, 1, 3});
    EXPECT_TRUE(trefoil_res.holds);
    EXPECT_TRUE(murasugi_check(parse_laurent("1"), parse_laurent("1"), {2, 2, 1, 1}).holds);
    // the unknot cannot doubly cover with lambda = 3: the right side is 1 + t + t^2 mod 2
    EXPECT_FALSE(murasugi_check(parse_laurent("1"), parse_laurent("1"), {2, 2, 1, 3}).holds);
}

TEST(Murasugi, ConfigGuards) {
    auto one = parse_laurent("1");
    EXPECT_EQ(tag_of([&] { murasugi_check(one, one, {4, 4, 1, 1}); }), "InvalidConfig");
    EXPECT_EQ(tag_of([&] { murasugi_check(one, one, {3, 2, 1, 1}); }), "InvalidConfig");
    EXPECT_EQ(tag_of([&] { murasugi_check(one, one, {2, 2, 0, 1}); }), "InvalidConfig");
    EXPECT_EQ(tag_of([&] { murasugi_check(one, one, {2, 2, 1, 2}); }), "InvalidConfig");
    EXPECT_NO_THROW(murasugi_check(one, one, {9, 3, 2, 5}));
}

TEST(Murasugi, AgreesWithBruteForceCongruence) {
    gen::Rng rng(61);
    const std::vector<std::array<int, 3>> configs = {{2, 2, 1}, {3, 3, 1}, {4, 2, 2}, {5, 5, 1}};
    int holds = 0, fails = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto cfg = configs[static_cast<std::size_t>(gen::uniform(rng, 0, 3))];
        int lambda = 2 * gen::uniform(rng, 0, 2) + 1;
        LaurentPoly quotient({"t"});
        for (int e = 0; e <= gen::uniform(rng, 0, 2); ++e) quotient.add_term({2 * e}, gen::uniform(rng, -2, 2));
        if (quotient.is_zero()) quotient.add_term({0}, 1);
        LaurentPoly cover({"t"});
        if (trial % 2 == 0) {
            // a cover built to satisfy the congruence, disguised by multiples of p and a unit
            cover = geometric_sum(lambda).pow(cfg[0] - 1) * quotient.pow(cfg[0]);
            int sign = gen::uniform(rng, 0, 1) ? 1 : -1;
            cover = cover.shifted({2 * gen::uniform(rng, -3, 3)});
            if (sign < 0) cover = -cover;
            for (int e = 0; e < 3; ++e) cover.add_term({2 * e}, cfg[1] * gen::uniform(rng, -2, 2));
        } else {
            for (int e = -2; e <= 2; ++e) cover.add_term({2 * e}, gen::uniform(rng, -3, 3));
        }
        bool want = congruence_oracle(cover, quotient, cfg[0], cfg[1], lambda);
        auto got = murasugi_check(cover, quotient, {cfg[0], cfg[1], cfg[2], lambda});
        EXPECT_EQ(got.holds, want) << cover.to_string() << " | " << quotient.to_string();
        (want ? holds : fails)++;
    }
    EXPECT_GE(holds, 50);
    EXPECT_GE(fails, 20);
}

TEST(Pinning, SymmetricRanksNeedNoShift) {
    auto pin = pin_absolute(ranks({{{-2}, 1}, {{0}, 2}, {{2}, 1}}), {0}, {1});
    EXPECT_EQ(pin.shift2, (std::vector<long long>{0}));
    auto moved = pin_absolute(ranks({{{4}, 1}, {{6}, 2}, {{8}, 1}}), {0}, {1});
    EXPECT_EQ(moved.shift2, (std::vector<long long>{-6}));
    // two basepoint pairs centre the ranks at -1/2
    auto two = pin_absolute(ranks({{{0}, 1}, {{2}, 1}}), {0}, {2});
    EXPECT_EQ(two.shift2, (std::vector<long long>{-2}));
}

TEST(Pinning, AsymmetricRanksAreRejected) {
    EXPECT_EQ(tag_of([] { pin_absolute(ranks({{{0}, 1}, {{2}, 2}}), {0}, {1}); }), "AsymmetricRanks");
    EXPECT_EQ(tag_of([] { pin_absolute(ranks({{{0}, 1}, {{1}, 1}}), {0}, {1}); }), "AsymmetricRanks");
    EXPECT_EQ(tag_of([] { pin_absolute(ranks({{{-1}, 1}, {{1}, 1}}), {0}, {1}, 2); }), "AsymmetricRanks");
    EXPECT_NO_THROW(pin_absolute(ranks({{{-1}, 1}, {{1}, 1}}), {0}, {1}, 3));
}

TEST(Pinning, TrefoilCoverLinkPages) {
    const auto& a = trefoil();
    EXPECT_EQ(a.tate_link.e1, ranks({{{-7, 1}, 1}, {{-7, 3}, 1}, {{-5, 1}, 2}, {{-5, 3}, 2}, {{-3, -1}, 1}, {{-3, 1}, 2},
                                     {{-3, 3}, 1}, {{-1, -1}, 2}, {{-1, 1}, 2}, {{1, -3}, 1}, {{1, -1}, 2}, {{1, 1}, 1},
                                     {{3, -3}, 2}, {{3, -1}, 2}, {{5, -3}, 1}, {{5, -1}, 1}}));
    EXPECT_EQ(a.tate_link.einf, ranks({{{-7, 1}, 1}, {{-7, 3}, 1}, {{-3, -1}, 1}, {{-3, 1}, 2}, {{-3, 3}, 1},
                                       {{1, -3}, 1}, {{1, -1}, 2}, {{1, 1}, 1}, {{5, -3}, 1}, {{5, -1}, 1}}));
    EXPECT_EQ(a.quotient_link.pinned, ranks({{{-3, 1}, 1}, {{-3, 3}, 1}, {{-1, -1}, 1}, {{-1, 1}, 2}, {{-1, 3}, 1},
                                             {{1, -3}, 1}, {{1, -1}, 2}, {{1, 1}, 1}, {{3, -3}, 1}, {{3, -1}, 1}}));
}

TEST(Pinning, KnotFlavor) {
    const auto& t = trefoil();
    EXPECT_EQ(t.cover_knot.pinned, ranks({{{-4}, 2}, {{-2}, 4}, {{0}, 4}, {{2}, 2}}));
    EXPECT_EQ(t.tate_knot.einf, ranks({{{2}, 2}}));
    EXPECT_EQ(t.quotient_knot.pinned, ranks({{{0}, 2}}));
    const auto& u = unknot();
    EXPECT_EQ(u.cover_knot.pinned, ranks({{{-2}, 2}, {{0}, 2}}));
    EXPECT_EQ(u.tate_knot.einf, ranks({{{0}, 2}}));
    EXPECT_EQ(u.cover_link.pinned, ranks({{{-3, -1}, 1}, {{-3, 1}, 1}, {{-1, -1}, 2}, {{-1, 1}, 2}, {{1, -1}, 1}, {{1, 1}, 1}}));
    EXPECT_EQ(u.tate_link.einf, ranks({{{-3, -1}, 1}, {{-3, 1}, 1}, {{1, -1}, 1}, {{1, 1}, 1}}));
}

TEST(Topology, TrefoilReport) {
    const auto& r = trefoil().topology;
    EXPECT_EQ(r.genus_cover, 1);
    EXPECT_EQ(r.genus_quotient, 0);
    EXPECT_TRUE(r.edmonds_holds);
    EXPECT_TRUE(r.edmonds_sharp);
    EXPECT_TRUE(r.cover_fibred);
    EXPECT_TRUE(r.quotient_fibred);
    EXPECT_TRUE(r.transfer_applies);
    EXPECT_TRUE(r.transfer_confirmed);
    EXPECT_EQ(r.thurston_cover_k, 4);
    EXPECT_EQ(r.thurston_quotient_k, 2);
    EXPECT_EQ(r.thurston_cover_u, 2);
    EXPECT_EQ(r.thurston_quotient_u, 2);
    EXPECT_TRUE(r.inconsistencies.empty());
}

TEST(Topology, UnknotReport) {
    const auto& r = unknot().topology;
    EXPECT_EQ(r.genus_cover, 0);
    EXPECT_EQ(r.genus_quotient, 0);
    EXPECT_TRUE(r.edmonds_sharp);
    EXPECT_TRUE(r.transfer_confirmed);
    EXPECT_TRUE(r.inconsistencies.empty());
}

TEST(Topology, ViolationsAreListed) {
    TopologyInputs in;
    in.cover_knot = ranks({{{0}, 2}});
    in.quotient_knot = ranks({{{2}, 2}, {{0}, 2}, {{-2}, 2}});
    in.cover_einf = ranks({{{0}, 2}});
    in.lambda = 1;
    auto r = topology_report(in);
    EXPECT_FALSE(r.edmonds_holds);
    EXPECT_FALSE(r.inconsistencies.empty());

    // sharp and fibred, but E_inf misses the top grading
    in.cover_knot = ranks({{{2}, 2}, {{0}, 4}, {{-2}, 2}});
    in.quotient_knot = ranks({{{0}, 2}});
    in.cover_einf = ranks({{{0}, 2}});
    in.lambda = 3;
    r = topology_report(in);
    EXPECT_TRUE(r.transfer_applies);
    EXPECT_FALSE(r.transfer_confirmed);
    EXPECT_FALSE(r.inconsistencies.empty());
    EXPECT_EQ(genus_from(in.cover_knot), 1);
    EXPECT_EQ(tag_of([] { genus_from(ranks({{{1}, 2}})); }), "AsymmetricRanks");
}
