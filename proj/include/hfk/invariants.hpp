#pragma once

#include "hfk/complex.hpp"
#include "hfk/error.hpp"
#include "hfk/laurent.hpp"
#include "hfk/tate.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hfk {

// Absolute pinning: per preserved axis, the doubled shift added to relative gradings.
struct AbsolutePinning {
    std::vector<int> axes;
    std::vector<long long> shift2;
    std::vector<long long> center2;
    std::string method = "symmetry-center";
};

inline GradingRanks homology_ranks(const HomologyResult& h) { return alexander_ranks(h); }

// Pins the ranks so that they are symmetric about -(pairs - 1)/2 on each axis, which is
// where HFL tensored with one V factor per extra basepoint pair is centred. When lambda is
// given, link-flavor values must also lie in Z + lambda/2.
inline AbsolutePinning pin_absolute(const GradingRanks& ranks, const std::vector<int>& axes,
                                    const std::vector<int>& pairs_per_axis, std::optional<int> lambda = std::nullopt) {
    AbsolutePinning pin;
    pin.axes = axes;
    const std::size_t k = axes.size();
    pin.shift2.assign(k, 0);
    pin.center2.assign(k, 0);
    for (std::size_t a = 0; a < k; ++a) pin.center2[a] = -(pairs_per_axis.at(a) - 1);
    if (ranks.empty()) return pin;
    for (std::size_t a = 0; a < k; ++a) {
        long long lo = ranks.begin()->first[a], hi = lo;
        for (auto& [g, r] : ranks) {
            lo = std::min(lo, g[a]);
            hi = std::max(hi, g[a]);
        }
        if ((lo + hi) % 2 != 0) fail("AsymmetricRanks", "axis " + std::to_string(axes[a]) + " has no half-integer centre");
        pin.shift2[a] = pin.center2[a] - (lo + hi) / 2;
    }
    auto pinned = shift_ranks(ranks, pin.shift2);
    for (auto& [g, r] : pinned) {
        std::vector<long long> mirror(k);
        for (std::size_t a = 0; a < k; ++a) mirror[a] = 2 * pin.center2[a] - g[a];
        auto it = pinned.find(mirror);
        if (it == pinned.end() || it->second != r) fail("AsymmetricRanks", "ranks are not symmetric about the centre");
        if (lambda)
            for (std::size_t a = 0; a < k; ++a)
                if (std::llabs(g[a] - *lambda) % 2 != 0)
                    fail("AsymmetricRanks", "pinned grading " + half_to_string(static_cast<int>(g[a])) +
                                                " is not in Z + lambda/2");
    }
    return pin;
}

inline std::vector<int> pairs_per_axis(const HeegaardDiagram& d, const std::vector<int>& axes) {
    std::vector<int> out;
    for (int a : axes) out.push_back(static_cast<int>(d.components[a].pairs.size()));
    return out;
}

// Pins a computed homology; the link flavor also checks the Z + lambda/2 condition.
inline AbsolutePinning pin_absolute(const HeegaardDiagram& d, const GradedComplex& c, const HomologyResult& h,
                                    std::optional<int> lambda = std::nullopt) {
    return pin_absolute(homology_ranks(h), c.axes, pairs_per_axis(d, c.axes),
                        c.flavor == Flavor::link ? lambda : std::nullopt);
}

inline GradingRanks pinned_ranks(const GradingRanks& ranks, const AbsolutePinning& pin) {
    return shift_ranks(ranks, pin.shift2);
}

// Top pinned A_1 (doubled) with nonzero rank.
inline long long top_grading2(const GradingRanks& ranks) {
    if (ranks.empty()) fail("NoGenerators", "empty homology has no top grading");
    long long top = ranks.begin()->first[0];
    for (auto& [g, r] : ranks)
        if (r) top = std::max(top, g[0]);
    return top;
}

inline int rank_at_a1(const GradingRanks& ranks, long long a1_2) {
    int s = 0;
    for (auto& [g, r] : ranks)
        if (g[0] == a1_2) s += r;
    return s;
}

// Genus from pinned knot-flavor ranks: the V factors put their top at 0 and the W factor
// does not move gradings, so the top grading is the genus.
inline int genus_from(const GradingRanks& pinned_knot) {
    long long top = top_grading2(pinned_knot);
    if (top % 2 != 0) fail("AsymmetricRanks", "knot-flavor top grading is not an integer");
    return static_cast<int>(top / 2);
}

// ----- Euler characteristic and the Alexander polynomial -----

inline std::vector<std::string> variable_names(std::size_t n) {
    if (n == 1) return {"t"};
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("t" + std::to_string(i + 1));
    return v;
}

// Sum over generators of (-1)^M t^A, with the base generator counted positively.
inline LaurentPoly euler_characteristic(const GradedComplex& c, const AbsolutePinning* pin = nullptr) {
    const std::size_t ncomp = c.gradings.component_names.size();
    LaurentPoly chi(variable_names(ncomp));
    for (std::size_t g = 0; g < c.size(); ++g) {
        LaurentPoly::Exps e(ncomp);
        for (std::size_t a = 0; a < ncomp; ++a) e[a] = static_cast<int>(c.gradings.alexander2[g][a]);
        if (pin)
            for (std::size_t i = 0; i < pin->axes.size(); ++i) e[pin->axes[i]] += static_cast<int>(pin->shift2[i]);
        long long m = c.gradings.maslov[g] - c.gradings.maslov[c.gradings.base];
        chi.add_term(std::move(e), m % 2 == 0 ? 1 : -1);
    }
    return chi;
}

// (1 - t_i^{-1}) in the given variables.
inline LaurentPoly one_minus_inverse(const std::vector<std::string>& vars, std::size_t i) {
    LaurentPoly p = LaurentPoly::constant(vars, 1);
    LaurentPoly::Exps e(vars.size(), 0);
    e[i] = -2;
    p.add_term(e, -1);
    return p;
}

// Divides chi by prod_i (1 - t_i^{-1})^{pairs_i}.
inline LaurentPoly alexander_from_euler(const LaurentPoly& chi, const std::vector<int>& pairs) {
    if (pairs.size() != chi.nvars()) fail("InvalidPolynomial", "one pair count per variable is needed");
    LaurentPoly q = chi;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (int k = 0; k < pairs[i]; ++k) q = divide_exact(q, one_minus_inverse(chi.vars(), i));
    return q.normalized();
}

// Linking number of a two-component link from its Alexander polynomial: |Delta(1, 1)|.
inline int linking_from_alexander(const LaurentPoly& delta) {
    return static_cast<int>(std::llabs(delta.evaluate_at_one()));
}

// Delta_L(t, 1) / (1 + t + ... + t^{lambda-1}), the Alexander polynomial of the first component.
inline LaurentPoly specialize_two_component(const LaurentPoly& delta, int lambda) {
    if (delta.nvars() != 2) fail("InvalidPolynomial", "expected a two-variable polynomial");
    if (lambda < 1) fail("InvalidConfig", "lambda must be positive");
    LaurentPoly one = delta.specialize_one(1);
    LaurentPoly renamed({"t"});
    for (auto& [e, c] : one.terms()) renamed.add_term(e, c);
    return divide_exact(renamed.normalized(), geometric_sum(lambda)).normalized();
}

// ----- Murasugi's congruence -----

struct PeriodicityConfig {
    int q = 2;
    int p = 2;
    int r = 1;
    int lambda = 1;
};

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void check_config(const PeriodicityConfig& cfg) {
    if (!is_prime(cfg.p)) fail("InvalidConfig", "p = " + std::to_string(cfg.p) + " is not prime");
    if (cfg.r < 1) fail("InvalidConfig", "r must be at least 1");
    long long q = 1;
    for (int i = 0; i < cfg.r; ++i) q *= cfg.p;
    if (q != cfg.q) fail("InvalidConfig", "q must equal p^r");
    if (cfg.lambda < 1 || cfg.lambda % 2 == 0) fail("InvalidConfig", "lambda must be a positive odd integer");
}

struct MurasugiResult {
    bool holds = false;
    long long witness_shift2 = 0;  // doubled power i with cover = t^i * rhs mod p
    int sign = 1;
    LaurentPoly lhs{{"t"}};
    LaurentPoly rhs{{"t"}};
};

// Tests Delta_cover == +-t^i (1 + ... + t^{lambda-1})^{q-1} Delta_quotient^q modulo p.
inline MurasugiResult murasugi_check(const LaurentPoly& cover, const LaurentPoly& quotient, const PeriodicityConfig& cfg) {
    check_config(cfg);
    if (cover.nvars() != 1 || quotient.nvars() != 1) fail("InvalidPolynomial", "expected one-variable polynomials");
    LaurentPoly c({"t"}), qt({"t"});
    for (auto& [e, k] : cover.terms()) c.add_term(e, k);
    for (auto& [e, k] : quotient.terms()) qt.add_term(e, k);
    MurasugiResult res;
    res.lhs = c.mod(cfg.p);
    res.rhs = (geometric_sum(cfg.lambda).pow(cfg.q - 1) * qt.pow(cfg.q)).mod(cfg.p);
    if (res.lhs.is_zero() || res.rhs.is_zero()) {
        res.holds = res.lhs.is_zero() && res.rhs.is_zero();
        return res;
    }
    for (int sign : {1, -1}) {
        if (sign < 0 && cfg.p == 2) break;
        LaurentPoly r = sign > 0 ? res.rhs : (-res.rhs).mod(cfg.p);
        long long shift = res.lhs.terms().begin()->first[0] - r.terms().begin()->first[0];
        if (r.shifted({static_cast<int>(shift)}) == res.lhs) {
            res.holds = true;
            res.witness_shift2 = shift;
            res.sign = sign;
            return res;
        }
    }
    return res;
}

// ----- topology report -----

struct TopologyInputs {
    GradingRanks cover_knot;      // pinned knot-flavor homology of the cover
    GradingRanks quotient_knot;   // pinned knot-flavor homology of the quotient
    GradingRanks cover_einf;      // pinned knot-flavor E_inf of the cover
    GradingRanks cover_link;      // pinned link-flavor homology (optional, for breadths)
    GradingRanks quotient_link;
    int cover_extra_pairs = 0;    // V factors on the knot axis: pairs on K minus one
    int quotient_extra_pairs = 0;
    int lambda = 1;
};

struct TopologyReport {
    int genus_cover = 0;
    int genus_quotient = 0;
    int lambda = 1;
    bool edmonds_holds = false;
    bool edmonds_sharp = false;
    int cover_top_rank = 0;
    int quotient_top_rank = 0;
    int einf_top_rank = 0;
    bool cover_fibred = false;
    bool quotient_fibred = false;
    bool transfer_applies = false;   // Edmonds sharp and the cover fibred
    bool transfer_confirmed = false;  // then E_inf and the quotient both have rank two on top
    std::optional<int> thurston_cover_k, thurston_quotient_k, thurston_cover_u, thurston_quotient_u;
    std::vector<std::string> inconsistencies;
};

inline long long breadth2(const GradingRanks& ranks, std::size_t axis) {
    long long lo = 0, hi = 0;
    bool first = true;
    for (auto& [g, r] : ranks) {
        if (!r) continue;
        if (first || g[axis] < lo) lo = g[axis];
        if (first || g[axis] > hi) hi = g[axis];
        first = false;
    }
    return hi - lo;
}

inline TopologyReport topology_report(const TopologyInputs& in) {
    TopologyReport rep;
    rep.lambda = in.lambda;
    rep.genus_cover = genus_from(in.cover_knot);
    rep.genus_quotient = genus_from(in.quotient_knot);
    int bound2 = 4 * rep.genus_quotient + in.lambda - 1;  // twice 2g + (lambda - 1)/2
    rep.edmonds_holds = 2 * rep.genus_cover >= bound2;
    rep.edmonds_sharp = 2 * rep.genus_cover == bound2;
    if (!rep.edmonds_holds)
        rep.inconsistencies.push_back("Edmonds inequality fails: g(cover) = " + std::to_string(rep.genus_cover) +
                                      " < 2g(quotient) + (lambda-1)/2");

    long long top_c = top_grading2(in.cover_knot), top_q = top_grading2(in.quotient_knot);
    rep.cover_top_rank = rank_at_a1(in.cover_knot, top_c);
    rep.quotient_top_rank = rank_at_a1(in.quotient_knot, top_q);
    rep.einf_top_rank = rank_at_a1(in.cover_einf, top_c);
    // the W factor doubles every rank, so a fibred knot has rank two on top
    rep.cover_fibred = rep.cover_top_rank == 2;
    rep.quotient_fibred = rep.quotient_top_rank == 2;
    rep.transfer_applies = rep.edmonds_sharp && rep.cover_fibred;
    if (rep.transfer_applies) {
        // the top cover grading corresponds to the top quotient grading
        long long image = (top_c - (1 - in.lambda)) / 2 + (1 - in.lambda);
        rep.transfer_confirmed = rep.einf_top_rank == 2 && image == top_q && rep.quotient_top_rank == 2;
        if (!rep.transfer_confirmed)
            rep.inconsistencies.push_back("fibredness transfer: top E_inf or quotient rank is not two");
    }

    // breadth of HFL on an axis is the Thurston norm of the dual class plus one, plus one
    // per extra V factor on that axis
    if (!in.cover_link.empty() && !in.quotient_link.empty()) {
        rep.thurston_cover_k = static_cast<int>(breadth2(in.cover_link, 0) / 2) - 1 - in.cover_extra_pairs;
        rep.thurston_quotient_k = static_cast<int>(breadth2(in.quotient_link, 0) / 2) - 1 - in.quotient_extra_pairs;
        if (!in.cover_link.begin()->first.empty() && in.cover_link.begin()->first.size() > 1) {
            rep.thurston_cover_u = static_cast<int>(breadth2(in.cover_link, 1) / 2) - 1;
            rep.thurston_quotient_u = static_cast<int>(breadth2(in.quotient_link, 1) / 2) - 1;
            if (*rep.thurston_cover_u != *rep.thurston_quotient_u)
                rep.inconsistencies.push_back("Thurston norm of the axis class differs between cover and quotient");
        }
        if (*rep.thurston_cover_k != 2 * *rep.thurston_quotient_k)
            rep.inconsistencies.push_back("Thurston norm of the knot class is not doubled in the cover");
    }
    return rep;
}

}  // namespace hfk
