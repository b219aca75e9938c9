#pragma once

#include "hfk/cover.hpp"
#include "hfk/diagram.hpp"
#include "hfk/error.hpp"
#include "hfk/intlin.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hfk {

// One intersection point per alpha curve (points[i] lies on alpha curve i), using every
// beta curve once.
struct Generator {
    std::vector<int> points;
    auto operator<=>(const Generator&) const = default;
};

// Point ids ordered by beta curve and concatenated, e.g. "a^1b^2".
inline std::string generator_name(const HeegaardDiagram& d, const Generator& g) {
    std::vector<std::pair<int, std::string>> by_beta;
    for (int p : g.points) by_beta.push_back({d.points[p].beta, d.points[p].id});
    std::sort(by_beta.begin(), by_beta.end());
    std::string s;
    for (auto& [b, id] : by_beta) s += id;
    return s;
}

inline std::vector<Generator> enumerate_generators(const HeegaardDiagram& d) {
    const int n = d.alpha_count();
    std::vector<Generator> out;
    std::vector<int> cur(static_cast<std::size_t>(n), -1);
    std::vector<bool> used_beta(static_cast<std::size_t>(d.beta_count()), false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back({cur});
            return;
        }
        for (int p : d.alpha_orders[i]) {
            int b = d.points[p].beta;
            if (used_beta[b]) continue;
            used_beta[b] = true;
            cur[i] = p;
            self(self, i + 1);
            used_beta[b] = false;
        }
    };
    if (n > 0 && n == d.beta_count()) rec(rec, 0);
    std::sort(out.begin(), out.end(), [&](const Generator& a, const Generator& b) {
        for (std::size_t i = 0; i < a.points.size(); ++i)
            if (a.points[i] != b.points[i]) return d.points[a.points[i]].id < d.points[b.points[i]].id;
        return false;
    });
    return out;
}

inline std::optional<int> find_generator(const std::vector<Generator>& gens, const Generator& g) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == g) return static_cast<int>(i);
    return std::nullopt;
}

struct Domain {
    IntVec mult;  // per region
    Generator from, to;
};

// Rows: intersection points. Entry (p, r) is the signed number of quadrants of p in r,
// +1 for quadrants 1 and 3 and -1 for quadrants 0 and 2.
inline IntMat corner_matrix(const HeegaardDiagram& d) {
    IntMat A(static_cast<std::size_t>(d.num_points()), IntVec(static_cast<std::size_t>(d.num_regions()), 0));
    for (int p = 0; p < d.num_points(); ++p)
        for (int q = 0; q < 4; ++q) A[p][d.quadrant_region[p][q]] += (q % 2 == 1) ? 1 : -1;
    return A;
}

inline IntVec corner_rhs(const HeegaardDiagram& d, const Generator& x, const Generator& y) {
    IntVec b(static_cast<std::size_t>(d.num_points()), 0);
    for (int p : y.points) b[p] += 1;
    for (int p : x.points) b[p] -= 1;
    return b;
}

inline bool is_domain_between(const HeegaardDiagram& d, const IntVec& mult, const Generator& x, const Generator& y) {
    auto A = corner_matrix(d);
    auto b = corner_rhs(d, x, y);
    for (int p = 0; p < d.num_points(); ++p) {
        long long s = 0;
        for (int r = 0; r < d.num_regions(); ++r) s += A[p][r] * mult[r];
        if (s != b[p]) return false;
    }
    return true;
}

// Integer 2-chains whose boundary is a combination of full curves and which vanish on the
// regions of the given basepoints.
inline IntMat periodic_domains(const HeegaardDiagram& d, const std::set<int>& punctures = {}) {
    IntMat A = corner_matrix(d);
    std::set<int> regions;
    for (int b : punctures) regions.insert(d.basepoints[b].region);
    for (int r : regions) {
        IntVec row(static_cast<std::size_t>(d.num_regions()), 0);
        row[r] = 1;
        A.push_back(row);
    }
    IntMat basis = integer_kernel(A, static_cast<std::size_t>(d.num_regions()));
    reduce_basis(basis);
    std::sort(basis.begin(), basis.end(), [](const IntVec& a, const IntVec& b) {
        return std::make_pair(l1_norm(a), a) < std::make_pair(l1_norm(b), b);
    });
    return basis;
}

inline std::set<int> basepoints_of_kind(const HeegaardDiagram& d, char kind) {
    std::set<int> out;
    for (int b = 0; b < static_cast<int>(d.basepoints.size()); ++b)
        if (d.basepoints[b].kind == kind) out.insert(b);
    return out;
}

inline std::set<int> all_basepoints(const HeegaardDiagram& d) {
    std::set<int> out;
    for (int b = 0; b < static_cast<int>(d.basepoints.size()); ++b) out.insert(b);
    return out;
}

// A domain from x to y of small L1 norm: exact integer solve, then descent over the lattice
// of periodic 2-chains.
inline Domain find_domain(const HeegaardDiagram& d, const Generator& x, const Generator& y) {
    if (x == y) return {IntVec(static_cast<std::size_t>(d.num_regions()), 0), x, y};
    auto sol = solve_integer(corner_matrix(d), corner_rhs(d, x, y), static_cast<std::size_t>(d.num_regions()));
    if (!sol) fail("NoDomain", generator_name(d, x) + " -> " + generator_name(d, y));
    IntMat lattice = sol->kernel;
    reduce_basis(lattice);
    IntVec m = sol->particular;
    descend_l1(m, lattice);
    return {m, x, y};
}

inline long long multiplicity_at(const HeegaardDiagram& d, const IntVec& mult, int basepoint) {
    return mult[d.basepoints[basepoint].region];
}

// Lipshitz index: sum of a_i e(D_i) plus the average corner multiplicities at x and y.
inline long long maslov_index(const HeegaardDiagram& d, const IntVec& mult, const Generator& x, const Generator& y) {
    long long four_mu = 0;
    for (int r = 0; r < d.num_regions(); ++r) {
        if (mult[r] == 0) continue;
        if (d.regions[r].boundary.empty()) fail("NonDiskRegion", d.regions[r].id);
        four_mu += mult[r] * (4 - static_cast<long long>(d.regions[r].corners.size()));
    }
    for (const Generator* g : {&x, &y})
        for (int p : g->points)
            for (int q = 0; q < 4; ++q) four_mu += mult[d.quadrant_region[p][q]];
    if (four_mu % 4 != 0) fail("NonDiskRegion", "index of a non-domain is not an integer");
    return four_mu / 4;
}

inline long long maslov_index(const HeegaardDiagram& d, const Domain& dom) {
    return maslov_index(d, dom.mult, dom.from, dom.to);
}

// Alexander drop A_j(x) - A_j(y) carried by a domain from x to y, for each component j.
inline std::vector<long long> alexander_drop(const HeegaardDiagram& d, const IntVec& mult) {
    std::vector<long long> out;
    for (auto& comp : d.components) {
        long long s = 0;
        for (auto& [z, w] : comp.pairs) s += multiplicity_at(d, mult, z) - multiplicity_at(d, mult, w);
        out.push_back(s);
    }
    return out;
}

inline long long w_count(const HeegaardDiagram& d, const IntVec& mult) {
    long long s = 0;
    for (int b = 0; b < static_cast<int>(d.basepoints.size()); ++b)
        if (d.basepoints[b].kind == 'w') s += multiplicity_at(d, mult, b);
    return s;
}

// Relative Maslov and Alexander gradings anchored at the first generator; Alexander values
// are stored doubled so that later half-integer shifts stay exact.
struct GradingTable {
    std::vector<Generator> generators;
    std::vector<std::string> names;
    std::vector<long long> maslov;
    std::vector<std::vector<long long>> alexander2;
    std::vector<std::string> component_names;
    int base = 0;
};

inline GradingTable relative_gradings(const HeegaardDiagram& d) {
    GradingTable t;
    t.generators = enumerate_generators(d);
    if (t.generators.empty()) fail("NoGenerators", d.name);
    for (auto& c : d.components) t.component_names.push_back(c.name);
    const auto& x0 = t.generators.front();
    for (auto& g : t.generators) {
        Domain dom = find_domain(d, x0, g);
        long long mu = maslov_index(d, dom);
        t.names.push_back(generator_name(d, g));
        t.maslov.push_back(-(mu - 2 * w_count(d, dom.mult)));
        std::vector<long long> a;
        for (long long drop : alexander_drop(d, dom.mult)) a.push_back(-2 * drop);
        t.alexander2.push_back(std::move(a));
    }
    return t;
}

// Weak admissibility: every nonzero periodic domain avoiding the punctures has both signs.
struct AdmissibilityResult {
    enum class Status { admissible, not_admissible, inconclusive } status = Status::inconclusive;
    std::optional<IntVec> witness;
    bool admissible() const { return status == Status::admissible; }
};

namespace detail {

using BigQ = boost::multiprecision::cpp_rational;

// max c^T x subject to A x <= b, x >= 0, with b >= 0 (origin feasible). Bland's rule.
// Returns the optimal x, or nullopt when unbounded.
inline std::optional<std::vector<BigQ>> simplex_max(const std::vector<std::vector<BigQ>>& A, const std::vector<BigQ>& b,
                                                   const std::vector<BigQ>& c) {
    const std::size_t m = A.size(), n = c.size();
    std::vector<std::vector<BigQ>> T(m + 1, std::vector<BigQ>(n + m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][n + m] = b[i];
    }
    for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
    while (true) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (T[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter == n + m) break;
        std::size_t leave = m;
        BigQ best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            BigQ ratio = T[i][n + m] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return std::nullopt;
        BigQ piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            BigQ f = T[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    std::vector<BigQ> x(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = T[i][n + m];
    return x;
}

}  // namespace detail

inline AdmissibilityResult check_admissibility(const HeegaardDiagram& d, const std::set<int>& punctures) {
    AdmissibilityResult res;
    IntMat basis = periodic_domains(d, punctures);
    const std::size_t k = basis.size();
    const std::size_t F = static_cast<std::size_t>(d.num_regions());
    if (k == 0) {
        res.status = AdmissibilityResult::Status::admissible;
        return res;
    }
    auto one_signed = [](const IntVec& v) {
        bool pos = false, neg = false;
        for (auto x : v) (x > 0 ? pos : neg) |= (x != 0);
        return (pos != neg);
    };
    // bounded scan of small combinations
    const int bound = k <= 6 ? 2 : 1;
    std::vector<int> coef(k, -bound);
    while (true) {
        IntVec v(F, 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (coef[i] == 0) continue;
            nonzero = true;
            for (std::size_t r = 0; r < F; ++r) v[r] += coef[i] * basis[i][r];
        }
        if (nonzero && one_signed(v)) {
            if (v[std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; }) - v.begin()] < 0)
                for (auto& x : v) x = -x;
            res.status = AdmissibilityResult::Status::not_admissible;
            res.witness = v;
            return res;
        }
        std::size_t i = 0;
        while (i < k && coef[i] == bound) coef[i++] = -bound;
        if (i == k) break;
        ++coef[i];
        if (k > 12) break;  // scan only the first combinations of very large bases
    }
    // exact certificate: maximise sum(P) over P = B c with P >= 0 and sum(P) <= 1
    using detail::BigQ;
    std::vector<std::vector<BigQ>> A;
    std::vector<BigQ> b, c(2 * k, 0);
    for (std::size_t r = 0; r < F; ++r) {
        std::vector<BigQ> row(2 * k);
        for (std::size_t i = 0; i < k; ++i) {
            row[i] = -basis[i][r];
            row[k + i] = basis[i][r];
        }
        A.push_back(row);
        b.push_back(0);
    }
    std::vector<BigQ> total(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        BigQ s = 0;
        for (std::size_t r = 0; r < F; ++r) s += basis[i][r];
        total[i] = s;
        total[k + i] = -s;
    }
    A.push_back(total);
    b.push_back(1);
    auto x = detail::simplex_max(A, b, total);
    if (!x) return res;  // cannot happen: the objective is bounded by the last row
    std::vector<BigQ> cc(k);
    BigQ obj = 0;
    for (std::size_t i = 0; i < k; ++i) {
        cc[i] = (*x)[i] - (*x)[k + i];
        obj += cc[i] * total[i];
    }
    if (obj == 0) {
        res.status = AdmissibilityResult::Status::admissible;
        return res;
    }
    boost::multiprecision::cpp_int den = 1;
    for (auto& q : cc) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(q));
    IntVec v(F, 0);
    for (std::size_t i = 0; i < k; ++i) {
        BigQ scaled = cc[i] * BigQ(den);
        long long ci = static_cast<long long>(boost::multiprecision::numerator(scaled));
        for (std::size_t r = 0; r < F; ++r) v[r] += ci * basis[i][r];
    }
    long long g = 0;
    for (auto t : v) g = std::gcd(g, std::llabs(t));
    if (g > 1)
        for (auto& t : v) t /= g;
    res.status = AdmissibilityResult::Status::not_admissible;
    res.witness = v;
    return res;
}

// ----- cover and quotient -----

inline Generator total_lift(const EquivariantDiagram& ed, const Generator& x) {
    Generator g;
    g.points.assign(static_cast<std::size_t>(ed.cover.alpha_count()), -1);
    for (int p : x.points)
        for (int l : ed.point_lift[p]) g.points[ed.cover.points[l].alpha] = l;
    return g;
}

inline IntVec lift_domain(const EquivariantDiagram& ed, const IntVec& mult) {
    IntVec out(static_cast<std::size_t>(ed.cover.num_regions()));
    for (int r = 0; r < ed.cover.num_regions(); ++r) out[r] = mult[ed.region_proj[r]];
    return out;
}

inline Domain lift_domain(const EquivariantDiagram& ed, const Domain& dom) {
    return {lift_domain(ed, dom.mult), total_lift(ed, dom.from), total_lift(ed, dom.to)};
}

inline Generator apply_tau(const EquivariantDiagram& ed, const Generator& s) {
    Generator g;
    g.points.assign(s.points.size(), -1);
    for (int p : s.points) {
        int t = ed.tau().points[p];
        g.points[ed.cover.points[t].alpha] = t;
    }
    return g;
}

// Splits the projection of a cover generator into two quotient generators: the
// lexicographically first quotient generator inside the projected multiset, then the rest.
inline std::vector<Generator> partition_projection(const EquivariantDiagram& ed, const Generator& s) {
    const auto& q = ed.quotient;
    std::multiset<int> pool;
    for (int p : s.points) pool.insert(ed.point_proj[p]);
    std::vector<Generator> parts;
    for (int round = 0; round < 2; ++round) {
        bool found = false;
        for (auto& g : enumerate_generators(q)) {
            std::multiset<int> left = pool;
            bool ok = true;
            for (int p : g.points) {
                auto it = left.find(p);
                if (it == left.end()) {
                    ok = false;
                    break;
                }
                left.erase(it);
            }
            if (!ok) continue;
            parts.push_back(g);
            pool = std::move(left);
            found = true;
            break;
        }
        if (!found) fail("NoPartition", generator_name(ed.cover, s));
    }
    return parts;
}

}  // namespace hfk
