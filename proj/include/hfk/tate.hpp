#pragma once

#include "hfk/complex.hpp"
#include "hfk/cover.hpp"
#include "hfk/error.hpp"
#include "hfk/gf2.hpp"
#include "hfk/gradings.hpp"
#include "hfk/poly_f2.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hfk {

// Permutation of generators induced by the deck involution.
struct Involution {
    std::vector<int> perm;
};

inline Gf2Matrix permutation_matrix(const std::vector<int>& perm) {
    Gf2Matrix m(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) m.set(static_cast<std::size_t>(perm[j]), j);
    return m;
}

// Checks that perm is an involution commuting with the differential and preserving gradings.
inline Involution checked_involution(const GradedComplex& c, std::vector<int> perm) {
    const std::size_t n = c.size();
    if (perm.size() != n) fail("NotInvolution", "permutation has the wrong size");
    for (std::size_t i = 0; i < n; ++i)
        if (perm[i] < 0 || static_cast<std::size_t>(perm[i]) >= n || perm[perm[i]] != static_cast<int>(i))
            fail("NotInvolution", c.gradings.names[i] + " is not mapped back to itself");
    for (std::size_t i = 0; i < n; ++i) {
        auto j = static_cast<std::size_t>(perm[i]);
        if (c.gradings.maslov[i] != c.gradings.maslov[j] || c.gradings.alexander2[i] != c.gradings.alexander2[j])
            fail("NotChainMap", "grading of " + c.gradings.names[i] + " differs from " + c.gradings.names[j]);
    }
    auto P = permutation_matrix(perm);
    auto lhs = c.differential * P, rhs = P * c.differential;
    for (std::size_t i = 0; i < n; ++i)
        if (!(lhs.cols[i] == rhs.cols[i]))
            fail("NotChainMap", "d tau != tau d on " + c.gradings.names[i]);
    return {std::move(perm)};
}

inline Involution involution_map(const HeegaardDiagram& d, const GradedComplex& c) {
    if (!d.involution) fail("NotInvolution", d.name + " carries no involution");
    const auto& tau = *d.involution;
    std::map<Generator, int> index;
    for (std::size_t i = 0; i < c.size(); ++i) index[c.gradings.generators[i]] = static_cast<int>(i);
    std::vector<int> perm;
    for (auto& g : c.gradings.generators) {
        Generator t;
        t.points.assign(g.points.size(), -1);
        for (int p : g.points) {
            int q = tau.points[p];
            t.points[d.points[q].alpha] = q;
        }
        auto it = index.find(t);
        if (it == index.end()) fail("NotInvolution", "image of " + generator_name(d, g) + " is not a generator");
        perm.push_back(it->second);
    }
    return checked_involution(c, std::move(perm));
}

inline Involution involution_map(const EquivariantDiagram& ed, const GradedComplex& c) {
    return involution_map(ed.cover, c);
}

// ----- the localisation spectral sequence -----

// A small complex with involution: the data the spectral sequence needs.
struct TateComplex {
    Gf2Matrix d;
    std::vector<int> tau;
    std::vector<std::vector<long long>> keys;  // splitting gradings per generator
    std::vector<std::string> names;
    std::size_t size() const { return tau.size(); }
};

inline TateComplex tate_complex(const GradedComplex& c, const Involution& t) {
    TateComplex tc;
    tc.d = c.differential;
    tc.tau = t.perm;
    for (std::size_t g = 0; g < c.size(); ++g) tc.keys.push_back(block_key(c, static_cast<int>(g)));
    tc.names = c.gradings.names;
    return tc;
}

// Total differential d + theta (1 + tau) over F2[theta].
inline PolyMatrix total_differential(const TateComplex& tc) {
    const std::size_t n = tc.size();
    PolyMatrix m(n, std::vector<PolyF2>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (auto i : tc.d.cols[j].ones()) m[i][j] += PolyF2::one();
        if (tc.tau[j] != static_cast<int>(j)) {
            m[j][j] += PolyF2::monomial(1);
            m[static_cast<std::size_t>(tc.tau[j])][j] += PolyF2::monomial(1);
        }
    }
    return m;
}

// Rank over F2((theta)) of the localised homology: n - 2 * rank of the total differential.
inline int localized_rank(const PolyMatrix& m) {
    return static_cast<int>(m.size()) - 2 * static_cast<int>(snf_over_poly(m).size());
}

struct TateBlock {
    std::vector<long long> key;
    int rank = 0;    // rank of E_r in this block
    int d_rank = 0;  // rank of d_r on this block
    std::vector<BitVec> representatives;  // cycles spanning E_r here, on the whole complex
};

struct TatePage {
    int r = 1;
    std::vector<TateBlock> blocks;
    int total = 0;
    bool stabilized = false;
};

// Per-block state of the zig-zag cascade on page r: pairs (head, last) with
// d(head) = 0, (1+tau) a_k = d a_{k+1}, and boundaries B_r.
struct CascadeState {
    std::vector<int> gens;  // generator indices of the block
    std::vector<std::pair<BitVec, BitVec>> zigzags;
    std::vector<BitVec> boundaries;
};

struct TateResult {
    std::vector<TatePage> pages;
    int e_infinity = 0;
    std::vector<int> block_e_infinity;  // from the Smith normal form, per block
    // states[r-1][block]
    std::vector<std::vector<CascadeState>> states;
    std::vector<std::vector<long long>> block_keys;
};

namespace detail {

inline BitVec restrict_vec(const BitVec& v, const std::vector<int>& gens) {
    BitVec out(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (v.get(static_cast<std::size_t>(gens[i]))) out.set(i);
    return out;
}

struct BlockOps {
    std::vector<BitVec> d_cols;  // block-local columns of d
    std::vector<int> tau;        // block-local
    std::size_t n = 0;

    BitVec apply_d(const BitVec& v) const {
        BitVec out(n);
        for (auto i : v.ones()) out ^= d_cols[i];
        return out;
    }
    BitVec apply_t(const BitVec& v) const {  // 1 + tau
        BitVec out = v;
        for (auto i : v.ones()) out.flip(static_cast<std::size_t>(tau[i]));
        return out;
    }
};

// Rank of E_r: dim(Z_r + B_r) - dim B_r.
inline int page_rank(const CascadeState& s, std::size_t n) {
    EchelonBasis b(n, 0);
    for (auto& v : s.boundaries) b.insert(v);
    int nb = static_cast<int>(b.rank());
    for (auto& [z, l] : s.zigzags) b.insert(z);
    return static_cast<int>(b.rank()) - nb;
}

inline int d_rank(const CascadeState& s, const BlockOps& ops) {
    EchelonBasis b(ops.n, 0);
    for (auto& v : s.boundaries) b.insert(v);
    int nb = static_cast<int>(b.rank());
    for (auto& [z, l] : s.zigzags) b.insert(ops.apply_t(l));
    return static_cast<int>(b.rank()) - nb;
}

// Heads independent modulo B_r, in block-local coordinates.
inline std::vector<BitVec> page_representatives(const CascadeState& s, std::size_t n) {
    EchelonBasis b(n, 0);
    for (auto& v : s.boundaries) b.insert(v);
    std::vector<BitVec> out;
    for (auto& [z, l] : s.zigzags)
        if (b.insert(z)) out.push_back(z);
    return out;
}

// Page r+1 from page r.
inline CascadeState advance(const CascadeState& s, const BlockOps& ops) {
    const std::size_t n = ops.n;
    // tagged basis of B_r: tags 0..n-1 are d of generators, later tags are boundary vectors
    std::vector<BitVec> bvecs;
    std::vector<BitVec> bpre;  // preimage under d, or empty for the (1+tau) parts
    for (std::size_t g = 0; g < n; ++g) {
        bvecs.push_back(ops.d_cols[g]);
        bpre.push_back(BitVec::unit(n, g));
    }
    for (auto& v : s.boundaries) {
        bvecs.push_back(v);
        bpre.push_back(BitVec(n));
    }
    const std::size_t m = s.zigzags.size();
    const std::size_t tags = bvecs.size() + m;
    EchelonBasis basis(n, tags);
    for (std::size_t i = 0; i < bvecs.size(); ++i) basis.insert(bvecs[i], BitVec::unit(tags, i));

    CascadeState next;
    next.gens = s.gens;
    next.boundaries = s.boundaries;
    for (auto& [z, l] : s.zigzags) next.boundaries.push_back(ops.apply_t(l));

    // combinations of zig-zags whose (1+tau)-image lies in B_r extend by one step
    for (std::size_t k = 0; k < m; ++k) {
        auto r = basis.insert(ops.apply_t(s.zigzags[k].second), BitVec::unit(tags, bvecs.size() + k));
        if (r.residue.any()) continue;
        BitVec head(n), last(n), a(n);
        for (auto t : r.tag.ones()) {
            if (t >= bvecs.size()) {
                head ^= s.zigzags[t - bvecs.size()].first;
                last ^= s.zigzags[t - bvecs.size()].second;
            } else {
                a ^= bpre[t];
            }
        }
        // (1+tau) last = d a + sum of earlier boundary vectors, which belong to shorter zig-zags
        next.zigzags.push_back({head, a});
    }
    // zig-zags starting on this page
    auto ker = kernel(ops.d_cols, n);
    for (auto& k : ker) next.zigzags.push_back({BitVec(n), k});

    // keep an independent set of pairs
    EchelonBasis pairs(2 * n, 0);
    std::vector<std::pair<BitVec, BitVec>> kept;
    for (auto& [z, l] : next.zigzags) {
        BitVec joined(2 * n);
        for (auto i : z.ones()) joined.set(i);
        for (auto i : l.ones()) joined.set(n + i);
        if (pairs.insert(joined)) kept.push_back({z, l});
    }
    next.zigzags = std::move(kept);
    return next;
}

}  // namespace detail

inline TateResult tate_pages(const TateComplex& tc, int r_max = -1) {
    const std::size_t N = tc.size();
    if (r_max < 0) r_max = static_cast<int>(2 * N);
    std::map<std::vector<long long>, std::vector<int>> blocks;
    for (std::size_t g = 0; g < N; ++g) blocks[tc.keys[g]].push_back(static_cast<int>(g));

    TateResult res;
    std::vector<detail::BlockOps> ops;
    std::vector<CascadeState> states;
    std::vector<int> block_inf;
    for (auto& [key, gens] : blocks) {
        res.block_keys.push_back(key);
        detail::BlockOps o;
        o.n = gens.size();
        std::map<int, int> local;
        for (std::size_t i = 0; i < gens.size(); ++i) local[gens[i]] = static_cast<int>(i);
        for (int g : gens) {
            o.d_cols.push_back(detail::restrict_vec(tc.d.cols[g], gens));
            auto it = local.find(tc.tau[g]);
            if (it == local.end()) fail("NotChainMap", "tau leaves the grading block of " + tc.names[g]);
            o.tau.push_back(it->second);
        }
        // the block's total differential, for its stable rank
        PolyMatrix pm(o.n, std::vector<PolyF2>(o.n));
        for (std::size_t j = 0; j < o.n; ++j) {
            for (auto i : o.d_cols[j].ones()) pm[i][j] += PolyF2::one();
            if (o.tau[j] != static_cast<int>(j)) {
                pm[j][j] += PolyF2::monomial(1);
                pm[static_cast<std::size_t>(o.tau[j])][j] += PolyF2::monomial(1);
            }
        }
        block_inf.push_back(localized_rank(pm));
        CascadeState s;
        s.gens = gens;
        for (auto& k : kernel(o.d_cols, o.n)) s.zigzags.push_back({k, k});
        for (auto& v : o.d_cols) s.boundaries.push_back(v);
        ops.push_back(std::move(o));
        states.push_back(std::move(s));
    }
    for (int b : block_inf) res.e_infinity += b;
    res.block_e_infinity = block_inf;

    for (int r = 1; r <= r_max; ++r) {
        TatePage page;
        page.r = r;
        bool done = true;
        for (std::size_t b = 0; b < states.size(); ++b) {
            TateBlock tb;
            tb.key = res.block_keys[b];
            tb.rank = detail::page_rank(states[b], ops[b].n);
            tb.d_rank = detail::d_rank(states[b], ops[b]);
            for (auto& z : detail::page_representatives(states[b], ops[b].n)) {
                BitVec g(N);
                for (auto i : z.ones()) g.set(static_cast<std::size_t>(states[b].gens[i]));
                tb.representatives.push_back(std::move(g));
            }
            page.total += tb.rank;
            if (tb.rank != block_inf[b]) done = false;
            page.blocks.push_back(std::move(tb));
        }
        page.stabilized = done;
        res.pages.push_back(page);
        res.states.push_back(states);
        if (done) break;
        for (std::size_t b = 0; b < states.size(); ++b) states[b] = detail::advance(states[b], ops[b]);
    }
    return res;
}

inline TateResult tate_pages(const GradedComplex& c, const Involution& t, int r_max = -1) {
    return tate_pages(tate_complex(c, t), r_max);
}

// ----- queries on a computed page -----

inline int block_of(const TateResult& res, const std::vector<long long>& key) {
    for (std::size_t b = 0; b < res.block_keys.size(); ++b)
        if (res.block_keys[b] == key) return static_cast<int>(b);
    return -1;
}

// d_r of a chain (given on the whole complex) lying in one block, if it survives to page r.
inline std::optional<BitVec> page_differential(const TateComplex& tc, const TateResult& res, int r, const BitVec& v) {
    if (r < 1 || r > static_cast<int>(res.states.size())) return std::nullopt;
    std::optional<int> blk;
    for (auto g : v.ones()) {
        int b = block_of(res, tc.keys[g]);
        if (blk && *blk != b) return std::nullopt;
        blk = b;
    }
    if (!blk) return BitVec(tc.size());
    const auto& s = res.states[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(*blk)];
    const std::size_t n = s.gens.size();
    detail::BlockOps ops;
    ops.n = n;
    std::map<int, int> local;
    for (std::size_t i = 0; i < n; ++i) local[s.gens[i]] = static_cast<int>(i);
    for (int g : s.gens) ops.tau.push_back(local.at(tc.tau[g]));
    const std::size_t tags = s.boundaries.size() + s.zigzags.size();
    EchelonBasis basis(n, tags);
    for (std::size_t i = 0; i < s.boundaries.size(); ++i) basis.insert(s.boundaries[i], BitVec::unit(tags, i));
    for (std::size_t k = 0; k < s.zigzags.size(); ++k)
        basis.insert(s.zigzags[k].first, BitVec::unit(tags, s.boundaries.size() + k));
    auto tag = basis.express(detail::restrict_vec(v, s.gens));
    if (!tag) return std::nullopt;
    BitVec out(n);
    for (auto t : tag->ones())
        if (t >= s.boundaries.size()) out ^= ops.apply_t(s.zigzags[t - s.boundaries.size()].second);
    BitVec global(tc.size());
    for (auto i : out.ones()) global.set(static_cast<std::size_t>(s.gens[i]));
    return global;
}

// Whether u and v define the same class on page r (their difference lies in B_r).
inline bool same_class(const TateComplex& tc, const TateResult& res, int r, const BitVec& u, const BitVec& v) {
    BitVec diff = u ^ v;
    if (diff.none()) return true;
    std::optional<int> blk;
    for (auto g : diff.ones()) {
        int b = block_of(res, tc.keys[g]);
        if (blk && *blk != b) return false;
        blk = b;
    }
    const auto& s = res.states[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(*blk)];
    EchelonBasis basis(s.gens.size(), 0);
    for (auto& b : s.boundaries) basis.insert(b);
    return basis.contains(detail::restrict_vec(diff, s.gens));
}

// Whether a chain survives to page r as a nonzero class.
inline bool survives(const TateComplex& tc, const TateResult& res, int r, const BitVec& v) {
    if (!page_differential(tc, res, r, v)) return false;
    return !same_class(tc, res, r, v, BitVec(tc.size()));
}

inline BitVec chain_of(const TateComplex& tc, const std::vector<std::string>& names) {
    BitVec v(tc.size());
    for (auto& n : names) {
        auto it = std::find(tc.names.begin(), tc.names.end(), n);
        if (it == tc.names.end()) fail("UnknownGenerator", n);
        v.flip(static_cast<std::size_t>(it - tc.names.begin()));
    }
    return v;
}

// ----- cover/quotient grading correspondence -----

// Ranks keyed by doubled absolute gradings on the preserved axes.
using GradingRanks = std::map<std::vector<long long>, int>;

inline GradingRanks block_ranks(const TatePage& page) {
    GradingRanks out;
    for (auto& b : page.blocks)
        if (b.rank) out[b.key] += b.rank;
    return out;
}

inline GradingRanks shift_ranks(const GradingRanks& ranks, const std::vector<long long>& shift2) {
    GradingRanks out;
    for (auto& [k, r] : ranks) {
        auto g = k;
        for (std::size_t i = 0; i < g.size() && i < shift2.size(); ++i) g[i] += shift2[i];
        out[g] += r;
    }
    return out;
}

struct CorrespondenceRow {
    std::vector<long long> cover;     // doubled
    std::vector<long long> quotient;  // doubled
    int e1_rank = 0;
    int e_infinity_rank = 0;
    int quotient_rank = 0;
};

struct CorrespondenceReport {
    std::vector<CorrespondenceRow> rows;
    bool rank_inequality = true;  // rank E_1 >= rank of the quotient in every row
};

// Link flavor: cover A_1 = 1/2 + 2a corresponds to quotient A_1 = 1/2 + a, other axes fixed.
// Knot flavor: cover A_1 = 2a + (1 - lambda)/2 corresponds to a + (1 - lambda)/2.
// All gradings absolute and doubled; the first axis is A_1.
inline CorrespondenceReport grading_correspondence(const GradingRanks& cover_e1, const GradingRanks& cover_einf,
                                                   const GradingRanks& quotient, int lambda, Flavor f) {
    const long long offset2 = f == Flavor::link ? 1 : 1 - lambda;  // doubled constant term
    auto to_quotient = [&](std::vector<long long> g) {
        long long rest = g.at(0) - offset2;  // doubled 2a, i.e. 4a
        if (rest % 4 != 0) fail("CorrespondenceViolation", "cover grading A1 = " + half_to_string(static_cast<int>(g[0])) +
                                                               " has the wrong form");
        g[0] = rest / 2 + offset2;
        return g;
    };
    auto from_quotient = [&](std::vector<long long> g) {
        g.at(0) = 2 * (g[0] - offset2) + offset2;
        return g;
    };
    auto show = [](const std::vector<long long>& g) {
        std::string s = "(";
        for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + half_to_string(static_cast<int>(g[i]));
        return s + ")";
    };
    std::map<std::vector<long long>, CorrespondenceRow> rows;
    for (auto& [g, r] : cover_einf) {
        if (!r) continue;
        auto q = to_quotient(g);
        auto& row = rows[g];
        row.cover = g;
        row.quotient = q;
        row.e_infinity_rank = r;
    }
    for (auto& [g, r] : quotient) {
        if (!r) continue;
        auto c = from_quotient(g);
        auto& row = rows[c];
        row.cover = c;
        row.quotient = g;
        row.quotient_rank = r;
    }
    CorrespondenceReport rep;
    for (auto& [g, row] : rows) {
        auto it = cover_e1.find(g);
        row.e1_rank = it == cover_e1.end() ? 0 : it->second;
        if (row.e_infinity_rank != row.quotient_rank)
            fail("CorrespondenceViolation", "E_inf rank " + std::to_string(row.e_infinity_rank) + " at " + show(row.cover) +
                                                " but quotient rank " + std::to_string(row.quotient_rank) + " at " +
                                                show(row.quotient));
        rep.rank_inequality &= row.e1_rank >= row.quotient_rank;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace hfk
