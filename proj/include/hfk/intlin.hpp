#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace hfk {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;  // row-major
using Rational = boost::rational<long long>;

inline long long l1_norm(const IntVec& v) {
    long long s = 0;
    for (auto x : v) s += std::llabs(x);
    return s;
}

// Column-style Hermite reduction: H = A * V with V unimodular and H in column echelon form.
struct ColumnEchelon {
    IntMat H;
    IntMat V;
    std::vector<std::size_t> pivot_row;  // pivot_row[c] = row holding the pivot of column c
    std::size_t rank = 0;
};

inline ColumnEchelon column_echelon(const IntMat& A, std::size_t ncols) {
    ColumnEchelon E;
    E.H = A;
    E.V.assign(ncols, IntVec(ncols, 0));
    for (std::size_t i = 0; i < ncols; ++i) E.V[i][i] = 1;
    auto& H = E.H;
    auto& V = E.V;
    const std::size_t rows = A.size();

    auto col_axpy = [&](std::size_t dst, std::size_t src, long long q) {  // col_dst -= q col_src
        if (q == 0) return;
        for (std::size_t i = 0; i < rows; ++i) H[i][dst] -= q * H[i][src];
        for (std::size_t i = 0; i < ncols; ++i) V[i][dst] -= q * V[i][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(H[i][a], H[i][b]);
        for (std::size_t i = 0; i < ncols; ++i) std::swap(V[i][a], V[i][b]);
    };
    auto col_neg = [&](std::size_t a) {
        for (std::size_t i = 0; i < rows; ++i) H[i][a] = -H[i][a];
        for (std::size_t i = 0; i < ncols; ++i) V[i][a] = -V[i][a];
    };

    std::size_t r = 0;
    for (std::size_t i = 0; i < rows && r < ncols; ++i) {
        for (std::size_t c = r + 1; c < ncols; ++c) {
            while (H[i][c] != 0) {
                if (H[i][r] == 0) {
                    col_swap(r, c);
                    continue;
                }
                col_axpy(c, r, H[i][c] / H[i][r]);
                if (H[i][c] != 0) col_swap(r, c);
            }
        }
        if (H[i][r] == 0) continue;
        if (H[i][r] < 0) col_neg(r);
        // keep earlier pivot columns small in this row
        for (std::size_t c = 0; c < r; ++c) {
            long long q = H[i][c] / H[i][r];
            if (H[i][c] - q * H[i][r] < 0) --q;
            col_axpy(c, r, q);
        }
        E.pivot_row.push_back(i);
        ++r;
    }
    E.rank = r;
    return E;
}

struct IntegerSolution {
    IntVec particular;
    IntMat kernel;  // basis vectors of the integer kernel
};

// Integer solutions of A x = b (A has ncols columns).
inline std::optional<IntegerSolution> solve_integer(const IntMat& A, const IntVec& b, std::size_t ncols) {
    ColumnEchelon E = column_echelon(A, ncols);
    IntVec y(ncols, 0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < A.size(); ++i) {
        long long s = 0;
        for (std::size_t c = 0; c < next; ++c) s += E.H[i][c] * y[c];
        if (next < E.rank && E.pivot_row[next] == i) {
            long long rem = b[i] - s;
            if (rem % E.H[i][next] != 0) return std::nullopt;
            y[next] = rem / E.H[i][next];
            ++next;
        } else if (s != b[i]) {
            return std::nullopt;
        }
    }
    IntegerSolution out;
    out.particular.assign(ncols, 0);
    for (std::size_t r = 0; r < ncols; ++r)
        for (std::size_t c = 0; c < ncols; ++c) out.particular[r] += E.V[r][c] * y[c];
    for (std::size_t c = E.rank; c < ncols; ++c) {
        IntVec k(ncols);
        for (std::size_t r = 0; r < ncols; ++r) k[r] = E.V[r][c];
        out.kernel.push_back(std::move(k));
    }
    return out;
}

inline IntMat integer_kernel(const IntMat& A, std::size_t ncols) {
    return solve_integer(A, IntVec(A.size(), 0), ncols)->kernel;
}

// Pairwise size reduction of a lattice basis in the L1 norm; keeps the lattice unchanged.
inline void reduce_basis(IntMat& basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                for (long long s : {1LL, -1LL}) {
                    IntVec t = basis[i];
                    for (std::size_t k = 0; k < t.size(); ++k) t[k] += s * basis[j][k];
                    if (l1_norm(t) < l1_norm(basis[i])) {
                        basis[i] = std::move(t);
                        changed = true;
                    }
                }
            }
        }
    }
    for (auto& v : basis) {
        auto it = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
        if (it != v.end() && *it < 0)
            for (auto& x : v) x = -x;
    }
}

// Exact minimiser over integers t of sum_k |a_k + t b_k|.
inline long long best_integer_shift(const IntVec& a, const IntVec& b) {
    std::vector<std::pair<Rational, long long>> pts;  // breakpoints -a/b with weight |b|
    for (std::size_t k = 0; k < a.size(); ++k)
        if (b[k] != 0) pts.emplace_back(Rational(-a[k], b[k]), std::llabs(b[k]));
    if (pts.empty()) return 0;
    std::sort(pts.begin(), pts.end());
    long long total = 0;
    for (auto& p : pts) total += p.second;
    long long acc = 0;
    Rational med = pts.back().first;
    for (auto& p : pts) {
        acc += p.second;
        if (2 * acc >= total) {
            med = p.first;
            break;
        }
    }
    long long fl = med.numerator() / med.denominator();
    if (med < Rational(fl)) --fl;
    auto cost = [&](long long t) {
        long long s = 0;
        for (std::size_t k = 0; k < a.size(); ++k) s += std::llabs(a[k] + t * b[k]);
        return s;
    };
    return cost(fl) <= cost(fl + 1) ? fl : fl + 1;
}

// Lowers the L1 norm of x by adding integer multiples of lattice vectors (and pairwise
// sums/differences) until no single such move helps.
inline void descend_l1(IntVec& x, const IntMat& lattice) {
    IntMat dirs = lattice;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (std::size_t j = i + 1; j < lattice.size(); ++j)
            for (long long s : {1LL, -1LL}) {
                IntVec d(x.size());
                for (std::size_t k = 0; k < x.size(); ++k) d[k] = lattice[i][k] + s * lattice[j][k];
                dirs.push_back(std::move(d));
            }
    bool improved = true;
    while (improved) {
        improved = false;
        for (auto& d : dirs) {
            long long t = best_integer_shift(x, d);
            if (t == 0) continue;
            IntVec y = x;
            for (std::size_t k = 0; k < x.size(); ++k) y[k] += t * d[k];
            if (l1_norm(y) < l1_norm(x) || (l1_norm(y) == l1_norm(x) && y < x)) {
                x = std::move(y);
                improved = true;
            }
        }
    }
}

// Reduced row echelon form over Q, kept together with the transform so that the same
// left-hand side can be solved cheaply for many right-hand sides.
class RationalSystem {
public:
    RationalSystem(const IntMat& A, std::size_t ncols) : rows_(A.size()), cols_(ncols) {
        R_.assign(rows_, std::vector<Rational>(cols_));
        T_.assign(rows_, std::vector<Rational>(rows_));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) R_[i][j] = A[i][j];
            T_[i][i] = Rational(1);
        }
        std::size_t r = 0;
        is_pivot_.assign(cols_, false);
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && R_[p][c].numerator() == 0) ++p;
            if (p == rows_) continue;
            std::swap(R_[p], R_[r]);
            std::swap(T_[p], T_[r]);
            Rational inv = Rational(1) / R_[r][c];
            for (auto& x : R_[r]) x *= inv;
            for (auto& x : T_[r]) x *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || R_[i][c].numerator() == 0) continue;
                Rational f = R_[i][c];
                for (std::size_t j = 0; j < cols_; ++j) R_[i][j] -= f * R_[r][j];
                for (std::size_t j = 0; j < rows_; ++j) T_[i][j] -= f * T_[r][j];
            }
            pivots_.push_back(c);
            is_pivot_[c] = true;
            ++r;
        }
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_pivot_[c]) free_.push_back(c);
    }

    const std::vector<std::size_t>& free_columns() const { return free_; }

    // Calls visit(x) for every solution of A x = b with all entries in {0,1}.
    void enumerate_binary(const IntVec& b, const std::function<void(const IntVec&)>& visit) const {
        std::vector<Rational> tb(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j)
                if (T_[i][j].numerator() != 0) tb[i] += T_[i][j] * Rational(b[j]);
        for (std::size_t i = pivots_.size(); i < rows_; ++i)
            if (tb[i].numerator() != 0) return;
        const std::size_t k = free_.size();
        IntVec x(cols_, 0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            for (std::size_t f = 0; f < k; ++f) x[free_[f]] = (mask >> f) & 1u;
            bool ok = true;
            for (std::size_t r = 0; r < pivots_.size() && ok; ++r) {
                Rational v = tb[r];
                for (std::size_t f = 0; f < k; ++f)
                    if (x[free_[f]]) v -= R_[r][free_[f]];
                if (v.numerator() == 0)
                    x[pivots_[r]] = 0;
                else if (v == Rational(1))
                    x[pivots_[r]] = 1;
                else
                    ok = false;
            }
            if (ok) visit(x);
        }
    }

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Rational>> R_, T_;
    std::vector<std::size_t> pivots_, free_;
    std::vector<bool> is_pivot_;
};

}  // namespace hfk
