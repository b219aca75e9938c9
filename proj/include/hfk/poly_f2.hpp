#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hfk {

// Polynomial in theta over F2; bit i is the coefficient of theta^i.
class PolyF2 {
public:
    PolyF2() = default;
    static PolyF2 monomial(int k) {
        PolyF2 p;
        p.set(k);
        return p;
    }
    static PolyF2 one() { return monomial(0); }

    int degree() const {
        for (int k = static_cast<int>(w_.size()) - 1; k >= 0; --k)
            if (w_[k]) return k * 64 + 63 - std::countl_zero(w_[k]);
        return -1;
    }
    bool is_zero() const { return degree() < 0; }
    bool get(int i) const {
        std::size_t k = static_cast<std::size_t>(i) >> 6;
        return k < w_.size() && ((w_[k] >> (i & 63)) & 1u);
    }
    void set(int i) {
        std::size_t k = static_cast<std::size_t>(i) >> 6;
        if (k >= w_.size()) w_.resize(k + 1, 0);
        w_[k] |= std::uint64_t{1} << (i & 63);
    }
    // theta^k with k = lowest nonzero coefficient, or -1
    int valuation() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    PolyF2& operator+=(const PolyF2& o) {
        if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
        for (std::size_t k = 0; k < o.w_.size(); ++k) w_[k] ^= o.w_[k];
        trim();
        return *this;
    }
    friend PolyF2 operator+(PolyF2 a, const PolyF2& b) { return a += b; }

    PolyF2 shifted(int s) const {
        PolyF2 out;
        int d = degree();
        for (int i = 0; i <= d; ++i)
            if (get(i)) out.set(i + s);
        return out;
    }

    friend PolyF2 operator*(const PolyF2& a, const PolyF2& b) {
        PolyF2 out;
        int d = a.degree();
        for (int i = 0; i <= d; ++i)
            if (a.get(i)) out += b.shifted(i);
        return out;
    }

    // (quotient, remainder)
    friend std::pair<PolyF2, PolyF2> divmod(PolyF2 a, const PolyF2& b) {
        PolyF2 q;
        int db = b.degree();
        for (int da = a.degree(); da >= db && da >= 0; da = a.degree()) {
            q.set(da - db);
            a += b.shifted(da - db);
        }
        return {q, a};
    }

    friend PolyF2 gcd(PolyF2 a, PolyF2 b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    bool operator==(const PolyF2& o) const {
        auto a = *this, b = o;
        a.trim();
        b.trim();
        return a.w_ == b.w_;
    }

    std::string to_string(const std::string& var = "theta") const {
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (!get(i)) continue;
            if (!s.empty()) s += " + ";
            s += i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }
    std::vector<std::uint64_t> w_;
};

using PolyMatrix = std::vector<std::vector<PolyF2>>;  // row-major

// Invariant factors of a matrix over F2[theta] (Smith normal form diagonal, nonzero part,
// each dividing the next).
inline std::vector<PolyF2> snf_over_poly(PolyMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<PolyF2> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest-degree nonzero entry in the trailing block
        int best = -1;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                int dg = m[i][j].degree();
                if (dg >= 0 && (best < 0 || dg < best)) {
                    best = dg;
                    bi = i;
                    bj = j;
                }
            }
        if (best < 0) break;
        std::swap(m[t], m[bi]);
        for (auto& row : m) std::swap(row[t], row[bj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t].is_zero()) continue;
                auto [q, r] = divmod(m[i][t], m[t][t]);
                for (std::size_t j = t; j < cols; ++j) m[i][j] += q * m[t][j];
                if (!r.is_zero()) {
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j].is_zero()) continue;
                auto [q, r] = divmod(m[t][j], m[t][t]);
                for (std::size_t i = t; i < rows; ++i) m[i][j] += q * m[i][t];
                if (!r.is_zero()) {
                    for (auto& row : m) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
        }
        diag.push_back(m[t][t]);
        ++t;
    }
    // enforce divisibility: (a, b) -> (gcd, lcm)
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            PolyF2 g = gcd(diag[i], diag[j]);
            PolyF2 l = divmod(diag[i] * diag[j], g).first;
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

}  // namespace hfk
