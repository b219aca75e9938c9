#pragma once

#include "hfk/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

namespace hfk {

// Laurent polynomial with integer coefficients. Exponents are stored doubled so that
// half-integer powers stay exact.
class LaurentPoly {
public:
    using Exps = std::vector<int>;

    explicit LaurentPoly(std::vector<std::string> vars = {"t"}) : vars_(std::move(vars)) {}

    static LaurentPoly monomial(std::vector<std::string> vars, Exps exps2, long long coeff = 1) {
        LaurentPoly p(std::move(vars));
        p.add_term(std::move(exps2), coeff);
        return p;
    }
    static LaurentPoly constant(std::vector<std::string> vars, long long c) {
        Exps e(vars.size(), 0);
        return monomial(std::move(vars), std::move(e), c);
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::map<Exps, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exps exps2, long long c) {
        if (exps2.size() != vars_.size()) fail("InvalidPolynomial", "exponent arity mismatch");
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(std::move(exps2), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_vars(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_vars(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly out(vars_);
        for (auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_vars(b);
        LaurentPoly out(a.vars_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Exps e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }

    LaurentPoly pow(int k) const {
        LaurentPoly out = constant(vars_, 1);
        for (int i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    LaurentPoly shifted(const Exps& by2) const {
        LaurentPoly out(vars_);
        for (auto& [e, c] : terms_) {
            Exps f = e;
            for (std::size_t i = 0; i < f.size(); ++i) f[i] += by2[i];
            out.terms_[f] = c;
        }
        return out;
    }

    // Canonical representative up to multiplication by +-monomials: lowest monomial (lex) at
    // exponent zero, leading coefficient (lex) positive.
    LaurentPoly normalized() const {
        if (is_zero()) return *this;
        Exps low = terms_.begin()->first;
        for (auto& x : low) x = -x;
        LaurentPoly out = shifted(low);
        return out.terms_.rbegin()->second < 0 ? -out : out;
    }

    // Sets variable i to 1 and drops it.
    LaurentPoly specialize_one(std::size_t i) const {
        auto v = vars_;
        v.erase(v.begin() + static_cast<long>(i));
        LaurentPoly out(v);
        for (auto& [e, c] : terms_) {
            Exps f = e;
            f.erase(f.begin() + static_cast<long>(i));
            out.add_term(std::move(f), c);
        }
        return out;
    }

    long long evaluate_at_one() const {
        long long s = 0;
        for (auto& [e, c] : terms_) s += c;
        return s;
    }

    // Coefficients reduced into [0, p).
    LaurentPoly mod(long long p) const {
        LaurentPoly out(vars_);
        for (auto& [e, c] : terms_) out.add_term(e, ((c % p) + p) % p);
        return out;
    }

    bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            long long c = it->second;
            bool unit = true;
            for (int x : it->first) unit &= x == 0;
            s += c < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
            long long a = std::llabs(c);
            std::string mon;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                int x = it->first[i];
                if (x == 0) continue;
                if (!mon.empty()) mon += "*";
                mon += vars_[i];
                if (x != 2) mon += "^" + half_to_string(x);
            }
            if (unit)
                s += std::to_string(a);
            else
                s += (a == 1 ? "" : std::to_string(a) + "*") + mon;
        }
        return s;
    }

private:
    void check_vars(const LaurentPoly& o) const {
        if (vars_ != o.vars_) fail("InvalidPolynomial", "variable sets differ");
    }

    std::vector<std::string> vars_;
    std::map<Exps, long long> terms_;
};

// a / b in the Laurent ring; fails with NotDivisible when the quotient is not a Laurent
// polynomial with integer coefficients.
inline LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) fail("NotDivisible", "division by zero");
    LaurentPoly q(a.vars()), r = a;
    if (a.is_zero()) return q;
    // exponents of an exact quotient lie in the box [min a - min b, max a - max b]
    const std::size_t n = a.nvars();
    auto bounds = [n](const LaurentPoly& p) {
        std::vector<int> lo(n, 1 << 30), hi(n, -(1 << 30));
        for (auto& [e, c] : p.terms())
            for (std::size_t i = 0; i < n; ++i) {
                lo[i] = std::min(lo[i], e[i]);
                hi[i] = std::max(hi[i], e[i]);
            }
        return std::pair{lo, hi};
    };
    auto [alo, ahi] = bounds(a);
    auto [blo, bhi] = bounds(b);
    const auto& [lb, lc] = *b.terms().rbegin();
    while (!r.is_zero()) {
        const auto& [lr, rc] = *r.terms().rbegin();
        LaurentPoly::Exps e(n);
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = lr[i] - lb[i];
            if (e[i] < alo[i] - blo[i] || e[i] > ahi[i] - bhi[i])
                fail("NotDivisible", a.to_string() + " by " + b.to_string());
        }
        if (rc % lc != 0) fail("NotDivisible", a.to_string() + " by " + b.to_string());
        auto t = LaurentPoly::monomial(a.vars(), e, rc / lc);
        q += t;
        r -= t * b;
    }
    return q;
}

inline bool equivalent(const LaurentPoly& a, const LaurentPoly& b) { return a.normalized() == b.normalized(); }

// 1 + t + ... + t^(n-1) in a single variable.
inline LaurentPoly geometric_sum(int n, const std::string& var = "t") {
    LaurentPoly p({var});
    for (int i = 0; i < n; ++i) p.add_term({2 * i}, 1);
    return p;
}

// Parses terms like "t-1+t^-1", "3*t^2", "-t^1/2", "2t^(-3/2)" in one variable.
inline LaurentPoly parse_laurent(const std::string& text, const std::string& var = "t") {
    LaurentPoly p({var});
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto bad = [&](const std::string& why) { fail("UsageError", "bad polynomial '" + text + "': " + why); };
    auto read_int = [&]() {
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) bad("expected a number");
        return std::stoll(text.substr(start, i - start));
    };
    skip();
    if (i == n) bad("empty");
    bool first = true;
    while (true) {
        skip();
        if (i == n) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            bad("expected + or -");
        }
        first = false;
        long long coeff = 1;
        bool have_coeff = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = read_int();
            have_coeff = true;
            skip();
            if (i < n && text[i] == '*') {
                ++i;
                skip();
            }
        }
        int exp2 = 0;
        if (text.compare(i, var.size(), var) == 0) {
            i += var.size();
            exp2 = 2;
            skip();
            if (i < n && text[i] == '^') {
                ++i;
                skip();
                bool paren = i < n && text[i] == '(';
                if (paren) ++i;
                int es = 1;
                if (i < n && (text[i] == '-' || text[i] == '+')) {
                    es = text[i] == '-' ? -1 : 1;
                    ++i;
                }
                long long num = read_int();
                long long den = 1;
                if (i < n && text[i] == '/') {
                    ++i;
                    den = read_int();
                }
                if (den != 1 && den != 2) bad("exponents must be integers or halves");
                exp2 = static_cast<int>(es * num * (den == 1 ? 2 : 1));
                if (paren) {
                    if (i >= n || text[i] != ')') bad("missing )");
                    ++i;
                }
            }
        } else if (!have_coeff) {
            bad("expected a term");
        }
        p.add_term({exp2}, sign * coeff);
    }
    return p;
}

}  // namespace hfk
