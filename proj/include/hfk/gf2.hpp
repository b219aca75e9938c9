#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace hfk {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    bool operator==(const BitVec& o) const = default;

    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    // Index of the lowest set bit, or -1.
    long lowest() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<long>(k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k])));
        return -1;
    }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    static BitVec unit(std::size_t n, std::size_t i) {
        BitVec v(n);
        v.set(i);
        return v;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Incremental echelon basis of a subspace of F2^dim. Each stored vector carries a tag
// recording which combination of inserted inputs produced it, so membership queries can
// also return a preimage.
class EchelonBasis {
public:
    EchelonBasis(std::size_t dim, std::size_t tag_dim) : dim_(dim), tag_dim_(tag_dim), slot_(dim, -1) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return vecs_.size(); }

    struct Reduced {
        BitVec residue;
        BitVec tag;
    };

    Reduced reduce(BitVec v, BitVec tag) const {
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!v.get(i) || slot_[i] < 0) continue;
            v ^= vecs_[static_cast<std::size_t>(slot_[i])];
            tag ^= tags_[static_cast<std::size_t>(slot_[i])];
        }
        return {std::move(v), std::move(tag)};
    }

    BitVec residue(const BitVec& v) const { return reduce(v, BitVec(tag_dim_)).residue; }

    // Inserts v with the given tag; returns the reduced residue (zero when dependent)
    // and the combined tag, which for a dependent input is a relation among inputs.
    Reduced insert(const BitVec& v, const BitVec& tag) {
        Reduced r = reduce(v, tag);
        long p = r.residue.lowest();
        if (p >= 0) {
            slot_[static_cast<std::size_t>(p)] = static_cast<long>(vecs_.size());
            vecs_.push_back(r.residue);
            tags_.push_back(r.tag);
        }
        return r;
    }

    bool insert(const BitVec& v) { return insert(v, BitVec(tag_dim_)).residue.any(); }

    bool contains(const BitVec& v) const { return residue(v).none(); }

    // Tag combination whose inputs sum to v, if v lies in the span.
    std::optional<BitVec> express(const BitVec& v) const {
        Reduced r = reduce(v, BitVec(tag_dim_));
        if (r.residue.any()) return std::nullopt;
        return r.tag;
    }

private:
    std::size_t dim_;
    std::size_t tag_dim_;
    std::vector<long> slot_;
    std::vector<BitVec> vecs_;
    std::vector<BitVec> tags_;
};

// Dense matrix over F2 stored by columns.
struct Gf2Matrix {
    std::size_t rows = 0;
    std::vector<BitVec> cols;

    Gf2Matrix() = default;
    Gf2Matrix(std::size_t r, std::size_t c) : rows(r), cols(c, BitVec(r)) {}

    std::size_t ncols() const { return cols.size(); }
    bool get(std::size_t i, std::size_t j) const { return cols[j].get(i); }
    void set(std::size_t i, std::size_t j, bool v = true) { cols[j].set(i, v); }

    BitVec apply(const BitVec& v) const {
        BitVec out(rows);
        for (auto j : v.ones()) out ^= cols[j];
        return out;
    }

    Gf2Matrix operator*(const Gf2Matrix& o) const {
        Gf2Matrix m(rows, o.ncols());
        for (std::size_t j = 0; j < o.ncols(); ++j) m.cols[j] = apply(o.cols[j]);
        return m;
    }

    bool is_zero() const {
        for (auto& c : cols)
            if (c.any()) return false;
        return true;
    }

    std::size_t rank() const {
        EchelonBasis b(rows, 0);
        for (auto& c : cols) b.insert(c);
        return b.rank();
    }
};

// Basis of {v : sum_j v_j cols[j] = 0}.
inline std::vector<BitVec> kernel(const std::vector<BitVec>& cols, std::size_t rows) {
    EchelonBasis b(rows, cols.size());
    std::vector<BitVec> out;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto r = b.insert(cols[j], BitVec::unit(cols.size(), j));
        if (r.residue.none()) out.push_back(r.tag);
    }
    return out;
}

}  // namespace hfk
