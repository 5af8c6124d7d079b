#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace clpolar {

// Fixed-size bit vector over 64-bit words. Trailing bits of the last word
// are kept zero so popcount and word-wise comparisons need no masking.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    std::size_t count_and(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < w_.size(); ++k)
            c += static_cast<std::size_t>(__builtin_popcountll(w_[k] & o.w_[k]));
        return c;
    }

    // popcount of this & a & b
    std::size_t count_and2(const Bitset& a, const Bitset& b) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < w_.size(); ++k)
            c += static_cast<std::size_t>(__builtin_popcountll(w_[k] & a.w_[k] & b.w_[k]));
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    // complement within the declared size
    Bitset complement() const {
        Bitset r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const = default;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                f(k * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_indices() const {
        std::vector<std::uint32_t> v;
        v.reserve(count());
        for_each([&](std::size_t i) { v.push_back(static_cast<std::uint32_t>(i)); });
        return v;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~std::uint64_t(0)) >> (64 - (n_ & 63));
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace clpolar
