#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "extorder/errors.hpp"

namespace extorder {

/// Hard cap on ground-set size: subsets are single 64-bit words and element
/// ids stay clear of the sign bit.
inline constexpr int kMaxGroundSize = 62;

/// A set of ground-set elements (ids 0..61) as a bit mask.  The universal
/// currency of the library; cheap to copy and compare.
class Subset {
public:
    constexpr Subset() = default;
    explicit constexpr Subset(std::uint64_t bits) : bits_(bits) {}

    static constexpr Subset empty() { return Subset{}; }
    static constexpr Subset single(int e) { return Subset{std::uint64_t{1} << e}; }
    static constexpr Subset full(int n) {
        return Subset{n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n))};
    }
    static Subset of(std::initializer_list<int> elems) {
        Subset s;
        for (int e : elems) s = s.with(e);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int e) const { return (bits_ >> e) & 1; }
    constexpr bool empty_set() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr Subset with(int e) const { return Subset{bits_ | (std::uint64_t{1} << e)}; }
    constexpr Subset without(int e) const { return Subset{bits_ & ~(std::uint64_t{1} << e)}; }

    constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits_ | b.bits_}; }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits_ & b.bits_}; }
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits_ & ~b.bits_}; }
    friend constexpr Subset operator^(Subset a, Subset b) { return Subset{a.bits_ ^ b.bits_}; }
    friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
    friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

    /// Smallest element id; -1 when empty.
    constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
    /// Largest element id; -1 when empty.
    constexpr int last() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    struct Iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        Iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const Iterator& o) const { return rest != o.rest; }
    };
    Iterator begin() const { return {bits_}; }
    Iterator end() const { return {0}; }

private:
    std::uint64_t bits_ = 0;
};

/// Canonical ordering used for all enumerated output: cardinality first, then
/// numeric mask value.
inline bool card_mask_less(Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
}

/// Runs `fn` on every subset of `ground` (including the empty set).
template <typename F>
void for_each_subset(Subset ground, F&& fn) {
    std::uint64_t m = ground.bits();
    std::uint64_t s = 0;
    while (true) {
        fn(Subset{s});
        if (s == m) break;
        s = (s - m) & m; // next submask in increasing numeric order
    }
}

/// All subsets of `ground`, sorted (cardinality, mask).
std::vector<Subset> subsets_sorted(Subset ground);

/// Runs `fn` on every k-element subset of `elems`, in lex order of index
/// combinations (hence increasing mask order when `elems` is ascending).
template <typename F>
void for_each_combination(const std::vector<int>& elems, int k, F&& fn) {
    int m = static_cast<int>(elems.size());
    if (k < 0 || k > m) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Subset s;
        for (int i : idx) s = s.with(elems[static_cast<std::size_t>(i)]);
        fn(s);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// A total order on ground-set elements: `perm[i]` is the element at position
/// i, positions increasing from smallest to largest.  All activity notions
/// depend on this order.
class GroundOrder {
public:
    GroundOrder() = default;
    GroundOrder(int n, std::vector<int> perm);

    static GroundOrder identity(int n);

    int n() const { return n_; }
    const std::vector<int>& perm() const { return perm_; }
    int position(int e) const { return pos_[static_cast<std::size_t>(e)]; }
    bool less(int a, int b) const { return position(a) < position(b); }

    /// Same elements with all positions flipped.
    GroundOrder reversed() const;

    int min_of(Subset s) const;
    int max_of(Subset s) const;

    /// Ascending-sequence lexicographic comparison of sets, proper prefixes
    /// smaller.  a < b iff the ascending sequence of a (under this order)
    /// lex-precedes that of b.
    bool lex_less_prefix_small(Subset a, Subset b) const;
    /// Same comparison but proper prefixes larger.
    bool lex_less_prefix_large(Subset a, Subset b) const;

    bool operator==(const GroundOrder&) const = default;

private:
    int n_ = 0;
    std::vector<int> perm_;
    std::vector<int> pos_;
};

/// "{1,3,4}"-style rendering with 1-based ids, for witnesses and logs.
std::string to_string(Subset s);

} // namespace extorder
