#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace framelift {

inline constexpr int kMaxElements = 32;

// Subset of a ground set of at most 32 elements, keyed by ground-set position.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

    static constexpr ElementSet single(int i) { return ElementSet(std::uint32_t{1} << i); }
    static constexpr ElementSet full(int n) {
        return ElementSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
    }
    static ElementSet of(std::initializer_list<int> ids) {
        ElementSet s;
        for (int i : ids) s = s.with(i);
        return s;
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr int min() const { return std::countr_zero(bits_); }
    constexpr int max() const { return 31 - std::countl_zero(bits_); }

    constexpr ElementSet with(int i) const { return ElementSet(bits_ | (std::uint32_t{1} << i)); }
    constexpr ElementSet without(int i) const { return ElementSet(bits_ & ~(std::uint32_t{1} << i)); }

    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
    friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return ElementSet(a.bits_ ^ b.bits_); }
    friend constexpr bool operator==(ElementSet a, ElementSet b) = default;
    friend constexpr auto operator<=>(ElementSet a, ElementSet b) = default;

    ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
    ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint32_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    std::uint32_t bits_ = 0;
};

// Calls f(subset) for every k-element subset of `universe`, in lexicographic
// order of element positions.
template <class F>
void for_each_subset_of_size(ElementSet universe, int k, F&& f) {
    const std::vector<int> ids = universe.to_vector();
    const int n = static_cast<int>(ids.size());
    if (k < 0 || k > n) return;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        ElementSet s;
        for (int p : pick) s = s.with(ids[p]);
        f(s);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace framelift
