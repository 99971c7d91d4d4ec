#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace formedflags {

// Finite set of positive integers below 32, stored as a bit mask
// (bit i-1 holds the element i).
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
    Subset(std::initializer_list<int> elems);
    static Subset of(const std::vector<int>& elems);
    // {1, ..., k}
    static constexpr Subset interval(int lo, int hi)
    {
        std::uint32_t b = 0;
        for (int i = lo; i <= hi; ++i)
            b |= 1u << (i - 1);
        return Subset(b);
    }
    static constexpr Subset full(int k) { return interval(1, k); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool contains(int i) const { return i >= 1 && i <= 32 && ((bits_ >> (i - 1)) & 1u); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool is_subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
    int max() const; // 0 when empty
    int min() const; // 0 when empty
    std::vector<int> elements() const;

    void insert(int i) { bits_ |= 1u << (i - 1); }
    void erase(int i) { bits_ &= ~(1u << (i - 1)); }

    constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
    constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
    constexpr Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }
    constexpr bool operator==(const Subset&) const = default;

    // {k - i : i in this}, keeping only values in [1, k-1]
    Subset reflect(int k) const;
    // {c * i}
    Subset scale(int c) const;

    std::string to_string() const; // "{1,3}"

private:
    std::uint32_t bits_ = 0;
};

// Lexicographic order on the increasing element sequences.
bool lex_less(Subset a, Subset b);

// Every subset of [k], in increasing mask order.
std::vector<Subset> all_subsets(int k);

} // namespace formedflags
