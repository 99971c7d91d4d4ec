#pragma once

#include <cstdint>
#include <functional>

#include "formedflags/permutation.hpp"

namespace formedflags {

enum class Subgroup { full, chessboard };

inline constexpr std::uint64_t kDefaultMaxGroupSize = 10'000'000;

std::uint64_t subgroup_order(int n, Subgroup g);

// Lexicographic enumeration (on images) of S_n or of the chessboard
// elements, addressable by rank so that work can be split into ranges.
class PermutationStream {
public:
    PermutationStream(int n, Subgroup g, std::uint64_t max_size = kDefaultMaxGroupSize);

    int n() const { return n_; }
    Subgroup subgroup() const { return g_; }
    std::uint64_t size() const { return size_; }

    Permutation unrank(std::uint64_t r) const;
    // Lexicographic successor within the stream; false at the end.
    bool next(Permutation& w) const;

    template <class F> void for_range(std::uint64_t begin, std::uint64_t end, F&& f) const
    {
        if (begin >= end)
            return;
        Permutation w = unrank(begin);
        for (std::uint64_t r = begin;;) {
            f(w);
            if (++r == end || !next(w))
                break;
        }
    }
    template <class F> void for_each(F&& f) const { for_range(0, size_, std::forward<F>(f)); }

private:
    int n_;
    Subgroup g_;
    std::uint64_t size_;
};

// Worker count from FORMEDFLAGS_THREADS, defaulting to the hardware count.
unsigned worker_count();

// Runs body(begin, end, worker) over a partition of [0, total) into
// contiguous ranges, one per worker, and joins.
void parallel_ranges(std::uint64_t total, unsigned workers,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body);

} // namespace formedflags
