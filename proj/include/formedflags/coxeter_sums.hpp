#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "formedflags/igusa_function.hpp"
#include "formedflags/laurent_poly.hpp"
#include "formedflags/permutation.hpp"
#include "formedflags/report.hpp"
#include "formedflags/streams.hpp"

namespace formedflags {

// Integer-weighted tallies of a statistic, one dense table per descent set.
class DescentBuckets {
public:
    DescentBuckets(int n_positions, int stat_lo, int stat_hi);

    int n_positions() const { return n_positions_; }
    void add(Subset D, int stat, long long weight)
    {
        if (stat < lo_ || stat > hi_)
            throw_out_of_range(stat);
        table_[D.bits() * width_ + static_cast<std::size_t>(stat - lo_)] += weight;
    }
    void merge(const DescentBuckets& o);
    // Bucket J becomes the sum of the buckets D subset J.
    DescentBuckets subset_sums() const;
    LaurentPoly poly(Subset D, const std::string& var = "Y") const;

private:
    [[noreturn]] void throw_out_of_range(int stat) const;

    int n_positions_;
    int lo_;
    int hi_;
    std::size_t width_;
    std::vector<long long> table_;
};

// Tallies sum over w of chi(w) Y^{stat(w)} by D_L(w), splitting the stream
// into ranges across workers and merging in worker order.
template <class Stat, class Char>
DescentBuckets descent_accumulate(const PermutationStream& s, Stat stat, Char chi, int lo, int hi,
                                  unsigned workers = 1)
{
    std::vector<DescentBuckets> parts(std::max(1u, workers), DescentBuckets(s.n() - 1, lo, hi));
    parallel_ranges(s.size(), workers, [&](std::uint64_t b, std::uint64_t e, unsigned k) {
        DescentBuckets& acc = parts[k];
        s.for_range(b, e, [&](const Permutation& w) { acc.add(left_descents(w), stat(w), chi(w)); });
    });
    DescentBuckets total = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k)
        total.merge(parts[k]);
    return total;
}

// sum_w chi(w) Y^{b . l_side(w)} sum_{D_L(w) subset J} F_J with
// F_J = prod_{j in J} X_j/(1 - X_j), as a function of X_1..X_{n-1}.
IgusaFunction coxeter_igusa(int n, Subgroup g, const StatWeights& b, Character chi, Side side,
                            std::uint64_t max_group_size = kDefaultMaxGroupSize);

// Complement identities for parabolic lengths against w0, all w and all I.
VerificationReport verify_length_complements(int n);

// Both functional equations of coxeter_igusa under (Y, X) -> (1/Y, 1/X).
std::vector<VerificationReport> verify_coxeter_igusa(int n, Subgroup g, const StatWeights& b, Character chi);

struct MSetResult {
    int n = 0;
    std::uint64_t size = 0;
    std::uint64_t chessboard_size = 0;
    bool equals_chessboard = false;
};

// Elements w for which every w s_i changes the descent set or the parity
// inversion count.
MSetResult m_set(int n);

} // namespace formedflags
