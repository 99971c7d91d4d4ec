#include "formedflags/streams.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "formedflags/errors.hpp"

namespace formedflags {

namespace {

std::uint64_t factorial(int k)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

// Chessboard words: position p (0-based) holds a value of parity
// (w[0] + p) mod 2. Completions of a prefix only depend on how many
// positions of each kind remain.
std::uint64_t chess_completions(int n, int filled)
{
    int same = 0;
    int other = 0;
    for (int p = filled; p < n; ++p)
        (p % 2 == 0 ? same : other)++;
    return factorial(same) * factorial(other);
}

bool parity_ok(int n, int first_value)
{
    // Odd n forces odd positions to be filled by odd values.
    return n % 2 == 0 || first_value % 2 == 1;
}

} // namespace

std::uint64_t subgroup_order(int n, Subgroup g)
{
    if (n < 0 || n > kMaxDegree)
        throw DomainError("subgroup_order: degree out of range");
    if (g == Subgroup::full)
        return factorial(n);
    if (n == 0)
        return 1;
    if (n % 2)
        return factorial((n + 1) / 2) * factorial(n / 2);
    return 2 * factorial(n / 2) * factorial(n / 2);
}

PermutationStream::PermutationStream(int n, Subgroup g, std::uint64_t max_size) : n_(n), g_(g)
{
    if (n < 1 || n > kMaxDegree)
        throw DomainError("PermutationStream: degree out of range");
    size_ = subgroup_order(n, g);
    if (size_ > max_size)
        throw ResourceError("group of order " + std::to_string(size_) + " exceeds the limit " + std::to_string(max_size));
}

Permutation PermutationStream::unrank(std::uint64_t r) const
{
    if (r >= size_)
        throw DomainError("unrank: rank out of range");
    Permutation w;
    w.n_ = n_;
    std::vector<bool> used(static_cast<std::size_t>(n_ + 1), false);
    for (int p = 0; p < n_; ++p) {
        bool placed = false;
        for (int v = 1; v <= n_ && !placed; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            std::uint64_t cnt;
            if (g_ == Subgroup::full) {
                cnt = factorial(n_ - p - 1);
            } else {
                int first = p == 0 ? v : w.img_[0];
                if (p == 0 && !parity_ok(n_, v))
                    continue;
                if ((v + p) % 2 != first % 2)
                    continue;
                cnt = chess_completions(n_, p + 1);
            }
            if (r < cnt) {
                w.img_[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(v);
                used[static_cast<std::size_t>(v)] = true;
                placed = true;
            } else {
                r -= cnt;
            }
        }
        if (!placed)
            throw ConsistencyError("unrank: ran out of candidates");
    }
    return w;
}

bool PermutationStream::next(Permutation& w) const
{
    std::uint8_t* a = w.data();
    const int n = n_;
    if (g_ == Subgroup::full)
        return std::next_permutation(a, a + n);

    // Rightmost position p >= 1 that can be increased with a later value
    // of the same parity.
    for (int p = n - 2; p >= 1; --p) {
        int best = -1;
        for (int q = p + 2; q < n; q += 2)
            if (a[q] > a[p] && (best < 0 || a[q] < a[best]))
                best = q;
        if (best < 0)
            continue;
        std::swap(a[p], a[best]);
        for (int s = p + 1; s <= p + 2 && s < n; ++s) {
            std::vector<std::uint8_t> vals;
            for (int q = s; q < n; q += 2)
                vals.push_back(a[q]);
            std::sort(vals.begin(), vals.end());
            int k = 0;
            for (int q = s; q < n; q += 2)
                a[q] = vals[static_cast<std::size_t>(k++)];
        }
        return true;
    }
    int v = a[0] + (n % 2 == 0 ? 1 : 2);
    if (v > n)
        return false;
    // Smallest word with first value v.
    a[0] = static_cast<std::uint8_t>(v);
    std::vector<std::uint8_t> same;
    std::vector<std::uint8_t> other;
    for (int x = 1; x <= n; ++x)
        if (x != v)
            (x % 2 == v % 2 ? same : other).push_back(static_cast<std::uint8_t>(x));
    std::size_t si = 0;
    std::size_t oi = 0;
    for (int p = 1; p < n; ++p)
        a[p] = p % 2 == 0 ? same[si++] : other[oi++];
    return true;
}

unsigned worker_count()
{
    if (const char* env = std::getenv("FORMEDFLAGS_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

void parallel_ranges(std::uint64_t total, unsigned workers,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));
    if (workers == 1) {
        body(0, total, 0);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned k = 0; k < workers; ++k) {
        std::uint64_t b = total * k / workers;
        std::uint64_t e = total * (k + 1) / workers;
        pool.emplace_back([&, b, e, k] {
            try {
                body(b, e, k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);
}

} // namespace formedflags
