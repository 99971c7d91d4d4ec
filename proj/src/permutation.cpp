#include "formedflags/permutation.hpp"

#include <algorithm>
#include <bit>

#include "formedflags/errors.hpp"

namespace formedflags {

Permutation::Permutation(const std::vector<int>& images)
{
    if (images.size() > static_cast<std::size_t>(kMaxDegree))
        throw DomainError("Permutation: degree above " + std::to_string(kMaxDegree));
    n_ = static_cast<int>(images.size());
    std::array<bool, kMaxDegree + 1> seen{};
    for (int i = 0; i < n_; ++i) {
        int v = images[static_cast<std::size_t>(i)];
        if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)])
            throw DomainError("Permutation: images are not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
        img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(v);
}

Permutation Permutation::longest(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(v);
}

Permutation Permutation::simple(int n, int i)
{
    if (i < 1 || i >= n)
        throw DomainError("Permutation::simple: index out of range");
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
    return p;
}

std::vector<int> Permutation::images() const { return {img_.begin(), img_.begin() + n_}; }

Permutation Permutation::operator*(const Permutation& w) const
{
    if (w.n_ != n_)
        throw DomainError("Permutation: degree mismatch");
    Permutation r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i)
        r.img_[static_cast<std::size_t>(i)] = w.img_[img_[static_cast<std::size_t>(i)] - 1u];
    return r;
}

Permutation Permutation::inverse() const
{
    Permutation r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i)
        r.img_[img_[static_cast<std::size_t>(i)] - 1u] = static_cast<std::uint8_t>(i + 1);
    return r;
}

std::string Permutation::to_string() const
{
    std::string s = "(";
    for (int i = 0; i < n_; ++i)
        s += (i ? "," : "") + std::to_string(img_[static_cast<std::size_t>(i)]);
    return s + ")";
}

int length(const Permutation& w)
{
    const std::uint8_t* a = w.data();
    int c = 0;
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j)
            c += a[i] > a[j];
    return c;
}

Subset left_descents(const Permutation& w)
{
    const std::uint8_t* a = w.data();
    std::uint32_t d = 0;
    for (int i = 0; i + 1 < w.n(); ++i)
        if (a[i] > a[i + 1])
            d |= 1u << i;
    return Subset(d);
}

Subset right_descents(const Permutation& w) { return left_descents(w.inverse()); }

namespace {

// block[k] labels the maximal runs of consecutive letters joined by I.
std::array<int, kMaxDegree + 1> blocks_of(Subset I, int n)
{
    std::array<int, kMaxDegree + 1> block{};
    for (int k = 2; k <= n; ++k)
        block[static_cast<std::size_t>(k)] = block[static_cast<std::size_t>(k - 1)] + (I.contains(k - 1) ? 0 : 1);
    return block;
}

} // namespace

int parabolic_length(const Permutation& w, Subset I, Side side)
{
    const int n = w.n();
    auto block = blocks_of(I, n);
    const std::uint8_t* a = w.data();
    int c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a[i] <= a[j])
                continue;
            // right: positions in different blocks; left: values in different blocks
            bool counted = side == Side::right ? block[static_cast<std::size_t>(i + 1)] != block[static_cast<std::size_t>(j + 1)]
                                               : block[a[i]] != block[a[j]];
            c += counted;
        }
    return c;
}

StatWeights StatWeights::parity_weights(int n)
{
    StatWeights w;
    w.n = n;
    const int s = n - 1;
    for (std::uint32_t I = 0; I + 1 < (1u << s); ++I) {
        int k = std::popcount(I);
        long v = 1L << (s - k - 1);
        w.b[I] = k % 2 ? -v : v;
    }
    return w;
}

StatWeights StatWeights::coxeter_length(int n)
{
    StatWeights w;
    w.n = n;
    w.b[0] = 1;
    return w;
}

StatWeights StatWeights::conjugated_by_longest() const
{
    StatWeights r;
    r.n = n;
    for (const auto& [I, v] : b)
        r.b[Subset(I).reflect(n).bits()] = v;
    return r;
}

long weighted_length(const Permutation& w, const StatWeights& b, Side side)
{
    if (b.n != w.n())
        throw DomainError("weighted_length: degree mismatch");
    long total = 0;
    for (const auto& [I, v] : b.b)
        if (v != 0)
            total += v * parabolic_length(w, Subset(I), side);
    return total;
}

int parity_inversions(const Permutation& w)
{
    const std::uint8_t* a = w.data();
    int c = 0;
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j)
            c += (a[i] > a[j]) && ((i ^ j) & 1);
    return c;
}

bool is_chessboard(const Permutation& w)
{
    const std::uint8_t* a = w.data();
    for (int i = 1; i < w.n(); ++i)
        if (((a[i] + i) & 1) != ((a[0]) & 1))
            return false;
    return true;
}

int sign_character(const Permutation& w) { return length(w) % 2 ? -1 : 1; }

int tau_character(const Permutation& w)
{
    if (!is_chessboard(w))
        throw DomainError("tau: not a chessboard element: " + w.to_string());
    return w.n() == 0 || (w.image(1) % 2 == 1) ? 1 : -1;
}

int chi_epsilon(const Permutation& w, int epsilon)
{
    int s = sign_character(w);
    if (w.n() % 2 == 1 || epsilon == 1)
        return s;
    return s * tau_character(w);
}

int character_value(Character c, const Permutation& w)
{
    switch (c) {
    case Character::trivial:
        return 1;
    case Character::sign:
        return sign_character(w);
    case Character::tau:
        return tau_character(w);
    case Character::chi_plus:
        return chi_epsilon(w, 1);
    case Character::chi_minus:
        return chi_epsilon(w, -1);
    }
    return 1;
}

std::string to_string(Character c)
{
    switch (c) {
    case Character::trivial:
        return "trivial";
    case Character::sign:
        return "sign";
    case Character::tau:
        return "tau";
    case Character::chi_plus:
        return "chi+";
    case Character::chi_minus:
        return "chi-";
    }
    return "?";
}

} // namespace formedflags
