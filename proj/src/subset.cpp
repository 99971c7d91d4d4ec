#include "formedflags/subset.hpp"

#include <algorithm>

#include "formedflags/errors.hpp"

namespace formedflags {

Subset::Subset(std::initializer_list<int> elems)
{
    for (int e : elems) {
        if (e < 1 || e > 32)
            throw DomainError("subset element out of range: " + std::to_string(e));
        insert(e);
    }
}

Subset Subset::of(const std::vector<int>& elems)
{
    Subset s;
    for (int e : elems) {
        if (e < 1 || e > 32)
            throw DomainError("subset element out of range: " + std::to_string(e));
        s.insert(e);
    }
    return s;
}

int Subset::max() const { return bits_ ? 32 - std::countl_zero(bits_) : 0; }

int Subset::min() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }

std::vector<int> Subset::elements() const
{
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

Subset Subset::reflect(int k) const
{
    Subset r;
    for (int i : elements())
        if (k - i >= 1 && k - i <= k - 1)
            r.insert(k - i);
    return r;
}

Subset Subset::scale(int c) const
{
    Subset r;
    for (int i : elements())
        r.insert(c * i);
    return r;
}

std::string Subset::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (int i : elements()) {
        if (!first)
            s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

bool lex_less(Subset a, Subset b)
{
    auto x = a.elements();
    auto y = b.elements();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::vector<Subset> all_subsets(int k)
{
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint32_t b = 0; b < (1u << k); ++b)
        out.emplace_back(b);
    return out;
}

} // namespace formedflags
