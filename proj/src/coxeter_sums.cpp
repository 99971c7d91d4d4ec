#include "formedflags/coxeter_sums.hpp"

#include <algorithm>
#include <cstdlib>

#include "formedflags/errors.hpp"

namespace formedflags {

DescentBuckets::DescentBuckets(int n_positions, int stat_lo, int stat_hi)
    : n_positions_(n_positions), lo_(stat_lo), hi_(stat_hi), width_(static_cast<std::size_t>(stat_hi - stat_lo + 1))
{
    if (stat_hi < stat_lo || n_positions < 0 || n_positions > 20)
        throw DomainError("DescentBuckets: bad shape");
    table_.assign((std::size_t{1} << n_positions) * width_, 0);
}

void DescentBuckets::throw_out_of_range(int stat) const
{
    throw ConsistencyError("DescentBuckets: statistic " + std::to_string(stat) + " outside [" + std::to_string(lo_) +
                           "," + std::to_string(hi_) + "]");
}

void DescentBuckets::merge(const DescentBuckets& o)
{
    if (o.n_positions_ != n_positions_ || o.lo_ != lo_ || o.hi_ != hi_)
        throw DomainError("DescentBuckets: merge of differently shaped tables");
    for (std::size_t i = 0; i < table_.size(); ++i)
        table_[i] += o.table_[i];
}

DescentBuckets DescentBuckets::subset_sums() const
{
    DescentBuckets r = *this;
    const std::uint32_t masks = 1u << n_positions_;
    for (int b = 0; b < n_positions_; ++b) {
        const std::uint32_t bit = 1u << b;
        for (std::uint32_t J = 0; J < masks; ++J) {
            if (!(J & bit))
                continue;
            long long* dst = &r.table_[J * width_];
            const long long* src = &r.table_[(J ^ bit) * width_];
            for (std::size_t k = 0; k < width_; ++k)
                dst[k] += src[k];
        }
    }
    return r;
}

LaurentPoly DescentBuckets::poly(Subset D, const std::string& var) const
{
    std::map<int, mpz_class> t;
    const long long* row = &table_[D.bits() * width_];
    for (std::size_t k = 0; k < width_; ++k)
        if (row[k] != 0)
            t.emplace(lo_ + static_cast<int>(k), mpz_class(std::to_string(row[k])));
    return LaurentPoly::from_terms(t, var);
}

namespace {

void stat_range(int n, const StatWeights& b, int* lo, int* hi)
{
    long span = 0;
    for (const auto& [I, v] : b.b)
        span += std::labs(v);
    long maxlen = static_cast<long>(n) * (n - 1) / 2;
    *lo = static_cast<int>(-span * maxlen);
    *hi = static_cast<int>(span * maxlen);
}

} // namespace

IgusaFunction coxeter_igusa(int n, Subgroup g, const StatWeights& b, Character chi, Side side,
                            std::uint64_t max_group_size)
{
    PermutationStream s(n, g, max_group_size);
    int lo = 0;
    int hi = 0;
    stat_range(n, b, &lo, &hi);
    DescentBuckets buckets = descent_accumulate(
        s, [&](const Permutation& w) { return static_cast<int>(weighted_length(w, b, side)); },
        [&](const Permutation& w) { return character_value(chi, w); }, lo, hi, worker_count());
    DescentBuckets sums = buckets.subset_sums();
    std::vector<LaurentPoly> F;
    F.reserve(std::size_t{1} << (n - 1));
    for (std::uint32_t J = 0; J < (1u << (n - 1)); ++J)
        F.push_back(sums.poly(Subset(J), "Y"));
    return IgusaFunction::from_F_coeffs(n - 1, F, "Y");
}

VerificationReport verify_length_complements(int n)
{
    VerificationReport rep;
    rep.claim = "parabolic length complements in S_" + std::to_string(n);
    const Permutation w0 = Permutation::longest(n);
    PermutationStream s(n, Subgroup::full);
    for (Subset I : all_subsets(n - 1)) {
        const Subset Ic = I.reflect(n);
        const int lL = parabolic_length(w0, I, Side::left);
        const int lR = parabolic_length(w0, I, Side::right);
        s.for_each([&](const Permutation& w) {
            rep.check(I, parabolic_length(w0 * w, I, Side::left) + parabolic_length(w, I, Side::left), lL,
                      "left, w0 w, w = " + w.to_string());
            rep.check(I, parabolic_length(w * w0, I, Side::left) + parabolic_length(w, Ic, Side::left), lL,
                      "left, w w0, w = " + w.to_string());
            rep.check(I, parabolic_length(w0 * w, I, Side::right) + parabolic_length(w, Ic, Side::right), lR,
                      "right, w0 w, w = " + w.to_string());
            rep.check(I, parabolic_length(w * w0, I, Side::right) + parabolic_length(w, I, Side::right), lR,
                      "right, w w0, w = " + w.to_string());
        });
    }
    return rep;
}

namespace {

void compare_igusa(VerificationReport& rep, const IgusaFunction& lhs, const IgusaFunction& rhs)
{
    for (Subset K : all_subsets(lhs.n_vars()))
        rep.check(K, lhs.coeff(K), rhs.coeff(K), "e-basis coefficient");
}

} // namespace

std::vector<VerificationReport> verify_coxeter_igusa(int n, Subgroup g, const StatWeights& b, Character chi)
{
    const Permutation w0 = Permutation::longest(n);
    const int sign = ((n - 1) % 2 ? -1 : 1) * character_value(chi, w0);
    std::vector<VerificationReport> out;
    for (Side side : {Side::left, Side::right}) {
        VerificationReport rep;
        rep.claim = std::string(side == Side::left ? "left" : "right") + " functional equation, n=" + std::to_string(n) +
                    (g == Subgroup::full ? ", full group" : ", chessboard") + ", chi=" + to_string(chi);
        IgusaFunction ig = coxeter_igusa(n, g, b, chi, side);
        IgusaFunction lhs = ig.invert_vars().invert_base();
        const StatWeights& b_rhs = side == Side::left ? b.conjugated_by_longest() : b;
        IgusaFunction other = side == Side::left ? coxeter_igusa(n, g, b_rhs, chi, side) : ig;
        long e = weighted_length(w0, b, side);
        IgusaFunction rhs = other.scaled(LaurentPoly::monomial(sign, static_cast<int>(-e), "Y"));
        compare_igusa(rep, lhs, rhs);
        out.push_back(rep);
    }
    return out;
}

MSetResult m_set(int n)
{
    if (n < 1 || n > 8)
        throw DomainError("m_set: n must lie in [1, 8]");
    MSetResult r;
    r.n = n;
    r.chessboard_size = subgroup_order(n, Subgroup::chessboard);
    bool same = true;
    PermutationStream s(n, Subgroup::full);
    s.for_each([&](const Permutation& w) {
        const Subset D = left_descents(w);
        const int L = parity_inversions(w);
        bool member = true;
        for (int i = 1; i < n && member; ++i) {
            Permutation ws = w * Permutation::simple(n, i);
            if (left_descents(ws) == D && parity_inversions(ws) == L)
                member = false;
        }
        if (member)
            ++r.size;
        if (member != is_chessboard(w))
            same = false;
    });
    r.equals_chessboard = same;
    return r;
}

} // namespace formedflags
