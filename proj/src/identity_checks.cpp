#include "formedflags/identity_checks.hpp"

#include <algorithm>
#include <set>

#include "formedflags/igusa_function.hpp"
#include "formedflags/permutation.hpp"
#include "formedflags/qbinomial.hpp"

namespace formedflags {

namespace {

std::vector<Permutation> all_perms(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do
        out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Permutation> parabolic_closure(int n, Subset I)
{
    std::set<Permutation> seen{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
        Permutation x = frontier.back();
        frontier.pop_back();
        for (int i : I.elements()) {
            Permutation y = x * Permutation::simple(n, i);
            if (seen.insert(y).second)
                frontier.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

long long binom(long long n, long long k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

LaurentPoly X_power(int e) { return LaurentPoly::monomial(1, e, "X"); }

} // namespace

VerificationReport verify_parabolic_transversal(int max_n)
{
    VerificationReport r;
    r.claim = "parabolic transversal, n <= " + std::to_string(max_n);
    for (int n = 1; n <= max_n; ++n) {
        auto perms = all_perms(n);
        for (Subset I : all_subsets(n - 1)) {
            auto WI = parabolic_closure(n, I);
            for (const auto& w : perms) {
                int minima = 0;
                for (const auto& v : WI) {
                    Permutation u = w * v.inverse();
                    bool minimal = true;
                    for (int s : I.elements())
                        minimal = minimal && length(u * Permutation::simple(n, s)) > length(u);
                    if (!minimal)
                        continue;
                    ++minima;
                    r.check(I, length(w), length(u) + length(v), "l(w) = l(u) + l(v) for " + w.to_string());
                    r.check(I, length(u), parabolic_length(w, I, Side::left), "minimal length " + w.to_string());
                }
                r.check(I, minima, 1, "unique minimal representative for " + w.to_string());
            }
        }
    }
    return r;
}

VerificationReport verify_descent_complement(int max_n)
{
    VerificationReport r;
    r.claim = "descents of w w0, n <= " + std::to_string(max_n);
    for (int n = 1; n <= max_n; ++n) {
        Permutation w0 = Permutation::longest(n);
        for (const auto& w : all_perms(n)) {
            Subset lhs = left_descents(w * w0), rhs = Subset::full(n - 1).minus(left_descents(w));
            r.check(lhs, static_cast<long>(lhs.bits()), static_cast<long>(rhs.bits()), w.to_string());
        }
    }
    return r;
}

VerificationReport verify_parity_inversion_lengths(int max_n)
{
    VerificationReport r;
    r.claim = "parity inversions as weighted lengths, n <= " + std::to_string(max_n);
    for (int n = 1; n <= max_n; ++n) {
        StatWeights b = StatWeights::parity_weights(n);
        for (const auto& w : all_perms(n))
            r.check(left_descents(w), parity_inversions(w), weighted_length(w, b, Side::right), w.to_string());
    }
    return r;
}

VerificationReport verify_F_interval_inversion(int max_k)
{
    VerificationReport r;
    r.claim = "inversion of F on boolean intervals, k <= " + std::to_string(max_k);
    for (int k = 0; k <= max_k; ++k) {
        const std::uint32_t all = (1u << k) - 1;
        for (std::uint32_t I = 0; I <= all; ++I) {
            std::vector<LaurentPoly> up(std::size_t{1} << k, LaurentPoly(0)), down = up;
            for (std::uint32_t J = 0; J <= all; ++J) {
                if ((J & I) == I)
                    up[J] = 1;
                if ((J & (all ^ I)) == (all ^ I))
                    down[J] = k % 2 ? -1 : 1;
            }
            IgusaFunction lhs = IgusaFunction::from_F_coeffs(k, up).invert_vars();
            IgusaFunction rhs = IgusaFunction::from_F_coeffs(k, down);
            for (Subset K : all_subsets(k))
                r.check(K, lhs.coeff(K), rhs.coeff(K), "I = " + Subset(I).to_string());
        }
    }
    return r;
}

VerificationReport verify_chain_power_identity(int max_i)
{
    VerificationReport r;
    r.claim = "chain power identity, i <= " + std::to_string(max_i);
    const LaurentPoly x_minus_1 = X_power(1) - X_power(0);
    for (int i = 0; i <= max_i; ++i) {
        LaurentPoly sum("X");
        for (int j = 0; j <= i; ++j) {
            std::vector<int> chain;
            for (int k = i - j; k <= i - 1; ++k)
                chain.push_back(k);
            sum += gaussian_multinomial(i, chain) * x_minus_1.pow(static_cast<unsigned>(j)) *
                   X_power((i - j) * (i - j - 1) / 2);
        }
        r.check(Subset::full(i), sum, X_power(i * (i + 1) / 2), "i = " + std::to_string(i));
    }
    return r;
}

VerificationReport verify_alternating_multinomial_identity(int max_i)
{
    VerificationReport r;
    r.claim = "alternating multinomial identity, i <= " + std::to_string(max_i);
    for (int i = 0; i <= max_i; ++i) {
        LaurentPoly sum("X");
        for (Subset I : all_subsets(i)) {
            LaurentPoly t = gaussian_multinomial(i + 1, I.elements());
            sum += (i - I.size()) % 2 ? -t : t;
        }
        r.check(Subset::full(i), sum, X_power(i * (i + 1) / 2), "i = " + std::to_string(i));
    }
    return r;
}

VerificationReport verify_binomial_convolution(int max_N)
{
    VerificationReport r;
    r.claim = "alternating binomial convolution, N <= " + std::to_string(max_N);
    for (long long N = 1; N <= max_N; ++N)
        for (long long M = 1; M <= N; ++M) {
            long long s = 0;
            for (long long k = 0; k <= M; ++k)
                s += binom(N - k, M) * binom(M, k) * (k % 2 ? -1 : 1);
            r.check(Subset{}, LaurentPoly(static_cast<long>(s)), LaurentPoly(1),
                    "N = " + std::to_string(N) + ", M = " + std::to_string(M));
        }
    return r;
}

} // namespace formedflags
