#include "formedflags/alpha.hpp"

#include <functional>

#include "formedflags/compositions.hpp"
#include "formedflags/coxeter_sums.hpp"
#include "formedflags/errors.hpp"
#include "formedflags/group_orders.hpp"
#include "formedflags/qbinomial.hpp"

namespace formedflags {

namespace {

LaurentPoly q_power(int e) { return LaurentPoly::monomial(1, e, "q"); }

// Substitute Y = q^{-2} or Y = -q^{-1} into a polynomial in Y.
LaurentPoly substitute_Y(const LaurentPoly& p, Kind kind)
{
    if (kind == Kind::unitary)
        return p.power_substitute(-1).negate_var().with_var("q");
    return p.power_substitute(-2).with_var("q");
}

void require_sp_u(const FormedSpaceSpec& spec, const char* what)
{
    if (spec.kind == Kind::orthogonal)
        throw DomainError(std::string(what) + ": symplectic or unitary spaces only");
}

void require_inside(Subset J, int n, const char* what)
{
    if (!J.is_subset_of(Subset::full(n - 1)))
        throw DomainError(std::string(what) + ": flag type " + J.to_string() + " not inside [n-1]");
}

std::vector<int> scaled_elements(const FormedSpaceSpec& spec, Subset J)
{
    std::vector<int> out;
    for (int j : J.elements())
        out.push_back(spec.scale(j));
    return out;
}

} // namespace

LaurentPoly normalize(const LaurentPoly& a)
{
    if (a.is_zero())
        return a;
    return a.shifted(-a.max_exponent());
}

LaurentPoly alpha_base_sp_u(const FormedSpaceSpec& spec, Subset J)
{
    require_sp_u(spec, "alpha_base_sp_u");
    require_inside(J, spec.n, "alpha_base_sp_u");
    if (!spec.forms_type.empty())
        throw DomainError("alpha_base_sp_u: needs an empty forms type");
    if (!spec.admits(J))
        return LaurentPoly("q");
    return substitute_Y(gaussian_multinomial(spec.scale(spec.n), scaled_elements(spec, J), "Y"), spec.kind);
}

std::vector<LaurentPoly> alpha_coxeter_table(const FormedSpaceSpec& spec, int max_gamma_n)
{
    require_sp_u(spec, "alpha_coxeter");
    const int N = spec.scale(spec.n);
    if (N > max_gamma_n)
        throw ResourceError("alpha_coxeter: gamma n = " + std::to_string(N) + " above the bound " +
                            std::to_string(max_gamma_n));
    const Subset gI = Subset::of(scaled_elements(spec, spec.forms_type.reflect(spec.n)));
    const Subset co = Subset::full(N - 1).minus(gI);
    PermutationStream s(N, Subgroup::full);
    DescentBuckets sums =
        descent_accumulate(
            s, [&](const Permutation& w) { return length(w) + parabolic_length(w, co, Side::left); },
            [](const Permutation&) { return 1; }, 0, N * (N - 1), worker_count())
            .subset_sums();
    std::vector<LaurentPoly> out;
    for (Subset J : all_subsets(spec.n - 1)) {
        if (!spec.admits(J))
            out.emplace_back("q");
        else
            out.push_back(substitute_Y(sums.poly(Subset::of(scaled_elements(spec, J))), spec.kind));
    }
    return out;
}

LaurentPoly alpha_coxeter(const FormedSpaceSpec& spec, Subset J, int max_gamma_n)
{
    require_inside(J, spec.n, "alpha_coxeter");
    return alpha_coxeter_table(spec, max_gamma_n).at(J.bits());
}

namespace {

// Non-degenerate k-dimensional subspaces of a non-degenerate d-space.
LaurentPoly layer_count(const FormedSpaceSpec& like, int d, int k)
{
    if (k < 0 || k > d)
        return LaurentPoly("q");
    if (k == 0 || k == d)
        return LaurentPoly::constant(1);
    if (like.kind == Kind::symplectic && (k % 2 || d % 2))
        return LaurentPoly("q");
    FormedSpaceSpec base = FormedSpaceSpec::make(like.kind, d);
    return alpha_base_sp_u(base, Subset{k}).shifted(like.two_gamma() * k * (d - k));
}

LaurentPoly a_recursive(Kind kind, int n, const std::vector<int>& I, const std::vector<int>& J)
{
    if (J.empty() || n == 0)
        return LaurentPoly::constant(1);
    FormedSpaceSpec spec = FormedSpaceSpec::make(kind, n, 0, Subset::of(I));
    if (I.empty()) {
        Subset Js = Subset::of(J);
        return alpha_base_sp_u(spec, Js).shifted(spec.two_gamma() * gaussian_multinomial_degree(n, J));
    }
    const int j = J.front();
    const int r = static_cast<int>(I.size());
    std::vector<int> rest;
    for (std::size_t s = 1; s < J.size(); ++s)
        rest.push_back(J[s] - j);

    // i_0 = t_0 = 0, i_{r+1} = n, t_{r+1} = j
    std::vector<int> iv(static_cast<std::size_t>(r + 2));
    iv[0] = 0;
    for (int k = 0; k < r; ++k)
        iv[static_cast<std::size_t>(k + 1)] = I[static_cast<std::size_t>(k)];
    iv[static_cast<std::size_t>(r + 1)] = n;
    std::vector<int> t(static_cast<std::size_t>(r + 2), 0);
    t[static_cast<std::size_t>(r + 1)] = j;
    const int step = kind == Kind::symplectic ? 2 : 1;

    LaurentPoly total("q");
    std::function<void(int)> choose = [&](int rho) {
        if (rho == r + 1) {
            const std::size_t last = static_cast<std::size_t>(r + 1);
            const int dk = t[last] - t[last - 1];
            if (dk < j - t[last - 1] || dk > iv[last] - iv[last - 1])
                return;
            LaurentPoly A = LaurentPoly::constant(1);
            for (std::size_t p = 1; p <= last; ++p) {
                const int k = t[p] - t[p - 1];
                const int d = iv[p] - iv[p - 1];
                A *= layer_count(spec, d, k).shifted(spec.two_gamma() * k * (iv[p - 1] - t[p - 1]));
                if (A.is_zero())
                    return;
            }
            std::vector<int> reduced;
            for (int p = 1; p <= r; ++p) {
                const int v = iv[static_cast<std::size_t>(p)] - t[static_cast<std::size_t>(p)];
                if (v >= 1 && v <= n - j - 1 && (reduced.empty() || reduced.back() != v))
                    reduced.push_back(v);
            }
            total += A * a_recursive(kind, n - j, reduced, rest);
            return;
        }
        const std::size_t p = static_cast<std::size_t>(rho);
        for (int v = t[p - 1]; v <= j; ++v) {
            if (v % step)
                continue;
            const int dk = v - t[p - 1];
            if (dk < j - (n - iv[p]) - t[p - 1] || dk > iv[p] - iv[p - 1])
                continue;
            t[p] = v;
            choose(rho + 1);
        }
    };
    choose(1);
    return total;
}

} // namespace

LaurentPoly a_recursive_sp_u(const FormedSpaceSpec& spec, Subset J)
{
    require_sp_u(spec, "a_recursive_sp_u");
    require_inside(J, spec.n, "a_recursive_sp_u");
    if (!spec.admits(J))
        return LaurentPoly("q");
    return a_recursive(spec.kind, spec.n, spec.forms_type.elements(), J.elements());
}

RatFunc a_orthogonal_sum(int n, int epsilon, Subset J, int eta)
{
    require_inside(J, n, "a_orthogonal");
    if (n % 2 == 0 && epsilon != 1 && epsilon != -1)
        throw DomainError("a_orthogonal: epsilon must be +1 or -1");
    if (n % 2)
        epsilon = epsilon == -1 ? -1 : 1;
    const int m = n / 2;
    const Composition k = composition_of(J, n);
    const int target = ((m - bisect(J, n).cut) % 2 && eta == -1) ? -epsilon : epsilon;

    // Over the common denominator prod_sigma p_{k,+} p_{k,-} (p_k for odd k),
    // the term of a sign tuple is prod over even parts of p_{k,-e}.
    LaurentPoly by_sign[2] = {LaurentPoly::constant(1), LaurentPoly("q")}; // index 0: product +1
    LaurentPoly den = LaurentPoly::constant(1);
    for (int part : k.parts) {
        LaurentPoly next[2] = {LaurentPoly("q"), LaurentPoly("q")};
        for (int s = 0; s < 2; ++s)
            for (int e = 0; e < 2; ++e) {
                const int ns = s ^ e;
                if (part % 2)
                    next[ns] += by_sign[s];
                else
                    next[ns] += by_sign[s] * orthogonal_p(part, e ? 1 : -1);
            }
        by_sign[0] = next[0];
        by_sign[1] = next[1];
        den *= part % 2 ? orthogonal_p(part, 0) : orthogonal_p(part, 1) * orthogonal_p(part, -1);
    }
    return RatFunc(orthogonal_p(n, epsilon) * by_sign[target == 1 ? 0 : 1], den);
}

LaurentPoly a_orthogonal(int n, int epsilon, Subset J)
{
    RatFunc square = a_orthogonal_sum(n, epsilon, J, 1);
    RatFunc nonsquare = a_orthogonal_sum(n, epsilon, J, -1);
    if (!(square == nonsquare))
        throw ConsistencyError("a_orthogonal: sign-tuple sums differ for J=" + J.to_string());
    return square.to_polynomial();
}

Prop3Expressions alpha_orthogonal_prop3_expressions(int n, int epsilon, Subset J)
{
    require_inside(J, n, "alpha_orthogonal_prop3");
    const int m = n / 2;
    const Bisection b = bisect(J, n);
    const Subset H = b.phi;
    const int N = compositions_N(H, m);
    if (N != b.cut)
        throw ConsistencyError("alpha_orthogonal_prop3: N(phi(J)) differs from the halved total");

    if (n % 2 == 0) {
        if (epsilon != 1 && epsilon != -1)
            throw DomainError("alpha_orthogonal_prop3: epsilon must be +1 or -1");
        bool even = true;
        for (int j : J.elements())
            even = even && j % 2 == 0;
        if (even) {
            std::vector<int> half;
            for (int j : J.elements())
                half.push_back(j / 2);
            return {gaussian_multinomial(m, half, "Y"), gaussian_multinomial(m, H.minus(Subset{m}).elements(), "Y"),
                    false};
        }
    }
    Prop3Expressions e{gaussian_multinomial(N, b.phi0.elements(), "Y"), LaurentPoly("Y"), n % 2 == 0};
    for (int i = N + 1; i <= m; ++i)
        e.first *= LaurentPoly::one_minus_power(i, "Y");
    Subset HN = H;
    if (N >= 1)
        HN.insert(N);
    std::vector<int> chain;
    for (int x : HN.elements())
        if (x < m)
            chain.push_back(x);
    if (N == 0)
        chain.insert(chain.begin(), 0);
    e.second = gaussian_multinomial(m, chain, "Y") *
               LaurentPoly::one_minus_power(1, "Y").pow(static_cast<unsigned>(m - N));
    return e;
}

LaurentPoly alpha_orthogonal_prop3(int n, int epsilon, Subset J)
{
    const Prop3Expressions e = alpha_orthogonal_prop3_expressions(n, epsilon, J);
    if (!(e.first == e.second))
        throw ConsistencyError("alpha_orthogonal_prop3: closed forms disagree for J=" + J.to_string());
    LaurentPoly val = substitute_Y(e.first, Kind::symplectic);
    if (!e.divide_by_epsilon_factor)
        return val;
    LaurentPoly divisor = LaurentPoly(1) + LaurentPoly::monomial(epsilon, -(n / 2), "q");
    auto q = val.divide_exact(divisor);
    if (!q)
        throw NotPolynomial(divisor);
    return *q;
}

RatFunc a_orthogonal_typed(int n, int epsilon, int j, int delta)
{
    if (j < 1 || j > n - 1)
        throw DomainError("a_orthogonal_typed: j must lie in [1, n-1]");
    const int m = n / 2;
    const bool odd_n = n % 2;
    if (!odd_n && epsilon != 1 && epsilon != -1)
        throw DomainError("a_orthogonal_typed: epsilon must be +1 or -1");
    if (j % 2 == 0 && delta != 1 && delta != -1)
        throw DomainError("a_orthogonal_typed: delta must be +1 or -1 for even j");
    const int h = j / 2;
    auto p = [](int k, int e) { return orthogonal_p(k, e); };
    if (j % 2) {
        if (odd_n)
            return RatFunc(q_power(m - h).scaled(2) * p(2 * m + 1, 0), p(2 * h + 1, 0) * orthogonal_p_sharp(2 * m - 2 * h));
        return RatFunc(p(2 * m, epsilon).scaled(2), p(2 * h + 1, 0) * p(2 * m - 2 * h - 1, 0));
    }
    if (odd_n)
        return RatFunc(p(2 * m + 1, 0), p(2 * h, delta) * p(2 * m - 2 * h + 1, 0));
    return RatFunc(p(2 * m, epsilon), p(2 * h, delta) * p(2 * m - 2 * h, delta * epsilon));
}

LaurentPoly alpha_lifted(int n, int epsilon, Subset G)
{
    auto f = fiber(G, n);
    if (f.empty())
        throw ConsistencyError("alpha_lifted: empty fiber");
    return alpha_orthogonal_prop3(n, n % 2 ? 0 : epsilon, f.front());
}

std::vector<LaurentPoly> conjecture_alpha_table(int n, int epsilon, std::uint64_t max_group_size)
{
    if (n % 2 == 0 && epsilon != 1 && epsilon != -1)
        throw DomainError("conjecture_alpha: epsilon must be +1 or -1");
    PermutationStream s(n, Subgroup::chessboard, max_group_size);
    const int hi = (n * n) / 4 + 1;
    DescentBuckets buckets = descent_accumulate(
        s,
        [](const Permutation& w) { return parity_inversions(w); },
        [epsilon](const Permutation& w) { return chi_epsilon(w, epsilon); },
        0, hi, worker_count());
    DescentBuckets sums = buckets.subset_sums();
    std::vector<LaurentPoly> out;
    out.reserve(std::size_t{1} << (n - 1));
    for (Subset J : all_subsets(n - 1))
        out.push_back(sums.poly(J, "q").invert_var());
    return out;
}

LaurentPoly conjecture_alpha(int n, int epsilon, Subset J)
{
    require_inside(J, n, "conjecture_alpha");
    return conjecture_alpha_table(n, epsilon).at(J.bits());
}

} // namespace formedflags
