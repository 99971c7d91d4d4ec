#include "formedflags/compositions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "formedflags/errors.hpp"

namespace formedflags {

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void check_inside(Subset I, int n, const char* what)
{
    if (n < 0 || n > 31 || !I.is_subset_of(Subset::full(n)))
        throw DomainError(std::string(what) + ": subset " + I.to_string() + " not inside [" + std::to_string(n) + "]");
}

} // namespace

int compositions_N(Subset I, int n)
{
    check_inside(I, n, "compositions_N");
    for (int k = n; k >= 1; --k)
        if (!I.contains(k))
            return k;
    return 0;
}

Composition composition_of(Subset I, int n)
{
    const int N = compositions_N(I, n);
    Composition c;
    int prev = 0;
    for (int i : I.elements()) {
        if (i >= N)
            break;
        c.parts.push_back(i - prev);
        prev = i;
    }
    if (N > 0)
        c.parts.push_back(N - prev);
    return c;
}

Bisection bisect(Subset I, int n)
{
    check_inside(I, n - 1 < 0 ? 0 : n - 1, "bisect");
    const int m = n / 2;
    Composition c = composition_of(I, n);
    Bisection b;
    int partial = 0;
    for (int x : c.parts) {
        partial += x / 2;
        if (partial > 0)
            b.phi0.insert(partial);
    }
    b.cut = partial;
    if (b.cut > 0)
        b.phi0.erase(b.cut);
    b.phi = b.phi0 | Subset::interval(b.cut + 1, m);
    return b;
}

std::vector<Subset> fiber(Subset H, int n)
{
    if (n < 1 || n > 20)
        throw DomainError("fiber: n out of range");
    check_inside(H, n / 2, "fiber");
    std::vector<Subset> out;
    for (Subset J : all_subsets(n - 1))
        if (bisect(J, n).phi == H)
            out.push_back(J);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

namespace {

void refine(const std::vector<int>& x, const std::vector<int>& y, std::size_t i, int used, Refinement& cur,
            std::vector<Refinement>& out)
{
    const int lambda = static_cast<int>(y.size());
    if (i == x.size()) {
        if (used == lambda)
            out.push_back(cur);
        return;
    }
    // Block i takes y_{used+1}, ..., y_{xi_i} as long as their sum fits in x_i.
    int sum = 0;
    for (int xi = used; xi <= lambda; ++xi) {
        if (xi > used)
            sum += y[static_cast<std::size_t>(xi - 1)];
        if (sum > x[i])
            break;
        cur.push_back(xi);
        refine(x, y, i + 1, xi, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Refinement> refinement_enumerate(Subset G, Subset H, int m)
{
    Composition x = composition_of(G, m);
    Composition y = composition_of(H, m);
    std::vector<Refinement> out;
    Refinement cur;
    refine(x.parts, y.parts, 0, 0, cur, out);
    return out;
}

long refinement_count(Subset G, Subset H, int m) { return static_cast<long>(refinement_enumerate(G, H, m).size()); }

std::vector<std::pair<int, int>> complement_runs(Subset I, int n)
{
    std::vector<std::pair<int, int>> runs;
    int k = 1;
    while (k <= n - 1) {
        if (I.contains(k)) {
            ++k;
            continue;
        }
        int lo = k;
        while (k <= n - 1 && !I.contains(k))
            ++k;
        runs.emplace_back(lo, k - 1);
    }
    return runs;
}

Refinement induced_refinement(Subset I, Subset J, int n)
{
    if (!I.is_subset_of(J))
        throw DomainError("induced_refinement: " + I.to_string() + " is not contained in " + J.to_string());
    check_inside(J, n - 1, "induced_refinement");
    auto outer = complement_runs(I, n);
    auto inner = complement_runs(J, n);
    Refinement xi;
    std::size_t k = 0;
    for (const auto& [lo, hi] : outer) {
        while (k < inner.size() && inner[k].second <= hi) {
            if (inner[k].first < lo)
                throw ConsistencyError("induced_refinement: run straddles two runs");
            ++k;
        }
        xi.push_back(static_cast<int>(k));
    }
    return xi;
}

VerificationReport verify_eq20(int n)
{
    if (n < 1 || n > 14)
        throw DomainError("verify_eq20: n out of range");
    const int m = n / 2;
    VerificationReport rep;
    rep.claim = "alternating fiber sums over induced refinements, n=" + std::to_string(n);
    std::vector<Bisection> bis;
    for (Subset J : all_subsets(n - 1))
        bis.push_back(bisect(J, n));
    for (Subset I : all_subsets(n - 1)) {
        const Subset G = bis[I.bits()].phi;
        std::map<std::pair<std::uint32_t, Refinement>, long> sums;
        const Subset rest = Subset::full(n - 1).minus(I);
        // supersets of I: I | T for T subset rest
        for (std::uint32_t T = rest.bits();; T = (T - 1) & rest.bits()) {
            Subset J = I | Subset(T);
            sums[{bis[J.bits()].phi.bits(), induced_refinement(I, J, n)}] += J.size() % 2 ? -1 : 1;
            if (T == 0)
                break;
        }
        for (const auto& [key, v] : sums) {
            Subset H(key.first);
            auto refs = refinement_enumerate(G, H, m);
            if (std::find(refs.begin(), refs.end(), key.second) == refs.end())
                rep.check(I, 1, 0, "induced tuple is not a refinement of " + G.to_string() + " by " + H.to_string());
        }
        for (Subset H : all_subsets(m)) {
            auto refs = refinement_enumerate(G, H, m);
            if (refs.empty()) {
                ++rep.vacuous;
                continue;
            }
            const int sign = (n - 1 + composition_of(H, m).size()) % 2 ? -1 : 1;
            for (const auto& xi : refs) {
                auto it = sums.find({H.bits(), xi});
                long s = it == sums.end() ? 0 : it->second;
                rep.check(I, sign * s, 1, "H=" + H.to_string());
            }
        }
    }
    return rep;
}

} // namespace formedflags
