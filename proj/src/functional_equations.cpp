#include "formedflags/functional_equations.hpp"

#include "formedflags/compositions.hpp"
#include "formedflags/errors.hpp"
#include "formedflags/qbinomial.hpp"

namespace formedflags {

Method parse_method(const std::string& s)
{
    if (s == "closed")
        return Method::closed;
    if (s == "coxeter")
        return Method::coxeter;
    if (s == "recursive")
        return Method::recursive;
    throw DomainError("unknown method '" + s + "'");
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::closed: return "closed";
    case Method::coxeter: return "coxeter";
    case Method::recursive: return "recursive";
    }
    return "?";
}

namespace {

int flag_degree(const FormedSpaceSpec& spec, Subset J)
{
    return spec.two_gamma() * gaussian_multinomial_degree(spec.n, J.elements());
}

} // namespace

AlphaTable alpha_table(const FormedSpaceSpec& spec, Method method, std::uint64_t max_group_size)
{
    AlphaTable t{spec, {}, {}};
    const auto subsets = all_subsets(spec.n - 1);
    const bool orth = spec.kind == Kind::orthogonal;
    if (method == Method::recursive) {
        for (Subset J : subsets) {
            t.a.push_back(orth ? a_orthogonal(spec.n, spec.epsilon, J) : a_recursive_sp_u(spec, J));
            t.alpha.push_back(normalize(t.a.back()));
        }
        return t;
    }
    if (method == Method::coxeter) {
        t.alpha = orth ? conjecture_alpha_table(spec.n, spec.n % 2 ? 1 : spec.epsilon, max_group_size)
                       : alpha_coxeter_table(spec);
    } else {
        if (!orth && !spec.forms_type.empty())
            throw DomainError("closed formulae need an empty forms type; use coxeter or recursive");
        for (Subset J : subsets)
            t.alpha.push_back(orth ? alpha_orthogonal_prop3(spec.n, spec.epsilon, J) : alpha_base_sp_u(spec, J));
    }
    for (Subset J : subsets)
        t.a.push_back(t.alpha[J.bits()].is_zero() ? LaurentPoly("q")
                                                  : t.alpha[J.bits()].shifted(flag_degree(spec, J)));
    return t;
}

FEConstants fe_constants(const FormedSpaceSpec& spec)
{
    const int n = spec.n;
    const int m = spec.m();
    if (spec.kind == Kind::orthogonal) {
        if (n % 2)
            return {m, m * (m + 1)};
        return {spec.epsilon == 1 ? m + 1 : m, m * m};
    }
    int sigma = 0;
    const auto I = spec.forms_type.elements();
    for (std::size_t r = 0; r < I.size(); ++r) {
        const int next = r + 1 < I.size() ? I[r + 1] : n;
        sigma += (next - I[r]) * I[r];
    }
    if (spec.kind == Kind::symplectic)
        return {m - 1, m * (m - 1) + sigma / 2};
    const int b = n * (n - 1) / 2 + sigma;
    return {n - 1 + b, b};
}

std::vector<CoefficientIdentity> coefficient_identities(int n, const std::vector<LaurentPoly>& alpha,
                                                        const std::vector<LaurentPoly>& alpha_tilde,
                                                        FEConstants c, const FormedSpaceSpec* admissible)
{
    const std::uint32_t full = (1u << (n - 1)) - 1;
    if (alpha.size() != full + 1u || alpha_tilde.size() != full + 1u)
        throw DomainError("coefficient_identities: tables must cover every J subset [n-1]");
    std::vector<LaurentPoly> at_q;
    at_q.reserve(alpha.size());
    for (const auto& p : alpha)
        at_q.push_back(p.invert_var());
    const LaurentPoly factor = LaurentPoly::monomial(c.a % 2 ? -1 : 1, c.b);
    std::vector<CoefficientIdentity> out;
    for (std::uint32_t j = 0; j <= full; ++j) {
        CoefficientIdentity id{Subset(j), LaurentPoly("q"), LaurentPoly("q"), false};
        if (admissible && !admissible->admits(id.J)) {
            id.vacuous = true;
            out.push_back(id);
            continue;
        }
        const std::uint32_t free = full & ~j;
        for (std::uint32_t s = free;; s = (s - 1) & free) {
            const Subset K(j | s);
            if (K.size() % 2)
                id.lhs -= at_q[K.bits()];
            else
                id.lhs += at_q[K.bits()];
            if (s == 0)
                break;
        }
        id.rhs = factor * alpha_tilde[j];
        out.push_back(std::move(id));
    }
    return out;
}

VerificationReport report_identities(const std::string& claim, const std::vector<CoefficientIdentity>& ids)
{
    VerificationReport r{claim, 0, 0, {}};
    for (const auto& id : ids) {
        if (id.vacuous)
            ++r.vacuous;
        else
            r.check(id.J, id.lhs, id.rhs);
    }
    return r;
}

std::vector<CoefficientIdentity> theorem_identities(const FormedSpaceSpec& spec, Method method)
{
    const AlphaTable t = alpha_table(spec, method);
    const FEConstants c = fe_constants(spec);
    if (spec.forms_type.empty())
        return coefficient_identities(spec.n, t.alpha, t.alpha, c, &spec);
    const AlphaTable tt = alpha_table(spec.reversed(), method);
    return coefficient_identities(spec.n, t.alpha, tt.alpha, c, &spec);
}

IgusaFunction igusa_function(const AlphaTable& t)
{
    const FormedSpaceSpec& spec = t.spec;
    if (spec.kind != Kind::symplectic)
        return IgusaFunction::from_F_coeffs(spec.n - 1, t.alpha);
    const int k = spec.m() - 1;
    std::vector<LaurentPoly> F;
    for (Subset K : all_subsets(k))
        F.push_back(t.alpha[K.scale(2).bits()]);
    return IgusaFunction::from_F_coeffs(k, F);
}

VerificationReport verify_igusa_equation(const FormedSpaceSpec& spec, Method method)
{
    const IgusaFunction g = igusa_function(alpha_table(spec, method));
    const IgusaFunction gt =
        spec.forms_type.empty() ? g : igusa_function(alpha_table(spec.reversed(), method));
    const FEConstants c = fe_constants(spec);
    const IgusaFunction lhs = g.invert_vars().invert_base();
    const IgusaFunction rhs = gt.scaled(LaurentPoly::monomial(c.a % 2 ? -1 : 1, c.b));
    VerificationReport r{"igusa functional equation " + spec.label(), 0, 0, {}};
    for (Subset K : all_subsets(g.n_vars()))
        r.check(K, lhs.coeff(K), rhs.coeff(K), "e-basis coefficient");
    return r;
}

VerificationReport verify_theorem_A(const FormedSpaceSpec& spec, Method method)
{
    if (!spec.forms_type.empty())
        throw DomainError("verify_theorem_A: plain formed spaces only; use verify_theorem_B");
    VerificationReport r = report_identities("coefficient identities " + spec.label() + " [" + to_string(method) + "]",
                                             theorem_identities(spec, method));
    r.merge(verify_igusa_equation(spec, method));
    return r;
}

VerificationReport verify_theorem_B(const FormedSpaceSpec& spec, Method method)
{
    if (spec.kind == Kind::orthogonal)
        throw DomainError("verify_theorem_B: flags of forms are symplectic or unitary");
    VerificationReport r = report_identities("flag-of-forms identities " + spec.label() + " [" + to_string(method) + "]",
                                             theorem_identities(spec, method));
    r.merge(verify_igusa_equation(spec, method));
    return r;
}

namespace {

int parts_of(Subset G, int m) { return composition_of(G, m).size(); }

} // namespace

VerificationReport verify_prop2_i(int n, int max_F_level)
{
    if (n < 2)
        throw DomainError("verify_prop2_i: n must be at least 2");
    VerificationReport r = verify_eq20(n);
    r.claim = "fibre-sum inversion n=" + std::to_string(n);
    if (n > max_F_level)
        return r;
    const int m = n / 2;
    const auto Gs = all_subsets(m);
    std::vector<IgusaFunction> fib;
    for (Subset G : Gs) {
        std::vector<LaurentPoly> F(std::size_t{1} << (n - 1), LaurentPoly("q"));
        for (Subset I : fiber(G, n))
            F[I.bits()] = LaurentPoly(1);
        fib.push_back(IgusaFunction::from_F_coeffs(n - 1, F));
    }
    for (Subset H : Gs) {
        const IgusaFunction lhs = fib[H.bits()].invert_vars();
        IgusaFunction rhs(n - 1);
        for (Subset G : Gs) {
            const long c = refinement_count(G, H, m);
            if (c)
                rhs += fib[G.bits()].scaled(LaurentPoly(c));
        }
        rhs = rhs.scaled(LaurentPoly((n - 1 + parts_of(H, m)) % 2 ? -1 : 1));
        for (Subset K : all_subsets(n - 1))
            r.check(H, lhs.coeff(K), rhs.coeff(K), "e-basis coefficient " + K.to_string());
    }
    return r;
}

VerificationReport verify_prop2_ii(int m, bool odd, int epsilon)
{
    if (m < 1)
        throw DomainError("verify_prop2_ii: m must be positive");
    const int n = odd ? 2 * m + 1 : 2 * m;
    const int eps = odd ? 0 : epsilon;
    VerificationReport r{"lifted inversion n=" + std::to_string(n) + (odd ? "" : " eps=" + std::to_string(eps)),
                         0, 0, {}};
    const auto Gs = all_subsets(m);
    std::vector<LaurentPoly> up;
    for (Subset G : Gs)
        up.push_back(alpha_lifted(n, eps, G));
    const int sign = (m % 2 ? -1 : 1) * (odd ? 1 : eps);
    const LaurentPoly factor = LaurentPoly::monomial(sign, odd ? m * m + m : m * m);
    for (Subset G : Gs) {
        LaurentPoly sum("q");
        for (Subset H : Gs) {
            const long c = refinement_count(G, H, m);
            if (c)
                sum += up[H.bits()].scaled(parts_of(H, m) % 2 ? -c : c);
        }
        r.check(G, up[G.bits()].invert_var(), factor * sum);
    }
    return r;
}

VerificationReport verify_conjecture_C(int n, int epsilon, std::uint64_t max_group_size)
{
    const int eps = n % 2 ? 0 : epsilon;
    VerificationReport r{"chessboard sum n=" + std::to_string(n) + (eps ? " eps=" + std::to_string(eps) : ""), 0,
                         0, {}};
    const auto table = conjecture_alpha_table(n, n % 2 ? 1 : eps, max_group_size);
    for (Subset J : all_subsets(n - 1))
        r.check(J, table[J.bits()], alpha_orthogonal_prop3(n, eps, J));
    return r;
}

} // namespace formedflags
