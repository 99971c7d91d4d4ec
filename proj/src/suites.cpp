#include "formedflags/suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "formedflags/alpha.hpp"
#include "formedflags/compositions.hpp"
#include "formedflags/coxeter_sums.hpp"
#include "formedflags/errors.hpp"
#include "formedflags/functional_equations.hpp"
#include "formedflags/identity_checks.hpp"
#include "formedflags/qbinomial.hpp"

namespace formedflags {

namespace {

LaurentPoly P(std::initializer_list<std::pair<int, long>> terms)
{
    std::map<int, mpz_class> m;
    for (auto [e, c] : terms)
        m[e] += c;
    return LaurentPoly::from_terms(m);
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b)
{
    auto q = a.divide_exact(b);
    if (!q)
        throw ConsistencyError("golden literal is not a polynomial");
    return *q;
}

VerificationReport named(std::string claim)
{
    VerificationReport r;
    r.claim = std::move(claim);
    return r;
}

void compare_igusa(VerificationReport& r, const IgusaFunction& lhs, const IgusaFunction& rhs, const std::string& note)
{
    if (lhs.n_vars() != rhs.n_vars()) {
        r.check(Subset{}, lhs.n_vars(), rhs.n_vars(), note + ": number of variables");
        return;
    }
    for (Subset K : all_subsets(lhs.n_vars()))
        r.check(K, lhs.coeff(K), rhs.coeff(K), note);
}

// Text equality recorded as a check on a 0/1 indicator.
void check_text(VerificationReport& r, const std::string& got, const std::string& want)
{
    r.check(Subset{}, got == want ? 1 : 0, 1, "rendered " + got + ", expected " + want);
}

void check_numerator(VerificationReport& r, const IgusaFunction& ig, const std::map<std::uint32_t, LaurentPoly>& want,
                     const std::string& note)
{
    Subset D;
    const Numerator num = ig.numerator(&D);
    r.check(D, static_cast<long>(D.bits()), static_cast<long>(Subset::full(ig.n_vars()).bits()),
            note + ": denominator support");
    for (Subset K : all_subsets(num.n_vars)) {
        auto it = want.find(K.bits());
        r.check(K, num.coeffs[K.bits()], it == want.end() ? LaurentPoly(0) : it->second, note);
    }
}

// ---- criterion 1 ----

std::vector<VerificationReport> golden_tables()
{
    std::vector<VerificationReport> out;
    const LaurentPoly one = 1;

    {
        const FormedSpaceSpec spec = FormedSpaceSpec::make(Kind::symplectic, 6, 0, {4});
        const std::map<std::uint32_t, LaurentPoly> a = {
            {0, one},
            {Subset{2}.bits(), P({{8, 1}, {4, 1}, {2, 1}})},
            {Subset{4}.bits(), P({{8, 1}, {6, 1}, {0, 1}})},
            {Subset{2, 4}.bits(), exact_quotient(P({{14, 1}, {2, -1}}), P({{2, 1}, {0, -1}}))},
        };
        const std::map<std::uint32_t, LaurentPoly> alpha = {
            {0, one},
            {Subset{2}.bits(), P({{0, 1}, {-4, 1}, {-6, 1}})},
            {Subset{4}.bits(), P({{0, 1}, {-2, 1}, {-8, 1}})},
            {Subset{2, 4}.bits(), exact_quotient(P({{0, 1}, {-12, -1}}), P({{0, 1}, {-2, -1}}))},
        };
        for (Method m : {Method::coxeter, Method::recursive}) {
            VerificationReport r = named("alternating flag table, n=6, I={4}, " + to_string(m));
            const AlphaTable t = alpha_table(spec, m);
            for (Subset J : all_subsets(5)) {
                auto ia = a.find(J.bits());
                r.check(J, t.a[J.bits()], ia == a.end() ? LaurentPoly(0) : ia->second, "a");
                auto ib = alpha.find(J.bits());
                r.check(J, t.alpha[J.bits()], ib == alpha.end() ? LaurentPoly(0) : ib->second, "alpha");
            }
            const IgusaFunction ig = igusa_function(t);
            check_text(r, ig.to_text(), "(1 + (q⁻⁴+q⁻⁶)X₁ + (q⁻²+q⁻⁸)X₂ + q⁻¹⁰X₁X₂)/((1−X₁)(1−X₂))");
            check_numerator(r, ig,
                            {{0, one},
                             {1, P({{-4, 1}, {-6, 1}})},
                             {2, P({{-2, 1}, {-8, 1}})},
                             {3, P({{-10, 1}})}},
                            "displayed numerator");
            compare_igusa(r, ig.invert_vars().invert_base(), ig.reverse_vars().scaled(LaurentPoly::monomial(1, 10)),
                          "displayed functional equation");
            out.push_back(std::move(r));
        }
    }

    {
        const FormedSpaceSpec spec = FormedSpaceSpec::make(Kind::orthogonal, 3);
        const std::vector<LaurentPoly> a = {one, P({{2, 1}}), P({{2, 1}}), P({{3, 1}, {1, -1}})};
        const std::vector<LaurentPoly> alpha = {one, one, one, P({{0, 1}, {-2, -1}})};
        for (Method m : {Method::closed, Method::recursive, Method::coxeter}) {
            VerificationReport r = named("quadratic table, n=3, " + to_string(m));
            const AlphaTable t = alpha_table(spec, m);
            for (Subset J : all_subsets(2)) {
                r.check(J, t.a[J.bits()], a[J.bits()], "a");
                r.check(J, t.alpha[J.bits()], alpha[J.bits()], "alpha");
            }
            const IgusaFunction ig = igusa_function(t);
            check_text(r, ig.to_text(), "(1 − q⁻²X₁X₂)/((1−X₁)(1−X₂))");
            check_numerator(r, ig, {{0, one}, {3, P({{-2, -1}})}}, "displayed numerator");
            out.push_back(std::move(r));
        }
    }

    for (int eps : {1, -1}) {
        const FormedSpaceSpec spec = FormedSpaceSpec::make(Kind::orthogonal, 4, eps);
        // rows: {}, {1} and {3}, {2}, pairs, {1,2,3}
        const long e = eps;
        const LaurentPoly a1 = P({{3, 1}, {1, -e}}), a2 = P({{4, 1}, {2, 1}}), a12 = P({{5, 1}, {3, -e}});
        const LaurentPoly a123 = eps == 1 ? P({{6, 1}, {4, -2}, {2, 1}}) : P({{6, 1}, {2, -1}});
        const LaurentPoly al1 = P({{0, 1}, {-2, -e}}), al2 = P({{0, 1}, {-2, 1}});
        const LaurentPoly al123 = eps == 1 ? P({{0, 1}, {-2, -1}}).pow(2) : P({{0, 1}, {-4, -1}});
        const std::vector<LaurentPoly> a = {one, a1, a2, a12, a1, a12, a12, a123};
        const std::vector<LaurentPoly> alpha = {one, al1, al2, al1, al1, al1, al1, al123};
        for (Method m : {Method::closed, Method::recursive, Method::coxeter}) {
            VerificationReport r = named("quadratic table, n=4, eps=" + std::to_string(eps) + ", " + to_string(m));
            const AlphaTable t = alpha_table(spec, m);
            for (Subset J : all_subsets(3)) {
                r.check(J, t.a[J.bits()], a[J.bits()], "a");
                r.check(J, t.alpha[J.bits()], alpha[J.bits()], "alpha");
            }
            const IgusaFunction ig = igusa_function(t);
            const LaurentPoly q2 = P({{-2, 1}}), q4 = P({{-4, 1}});
            if (eps == 1) {
                check_text(r, ig.to_text(),
                           "(1 − q⁻²X₁ + q⁻²X₂ − q⁻²X₃ − q⁻²X₁X₂ + q⁻²X₁X₃ − q⁻²X₂X₃ + q⁻⁴X₁X₂X₃)/"
                           "((1−X₁)(1−X₂)(1−X₃))");
                check_numerator(r, ig,
                                {{0, one}, {3, -q2}, {5, q2}, {6, -q2}, {1, -q2}, {2, q2}, {4, -q2}, {7, q4}},
                                "displayed numerator");
            } else {
                check_text(r, ig.to_text(),
                           "(1 + q⁻²X₁ + q⁻²X₂ + q⁻²X₃ − q⁻²X₁X₂ − q⁻²X₁X₃ − q⁻²X₂X₃ − q⁻⁴X₁X₂X₃)/"
                           "((1−X₁)(1−X₂)(1−X₃))");
                check_numerator(r, ig,
                                {{0, one}, {3, -q2}, {5, -q2}, {6, -q2}, {1, q2}, {2, q2}, {4, q2}, {7, -q4}},
                                "displayed numerator");
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

// ---- criteria 2 to 5 ----

std::vector<int> orthogonal_epsilons(int n) { return n % 2 ? std::vector<int>{0} : std::vector<int>{1, -1}; }

std::vector<FormedSpaceSpec> theorem_A_specs()
{
    std::vector<FormedSpaceSpec> s;
    for (int n : {2, 4, 6, 8})
        s.push_back(FormedSpaceSpec::make(Kind::symplectic, n));
    for (int n = 2; n <= 7; ++n)
        s.push_back(FormedSpaceSpec::make(Kind::unitary, n));
    for (int n = 2; n <= 13; ++n)
        for (int e : orthogonal_epsilons(n))
            s.push_back(FormedSpaceSpec::make(Kind::orthogonal, n, e));
    return s;
}

std::vector<FormedSpaceSpec> theorem_B_specs()
{
    std::vector<FormedSpaceSpec> s;
    for (int n : {4, 6})
        for (Subset I : all_subsets(n - 1)) {
            bool even = true;
            for (int i : I.elements())
                even = even && i % 2 == 0;
            if (even)
                s.push_back(FormedSpaceSpec::make(Kind::symplectic, n, 0, I));
        }
    for (int n = 2; n <= 5; ++n)
        for (Subset I : all_subsets(n - 1))
            s.push_back(FormedSpaceSpec::make(Kind::unitary, n, 0, I));
    return s;
}

std::vector<VerificationReport> conjecture_sweep(const SuiteOptions& opt)
{
    std::vector<VerificationReport> out;
    for (int n = 2; n <= 13; ++n)
        for (int e : orthogonal_epsilons(n))
            out.push_back(verify_conjecture_C(n, e ? e : 1, opt.max_group_size));
    return out;
}

std::vector<VerificationReport> theorem_A_reports()
{
    std::vector<VerificationReport> out;
    for (const auto& spec : theorem_A_specs())
        out.push_back(verify_theorem_A(spec, Method::closed));
    return out;
}

std::vector<VerificationReport> theorem_B_reports()
{
    std::vector<VerificationReport> out;
    for (const auto& spec : theorem_B_specs()) {
        out.push_back(verify_theorem_B(spec, Method::coxeter));
        if (!spec.forms_type.empty())
            continue;
        VerificationReport r = named(spec.label() + ": flag-type identities equal the plain ones");
        const auto b = theorem_identities(spec, Method::coxeter);
        const auto a = theorem_identities(spec, Method::closed);
        r.check(Subset{}, static_cast<long>(b.size()), static_cast<long>(a.size()), "number of identities");
        for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
            r.check(b[k].J, static_cast<long>(b[k].J.bits()), static_cast<long>(a[k].J.bits()), "J");
            r.check(b[k].J, b[k].lhs, a[k].lhs, "lhs");
            r.check(b[k].J, b[k].rhs, a[k].rhs, "rhs");
            r.check(b[k].J, b[k].vacuous ? 1 : 0, a[k].vacuous ? 1 : 0, "vacuous flag");
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> cross_paths(const SuiteOptions& opt)
{
    std::vector<VerificationReport> out;
    for (const auto& spec : theorem_B_specs()) {
        VerificationReport r = named(spec.label() + ": recursion against Coxeter sums");
        const auto cox = alpha_coxeter_table(spec);
        for (Subset J : all_subsets(spec.n - 1))
            r.check(J, normalize(a_recursive_sp_u(spec, J)), cox[J.bits()]);
        if (spec.forms_type.empty())
            for (Subset J : all_subsets(spec.n - 1))
                r.check(J, alpha_base_sp_u(spec, J), cox[J.bits()], "multinomial");
        out.push_back(std::move(r));
    }
    (void)opt;
    for (int n = 2; n <= 10; ++n)
        for (int e : {1, -1}) {
            const int eps = n % 2 ? 0 : e;
            VerificationReport r = named("orthogonal n=" + std::to_string(n) + " eps=" + std::to_string(e) +
                                         ": sign-tuple sums against closed forms");
            for (Subset J : all_subsets(n - 1))
                r.check(J, normalize(a_orthogonal(n, eps, J)), alpha_orthogonal_prop3(n, eps, J));
            out.push_back(std::move(r));
        }
    return out;
}

// ---- criteria 6 and 7 ----

using Counter = std::function<mpz_class(Subset)>;

void compare_counts(VerificationReport& r, int n, int q, const Counter& count, const std::vector<LaurentPoly>& a,
                    const std::vector<Subset>& Js, const std::string& path)
{
    for (Subset J : Js) {
        const mpq_class v = a[J.bits()].evaluate_at(q);
        if (v.get_den() != 1) {
            r.check(J, 1, 0, path + ": non-integral value at q=" + std::to_string(q));
            continue;
        }
        r.check(J, LaurentPoly::constant(count(J)), LaurentPoly::constant(v.get_num()),
                path + " at q=" + std::to_string(q) + ", n=" + std::to_string(n));
    }
}

std::vector<Subset> even_subsets(int n)
{
    std::vector<Subset> out;
    for (Subset J : all_subsets(n - 1)) {
        bool even = true;
        for (int j : J.elements())
            even = even && j % 2 == 0;
        if (even)
            out.push_back(J);
    }
    return out;
}

std::vector<VerificationReport> oracle_cross(const SuiteOptions& opt)
{
    std::vector<VerificationReport> out;
    const auto ops = opt.max_oracle_ops;
    auto run = [&](const FormedSpaceSpec& spec, const SmallField& F, int q, const Counter& count,
                   const std::vector<Subset>& Js, const std::vector<Method>& methods) {
        VerificationReport r = named("enumeration over F" + std::to_string(F.order()) + ", " + spec.label());
        std::map<std::uint32_t, mpz_class> cache;
        Counter cached = [&](Subset J) {
            auto it = cache.find(J.bits());
            if (it == cache.end())
                it = cache.emplace(J.bits(), count(J)).first;
            return it->second;
        };
        for (Method m : methods)
            compare_counts(r, spec.n, q, cached, alpha_table(spec, m).a, Js, to_string(m));
        out.push_back(std::move(r));
    };
    auto space_counter = [ops](const GramSpace& s) { return [s, ops](Subset J) { return count_flags(s, J, ops); }; };

    const std::vector<Method> all3 = {Method::closed, Method::coxeter, Method::recursive};
    for (int q : {2, 3}) {
        const SmallField F(q);
        run(FormedSpaceSpec::make(Kind::symplectic, 4), F, q, space_counter(standard_space(Kind::symplectic, 4, F)),
            even_subsets(4), all3);
    }
    run(FormedSpaceSpec::make(Kind::symplectic, 6), SmallField(2), 2,
        space_counter(standard_space(Kind::symplectic, 6, SmallField(2))), {Subset{}, {2}, {4}, {2, 4}}, all3);

    for (int q : {2, 3, 5})
        for (int n = 2; n <= 4; ++n)
            for (int e : orthogonal_epsilons(n)) {
                const SmallField F(q);
                run(FormedSpaceSpec::make(Kind::orthogonal, n, e), F, q,
                    space_counter(standard_space(Kind::orthogonal, n, F, e ? e : 1)), all_subsets(n - 1),
                    {Method::closed, Method::recursive});
            }

    run(FormedSpaceSpec::make(Kind::unitary, 2), SmallField(4), 2,
        space_counter(standard_space(Kind::unitary, 2, SmallField(4))), all_subsets(1), all3);
    run(FormedSpaceSpec::make(Kind::unitary, 3), SmallField(4), 2,
        space_counter(standard_space(Kind::unitary, 3, SmallField(4))), all_subsets(2), all3);
    run(FormedSpaceSpec::make(Kind::unitary, 2), SmallField(9), 3,
        space_counter(standard_space(Kind::unitary, 2, SmallField(9))), all_subsets(1), all3);

    for (int q : {2, 3}) {
        const SmallField F(q);
        const FlagOfForms b = standard_flag_of_forms(Kind::symplectic, 4, {2}, F);
        run(FormedSpaceSpec::make(Kind::symplectic, 4, 0, {2}), F, q,
            [b, ops](Subset J) { return count_flags(b, J, ops); }, even_subsets(4),
            {Method::coxeter, Method::recursive});
    }
    return out;
}

std::vector<VerificationReport> negative_control()
{
    std::vector<VerificationReport> out;
    // a^J for {}, {1}, {2}, {1,2}, {3}, {1,3}, {2,3}, {1,2,3}
    const LaurentPoly q3 = P({{3, 1}}), q5 = P({{5, 1}}), mid = P({{4, 1}, {2, 1}});
    const std::vector<LaurentPoly> a = {1, q3, mid, q5, q3, q5, q5, P({{6, 1}, {4, -1}})};
    for (int q : {2, 4}) {
        VerificationReport r = named("symmetric bilinear table over F" + std::to_string(q));
        const std::vector<mpz_class> t = a3_counterexample_table(q);
        for (Subset J : all_subsets(3)) {
            const mpq_class v = a[J.bits()].evaluate_at(q);
            r.check(J, LaurentPoly::constant(t[J.bits()]), LaurentPoly::constant(v.get_num()));
        }
        out.push_back(std::move(r));
    }
    std::vector<LaurentPoly> alpha;
    for (const auto& p : a)
        alpha.push_back(normalize(p));
    for (auto [ca, cb] : {std::pair{3, 4}, std::pair{2, 4}}) {
        const std::string c = "(" + std::to_string(ca) + "," + std::to_string(cb) + ")";
        const VerificationReport id = report_identities("symmetric bilinear identities " + c,
                                                        coefficient_identities(4, alpha, alpha, FEConstants{ca, cb}));
        VerificationReport r = named("symmetric bilinear table violates the identity for " + c + ", " +
                                     std::to_string(id.failures.size()) + " of " +
                                     std::to_string(id.instances_checked) + " coefficients differ");
        r.check(Subset{}, id.verified() ? 0 : 1, 1, id.summary());
        out.push_back(std::move(r));
    }
    return out;
}

// ---- criterion 8 ----

std::vector<VerificationReport> lemma_reports()
{
    std::vector<VerificationReport> out;
    for (int n = 1; n <= 6; ++n)
        out.push_back(verify_length_complements(n));
    out.push_back(verify_parabolic_transversal(5));
    out.push_back(verify_descent_complement(6));
    out.push_back(verify_parity_inversion_lengths(7));
    out.push_back(verify_F_interval_inversion(6));
    for (int n = 2; n <= 9; ++n)
        out.push_back(verify_prop2_i(n));
    for (int m = 1; m <= 5; ++m) {
        out.push_back(verify_prop2_ii(m, true));
        for (int e : {1, -1})
            out.push_back(verify_prop2_ii(m, false, e));
    }
    out.push_back(verify_chain_power_identity(10));
    out.push_back(verify_alternating_multinomial_identity(8));
    out.push_back(verify_binomial_convolution(12));

    VerificationReport eta = named("sign-tuple sums independent of the square class of -1, n <= 13");
    VerificationReport dual = named("both closed orthogonal expressions agree, n <= 13");
    VerificationReport fib = named("alpha constant on bisection fibres, n <= 13");
    for (int n = 2; n <= 13; ++n)
        for (int e : orthogonal_epsilons(n)) {
            for (Subset J : all_subsets(n - 1)) {
                const RatFunc s = a_orthogonal_sum(n, e, J, 1), t = a_orthogonal_sum(n, e, J, -1);
                eta.check(J, s.num() * t.den(), t.num() * s.den(), "n=" + std::to_string(n));
                const Prop3Expressions x = alpha_orthogonal_prop3_expressions(n, e, J);
                dual.check(J, x.first, x.second, "n=" + std::to_string(n));
            }
            for (Subset G : all_subsets(n / 2)) {
                const LaurentPoly up = alpha_lifted(n, e, G);
                for (Subset J : fiber(G, n))
                    fib.check(J, alpha_orthogonal_prop3(n, e, J), up, "G=" + G.to_string());
            }
        }
    out.push_back(std::move(eta));
    out.push_back(std::move(dual));
    out.push_back(std::move(fib));

    VerificationReport mon = named("flag counts monic of the expected degree");
    auto monic = [&](const FormedSpaceSpec& spec, const AlphaTable& t) {
        for (Subset J : all_subsets(spec.n - 1)) {
            const LaurentPoly& a = t.a[J.bits()];
            if (!spec.admits(J)) {
                mon.check(J, a, LaurentPoly(0), spec.label() + ": inadmissible type");
                continue;
            }
            mon.check(J, LaurentPoly::constant(a.leading_coeff()), 1, spec.label() + ": leading coefficient");
            mon.check(J, LaurentPoly::constant(t.alpha[J.bits()].coeff(0)), 1, spec.label() + ": alpha at 0");
            mon.check(J, a.max_exponent(), spec.two_gamma() * gaussian_multinomial_degree(spec.n, J.elements()),
                      spec.label() + ": degree");
        }
    };
    for (const auto& spec : theorem_A_specs())
        monic(spec, alpha_table(spec, spec.kind == Kind::orthogonal ? Method::recursive : Method::closed));
    for (const auto& spec : theorem_B_specs())
        monic(spec, alpha_table(spec, Method::recursive));
    out.push_back(std::move(mon));
    return out;
}

// ---- criterion 9 ----

CriterionResult& explore_m_sets(CriterionResult& res)
{
    VerificationReport r = named("generator-preserving set, repeated runs agree, n <= 8");
    for (int n = 1; n <= 8; ++n) {
        const MSetResult a = m_set(n), b = m_set(n);
        r.check(Subset{}, LaurentPoly::constant(a.size), LaurentPoly::constant(b.size), "size n=" + std::to_string(n));
        r.check(Subset{}, LaurentPoly::constant(a.chessboard_size), LaurentPoly::constant(b.chessboard_size),
                "chessboard size n=" + std::to_string(n));
        r.check(Subset{}, LaurentPoly::constant(a.chessboard_size),
                LaurentPoly::constant(subgroup_order(n, Subgroup::chessboard)),
                "chessboard order n=" + std::to_string(n));
        res.notes.push_back("n=" + std::to_string(n) + ": |M|=" + std::to_string(a.size) +
                            " |C_n|=" + std::to_string(a.chessboard_size) +
                            " equal=" + (a.equals_chessboard ? "yes" : "no"));
    }
    res.reports.push_back(std::move(r));
    return res;
}

} // namespace

bool CriterionResult::passed() const
{
    if (reports.empty())
        return false;
    for (const auto& r : reports)
        if (!r.verified())
            return false;
    return true;
}

long long CriterionResult::instances() const
{
    long long s = 0;
    for (const auto& r : reports)
        s += r.instances_checked;
    return s;
}

std::string criterion_title(int id)
{
    switch (id) {
    case 1: return "golden tables";
    case 2: return "chessboard sums against closed forms, n <= 13";
    case 3: return "coefficient identities for formed spaces";
    case 4: return "coefficient identities for flags of forms";
    case 5: return "cross-path equality";
    case 6: return "enumeration over finite fields";
    case 7: return "symmetric bilinear negative control";
    case 8: return "identity and property suites";
    case 9: return "generator-preserving set exploration";
    default: throw DomainError("criterion id must lie in [1, " + std::to_string(kNumCriteria) + "]");
    }
}

CriterionResult run_criterion(int id, const SuiteOptions& opt)
{
    CriterionResult res;
    res.id = id;
    res.title = criterion_title(id);
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (id) {
        case 1: res.reports = golden_tables(); break;
        case 2: res.reports = conjecture_sweep(opt); break;
        case 3: res.reports = theorem_A_reports(); break;
        case 4: res.reports = theorem_B_reports(); break;
        case 5: res.reports = cross_paths(opt); break;
        case 6: res.reports = oracle_cross(opt); break;
        case 7: res.reports = negative_control(); break;
        case 8: res.reports = lemma_reports(); break;
        case 9: explore_m_sets(res); break;
        }
    } catch (const ResourceError&) {
        throw;
    } catch (const std::exception& e) {
        VerificationReport r = named(std::string("exception: ") + e.what());
        r.check(Subset{}, 0, 1, e.what());
        res.reports.push_back(std::move(r));
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::vector<int> suite_criteria(const std::string& name)
{
    if (name == "golden")
        return {1};
    if (name == "conjecture")
        return {2};
    if (name == "theorems")
        return {3, 4, 5};
    if (name == "oracle-cross")
        return {6, 7};
    if (name == "lemmas")
        return {8};
    if (name == "explore")
        return {9};
    if (name == "all")
        return {1, 2, 3, 4, 5, 6, 7, 8, 9};
    throw DomainError("unknown suite '" + name + "'");
}

} // namespace formedflags
