#include <doctest.h>

#include <random>

#include "formedflags/errors.hpp"
#include "formedflags/igusa_function.hpp"
#include "formedflags/qbinomial.hpp"
#include "formedflags/rat_func.hpp"

using namespace formedflags;

namespace {

LaurentPoly P(std::initializer_list<std::pair<int, long>> terms, const std::string& var = "q")
{
    std::map<int, mpz_class> t;
    for (auto [e, c] : terms)
        t[e] += c;
    return LaurentPoly::from_terms(t, var);
}

LaurentPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> len(0, 5), exp(-4, 4), coef(-9, 9);
    std::map<int, mpz_class> t;
    for (int k = len(rng); k > 0; --k)
        t[exp(rng)] += coef(rng);
    return LaurentPoly::from_terms(t);
}

// [a choose b] by the Pascal-type recurrence, independent of the product formula.
LaurentPoly pascal_binomial(int a, int b)
{
    std::vector<std::vector<LaurentPoly>> T(static_cast<std::size_t>(a + 1));
    for (int x = 0; x <= a; ++x) {
        T[static_cast<std::size_t>(x)].assign(static_cast<std::size_t>(x + 1), LaurentPoly("X"));
        for (int y = 0; y <= x; ++y) {
            if (y == 0 || y == x)
                T[x][y] = LaurentPoly::constant(1, "X");
            else
                T[x][y] = T[x - 1][y - 1] + T[x - 1][y].shifted(y);
        }
    }
    return T[a][b];
}

long binom(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_SUITE("exactalg")
{
    TEST_CASE("ring axioms on random Laurent polynomials")
    {
        std::mt19937 rng(12345);
        for (int t = 0; t < 300; ++t) {
            LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            CHECK(a * LaurentPoly(1) == a);
            CHECK(a.invert_var().invert_var() == a);
            CHECK((a * b).invert_var() == a.invert_var() * b.invert_var());
            CHECK((a * b).negate_var() == a.negate_var() * b.negate_var());
            CHECK((a * b).power_substitute(3) == a.power_substitute(3) * b.power_substitute(3));
            mpq_class x(3, 2);
            CHECK((a * b + c).evaluate_at(x) == a.evaluate_at(x) * b.evaluate_at(x) + c.evaluate_at(x));
            if (!b.is_zero()) {
                auto q = (a * b).divide_exact(b);
                REQUIRE(q.has_value());
                CHECK(*q == a);
            }
        }
    }

    TEST_CASE("zero coefficients are never stored")
    {
        LaurentPoly p = P({{3, 1}, {-2, 4}}) - P({{3, 1}});
        CHECK(p == P({{-2, 4}}));
        CHECK(p.num_terms() == 1);
        CHECK((P({{1, 2}}) - P({{1, 2}})).terms().empty());
    }

    TEST_CASE("substitutions")
    {
        LaurentPoly p = P({{-2, 1}, {1, 3}, {0, -5}});
        CHECK(p.invert_var() == P({{2, 1}, {-1, 3}, {0, -5}}));
        CHECK(p.negate_var() == P({{-2, 1}, {1, -3}, {0, -5}}));
        CHECK(p.power_substitute(-2) == P({{4, 1}, {-2, 3}, {0, -5}}));
        CHECK_THROWS_AS(p.power_substitute(0), DomainError);
        CHECK(p.evaluate_at(2) == mpq_class(1, 4) + 6 - 5);
        CHECK_THROWS_AS(p.evaluate_at(0), DomainError);
        CHECK(P({{0, 7}, {2, 1}}).evaluate_at(0) == 7);
    }

    TEST_CASE("text, latex and json forms")
    {
        LaurentPoly p = P({{8, 1}, {4, 1}, {2, 1}});
        CHECK(p.to_text() == "q⁸ + q⁴ + q²");
        CHECK(P({{0, 1}, {-2, -1}}).to_text() == "1 − q⁻²");
        CHECK(P({{3, 1}, {1, -1}}).to_latex() == "q^{3} - q");
        auto j = P({{2, -3}, {-1, 1}}).to_json();
        CHECK(j.dump() == R"({"terms":[[-1,"1"],[2,"-3"]],"var":"q"})");
        CHECK(LaurentPoly::from_json(j) == P({{2, -3}, {-1, 1}}));
    }

    TEST_CASE("gaussian binomials")
    {
        CHECK(gaussian_binomial(4, 2) == P({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}, "X"));
        CHECK(gaussian_binomial(5, 0).is_one());
        CHECK_THROWS_AS(gaussian_binomial(2, 3), DomainError);
        for (int a = 0; a <= 12; ++a)
            for (int b = 0; b <= a; ++b) {
                LaurentPoly g = gaussian_binomial(a, b);
                CHECK(g == gaussian_binomial(a, a - b));
                CHECK(g == pascal_binomial(a, b));
                CHECK(g.evaluate_at(1) == binom(a, b));
            }
    }

    TEST_CASE("gaussian multinomials")
    {
        // [4 choose {1,3}] = [4 choose 3][3 choose 1]
        CHECK(gaussian_multinomial(4, {1, 3}) == gaussian_binomial(4, 3) * gaussian_binomial(3, 1));
        CHECK(gaussian_multinomial(4, {0, 2}) == gaussian_binomial(4, 2));
        CHECK(gaussian_multinomial(0, {}).is_one());
        CHECK_THROWS_AS(gaussian_multinomial(3, {3}), DomainError);
        CHECK(gaussian_multinomial_degree(6, {2, 4}) == gaussian_multinomial(6, {2, 4}).max_exponent());
        // the multinomial counts flags: at Y = 1 it is the ordinary multinomial
        CHECK(gaussian_multinomial(6, {1, 3}).evaluate_at(1) == 6 * 5 * 4 * 3 * 2 / (1 * 2 * 6));
    }

    TEST_CASE("power identity through chains ending below i")
    {
        for (int i = 0; i <= 10; ++i) {
            LaurentPoly sum("X");
            LaurentPoly y_minus_1 = P({{1, 1}, {0, -1}}, "X");
            for (int j = 0; j <= i; ++j) {
                std::vector<int> chain;
                for (int k = i - j; k <= i - 1; ++k)
                    chain.push_back(k);
                sum += gaussian_multinomial(i, chain) * y_minus_1.pow(static_cast<unsigned>(j)) *
                       LaurentPoly::monomial(1, (i - j) * (i - j - 1) / 2, "X");
            }
            CHECK(sum == LaurentPoly::monomial(1, i * (i + 1) / 2, "X"));
        }
    }

    TEST_CASE("power identity through alternating multinomial sum")
    {
        for (int i = 0; i <= 8; ++i) {
            LaurentPoly sum("X");
            for (Subset I : all_subsets(i)) {
                LaurentPoly t = gaussian_multinomial(i + 1, I.elements());
                sum += (i - I.size()) % 2 ? -t : t;
            }
            CHECK(sum == LaurentPoly::monomial(1, i * (i + 1) / 2, "X"));
        }
    }

    TEST_CASE("alternating binomial convolution equals one")
    {
        for (long N = 1; N <= 12; ++N)
            for (long M = 1; M <= N; ++M) {
                long s = 0;
                for (long k = 0; k <= M; ++k)
                    s += binom(N - k, M) * binom(M, k) * (k % 2 ? -1 : 1);
                CHECK(s == 1);
            }
    }

    TEST_CASE("rational functions reduce to a canonical form")
    {
        // q^3 - q over q^2 is a Laurent polynomial
        RatFunc r(P({{3, 1}, {1, -1}}), P({{2, 1}}));
        CHECK(r.is_polynomial());
        CHECK(r.num() == P({{1, 1}, {-1, -1}}));
        CHECK(r.den().is_one());

        RatFunc s(P({{2, 1}, {0, -1}}), P({{2, -2}, {1, -2}})); // (q^2-1)/(-2q^2-2q)
        CHECK(s.num() == P({{-1, 1}, {0, -1}}));
        CHECK(s.den() == P({{0, 2}}));
        CHECK_FALSE(s.is_polynomial());
        try {
            (void)s.to_polynomial();
            FAIL("expected NotPolynomial");
        } catch (const NotPolynomial& e) {
            CHECK(e.denominator() == P({{0, 2}}));
        }

        RatFunc a(P({{0, 1}}), P({{0, 1}, {1, 1}}));
        RatFunc b(P({{0, 1}}), P({{0, 1}, {1, -1}}));
        RatFunc sum = a + b; // 2 / (1 - q^2)
        CHECK(sum.num() == P({{0, -2}}));
        CHECK(sum.den() == P({{0, -1}, {2, 1}}));
        CHECK((sum * RatFunc(P({{0, 1}, {2, -1}}))).to_polynomial() == P({{0, 2}}));
        CHECK((a / a).to_polynomial().is_one());
        CHECK(sum.evaluate_at(3) == mpq_class(-1, 4));
        CHECK(RatFunc(P({{5, 6}}), P({{0, 4}})).num() == P({{5, 3}}));
    }

    TEST_CASE("from F coefficients and back")
    {
        std::mt19937 rng(7);
        for (int k = 0; k <= 4; ++k) {
            std::vector<LaurentPoly> F;
            for (std::uint32_t J = 0; J < (1u << k); ++J)
                F.push_back(random_poly(rng));
            IgusaFunction f = IgusaFunction::from_F_coeffs(k, F);
            CHECK(f.to_F_coeffs() == F);
            CHECK(f.invert_vars().invert_vars() == f);
            CHECK(f.invert_base().invert_base() == f);
        }
    }

    TEST_CASE("inversion of the F family on intervals of the boolean lattice")
    {
        // sum_{I subset J} F_J(1/X) = (-1)^{|S|} sum_{I^c subset J} F_J(X)
        for (int k = 0; k <= 6; ++k) {
            const std::uint32_t all = (1u << k) - 1;
            for (std::uint32_t I = 0; I <= all; ++I) {
                std::vector<LaurentPoly> up(std::size_t{1} << k, LaurentPoly(0)), down = up;
                for (std::uint32_t J = 0; J <= all; ++J) {
                    if ((J & I) == I)
                        up[J] = 1;
                    if ((J & (all ^ I)) == (all ^ I))
                        down[J] = k % 2 ? -1 : 1;
                }
                CHECK(IgusaFunction::from_F_coeffs(k, up).invert_vars() == IgusaFunction::from_F_coeffs(k, down));
            }
        }
    }

    TEST_CASE("rendering over the minimal denominator")
    {
        std::vector<LaurentPoly> F = {1, 1, 1, P({{0, 1}, {-2, -1}})};
        IgusaFunction ig = IgusaFunction::from_F_coeffs(2, F);
        CHECK(ig.to_text() == "(1 − q⁻²X₁X₂)/((1−X₁)(1−X₂))");
        CHECK(ig.to_latex() == "\\frac{1 - q^{-2} X_{1} X_{2}}{(1 - X_{1})(1 - X_{2})}");

        std::vector<LaurentPoly> A1 = {1, P({{0, 1}, {-4, 1}, {-6, 1}}), P({{0, 1}, {-2, 1}, {-8, 1}}),
                                       P({{0, 1}, {-2, 1}, {-4, 1}, {-6, 1}, {-8, 1}, {-10, 1}})};
        CHECK(IgusaFunction::from_F_coeffs(2, A1).to_text() ==
              "(1 + (q⁻⁴+q⁻⁶)X₁ + (q⁻²+q⁻⁸)X₂ + q⁻¹⁰X₁X₂)/((1−X₁)(1−X₂))");

        // constant function: every factor of the denominator cancels
        std::vector<LaurentPoly> only_empty(8, LaurentPoly(0));
        only_empty[0] = 1;
        CHECK(IgusaFunction::from_F_coeffs(3, only_empty).to_text() == "1");
        // F_{1} alone keeps exactly one factor
        std::vector<LaurentPoly> only_one(8, LaurentPoly(0));
        only_one[1] = 1;
        CHECK(IgusaFunction::from_F_coeffs(3, only_one).to_text() == "X₁/(1−X₁)");
    }

    TEST_CASE("json form of an Igusa function")
    {
        std::vector<LaurentPoly> F = {1, 1, 1, P({{0, 1}, {-2, -1}})};
        auto j = IgusaFunction::from_F_coeffs(2, F).to_json();
        CHECK(j["basis"] == "e");
        CHECK(j["n_vars"] == 2);
        // 1 - q^{-2}, written on e_K: e_{12} only with leftover lower terms
        REQUIRE(j["coeffs"].is_array());
        std::vector<std::vector<int>> Ks;
        for (const auto& c : j["coeffs"])
            Ks.push_back(c["K"].get<std::vector<int>>());
        CHECK(std::is_sorted(Ks.begin(), Ks.end()));
    }
}
