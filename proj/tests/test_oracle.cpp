#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "formedflags/alpha.hpp"
#include "formedflags/errors.hpp"
#include "formedflags/functional_equations.hpp"
#include "formedflags/oracle.hpp"
#include "formedflags/qbinomial.hpp"

using namespace formedflags;

namespace {

mpz_class value_at(const LaurentPoly& p, int q)
{
    const mpq_class v = p.evaluate_at(q);
    REQUIRE(v.get_den() == 1);
    return v.get_num();
}

} // namespace

TEST_SUITE("oracle")
{
    TEST_CASE("field tables")
    {
        for (int q : {2, 3, 4, 5, 7, 9}) {
            const SmallField F(q);
            CHECK(F.order() == q);
            int roots = 0;
            for (int a = 1; a < q; ++a) {
                Elem x = 1;
                for (int k = 0; k < q - 1; ++k)
                    x = F.mul(x, static_cast<Elem>(a));
                roots += x == 1;
            }
            CHECK(roots == q - 1);
        }
        CHECK_THROWS_AS(SmallField(6), DomainError);
        CHECK_THROWS_AS(SmallField(3).conj(1), DomainError);
        const SmallField F4(4);
        // x^2 + x + 1 = 0
        CHECK(F4.add(F4.add(F4.mul(2, 2), 2), 1) == 0);
        const SmallField F9(9);
        CHECK(F9.add(F9.mul(3, 3), 1) == 0);
        // the norm map onto F_q is surjective with fibres of size q + 1
        for (const SmallField* F : {&F4, &F9}) {
            std::vector<int> fibre(static_cast<std::size_t>(F->order()), 0);
            for (int a = 1; a < F->order(); ++a)
                ++fibre[F->mul(static_cast<Elem>(a), F->conj(static_cast<Elem>(a)))];
            CHECK(fibre[1] == F->base_order() + 1);
        }
    }

    TEST_CASE("linear algebra")
    {
        const SmallField F(3);
        std::mt19937 rng(7);
        for (int t = 0; t < 20; ++t) {
            const Matrix m = random_invertible(F, 4, rng);
            CHECK(rank(F, m) == 4);
            Matrix r = m;
            CHECK(rref(F, r).size() == 4);
            CHECK(r == Matrix::identity(4));
        }
        Matrix m(2, 3);
        m.at(0, 0) = 1, m.at(0, 1) = 2, m.at(1, 1) = 1, m.at(1, 2) = 1;
        const Matrix ns = nullspace(F, m);
        REQUIRE(ns.rows == 1);
        CHECK(multiply(F, m, transpose(ns)) == Matrix(2, 1));
    }

    TEST_CASE("subspace enumeration")
    {
        auto count = [](int q, int n, int k) {
            long c = 0;
            for_each_subspace(SmallField(q), n, k, [&](const Matrix&) { ++c; });
            return c;
        };
        CHECK(count(2, 3, 1) == 7);
        CHECK(count(2, 4, 2) == 35);
        CHECK(count(2, 5, 0) == 1);
        for (auto [q, n, k] : {std::tuple{2, 3, 1}, {2, 4, 2}, {3, 4, 2}, {4, 3, 2}, {9, 2, 1}})
            CHECK(mpz_class(count(q, n, k)) == value_at(gaussian_binomial(n, k), q));
        // all subspaces are distinct
        std::set<std::vector<Elem>> seen;
        for_each_subspace(SmallField(3), 4, 2, [&](const Matrix& m) { seen.insert(m.a); });
        CHECK(seen.size() == 130);
        // extensions of a line in F_2^4 to planes
        Matrix w(1, 4);
        w.at(0, 1) = 1;
        long ext = 0;
        for_each_extension(SmallField(2), w, 2, [&](const Matrix& u) {
            ++ext;
            CHECK(rank(SmallField(2), u) == 2);
        });
        CHECK(ext == 7);
        CHECK_THROWS_AS(for_each_subspace(SmallField(9), 8, 4, [](const Matrix&) {}), ResourceError);
    }

    TEST_CASE("standard spaces")
    {
        const SmallField F2(2), F3(3);
        const GramSpace s = standard_space(Kind::symplectic, 2, F2);
        CHECK(s.gram.at(0, 1) == 1);
        CHECK(s.gram.at(1, 0) == 1);
        CHECK(s.gram.at(0, 0) == 0);
        // anisotropic plane over F_3: f vanishes only at 0
        const GramSpace an = standard_space(Kind::orthogonal, 2, F3, -1);
        int zeros = 0;
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                zeros += an.f({static_cast<Elem>(x), static_cast<Elem>(y)}) == 0;
        CHECK(zeros == 1);
        CHECK(witt_type(an) == -1);
        CHECK(witt_type(standard_space(Kind::orthogonal, 4, F3, 1)) == 1);
        CHECK(witt_type(standard_space(Kind::orthogonal, 4, F2, -1)) == -1);
        CHECK(witt_type(standard_space(Kind::orthogonal, 6, F2, -1)) == -1);
        // odd quadratic space in characteristic 2: one-dimensional radical, f anisotropic on it
        const GramSpace odd = standard_space(Kind::orthogonal, 3, F2);
        CHECK(odd.radical().rows == 1);
        CHECK(odd.is_nondegenerate());
        for (Kind k : {Kind::symplectic, Kind::orthogonal})
            for (int q : {2, 3, 5})
                for (int n = 1; n <= 4; ++n) {
                    if (k == Kind::symplectic && n % 2)
                        continue;
                    CHECK(standard_space(k, n, SmallField(q), 1).is_nondegenerate());
                    if (k == Kind::orthogonal && n % 2 == 0)
                        CHECK(standard_space(k, n, SmallField(q), -1).is_nondegenerate());
                }
        CHECK(standard_space(Kind::unitary, 3, SmallField(4)).is_nondegenerate());
        CHECK_THROWS_AS(standard_space(Kind::unitary, 2, F3), DomainError);
        CHECK_THROWS_AS(standard_space(Kind::symplectic, 3, F3), DomainError);
        // isotropic line in a hyperbolic plane
        const GramSpace h = standard_space(Kind::orthogonal, 2, F3, 1);
        Matrix line(1, 2);
        line.at(0, 0) = 1;
        CHECK_FALSE(h.restrict_to(line).is_nondegenerate());
        CHECK(h.restrict_to(Matrix::identity(2)).is_nondegenerate());
    }

    TEST_CASE("golden counts")
    {
        const SmallField F2(2), F3(3), F4(4);
        CHECK(count_flags(standard_space(Kind::orthogonal, 3, F2), {1}) == 4);
        CHECK(count_flags(standard_space(Kind::symplectic, 4, F3), {2}) == 90);
        const GramSpace o4 = standard_space(Kind::orthogonal, 4, F2, 1);
        CHECK(count_typed_subspaces(o4, 2, 1) + count_typed_subspaces(o4, 2, -1) == 20);
        const GramSpace o3 = standard_space(Kind::orthogonal, 3, F3);
        CHECK(count_typed_subspaces(o3, 2, 1) + count_typed_subspaces(o3, 2, -1) == 9);
        CHECK(count_flags(standard_space(Kind::orthogonal, 2, F3, -1), {1}) == 4);
        CHECK(count_flags(standard_space(Kind::unitary, 2, F4), {1}) == 2);
        CHECK(count_flags(o4, {}) == 1);
        CHECK(count_typed_subspaces(o4, 4, 1) == 1);
        CHECK(count_typed_subspaces(o4, 4, -1) == 0);
    }

    TEST_CASE("typed counts against the order quotients")
    {
        for (int q : {3, 5}) {
            for (int n = 2; n <= 4; ++n)
                for (int eps : {1, -1}) {
                    if (n % 2 && eps == -1)
                        continue;
                    const GramSpace s = standard_space(Kind::orthogonal, n, SmallField(q), eps);
                    const int e = n % 2 ? 0 : eps;
                    for (int j = 1; j < n; ++j)
                        for (int d : {1, -1}) {
                            if (j % 2 && d == -1)
                                continue;
                            CAPTURE(q);
                            CAPTURE(n);
                            CAPTURE(j);
                            CAPTURE(d);
                            const mpq_class expect = a_orthogonal_typed(n, e, j, d).evaluate_at(q);
                            CHECK(mpq_class(count_typed_subspaces(s, j, d)) == expect);
                        }
                }
        }
    }

    TEST_CASE("flags of forms")
    {
        const SmallField F2(2);
        const FlagOfForms b = standard_flag_of_forms(Kind::symplectic, 4, {2}, F2);
        CHECK(b.dims == std::vector<int>{2, 4});
        CHECK(b.is_nondegenerate(Matrix::identity(4)));
        CHECK(b.is_nondegenerate(Matrix(0, 4)));
        // U = R_2 itself, and a complement to it
        Matrix r(2, 4), c(2, 4);
        r.at(0, 0) = 1, r.at(1, 1) = 1;
        c.at(0, 2) = 1, c.at(1, 3) = 1;
        CHECK(b.is_nondegenerate(r));
        CHECK(b.is_nondegenerate(c));
        Matrix mixed(2, 4);
        mixed.at(0, 0) = 1, mixed.at(1, 2) = 1;
        CHECK_FALSE(b.is_nondegenerate(mixed));
        CHECK_THROWS_AS(standard_flag_of_forms(Kind::symplectic, 4, {1}, F2), DomainError);
        FlagOfForms bad = b;
        bad.grams[1] = standard_space(Kind::symplectic, 4, F2).gram;
        CHECK_THROWS_AS(bad.validate(), ConsistencyError);
    }

    TEST_CASE("isometry invariance")
    {
        std::mt19937 rng(2024);
        const std::vector<std::tuple<Kind, int, int, int>> cases = {
            {Kind::symplectic, 4, 3, 0}, {Kind::orthogonal, 3, 2, 0}, {Kind::orthogonal, 4, 3, -1},
            {Kind::orthogonal, 4, 2, 1}, {Kind::unitary, 3, 4, 0},
        };
        for (auto [kind, n, q, eps] : cases) {
            const SmallField F(q);
            const GramSpace s = standard_space(kind, n, F, eps);
            std::vector<mpz_class> base;
            for (Subset J : all_subsets(n - 1))
                base.push_back(count_flags(s, J));
            for (int t = 0; t < 5; ++t) {
                const GramSpace moved = s.change_basis(random_invertible(F, n, rng));
                moved.validate();
                for (Subset J : all_subsets(n - 1))
                    CHECK(count_flags(moved, J) == base[J.bits()]);
            }
        }
    }

    TEST_CASE("symmetric bilinear space in characteristic 2")
    {
        const std::vector<mpz_class> t = a3_counterexample_table(2);
        const std::vector<long> expect = {1, 8, 20, 32, 8, 32, 32, 48};
        for (std::size_t k = 0; k < expect.size(); ++k)
            CHECK(t[k] == expect[k]);
        CHECK_THROWS_AS(a3_counterexample_table(3), DomainError);
    }

    TEST_CASE("operation budget")
    {
        const GramSpace s = standard_space(Kind::symplectic, 4, SmallField(3));
        CHECK_THROWS_AS(count_flags(s, {2}, 10), ResourceError);
    }

    TEST_CASE("formula paths against enumeration")
    {
        auto compare = [](const FormedSpaceSpec& spec, const GramSpace& s, int q, Method m) {
            const AlphaTable t = alpha_table(spec, m);
            for (Subset J : all_subsets(spec.n - 1)) {
                CAPTURE(spec.label());
                CAPTURE(q);
                CAPTURE(J.to_string());
                CHECK(count_flags(s, J) == value_at(t.a[J.bits()], q));
            }
        };
        for (int q : {2, 3})
            compare(FormedSpaceSpec::make(Kind::symplectic, 4), standard_space(Kind::symplectic, 4, SmallField(q)), q,
                    Method::closed);
        for (int q : {2, 3, 5})
            for (int n = 2; n <= 4; ++n)
                for (int eps : {1, -1}) {
                    const int e = n % 2 ? 0 : eps;
                    compare(FormedSpaceSpec::make(Kind::orthogonal, n, e),
                            standard_space(Kind::orthogonal, n, SmallField(q), e ? e : 1), q, Method::recursive);
                }
        compare(FormedSpaceSpec::make(Kind::unitary, 2), standard_space(Kind::unitary, 2, SmallField(4)), 2,
                Method::closed);
        compare(FormedSpaceSpec::make(Kind::unitary, 3), standard_space(Kind::unitary, 3, SmallField(4)), 2,
                Method::coxeter);
        compare(FormedSpaceSpec::make(Kind::unitary, 2), standard_space(Kind::unitary, 2, SmallField(9)), 3,
                Method::closed);
        for (int q : {2, 3}) {
            const FormedSpaceSpec spec = FormedSpaceSpec::make(Kind::symplectic, 4, 0, {2});
            const FlagOfForms b = standard_flag_of_forms(Kind::symplectic, 4, {2}, SmallField(q));
            const AlphaTable t = alpha_table(spec, Method::recursive);
            for (Subset J : all_subsets(3))
                CHECK(count_flags(b, J) == value_at(t.a[J.bits()], q));
        }
    }
}
