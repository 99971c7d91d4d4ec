#include <doctest.h>

#include <set>

#include "formedflags/compositions.hpp"
#include "formedflags/errors.hpp"

using namespace formedflags;

TEST_SUITE("compositions")
{
    TEST_CASE("compositions of subsets")
    {
        CHECK(composition_of(Subset{1, 3, 4}, 5).parts == std::vector<int>{1, 2, 1, 1});
        CHECK(compositions_N(Subset{1, 3, 4}, 5) == 5);
        CHECK(composition_of(Subset{2, 4, 5}, 5).parts == std::vector<int>{2, 1});
        CHECK(compositions_N(Subset{2, 4, 5}, 5) == 3);
        CHECK(composition_of(Subset{}, 7).parts == std::vector<int>{7});
        CHECK(composition_of(Subset::full(4), 4).parts.empty());
        CHECK(compositions_N(Subset::full(4), 4) == 0);
        CHECK_THROWS_AS(composition_of(Subset{6}, 5), DomainError);
    }

    TEST_CASE("subsets of [n-1] correspond to compositions of n")
    {
        for (int n = 1; n <= 10; ++n) {
            std::set<std::vector<int>> seen;
            for (Subset I : all_subsets(n - 1)) {
                Composition c = composition_of(I, n);
                CHECK(c.total() == n);
                CHECK(c.size() == I.size() + 1);
                seen.insert(c.parts);
            }
            CHECK(seen.size() == (std::size_t{1} << (n - 1)));
        }
    }

    TEST_CASE("bisection examples")
    {
        Bisection b = bisect(Subset{2, 7, 9}, 11);
        CHECK(b.phi == Subset{1, 3, 4});
        CHECK(b.cut == 5);
        Bisection c = bisect(Subset{1, 2, 7, 8, 9}, 11);
        CHECK(c.phi == Subset{2, 4, 5});
        CHECK(c.cut == 3);
        CHECK(bisect(Subset{}, 6).phi == Subset{});
        CHECK(bisect(Subset{1, 2}, 3).phi == Subset{1});
    }

    TEST_CASE("bisection properties")
    {
        for (int n = 1; n <= 12; ++n) {
            const int m = n / 2;
            std::set<std::uint32_t> image;
            for (Subset I : all_subsets(n - 1)) {
                Bisection b = bisect(I, n);
                CHECK(b.phi.is_subset_of(Subset::full(m)));
                CHECK(compositions_N(b.phi, m) == b.cut);
                CHECK(composition_of(b.phi, m).size() <= composition_of(I, n).size());
                image.insert(b.phi.bits());
            }
            CHECK(image.size() == (std::size_t{1} << m));
        }
    }

    TEST_CASE("fibers in lexicographic order")
    {
        auto f = fiber(Subset{}, 5);
        CHECK(f.front() == Subset{});
        for (std::size_t k = 1; k < f.size(); ++k)
            CHECK(lex_less(f[k - 1], f[k]));
        std::size_t total = 0;
        for (Subset H : all_subsets(3))
            total += fiber(H, 7).size();
        CHECK(total == 64);
    }

    TEST_CASE("refinements")
    {
        auto r = refinement_enumerate(Subset{1, 3, 4}, Subset{2, 4, 5}, 5);
        CHECK(r == std::vector<Refinement>{{0, 1, 1, 2}, {0, 1, 2, 2}});
        CHECK(refinement_count(Subset{1, 3, 4}, Subset{2, 4, 5}, 5) == 2);
        // empty composition on both sides
        CHECK(refinement_count(Subset::full(3), Subset::full(3), 3) == 1);
        CHECK(refinement_count(Subset::full(3), Subset{1}, 3) == 0);
        CHECK(refinement_count(Subset{}, Subset{}, 4) == 1);
    }

    TEST_CASE("induced refinements")
    {
        CHECK(induced_refinement(Subset{2, 7, 9}, Subset{1, 2, 7, 8, 9}, 11) == Refinement{0, 1, 1, 2});
        CHECK(induced_refinement(Subset{2, 7, 9}, Subset{1, 2, 3, 7, 9, 10}, 11) == Refinement{0, 1, 2, 2});
        CHECK_THROWS_AS(induced_refinement(Subset{1}, Subset{2}, 4), DomainError);
    }

    TEST_CASE("induced tuples are refinements, and every refinement is induced")
    {
        for (int n = 1; n <= 9; ++n) {
            const int m = n / 2;
            for (Subset I : all_subsets(n - 1)) {
                const Subset G = bisect(I, n).phi;
                std::set<std::pair<std::uint32_t, Refinement>> induced;
                for (Subset J : all_subsets(n - 1)) {
                    if (!I.is_subset_of(J))
                        continue;
                    const Subset H = bisect(J, n).phi;
                    Refinement xi = induced_refinement(I, J, n);
                    CHECK(static_cast<int>(xi.size()) == composition_of(G, m).size());
                    induced.insert({H.bits(), xi});
                }
                for (Subset H : all_subsets(m))
                    for (const auto& xi : refinement_enumerate(G, H, m))
                        CHECK(induced.count({H.bits(), xi}) == 1);
                for (const auto& [h, xi] : induced) {
                    auto refs = refinement_enumerate(G, Subset(h), m);
                    CHECK(std::find(refs.begin(), refs.end(), xi) != refs.end());
                }
            }
        }
    }

    TEST_CASE("alternating fiber sums equal one")
    {
        for (int n = 1; n <= 10; ++n) {
            VerificationReport r = verify_eq20(n);
            CHECK_MESSAGE(r.verified(), r.summary());
        }
    }
}
