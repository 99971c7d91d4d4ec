#pragma once

#include <cstdint>
#include <vector>

#include "formedflags/formed_space_spec.hpp"
#include "formedflags/laurent_poly.hpp"
#include "formedflags/rat_func.hpp"
#include "formedflags/streams.hpp"

namespace formedflags {

// Conventions: a^J(q) counts non-degenerate flags of type J and is a
// polynomial in q; alpha^J(q^{-1}) = a^J(q) / q^{deg a^J} is stored as a
// Laurent polynomial in q with non-positive exponents.

inline constexpr int kDefaultCoxeterBound = 9;

LaurentPoly normalize(const LaurentPoly& a);

// [gamma n choose gamma J]_Y at Y = q^{-2} (symplectic) or Y = -q^{-1}
// (unitary); zero for symplectic J with odd elements. Needs I empty.
LaurentPoly alpha_base_sp_u(const FormedSpaceSpec& spec, Subset J);

// Sum over w in S_{gamma n} with D_L(w) in gamma J of
// Y^{l(w) + l_L^{(gamma I~)^c}(w)}, I~ = {n - i}, complement in [gamma n - 1].
LaurentPoly alpha_coxeter(const FormedSpaceSpec& spec, Subset J, int max_gamma_n = kDefaultCoxeterBound);
// Same for every J subset [n-1] (indexed by mask) from one sweep.
std::vector<LaurentPoly> alpha_coxeter_table(const FormedSpaceSpec& spec, int max_gamma_n = kDefaultCoxeterBound);

// Number of non-degenerate flags, by recursion on the first member of the
// flag and the dimensions of its intersections with the radicals.
LaurentPoly a_recursive_sp_u(const FormedSpaceSpec& spec, Subset J);

// a^J for orthogonal spaces as p_{n,eps} times the sum of 1/prod p_{k,e}
// over admissible sign tuples. The admissible tuples depend on whether -1
// is a square; both cases are summed and must agree.
LaurentPoly a_orthogonal(int n, int epsilon, Subset J);
// One case only: eta = 1 if -1 is a square, else -1.
RatFunc a_orthogonal_sum(int n, int epsilon, Subset J, int eta);

// Closed form in Y = q^{-2} through the bisection H = phi(J). Both closed
// expressions are evaluated; ConsistencyError if they differ.
LaurentPoly alpha_orthogonal_prop3(int n, int epsilon, Subset J);

// The two closed expressions in Y before the substitution Y = q^{-2};
// for even n and J with an odd element the result is further divided
// by 1 + epsilon q^{-m}.
struct Prop3Expressions {
    LaurentPoly first;
    LaurentPoly second;
    bool divide_by_epsilon_factor = false;
};
Prop3Expressions alpha_orthogonal_prop3_expressions(int n, int epsilon, Subset J);

// Non-degenerate j-dimensional subspaces of an orthogonal space, of type
// delta when j is even (delta ignored for odd j). These need not have
// integer coefficients, so the result is rational.
RatFunc a_orthogonal_typed(int n, int epsilon, int j, int delta);

// alpha^{up G} = alpha^I for the lexicographically least I in fiber(G).
LaurentPoly alpha_lifted(int n, int epsilon, Subset G);

// sum over chessboard w with D_L(w) in J of chi_eps(w) q^{-L(w)}, for
// every J at once (indexed by mask).
std::vector<LaurentPoly> conjecture_alpha_table(int n, int epsilon,
                                                std::uint64_t max_group_size = kDefaultMaxGroupSize);
LaurentPoly conjecture_alpha(int n, int epsilon, Subset J);

} // namespace formedflags
