#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "formedflags/alpha.hpp"
#include "formedflags/formed_space_spec.hpp"
#include "formedflags/igusa_function.hpp"
#include "formedflags/report.hpp"

namespace formedflags {

// closed: Gaussian multinomials (symplectic, unitary with I empty) or the
//         orthogonal closed forms;
// coxeter: sums over S_{gamma n}, or over chessboard elements for
//          orthogonal spaces (conjectural there);
// recursive: the flag recursion, or the sign-tuple sum for orthogonal spaces.
enum class Method { closed, coxeter, recursive };

Method parse_method(const std::string& s);
std::string to_string(Method m);

struct AlphaTable {
    FormedSpaceSpec spec;
    std::vector<LaurentPoly> a;     // by mask of J subset [n-1]
    std::vector<LaurentPoly> alpha; // alpha^J(q^{-1}) in q
};

AlphaTable alpha_table(const FormedSpaceSpec& spec, Method method,
                       std::uint64_t max_group_size = kDefaultMaxGroupSize);

struct FEConstants {
    int a = 0;
    int b = 0;
};

FEConstants fe_constants(const FormedSpaceSpec& spec);

struct CoefficientIdentity {
    Subset J;
    LaurentPoly lhs; // sum_{K >= J} (-1)^{|K|} alpha^K(q)
    LaurentPoly rhs; // (-1)^a q^b alpha~^J(q^{-1})
    bool vacuous = false;
};

std::vector<CoefficientIdentity> coefficient_identities(int n, const std::vector<LaurentPoly>& alpha,
                                                        const std::vector<LaurentPoly>& alpha_tilde,
                                                        FEConstants c, const FormedSpaceSpec* admissible = nullptr);
VerificationReport report_identities(const std::string& claim, const std::vector<CoefficientIdentity>& ids);

std::vector<CoefficientIdentity> theorem_identities(const FormedSpaceSpec& spec, Method method);

// Ig(q^{-1}, X) for the family F_J = prod X_j/(1 - X_j). Symplectic
// spaces only see even J, so their variables are X_{2}, X_{4}, ...
// relabelled X_1, X_2, ...
IgusaFunction igusa_function(const AlphaTable& t);
// Ig(q, X^{-1}) = (-1)^a q^b Ig~(q^{-1}, X), compared on the e-basis.
VerificationReport verify_igusa_equation(const FormedSpaceSpec& spec, Method method);

VerificationReport verify_theorem_A(const FormedSpaceSpec& spec, Method method = Method::closed);
VerificationReport verify_theorem_B(const FormedSpaceSpec& spec, Method method = Method::coxeter);

// Inversion of the fibre sums F_{phi^{-1}(H)}: the refinement identity
// and, for n <= max_F_level, the identity itself on the e-basis.
VerificationReport verify_prop2_i(int n, int max_F_level = 8);
// alpha^{up G}(q) against the c_{G,H}-weighted sum of alpha^{up H}(q^{-1}).
VerificationReport verify_prop2_ii(int m, bool odd, int epsilon = 1);

VerificationReport verify_conjecture_C(int n, int epsilon,
                                       std::uint64_t max_group_size = kDefaultMaxGroupSize);

} // namespace formedflags
