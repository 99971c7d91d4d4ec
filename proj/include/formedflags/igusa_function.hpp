#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "formedflags/laurent_poly.hpp"
#include "formedflags/subset.hpp"

namespace formedflags {

// Multilinear polynomial in X_1..X_k with Laurent polynomial coefficients,
// indexed by the support mask of each monomial.
struct Numerator {
    int n_vars = 0;
    std::vector<LaurentPoly> coeffs; // size 2^n_vars
};

// Element of Q(q)[e_1, ..., e_k] restricted to square-free monomials,
// e_K = prod_{k in K} 1/(1 - X_k). Coefficients are stored densely by mask.
class IgusaFunction {
public:
    explicit IgusaFunction(int n_vars = 0, std::string base_var = "q");

    // sum_J F[J] prod_{j in J} X_j/(1 - X_j)
    static IgusaFunction from_F_coeffs(int n_vars, const std::vector<LaurentPoly>& F, std::string base_var = "q");

    int n_vars() const { return n_vars_; }
    const std::string& base_var() const { return base_var_; }
    const LaurentPoly& coeff(Subset K) const { return coeffs_.at(K.bits()); }
    void set_coeff(Subset K, LaurentPoly p) { coeffs_.at(K.bits()) = std::move(p); }
    std::vector<LaurentPoly> to_F_coeffs() const;

    // X -> X^{-1}
    IgusaFunction invert_vars() const;
    // q -> q^{-1} on every coefficient
    IgusaFunction invert_base() const;
    // X_i -> X_{n_vars + 1 - i}
    IgusaFunction reverse_vars() const;
    IgusaFunction scaled(const LaurentPoly& c) const;

    IgusaFunction& operator+=(const IgusaFunction& o);
    bool operator==(const IgusaFunction& o) const { return n_vars_ == o.n_vars_ && coeffs_ == o.coeffs_; }

    // Numerator over prod_{j in D} (1 - X_j) with D minimal, found by
    // dropping j = 1, 2, ... while the numerator stays polynomial.
    Numerator numerator(Subset* denominator_support) const;

    std::string to_text() const;
    std::string to_latex() const;
    nlohmann::json to_json() const;

private:
    int n_vars_;
    std::string base_var_;
    std::vector<LaurentPoly> coeffs_;
};

} // namespace formedflags
