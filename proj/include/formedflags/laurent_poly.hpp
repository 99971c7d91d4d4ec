#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace formedflags {

// Laurent polynomial in one variable with integer coefficients.
// Stored densely from the lowest to the highest nonzero term; the zero
// polynomial has no terms. Equality ignores the variable label.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::string var) : var_(std::move(var)) {}
    LaurentPoly(long c); // NOLINT: integers promote to constants

    static LaurentPoly constant(const mpz_class& c, std::string var = "q");
    static LaurentPoly monomial(const mpz_class& c, int e, std::string var = "q");
    static LaurentPoly from_terms(const std::map<int, mpz_class>& terms, std::string var = "q");
    // 1 - var^e
    static LaurentPoly one_minus_power(int e, std::string var = "q");

    const std::string& var() const { return var_; }
    LaurentPoly with_var(std::string var) const;

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int min_exponent() const { return low_; }
    int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    int num_terms() const;
    mpz_class coeff(int e) const;
    const mpz_class& leading_coeff() const { return coeffs_.back(); }
    std::map<int, mpz_class> terms() const;
    // Ordinary polynomial: no negative exponents.
    bool is_ordinary() const { return is_zero() || low_ >= 0; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && coeffs_ == o.coeffs_; }

    // Multiply by var^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly scaled(const mpz_class& c) const;
    LaurentPoly pow(unsigned k) const;

    // e -> -e
    LaurentPoly invert_var() const;
    // coefficient of var^e times (-1)^e
    LaurentPoly negate_var() const;
    // e -> k e
    LaurentPoly power_substitute(int k) const;
    mpq_class evaluate_at(const mpq_class& x) const;

    mpz_class content() const; // gcd of coefficients, positive; 0 for zero
    // Quotient in the Laurent ring when it has integer coefficients.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

    // Descending exponents, e.g. "q⁸ + q⁴ + q²". compact drops the spaces
    // around binary signs.
    std::string to_text(bool compact = false) const;
    std::string to_latex() const;
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    void trim();

    std::string var_ = "q";
    int low_ = 0;
    std::vector<mpz_class> coeffs_;
};

std::string superscript(long e);
std::string subscript(long i);

} // namespace formedflags
