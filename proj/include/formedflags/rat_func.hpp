#pragma once

#include <stdexcept>

#include "formedflags/laurent_poly.hpp"

namespace formedflags {

class NotPolynomial : public std::runtime_error {
public:
    explicit NotPolynomial(LaurentPoly den);
    const LaurentPoly& denominator() const { return den_; }

private:
    LaurentPoly den_;
};

// Gcd of two nonzero Laurent polynomials up to units of Z[q, 1/q]:
// an ordinary polynomial with nonzero constant term and positive leading
// coefficient.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Quotient num/den of Laurent polynomials, kept reduced: den is an ordinary
// polynomial with nonzero constant term and positive leading coefficient,
// and num, den share no common factor other than a unit of Z[q, 1/q].
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(LaurentPoly num); // NOLINT
    RatFunc(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    LaurentPoly to_polynomial() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc invert_var() const;
    mpq_class evaluate_at(const mpq_class& x) const;
    std::string to_text() const;

private:
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace formedflags
