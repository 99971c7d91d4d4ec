#include "formedflags/rat_func.hpp"

#include <utility>
#include <vector>

#include "formedflags/errors.hpp"

namespace formedflags {

namespace {

using Dense = std::vector<mpz_class>; // ascending, no trailing zeros

Dense dense_of(const LaurentPoly& p)
{
    Dense d;
    if (p.is_zero())
        return d;
    for (int e = p.min_exponent(); e <= p.max_exponent(); ++e)
        d.push_back(p.coeff(e));
    return d;
}

void strip(Dense& d)
{
    while (!d.empty() && d.back() == 0)
        d.pop_back();
}

void make_primitive(Dense& d)
{
    mpz_class g = 0;
    for (const auto& c : d)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0)
        return;
    if (d.back() < 0)
        g = -g;
    for (auto& c : d)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^k a mod b, with k = deg a - deg b + 1.
Dense pseudo_remainder(Dense a, const Dense& b)
{
    while (a.size() >= b.size() && !a.empty()) {
        mpz_class lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a)
            c *= b.back();
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_submul(a[shift + j].get_mpz_t(), lead.get_mpz_t(), b[j].get_mpz_t());
        strip(a);
        make_primitive(a);
    }
    return a;
}

LaurentPoly from_dense(const Dense& d, const std::string& var)
{
    std::map<int, mpz_class> t;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0)
            t.emplace(static_cast<int>(i), d[i]);
    return LaurentPoly::from_terms(t, var);
}

} // namespace

NotPolynomial::NotPolynomial(LaurentPoly den)
    : std::runtime_error("not a Laurent polynomial; reduced denominator " + den.to_text()), den_(std::move(den))
{
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero())
        throw DomainError("laurent_gcd: zero argument");
    Dense x = dense_of(a);
    Dense y = dense_of(b);
    mpz_class ca = a.content();
    mpz_class cb = b.content();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size())
        std::swap(x, y);
    while (!y.empty()) {
        Dense r = pseudo_remainder(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    make_primitive(x);
    return from_dense(x, a.var()).scaled(cg);
}

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(1, num_.var())) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw DomainError("RatFunc: zero denominator");
    canonicalize();
}

void RatFunc::canonicalize()
{
    const std::string var = num_.var();
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(1, var);
        return;
    }
    // Move the monomial part of den into num.
    int shift = den_.min_exponent();
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    den_ = den_.with_var(var);
}

LaurentPoly RatFunc::to_polynomial() const
{
    if (!is_polynomial())
        throw NotPolynomial(den_);
    return num_;
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    if (o.is_zero())
        throw DomainError("RatFunc: division by zero");
    LaurentPoly n = num_ * o.den_;
    LaurentPoly d = den_ * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    canonicalize();
    return *this;
}

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::invert_var() const { return RatFunc(num_.invert_var(), den_.invert_var()); }

mpq_class RatFunc::evaluate_at(const mpq_class& x) const
{
    mpq_class d = den_.evaluate_at(x);
    if (d == 0)
        throw DomainError("RatFunc: pole at evaluation point");
    return num_.evaluate_at(x) / d;
}

std::string RatFunc::to_text() const
{
    if (is_polynomial())
        return num_.to_text();
    auto wrap = [](const LaurentPoly& p) { return p.num_terms() > 1 ? "(" + p.to_text() + ")" : p.to_text(); };
    return wrap(num_) + "/" + wrap(den_);
}

} // namespace formedflags
