#include "formedflags/laurent_poly.hpp"

#include <algorithm>

#include "formedflags/errors.hpp"

namespace formedflags {

namespace {

const char* const kSup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
const char* const kSub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

std::string digits_with(long v, const char* const table[], const char* minus)
{
    std::string s = v < 0 ? minus : "";
    for (char c : std::to_string(v < 0 ? -v : v))
        s += table[c - '0'];
    return s;
}

} // namespace

std::string superscript(long e) { return digits_with(e, kSup, "⁻"); }
std::string subscript(long i) { return digits_with(i, kSub, "₋"); }

LaurentPoly::LaurentPoly(long c)
{
    if (c != 0)
        coeffs_.emplace_back(c);
}

LaurentPoly LaurentPoly::constant(const mpz_class& c, std::string var)
{
    return monomial(c, 0, std::move(var));
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int e, std::string var)
{
    LaurentPoly p(std::move(var));
    if (c != 0) {
        p.low_ = e;
        p.coeffs_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, mpz_class>& terms, std::string var)
{
    LaurentPoly p(std::move(var));
    if (terms.empty())
        return p;
    p.low_ = terms.begin()->first;
    p.coeffs_.assign(static_cast<std::size_t>(terms.rbegin()->first - p.low_ + 1), 0);
    for (const auto& [e, c] : terms)
        p.coeffs_[static_cast<std::size_t>(e - p.low_)] += c;
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::one_minus_power(int e, std::string var)
{
    return monomial(1, 0, var) - monomial(1, e, var);
}

LaurentPoly LaurentPoly::with_var(std::string var) const
{
    LaurentPoly p = *this;
    p.var_ = std::move(var);
    return p;
}

bool LaurentPoly::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

int LaurentPoly::num_terms() const
{
    return static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
}

mpz_class LaurentPoly::coeff(int e) const
{
    if (is_zero() || e < low_ || e > max_exponent())
        return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::map<int, mpz_class> LaurentPoly::terms() const
{
    std::map<int, mpz_class> m;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            m.emplace(low_ + static_cast<int>(i), coeffs_[i]);
    return m;
}

void LaurentPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0)
        ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty())
        low_ = 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        low_ = o.low_;
        coeffs_ = o.coeffs_;
        return *this;
    }
    int lo = std::min(low_, o.low_);
    int hi = std::max(max_exponent(), o.max_exponent());
    if (lo < low_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
        low_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - low_ + 1), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r(a.var_);
    if (a.is_zero() || b.is_zero())
        return r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    r.trim();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly r = *this;
    if (!r.is_zero())
        r.low_ += k;
    return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const
{
    if (c == 0)
        return LaurentPoly(var_);
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const
{
    LaurentPoly r = monomial(1, 0, var_);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u)
            r *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return r;
}

LaurentPoly LaurentPoly::invert_var() const
{
    LaurentPoly r = *this;
    std::reverse(r.coeffs_.begin(), r.coeffs_.end());
    if (!r.is_zero())
        r.low_ = -max_exponent();
    return r;
}

LaurentPoly LaurentPoly::negate_var() const
{
    LaurentPoly r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        if ((low_ + static_cast<int>(i)) % 2 != 0)
            r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

LaurentPoly LaurentPoly::power_substitute(int k) const
{
    if (k == 0)
        throw DomainError("power_substitute: exponent multiplier must be nonzero");
    std::map<int, mpz_class> t;
    for (const auto& [e, c] : terms())
        t.emplace(k * e, c);
    return from_terms(t, var_);
}

mpq_class LaurentPoly::evaluate_at(const mpq_class& x) const
{
    if (is_zero())
        return 0;
    if (x == 0) {
        if (low_ < 0)
            throw DomainError("evaluate_at: negative exponent at zero");
        return mpq_class(coeff(0));
    }
    // Horner from the top, then scale by x^low.
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + mpq_class(*it);
    mpq_class scale = 1;
    mpq_class base = low_ < 0 ? mpq_class(1 / x) : x;
    for (int i = 0; i < std::abs(low_); ++i)
        scale *= base;
    return acc * scale;
}

mpz_class LaurentPoly::content() const
{
    mpz_class g = 0;
    for (const auto& c : coeffs_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const
{
    if (d.is_zero())
        throw DomainError("divide_exact: division by zero");
    LaurentPoly q(var_);
    if (is_zero())
        return q;
    // Work with ordinary polynomials a / b where b has a nonzero constant term.
    std::vector<mpz_class> rem = coeffs_;
    const auto& b = d.coeffs_;
    if (rem.size() < b.size())
        return std::nullopt;
    std::vector<mpz_class> quo(rem.size() - b.size() + 1, 0);
    for (std::size_t k = quo.size(); k-- > 0;) {
        mpz_class& top = rem[k + b.size() - 1];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t()))
            return std::nullopt;
        mpz_class f = top / b.back();
        quo[k] = f;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_submul(rem[k + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
    }
    for (const auto& c : rem)
        if (c != 0)
            return std::nullopt;
    q.low_ = low_ - d.low_;
    q.coeffs_ = std::move(quo);
    q.trim();
    return q;
}

namespace {

std::string power_text(const std::string& var, int e)
{
    if (e == 0)
        return "";
    if (e == 1)
        return var;
    return var + superscript(e);
}

std::string power_latex(const std::string& var, int e)
{
    if (e == 0)
        return "";
    if (e == 1)
        return var;
    return var + "^{" + std::to_string(e) + "}";
}

} // namespace

std::string LaurentPoly::to_text(bool compact) const
{
    if (is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpz_class& c = coeffs_[i];
        if (c == 0)
            continue;
        int e = low_ + static_cast<int>(i);
        mpz_class a = abs(c);
        if (first)
            s += c < 0 ? "−" : "";
        else if (compact)
            s += c < 0 ? "−" : "+";
        else
            s += c < 0 ? " − " : " + ";
        if (a != 1 || e == 0)
            s += a.get_str();
        s += power_text(var_, e);
        first = false;
    }
    return s;
}

std::string LaurentPoly::to_latex() const
{
    if (is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpz_class& c = coeffs_[i];
        if (c == 0)
            continue;
        int e = low_ + static_cast<int>(i);
        mpz_class a = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (a != 1 || e == 0)
            s += a.get_str();
        s += power_latex(var_, e);
        first = false;
    }
    return s;
}

nlohmann::json LaurentPoly::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            terms.push_back({low_ + static_cast<int>(i), coeffs_[i].get_str()});
    return {{"var", var_}, {"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j)
{
    std::map<int, mpz_class> t;
    for (const auto& term : j.at("terms"))
        t[term.at(0).get<int>()] += mpz_class(term.at(1).get<std::string>());
    return from_terms(t, j.value("var", std::string("q")));
}

} // namespace formedflags
