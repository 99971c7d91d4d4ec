#include "formedflags/igusa_function.hpp"

#include <algorithm>
#include <bit>

#include "formedflags/errors.hpp"

namespace formedflags {

namespace {

std::size_t full_size(int n) { return std::size_t{1} << n; }

bool odd_size(std::uint32_t m) { return std::popcount(m) % 2 != 0; }

} // namespace

IgusaFunction::IgusaFunction(int n_vars, std::string base_var)
    : n_vars_(n_vars), base_var_(std::move(base_var))
{
    if (n_vars < 0 || n_vars > 20)
        throw DomainError("IgusaFunction: unsupported number of variables");
    coeffs_.assign(full_size(n_vars), LaurentPoly(base_var_));
}

IgusaFunction IgusaFunction::from_F_coeffs(int n_vars, const std::vector<LaurentPoly>& F, std::string base_var)
{
    IgusaFunction f(n_vars, std::move(base_var));
    if (F.size() != full_size(n_vars))
        throw DomainError("from_F_coeffs: expected one coefficient per subset");
    // F_J = prod_{j in J} (e_j - 1) = sum_{K subset J} (-1)^{|J - K|} e_K
    f.coeffs_ = F;
    for (int b = 0; b < n_vars; ++b) {
        std::uint32_t bit = 1u << b;
        for (std::uint32_t K = 0; K < full_size(n_vars); ++K)
            if (!(K & bit))
                f.coeffs_[K] -= f.coeffs_[K | bit];
    }
    return f;
}

std::vector<LaurentPoly> IgusaFunction::to_F_coeffs() const
{
    // e_K = sum_{J subset K} F_J
    std::vector<LaurentPoly> F = coeffs_;
    for (int b = 0; b < n_vars_; ++b) {
        std::uint32_t bit = 1u << b;
        for (std::uint32_t J = 0; J < full_size(n_vars_); ++J)
            if (!(J & bit))
                F[J] += F[J | bit];
    }
    return F;
}

IgusaFunction IgusaFunction::invert_vars() const
{
    // e_K(X^{-1}) = prod_{k in K} (1 - e_k)
    IgusaFunction r = *this;
    for (int b = 0; b < n_vars_; ++b) {
        std::uint32_t bit = 1u << b;
        for (std::uint32_t K = 0; K < full_size(n_vars_); ++K)
            if (!(K & bit))
                r.coeffs_[K] += r.coeffs_[K | bit];
    }
    for (std::uint32_t K = 0; K < full_size(n_vars_); ++K)
        if (odd_size(K))
            r.coeffs_[K] = -r.coeffs_[K];
    return r;
}

IgusaFunction IgusaFunction::invert_base() const
{
    IgusaFunction r = *this;
    for (auto& c : r.coeffs_)
        c = c.invert_var();
    return r;
}

IgusaFunction IgusaFunction::reverse_vars() const
{
    IgusaFunction r(n_vars_, base_var_);
    for (std::uint32_t K = 0; K < full_size(n_vars_); ++K)
        r.coeffs_[Subset(K).reflect(n_vars_ + 1).bits()] = coeffs_[K];
    return r;
}

IgusaFunction IgusaFunction::scaled(const LaurentPoly& c) const
{
    IgusaFunction r = *this;
    for (auto& x : r.coeffs_)
        x = x * c;
    return r;
}

IgusaFunction& IgusaFunction::operator+=(const IgusaFunction& o)
{
    if (o.n_vars_ != n_vars_)
        throw DomainError("IgusaFunction: variable count mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

Numerator IgusaFunction::numerator(Subset* denominator_support) const
{
    // Over the full denominator: N_T = (-1)^{|T|} sum_{K disjoint from T} c_K.
    const std::uint32_t all = static_cast<std::uint32_t>(full_size(n_vars_) - 1);
    std::vector<LaurentPoly> below = coeffs_;
    for (int b = 0; b < n_vars_; ++b) {
        std::uint32_t bit = 1u << b;
        for (std::uint32_t U = 0; U <= all; ++U)
            if (U & bit)
                below[U] += below[U ^ bit];
    }
    Numerator N{n_vars_, std::vector<LaurentPoly>(full_size(n_vars_), LaurentPoly(base_var_))};
    for (std::uint32_t T = 0; T <= all; ++T)
        N.coeffs[T] = odd_size(T) ? -below[all ^ T] : below[all ^ T];

    Subset D = Subset::full(n_vars_);
    for (int j = 1; j <= n_vars_; ++j) {
        std::uint32_t bit = 1u << (j - 1);
        bool divisible = true;
        for (std::uint32_t T = 0; T <= all && divisible; ++T)
            if (!(T & bit) && !(N.coeffs[T] + N.coeffs[T | bit]).is_zero())
                divisible = false;
        if (!divisible)
            continue;
        for (std::uint32_t T = 0; T <= all; ++T)
            if (T & bit)
                N.coeffs[T] = LaurentPoly(base_var_);
        D.erase(j);
    }
    if (denominator_support)
        *denominator_support = D;
    return N;
}

namespace {

std::vector<std::uint32_t> render_order(const Numerator& N)
{
    std::vector<std::uint32_t> order;
    for (std::uint32_t T = 0; T < N.coeffs.size(); ++T)
        if (!N.coeffs[T].is_zero())
            order.push_back(T);
    std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        if (std::popcount(a) != std::popcount(b))
            return std::popcount(a) < std::popcount(b);
        return lex_less(Subset(a), Subset(b));
    });
    return order;
}

struct Style {
    bool latex;
    std::string var_of(int i) const
    {
        return latex ? "X_{" + std::to_string(i) + "}" : "X" + subscript(i);
    }
    std::string poly(const LaurentPoly& p, bool compact) const { return latex ? p.to_latex() : p.to_text(compact); }
    std::string minus() const { return latex ? "-" : "−"; }
    std::string sep(bool negative) const
    {
        if (latex)
            return negative ? " - " : " + ";
        return negative ? " − " : " + ";
    }
    std::string paren(const std::string& s) const { return latex ? "\\left(" + s + "\\right)" : "(" + s + ")"; }
};

std::string monomial_text(const Style& st, std::uint32_t T)
{
    std::string s;
    for (int i : Subset(T).elements())
        s += (st.latex && !s.empty() ? " " : "") + st.var_of(i);
    return s;
}

std::string render_numerator(const Style& st, const Numerator& N, int* term_count)
{
    std::string out;
    bool first = true;
    int count = 0;
    for (std::uint32_t T : render_order(N)) {
        const LaurentPoly& c = N.coeffs[T];
        std::string mono = monomial_text(st, T);
        bool negative = false;
        std::string body;
        if (T == 0) {
            if (c.num_terms() == 1) {
                negative = c.leading_coeff() < 0;
                body = st.poly(negative ? -c : c, false);
            } else {
                body = st.poly(c, false);
                if (!first) {
                    negative = false;
                    body = st.paren(body);
                }
            }
            count += c.num_terms();
        } else if (c.num_terms() == 1) {
            negative = c.leading_coeff() < 0;
            LaurentPoly a = negative ? -c : c;
            body = a.is_one() ? mono : st.poly(a, false) + (st.latex ? " " : "") + mono;
            ++count;
        } else {
            negative = c.leading_coeff() < 0;
            body = st.paren(st.poly(negative ? -c : c, true)) + (st.latex ? " " : "") + mono;
            ++count;
        }
        if (first)
            out += (negative ? st.minus() : "") + body;
        else
            out += st.sep(negative) + body;
        first = false;
    }
    if (first)
        out = "0";
    if (term_count)
        *term_count = count;
    return out;
}

} // namespace

std::string IgusaFunction::to_text() const
{
    Subset D;
    Numerator N = numerator(&D);
    Style st{false};
    int terms = 0;
    std::string num = render_numerator(st, N, &terms);
    if (D.empty())
        return num;
    std::string den;
    for (int j : D.elements())
        den += "(1−" + st.var_of(j) + ")";
    if (D.size() > 1)
        den = "(" + den + ")";
    if (terms > 1)
        num = "(" + num + ")";
    return num + "/" + den;
}

std::string IgusaFunction::to_latex() const
{
    Subset D;
    Numerator N = numerator(&D);
    Style st{true};
    std::string num = render_numerator(st, N, nullptr);
    if (D.empty())
        return num;
    std::string den;
    for (int j : D.elements())
        den += "(1 - " + st.var_of(j) + ")";
    return "\\frac{" + num + "}{" + den + "}";
}

nlohmann::json IgusaFunction::to_json() const
{
    std::vector<std::uint32_t> ks;
    for (std::uint32_t K = 0; K < coeffs_.size(); ++K)
        if (!coeffs_[K].is_zero())
            ks.push_back(K);
    std::sort(ks.begin(), ks.end(), [](std::uint32_t a, std::uint32_t b) { return lex_less(Subset(a), Subset(b)); });
    nlohmann::json arr = nlohmann::json::array();
    for (std::uint32_t K : ks)
        arr.push_back({{"K", Subset(K).elements()}, {"poly", coeffs_[K].to_json()}});
    return {{"n_vars", n_vars_}, {"basis", "e"}, {"coeffs", arr}};
}

} // namespace formedflags
