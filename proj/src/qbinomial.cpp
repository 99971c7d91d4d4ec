#include "formedflags/qbinomial.hpp"

#include <algorithm>
#include <string>

#include "formedflags/errors.hpp"

namespace formedflags {

LaurentPoly gaussian_binomial(int a, int b, const std::string& var)
{
    if (b < 0 || a < b)
        throw DomainError("gaussian_binomial: need 0 <= b <= a, got (" + std::to_string(a) + "," + std::to_string(b) + ")");
    b = std::min(b, a - b);
    LaurentPoly r = LaurentPoly::constant(1, var);
    // After step i the running value is [a choose i+1].
    for (int i = 0; i < b; ++i) {
        r *= LaurentPoly::one_minus_power(a - i, var);
        auto q = r.divide_exact(LaurentPoly::one_minus_power(i + 1, var));
        if (!q)
            throw ConsistencyError("gaussian_binomial: inexact division");
        r = std::move(*q);
    }
    return r;
}

namespace {

std::vector<int> checked_chain(int n, const std::vector<int>& J)
{
    std::vector<int> c = J;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (int j : c)
        if (j < 0 || j > n - 1)
            throw DomainError("gaussian_multinomial: element " + std::to_string(j) + " outside [0," + std::to_string(n - 1) + "]");
    return c;
}

} // namespace

LaurentPoly gaussian_multinomial(int n, const std::vector<int>& J, const std::string& var)
{
    if (n < 0)
        throw DomainError("gaussian_multinomial: negative n");
    std::vector<int> c = checked_chain(n, J);
    LaurentPoly r = LaurentPoly::constant(1, var);
    int upper = n;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        r *= gaussian_binomial(upper, *it, var);
        upper = *it;
    }
    return r;
}

int gaussian_multinomial_degree(int n, const std::vector<int>& J)
{
    std::vector<int> c = checked_chain(n, J);
    int d = 0;
    int upper = n;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d += *it * (upper - *it);
        upper = *it;
    }
    return d;
}

} // namespace formedflags
