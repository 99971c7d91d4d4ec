#include "formedflags/group_orders.hpp"

#include "formedflags/errors.hpp"

namespace formedflags {

namespace {

LaurentPoly q_power(int e) { return LaurentPoly::monomial(1, e, "q"); }

// prod_{i in [k]} (q^{2i} - 1)
LaurentPoly even_chain(int k)
{
    LaurentPoly r = LaurentPoly::constant(1);
    for (int i = 1; i <= k; ++i)
        r *= q_power(2 * i) - LaurentPoly(1);
    return r;
}

} // namespace

LaurentPoly symplectic_order(int n)
{
    if (n < 0 || n % 2)
        throw DomainError("symplectic_order: n must be even");
    LaurentPoly r = q_power(n * (n + 1) / 2);
    for (int i = 1; i <= n / 2; ++i)
        r *= LaurentPoly::one_minus_power(-2 * i, "q");
    return r;
}

LaurentPoly unitary_order(int n)
{
    if (n < 0)
        throw DomainError("unitary_order: negative n");
    LaurentPoly r = q_power(n * n);
    for (int i = 1; i <= n; ++i)
        r *= LaurentPoly(1) - LaurentPoly::monomial(i % 2 ? -1 : 1, -i, "q");
    return r;
}

LaurentPoly orthogonal_p(int n, int epsilon)
{
    if (n < 1)
        throw DomainError("orthogonal_p: n must be positive");
    const int m = n / 2;
    if (n % 2)
        return q_power(m * m).scaled(2) * even_chain(m);
    if (epsilon != 1 && epsilon != -1)
        throw DomainError("orthogonal_p: epsilon must be +1 or -1");
    return q_power(m * m - m).scaled(2) * (q_power(m) - LaurentPoly(epsilon)) * even_chain(m - 1);
}

LaurentPoly orthogonal_p_sharp(int n)
{
    if (n % 2)
        return orthogonal_p(n, 0);
    const int m = n / 2;
    return (q_power(m) + LaurentPoly(1)) * orthogonal_p(n, 1);
}

} // namespace formedflags
