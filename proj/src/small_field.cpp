#include "formedflags/small_field.hpp"

#include "formedflags/errors.hpp"

namespace formedflags {

SmallField::SmallField(int order) : order_(order)
{
    switch (order) {
    case 2: case 3: case 5: case 7: p_ = order; break;
    case 4: p_ = 2; break;
    case 9: p_ = 3; break;
    default: throw DomainError("SmallField: unsupported order " + std::to_string(order));
    }
    const int p = p_;
    if (order == p) {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                add_[a * kMaxOrder + b] = static_cast<Elem>((a + b) % p);
                mul_[a * kMaxOrder + b] = static_cast<Elem>((a * b) % p);
            }
    } else {
        // x^2 = s1 x + s0: x + 1 over F_2, -1 over F_3
        const int s1 = p == 2 ? 1 : 0;
        const int s0 = p == 2 ? 1 : 2;
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b) {
                const int a0 = a % p, a1 = a / p, b0 = b % p, b1 = b / p;
                add_[a * kMaxOrder + b] = static_cast<Elem>((a0 + b0) % p + p * ((a1 + b1) % p));
                const int r0 = a0 * b0 + a1 * b1 * s0;
                const int r1 = a0 * b1 + a1 * b0 + a1 * b1 * s1;
                mul_[a * kMaxOrder + b] = static_cast<Elem>(r0 % p + p * (r1 % p));
            }
    }
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            if (add(static_cast<Elem>(a), static_cast<Elem>(b)) == 0)
                neg_[a] = static_cast<Elem>(b);
            if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 1)
                inv_[a] = static_cast<Elem>(b);
        }
        Elem f = 1;
        for (int k = 0; k < p; ++k)
            f = mul(f, static_cast<Elem>(a));
        frob_[a] = f;
    }
    check_axioms();
}

SmallField::Elem SmallField::inv(Elem a) const
{
    if (a == 0)
        throw DomainError("SmallField: inverse of zero");
    return inv_[a];
}

SmallField::Elem SmallField::conj(Elem a) const
{
    if (!has_involution())
        throw DomainError("SmallField: no involution on F_" + std::to_string(order_));
    return frob_[a];
}

std::string SmallField::to_string(Elem a) const
{
    if (order_ == p_)
        return std::to_string(a);
    const int a0 = a % p_, a1 = a / p_;
    if (a1 == 0)
        return std::to_string(a0);
    std::string x = a1 == 1 ? "x" : std::to_string(a1) + "x";
    return a0 ? std::to_string(a0) + "+" + x : x;
}

void SmallField::check_axioms() const
{
    const int q = order_;
    auto fail = [&](const char* what) {
        throw ConsistencyError(std::string("SmallField F_") + std::to_string(q) + ": " + what);
    };
    for (int a = 0; a < q; ++a) {
        const Elem x = static_cast<Elem>(a);
        if (add(x, 0) != x || mul(x, 1) != x)
            fail("identity");
        if (add(x, neg(x)) != 0)
            fail("additive inverse");
        if (a && mul(x, inv_[a]) != 1)
            fail("multiplicative inverse");
        for (int b = 0; b < q; ++b) {
            const Elem y = static_cast<Elem>(b);
            if (add(x, y) != add(y, x) || mul(x, y) != mul(y, x))
                fail("commutativity");
            if (frobenius(add(x, y)) != add(frobenius(x), frobenius(y)) ||
                frobenius(mul(x, y)) != mul(frobenius(x), frobenius(y)))
                fail("frobenius");
            for (int c = 0; c < q; ++c) {
                const Elem z = static_cast<Elem>(c);
                if (add(add(x, y), z) != add(x, add(y, z)) || mul(mul(x, y), z) != mul(x, mul(y, z)))
                    fail("associativity");
                if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z)))
                    fail("distributivity");
            }
        }
    }
    if (has_involution()) {
        int fixed = 0;
        for (int a = 0; a < q; ++a) {
            const Elem x = static_cast<Elem>(a);
            if (conj(conj(x)) != x)
                fail("involution order");
            fixed += conj(x) == x;
        }
        if (fixed != p_)
            fail("involution fixed field");
    }
}

} // namespace formedflags
