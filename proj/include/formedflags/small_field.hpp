#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace formedflags {

// Finite field of order 2, 3, 4, 5, 7 or 9 given by lookup tables.
// Elements are 0..order-1; for orders 4 and 9 the element a + b x is
// encoded as a + p b, with F_4 = F_2[x]/(x^2+x+1), F_9 = F_3[x]/(x^2+1).
class SmallField {
public:
    using Elem = std::uint8_t;
    static constexpr int kMaxOrder = 9;

    explicit SmallField(int order);

    int order() const { return order_; }
    int characteristic() const { return p_; }

    Elem add(Elem a, Elem b) const { return add_[a * kMaxOrder + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * kMaxOrder + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem inv(Elem a) const; // DomainError at 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem frobenius(Elem a) const { return frob_[a]; }

    // x -> x^r with r^2 = order; only for orders 4 and 9.
    bool has_involution() const { return order_ == 4 || order_ == 9; }
    Elem conj(Elem a) const;
    // order of the fixed field of conj, or the order itself
    int base_order() const { return has_involution() ? p_ : order_; }

    std::string to_string(Elem a) const;

private:
    void check_axioms() const;

    int order_;
    int p_;
    std::array<Elem, kMaxOrder * kMaxOrder> add_{};
    std::array<Elem, kMaxOrder * kMaxOrder> mul_{};
    std::array<Elem, kMaxOrder> neg_{};
    std::array<Elem, kMaxOrder> inv_{};
    std::array<Elem, kMaxOrder> frob_{};
};

} // namespace formedflags
