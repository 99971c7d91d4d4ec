#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "formedflags/subset.hpp"

namespace formedflags {

constexpr int kMaxDegree = 16;

// Element of S_n in one-line notation with the right action:
// image(i) = i^w and i^{vw} = (i^v)^w.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(const std::vector<int>& images);
    static Permutation identity(int n);
    static Permutation longest(int n);
    // s_i swaps i and i+1
    static Permutation simple(int n, int i);

    int n() const { return n_; }
    int image(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
    std::vector<int> images() const;
    const std::uint8_t* data() const { return img_.data(); }
    std::uint8_t* data() { return img_.data(); }

    // (v * w): first v, then w
    Permutation operator*(const Permutation& w) const;
    Permutation inverse() const;
    bool operator==(const Permutation& o) const { return n_ == o.n_ && img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }
    std::string to_string() const;

private:
    friend class PermutationStream;
    int n_ = 0;
    std::array<std::uint8_t, kMaxDegree> img_{};
};

enum class Side { left, right };

int length(const Permutation& w);
// D_L(w) = {i : i^w > (i+1)^w}
Subset left_descents(const Permutation& w);
Subset right_descents(const Permutation& w);
// Length of the minimal element of w W_I (left) or W_I w (right).
int parabolic_length(const Permutation& w, Subset I, Side side);

// Sparse real weights b_I on subsets of S = {s_1, ..., s_{n-1}}.
struct StatWeights {
    int n = 0;
    std::map<std::uint32_t, long> b;

    // b_I = (-1)^{|I|} 2^{|S|-|I|-1} for I != S; the term I = S is dropped
    // because the corresponding parabolic length vanishes.
    static StatWeights parity_weights(int n);
    // b_I = 1 for I = {} only, giving the Coxeter length
    static StatWeights coxeter_length(int n);
    // b' with b'_{I^{w0}} = b_I
    StatWeights conjugated_by_longest() const;
};

long weighted_length(const Permutation& w, const StatWeights& b, Side side);

// Number of inversions (i, j) with i and j of opposite parity.
int parity_inversions(const Permutation& w);
bool is_chessboard(const Permutation& w);
int sign_character(const Permutation& w);
// +1 iff w preserves parity; only defined on chessboard elements.
int tau_character(const Permutation& w);
// sigma, or sigma * tau when n is even and epsilon = -1
int chi_epsilon(const Permutation& w, int epsilon);

enum class Character { trivial, sign, tau, chi_plus, chi_minus };
int character_value(Character c, const Permutation& w);
std::string to_string(Character c);

} // namespace formedflags
