#pragma once

#include "formedflags/report.hpp"

namespace formedflags {

// Every w in S_n factors uniquely as u v with v in W_I and u minimal in
// w W_I, and l(w) = l(u) + l(v); W_I is built by closure, not by formula.
VerificationReport verify_parabolic_transversal(int max_n = 5);

// D_L(w w0) is the complement of D_L(w).
VerificationReport verify_descent_complement(int max_n = 6);

// Parity inversions against the weighted right parabolic length.
VerificationReport verify_parity_inversion_lengths(int max_n = 7);

// sum_{J >= I} F_J(X^{-1}) = (-1)^{|S|} sum_{J >= S \ I} F_J(X) on the
// boolean lattice of S = [k].
VerificationReport verify_F_interval_inversion(int max_k = 6);

// sum_j [i; {i-j, ..., i-1}] (X-1)^j X^{C(i-j,2)} = X^{C(i+1,2)}
VerificationReport verify_chain_power_identity(int max_i = 10);
// sum_{I subset [i]} (-1)^{i-|I|} [i+1; I] = X^{C(i+1,2)}
VerificationReport verify_alternating_multinomial_identity(int max_i = 8);

// sum_k C(N-k, M) C(M, k) (-1)^k = 1 for 1 <= M <= N.
VerificationReport verify_binomial_convolution(int max_N = 12);

} // namespace formedflags
