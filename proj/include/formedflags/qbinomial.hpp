#pragma once

#include <vector>

#include "formedflags/laurent_poly.hpp"

namespace formedflags {

// [a choose b]_X
LaurentPoly gaussian_binomial(int a, int b, const std::string& var = "X");

// [n choose J]_X for J a subset of {0, ..., n-1}: the product of
// [j_{s+1} choose j_s] over the chain 0 <= j_1 < ... < j_r < n.
LaurentPoly gaussian_multinomial(int n, const std::vector<int>& J, const std::string& var = "X");

// Degree in X of [n choose J]_X.
int gaussian_multinomial_degree(int n, const std::vector<int>& J);

} // namespace formedflags
