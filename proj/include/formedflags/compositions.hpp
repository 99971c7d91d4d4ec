#pragma once

#include <vector>

#include "formedflags/report.hpp"
#include "formedflags/subset.hpp"

namespace formedflags {

struct Composition {
    std::vector<int> parts;
    int total() const;
    int size() const { return static_cast<int>(parts.size()); }
    bool operator==(const Composition&) const = default;
};

// N(I) = max([n]_0 \ I)
int compositions_N(Subset I, int n);

// Composition of N(I) read off from I inside [n]: the gaps between
// 0 < i_1 < i_2 < ... taken up to N(I).
Composition composition_of(Subset I, int n);

struct Bisection {
    Subset phi;  // subset of [floor(n/2)]
    Subset phi0; // partial sums of the halved parts, without 0 and the total
    int cut = 0; // sum of floor(x/2) over the parts
};

// Halve each part of the composition of I (round down) and read back a
// subset of [m], m = floor(n/2); the top [cut+1, m] is always included.
Bisection bisect(Subset I, int n);

// {J subset [n-1] : phi(J) = H}, in lexicographic order.
std::vector<Subset> fiber(Subset H, int n);

using Refinement = std::vector<int>;

// Tuples xi in [lambda]_0^kappa, weakly increasing with xi_kappa = lambda,
// such that y_{xi_{i-1}+1} + ... + y_{xi_i} <= x_i, where x = C(G, m) and
// y = C(H, m). When kappa = 0 the empty tuple counts iff lambda = 0.
std::vector<Refinement> refinement_enumerate(Subset G, Subset H, int m);
long refinement_count(Subset G, Subset H, int m);

// Maximal runs of consecutive integers in [n-1] \ I.
std::vector<std::pair<int, int>> complement_runs(Subset I, int n);

// For I subset J subset [n-1]: xi_i counts the runs of [n-1] \ J lying in
// the first i runs of [n-1] \ I.
Refinement induced_refinement(Subset I, Subset J, int n);

// For every I, every H and every refinement xi of phi(I) by H:
// (-1)^{n-1+|C(H)|} sum_{J in fiber(H), I subset J, xi(I,J) = xi} (-1)^{|J|} = 1.
VerificationReport verify_eq20(int n);

} // namespace formedflags
