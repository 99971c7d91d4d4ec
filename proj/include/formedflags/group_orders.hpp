#pragma once

#include "formedflags/laurent_poly.hpp"

namespace formedflags {

// |Sp_n(F_q)|, n even
LaurentPoly symplectic_order(int n);
// |U_n(F_{q^2})|
LaurentPoly unitary_order(int n);
// p_{2m+1} = 2 q^{m^2} prod_{i in [m]} (q^{2i} - 1) and
// p_{2m,eps} = 2 q^{m^2-m} (q^m - eps) prod_{i in [m-1]} (q^{2i} - 1);
// eps is ignored for odd n.
LaurentPoly orthogonal_p(int n, int epsilon);
// p_{2m+1} for odd n, (q^m + eps) p_{2m,eps} for even n
LaurentPoly orthogonal_p_sharp(int n);

} // namespace formedflags
