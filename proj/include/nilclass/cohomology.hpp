#pragma once

#include <vector>

#include "nilclass/cdga.hpp"

namespace nilclass {

/// Matrix of d: Lambda^k -> Lambda^(k+1) on the lex-ordered bases.
Matrix cochain_matrix(const CdgaStructure& cdga, int k);

/// Betti numbers b_0..b_kmax of the Chevalley-Eilenberg complex, exact:
/// b_k = dim ker(d_k) - rank(d_{k-1}), b_0 = 1.
std::vector<long long> betti(const CdgaStructure& cdga, int kmax);

/// Dimension of the center {X : [X, Y] = 0 for all Y}, via the kernel of the
/// stacked adjoint matrices.
int center_dim(const LieStructure& lie);

}  // namespace nilclass
