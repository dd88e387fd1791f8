#pragma once

#include <optional>
#include <vector>

#include "nilclass/bivector_subspace.hpp"
#include "nilclass/cdga.hpp"

namespace nilclass {

/// Characteristic filtration W_0 = ker d, W_k = d^{-1}(Lambda^2 W_{k-1}) of a
/// valid CDGA. Length convention: 0 when d = 0 (W_0 = V), otherwise the
/// nilpotency step (2-step algebras have length 2); -1 when the filtration
/// never exhausts V (the dual algebra is not nilpotent).
struct FiltrationReport {
    std::vector<Vector> w0_basis;       // canonical RREF kernel basis
    int length = 0;
    int f0 = 0, f1 = 0;                 // f0 + f1 = dim
    std::vector<int> f1_generators;     // 1-based pivot generators; d is injective there
    std::optional<BivectorSubspace> imd;  // Im(d) in W_0 coordinates, when length <= 2
};

FiltrationReport filtration(const CdgaStructure& cdga);

}  // namespace nilclass
