#pragma once

#include <string>
#include <vector>

#include "nilclass/cdga.hpp"
#include "nilclass/classify.hpp"

namespace nilclass {

/// One standard model: the dx_5..dx_8 columns of the master table, center
/// dimension, Betti numbers b_2..b_4, irreducibility, and the matching label
/// from the published complex classifications (irreducible algebras only).
struct ModelEntry {
    ClassLabel label;
    CdgaStructure cdga;
    int center_dim;
    long long b2, b3, b4;
    bool irreducible;
    std::string external_label;  // empty for reducible algebras
};

/// All 35 models, in label order.
const std::vector<ModelEntry>& all_models();

const ModelEntry& standard_model(const ClassLabel& label);

/// The model 6.2.8 row as printed in the master table duplicates 6.2.6; the
/// database stores the corrected generators x1x2+x3x4, x3x5+x4x6 instead.
/// This is the printed (uncorrected) variant, used by the self-check to
/// demonstrate the duplication.
CdgaStructure printed_628_variant();

struct VerifyEntry {
    ClassLabel label;
    bool ok;
    std::vector<std::string> failures;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    std::vector<std::string> warnings;
    bool ok;
};

/// Full self-check: every model validates, classifies to its own label,
/// reproduces the stored center/Betti data, satisfies Poincare duality, and
/// all 35 invariant signatures are pairwise distinct. Table discrepancies
/// in the source material surface as warnings, not failures.
VerifyReport verify_all();

}  // namespace nilclass
