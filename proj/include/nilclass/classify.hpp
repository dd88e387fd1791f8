#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nilclass/cdga.hpp"
#include "nilclass/filtration.hpp"
#include "nilclass/hilbert.hpp"
#include "nilclass/strata.hpp"

namespace nilclass {

/// One of the 35 isomorphism-class labels, e.g. "6.2.9".
using ClassLabel = std::string;

const std::vector<ClassLabel>& all_labels();

/// Every quantity the decision tree consumed, by case. Fields are set only
/// when they took part in the decision.
struct InvariantTrail {
    std::optional<int> bivector_rank;  // (7,1)

    // (6,2)
    std::optional<bool> in_cubic;
    std::optional<std::string> g_count;
    std::optional<int> g_scheme_gcd_degree;
    std::optional<std::string> cubic_pattern;

    // (6,2) and (5,3)
    std::optional<int> support;
    std::optional<int> delta;

    // (5,3)
    std::optional<bool> plane_in_grassmannian;
    std::optional<int> conic_rank;
    std::optional<std::vector<int>> hilbert;
    std::optional<int> scheme_dimension;
    std::optional<int> scheme_degree;
    std::optional<int> distinct_points;
    std::optional<int> cotangent_dim;
    std::optional<int> tau_dim;
    std::optional<std::string> tau_form_class;

    // (4,4)
    std::optional<int> quadric_rank;
};

struct Report {
    ClassLabel label;
    int f0, f1;
    InvariantTrail invariants;
    int center_dim;
    std::vector<long long> betti;  // b_1..b_4
    std::vector<std::string> warnings;
};

struct ClassifyOptions {
    /// Betti numbers are the expensive part of a Report; invariance sweeps
    /// that only compare labels and geometric invariants can skip them.
    bool with_betti = true;
};

/// Locates a valid 8-dimensional 2-step structure in the classification.
/// Throws validation_error for dim != 8, invalid structures, or filtration
/// length > 2; taxonomy_error for invariant combinations the paper rules out.
Report classify(const CdgaStructure& cdga, const ClassifyOptions& opts = {});
Report classify(const LieStructure& lie, const ClassifyOptions& opts = {});

struct BatchItem {
    std::optional<Report> report;
    std::string error;  // set when classification failed
};
std::vector<BatchItem> classify_batch(const std::vector<CdgaStructure>& inputs,
                                      const ClassifyOptions& opts = {});

}  // namespace nilclass
