#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "nilclass/classify.hpp"
#include "nilclass/models.hpp"

namespace nilclass {

// Report and input schemas promise stable field ordering.
using json = nlohmann::ordered_json;

/// Parses "lie-v1" or "cdga-v1" input. Unlisted coefficients are zero,
/// indices are 1-based and require i < j.
struct ParsedInput {
    std::variant<LieStructure, CdgaStructure> value;

    CdgaStructure as_cdga() const;
    bool is_cdga() const { return std::holds_alternative<CdgaStructure>(value); }
};
ParsedInput parse_structure(const json& j);
ParsedInput parse_structure_text(const std::string& text);

json lie_to_json(const LieStructure& lie);
json cdga_to_json(const CdgaStructure& cdga);
json multivector_to_json(const Multivector& v);
json report_to_json(const Report& report);
json verify_to_json(const VerifyReport& report);

/// Human-readable row mirroring the master table.
std::string model_to_text(const ModelEntry& entry);

}  // namespace nilclass
