#include "nilclass/json_io.hpp"

#include <sstream>

namespace nilclass {

CdgaStructure ParsedInput::as_cdga() const {
    if (const auto* c = std::get_if<CdgaStructure>(&value)) return *c;
    return dualize(std::get<LieStructure>(value));
}

namespace {

int parse_dim(const json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw validation_error("input needs an integer \"dim\"");
    const int dim = j["dim"].get<int>();
    if (dim < 1 || dim > 8) throw validation_error("dim must be in 1..8");
    return dim;
}

std::pair<int, int> parse_pair(const json& term, int dim) {
    if (!term.contains("i") || !term.contains("j"))
        throw validation_error("coefficient entries need \"i\" and \"j\"");
    const int i = term["i"].get<int>(), j = term["j"].get<int>();
    if (i < 1 || j < 1 || i > dim || j > dim) throw validation_error("index out of range");
    if (i >= j) throw validation_error("indices must satisfy i < j");
    return {i, j};
}

Rational parse_coeff(const json& term) {
    if (!term.contains("c")) throw validation_error("coefficient entries need \"c\"");
    if (term["c"].is_number_integer()) return Rational(term["c"].get<long long>());
    if (term["c"].is_string()) return rational_from_string(term["c"].get<std::string>());
    throw validation_error("coefficient \"c\" must be a string like \"p/q\" or an integer");
}

}  // namespace

ParsedInput parse_structure(const json& j) {
    if (!j.is_object() || !j.contains("format") || !j["format"].is_string())
        throw validation_error("input needs a \"format\" field (lie-v1 or cdga-v1)");
    const std::string format = j["format"].get<std::string>();
    const int dim = parse_dim(j);

    if (format == "lie-v1") {
        std::vector<Multivector> comps(dim, Multivector(dim, 2));
        if (j.contains("brackets")) {
            if (!j["brackets"].is_array()) throw validation_error("\"brackets\" must be an array");
            for (const auto& term : j["brackets"]) {
                const auto [i, jj] = parse_pair(term, dim);
                if (!term.contains("k")) throw validation_error("bracket entries need \"k\"");
                const int k = term["k"].get<int>();
                if (k < 1 || k > dim) throw validation_error("bracket target out of range");
                comps[k - 1].add_term({i, jj}, parse_coeff(term));
            }
        }
        return ParsedInput{LieStructure(dim, std::move(comps))};
    }
    if (format == "cdga-v1") {
        std::vector<Multivector> dx(dim, Multivector(dim, 2));
        if (j.contains("differentials")) {
            if (!j["differentials"].is_object())
                throw validation_error("\"differentials\" must map generator indices to terms");
            for (const auto& [key, terms] : j["differentials"].items()) {
                int k = 0;
                try {
                    k = std::stoi(key);
                } catch (const std::exception&) {
                    throw validation_error("differential key is not an index: " + key);
                }
                if (k < 1 || k > dim) throw validation_error("differential index out of range");
                for (const auto& term : terms) {
                    const auto [i, jj] = parse_pair(term, dim);
                    dx[k - 1].add_term({i, jj}, parse_coeff(term));
                }
            }
        }
        return ParsedInput{CdgaStructure(dim, std::move(dx))};
    }
    throw validation_error("unknown format: " + format);
}

ParsedInput parse_structure_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw validation_error(std::string("malformed JSON: ") + e.what());
    }
    return parse_structure(j);
}

json lie_to_json(const LieStructure& lie) {
    json out;
    out["format"] = "lie-v1";
    out["dim"] = lie.dim();
    json brackets = json::array();
    for (int k = 1; k <= lie.dim(); ++k)
        for (const auto& [mask, c] : lie.component(k).terms()) {
            const auto idx = indices_from_mask(mask);
            brackets.push_back(
                {{"i", idx[0]}, {"j", idx[1]}, {"k", k}, {"c", rational_to_string(c)}});
        }
    out["brackets"] = std::move(brackets);
    return out;
}

json cdga_to_json(const CdgaStructure& cdga) {
    json out;
    out["format"] = "cdga-v1";
    out["dim"] = cdga.dim();
    json diffs = json::object();
    for (int k = 1; k <= cdga.dim(); ++k) {
        if (cdga.dx(k).is_zero()) continue;
        json terms = json::array();
        for (const auto& [mask, c] : cdga.dx(k).terms()) {
            const auto idx = indices_from_mask(mask);
            terms.push_back({{"i", idx[0]}, {"j", idx[1]}, {"c", rational_to_string(c)}});
        }
        diffs[std::to_string(k)] = std::move(terms);
    }
    out["differentials"] = std::move(diffs);
    return out;
}

json multivector_to_json(const Multivector& v) {
    json out = json::array();
    for (const auto& [mask, c] : v.terms())
        out.push_back({{"indices", indices_from_mask(mask)}, {"c", rational_to_string(c)}});
    return out;
}

json report_to_json(const Report& report) {
    json inv = json::object();
    const InvariantTrail& t = report.invariants;
    const auto put = [&inv](const char* name, const auto& opt) {
        if (opt) inv[name] = *opt;
    };
    put("bivector_rank", t.bivector_rank);
    put("in_cubic", t.in_cubic);
    put("g_count", t.g_count);
    put("g_scheme_gcd_degree", t.g_scheme_gcd_degree);
    put("cubic_pattern", t.cubic_pattern);
    put("support", t.support);
    put("delta", t.delta);
    put("plane_in_grassmannian", t.plane_in_grassmannian);
    put("conic_rank", t.conic_rank);
    put("hilbert", t.hilbert);
    put("scheme_dimension", t.scheme_dimension);
    put("scheme_degree", t.scheme_degree);
    put("distinct_points", t.distinct_points);
    put("cotangent_dim", t.cotangent_dim);
    put("tau_dim", t.tau_dim);
    put("tau_form_class", t.tau_form_class);
    put("quadric_rank", t.quadric_rank);

    json out;
    out["label"] = report.label;
    out["type"] = {report.f0, report.f1};
    out["invariants"] = std::move(inv);
    out["center_dim"] = report.center_dim;
    out["betti"] = report.betti;
    out["warnings"] = report.warnings;
    return out;
}

json verify_to_json(const VerifyReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries)
        entries.push_back({{"label", e.label}, {"ok", e.ok}, {"failures", e.failures}});
    return json{{"ok", report.ok}, {"entries", std::move(entries)}, {"warnings", report.warnings}};
}

namespace {

std::string differential_to_text(const Multivector& dx) {
    if (dx.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : dx.terms()) {
        const auto idx = indices_from_mask(mask);
        std::string coeff = rational_to_string(c);
        if (coeff == "1") coeff.clear();
        if (coeff == "-1") coeff = "-";
        if (!first && !coeff.starts_with('-')) os << "+";
        os << coeff << "x" << idx[0] << "x" << idx[1];
        first = false;
    }
    return os.str();
}

}  // namespace

std::string model_to_text(const ModelEntry& entry) {
    std::ostringstream os;
    os << entry.label << " | ";
    for (int k = 5; k <= 8; ++k) os << "dx" << k << " = " << differential_to_text(entry.cdga.dx(k)) << " | ";
    os << "center " << entry.center_dim << " | b2..b4 " << entry.b2 << "/" << entry.b3 << "/"
       << entry.b4 << " | " << (entry.irreducible ? "irreducible" : "reducible");
    if (!entry.external_label.empty()) os << " | " << entry.external_label;
    return os.str();
}

}  // namespace nilclass
