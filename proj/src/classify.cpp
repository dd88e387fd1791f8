#include "nilclass/classify.hpp"

#include <algorithm>

#include "nilclass/cohomology.hpp"

namespace nilclass {

const std::vector<ClassLabel>& all_labels() {
    static const std::vector<ClassLabel> labels = [] {
        std::vector<ClassLabel> l{"8.0.1"};
        for (int i = 1; i <= 3; ++i) l.push_back("7.1." + std::to_string(i));
        for (int i = 1; i <= 11; ++i) l.push_back("6.2." + std::to_string(i));
        for (int i = 1; i <= 17; ++i) l.push_back("5.3." + std::to_string(i));
        for (int i = 1; i <= 3; ++i) l.push_back("4.4." + std::to_string(i));
        return l;
    }();
    return labels;
}

namespace {

ClassLabel classify_71(const BivectorSubspace& s, InvariantTrail& t) {
    const int r = bivector_rank(s.basis().front());
    t.bivector_rank = r;
    switch (r) {
        case 2: return "7.1.1";
        case 4: return "7.1.2";
        case 6: return "7.1.3";
    }
    throw taxonomy_error("violates paper taxonomy: (7,1) bivector of rank " + std::to_string(r));
}

ClassLabel classify_62(const BivectorSubspace& s, InvariantTrail& t) {
    const LinePosition62 lp = line_position_62(s);
    const SupportDim sd = support_dim(s);
    t.in_cubic = lp.in_cubic;
    t.g_count = to_string(lp.g_count);
    t.g_scheme_gcd_degree = lp.g_scheme_gcd_degree;
    t.support = sd.s;
    t.delta = sd.delta;

    if (lp.in_cubic) {
        switch (lp.g_count) {
            case GCount::line:
                if (sd.delta == 2) return "6.2.1";
                break;
            case GCount::two:
                if (sd.delta == 5) return "6.2.2";
                break;
            case GCount::one:
                if (sd.delta == 5) return "6.2.3";
                if (sd.delta == 9) return "6.2.4";
                break;
            case GCount::zero:
                if (sd.delta == 9) return "6.2.5";
                if (sd.delta == 14) return "6.2.6";
                break;
        }
        throw taxonomy_error("violates paper taxonomy: (6,2) line in C with |l cap G| = " +
                             to_string(lp.g_count) + ", delta = " + std::to_string(sd.delta));
    }

    t.cubic_pattern = lp.cubic_pattern->to_string();
    const std::string& pat = *t.cubic_pattern;
    if (lp.g_count == GCount::zero) {
        if (pat == "(1,1,1)") return "6.2.7";
        if (pat == "(2,1)") return "6.2.8";
        if (pat == "(3)") return "6.2.9";
    } else if (lp.g_count == GCount::one) {
        if (pat == "(2,1)") return "6.2.10";
        if (pat == "(3)") return "6.2.11";
    }
    throw taxonomy_error("violates paper taxonomy: (6,2) pattern " + pat + " with |l cap G| = " +
                         to_string(lp.g_count));
}

ClassLabel classify_53(const BivectorSubspace& s, InvariantTrail& t) {
    const RestrictedForms rf = restrict_forms(s);
    const bool in_g = std::all_of(rf.quadrics.begin(), rf.quadrics.end(),
                                  [](const QuadraticForm& q) { return q.is_zero(); });
    const SupportDim sd = support_dim(s);
    t.plane_in_grassmannian = in_g;
    t.support = sd.s;
    t.delta = sd.delta;

    if (in_g) {
        if (sd.s == 3) return "5.3.1";
        if (sd.s == 4) return "5.3.2";
        throw taxonomy_error("violates paper taxonomy: plane inside G with support " +
                             std::to_string(sd.s));
    }
    if (sd.s <= 4) {
        const int r = conic_type(s);
        t.conic_rank = r;
        switch (r) {
            case 3: return "5.3.3";
            case 2: return "5.3.4";
            case 1: return "5.3.5";
        }
        throw taxonomy_error("violates paper taxonomy: conic of rank " + std::to_string(r));
    }

    const HilbertProfile profile = hilbert_profile(rf.quadrics);
    t.hilbert = profile.h;
    t.scheme_dimension = profile.dimension;
    if (profile.dimension == -1) return "5.3.17";

    if (profile.dimension == 1) {
        const TauInvariant tau = tau_invariant(s, rf.quadrics);
        t.tau_dim = tau.image_dim;
        if (tau.image_dim == 2) t.tau_form_class = to_string(tau.form_class);
        if (profile.tail_constant == 2) {
            if (tau.image_dim == 2) return "5.3.6";
            if (tau.image_dim == 1) return "5.3.7";
        } else if (profile.tail_constant == 1) {
            if (tau.form_class == TauFormClass::isotropic) return "5.3.8";
            if (tau.form_class == TauFormClass::nondegenerate) return "5.3.9";
        }
        throw taxonomy_error("violates paper taxonomy: (5,3) dim-1 scheme with tail n+" +
                             std::to_string(profile.tail_constant));
    }

    const PointData pd = zero_dim_points(rf.quadrics, profile);
    t.scheme_degree = pd.degree;
    t.distinct_points = pd.distinct_points;
    if (pd.degree == 3 && pd.distinct_points == 3) return "5.3.10";
    if (pd.degree == 3 && pd.distinct_points == 2) return "5.3.11";
    if (pd.degree == 2 && pd.distinct_points == 2) return "5.3.12";
    if (pd.degree == 3 && pd.distinct_points == 1) {
        t.cotangent_dim = pd.cotangent_dim;
        if (*pd.cotangent_dim == 2) return "5.3.13";
        if (*pd.cotangent_dim == 1) return "5.3.14";
        throw taxonomy_error("violates paper taxonomy: triple point with cotangent dim " +
                             std::to_string(*pd.cotangent_dim));
    }
    if (pd.degree == 2 && pd.distinct_points == 1) return "5.3.15";
    if (pd.degree == 1 && pd.distinct_points == 1) return "5.3.16";
    throw taxonomy_error("violates paper taxonomy: (5,3) scheme of degree " +
                         std::to_string(pd.degree) + " with " +
                         std::to_string(pd.distinct_points) + " points");
}

ClassLabel classify_44(const BivectorSubspace& s, InvariantTrail& t) {
    const int r = quadric_rank_44(s);
    t.quadric_rank = r;
    switch (r) {
        case 4: return "4.4.1";
        case 3: return "4.4.2";
        case 2: return "4.4.3";
    }
    throw taxonomy_error("violates paper taxonomy: restricted quadric of rank " +
                         std::to_string(r));
}

}  // namespace

Report classify(const CdgaStructure& cdga, const ClassifyOptions& opts) {
    if (cdga.dim() != 8) throw validation_error("unsupported dimension: classification needs dim 8");
    cdga.validate();
    const FiltrationReport fr = filtration(cdga);
    if (fr.length > 2 || fr.length < 0)
        throw validation_error("not 2-step: filtration length " +
                               (fr.length < 0 ? std::string("does not terminate")
                                              : std::to_string(fr.length)));

    Report report;
    report.f0 = fr.f0;
    report.f1 = fr.f1;

    const BivectorSubspace& s = *fr.imd;
    switch (fr.f0) {
        case 8: report.label = "8.0.1"; break;
        case 7: report.label = classify_71(s, report.invariants); break;
        case 6: report.label = classify_62(s, report.invariants); break;
        case 5: report.label = classify_53(s, report.invariants); break;
        case 4: report.label = classify_44(s, report.invariants); break;
        default:
            throw taxonomy_error("violates paper taxonomy: filtration type (" +
                                 std::to_string(fr.f0) + "," + std::to_string(fr.f1) + ")");
    }

    report.center_dim = center_dim(undualize(cdga));
    if (opts.with_betti) {
        const auto b = betti(cdga, 4);
        report.betti.assign(b.begin() + 1, b.end());
    }
    return report;
}

Report classify(const LieStructure& lie, const ClassifyOptions& opts) {
    return classify(dualize(lie), opts);
}

std::vector<BatchItem> classify_batch(const std::vector<CdgaStructure>& inputs,
                                      const ClassifyOptions& opts) {
    std::vector<BatchItem> out;
    out.reserve(inputs.size());
    for (const auto& c : inputs) {
        BatchItem item;
        try {
            item.report = classify(c, opts);
        } catch (const std::exception& e) {
            item.error = e.what();
        }
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace nilclass
