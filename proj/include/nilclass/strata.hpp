#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilclass/binary_form.hpp"
#include "nilclass/bivector_subspace.hpp"
#include "nilclass/quadratic_form.hpp"

namespace nilclass {

/// Total support size s = dim sum_i U_{phi_i} (basis-independent) and
/// delta = C(s,2) - 1, the dimension of the smallest special subspace
/// P(Lambda^2 U) containing the bivector space.
struct SupportDim {
    int s;
    int delta;
};
SupportDim support_dim(const BivectorSubspace& s);

/// Pullbacks of forms on Lambda^2 W along phi(t) = sum t_i phi_i: one
/// quadratic form in m = dim S parameters per Plucker quadric, plus the
/// restricted Pfaffian cubic when m = 2, n = 6.
struct RestrictedForms {
    int params;
    std::vector<QuadraticForm> quadrics;     // all C(n,4) pullbacks, in order
    std::optional<BinaryForm> cubic;         // only for params 2, ambient 6
};
RestrictedForms restrict_forms(const BivectorSubspace& s);

QuadraticForm restrict_quadric(const BivectorSubspace& s, const QuadraticForm& q);
BinaryForm restrict_pfaffian_cubic(const BivectorSubspace& s);

/// Relative position of the line P(S) with the Grassmannian G(1,5) and the
/// Pfaffian cubic C in P^14, for a 2-dimensional S over k^6.
enum class GCount { zero, one, two, line };
std::string to_string(GCount g);

struct LinePosition62 {
    bool in_cubic;
    std::optional<MultiplicityPattern> cubic_pattern;  // pattern of l cap C when not in C
    GCount g_count;
    int g_scheme_gcd_degree;  // degree of the gcd of the restricted quadrics; -1 when l is inside G
};
LinePosition62 line_position_62(const BivectorSubspace& s);

/// Rank of the single restricted Plucker form for a 3-dim S over dim-5 W with
/// support <= 4 (smooth conic / pair of lines / double line).
int conic_type(const BivectorSubspace& s);

/// Rank of the Klein quadric restricted to a 4-dim S over dim-4 W; always in
/// {2, 3, 4} by the quadric-restriction rank bound.
int quadric_rank_44(const BivectorSubspace& s);

/// The tau invariant of a 3-dim S over dim-5 W whose rank-2 locus contains a
/// projective line: dim of the image of phi -> iota(phi ^ phi_3) on the
/// rank-2 pencil, and the class of phi_3 restricted to that image.
enum class TauFormClass { isotropic, nondegenerate, not_applicable };
std::string to_string(TauFormClass c);

struct TauInvariant {
    int image_dim;            // 1 or 2
    TauFormClass form_class;  // defined only when image_dim == 2
};
TauInvariant tau_invariant(const BivectorSubspace& s,
                           const std::vector<QuadraticForm>& line_forms);

}  // namespace nilclass
