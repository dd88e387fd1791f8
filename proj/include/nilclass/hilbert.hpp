#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nilclass/quadratic_form.hpp"

namespace nilclass {

/// Graded dimensions h(n) = C(n+2,2) - dim I_n of k[x,y,z]/I for an ideal I
/// generated by ternary quadrics, with the dimension/degree read off the
/// stabilized tail (constant c: dim 0 of degree c; n + c: dim 1 of degree 1;
/// identically 0: empty). Stability must hold on the last three values,
/// otherwise the computation aborts.
struct HilbertProfile {
    std::vector<int> h;  // h[i] = h(i+1), i = 0..N-1
    int dimension;       // -1 empty, 0, or 1
    int degree;          // scheme degree (0 when empty)
    int tail_constant;   // c in the stabilized tail

    int value(int n) const { return h.at(n - 1); }
};

/// N defaults to 10 and can be raised with NILCLASS_HILBERT_N (>= 8).
int default_hilbert_n();

HilbertProfile hilbert_profile(const std::vector<QuadraticForm>& quadrics, int n_max);
HilbertProfile hilbert_profile(const std::vector<QuadraticForm>& quadrics);

/// Distinct-point data of a zero-dimensional intersection scheme, by the
/// Stickelberger method: distinct points = max distinct-eigenvalue count of
/// a * M_u + b * M_v over the fixed trial directions, on the Artinian algebra
/// obtained by dehomogenizing at a linear form avoiding the scheme.
struct PointData {
    int degree;
    int distinct_points;
    std::optional<std::array<Rational, 3>> point;  // the unique point, when distinct_points == 1
    std::optional<int> cotangent_dim;              // at the unique point
};

PointData zero_dim_points(const std::vector<QuadraticForm>& quadrics,
                          const HilbertProfile& profile);

}  // namespace nilclass
