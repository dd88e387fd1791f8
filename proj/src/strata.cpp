#include "nilclass/strata.hpp"

#include <algorithm>

namespace nilclass {

SupportDim support_dim(const BivectorSubspace& s) {
    if (s.dim() == 0) throw validation_error("support_dim of the zero subspace");
    // dim of sum_i U_i = rank of the side-by-side skew matrices.
    const int n = s.ambient();
    Matrix stacked(n, n * s.dim());
    for (std::size_t b = 0; b < s.dim(); ++b) {
        const Matrix sk = skew_matrix(s.basis()[b]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) stacked(i, b * n + j) = sk(i, j);
    }
    const int total = static_cast<int>(rank(stacked));
    return SupportDim{total, total * (total - 1) / 2 - 1};
}

QuadraticForm restrict_quadric(const BivectorSubspace& s, const QuadraticForm& q) {
    const std::size_t m = s.dim();
    std::vector<Vector> coords;
    coords.reserve(m);
    for (const auto& b : s.basis()) coords.push_back(b.coefficient_vector());
    Matrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            gram(i, j) = q.polar(coords[i], coords[j]);
            gram(j, i) = gram(i, j);
        }
    return QuadraticForm(std::move(gram));
}

BinaryForm restrict_pfaffian_cubic(const BivectorSubspace& s) {
    if (s.ambient() != 6 || s.dim() != 2)
        throw validation_error("restricted Pfaffian cubic needs a pencil on k^6");
    const Multivector &p1 = s.basis()[0], &p2 = s.basis()[1];
    const IndexMask top = 0b111111u;
    const Multivector sq1 = wedge(p1, p1), sq2 = wedge(p2, p2);
    std::vector<Rational> c(4);
    c[0] = pfaffian_cubic(p1);
    c[1] = wedge(sq1, p2).coefficient(top) / 2;
    c[2] = wedge(p1, sq2).coefficient(top) / 2;
    c[3] = pfaffian_cubic(p2);
    return BinaryForm(3, std::move(c));
}

RestrictedForms restrict_forms(const BivectorSubspace& s) {
    RestrictedForms out;
    out.params = static_cast<int>(s.dim());
    for (const auto& q : plucker_quadrics(s.ambient())) out.quadrics.push_back(restrict_quadric(s, q));
    if (s.ambient() == 6 && s.dim() == 2) out.cubic = restrict_pfaffian_cubic(s);
    return out;
}

std::string to_string(GCount g) {
    switch (g) {
        case GCount::zero: return "0";
        case GCount::one: return "1";
        case GCount::two: return "2";
        case GCount::line: return "line";
    }
    return "?";
}

namespace {

BinaryForm quadric_to_binary(const QuadraticForm& q) {
    if (q.vars() != 2) throw validation_error("expected a binary quadratic form");
    return BinaryForm(2, {q.gram()(0, 0), 2 * q.gram()(0, 1), q.gram()(1, 1)});
}

}  // namespace

LinePosition62 line_position_62(const BivectorSubspace& s) {
    if (s.ambient() != 6 || s.dim() != 2)
        throw validation_error("line_position_62 needs a 2-dim subspace over k^6");
    const RestrictedForms rf = restrict_forms(s);

    LinePosition62 out{};
    const BinaryForm& cubic = *rf.cubic;
    out.in_cubic = cubic.is_zero();

    std::vector<BinaryForm> quadrics;
    quadrics.reserve(rf.quadrics.size());
    bool any_nonzero = false;
    for (const auto& q : rf.quadrics) {
        quadrics.push_back(quadric_to_binary(q));
        any_nonzero = any_nonzero || !quadrics.back().is_zero();
    }

    if (!any_nonzero) {
        // Every point of the line is decomposable.
        out.g_count = GCount::line;
        out.g_scheme_gcd_degree = -1;
        return out;
    }

    const BinaryForm g = binary_gcd(quadrics);
    out.g_scheme_gcd_degree = g.degree();
    const int roots = g.degree() == 0 ? 0 : distinct_root_count(g);
    switch (roots) {
        case 0: out.g_count = GCount::zero; break;
        case 1: out.g_count = GCount::one; break;
        case 2: out.g_count = GCount::two; break;
        default: throw taxonomy_error("more than two isolated points in l cap G");
    }

    if (!out.in_cubic) {
        out.cubic_pattern = binary_pattern(cubic);
        if (out.cubic_pattern->total_degree() != 3)
            throw taxonomy_error("Bezout violation: l cap C of degree != 3");
        if (roots > 1)
            throw taxonomy_error("violates paper taxonomy: l not in C meets G twice");
        if (roots == 1) {
            // Points of G are singular on C: the G-point must be at least a
            // double root of the restricted cubic.
            const BinaryForm sf = squarefree_part(g);
            if (!binary_divides(binary_multiply(sf, sf), cubic))
                throw taxonomy_error("violates paper taxonomy: simple cubic root on G");
        }
    }
    return out;
}

int conic_type(const BivectorSubspace& s) {
    if (s.ambient() != 5 || s.dim() != 3)
        throw validation_error("conic_type needs a 3-dim subspace over k^5");
    const RestrictedForms rf = restrict_forms(s);
    // With support <= 4 the five pullbacks span one line of forms.
    Matrix stacked(rf.quadrics.size(), 9);
    for (std::size_t i = 0; i < rf.quadrics.size(); ++i)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) stacked(i, a * 3 + b) = rf.quadrics[i].gram()(a, b);
    if (rank(stacked) != 1)
        throw taxonomy_error("conic_type: restricted quadrics do not span a single form");
    for (const auto& q : rf.quadrics)
        if (!q.is_zero()) return static_cast<int>(q.rank());
    throw taxonomy_error("conic_type: unreachable");
}

int quadric_rank_44(const BivectorSubspace& s) {
    if (s.ambient() != 4 || s.dim() != 4)
        throw validation_error("quadric_rank_44 needs a 4-dim subspace over k^4");
    const auto plucker = plucker_quadrics(4);
    const QuadraticForm restricted = restrict_quadric(s, plucker.front());
    const int r = static_cast<int>(restricted.rank());
    if (r < 2) throw taxonomy_error("restricted Klein quadric of rank < 2");
    return r;
}

std::string to_string(TauFormClass c) {
    switch (c) {
        case TauFormClass::isotropic: return "isotropic";
        case TauFormClass::nondegenerate: return "nondegenerate";
        case TauFormClass::not_applicable: return "n/a";
    }
    return "?";
}

namespace {

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    const BigInt sn = sqrt(numerator(r)), sd = sqrt(denominator(r));
    if (sn * sn != numerator(r) || sd * sd != denominator(r)) return std::nullopt;
    return Rational(sn, sd);
}

// Rational linear factors of a ternary quadratic of rank 1 or 2, as
// coefficient vectors; irrational factorizations yield no candidates.
std::vector<Vector> linear_factor_candidates(const QuadraticForm& q) {
    std::vector<Vector> out;
    const Matrix& g = q.gram();
    const std::size_t r = q.rank();
    if (r == 1) {
        for (int i = 0; i < 3; ++i)
            if (g(i, i) != 0) {
                out.push_back({g(i, 0), g(i, 1), g(i, 2)});
                return out;
            }
        return out;
    }
    if (r != 2) return out;
    // q factors through the quotient by ker(g); restrict to a complement and
    // split the binary quadratic.
    const auto ker = kernel_basis(g);
    Vector w = ker.front();
    // Choose standard vectors e_a, e_b with {w, e_a, e_b} a basis.
    int a = -1, b = -1;
    for (int i = 0; i < 3 && a < 0; ++i)
        for (int j = i + 1; j < 3 && a < 0; ++j) {
            Matrix t(3, 3);
            for (int k = 0; k < 3; ++k) t(0, k) = w[k];
            t(1, i) = 1;
            t(2, j) = 1;
            if (rank(t) == 3) {
                a = i;
                b = j;
            }
        }
    Vector ea(3), eb(3);
    ea[a] = 1;
    eb[b] = 1;
    const Rational A = q.evaluate(ea), B = 2 * q.polar(ea, eb), C = q.evaluate(eb);
    // Split A s^2 + B s t + C t^2 into rational linear forms in (s, t).
    std::vector<std::pair<Rational, Rational>> st_factors;  // coefficients (cs, ct)
    if (A == 0 && C == 0) {
        st_factors = {{1, 0}, {0, 1}};
    } else if (A == 0) {
        st_factors = {{0, 1}, {B, C}};  // t, Bs + Ct
    } else {
        const auto d = rational_sqrt(B * B - 4 * A * C);
        if (!d) return out;
        // A (s - r1 t)(s - r2 t)
        const Rational r1 = (-B + *d) / (2 * A), r2 = (-B - *d) / (2 * A);
        st_factors = {{1, -r1}, {1, -r2}};
    }
    for (const auto& [cs, ct] : st_factors) {
        // The linear form with values 0 on w, cs on e_a, ct on e_b.
        Matrix sys(3, 3);
        for (int k = 0; k < 3; ++k) {
            sys(0, k) = w[k];
            sys(1, k) = ea[k];
            sys(2, k) = eb[k];
        }
        const auto mu = solve(sys, {Rational(0), cs, ct});
        if (mu) out.push_back(*mu);
    }
    return out;
}

bool divides_form(const Vector& lambda, const QuadraticForm& q) {
    // lambda | q  iff  q vanishes on the plane lambda = 0.
    Matrix lrow(1, 3);
    for (int k = 0; k < 3; ++k) lrow(0, k) = lambda[k];
    const auto plane = kernel_basis(lrow);
    if (plane.size() != 2) return false;  // lambda == 0
    return q.polar(plane[0], plane[0]) == 0 && q.polar(plane[0], plane[1]) == 0 &&
           q.polar(plane[1], plane[1]) == 0;
}

}  // namespace

TauInvariant tau_invariant(const BivectorSubspace& s,
                           const std::vector<QuadraticForm>& line_forms) {
    if (s.ambient() != 5 || s.dim() != 3)
        throw validation_error("tau_invariant needs a 3-dim subspace over k^5");

    // Common linear factor of the nonzero restricted quadrics = the line of
    // rank-2 points in the parameter plane.
    std::vector<const QuadraticForm*> nonzero;
    for (const auto& q : line_forms)
        if (!q.is_zero()) nonzero.push_back(&q);
    if (nonzero.empty()) throw validation_error("tau_invariant: all restricted forms vanish");

    Vector lambda;
    for (const auto* q : nonzero) {
        for (Vector& cand : linear_factor_candidates(*q)) {
            const bool all = std::all_of(nonzero.begin(), nonzero.end(),
                                         [&](const QuadraticForm* f) { return divides_form(cand, *f); });
            if (all) {
                lambda = std::move(cand);
                break;
            }
        }
        if (!lambda.empty()) break;
    }
    if (lambda.empty())
        throw taxonomy_error("no common linear factor for a 1-dimensional rank-2 locus");

    Matrix lrow(1, 3);
    for (int k = 0; k < 3; ++k) lrow(0, k) = lambda[k];
    const auto pencil_params = kernel_basis(lrow);
    const Multivector phi1 = s.combination(pencil_params[0]);
    const Multivector phi2 = s.combination(pencil_params[1]);
    if (bivector_rank(phi1) > 2 || bivector_rank(phi2) > 2)
        throw taxonomy_error("pencil point of rank > 2 on the rank-2 line");
    if (!wedge(phi1, phi2).is_zero())
        throw taxonomy_error("rank-2 pencil generators with phi1 ^ phi2 != 0");

    // Any complement point serves as phi_3.
    Vector p3(3);
    for (int k = 0; k < 3; ++k)
        if (lambda[k] != 0) {
            p3[k] = 1;
            break;
        }
    const Multivector phi3 = s.combination(p3);

    const Vector psi1 = contract_to_covector(wedge(phi1, phi3));
    const Vector psi2 = contract_to_covector(wedge(phi2, phi3));
    Matrix image(2, 5);
    for (int j = 0; j < 5; ++j) {
        image(0, j) = psi1[j];
        image(1, j) = psi2[j];
    }
    const int dim = static_cast<int>(rank(image));

    TauInvariant out{dim, TauFormClass::not_applicable};
    if (dim == 2) {
        const Rational val = bivector_on_covectors(phi3, psi1, psi2);
        out.form_class = val == 0 ? TauFormClass::isotropic : TauFormClass::nondegenerate;
    } else if (dim != 1) {
        throw taxonomy_error("tau image of unexpected dimension");
    }
    return out;
}

}  // namespace nilclass
