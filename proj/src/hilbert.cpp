#include "nilclass/hilbert.hpp"

#include <cstdlib>
#include <string>

#include "nilclass/binary_form.hpp"
#include "nilclass/int_echelon.hpp"
#include "nilclass/polynomial.hpp"

namespace nilclass {

namespace {

// ---- graded side: monomials x^a y^b z^c of fixed degree n, ordered by
// a desc, then b desc. Column count C(n+2,2).

int graded_size(int n) { return (n + 1) * (n + 2) / 2; }

int graded_index(int n, int a, int b) {
    // Blocks of fixed a, a descending; within a block, b descending.
    return (n - a) * (n - a + 1) / 2 + (n - a - b);
}

using IntRow = std::vector<BigInt>;

// Primitive integer coefficient row of a ternary quadric on the degree-2
// monomial basis.
IntRow quadric_row(const QuadraticForm& q) {
    if (q.vars() != 3) throw validation_error("hilbert_profile expects ternary forms");
    BigInt l = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const Rational c = (i == j) ? q.gram()(i, i) : 2 * q.gram()(i, j);
            l = lcm(l, denominator(c));
        }
    IntRow row(6);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const Rational c = (i == j) ? q.gram()(i, i) : 2 * q.gram()(i, j);
            const int a = (i == 0) + (j == 0), b = (i == 1) + (j == 1);
            row[graded_index(2, a, b)] = numerator(c * Rational(l));
        }
    strip_content(row);
    return row;
}

int stabilized_dimension(const std::vector<int>& h, int* degree, int* tail);

}  // namespace

int default_hilbert_n() {
    if (const char* env = std::getenv("NILCLASS_HILBERT_N")) {
        const int n = std::atoi(env);
        if (n < 8) throw validation_error("NILCLASS_HILBERT_N must be >= 8");
        return n;
    }
    return 10;
}

HilbertProfile hilbert_profile(const std::vector<QuadraticForm>& quadrics) {
    return hilbert_profile(quadrics, default_hilbert_n());
}

HilbertProfile hilbert_profile(const std::vector<QuadraticForm>& quadrics, int n_max) {
    if (n_max < 3) throw validation_error("hilbert_profile needs N >= 3");
    std::vector<IntRow> gens;
    for (const auto& q : quadrics) {
        IntRow r = quadric_row(q);
        bool zero = true;
        for (const auto& x : r) zero = zero && x == 0;
        if (!zero) gens.push_back(std::move(r));
    }
    if (gens.empty()) throw validation_error("hilbert_profile: all forms are zero");

    HilbertProfile out;
    out.h.assign(n_max, 0);
    out.h[0] = 3;  // no linear forms in a degree-2-generated ideal

    // I_n = {x,y,z} * I_{n-1} for n > 2; reuse the reduced basis each level.
    std::vector<IntRow> basis;  // reduced basis of I_{n-1}
    for (int n = 2; n <= n_max; ++n) {
        IntEchelon ech(graded_size(n));
        // Multiplies a degree-(n-1) row by x, y or z ((da,db) = (1,0), (0,1),
        // (0,0)); the (a,b) walk mirrors the graded_index order.
        const auto shift = [&](const IntRow& row, int da, int db) {
            IntRow out_row(graded_size(n));
            int a = n - 1, b = 0;
            for (std::size_t idx = 0; idx < row.size(); ++idx) {
                if (row[idx] != 0) out_row[graded_index(n, a + da, b + db)] = row[idx];
                if (b > 0) {
                    --b;
                } else {
                    --a;
                    b = n - 1 - a;
                }
            }
            return out_row;
        };
        if (n == 2) {
            for (const auto& g : gens) ech.insert(g);
        } else {
            for (const auto& r : basis) {
                ech.insert(shift(r, 1, 0));
                ech.insert(shift(r, 0, 1));
                ech.insert(shift(r, 0, 0));
            }
        }
        out.h[n - 1] = graded_size(n) - static_cast<int>(ech.rank());
        basis = ech.take_rows();
    }

    out.dimension = stabilized_dimension(out.h, &out.degree, &out.tail_constant);
    return out;
}

namespace {

int stabilized_dimension(const std::vector<int>& h, int* degree, int* tail) {
    const int n_max = static_cast<int>(h.size());
    const int h1 = h[n_max - 3], h2 = h[n_max - 2], h3 = h[n_max - 1];
    if (h1 == h2 && h2 == h3) {
        *tail = h3;
        *degree = h3;
        if (h3 == 0) {
            *degree = 0;
            return -1;
        }
        return 0;
    }
    const int c = h3 - n_max;
    if (h1 == n_max - 2 + c && h2 == n_max - 1 + c) {
        *tail = c;
        *degree = 1;  // linear tail with unit slope: a line
        return 1;
    }
    throw taxonomy_error("hilbert profile: no stabilization by N=" + std::to_string(n_max));
}

}  // namespace

// ---- affine side: the Artinian algebra at a chart avoiding the scheme.

namespace {

constexpr int kChartDegree = 6;

// Monomials u^a v^b with a+b <= D, ordered degree descending then a
// descending, so the leading (pivot) monomial of a polynomial is the
// "largest" and quotient basis monomials end up of low degree.
struct ChartMonomials {
    std::vector<std::pair<int, int>> list;
    int index(int a, int b) const {
        const int d = a + b;
        // monomials of degree > d come first
        int before = 0;
        for (int k = kChartDegree; k > d; --k) before += k + 1;
        return before + (d - a);
    }
    ChartMonomials() {
        for (int d = kChartDegree; d >= 0; --d)
            for (int a = d; a >= 0; --a) list.emplace_back(a, d - a);
    }
};

const ChartMonomials& chart_monomials() {
    static const ChartMonomials m;
    return m;
}

using QRow = std::vector<Rational>;

struct AffineIdeal {
    std::vector<QRow> generators;  // degree <= 2 polynomials in (u, v)
};

// q(M * (u, v, 1)) as a chart polynomial.
QRow substitute_chart(const QuadraticForm& q, const Matrix& m) {
    const auto& mons = chart_monomials();
    QRow out(mons.list.size());
    // coordinates x_i = m(i,0) u + m(i,1) v + m(i,2)
    const auto add_product = [&](int i, int j, const Rational& c) {
        // c * x_i * x_j
        const Rational iu = m(i, 0), iv = m(i, 1), ic = m(i, 2);
        const Rational ju = m(j, 0), jv = m(j, 1), jc = m(j, 2);
        out[mons.index(2, 0)] += c * iu * ju;
        out[mons.index(1, 1)] += c * (iu * jv + iv * ju);
        out[mons.index(0, 2)] += c * iv * jv;
        out[mons.index(1, 0)] += c * (iu * jc + ic * ju);
        out[mons.index(0, 1)] += c * (iv * jc + ic * jv);
        out[mons.index(0, 0)] += c * ic * jc;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (q.gram()(i, j) != 0) add_product(i, j, q.gram()(i, j));
        }
    return out;
}

int poly_degree(const QRow& p) {
    const auto& mons = chart_monomials();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return mons.list[i].first + mons.list[i].second;
    return -1;
}

// Reduced row-echelon span of { monomial * generator } up to kChartDegree.
struct ArtinianAlgebra {
    std::vector<QRow> reduced_rows;
    std::vector<int> pivot_cols;
    std::vector<int> quotient_monomials;  // column indices of the basis

    QRow normal_form(QRow p) const {
        for (std::size_t k = 0; k < reduced_rows.size(); ++k) {
            const Rational c = p[pivot_cols[k]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < p.size(); ++j)
                if (reduced_rows[k][j] != 0) p[j] -= c * reduced_rows[k][j];
        }
        return p;
    }
};

ArtinianAlgebra build_artinian(const AffineIdeal& ideal, int expected_dim) {
    const auto& mons = chart_monomials();
    std::vector<QRow> rows;
    for (const auto& g : ideal.generators) {
        const int dg = poly_degree(g);
        if (dg < 0) continue;
        for (std::size_t mi = 0; mi < mons.list.size(); ++mi) {
            const auto [a, b] = mons.list[mi];
            if (a + b + dg > kChartDegree) continue;
            QRow row(mons.list.size());
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (g[j] == 0) continue;
                const auto [ga, gb] = mons.list[j];
                row[mons.index(ga + a, gb + b)] = g[j];
            }
            rows.push_back(std::move(row));
        }
    }
    Matrix m(rows.size(), mons.list.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < mons.list.size(); ++j) m(i, j) = rows[i][j];
    const RrefResult r = rref(m);

    ArtinianAlgebra alg;
    for (std::size_t i = 0; i < r.rank; ++i) {
        QRow row(mons.list.size());
        for (std::size_t j = 0; j < mons.list.size(); ++j) row[j] = r.reduced(i, j);
        alg.reduced_rows.push_back(std::move(row));
        alg.pivot_cols.push_back(static_cast<int>(r.pivot_columns[i]));
    }
    std::vector<bool> is_pivot(mons.list.size(), false);
    for (int p : alg.pivot_cols) is_pivot[p] = true;
    for (std::size_t j = 0; j < mons.list.size(); ++j)
        if (!is_pivot[j]) alg.quotient_monomials.push_back(static_cast<int>(j));
    if (static_cast<int>(alg.quotient_monomials.size()) != expected_dim)
        throw taxonomy_error("Artinian quotient dimension disagrees with the Hilbert degree");
    for (int col : alg.quotient_monomials) {
        const auto [a, b] = mons.list[col];
        if (a + b >= kChartDegree)
            throw taxonomy_error("Artinian basis monomial too close to the degree cutoff");
    }
    return alg;
}

// Multiplication-by-u (du=1) or v (dv=1) operator on the quotient basis.
Matrix multiplication_operator(const ArtinianAlgebra& alg, int du, int dv) {
    const auto& mons = chart_monomials();
    const std::size_t dim = alg.quotient_monomials.size();
    Matrix op(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
        const auto [a, b] = mons.list[alg.quotient_monomials[c]];
        QRow shifted(mons.list.size());
        shifted[mons.index(a + du, b + dv)] = 1;
        const QRow nf = alg.normal_form(std::move(shifted));
        for (std::size_t r = 0; r < dim; ++r) op(r, c) = nf[alg.quotient_monomials[r]];
    }
    return op;
}

// Linear forms lambda with V(lambda) disjoint from the scheme, tried in a
// fixed order: z, y, x, x+y, x-y, x+z, x-z, y+z, y-z, x+y+z, then the moment
// sequence x + k y + k^2 z (any point rules out at most two k's).
std::vector<std::array<long, 3>> lambda_candidates() {
    std::vector<std::array<long, 3>> c = {
        {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0},  {1, -1, 0},
        {1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}, {1, 1, 1},
        {1, 2, 0}, {1, 0, 2},
    };
    for (long k = 2; k <= 12; ++k) c.push_back({1, k, k * k});
    return c;
}

QuadraticForm linear_times_variable(const std::array<long, 3>& lam, int var) {
    Matrix g(3, 3);
    for (int i = 0; i < 3; ++i) {
        g(i, var) += Rational(lam[i], 2);
        g(var, i) += Rational(lam[i], 2);
    }
    return QuadraticForm(std::move(g));
}

bool lambda_avoids_scheme(const std::vector<QuadraticForm>& quadrics,
                          const std::array<long, 3>& lam, int n_max) {
    std::vector<QuadraticForm> extended = quadrics;
    for (int var = 0; var < 3; ++var) extended.push_back(linear_times_variable(lam, var));
    return hilbert_profile(extended, n_max).dimension == -1;
}

// Exact pre-filter: V(lambda) misses the scheme iff the quadrics restricted
// to the line {lambda = 0} have no common root, i.e. their binary gcd is a
// constant. Spares a full profile per rejected candidate.
bool lambda_prefilter(const std::vector<QuadraticForm>& quadrics,
                      const std::array<long, 3>& lam) {
    Matrix lrow(1, 3);
    for (int k = 0; k < 3; ++k) lrow(0, k) = lam[k];
    const auto plane = kernel_basis(lrow);
    std::vector<BinaryForm> restricted;
    bool any = false;
    for (const auto& q : quadrics) {
        BinaryForm f(2, {q.polar(plane[0], plane[0]), 2 * q.polar(plane[0], plane[1]),
                         q.polar(plane[1], plane[1])});
        any = any || !f.is_zero();
        restricted.push_back(std::move(f));
    }
    if (!any) return false;  // the whole line lies in the scheme
    return binary_gcd(restricted).degree() == 0;
}

int minpoly_distinct_roots(const Matrix& op) {
    return distinct_root_count(minimal_polynomial(op));
}

Rational unique_eigenvalue(const Matrix& op) {
    const Polynomial p = minimal_polynomial(op);
    const Polynomial sf = divmod(p, gcd(p, p.derivative())).quotient.monic();
    if (sf.degree() != 1)
        throw taxonomy_error("expected a single eigenvalue for a one-point scheme");
    return -sf.coefficient(0);
}

}  // namespace

PointData zero_dim_points(const std::vector<QuadraticForm>& quadrics,
                          const HilbertProfile& profile) {
    if (profile.dimension != 0)
        throw validation_error("zero_dim_points requires a dimension-0 profile");
    const int n_max = static_cast<int>(profile.h.size());

    std::array<long, 3> lam{};
    bool found = false;
    for (const auto& cand : lambda_candidates()) {
        if (!lambda_prefilter(quadrics, cand)) continue;
        // The authoritative emptiness check on the accepted candidate.
        if (!lambda_avoids_scheme(quadrics, cand, n_max))
            throw taxonomy_error("chart pre-filter disagrees with the Hilbert profile");
        lam = cand;
        found = true;
        break;
    }
    if (!found) throw taxonomy_error("no chart direction avoids the scheme");

    // Chart: rows e_a, e_b, lambda invertible; original coords = M (u, v, 1)^T.
    int pivot = 0;
    while (lam[pivot] == 0) ++pivot;
    const int ea = pivot == 0 ? 1 : 0;
    const int eb = pivot == 2 ? 1 : 2;
    Matrix rows(3, 3);
    rows(0, ea) = 1;
    rows(1, eb) = 1;
    for (int j = 0; j < 3; ++j) rows(2, j) = lam[j];
    const Matrix chart = *inverse(rows);

    AffineIdeal ideal;
    for (const auto& q : quadrics) {
        QRow g = substitute_chart(q, chart);
        if (poly_degree(g) >= 0) ideal.generators.push_back(std::move(g));
    }
    const ArtinianAlgebra alg = build_artinian(ideal, profile.degree);
    const Matrix mu = multiplication_operator(alg, 1, 0);
    const Matrix mv = multiplication_operator(alg, 0, 1);

    PointData out;
    out.degree = profile.degree;
    out.distinct_points = 0;
    const long trials[5][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}};
    for (const auto& t : trials) {
        Matrix op(mu.rows(), mu.cols());
        for (std::size_t i = 0; i < mu.rows(); ++i)
            for (std::size_t j = 0; j < mu.cols(); ++j)
                op(i, j) = Rational(t[0]) * mu(i, j) + Rational(t[1]) * mv(i, j);
        out.distinct_points = std::max(out.distinct_points, minpoly_distinct_roots(op));
    }
    if (out.distinct_points > out.degree)
        throw taxonomy_error("Stickelberger count exceeds the scheme degree");

    if (out.distinct_points == 1) {
        const Rational ru = unique_eigenvalue(mu), rv = unique_eigenvalue(mv);
        Vector affine{ru, rv, 1};
        const Vector hom = chart.apply(affine);
        std::array<Rational, 3> pt{hom[0], hom[1], hom[2]};
        // Normalize: first nonzero coordinate = 1.
        for (int i = 0; i < 3; ++i)
            if (pt[i] != 0) {
                const Rational s = 1 / pt[i];
                for (int j = 0; j < 3; ++j) pt[j] *= s;
                break;
            }
        for (const auto& q : quadrics)
            if (q.evaluate({pt[0], pt[1], pt[2]}) != 0)
                throw taxonomy_error("computed point is not a common zero");
        out.point = pt;

        // Cotangent dimension: 2 - rank of the linear parts of the
        // generators translated to the point.
        const auto& mons = chart_monomials();
        Matrix lin(ideal.generators.size(), 2);
        for (std::size_t gi = 0; gi < ideal.generators.size(); ++gi) {
            const QRow& g = ideal.generators[gi];
            // g(u + ru, v + rv): linear coefficients.
            Rational cu = 0, cv = 0, c0 = 0;
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (g[j] == 0) continue;
                const auto [a, b] = mons.list[j];
                if (a + b > 2) throw taxonomy_error("chart generator of unexpected degree");
                // expand (u+ru)^a (v+rv)^b
                if (a == 2) {
                    cu += 2 * g[j] * ru;
                    c0 += g[j] * ru * ru;
                } else if (a == 1 && b == 1) {
                    cu += g[j] * rv;
                    cv += g[j] * ru;
                    c0 += g[j] * ru * rv;
                } else if (b == 2) {
                    cv += 2 * g[j] * rv;
                    c0 += g[j] * rv * rv;
                } else if (a == 1) {
                    cu += g[j];
                    c0 += g[j] * ru;
                } else if (b == 1) {
                    cv += g[j];
                    c0 += g[j] * rv;
                } else {
                    c0 += g[j];
                }
            }
            if (c0 != 0) throw taxonomy_error("unique point does not satisfy a generator");
            lin(gi, 0) = cu;
            lin(gi, 1) = cv;
        }
        out.cotangent_dim = 2 - static_cast<int>(rank(lin));
    }
    return out;
}

}  // namespace nilclass
