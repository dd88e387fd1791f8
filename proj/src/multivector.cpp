#include "nilclass/multivector.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

namespace nilclass {

IndexMask mask_from_indices(std::initializer_list<int> indices, int ambient) {
    IndexMask m = 0;
    for (int i : indices) {
        if (i < 1 || i > ambient) throw validation_error("index out of range");
        const IndexMask bit = 1u << (i - 1);
        if (m & bit) throw validation_error("repeated index in index set");
        m |= bit;
    }
    return m;
}

std::vector<int> indices_from_mask(IndexMask m) {
    std::vector<int> out;
    for (int i = 1; m; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

const std::vector<IndexMask>& k_subsets_lex(int n, int k) {
    static std::map<std::pair<int, int>, std::vector<IndexMask>> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto& entry = cache[{n, k}];
    if (entry.empty() && k >= 0 && k <= n) {
        for (IndexMask m = 0; m < (1u << n); ++m)
            if (std::popcount(m) == k) entry.push_back(m);
        std::sort(entry.begin(), entry.end(), MaskLexLess{});
    }
    return entry;
}

std::size_t subset_position(int n, int k, IndexMask m) {
    const auto& all = k_subsets_lex(n, k);
    const auto it = std::lower_bound(all.begin(), all.end(), m, MaskLexLess{});
    if (it == all.end() || *it != m) throw validation_error("mask not a k-subset of {1..n}");
    return static_cast<std::size_t>(it - all.begin());
}

Multivector::Multivector(int ambient, int degree) : ambient_(ambient), degree_(degree) {
    if (ambient < 1 || ambient > 8) throw validation_error("ambient dimension must be in 1..8");
    if (degree < 0) throw validation_error("negative multivector degree");
}

const Rational& Multivector::coefficient(IndexMask m) const {
    static const Rational kZero{0};
    const auto it = coeff_.find(m);
    return it == coeff_.end() ? kZero : it->second;
}

void Multivector::add_term(IndexMask m, const Rational& c) {
    if (std::popcount(m) != degree_) throw validation_error("index set size != degree");
    if (m >= (1u << ambient_)) throw validation_error("index out of ambient range");
    if (c == 0) return;
    auto [it, inserted] = coeff_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeff_.erase(it);
    }
}

void Multivector::add_term(std::initializer_list<int> indices, const Rational& c) {
    add_term(mask_from_indices(indices, ambient_), c);
}

Multivector Multivector::operator+(const Multivector& rhs) const {
    if (ambient_ != rhs.ambient_ || degree_ != rhs.degree_)
        throw validation_error("multivector shape mismatch in +");
    Multivector out = *this;
    for (const auto& [m, c] : rhs.coeff_) out.add_term(m, c);
    return out;
}

Multivector Multivector::operator-(const Multivector& rhs) const {
    if (ambient_ != rhs.ambient_ || degree_ != rhs.degree_)
        throw validation_error("multivector shape mismatch in -");
    Multivector out = *this;
    for (const auto& [m, c] : rhs.coeff_) out.add_term(m, -c);
    return out;
}

Multivector Multivector::operator*(const Rational& s) const {
    Multivector out(ambient_, degree_);
    if (s == 0) return out;
    for (const auto& [m, c] : coeff_) out.coeff_.emplace(m, c * s);
    return out;
}

Vector Multivector::coefficient_vector() const {
    const auto& basis = k_subsets_lex(ambient_, degree_);
    Vector v(basis.size());
    for (const auto& [m, c] : coeff_) v[subset_position(ambient_, degree_, m)] = c;
    return v;
}

Multivector Multivector::from_coefficient_vector(int ambient, int degree, const Vector& v) {
    const auto& basis = k_subsets_lex(ambient, degree);
    if (v.size() != basis.size()) throw validation_error("coefficient vector size mismatch");
    Multivector out(ambient, degree);
    for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], v[i]);
    return out;
}

namespace {

// Parity of the shuffle merging sorted index sets a and b: counts pairs
// (i in a, j in b) with i > j.
int merge_sign(IndexMask a, IndexMask b) {
    int inversions = 0;
    for (IndexMask rest = b; rest;) {
        const IndexMask low = rest & (~rest + 1u);
        // Indices of a strictly above this element of b.
        inversions += std::popcount(a & ~(low | (low - 1u)));
        rest ^= low;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

Multivector wedge(const Multivector& a, const Multivector& b) {
    if (a.ambient() != b.ambient()) throw validation_error("wedge: ambient dimension mismatch");
    Multivector out(a.ambient(), a.degree() + b.degree());
    if (out.degree() > a.ambient()) return out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            out.add_term(ma | mb, ca * cb * merge_sign(ma, mb));
        }
    return out;
}

Matrix skew_matrix(const Multivector& phi) {
    if (phi.degree() != 2) throw validation_error("expected a bivector");
    const int n = phi.ambient();
    Matrix a(n, n);
    for (const auto& [m, c] : phi.terms()) {
        const auto idx = indices_from_mask(m);
        a(idx[0] - 1, idx[1] - 1) = c;
        a(idx[1] - 1, idx[0] - 1) = -c;
    }
    return a;
}

int bivector_rank(const Multivector& phi) {
    return static_cast<int>(rank(skew_matrix(phi)));
}

std::vector<Vector> support(const Multivector& phi) {
    const Matrix a = skew_matrix(phi);
    // Column space basis: pivot rows of the RREF of the transpose.
    const RrefResult r = rref(a.transposed());
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < r.rank; ++i) {
        Vector v(a.rows());
        for (std::size_t j = 0; j < a.rows(); ++j) v[j] = r.reduced(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational pfaffian_cubic(const Multivector& phi) {
    if (phi.ambient() != 6 || phi.degree() != 2)
        throw validation_error("pfaffian_cubic expects a bivector on k^6");
    const Multivector cube = wedge(phi, wedge(phi, phi));
    return cube.coefficient(0b111111u) / 6;
}

Vector contract_to_covector(const Multivector& omega) {
    if (omega.ambient() != 5 || omega.degree() != 4)
        throw validation_error("contract_to_covector expects a 4-vector on k^5");
    Vector u(5);
    for (int j = 1; j <= 5; ++j) {
        const IndexMask m = 0b11111u ^ (1u << (j - 1));
        const Rational& c = omega.coefficient(m);
        u[j - 1] = (j % 2 == 1) ? c : -c;
    }
    return u;
}

Multivector apply_linear_map(const Multivector& v, const Matrix& p) {
    const int n = v.ambient();
    if (p.rows() != static_cast<std::size_t>(n) || p.cols() != static_cast<std::size_t>(n))
        throw validation_error("apply_linear_map: matrix must be n x n");
    Multivector out(n, v.degree());
    for (const auto& [m, c] : v.terms()) {
        // Image of the basis k-form: wedge of the mapped generators.
        Multivector image(n, 0);
        image.add_term(IndexMask{0}, c);
        for (int i : indices_from_mask(m)) {
            Multivector xi(n, 1);
            for (int j = 1; j <= n; ++j) xi.add_term(1u << (j - 1), p(j - 1, i - 1));
            image = wedge(image, xi);
        }
        out = out + image;
    }
    return out;
}

Rational bivector_on_covectors(const Multivector& phi, const Vector& u, const Vector& w) {
    if (phi.degree() != 2) throw validation_error("expected a bivector");
    Rational val = 0;
    for (const auto& [m, c] : phi.terms()) {
        const auto idx = indices_from_mask(m);
        val += c * (u[idx[0] - 1] * w[idx[1] - 1] - u[idx[1] - 1] * w[idx[0] - 1]);
    }
    return val;
}

}  // namespace nilclass
