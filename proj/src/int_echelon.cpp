#include "nilclass/int_echelon.hpp"

#include <gmp.h>

namespace nilclass {

void strip_content(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const auto& x : row) {
        if (x != 0) g = gcd(g, x);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& x : row) x /= g;
}

void IntEchelon::insert(std::vector<BigInt> row) {
    if (row.size() != cols_) throw validation_error("IntEchelon: row width mismatch");
    BigInt a, b, g;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = static_cast<std::size_t>(pivots_[k]);
        if (row[p] == 0) continue;
        // row <- (lead/g) * row - (row[p]/g) * rows_[k], in place.
        g = gcd(rows_[k][p], row[p]);
        a = rows_[k][p] / g;
        b = row[p] / g;
        const bool scale = a != 1;
        const auto& krow = rows_[k];
        for (std::size_t j = p; j < cols_; ++j) {
            auto rj = row[j].backend().data();
            if (krow[j] == 0) {
                if (scale && mpz_sgn(rj) != 0) mpz_mul(rj, rj, a.backend().data());
            } else {
                if (scale) mpz_mul(rj, rj, a.backend().data());
                mpz_submul(rj, b.backend().data(), krow[j].backend().data());
            }
        }
        if (scale) {
            // Columns before the pivot only get scaled; fold the factor into
            // the trailing content strip by scaling them too.
            for (std::size_t j = 0; j < p; ++j) {
                auto rj = row[j].backend().data();
                if (mpz_sgn(rj) != 0) mpz_mul(rj, rj, a.backend().data());
            }
        }
        strip_content(row);
    }
    int pivot = -1;
    for (std::size_t j = 0; j < cols_; ++j)
        if (row[j] != 0) {
            pivot = static_cast<int>(j);
            break;
        }
    if (pivot < 0) return;
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(row));
}

}  // namespace nilclass
