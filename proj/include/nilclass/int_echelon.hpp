#pragma once

#include <vector>

#include "nilclass/rational.hpp"

namespace nilclass {

/// Fraction-free row echelon over the integers, the exact-rank workhorse.
/// Rows are kept primitive (content-stripped) and every cross-multiplication
/// step strips again, which keeps entry growth polynomial in practice.
class IntEchelon {
  public:
    explicit IntEchelon(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<BigInt>>& rows() const { return rows_; }
    std::vector<std::vector<BigInt>> take_rows() { return std::move(rows_); }

    void insert(std::vector<BigInt> row);

  private:
    std::size_t cols_;
    std::vector<int> pivots_;  // strictly increasing
    std::vector<std::vector<BigInt>> rows_;
};

void strip_content(std::vector<BigInt>& row);

}  // namespace nilclass
