#pragma once

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "chromhom/integer.hpp"

namespace chromhom {

/// Sparse exact integer matrix, stored by column. Stored entries are nonzero
/// and each column is sorted by row.
class IntMatrix {
public:
    using Column = std::vector<std::pair<int, Integer>>;

    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Column& column(int c) const { return columns_[c]; }
    std::size_t nonzeros() const;

    Integer at(int r, int c) const;
    /// Adds `v` to entry (r, c).
    void add(int r, int c, const Integer& v);
    /// Replaces column c; the input may be unsorted and contain duplicates or zeros.
    void set_column(int c, Column entries);

    bool is_zero() const { return nonzeros() == 0; }
    IntMatrix transposed() const;
    std::vector<std::tuple<int, int, Integer>> triplets() const;

    static IntMatrix from_dense(const std::vector<std::vector<long>>& rows);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Column> columns_;
};

}  // namespace chromhom
