#include "chromhom/int_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chromhom {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

std::size_t IntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

Integer IntMatrix::at(int r, int c) const {
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    return it != col.end() && it->first == r ? it->second : Integer(0);
}

void IntMatrix::add(int r, int c, const Integer& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    if (v == 0) return;
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        it->second += v;
        if (it->second == 0) col.erase(it);
    } else {
        col.insert(it, {r, v});
    }
}

void IntMatrix::set_column(int c, Column entries) {
    if (c < 0 || c >= cols_) throw std::out_of_range("matrix column");
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Column merged;
    for (auto& [r, v] : entries) {
        if (r < 0 || r >= rows_) throw std::out_of_range("matrix row");
        if (!merged.empty() && merged.back().first == r)
            merged.back().second += v;
        else
            merged.emplace_back(r, std::move(v));
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    columns_[c] = std::move(merged);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
    return t;
}

std::vector<std::tuple<int, int, Integer>> IntMatrix::triplets() const {
    std::vector<std::tuple<int, int, Integer>> out;
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[c]) out.emplace_back(r, c, v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    return out;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
    const int nr = static_cast<int>(rows.size());
    const int nc = nr ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix m(nr, nc);
    for (int r = 0; r < nr; ++r) {
        if (static_cast<int>(rows[r].size()) != nc) throw std::invalid_argument("ragged matrix");
        for (int c = 0; c < nc; ++c)
            if (rows[r][c]) m.columns_[c].emplace_back(r, Integer(rows[r][c]));
    }
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (int c = 0; c < b.cols_; ++c) {
        std::map<int, Integer> acc;
        for (const auto& [k, bv] : b.columns_[c])
            for (const auto& [r, av] : a.columns_[k]) acc[r] += av * bv;
        for (auto& [r, v] : acc)
            if (v != 0) out.columns_[c].emplace_back(r, std::move(v));
    }
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
    IntMatrix out(a.rows_, a.cols_);
    for (int c = 0; c < a.cols_; ++c) {
        IntMatrix::Column col = a.columns_[c];
        for (const auto& [r, v] : b.columns_[c]) col.emplace_back(r, -v);
        out.set_column(c, std::move(col));
    }
    return out;
}

}  // namespace chromhom
