#include "ringtoric/integer_matrix.hpp"

#include <utility>

#include "ringtoric/error.hpp"

namespace ringtoric {

IntMatrix IntMatrix::submatrix(std::span<const int> row_ids, std::span<const int> col_ids) const {
    IntMatrix out(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (int i = 0; i < out.rows; ++i)
        for (int j = 0; j < out.cols; ++j) out.at(i, j) = at(row_ids[static_cast<std::size_t>(i)], col_ids[static_cast<std::size_t>(j)]);
    return out;
}

IntMatrix IntMatrix::columns(std::span<const int> col_ids) const {
    std::vector<int> all(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) all[static_cast<std::size_t>(i)] = i;
    return submatrix(all, col_ids);
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> x) const {
    if (static_cast<int>(x.size()) != cols) throw Error("length", "vector length does not match column count");
    std::vector<std::int64_t> y(static_cast<std::size_t>(rows), 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) y[static_cast<std::size_t>(i)] += at(i, j) * x[static_cast<std::size_t>(j)];
    return y;
}

namespace {

std::int64_t checked_cross(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::int64_t ab = 0, cd = 0, diff = 0;
    if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) || __builtin_sub_overflow(ab, cd, &diff))
        throw Error("overflow", "integer elimination overflow");
    return diff;
}

// Fraction-free elimination in place; returns the rank and the sign of the row permutation.
std::pair<int, int> bareiss(IntMatrix& m) {
    int rank = 0;
    int sign = 1;
    std::int64_t prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            sign = -sign;
        }
        for (int r = rank + 1; r < m.rows; ++r) {
            for (int j = col + 1; j < m.cols; ++j)
                m.at(r, j) = checked_cross(m.at(rank, col), m.at(r, j), m.at(r, col), m.at(rank, j)) / prev;
            m.at(r, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return {rank, sign};
}

}  // namespace

int integer_rank(IntMatrix m) { return bareiss(m).first; }

std::int64_t determinant(IntMatrix m) {
    if (m.rows != m.cols) throw Error("length", "determinant of a non-square matrix");
    if (m.rows == 0) return 1;
    const auto [rank, sign] = bareiss(m);
    if (rank < m.rows) return 0;
    return sign * m.at(m.rows - 1, m.cols - 1);
}

}  // namespace ringtoric
