#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ringtoric {

// Dense row-major integer matrix.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> entries;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    std::int64_t& at(int i, int j) { return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
    std::int64_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }

    IntMatrix submatrix(std::span<const int> row_ids, std::span<const int> col_ids) const;
    IntMatrix columns(std::span<const int> col_ids) const;

    // this * x for an integer vector of length cols.
    std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const;
};

// Rank over the rationals by fraction-free (Bareiss) elimination.
// Throws Error("overflow") if an intermediate value leaves int64.
int integer_rank(IntMatrix m);

// Determinant of a square matrix, Bareiss elimination.
std::int64_t determinant(IntMatrix m);

}  // namespace ringtoric
