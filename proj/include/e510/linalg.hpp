#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "e510/rational.hpp"

namespace e510 {

// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<int, Rational>>;

class SparseRationalMatrix {
public:
    SparseRationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    // Adds v to entry (r, c).
    void add(int r, int c, const Rational& v);
    void set_row(int r, SparseVector row);  // row must be sorted and zero-free
    const SparseVector& row(int r) const { return data_[r]; }
    std::size_t nonzeros() const;

private:
    int rows_;
    int cols_;
    std::vector<SparseVector> data_;
};

struct EliminationStats {
    int rank = 0;
    std::size_t max_row_length = 0;
};

// Basis of the right kernel {x : Mx = 0} in reduced echelon form: each
// vector's first nonzero coordinate is 1 and sits in a column where all
// other basis vectors vanish.  Vectors are ordered by that column.
std::vector<SparseVector> kernel(const SparseRationalMatrix& m, EliminationStats* stats = nullptr);

int rank(const SparseRationalMatrix& m);

// Reduced row echelon form of a list of sparse vectors (zero rows dropped).
std::vector<SparseVector> reduced_echelon(std::vector<SparseVector> rows);

// Unique solution of a square nonsingular dense system, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace e510
