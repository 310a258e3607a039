#pragma once

#include <vector>

#include "ghwforge/field.hpp"

namespace ghwforge {

// Dense row-major matrix over a finite field. Entries are element codes.
class Matrix {
public:
    Matrix(Field field, int rows, int cols);  // zero-filled
    static Matrix identity(const Field& field, int n);
    static Matrix from_rows(const Field& field,
                            const std::vector<std::vector<int>>& rows);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v);

    std::vector<int> row(int r) const;
    Matrix transpose() const;
    Matrix multiply(const Matrix& rhs) const;
    Matrix stack(const Matrix& below) const;
    // Column submatrix, columns taken in the order given (0-based).
    Matrix columns(const std::vector<int>& idx) const;

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

private:
    void check_cell(int r, int c) const;

    Field field_;
    int rows_;
    int cols_;
    std::vector<int> a_;
};

struct RrefResult {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivot_cols;  // 0-based
};

// Reduced row echelon form: pivots normalized to 1, pivot columns cleared,
// leftmost-column / topmost-row pivot choice. Canonical for row equivalence.
RrefResult rref(const Matrix& m);
int rank_of(const Matrix& m);

// v (length m.rows()) times m, as a row vector of length m.cols().
std::vector<int> row_times(const std::vector<int>& v, const Matrix& m);

// Subspace of GF(q)^n stored as an RREF basis, so equality of subspaces is
// entrywise equality of bases.
class Subspace {
public:
    Subspace(Field field, int ambient);  // zero subspace
    static Subspace full(const Field& field, int ambient);
    // Row space of the given matrix, canonicalized.
    static Subspace from_rows(const Matrix& rows);
    static Subspace span_of(const Field& field, int ambient,
                            const std::vector<std::vector<int>>& vectors);

    const Field& field() const { return basis_.field(); }
    int ambient() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<int>& v) const;
    bool contains_subspace(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    // One representative per projective class (first nonzero coordinate
    // normalized to 1), sorted lexicographically by code sequence.
    std::vector<std::vector<int>> projective_vectors() const;

    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;  // dim x ambient, RREF, no zero rows
};

// Nullspace {x : m x = 0}, ambient dimension m.cols().
Subspace kernel(const Matrix& m);

// Dimension of the sum of the given subspaces (rank of stacked bases).
int dim_of_sum(const std::vector<const Subspace*>& parts);

}  // namespace ghwforge
