#include "ghwforge/matrix.hpp"

#include <algorithm>
#include <string>

#include "ghwforge/errors.hpp"

namespace ghwforge {

Matrix::Matrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw BadDimsError("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, 0);
}

Matrix Matrix::identity(const Field& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const Field& field,
                         const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw BadDimsError("ragged row lengths");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void Matrix::check_cell(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw BadIndexError("matrix index (" + std::to_string(r) + "," +
                            std::to_string(c) + ") out of range");
}

void Matrix::set(int r, int c, int v) {
    check_cell(r, c);
    // validate the code against the field
    a_[static_cast<size_t>(r) * cols_ + c] = field_.add(v, 0);
}

std::vector<int> Matrix::row(int r) const {
    if (r < 0 || r >= rows_)
        throw BadIndexError("row index " + std::to_string(r) + " out of range");
    return std::vector<int>(a_.begin() + static_cast<size_t>(r) * cols_,
                            a_.begin() + static_cast<size_t>(r + 1) * cols_);
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw FieldMismatchError("matrix fields differ");
    if (cols_ != rhs.rows_) throw ShapeMismatchError("inner dimensions differ");
    Matrix out(field_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int t = 0; t < cols_; ++t) {
            const int v = at(i, t);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const int w = rhs.at(t, j);
                if (w == 0) continue;
                out.set(i, j, field_.add(out.at(i, j), field_.mul(v, w)));
            }
        }
    }
    return out;
}

Matrix Matrix::stack(const Matrix& below) const {
    if (field_ != below.field_) throw FieldMismatchError("matrix fields differ");
    if (cols_ != below.cols_) throw ShapeMismatchError("column counts differ");
    Matrix out(field_, rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(rows_ + i, j, below.at(i, j));
    return out;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    Matrix out(field_, rows_, static_cast<int>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < 0 || idx[j] >= cols_)
            throw BadIndexError("column index " + std::to_string(idx[j]) +
                                " out of range");
        for (int i = 0; i < rows_; ++i) out.set(i, static_cast<int>(j), at(i, idx[j]));
    }
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ &&
           cols_ == other.cols_ && a_ == other.a_;
}

RrefResult rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix r = m;
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int rank = 0;
    auto entry = [&](int i, int j) { return r.at(i, j); };
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pr = -1;
        for (int i = rank; i < rows; ++i) {
            if (entry(i, col) != 0) { pr = i; break; }
        }
        if (pr < 0) continue;
        if (pr != rank) {
            for (int j = 0; j < cols; ++j) {
                const int t = r.at(rank, j);
                r.set(rank, j, r.at(pr, j));
                r.set(pr, j, t);
            }
        }
        const int s = f.inv(entry(rank, col));
        if (s != 1)
            for (int j = col; j < cols; ++j) r.set(rank, j, f.mul(s, r.at(rank, j)));
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const int c = entry(i, col);
            if (c == 0) continue;
            for (int j = col; j < cols; ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(rank, j))));
        }
        pivots.push_back(col);
        ++rank;
    }
    return RrefResult{std::move(r), rank, std::move(pivots)};
}

int rank_of(const Matrix& m) { return rref(m).rank; }

std::vector<int> row_times(const std::vector<int>& v, const Matrix& m) {
    if (static_cast<int>(v.size()) != m.rows())
        throw ShapeMismatchError("vector length does not match row count");
    const Field& f = m.field();
    std::vector<int> out(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) {
            const int w = m.at(i, j);
            if (w != 0) out[j] = f.add(out[j], f.mul(v[i], w));
        }
    }
    return out;
}

Subspace::Subspace(Field field, int ambient) : basis_(Matrix(field, 0, ambient)) {
    if (ambient < 0) throw BadDimsError("negative ambient dimension");
}

Subspace Subspace::full(const Field& field, int ambient) {
    return Subspace(Matrix::identity(field, ambient));
}

Subspace Subspace::from_rows(const Matrix& rows) {
    RrefResult r = rref(rows);
    Matrix basis(rows.field(), r.rank, rows.cols());
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < rows.cols(); ++j) basis.set(i, j, r.reduced.at(i, j));
    return Subspace(std::move(basis));
}

Subspace Subspace::span_of(const Field& field, int ambient,
                           const std::vector<std::vector<int>>& vectors) {
    Matrix m(field, static_cast<int>(vectors.size()), ambient);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != ambient)
            throw AmbientMismatchError("vector length does not match ambient");
        for (int j = 0; j < ambient; ++j) m.set(static_cast<int>(i), j, vectors[i][j]);
    }
    return from_rows(m);
}

bool Subspace::contains(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != ambient())
        throw AmbientMismatchError("vector length does not match ambient");
    const Field& f = field();
    std::vector<int> rem = v;
    for (int i = 0; i < dim(); ++i) {
        // pivot column of basis row i = first nonzero entry
        int pc = -1;
        for (int j = 0; j < ambient(); ++j)
            if (basis_.at(i, j) != 0) { pc = j; break; }
        if (pc < 0) continue;
        const int c = rem[pc];
        if (c == 0) continue;
        for (int j = pc; j < ambient(); ++j)
            rem[j] = f.sub(rem[j], f.mul(c, basis_.at(i, j)));
    }
    return std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; });
}

bool Subspace::contains_subspace(const Subspace& other) const {
    if (ambient() != other.ambient() || field() != other.field())
        throw AmbientMismatchError("subspace ambients differ");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient() != other.ambient() || field() != other.field())
        throw AmbientMismatchError("subspace ambients differ");
    return from_rows(basis_.stack(other.basis_));
}

// Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry an
// intersection basis in their right half.
Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient() != other.ambient() || field() != other.field())
        throw AmbientMismatchError("subspace ambients differ");
    const int n = ambient();
    Matrix big(field(), dim() + other.dim(), 2 * n);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < n; ++j) {
            big.set(i, j, basis_.at(i, j));
            big.set(i, n + j, basis_.at(i, j));
        }
    for (int i = 0; i < other.dim(); ++i)
        for (int j = 0; j < n; ++j) big.set(dim() + i, j, other.basis_.at(i, j));
    RrefResult r = rref(big);
    std::vector<std::vector<int>> inter;
    for (int i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (r.reduced.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<int> v(n);
        for (int j = 0; j < n; ++j) v[j] = r.reduced.at(i, n + j);
        inter.push_back(std::move(v));
    }
    return span_of(field(), n, inter);
}

std::vector<std::vector<int>> Subspace::projective_vectors() const {
    const Field& f = field();
    const long q = f.size();
    const int t = dim();
    std::vector<std::vector<int>> out;
    if (t == 0) return out;
    // coefficient tuples with first nonzero entry 1, one per projective class
    std::vector<int> lambda(t, 0);
    for (int lead = 0; lead < t; ++lead) {
        std::fill(lambda.begin(), lambda.end(), 0);
        lambda[lead] = 1;
        long free = 1;
        for (int i = lead + 1; i < t; ++i) free *= q;
        for (long idx = 0; idx < free; ++idx) {
            long rest = idx;
            for (int i = lead + 1; i < t; ++i) {
                lambda[i] = static_cast<int>(rest % q);
                rest /= q;
            }
            std::vector<int> v(ambient(), 0);
            for (int i = lead; i < t; ++i) {
                if (lambda[i] == 0) continue;
                for (int j = 0; j < ambient(); ++j) {
                    const int w = basis_.at(i, j);
                    if (w != 0) v[j] = f.add(v[j], f.mul(lambda[i], w));
                }
            }
            out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Subspace::operator==(const Subspace& other) const {
    return basis_ == other.basis_;
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    const Field& f = m.field();
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> v(n, 0);
        v[free] = 1;
        for (int i = 0; i < r.rank; ++i)
            v[r.pivot_cols[i]] = f.neg(r.reduced.at(i, free));
        basis.push_back(std::move(v));
    }
    return Subspace::span_of(f, n, basis);
}

int dim_of_sum(const std::vector<const Subspace*>& parts) {
    if (parts.empty()) return 0;
    const Subspace* first = parts.front();
    int total_rows = 0;
    for (const Subspace* s : parts) {
        if (s->ambient() != first->ambient() || s->field() != first->field())
            throw AmbientMismatchError("subspace ambients differ");
        total_rows += s->dim();
    }
    Matrix stacked(first->field(), total_rows, first->ambient());
    int at_row = 0;
    for (const Subspace* s : parts)
        for (int i = 0; i < s->dim(); ++i, ++at_row)
            for (int j = 0; j < s->ambient(); ++j)
                stacked.set(at_row, j, s->basis().at(i, j));
    return rank_of(stacked);
}

}  // namespace ghwforge
