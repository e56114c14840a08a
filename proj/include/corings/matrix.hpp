#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "corings/field.hpp"

namespace corings {

/// Dense exact matrix over a Field. Linear maps are matrices acting on
/// column coordinate vectors: a map V -> W has shape (dim W) x (dim V).
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, Field field)
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Rat(0)) {}

    static Matrix identity(std::size_t n, Field field) {
        Matrix m(n, n, field);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Matrix zero(std::size_t rows, std::size_t cols, Field field) {
        return Matrix(rows, cols, field);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, const Rat& v) { at(r, c) = field_.normalize(v); }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rat& s) const;
    Matrix transposed() const;

    /// Kronecker product; for maps f: V->V', g: W->W' this is the tensor
    /// map f (x) g with the index (i, j) |-> i * dim + j convention.
    Matrix kron(const Matrix& o) const;

    /// Column vector made of a single column.
    std::vector<Rat> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<Rat>& v);
    std::vector<Rat> row(std::size_t r) const;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    static Matrix from_rows(const std::vector<std::vector<Rat>>& rows,
                            std::size_t cols, Field field);
    static Matrix from_columns(const std::vector<std::vector<Rat>>& cols,
                               std::size_t rows, Field field);

    /// Reduced row echelon form (in place copy); returns pivot column list.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;

    /// Rows form a reduced-echelon basis of the null space {x : M x = 0}.
    Matrix kernel_basis() const;

    /// Solves M X = targets, choosing the echelon-canonical particular
    /// solution (free variables zero). Absent when inconsistent.
    std::optional<Matrix> solve(const Matrix& targets) const;

    std::optional<Matrix> inverse() const;

    /// Stacks rows of `o` under this matrix (column counts must match).
    Matrix vstack(const Matrix& o) const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Rat> data_;
};

/// First index where two equal-shaped matrices differ, as "(r,c)" text.
std::string first_difference(const Matrix& a, const Matrix& b);

/// True when every column of `cols` lies in the row space of `rref_rows`
/// (which must be in reduced echelon form, e.g. QuotientSpace::relations).
bool columns_in_rowspace(const Matrix& rref_rows, const Matrix& cols);

/// (a (x) b) * m without materialising the Kronecker product.
Matrix kron_apply(const Matrix& a, const Matrix& b, const Matrix& m);

std::vector<Rat> add_vec(const Field& f, const std::vector<Rat>& a, const std::vector<Rat>& b);
std::vector<Rat> scale_vec(const Field& f, const Rat& s, const std::vector<Rat>& a);

}  // namespace corings
