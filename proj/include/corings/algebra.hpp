#pragma once

#include "corings/matrix.hpp"
#include "corings/report.hpp"

namespace corings {

/// Finite-dimensional unital associative algebra over an exact field,
/// given by structure constants in a distinguished basis:
/// e_i * e_j = sum_k c[i][j][k] e_k.
struct Algebra {
    std::size_t dim = 0;
    Field field;
    std::vector<Rat> mult;  // c[i][j][k] at index (i*dim + j)*dim + k
    std::vector<Rat> unit;  // coordinates of 1

    const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
        return mult[(i * dim + j) * dim + k];
    }
    Rat& c(std::size_t i, std::size_t j, std::size_t k) {
        return mult[(i * dim + j) * dim + k];
    }

    std::vector<Rat> multiply(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    /// Left multiplication by basis element e_i as a matrix dim x dim.
    Matrix left_mult(std::size_t i) const;
    Matrix right_mult(std::size_t i) const;
    /// Left/right multiplication by an arbitrary element.
    Matrix left_mult_by(const std::vector<Rat>& x) const;
    Matrix right_mult_by(const std::vector<Rat>& x) const;

    /// Multiplication as a linear map A (x) A -> A, shape dim x dim^2.
    Matrix mult_map() const;

    bool operator==(const Algebra& o) const {
        return dim == o.dim && field == o.field && mult == o.mult && unit == o.unit;
    }
};

/// The ground field as a one-dimensional algebra.
Algebra ground_algebra(Field field);

Report check_algebra(const Algebra& a);

Algebra opposite_algebra(const Algebra& a);

/// Direct sum of algebras (split idempotents).
Algebra direct_sum(const Algebra& a, const Algebra& b);

struct AlgebraMap {
    Algebra source;
    Algebra target;
    Matrix matrix;  // target.dim x source.dim
};

Report check_algebra_map(const AlgebraMap& f);

AlgebraMap identity_map(const Algebra& a);
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);  // g after f

}  // namespace corings
