#include "corings/quotient.hpp"

#include <stdexcept>

namespace corings {

bool QuotientSpace::descends(const QuotientSpace& target, const Matrix& ambient_map) const {
    if (relations.rows() == 0) return true;
    // image of every relation row must project to zero in the target
    Matrix imaged = target.project * (ambient_map * relations.transposed());
    return imaged.is_zero();
}

Matrix QuotientSpace::induce(const QuotientSpace& target, const Matrix& ambient_map) const {
    if (!descends(target, ambient_map))
        throw std::logic_error("quotient map not well defined: relations escape");
    if (relations.rows() == 0 && target.relations.rows() == 0) return ambient_map;
    return target.project * (ambient_map * lift);
}

QuotientSpace quotient_space(std::size_t ambient_dim, const Matrix& relations) {
    if (relations.cols() != ambient_dim && relations.rows() != 0)
        throw std::invalid_argument("relations must have ambient_dim columns");
    Field field = relations.field();
    QuotientSpace q;
    q.ambient_dim = ambient_dim;
    std::vector<std::size_t> pivots;
    Matrix r = relations.rref(&pivots);
    // drop zero rows
    Matrix reduced(pivots.size(), ambient_dim, field);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) reduced.at(i, j) = r.at(i, j);
    q.relations = reduced;
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) q.quotient_basis.push_back(c);
    std::size_t qd = q.quotient_basis.size();
    q.project = Matrix(qd, ambient_dim, field);
    q.lift = Matrix(ambient_dim, qd, field);
    for (std::size_t k = 0; k < qd; ++k) {
        q.project.at(k, q.quotient_basis[k]) = 1;
        q.lift.at(q.quotient_basis[k], k) = 1;
    }
    // a pivot coordinate e_c with echelon row (e_c + sum_j row[j] e_j)
    // projects to -sum over non-pivot coordinates
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        for (std::size_t k = 0; k < qd; ++k)
            q.project.at(k, pivots[pi]) = field.neg(reduced.at(pi, q.quotient_basis[k]));
    return q;
}

QuotientSpace trivial_quotient(std::size_t ambient_dim, Field field) {
    return quotient_space(ambient_dim, Matrix(0, ambient_dim, field));
}

}  // namespace corings
