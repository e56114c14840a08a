#pragma once

#include "corings/matrix.hpp"

namespace corings {

/// A quotient V / R of an ambient coordinate space by the row space of a
/// relation matrix, together with the canonical projection and a chosen
/// section. The quotient basis is the lexicographically smallest set of
/// non-pivot coordinates of the reduced echelon form of the relations, so
/// every quotient is reproducible.
struct QuotientSpace {
    std::size_t ambient_dim = 0;
    Matrix relations;                        // reduced echelon rows spanning R
    std::vector<std::size_t> quotient_basis; // ambient indices of the section
    Matrix project;                          // quotient_dim x ambient_dim
    Matrix lift;                             // ambient_dim x quotient_dim

    std::size_t dim() const { return quotient_basis.size(); }
    const Field& field() const { return project.field(); }

    /// True when the given ambient -> ambient' map sends the relation
    /// space of *this into the relation space annihilated by `target`,
    /// i.e. the induced map on quotients is well defined.
    bool descends(const QuotientSpace& target, const Matrix& ambient_map) const;

    /// target.project * ambient_map * lift, asserting well-definedness.
    Matrix induce(const QuotientSpace& target, const Matrix& ambient_map) const;
};

QuotientSpace quotient_space(std::size_t ambient_dim, const Matrix& relations);

/// The full quotient by nothing: project = lift = identity.
QuotientSpace trivial_quotient(std::size_t ambient_dim, Field field);

}  // namespace corings
