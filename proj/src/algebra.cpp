#include "corings/algebra.hpp"

#include <stdexcept>

namespace corings {

std::vector<Rat> Algebra::multiply(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    std::vector<Rat> r(dim, Rat(0));
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Rat xy = field.mul(x[i], y[j]);
            for (std::size_t k = 0; k < dim; ++k)
                if (!c(i, j, k).is_zero()) r[k] = field.add(r[k], field.mul(xy, c(i, j, k)));
        }
    }
    return r;
}

Matrix Algebra::left_mult(std::size_t i) const {
    Matrix m(dim, dim, field);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = c(i, j, k);
    return m;
}

Matrix Algebra::right_mult(std::size_t i) const {
    Matrix m(dim, dim, field);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = c(j, i, k);
    return m;
}

Matrix Algebra::left_mult_by(const std::vector<Rat>& x) const {
    Matrix m(dim, dim, field);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        m = m + left_mult(i).scaled(x[i]);
    }
    return m;
}

Matrix Algebra::right_mult_by(const std::vector<Rat>& x) const {
    Matrix m(dim, dim, field);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        m = m + right_mult(i).scaled(x[i]);
    }
    return m;
}

Matrix Algebra::mult_map() const {
    Matrix m(dim, dim * dim, field);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) m.at(k, i * dim + j) = c(i, j, k);
    return m;
}

Algebra ground_algebra(Field field) {
    Algebra a;
    a.dim = 1;
    a.field = field;
    a.mult = {Rat(1)};
    a.unit = {Rat(1)};
    return a;
}

Report check_algebra(const Algebra& a) {
    Report rep;
    if (a.mult.size() != a.dim * a.dim * a.dim || a.unit.size() != a.dim)
        throw std::invalid_argument("algebra: inconsistent shapes");
    bool assoc = true;
    std::string assoc_witness;
    for (std::size_t i = 0; i < a.dim && assoc; ++i)
        for (std::size_t j = 0; j < a.dim && assoc; ++j)
            for (std::size_t l = 0; l < a.dim && assoc; ++l) {
                std::vector<Rat> ei(a.dim, Rat(0)), ej(a.dim, Rat(0)), el(a.dim, Rat(0));
                ei[i] = 1;
                ej[j] = 1;
                el[l] = 1;
                auto lhs = a.multiply(a.multiply(ei, ej), el);
                auto rhs = a.multiply(ei, a.multiply(ej, el));
                for (std::size_t k = 0; k < a.dim; ++k)
                    if (a.field.normalize(lhs[k]) != a.field.normalize(rhs[k])) {
                        assoc = false;
                        assoc_witness = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                        std::to_string(l) + ")";
                        break;
                    }
            }
    rep.add("associativity", assoc, assoc_witness);
    bool unital = true;
    std::string unit_witness;
    for (std::size_t i = 0; i < a.dim && unital; ++i) {
        std::vector<Rat> ei(a.dim, Rat(0));
        ei[i] = 1;
        auto l = a.multiply(a.unit, ei);
        auto r = a.multiply(ei, a.unit);
        for (std::size_t k = 0; k < a.dim; ++k) {
            Rat want = (k == i) ? Rat(1) : Rat(0);
            if (a.field.normalize(l[k]) != want || a.field.normalize(r[k]) != want) {
                unital = false;
                unit_witness = "(" + std::to_string(i) + ")";
                break;
            }
        }
    }
    rep.add("unit", unital, unit_witness);
    return rep;
}

Algebra opposite_algebra(const Algebra& a) {
    Algebra o = a;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) o.c(i, j, k) = a.c(j, i, k);
    return o;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    if (a.field != b.field) throw std::invalid_argument("direct_sum: field mismatch");
    Algebra s;
    s.dim = a.dim + b.dim;
    s.field = a.field;
    s.mult.assign(s.dim * s.dim * s.dim, Rat(0));
    s.unit.assign(s.dim, Rat(0));
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) s.c(i, j, k) = a.c(i, j, k);
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k)
                s.c(a.dim + i, a.dim + j, a.dim + k) = b.c(i, j, k);
    for (std::size_t i = 0; i < a.dim; ++i) s.unit[i] = a.unit[i];
    for (std::size_t i = 0; i < b.dim; ++i) s.unit[a.dim + i] = b.unit[i];
    return s;
}

Report check_algebra_map(const AlgebraMap& f) {
    Report rep;
    if (f.matrix.rows() != f.target.dim || f.matrix.cols() != f.source.dim)
        throw std::invalid_argument("algebra map: shape mismatch");
    const Field& k = f.source.field;
    auto img_unit = f.matrix.apply(f.source.unit);
    bool unit_ok = true;
    for (std::size_t i = 0; i < f.target.dim; ++i)
        if (k.normalize(img_unit[i]) != k.normalize(f.target.unit[i])) unit_ok = false;
    rep.add("preserves_unit", unit_ok);
    bool mult_ok = true;
    std::string witness;
    for (std::size_t i = 0; i < f.source.dim && mult_ok; ++i)
        for (std::size_t j = 0; j < f.source.dim && mult_ok; ++j) {
            std::vector<Rat> ei(f.source.dim, Rat(0)), ej(f.source.dim, Rat(0));
            ei[i] = 1;
            ej[j] = 1;
            auto lhs = f.matrix.apply(f.source.multiply(ei, ej));
            auto rhs = f.target.multiply(f.matrix.apply(ei), f.matrix.apply(ej));
            for (std::size_t t = 0; t < f.target.dim; ++t)
                if (k.normalize(lhs[t]) != k.normalize(rhs[t])) {
                    mult_ok = false;
                    witness = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
        }
    rep.add("preserves_multiplication", mult_ok, witness);
    return rep;
}

AlgebraMap identity_map(const Algebra& a) {
    return {a, a, Matrix::identity(a.dim, a.field)};
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
    if (!(f.target == g.source)) throw std::invalid_argument("compose: middle mismatch");
    return {f.source, g.target, g.matrix * f.matrix};
}

}  // namespace corings
