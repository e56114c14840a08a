#include "corings/bimodule.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace corings {

Matrix Bimodule::left_act(std::size_t b) const {
    Matrix m(dim, dim, field());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(j, i) = l(b, i, j);
    return m;
}

Matrix Bimodule::right_act(std::size_t a) const {
    Matrix m(dim, dim, field());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(j, i) = r(i, a, j);
    return m;
}

Matrix Bimodule::left_act_by(const std::vector<Rat>& x) const {
    Matrix m(dim, dim, field());
    for (std::size_t b = 0; b < left_alg.dim; ++b) {
        if (x[b].is_zero()) continue;
        m = m + left_act(b).scaled(x[b]);
    }
    return m;
}

Matrix Bimodule::right_act_by(const std::vector<Rat>& x) const {
    Matrix m(dim, dim, field());
    for (std::size_t a = 0; a < right_alg.dim; ++a) {
        if (x[a].is_zero()) continue;
        m = m + right_act(a).scaled(x[a]);
    }
    return m;
}

Matrix Bimodule::left_action_map() const {
    Matrix m(dim, left_alg.dim * dim, field());
    for (std::size_t b = 0; b < left_alg.dim; ++b)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m.at(j, b * dim + i) = l(b, i, j);
    return m;
}

Matrix Bimodule::right_action_map() const {
    Matrix m(dim, dim * right_alg.dim, field());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t a = 0; a < right_alg.dim; ++a)
            for (std::size_t j = 0; j < dim; ++j) m.at(j, i * right_alg.dim + a) = r(i, a, j);
    return m;
}

void Bimodule::allocate() {
    left_action.assign(left_alg.dim * dim * dim, Rat(0));
    right_action.assign(dim * right_alg.dim * dim, Rat(0));
}

Bimodule regular_bimodule(const Algebra& a) {
    Bimodule m;
    m.left_alg = a;
    m.right_alg = a;
    m.dim = a.dim;
    m.allocate();
    for (std::size_t b = 0; b < a.dim; ++b)
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                m.l(b, i, j) = a.c(b, i, j);
                m.r(i, b, j) = a.c(i, b, j);
            }
    return m;
}

Bimodule bimodule_along(const AlgebraMap& alpha) {
    Bimodule m = regular_bimodule(alpha.target);
    m.left_alg = alpha.source;
    m.left_action.assign(alpha.source.dim * m.dim * m.dim, Rat(0));
    for (std::size_t b = 0; b < alpha.source.dim; ++b) {
        Matrix act = alpha.target.left_mult_by(alpha.matrix.column(b));
        for (std::size_t i = 0; i < m.dim; ++i)
            for (std::size_t j = 0; j < m.dim; ++j) m.l(b, i, j) = act.at(j, i);
    }
    return m;
}

Bimodule right_module(const Algebra& a, std::size_t dim, std::vector<Rat> right_action) {
    Bimodule m;
    m.left_alg = ground_algebra(a.field);
    m.right_alg = a;
    m.dim = dim;
    m.left_action.assign(dim * dim, Rat(0));
    for (std::size_t i = 0; i < dim; ++i) m.l(0, i, i) = 1;
    m.right_action = std::move(right_action);
    if (m.right_action.size() != dim * a.dim * dim)
        throw std::invalid_argument("right_module: action shape mismatch");
    return m;
}

Bimodule free_bimodule(const Algebra& a, std::size_t n) {
    Bimodule m;
    m.left_alg = a;
    m.right_alg = a;
    m.dim = n * a.dim;  // basis (s, i) at s * a.dim + i
    m.allocate();
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t b = 0; b < a.dim; ++b)
            for (std::size_t i = 0; i < a.dim; ++i)
                for (std::size_t j = 0; j < a.dim; ++j) {
                    m.l(b, s * a.dim + i, s * a.dim + j) = a.c(b, i, j);
                    m.r(s * a.dim + i, b, s * a.dim + j) = a.c(i, b, j);
                }
    return m;
}

Bimodule restrict_left(const Bimodule& m, const AlgebraMap& beta) {
    if (!(beta.target == m.left_alg))
        throw std::invalid_argument("restrict_left: algebra mismatch");
    Bimodule out = m;
    out.left_alg = beta.source;
    out.left_action.assign(beta.source.dim * m.dim * m.dim, Rat(0));
    for (std::size_t b = 0; b < beta.source.dim; ++b) {
        Matrix act = m.left_act_by(beta.matrix.column(b));
        for (std::size_t i = 0; i < m.dim; ++i)
            for (std::size_t j = 0; j < m.dim; ++j) out.l(b, i, j) = act.at(j, i);
    }
    return out;
}

Bimodule restrict_right(const Bimodule& m, const AlgebraMap& beta) {
    if (!(beta.target == m.right_alg))
        throw std::invalid_argument("restrict_right: algebra mismatch");
    Bimodule out = m;
    out.right_alg = beta.source;
    out.right_action.assign(m.dim * beta.source.dim * m.dim, Rat(0));
    for (std::size_t a = 0; a < beta.source.dim; ++a) {
        Matrix act = m.right_act_by(beta.matrix.column(a));
        for (std::size_t i = 0; i < m.dim; ++i)
            for (std::size_t j = 0; j < m.dim; ++j) out.r(i, a, j) = act.at(j, i);
    }
    return out;
}

Report check_bimodule(const Bimodule& m) {
    Report rep;
    if (m.left_action.size() != m.left_alg.dim * m.dim * m.dim ||
        m.right_action.size() != m.dim * m.right_alg.dim * m.dim)
        throw std::invalid_argument("bimodule: inconsistent shapes");
    Matrix id = Matrix::identity(m.dim, m.field());
    rep.add("left_unit", m.left_act_by(m.left_alg.unit) == id);
    rep.add("right_unit", m.right_act_by(m.right_alg.unit) == id);

    bool ok = true;
    std::string wit;
    for (std::size_t b = 0; b < m.left_alg.dim && ok; ++b)
        for (std::size_t b2 = 0; b2 < m.left_alg.dim && ok; ++b2) {
            std::vector<Rat> eb(m.left_alg.dim, Rat(0)), eb2(m.left_alg.dim, Rat(0));
            eb[b] = 1;
            eb2[b2] = 1;
            Matrix lhs = m.left_act_by(m.left_alg.multiply(eb, eb2));
            Matrix rhs = m.left_act(b) * m.left_act(b2);
            if (lhs != rhs) {
                ok = false;
                wit = "(" + std::to_string(b) + "," + std::to_string(b2) + ")";
            }
        }
    rep.add("left_associativity", ok, wit);

    ok = true;
    wit.clear();
    for (std::size_t a = 0; a < m.right_alg.dim && ok; ++a)
        for (std::size_t a2 = 0; a2 < m.right_alg.dim && ok; ++a2) {
            std::vector<Rat> ea(m.right_alg.dim, Rat(0)), ea2(m.right_alg.dim, Rat(0));
            ea[a] = 1;
            ea2[a2] = 1;
            Matrix lhs = m.right_act_by(m.right_alg.multiply(ea, ea2));
            Matrix rhs = m.right_act(a2) * m.right_act(a);
            if (lhs != rhs) {
                ok = false;
                wit = "(" + std::to_string(a) + "," + std::to_string(a2) + ")";
            }
        }
    rep.add("right_associativity", ok, wit);

    ok = true;
    wit.clear();
    for (std::size_t b = 0; b < m.left_alg.dim && ok; ++b)
        for (std::size_t a = 0; a < m.right_alg.dim && ok; ++a)
            if (m.right_act(a) * m.left_act(b) != m.left_act(b) * m.right_act(a)) {
                ok = false;
                wit = "(" + std::to_string(b) + "," + std::to_string(a) + ")";
            }
    rep.add("actions_commute", ok, wit);
    return rep;
}

Report check_bimodule_map(const BimoduleMap& f) {
    Report rep;
    if (f.matrix.rows() != f.target.dim || f.matrix.cols() != f.source.dim)
        throw std::invalid_argument("bimodule map: shape mismatch");
    bool ok = true;
    std::string wit;
    for (std::size_t b = 0; b < f.source.left_alg.dim && ok; ++b)
        if (f.matrix * f.source.left_act(b) != f.target.left_act(b) * f.matrix) {
            ok = false;
            wit = "(" + std::to_string(b) + ")";
        }
    rep.add("left_linear", ok, wit);
    ok = true;
    wit.clear();
    for (std::size_t a = 0; a < f.source.right_alg.dim && ok; ++a)
        if (f.matrix * f.source.right_act(a) != f.target.right_act(a) * f.matrix) {
            ok = false;
            wit = "(" + std::to_string(a) + ")";
        }
    rep.add("right_linear", ok, wit);
    return rep;
}

namespace {

// Rows of the constraint system for maps T with T * pre = post * T, in the
// row-major flattening T(t, s) |-> t * src_dim + s.
void append_intertwine_rows(std::vector<std::vector<Rat>>& rows, const Field& k,
                            const Matrix& pre, const Matrix& post,
                            std::size_t src_dim, std::size_t tgt_dim) {
    for (std::size_t i = 0; i < tgt_dim; ++i)
        for (std::size_t j = 0; j < src_dim; ++j) {
            std::vector<Rat> row(tgt_dim * src_dim, Rat(0));
            for (std::size_t s = 0; s < src_dim; ++s)
                row[i * src_dim + s] = k.add(row[i * src_dim + s], pre.at(s, j));
            for (std::size_t t = 0; t < tgt_dim; ++t)
                row[t * src_dim + j] = k.sub(row[t * src_dim + j], post.at(i, t));
            rows.push_back(std::move(row));
        }
}

Matrix unflatten(const std::vector<Rat>& v, std::size_t rows, std::size_t cols, Field k) {
    Matrix m(rows, cols, k);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = k.normalize(v[i * cols + j]);
    return m;
}

std::vector<Rat> flatten(const Matrix& m) {
    std::vector<Rat> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

}  // namespace

Matrix bimodule_hom_basis(const Bimodule& source, const Bimodule& target) {
    if (!(source.left_alg == target.left_alg) || !(source.right_alg == target.right_alg))
        throw std::invalid_argument("bimodule_hom_basis: algebra mismatch");
    const Field& k = source.field();
    std::vector<std::vector<Rat>> rows;
    for (std::size_t b = 0; b < source.left_alg.dim; ++b)
        append_intertwine_rows(rows, k, source.left_act(b), target.left_act(b),
                               source.dim, target.dim);
    for (std::size_t a = 0; a < source.right_alg.dim; ++a)
        append_intertwine_rows(rows, k, source.right_act(a), target.right_act(a),
                               source.dim, target.dim);
    Matrix sys = Matrix::from_rows(rows, target.dim * source.dim, k);
    return sys.kernel_basis();
}

std::size_t TensorChain::flat(const std::vector<std::size_t>& idx) const {
    std::size_t f = 0;
    for (std::size_t t = 0; t < factors.size(); ++t) f = f * factors[t].dim + idx[t];
    return f;
}

std::vector<Rat> TensorChain::pure(const std::vector<std::vector<Rat>>& parts) const {
    std::vector<Rat> v(ambient_dim, Rat(0));
    const Field& k = q.field();
    std::vector<std::size_t> idx(factors.size(), 0);
    for (std::size_t f = 0; f < ambient_dim; ++f) {
        Rat prod(1);
        for (std::size_t t = 0; t < factors.size(); ++t) {
            prod = k.mul(prod, parts[t][idx[t]]);
            if (prod.is_zero()) break;
        }
        v[f] = prod;
        for (std::size_t t = factors.size(); t-- > 0;) {
            if (++idx[t] < factors[t].dim) break;
            idx[t] = 0;
        }
    }
    return v;
}

Matrix kron_list(const std::vector<Matrix>& ms, Field field) {
    Matrix acc = Matrix::identity(1, field);
    for (const auto& m : ms) acc = acc.kron(m);
    return acc;
}

Matrix kron_list_apply(const std::vector<Matrix>& ms, const Matrix& m) {
    const Field& f = m.field();
    std::size_t in_total = 1, out_total = 1;
    for (const auto& a : ms) {
        in_total *= a.cols();
        out_total *= a.rows();
    }
    if (m.rows() != in_total) throw std::invalid_argument("kron_list_apply: shape mismatch");
    Matrix out(out_total, m.cols(), f);
    std::vector<std::size_t> idx(ms.size(), 0);
    std::function<void(std::size_t, std::size_t, const Rat&, std::size_t)> contribute =
        [&](std::size_t t, std::size_t base, const Rat& val, std::size_t c) {
            if (t == ms.size()) {
                out.at(base, c) = f.add(out.at(base, c), val);
                return;
            }
            for (std::size_t p = 0; p < ms[t].rows(); ++p) {
                const Rat& e = ms[t].at(p, idx[t]);
                if (e.is_zero()) continue;
                contribute(t + 1, base * ms[t].rows() + p, f.mul(val, e), c);
            }
        };
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const Rat& v = m.at(r, c);
            if (v.is_zero()) continue;
            std::size_t rest = r;
            for (std::size_t t = ms.size(); t-- > 0;) {
                idx[t] = rest % ms[t].cols();
                rest /= ms[t].cols();
            }
            contribute(0, 0, v, c);
        }
    return out;
}

Matrix pair_relations(const Bimodule& x, const Bimodule& y) {
    const Field& k = x.field();
    const Algebra& mid = x.right_alg;
    if (!(mid == y.left_alg))
        throw std::invalid_argument("pair_relations: middle algebra mismatch");
    // assemble each candidate row sparsely; most cancel outright when the
    // middle algebra acts through the unit, so only materialise survivors
    std::vector<std::vector<Rat>> rows;
    std::vector<std::pair<std::size_t, Rat>> entries;
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t r = 0; r < mid.dim; ++r)
            for (std::size_t j = 0; j < y.dim; ++j) {
                entries.clear();
                for (std::size_t t = 0; t < x.dim; ++t) {
                    const Rat& c = x.r(i, r, t);
                    if (!c.is_zero()) entries.emplace_back(t * y.dim + j, c);
                }
                for (std::size_t t = 0; t < y.dim; ++t) {
                    const Rat& c = y.l(r, j, t);
                    if (!c.is_zero()) entries.emplace_back(i * y.dim + t, k.neg(c));
                }
                std::sort(entries.begin(), entries.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                bool nonzero = false;
                for (std::size_t s = 0; s < entries.size() && !nonzero; ) {
                    Rat sum = entries[s].second;
                    std::size_t e = s + 1;
                    while (e < entries.size() && entries[e].first == entries[s].first)
                        sum = k.add(sum, entries[e++].second);
                    if (!sum.is_zero()) nonzero = true;
                    s = e;
                }
                if (!nonzero) continue;
                std::vector<Rat> row(x.dim * y.dim, Rat(0));
                for (const auto& [idx, val] : entries) row[idx] = k.add(row[idx], val);
                rows.push_back(std::move(row));
            }
    Matrix sys = Matrix::from_rows(rows, x.dim * y.dim, k);
    std::vector<std::size_t> pivots;
    Matrix r = sys.rref(&pivots);
    Matrix reduced(pivots.size(), sys.cols(), k);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < sys.cols(); ++j) reduced.at(i, j) = r.at(i, j);
    return reduced;
}

Matrix tensor_permutation(const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& perm, Field field) {
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    Matrix m(total, total, field);
    std::vector<std::size_t> idx(dims.size(), 0);
    for (std::size_t src = 0; src < total; ++src) {
        std::size_t tgt = 0;
        for (std::size_t t = 0; t < perm.size(); ++t) tgt = tgt * dims[perm[t]] + idx[perm[t]];
        m.at(tgt, src) = 1;
        for (std::size_t t = dims.size(); t-- > 0;) {
            if (++idx[t] < dims[t]) break;
            idx[t] = 0;
        }
    }
    return m;
}

Matrix ambientize(const TensorChain& src, const TensorChain& tgt, const Matrix& f) {
    return tgt.q.lift * f * src.q.project;
}

TensorChain tensor_chain(const std::vector<Bimodule>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor_chain: empty");
    const Field& k = factors.front().field();
    TensorChain ch;
    ch.factors = factors;
    ch.ambient_dim = 1;
    for (const auto& f : factors) ch.ambient_dim *= f.dim;

    std::vector<std::vector<Rat>> rows;
    for (std::size_t t = 0; t + 1 < factors.size(); ++t) {
        const Algebra& mid = factors[t].right_alg;
        if (!(mid == factors[t + 1].left_alg))
            throw std::invalid_argument("tensor_chain: adjacent algebra mismatch");
        std::vector<std::size_t> idx(factors.size(), 0);
        std::vector<Rat> row(ch.ambient_dim, Rat(0));
        std::vector<std::size_t> touched;
        bool done = false;
        while (!done) {
            for (std::size_t x = 0; x < mid.dim; ++x) {
                for (auto p : touched) row[p] = 0;
                touched.clear();
                std::vector<std::size_t> w = idx;
                for (std::size_t j = 0; j < factors[t].dim; ++j) {
                    const Rat& c = factors[t].r(idx[t], x, j);
                    if (c.is_zero()) continue;
                    w[t] = j;
                    std::size_t p = ch.flat(w);
                    row[p] = k.add(row[p], c);
                    touched.push_back(p);
                }
                w[t] = idx[t];
                for (std::size_t j = 0; j < factors[t + 1].dim; ++j) {
                    const Rat& c = factors[t + 1].l(x, idx[t + 1], j);
                    if (c.is_zero()) continue;
                    w[t + 1] = j;
                    std::size_t p = ch.flat(w);
                    row[p] = k.sub(row[p], c);
                    touched.push_back(p);
                }
                bool nonzero = false;
                for (auto p : touched)
                    if (!row[p].is_zero()) { nonzero = true; break; }
                if (nonzero) rows.push_back(row);
            }
            done = true;
            for (std::size_t u = factors.size(); u-- > 0;) {
                if (++idx[u] < factors[u].dim) { done = false; break; }
                idx[u] = 0;
            }
        }
    }
    ch.q = quotient_space(ch.ambient_dim, Matrix::from_rows(rows, ch.ambient_dim, k));

    ch.mod.left_alg = factors.front().left_alg;
    ch.mod.right_alg = factors.back().right_alg;
    ch.mod.dim = ch.q.dim();
    ch.mod.allocate();
    if (rows.empty()) {
        // no balancing relations: the actions are the factor actions on the
        // outer slots, spread along the ambient index grid
        std::size_t d0 = factors.front().dim;
        std::size_t rest = ch.ambient_dim / d0;
        for (std::size_t b = 0; b < ch.mod.left_alg.dim; ++b) {
            Matrix la = factors.front().left_act(b);
            for (std::size_t i0 = 0; i0 < d0; ++i0)
                for (std::size_t j0 = 0; j0 < d0; ++j0) {
                    const Rat& c = la.at(j0, i0);
                    if (c == 0) continue;
                    for (std::size_t r = 0; r < rest; ++r)
                        ch.mod.l(b, i0 * rest + r, j0 * rest + r) = c;
                }
        }
        std::size_t dl = factors.back().dim;
        std::size_t pre = ch.ambient_dim / dl;
        for (std::size_t a = 0; a < ch.mod.right_alg.dim; ++a) {
            Matrix ra = factors.back().right_act(a);
            for (std::size_t il = 0; il < dl; ++il)
                for (std::size_t jl = 0; jl < dl; ++jl) {
                    const Rat& c = ra.at(jl, il);
                    if (c == 0) continue;
                    for (std::size_t p = 0; p < pre; ++p)
                        ch.mod.r(p * dl + il, a, p * dl + jl) = c;
                }
        }
        return ch;
    }
    std::vector<Matrix> ids;
    for (const auto& f : factors) ids.push_back(Matrix::identity(f.dim, k));
    Matrix rel_t = ch.q.relations.transposed();
    auto induced_action = [&](std::vector<Matrix> parts) {
        if (!(ch.q.project * kron_list_apply(parts, rel_t)).is_zero())
            throw std::logic_error("tensor chain: action does not respect the relations");
        return ch.q.project * kron_list_apply(parts, ch.q.lift);
    };
    for (std::size_t b = 0; b < ch.mod.left_alg.dim; ++b) {
        std::vector<Matrix> parts = ids;
        parts.front() = factors.front().left_act(b);
        Matrix act = induced_action(parts);
        for (std::size_t i = 0; i < ch.mod.dim; ++i)
            for (std::size_t j = 0; j < ch.mod.dim; ++j) ch.mod.l(b, i, j) = act.at(j, i);
    }
    for (std::size_t a = 0; a < ch.mod.right_alg.dim; ++a) {
        std::vector<Matrix> parts = ids;
        parts.back() = factors.back().right_act(a);
        Matrix act = induced_action(parts);
        for (std::size_t i = 0; i < ch.mod.dim; ++i)
            for (std::size_t j = 0; j < ch.mod.dim; ++j) ch.mod.r(i, a, j) = act.at(j, i);
    }
    return ch;
}

Matrix DualModule::functional(const std::vector<Rat>& coords) const {
    Matrix col(embed.rows(), 1, embed.field());
    std::vector<Rat> v = embed.apply(coords);
    return unflatten(v, values_dim, source_dim, embed.field());
}

std::optional<std::vector<Rat>> DualModule::coordinates(const Matrix& fn) const {
    Matrix rhs(embed.rows(), 1, embed.field());
    std::vector<Rat> flat = flatten(fn);
    for (std::size_t i = 0; i < flat.size(); ++i) rhs.at(i, 0) = flat[i];
    auto sol = embed.solve(rhs);
    if (!sol) return std::nullopt;
    return sol->column(0);
}

namespace {

// Shared construction: functionals Sigma -> V cut out by the constraints
// F * pre_a = post_a * F, with the bimodule actions on the result given by
// flattened-level operators produced by `left_op` / `right_op`.
DualModule build_dual(const Bimodule& s, const Algebra& values,
                      const Algebra& new_left, const Algebra& new_right,
                      const std::vector<std::pair<Matrix, Matrix>>& linearity,
                      const std::vector<Matrix>& left_ops,
                      const std::vector<Matrix>& right_ops) {
    const Field& k = s.field();
    std::vector<std::vector<Rat>> rows;
    for (const auto& [pre, post] : linearity)
        append_intertwine_rows(rows, k, pre, post, s.dim, values.dim);
    Matrix sys = Matrix::from_rows(rows, values.dim * s.dim, k);
    Matrix basis = sys.kernel_basis();

    DualModule d;
    d.source_dim = s.dim;
    d.values_dim = values.dim;
    d.embed = basis.transposed();
    d.mod.left_alg = new_left;
    d.mod.right_alg = new_right;
    d.mod.dim = basis.rows();
    d.mod.allocate();
    for (std::size_t b = 0; b < new_left.dim; ++b) {
        auto coords = d.embed.solve(left_ops[b] * d.embed);
        if (!coords) throw std::logic_error("dual module: left action does not preserve duals");
        for (std::size_t i = 0; i < d.mod.dim; ++i)
            for (std::size_t j = 0; j < d.mod.dim; ++j) d.mod.l(b, i, j) = coords->at(j, i);
    }
    for (std::size_t a = 0; a < new_right.dim; ++a) {
        auto coords = d.embed.solve(right_ops[a] * d.embed);
        if (!coords) throw std::logic_error("dual module: right action does not preserve duals");
        for (std::size_t i = 0; i < d.mod.dim; ++i)
            for (std::size_t j = 0; j < d.mod.dim; ++j) d.mod.r(i, a, j) = coords->at(j, i);
    }
    return d;
}

}  // namespace

DualModule dual_module(const Bimodule& s) {
    const Algebra& A = s.right_alg;
    const Algebra& B = s.left_alg;
    const Field& k = s.field();
    Matrix idv = Matrix::identity(A.dim, k);
    Matrix ids = Matrix::identity(s.dim, k);
    std::vector<std::pair<Matrix, Matrix>> lin;
    for (std::size_t a = 0; a < A.dim; ++a)
        lin.emplace_back(s.right_act(a), A.right_mult(a));
    std::vector<Matrix> lops, rops;
    // (a . f)(x) = a f(x);  (f . b)(x) = f(b x)
    for (std::size_t a = 0; a < A.dim; ++a) lops.push_back(A.left_mult(a).kron(ids));
    for (std::size_t b = 0; b < B.dim; ++b) rops.push_back(idv.kron(s.left_act(b).transposed()));
    return build_dual(s, A, A, B, lin, lops, rops);
}

DualModule left_dual_module(const Bimodule& s) {
    const Algebra& A = s.right_alg;
    const Algebra& B = s.left_alg;
    const Field& k = s.field();
    Matrix idv = Matrix::identity(B.dim, k);
    Matrix ids = Matrix::identity(s.dim, k);
    std::vector<std::pair<Matrix, Matrix>> lin;
    for (std::size_t b = 0; b < B.dim; ++b)
        lin.emplace_back(s.left_act(b), B.left_mult(b));
    std::vector<Matrix> lops, rops;
    // (a . g)(x) = g(x a);  (g . b)(x) = g(x) b
    for (std::size_t a = 0; a < A.dim; ++a) lops.push_back(idv.kron(s.right_act(a).transposed()));
    for (std::size_t b = 0; b < B.dim; ++b) rops.push_back(B.right_mult(b).kron(ids));
    return build_dual(s, B, A, B, lin, lops, rops);
}

namespace {

std::optional<DualBasisWitness> finite_basis(const Bimodule& s, DualModule dual, bool left) {
    const Field& k = s.field();
    std::size_t d = dual.mod.dim;
    if (s.dim == 0) return DualBasisWitness{{}, {}, std::move(dual)};
    if (d == 0) return std::nullopt;
    std::vector<Matrix> fns;
    for (std::size_t u = 0; u < d; ++u) {
        std::vector<Rat> e(d, Rat(0));
        e[u] = 1;
        fns.push_back(dual.functional(e));
    }
    Matrix sys(s.dim * s.dim, s.dim * d, k);
    for (std::size_t v = 0; v < s.dim; ++v)
        for (std::size_t j = 0; j < s.dim; ++j)
            for (std::size_t u = 0; u < d; ++u) {
                std::vector<Rat> val = fns[u].column(v);
                Matrix act = left ? s.left_act_by(val) : s.right_act_by(val);
                std::vector<Rat> img = act.column(j);
                for (std::size_t w = 0; w < s.dim; ++w)
                    sys.at(v * s.dim + w, j * d + u) = img[w];
            }
    Matrix rhs(s.dim * s.dim, 1, k);
    for (std::size_t v = 0; v < s.dim; ++v) rhs.at(v * s.dim + v, 0) = 1;
    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    DualBasisWitness w;
    for (std::size_t j = 0; j < s.dim; ++j) {
        std::vector<Rat> coords(d, Rat(0));
        bool nonzero = false;
        for (std::size_t u = 0; u < d; ++u) {
            coords[u] = k.normalize(sol->at(j * d + u, 0));
            if (!coords[u].is_zero()) nonzero = true;
        }
        if (!nonzero) continue;
        std::vector<Rat> e(s.dim, Rat(0));
        e[j] = 1;
        w.elements.push_back(e);
        w.functionals.push_back(coords);
    }
    w.dual = std::move(dual);
    return w;
}

}  // namespace

std::optional<DualBasisWitness> dual_basis(const Bimodule& s) {
    return finite_basis(s, dual_module(s), false);
}

std::optional<DualBasisWitness> left_dual_basis(const Bimodule& s) {
    return finite_basis(s, left_dual_module(s), true);
}

std::optional<SeparabilityWitness> separable_bimodule_witness(const Bimodule& s,
                                                              const DualBasisWitness& w) {
    const Field& k = s.field();
    const Algebra& B = s.left_alg;
    TensorChain ch = tensor_chain({s, w.dual.mod});
    std::vector<Rat> canonical_amb(ch.ambient_dim, Rat(0));
    for (std::size_t t = 0; t < w.elements.size(); ++t)
        canonical_amb = add_vec(k, canonical_amb, ch.pure({w.elements[t], w.functionals[t]}));
    std::vector<Rat> canonical = ch.q.project.apply(canonical_amb);

    std::size_t qd = ch.q.dim();
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs_vals;
    auto push_homog = [&](const Matrix& pre, const Matrix& post) {
        std::size_t before = rows.size();
        append_intertwine_rows(rows, k, pre, post, qd, B.dim);
        for (std::size_t i = before; i < rows.size(); ++i) rhs_vals.push_back(Rat(0));
    };
    for (std::size_t b = 0; b < B.dim; ++b) {
        push_homog(ch.mod.left_act(b), B.left_mult(b));
        push_homog(ch.mod.right_act(b), B.right_mult(b));
    }
    // kappa(canonical) = 1_B
    for (std::size_t t = 0; t < B.dim; ++t) {
        std::vector<Rat> row(B.dim * qd, Rat(0));
        for (std::size_t c = 0; c < qd; ++c) row[t * qd + c] = canonical[c];
        rows.push_back(std::move(row));
        rhs_vals.push_back(B.unit[t]);
    }
    Matrix sys = Matrix::from_rows(rows, B.dim * qd, k);
    Matrix rhs(rows.size(), 1, k);
    for (std::size_t i = 0; i < rhs_vals.size(); ++i) rhs.set(i, 0, rhs_vals[i]);
    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    SeparabilityWitness out;
    out.kappa = unflatten(sol->column(0), B.dim, qd, k);
    out.space = std::move(ch);
    out.canonical = std::move(canonical);
    return out;
}

FrobeniusWitness frobenius_bimodule_witness(const Bimodule& s, long coeff_bound) {
    FrobeniusWitness out;
    out.right_dual = dual_module(s);
    out.left_dual = left_dual_module(s);
    const Field& k = s.field();
    std::size_t n = out.right_dual.mod.dim;
    if (n != out.left_dual.mod.dim) {
        out.status = FrobeniusStatus::AbsentDimension;
        return out;
    }
    if (n == 0) {
        out.status = FrobeniusStatus::Found;
        out.iso = Matrix(0, 0, k);
        return out;
    }
    Matrix homs = bimodule_hom_basis(out.right_dual.mod, out.left_dual.mod);
    std::size_t h = homs.rows();
    if (h == 0) {
        out.status = FrobeniusStatus::AbsentDimension;
        return out;
    }
    auto candidate = [&](const std::vector<Rat>& coeffs) -> bool {
        std::vector<Rat> flat(n * n, Rat(0));
        for (std::size_t u = 0; u < h; ++u) {
            if (coeffs[u].is_zero()) continue;
            flat = add_vec(k, flat, scale_vec(k, coeffs[u], homs.row(u)));
        }
        Matrix m = unflatten(flat, n, n, k);
        if (!m.inverse()) return false;
        out.iso = m;
        out.status = FrobeniusStatus::Found;
        return true;
    };
    for (std::size_t u = 0; u < h; ++u) {
        std::vector<Rat> coeffs(h, Rat(0));
        coeffs[u] = 1;
        if (candidate(coeffs)) return out;
    }
    long base = 2 * coeff_bound + 1;
    long long total = 1;
    for (std::size_t u = 0; u < h; ++u) {
        total *= base;
        if (total > 500000) { total = 500001; break; }
    }
    if (total <= 500000) {
        std::vector<long> digits(h, 0);
        for (long long step = 0; step < total; ++step) {
            long long x = step;
            bool allzero = true;
            std::vector<Rat> coeffs(h, Rat(0));
            for (std::size_t u = 0; u < h; ++u) {
                long dgt = static_cast<long>(x % base) - coeff_bound;
                x /= base;
                coeffs[u] = Rat(dgt);
                if (dgt != 0) allzero = false;
            }
            if (allzero) continue;
            if (candidate(coeffs)) return out;
        }
    }
    out.status = FrobeniusStatus::AbsentWithinBound;
    return out;
}

}  // namespace corings
