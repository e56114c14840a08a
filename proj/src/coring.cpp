#include "corings/coring.hpp"

#include <stdexcept>

namespace corings {

Coring make_coring(Algebra base, Bimodule carrier, Matrix comult, Matrix counit) {
    Coring c;
    c.base = std::move(base);
    c.carrier = std::move(carrier);
    c.comult = std::move(comult);
    c.counit = std::move(counit);
    if (!(c.carrier.left_alg == c.base) || !(c.carrier.right_alg == c.base))
        throw std::invalid_argument("coring: carrier algebras must equal the base");
    if (c.comult.rows() != c.carrier.dim * c.carrier.dim || c.comult.cols() != c.carrier.dim)
        throw std::invalid_argument("coring: comultiplication shape mismatch");
    if (c.counit.rows() != c.base.dim || c.counit.cols() != c.carrier.dim)
        throw std::invalid_argument("coring: counit shape mismatch");
    c.cc = tensor_chain({c.carrier, c.carrier});
    return c;
}

Coring trivial_coring(const Algebra& a) {
    Bimodule carrier = regular_bimodule(a);
    // Delta(a) = a (x) 1 in A (x)_k A
    Matrix comult(a.dim * a.dim, a.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            comult.set(i * a.dim + j, i, a.unit[j]);
    return make_coring(a, carrier, comult, Matrix::identity(a.dim, a.field));
}

Report check_coring(const Coring& c) {
    Report rep;
    rep.merge(check_bimodule(c.carrier), "carrier");
    const Field& k = c.field();
    std::size_t n = c.dim();
    Matrix idc = Matrix::identity(n, k);

    // counit is a bimodule map C -> A
    rep.merge(check_bimodule_map({c.carrier, regular_bimodule(c.base), c.counit}), "counit");

    // comultiplication is (A,A)-bilinear at quotient level
    const Matrix p = c.cc.q.project;
    bool ok = true;
    std::string wit;
    for (std::size_t a = 0; a < c.base.dim && ok; ++a) {
        Matrix lhs = p * c.comult * c.carrier.left_act(a);
        Matrix rhs = p * c.carrier.left_act(a).kron(idc) * c.comult;
        if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(a) + ")";
        }
    }
    rep.add("comult_left_linear", ok, wit);
    ok = true;
    wit.clear();
    for (std::size_t a = 0; a < c.base.dim && ok; ++a) {
        Matrix lhs = p * c.comult * c.carrier.right_act(a);
        Matrix rhs = p * idc.kron(c.carrier.right_act(a)) * c.comult;
        if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(a) + ")";
        }
    }
    rep.add("comult_right_linear", ok, wit);

    // coassociativity, evaluated as (C (x)_A C) (x)_A C: kill the relations
    // of the first pair by projecting, then compare up to the outer relations
    Matrix lhs3 = kron_apply(p, idc, kron_apply(c.comult, idc, c.comult));
    Matrix rhs3 = kron_apply(p, idc, kron_apply(idc, c.comult, c.comult));
    Matrix outer_rel = pair_relations(c.cc.mod, c.carrier);
    bool coassoc = columns_in_rowspace(outer_rel, lhs3 - rhs3);
    rep.add("coassociativity", coassoc, coassoc ? "" : first_difference(lhs3, rhs3));

    // counit identities, exact in C
    Matrix left = c.carrier.left_action_map() * c.counit.kron(idc) * c.comult;
    rep.add("left_counit", left == idc, first_difference(left, idc));
    Matrix right = c.carrier.right_action_map() * idc.kron(c.counit) * c.comult;
    rep.add("right_counit", right == idc, first_difference(right, idc));
    return rep;
}

Report check_coring_morphism(const CoringMorphism& f) {
    Report rep;
    if (!(f.source.base == f.target.base))
        throw std::invalid_argument("coring morphism: base mismatch");
    rep.merge(check_bimodule_map({f.source.carrier, f.target.carrier, f.matrix}), "bimodule_map");
    Matrix eps = f.target.counit * f.matrix;
    rep.add("counit_compatible", eps == f.source.counit,
            first_difference(eps, f.source.counit));
    const Matrix p = f.target.cc.q.project;
    Matrix lhs = p * f.target.comult * f.matrix;
    Matrix rhs = p * f.matrix.kron(f.matrix) * f.source.comult;
    rep.add("comult_compatible", lhs == rhs, first_difference(lhs, rhs));
    return rep;
}

CoringMorphism identity_coring_morphism(const Coring& c) {
    return {c, c, Matrix::identity(c.dim(), c.field())};
}

CoringMorphism compose(const CoringMorphism& g, const CoringMorphism& f) {
    if (!(f.target == g.source))
        throw std::invalid_argument("coring morphism compose: middle mismatch");
    return {f.source, g.target, g.matrix * f.matrix};
}

namespace {

AlgebraMap unit_inclusion(const Algebra& a) {
    Matrix m(a.dim, 1, a.field);
    for (std::size_t i = 0; i < a.dim; ++i) m.set(i, 0, a.unit[i]);
    return {ground_algebra(a.field), a, m};
}

}  // namespace

Bimodule underlying_right_module(const Bimodule& m) {
    return restrict_left(m, unit_inclusion(m.left_alg));
}

Bimodule underlying_left_module(const Bimodule& m) {
    return restrict_right(m, unit_inclusion(m.right_alg));
}

Comodule make_comodule(const Coring& c, Bimodule mod, Matrix coaction) {
    Comodule m;
    m.coring = c;
    m.mod = std::move(mod);
    m.coaction = std::move(coaction);
    if (!(m.mod.right_alg == c.base) || m.mod.left_alg.dim != 1)
        throw std::invalid_argument("comodule: carrier must be a right module over the base");
    if (m.coaction.rows() != m.mod.dim * c.dim() || m.coaction.cols() != m.mod.dim)
        throw std::invalid_argument("comodule: coaction shape mismatch");
    m.mc = tensor_chain({m.mod, c.carrier});
    return m;
}

LeftComodule make_left_comodule(const Coring& c, Bimodule mod, Matrix coaction) {
    LeftComodule m;
    m.coring = c;
    m.mod = std::move(mod);
    m.coaction = std::move(coaction);
    if (!(m.mod.left_alg == c.base) || m.mod.right_alg.dim != 1)
        throw std::invalid_argument("left comodule: carrier must be a left module over the base");
    if (m.coaction.rows() != c.dim() * m.mod.dim || m.coaction.cols() != m.mod.dim)
        throw std::invalid_argument("left comodule: coaction shape mismatch");
    m.cm = tensor_chain({c.carrier, m.mod});
    return m;
}

Comodule regular_comodule(const Coring& c) {
    return make_comodule(c, underlying_right_module(c.carrier), c.comult);
}

LeftComodule regular_left_comodule(const Coring& c) {
    return make_left_comodule(c, underlying_left_module(c.carrier), c.comult);
}

Comodule trivial_comodule(const Algebra& a) {
    return regular_comodule(trivial_coring(a));
}

Report check_comodule(const Comodule& m) {
    Report rep;
    rep.merge(check_bimodule(m.mod), "carrier");
    const Coring& c = m.coring;
    const Field& k = c.field();
    Matrix idm = Matrix::identity(m.mod.dim, k);
    Matrix idc = Matrix::identity(c.dim(), k);
    const Matrix p = m.mc.q.project;

    bool ok = true;
    std::string wit;
    for (std::size_t a = 0; a < c.base.dim && ok; ++a) {
        Matrix lhs = p * m.coaction * m.mod.right_act(a);
        Matrix rhs = p * idm.kron(c.carrier.right_act(a)) * m.coaction;
        if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(a) + ")";
        }
    }
    rep.add("coaction_right_linear", ok, wit);

    // coassociativity via (M (x)_A C) (x)_A C
    Matrix lhs = kron_apply(p, idc, kron_apply(m.coaction, idc, m.coaction));
    Matrix rhs = kron_apply(p, idc, kron_apply(idm, c.comult, m.coaction));
    Matrix outer_rel = pair_relations(m.mc.mod, c.carrier);
    bool coassoc = columns_in_rowspace(outer_rel, lhs - rhs);
    rep.add("coassociativity", coassoc, coassoc ? "" : first_difference(lhs, rhs));

    Matrix cu = m.mod.right_action_map() * idm.kron(c.counit) * m.coaction;
    rep.add("counit_identity", cu == idm, first_difference(cu, idm));
    return rep;
}

Report check_left_comodule(const LeftComodule& m) {
    Report rep;
    rep.merge(check_bimodule(m.mod), "carrier");
    const Coring& c = m.coring;
    const Field& k = c.field();
    Matrix idm = Matrix::identity(m.mod.dim, k);
    Matrix idc = Matrix::identity(c.dim(), k);
    const Matrix p = m.cm.q.project;

    bool ok = true;
    std::string wit;
    for (std::size_t a = 0; a < c.base.dim && ok; ++a) {
        Matrix lhs = p * m.coaction * m.mod.left_act(a);
        Matrix rhs = p * c.carrier.left_act(a).kron(idm) * m.coaction;
        if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(a) + ")";
        }
    }
    rep.add("coaction_left_linear", ok, wit);

    // coassociativity via C (x)_A (C (x)_A M)
    Matrix lhs = kron_apply(idc, p, kron_apply(c.comult, idm, m.coaction));
    Matrix rhs = kron_apply(idc, p, kron_apply(idc, m.coaction, m.coaction));
    Matrix outer_rel = pair_relations(c.carrier, m.cm.mod);
    bool coassoc = columns_in_rowspace(outer_rel, lhs - rhs);
    rep.add("coassociativity", coassoc, coassoc ? "" : first_difference(lhs, rhs));

    Matrix cu = m.mod.left_action_map() * c.counit.kron(idm) * m.coaction;
    rep.add("counit_identity", cu == idm, first_difference(cu, idm));
    return rep;
}

Report check_comodule_map(const ComoduleMap& f) {
    Report rep;
    if (!(f.source.coring == f.target.coring))
        throw std::invalid_argument("comodule map: coring mismatch");
    rep.merge(check_bimodule_map({f.source.mod, f.target.mod, f.matrix}), "module_map");
    const Coring& c = f.source.coring;
    Matrix idc = Matrix::identity(c.dim(), c.field());
    const Matrix p = f.target.mc.q.project;
    Matrix lhs = p * f.target.coaction * f.matrix;
    Matrix rhs = p * f.matrix.kron(idc) * f.source.coaction;
    rep.add("colinear", lhs == rhs, first_difference(lhs, rhs));
    return rep;
}

Matrix comodule_hom_basis(const Comodule& source, const Comodule& target) {
    if (!(source.coring == target.coring))
        throw std::invalid_argument("comodule hom: coring mismatch");
    const Coring& c = source.coring;
    const Field& k = c.field();
    std::size_t sd = source.mod.dim, td = target.mod.dim;
    Matrix idc = Matrix::identity(c.dim(), k);
    std::vector<std::vector<Rat>> rows;
    // right A-linearity: T * r_s(a) - r_t(a) * T = 0
    for (std::size_t a = 0; a < c.base.dim; ++a) {
        Matrix pre = source.mod.right_act(a);
        Matrix post = target.mod.right_act(a);
        for (std::size_t i = 0; i < td; ++i)
            for (std::size_t j = 0; j < sd; ++j) {
                std::vector<Rat> row(td * sd, Rat(0));
                for (std::size_t s = 0; s < sd; ++s)
                    row[i * sd + s] = k.add(row[i * sd + s], pre.at(s, j));
                for (std::size_t t = 0; t < td; ++t)
                    row[t * sd + j] = k.sub(row[t * sd + j], post.at(i, t));
                rows.push_back(std::move(row));
            }
    }
    // colinearity: p * rho_t * T - p * (T (x) C) * rho_s = 0; linear in T.
    const Matrix p = target.mc.q.project;
    Matrix left_part = p * target.coaction;  // q x td
    Matrix right_pre = source.coaction;      // (sd * nc) x sd
    std::size_t nc = c.dim();
    std::size_t q = p.rows();
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t j = 0; j < sd; ++j) {
            std::vector<Rat> row(td * sd, Rat(0));
            // (p * rho_t * T)(r, j) = sum_t left_part(r, t) T(t, j)
            for (std::size_t t = 0; t < td; ++t)
                row[t * sd + j] = k.add(row[t * sd + j], left_part.at(r, t));
            // (p * (T (x) idc) * rho_s)(r, j)
            // = sum_{s, u} p(r, t*nc+u) T(t, s) rho_s(s*nc+u, j)
            for (std::size_t t = 0; t < td; ++t)
                for (std::size_t s = 0; s < sd; ++s) {
                    Rat coeff(0);
                    for (std::size_t u = 0; u < nc; ++u)
                        coeff = k.add(coeff,
                                      k.mul(p.at(r, t * nc + u), right_pre.at(s * nc + u, j)));
                    row[t * sd + s] = k.sub(row[t * sd + s], coeff);
                }
            rows.push_back(std::move(row));
        }
    Matrix sys = Matrix::from_rows(rows, td * sd, k);
    return sys.kernel_basis();
}

Report check_bicomodule(const Bicomodule& m) {
    Report rep;
    rep.merge(check_bimodule(m.carrier), "carrier");
    rep.merge(check_left_comodule(m.left), "left");
    rep.merge(check_comodule(m.right), "right");
    const Field& k = m.carrier.field();
    if (m.left.mod.dim != m.carrier.dim || m.right.mod.dim != m.carrier.dim)
        throw std::invalid_argument("bicomodule: carrier dimension mismatch");
    const Coring& d = m.left.coring;
    const Coring& c = m.right.coring;
    Matrix idc = Matrix::identity(c.dim(), k);
    Matrix idd = Matrix::identity(d.dim(), k);

    // the right coaction is left B-linear, the left coaction right A-linear
    TensorChain mc = tensor_chain({m.carrier, c.carrier});
    bool ok = true;
    std::string wit;
    for (std::size_t b = 0; b < d.base.dim && ok; ++b) {
        Matrix lhs = mc.q.project * m.right.coaction * m.carrier.left_act(b);
        Matrix rhs = mc.q.project * m.carrier.left_act(b).kron(idc) * m.right.coaction;
        if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(b) + ")";
        }
    }
    rep.add("right_coaction_left_linear", ok, wit);

    TensorChain dm = tensor_chain({d.carrier, m.carrier});
    ok = true;
    wit.clear();
    for (std::size_t a = 0; a < c.base.dim && ok; ++a) {
        Matrix lhs = dm.q.project * m.left.coaction * m.carrier.right_act(a);
        Matrix rhs = dm.q.project * idd.kron(m.carrier.right_act(a)) * m.left.coaction;
        if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(a) + ")";
        }
    }
    rep.add("left_coaction_right_linear", ok, wit);

    // compatibility square, evaluated as (D (x)_B M) (x)_A C
    Matrix lhs = kron_apply(dm.q.project, idc, kron_apply(idd, m.right.coaction, m.left.coaction));
    Matrix rhs = kron_apply(dm.q.project, idc, kron_apply(m.left.coaction, idc, m.right.coaction));
    Matrix outer_rel = pair_relations(dm.mod, c.carrier);
    bool compat = columns_in_rowspace(outer_rel, lhs - rhs);
    rep.add("coactions_commute", compat, compat ? "" : first_difference(lhs, rhs));
    return rep;
}

CotensorSpace cotensor(const Comodule& m, const LeftComodule& n) {
    if (!(m.coring == n.coring))
        throw std::invalid_argument("cotensor: coring mismatch");
    const Coring& c = m.coring;
    const Field& k = c.field();
    CotensorSpace out;
    out.mn = tensor_chain({m.mod, n.mod});
    out.mcn = tensor_chain({m.mod, c.carrier, n.mod});
    Matrix idm = Matrix::identity(m.mod.dim, k);
    Matrix idn = Matrix::identity(n.mod.dim, k);
    Matrix diff = m.coaction.kron(idn) - idm.kron(n.coaction);
    if (!out.mn.q.descends(out.mcn.q, diff))
        throw std::logic_error("cotensor: omega is not balanced");
    out.omega = out.mn.q.induce(out.mcn.q, diff);
    out.basis = out.omega.kernel_basis();
    return out;
}

namespace {

DualRing dual_ring_impl(const Coring& c, bool right) {
    const Field& k = c.field();
    std::size_t n = c.dim();
    DualRing out;
    out.dual = right ? dual_module(c.carrier) : left_dual_module(c.carrier);
    std::size_t d = out.dual.mod.dim;
    std::vector<Matrix> fns;
    for (std::size_t u = 0; u < d; ++u) {
        std::vector<Rat> e(d, Rat(0));
        e[u] = 1;
        fns.push_back(out.dual.functional(e));
    }
    Algebra ring;
    ring.dim = d;
    ring.field = k;
    ring.mult.assign(d * d * d, Rat(0));
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            // convolution product of f_u and f_v as a map C -> A
            Matrix h(c.base.dim, n, k);
            for (std::size_t w = 0; w < n; ++w) {
                std::vector<Rat> acc(c.base.dim, Rat(0));
                std::vector<Rat> delta = c.comult.column(w);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const Rat& coeff = delta[p * n + q];
                        if (coeff.is_zero()) continue;
                        std::vector<Rat> ep(n, Rat(0)), eq(n, Rat(0));
                        ep[p] = 1;
                        eq[q] = 1;
                        std::vector<Rat> val;
                        if (right) {
                            // f(g(c_1) c_2)
                            std::vector<Rat> g1 = fns[v].apply(ep);
                            val = fns[u].apply(c.carrier.left_act_by(g1).apply(eq));
                        } else {
                            // f(c_1 g(c_2))
                            std::vector<Rat> g2 = fns[v].apply(eq);
                            val = fns[u].apply(c.carrier.right_act_by(g2).apply(ep));
                        }
                        acc = add_vec(k, acc, scale_vec(k, coeff, val));
                    }
                h.set_column(w, acc);
            }
            auto coords = out.dual.coordinates(h);
            if (!coords)
                throw std::logic_error("dual ring: convolution left the dual space");
            for (std::size_t t = 0; t < d; ++t) ring.c(u, v, t) = (*coords)[t];
        }
    auto unit = out.dual.coordinates(c.counit);
    if (!unit) throw std::logic_error("dual ring: counit is not in the dual space");
    ring.unit = *unit;
    out.ring = std::move(ring);
    return out;
}

}  // namespace

DualRing right_dual_ring(const Coring& c) { return dual_ring_impl(c, true); }

DualRing left_dual_ring(const Coring& c) { return dual_ring_impl(c, false); }

IotaEmbedding iota_embedding(const Coring& c) {
    IotaEmbedding out;
    out.left_dual = left_dual_ring(c);
    const Field& k = c.field();
    std::size_t d = out.left_dual.ring.dim;
    out.matrix = Matrix(d, c.base.dim, k);
    for (std::size_t a = 0; a < c.base.dim; ++a) {
        Matrix fn = c.counit * c.carrier.right_act(a);
        auto coords = out.left_dual.dual.coordinates(fn);
        if (!coords) throw std::logic_error("iota: image is not left linear");
        out.matrix.set_column(a, *coords);
    }
    Report rep;
    auto iota_unit = out.matrix.apply(c.base.unit);
    bool unit_ok = true;
    for (std::size_t t = 0; t < d; ++t)
        if (k.normalize(iota_unit[t]) != k.normalize(out.left_dual.ring.unit[t])) unit_ok = false;
    rep.add("unit_maps_to_counit", unit_ok);
    bool anti = true;
    std::string wit;
    for (std::size_t a = 0; a < c.base.dim && anti; ++a)
        for (std::size_t b = 0; b < c.base.dim && anti; ++b) {
            std::vector<Rat> ea(c.base.dim, Rat(0)), eb(c.base.dim, Rat(0));
            ea[a] = 1;
            eb[b] = 1;
            auto lhs = out.matrix.apply(c.base.multiply(ea, eb));
            auto rhs = out.left_dual.ring.multiply(out.matrix.apply(eb), out.matrix.apply(ea));
            for (std::size_t t = 0; t < d; ++t)
                if (k.normalize(lhs[t]) != k.normalize(rhs[t])) {
                    anti = false;
                    wit = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                    break;
                }
        }
    rep.add("anti_multiplicative", anti, wit);
    out.report = std::move(rep);
    return out;
}

}  // namespace corings
