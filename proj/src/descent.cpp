#include "corings/descent.hpp"

#include <string>

namespace corings {

namespace {

std::vector<Rat> unit_vec(std::size_t dim, std::size_t k, const Field& f) {
    std::vector<Rat> v(dim, Rat(0));
    v[k] = f.normalize(Rat(1));
    return v;
}

}  // namespace

Report check_general_coring_morphism(const GeneralCoringMorphism& g) {
    Report rep;
    rep.merge(check_algebra_map(g.alpha), "alpha");
    const Coring& d = g.source;
    const Coring& c = g.target;
    bool shape = g.gamma.rows() == c.dim() && g.gamma.cols() == d.dim() &&
                 g.alpha.source == d.base && g.alpha.target == c.base;
    rep.add("shape", shape);
    if (!rep.ok()) return rep;

    for (std::size_t b = 0; b < d.base.dim; ++b) {
        std::vector<Rat> ab = g.alpha.matrix.column(b);
        rep.add("left_linear[" + std::to_string(b) + "]",
                g.gamma * d.carrier.left_act(b) == c.carrier.left_act_by(ab) * g.gamma);
        rep.add("right_linear[" + std::to_string(b) + "]",
                g.gamma * d.carrier.right_act(b) == c.carrier.right_act_by(ab) * g.gamma);
    }
    rep.add("counit", g.alpha.matrix * d.counit == c.counit * g.gamma,
            first_difference(g.alpha.matrix * d.counit, c.counit * g.gamma));
    Matrix lhs = c.cc.q.project * (g.gamma.kron(g.gamma) * d.comult);
    Matrix rhs = c.comult_q() * g.gamma;
    rep.add("comult", lhs == rhs, first_difference(lhs, rhs));
    return rep;
}

DescentDatum make_descent_datum(const GeneralCoringMorphism& g, const Bimodule& x,
                                const Matrix& rho) {
    Bimodule xb = restrict_right(x, g.alpha);
    Bimodule ab = bimodule_along(g.alpha);
    TensorChain chain = tensor_chain({xb, g.source.carrier, ab});
    return {g, x, chain, rho};
}

Report check_descent_datum(const DescentDatum& d) {
    Report rep;
    const Coring& dc = d.morphism.source;
    const Algebra& a = d.morphism.alpha.target;
    const Field& f = a.field;
    std::size_t nx = d.x.dim, nd = dc.dim(), na = a.dim;
    bool shape = d.rho.rows() == d.chain.ambient_dim && d.rho.cols() == nx;
    rep.add("shape", shape);
    if (!shape) return rep;

    Matrix rho_q = d.chain.q.project * d.rho;
    for (std::size_t t = 0; t < na; ++t)
        rep.add("right_linear[" + std::to_string(t) + "]",
                rho_q * d.x.right_act(t) == d.chain.mod.right_act(t) * rho_q);

    // collapse D by its counit and act with the rightmost factor
    Matrix collapse(nx, d.chain.ambient_dim, f);
    for (std::size_t w = 0; w < nd; ++w) {
        std::vector<Rat> ew = d.morphism.alpha.matrix.apply(dc.counit.column(w));
        for (std::size_t v = 0; v < na; ++v) {
            Matrix act = d.x.right_act_by(a.multiply(ew, unit_vec(na, v, f)));
            for (std::size_t i = 0; i < nx; ++i) {
                std::vector<Rat> col = act.column(i);
                for (std::size_t k = 0; k < nx; ++k)
                    collapse.at(k, (i * nd + w) * na + v) = col[k];
            }
        }
    }
    Matrix round = collapse * d.rho;
    rep.add("counit_square", round == Matrix::identity(nx, f),
            first_difference(round, Matrix::identity(nx, f)));

    // both iterates of rho, compared in X (x) D (x) A (x) D (x) A with the
    // middle factor balanced over the smaller ring on both sides
    Bimodule abb = restrict_right(d.chain.factors[2], d.morphism.alpha);
    TensorChain ch5 = tensor_chain(
        {d.chain.factors[0], dc.carrier, abb, dc.carrier, d.chain.factors[2]});
    Matrix l1 = kron_list({Matrix::identity(nx, f), dc.comult, Matrix::identity(na, f)}, f);
    Matrix l2(ch5.ambient_dim, nx * nd * nd * na, f);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t w = 0; w < nd; ++w)
            for (std::size_t w2 = 0; w2 < nd; ++w2)
                for (std::size_t v = 0; v < na; ++v) {
                    std::size_t src = ((i * nd + w) * nd + w2) * na + v;
                    for (std::size_t u = 0; u < na; ++u)
                        if (!a.unit[u].is_zero())
                            l2.at((((i * nd + w) * na + u) * nd + w2) * na + v, src) = a.unit[u];
                }
    Matrix left = ch5.q.project * (l2 * (l1 * d.rho));
    Matrix right = ch5.q.project * (d.rho.kron(Matrix::identity(nd * na, f)) * d.rho);
    rep.add("coassoc_square", left == right, first_difference(left, right));
    return rep;
}

DescentContext descent_context(const GeneralCoringMorphism& g) {
    DescentContext ctx;
    ctx.morphism = g;
    ctx.am = base_ext_by_map(g.source, g.alpha);
    ctx.sw = sweedler_coring(g.alpha);
    const Coring& d = g.source;
    const Coring& c = g.target;
    const Algebra& a = g.alpha.target;
    const Field& f = a.field;
    std::size_t nd = d.dim(), na = a.dim;

    Matrix at(ctx.am.coring.dim(), nd, f);
    for (std::size_t w = 0; w < nd; ++w)
        at.set_column(w, ctx.am.chain.q.project.apply(
                             ctx.am.chain.pure({a.unit, unit_vec(nd, w, f), a.unit})));
    ctx.alpha_tilde = {d, ctx.am.coring, g.alpha, at};

    Matrix gt(c.dim(), ctx.am.coring.dim(), f);
    Matrix ea(ctx.sw.coring.dim(), ctx.am.coring.dim(), f);
    for (std::size_t q = 0; q < ctx.am.coring.dim(); ++q) {
        std::vector<Rat> amb = ctx.am.chain.q.lift.column(q);
        std::vector<Rat> gcol(c.dim(), Rat(0));
        std::vector<Rat> ecol(ctx.sw.coring.dim(), Rat(0));
        for (std::size_t u = 0; u < na; ++u)
            for (std::size_t w = 0; w < nd; ++w)
                for (std::size_t v = 0; v < na; ++v) {
                    const Rat& coeff = amb[(u * nd + w) * na + v];
                    if (coeff.is_zero()) continue;
                    std::vector<Rat> img = c.carrier.right_act_by(unit_vec(na, v, f))
                                               .apply(c.carrier.left_act_by(unit_vec(na, u, f))
                                                          .apply(g.gamma.column(w)));
                    gcol = add_vec(f, gcol, scale_vec(f, coeff, img));
                    std::vector<Rat> head =
                        a.multiply(unit_vec(na, u, f), g.alpha.matrix.apply(d.counit.column(w)));
                    std::vector<Rat> sv = ctx.sw.chain.q.project.apply(
                        ctx.sw.chain.pure({head, unit_vec(na, v, f)}));
                    ecol = add_vec(f, ecol, scale_vec(f, coeff, sv));
                }
        gt.set_column(q, gcol);
        ea.set_column(q, ecol);
    }
    ctx.gamma_tilde = {ctx.am.coring, c, gt};
    ctx.eps_alpha = {ctx.am.coring, ctx.sw.coring, ea};
    return ctx;
}

Comodule descent_to_comodule(const DescentContext& ctx, const DescentDatum& d) {
    const Coring& c = ctx.am.coring;
    const Algebra& a = ctx.morphism.alpha.target;
    const Field& f = a.field;
    std::size_t nx = d.x.dim, nd = ctx.morphism.source.dim(), na = a.dim;
    std::size_t nc = c.dim();

    std::vector<std::vector<Rat>> cls(nd * na);
    for (std::size_t w = 0; w < nd; ++w)
        for (std::size_t v = 0; v < na; ++v)
            cls[w * na + v] = ctx.am.chain.q.project.apply(
                ctx.am.chain.pure({a.unit, unit_vec(nd, w, f), unit_vec(na, v, f)}));

    Matrix co(nx * nc, nx, f);
    for (std::size_t j = 0; j < nx; ++j)
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t w = 0; w < nd; ++w)
                for (std::size_t v = 0; v < na; ++v) {
                    const Rat& coeff = d.rho.at((i * nd + w) * na + v, j);
                    if (coeff.is_zero()) continue;
                    const std::vector<Rat>& cv = cls[w * na + v];
                    for (std::size_t t = 0; t < nc; ++t)
                        if (!cv[t].is_zero()) co.at(i * nc + t, j) = f.add(co.at(i * nc + t, j),
                                                                     f.mul(coeff, cv[t]));
                }
    return make_comodule(c, d.x, co);
}

DescentDatum comodule_to_descent(const DescentContext& ctx, const Comodule& m) {
    const Coring& c = ctx.am.coring;
    const Algebra& a = ctx.morphism.alpha.target;
    const Field& f = a.field;
    std::size_t nx = m.mod.dim, nd = ctx.morphism.source.dim(), na = a.dim;
    std::size_t nc = c.dim();

    // right action of each ambient basis tensor after contracting the
    // leading algebra factor into the module
    Matrix rho(nx * nd * na, nx, f);
    for (std::size_t j = 0; j < nx; ++j)
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t t = 0; t < nc; ++t) {
                const Rat& coeff = m.coaction.at(i * nc + t, j);
                if (coeff.is_zero()) continue;
                std::vector<Rat> amb = ctx.am.chain.q.lift.column(t);
                for (std::size_t u = 0; u < na; ++u)
                    for (std::size_t w = 0; w < nd; ++w)
                        for (std::size_t v = 0; v < na; ++v) {
                            Rat c2 = f.mul(coeff, amb[(u * nd + w) * na + v]);
                            if (c2.is_zero()) continue;
                            std::vector<Rat> xi = m.mod.right_act(u).column(i);
                            for (std::size_t k = 0; k < nx; ++k)
                                if (!xi[k].is_zero())
                                    rho.at((k * nd + w) * na + v, j) =
                                        f.add(rho.at((k * nd + w) * na + v, j), f.mul(c2, xi[k]));
                        }
            }
    return make_descent_datum(ctx.morphism, m.mod, rho);
}

Report descent_diagram_check(const DescentContext& ctx, const std::vector<Comodule>& family) {
    Report rep;
    const Coring& d = ctx.morphism.source;
    const Algebra& a = ctx.morphism.alpha.target;
    const Field& f = a.field;
    std::size_t na = a.dim;

    rep.merge(check_general_coring_morphism(ctx.morphism), "gamma");
    rep.merge(check_general_coring_morphism(ctx.alpha_tilde), "alpha_tilde");
    rep.merge(check_coring_morphism(ctx.gamma_tilde), "gamma_tilde");
    rep.merge(check_coring_morphism(ctx.eps_alpha), "eps_alpha");

    rep.add("gamma_factorisation", ctx.gamma_tilde.matrix * ctx.alpha_tilde.gamma == ctx.morphism.gamma);

    Matrix classical(ctx.sw.coring.dim(), d.dim(), f);
    for (std::size_t w = 0; w < d.dim(); ++w)
        classical.set_column(
            w, ctx.sw.chain.q.project.apply(ctx.sw.chain.pure(
                   {ctx.morphism.alpha.matrix.apply(d.counit.column(w)), a.unit})));
    rep.add("counit_factorisation", ctx.eps_alpha.matrix * ctx.alpha_tilde.gamma == classical);

    Bimodule sig = bimodule_along(ctx.morphism.alpha);
    BaseExtension ext = base_ext_by_module(d, sig);
    CoringMorphism cmp = a_alpha_comparison(ctx.am, ext);
    std::optional<Matrix> inv = cmp.matrix.inverse();
    rep.add("comparison_invertible", inv.has_value());
    if (!inv) return rep;
    CoringMorphism to_am{ext.coring, ctx.am.coring, *inv};
    ModuleMorphism mm_am{ext, to_am};
    ModuleMorphism mm_c{ext, compose(ctx.gamma_tilde, to_am)};

    for (std::size_t k = 0; k < family.size(); ++k) {
        std::string tag = "[" + std::to_string(k) + "]";
        PushOutImage p0 = push_out_right(mm_am, family[k]);
        PushOutImage p1 = push_out_right(mm_c, family[k]);
        Comodule rerouted = corestrict(ctx.gamma_tilde, p0.result);
        rep.add("push_out_square" + tag, rerouted.coaction_q() == p1.result.coaction_q(),
                first_difference(rerouted.coaction_q(), p1.result.coaction_q()));

        // the counit collapse carries the extended coaction to the plain
        // base-change coaction y (x) s |-> (y (x) 1) (x) (1 (x) s)
        Comodule desc = corestrict(ctx.eps_alpha, p0.result);
        std::size_t nm = p0.result.mod.dim, nw = ctx.sw.coring.dim();
        Matrix canon(nm * nw, nm, f);
        for (std::size_t q = 0; q < nm; ++q) {
            std::vector<Rat> amb = p0.ms.q.lift.column(q);
            std::vector<Rat> col(nm * nw, Rat(0));
            for (std::size_t i = 0; i < family[k].mod.dim; ++i)
                for (std::size_t v = 0; v < na; ++v) {
                    const Rat& coeff = amb[i * na + v];
                    if (coeff.is_zero()) continue;
                    std::vector<Rat> m1 = p0.ms.q.project.apply(
                        p0.ms.pure({unit_vec(family[k].mod.dim, i, f), a.unit}));
                    std::vector<Rat> s1 = ctx.sw.chain.q.project.apply(
                        ctx.sw.chain.pure({a.unit, unit_vec(na, v, f)}));
                    for (std::size_t p = 0; p < nm; ++p)
                        for (std::size_t t = 0; t < nw; ++t)
                            col[p * nw + t] = f.add(col[p * nw + t],
                                                    f.mul(coeff, f.mul(m1[p], s1[t])));
                }
            canon.set_column(q, col);
        }
        Matrix canon_q = desc.mc.q.project * canon;
        rep.add("classical_square" + tag, desc.coaction_q() == canon_q,
                first_difference(desc.coaction_q(), canon_q));
    }
    if (family.empty()) rep.add("family_scope", true, "empty family: no functor squares checked");
    return rep;
}

}  // namespace corings
