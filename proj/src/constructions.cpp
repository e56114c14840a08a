#include "corings/constructions.hpp"

namespace corings {

namespace {

Matrix unit_column(const Algebra& a) {
    Matrix u(a.dim, 1, a.field);
    for (std::size_t i = 0; i < a.dim; ++i) u.set(i, 0, a.unit[i]);
    return u;
}

Matrix selector_row(std::size_t dim, std::size_t w, Field k) {
    Matrix s(1, dim, k);
    s.at(0, w) = 1;
    return s;
}

// sum_i e_i (x) e_i^* as a column in Sigma (x)_k Sigma^* coordinates
Matrix canonical_pair_column(const DualBasisWitness& w, std::size_t sigma_dim, Field k) {
    std::size_t dual_dim = w.dual.mod.dim;
    Matrix e(sigma_dim * dual_dim, 1, k);
    for (std::size_t t = 0; t < w.elements.size(); ++t)
        for (std::size_t i = 0; i < sigma_dim; ++i)
            for (std::size_t u = 0; u < dual_dim; ++u)
                e.at(i * dual_dim + u, 0) =
                    k.add(e.at(i * dual_dim + u, 0), k.mul(w.elements[t][i], w.functionals[t][u]));
    return e;
}

std::vector<Matrix> dual_functionals(const DualModule& d) {
    std::vector<Matrix> fns;
    for (std::size_t u = 0; u < d.mod.dim; ++u) {
        std::vector<Rat> e(d.mod.dim, Rat(0));
        e[u] = 1;
        fns.push_back(d.functional(e));
    }
    return fns;
}

Matrix project_pair(const TensorChain& carrier, const Matrix& ambient_formula) {
    return carrier.q.project.kron(carrier.q.project) * ambient_formula * carrier.q.lift;
}

}  // namespace

SweedlerCoring sweedler_coring(const AlgebraMap& alpha) {
    const Algebra& a = alpha.target;
    const Field& k = a.field;
    SweedlerCoring out;
    out.alpha = alpha;
    Bimodule left = restrict_right(regular_bimodule(a), alpha);
    Bimodule right = restrict_left(regular_bimodule(a), alpha);
    out.chain = tensor_chain({left, right});
    Matrix ida = Matrix::identity(a.dim, k);
    Matrix u = unit_column(a);
    Matrix g = kron_list({ida, u, u, ida}, k);
    Matrix comult = project_pair(out.chain, g);
    Matrix counit = a.mult_map() * out.chain.q.lift;
    out.coring = make_coring(a, out.chain.mod, comult, counit);
    return out;
}

BaseExtByMap base_ext_by_map(const Coring& d, const AlgebraMap& alpha) {
    if (!(d.base == alpha.source))
        throw std::invalid_argument("base_ext_by_map: coring base must be the map source");
    const Algebra& a = alpha.target;
    const Field& k = a.field;
    std::size_t na = a.dim, nd = d.dim();
    BaseExtByMap out;
    out.d = d;
    out.alpha = alpha;
    Bimodule left = restrict_right(regular_bimodule(a), alpha);
    Bimodule right = restrict_left(regular_bimodule(a), alpha);
    out.chain = tensor_chain({left, d.carrier, right});
    Matrix ida = Matrix::identity(na, k);
    Matrix u = unit_column(a);
    // (a, d, a') -> (a, d1, d2, 1, 1, a') -> (a, d1, 1, 1, d2, a')
    Matrix step = kron_list({ida, d.comult, u, u, ida}, k);
    Matrix perm = tensor_permutation({na, nd, nd, na, na, na}, {0, 1, 3, 4, 2, 5}, k);
    Matrix comult = project_pair(out.chain, perm * step);
    // counit: a alpha(eps_D(d)) a'
    Matrix counit_amb(na, na * nd * na, k);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t w = 0; w < nd; ++w) {
            std::vector<Rat> mid = alpha.matrix.apply(d.counit.column(w));
            for (std::size_t j = 0; j < na; ++j) {
                std::vector<Rat> ei(na, Rat(0)), ej(na, Rat(0));
                ei[i] = 1;
                ej[j] = 1;
                auto val = a.multiply(ei, a.multiply(mid, ej));
                counit_amb.set_column((i * nd + w) * na + j, val);
            }
        }
    out.coring = make_coring(a, out.chain.mod, comult, counit_amb * out.chain.q.lift);
    return out;
}

ComatrixCoring comatrix_coring(const Bimodule& sigma, const DualBasisWitness& w) {
    const Field& k = sigma.field();
    const Algebra& a = sigma.right_alg;
    ComatrixCoring out;
    out.sigma = sigma;
    out.dual = w.dual;
    out.witness = w;
    out.chain = tensor_chain({w.dual.mod, sigma});
    std::size_t ds = w.dual.mod.dim, ns = sigma.dim;
    Matrix ids = Matrix::identity(ns, k);
    Matrix idd = Matrix::identity(ds, k);
    Matrix e = canonical_pair_column(w, ns, k);
    // (s*, s) -> (s*, e, e*, s)
    Matrix step = kron_list({idd, e, ids}, k);
    Matrix comult = project_pair(out.chain, step);
    auto fns = dual_functionals(w.dual);
    Matrix counit_amb(a.dim, ds * ns, k);
    for (std::size_t u = 0; u < ds; ++u)
        for (std::size_t v = 0; v < ns; ++v)
            counit_amb.set_column(u * ns + v, fns[u].column(v));
    out.coring = make_coring(a, out.chain.mod, comult, counit_amb * out.chain.q.lift);
    return out;
}

BaseExtension base_ext_by_module(const Coring& d, const Bimodule& sigma,
                                 const DualBasisWitness& w) {
    if (!(sigma.left_alg == d.base))
        throw std::invalid_argument("base_ext_by_module: sigma must be a left module over the coring base");
    const Field& k = sigma.field();
    const Algebra& a = sigma.right_alg;
    std::size_t ds = w.dual.mod.dim, ns = sigma.dim, nd = d.dim();
    BaseExtension out;
    out.d = d;
    out.sigma = sigma;
    out.dual = w.dual;
    out.witness = w;
    out.chain = tensor_chain({w.dual.mod, d.carrier, sigma});
    Matrix ids = Matrix::identity(ns, k);
    Matrix idd = Matrix::identity(ds, k);
    Matrix e = canonical_pair_column(w, ns, k);
    // (s*, d, s) -> (s*, d1, d2, e, e*, s) -> (s*, d1, e, e*, d2, s)
    Matrix step = kron_list({idd, d.comult, e, ids}, k);
    Matrix perm = tensor_permutation({ds, nd, nd, ns, ds, ns}, {0, 1, 3, 4, 2, 5}, k);
    Matrix comult = project_pair(out.chain, perm * step);
    // counit: s*(eps_D(d) . s)
    auto fns = dual_functionals(w.dual);
    Matrix counit_amb(a.dim, ds * nd * ns, k);
    for (std::size_t u = 0; u < ds; ++u)
        for (std::size_t w2 = 0; w2 < nd; ++w2) {
            Matrix act = sigma.left_act_by(d.counit.column(w2));
            for (std::size_t v = 0; v < ns; ++v)
                counit_amb.set_column((u * nd + w2) * ns + v, fns[u].apply(act.column(v)));
        }
    out.coring = make_coring(a, out.chain.mod, comult, counit_amb * out.chain.q.lift);
    return out;
}

BaseExtension base_ext_by_module(const Coring& d, const Bimodule& sigma) {
    auto w = dual_basis(sigma);
    if (!w) throw NotProjectiveError("module has no finite dual basis on the right");
    return base_ext_by_module(d, sigma, *w);
}

CoringMorphism coring_functor_on_morphism(const BaseExtension& src, const BaseExtension& tgt,
                                          const CoringMorphism& f) {
    if (!(f.source == src.d) || !(f.target == tgt.d))
        throw std::invalid_argument("coring_functor_on_morphism: extension/morphism mismatch");
    if (src.sigma.dim != tgt.sigma.dim || src.dual.mod.dim != tgt.dual.mod.dim)
        throw std::invalid_argument("coring_functor_on_morphism: extensions use different modules");
    const Field& k = src.sigma.field();
    Matrix amb = Matrix::identity(src.dual.mod.dim, k)
                     .kron(f.matrix)
                     .kron(Matrix::identity(src.sigma.dim, k));
    return {src.coring, tgt.coring, src.chain.q.induce(tgt.chain.q, amb)};
}

CoringMorphism eps_coring_morphism(const BaseExtension& ext, const ComatrixCoring& comat) {
    const Field& k = ext.sigma.field();
    std::size_t ds = ext.dual.mod.dim, ns = ext.sigma.dim, nd = ext.d.dim();
    Matrix idd = Matrix::identity(ds, k);
    Matrix amb(ds * ns, ds * nd * ns, k);
    for (std::size_t w = 0; w < nd; ++w) {
        Matrix piece = kron_list(
            {idd, selector_row(nd, w, k), ext.sigma.left_act_by(ext.d.counit.column(w))}, k);
        amb = amb + piece;
    }
    return {ext.coring, comat.coring, ext.chain.q.induce(comat.chain.q, amb)};
}

CoringMorphism a_alpha_comparison(const BaseExtByMap& am, const BaseExtension& ext) {
    const Algebra& a = am.alpha.target;
    const Field& k = a.field;
    if (ext.sigma.dim != a.dim)
        throw std::invalid_argument("a_alpha_comparison: sigma must be A along alpha");
    // A -> Sigma^*, a |-> left multiplication by a
    Matrix m1(ext.dual.mod.dim, a.dim, k);
    for (std::size_t i = 0; i < a.dim; ++i) {
        auto coords = ext.dual.coordinates(a.left_mult(i));
        if (!coords) throw std::logic_error("a_alpha_comparison: left multiplication not dual");
        m1.set_column(i, *coords);
    }
    Matrix amb = m1.kron(Matrix::identity(am.d.dim(), k)).kron(Matrix::identity(a.dim, k));
    return {am.coring, ext.coring, am.chain.q.induce(ext.chain.q, amb)};
}

CompositionIso composition_iso(const Bimodule& sigma, const Bimodule& xi, const Coring& d) {
    const Field& k = sigma.field();
    auto wsig = dual_basis(sigma);
    if (!wsig) throw NotProjectiveError("sigma has no finite dual basis");
    auto wxi = dual_basis(xi);
    if (!wxi) throw NotProjectiveError("xi has no finite dual basis");

    CompositionIso out;
    out.inner = base_ext_by_module(d, xi, *wxi);
    out.outer = base_ext_by_module(out.inner.coring, sigma, *wsig);
    out.comp_chain = tensor_chain({xi, sigma});
    auto wcomp = dual_basis(out.comp_chain.mod);
    if (!wcomp) throw NotProjectiveError("xi (x) sigma has no finite dual basis");
    out.composite = base_ext_by_module(d, out.comp_chain.mod, *wcomp);

    std::size_t dss = wsig->dual.mod.dim;  // dim Sigma^*
    std::size_t dxs = wxi->dual.mod.dim;   // dim Xi^*
    std::size_t nd = d.dim();
    std::size_t nx = xi.dim, ns = sigma.dim;
    auto fns_s = dual_functionals(wsig->dual);
    auto fns_x = dual_functionals(wxi->dual);
    const Algebra& a = sigma.right_alg;

    // pairing (s* (x) x*) |-> [(x (x) s) |-> s*(x*(x) s)] in (Xi (x) Sigma)^*
    Matrix pair(out.composite.dual.mod.dim, dss * dxs, k);
    for (std::size_t u = 0; u < dss; ++u)
        for (std::size_t v = 0; v < dxs; ++v) {
            Matrix fn(a.dim, out.comp_chain.q.dim(), k);
            for (std::size_t c = 0; c < out.comp_chain.q.dim(); ++c) {
                std::vector<Rat> ambv = out.comp_chain.q.lift.column(c);
                std::vector<Rat> val(a.dim, Rat(0));
                for (std::size_t xidx = 0; xidx < nx; ++xidx)
                    for (std::size_t sidx = 0; sidx < ns; ++sidx) {
                        const Rat& coeff = ambv[xidx * ns + sidx];
                        if (coeff.is_zero()) continue;
                        std::vector<Rat> ex(nx, Rat(0)), es(ns, Rat(0));
                        ex[xidx] = 1;
                        es[sidx] = 1;
                        std::vector<Rat> b = fns_x[v].apply(ex);
                        auto img = fns_s[u].apply(sigma.left_act_by(b).apply(es));
                        val = add_vec(k, val, scale_vec(k, coeff, img));
                    }
                fn.set_column(c, val);
            }
            auto coords = out.composite.dual.coordinates(fn);
            if (!coords) throw std::logic_error("composition_iso: pairing left the dual space");
            pair.set_column(u * dxs + v, *coords);
        }

    Matrix expand = Matrix::identity(dss, k)
                        .kron(out.inner.chain.q.lift)
                        .kron(Matrix::identity(ns, k));
    Matrix phi5 = pair.kron(Matrix::identity(nd, k)).kron(out.comp_chain.q.project);
    Matrix amb = phi5 * expand;
    out.phi = {out.outer.coring, out.composite.coring,
               out.outer.chain.q.induce(out.composite.chain.q, amb)};
    return out;
}

CoringSum direct_sum_coring(const Coring& a, const Coring& b) {
    if (!(a.base == b.base)) throw std::invalid_argument("direct_sum_coring: base mismatch");
    const Field& k = a.field();
    std::size_t n1 = a.dim(), n2 = b.dim(), n = n1 + n2;
    Bimodule carrier;
    carrier.left_alg = a.base;
    carrier.right_alg = a.base;
    carrier.dim = n;
    carrier.allocate();
    for (std::size_t x = 0; x < a.base.dim; ++x)
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j) {
                carrier.l(x, i, j) = a.carrier.l(x, i, j);
                carrier.r(i, x, j) = a.carrier.r(i, x, j);
            }
    for (std::size_t x = 0; x < a.base.dim; ++x)
        for (std::size_t i = 0; i < n2; ++i)
            for (std::size_t j = 0; j < n2; ++j) {
                carrier.l(x, n1 + i, n1 + j) = b.carrier.l(x, i, j);
                carrier.r(n1 + i, x, n1 + j) = b.carrier.r(i, x, j);
            }
    Matrix comult(n * n, n, k);
    for (std::size_t c = 0; c < n1; ++c)
        for (std::size_t p = 0; p < n1; ++p)
            for (std::size_t q = 0; q < n1; ++q)
                comult.at(p * n + q, c) = a.comult.at(p * n1 + q, c);
    for (std::size_t c = 0; c < n2; ++c)
        for (std::size_t p = 0; p < n2; ++p)
            for (std::size_t q = 0; q < n2; ++q)
                comult.at((n1 + p) * n + (n1 + q), n1 + c) = b.comult.at(p * n2 + q, c);
    Matrix counit(a.base.dim, n, k);
    for (std::size_t c = 0; c < n1; ++c) counit.set_column(c, a.counit.column(c));
    for (std::size_t c = 0; c < n2; ++c) counit.set_column(n1 + c, b.counit.column(c));
    CoringSum out;
    out.sum = make_coring(a.base, carrier, comult, counit);
    Matrix i1(n, n1, k), i2(n, n2, k);
    for (std::size_t c = 0; c < n1; ++c) i1.at(c, c) = 1;
    for (std::size_t c = 0; c < n2; ++c) i2.at(n1 + c, c) = 1;
    out.inc1 = {a, out.sum, i1};
    out.inc2 = {b, out.sum, i2};
    return out;
}

CanonicalBicomodules canonical_bicomodule_structures(const BaseExtension& ext) {
    const Coring& d = ext.d;
    const Field& k = ext.sigma.field();
    std::size_t nd = d.dim(), ns = ext.sigma.dim, ds = ext.dual.mod.dim;
    Matrix ids = Matrix::identity(ns, k);
    Matrix idss = Matrix::identity(ds, k);
    Matrix idd = Matrix::identity(nd, k);
    Matrix e = canonical_pair_column(ext.witness, ns, k);
    const Matrix& qext = ext.chain.q.project;

    CanonicalBicomodules out;

    out.ds_chain = tensor_chain({d.carrier, ext.sigma});
    const Matrix& qm = out.ds_chain.q.project;
    const Matrix& lm = out.ds_chain.q.lift;
    // left coaction: d (x) s |-> d1 (x) (d2 (x) s)
    Matrix lambda = idd.kron(qm) * d.comult.kron(ids) * lm;
    // right coaction: d (x) s |-> (d1 (x) e_i) (x) (e_i^* (x) d2 (x) s)
    Matrix step = d.comult.kron(e).kron(ids);
    Matrix perm = tensor_permutation({nd, nd, ns, ds, ns}, {0, 2, 3, 1, 4}, k);
    Matrix rho = qm.kron(qext) * perm * step * lm;
    out.d_sigma = Bicomodule{
        out.ds_chain.mod,
        make_left_comodule(d, underlying_left_module(out.ds_chain.mod), lambda),
        make_comodule(ext.coring, underlying_right_module(out.ds_chain.mod), rho)};

    out.sd_chain = tensor_chain({ext.dual.mod, d.carrier});
    const Matrix& qn = out.sd_chain.q.project;
    const Matrix& ln = out.sd_chain.q.lift;
    // right coaction: s* (x) d |-> (s* (x) d1) (x) d2
    Matrix rho2 = qn.kron(idd) * idss.kron(d.comult) * ln;
    // left coaction: s* (x) d |-> (s* (x) d1 (x) e_i) (x) (e_i^* (x) d2)
    Matrix step2 = idss.kron(d.comult).kron(e);
    Matrix perm2 = tensor_permutation({ds, nd, nd, ns, ds}, {0, 1, 3, 4, 2}, k);
    Matrix lambda2 = qext.kron(qn) * perm2 * step2 * ln;
    out.sigma_dual_d = Bicomodule{
        out.sd_chain.mod,
        make_left_comodule(ext.coring, underlying_left_module(out.sd_chain.mod), lambda2),
        make_comodule(d, underlying_right_module(out.sd_chain.mod), rho2)};
    return out;
}

}  // namespace corings
