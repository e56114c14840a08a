#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corings/descent.hpp"

using namespace corings;

namespace {

AlgebraMap diagonal_pair(Field k) {
    Algebra base = ground_algebra(k);
    Algebra two = direct_sum(base, base);
    Matrix diag(2, 1, k);
    diag.at(0, 0) = 1;
    diag.at(1, 0) = 1;
    return {base, two, diag};
}

GeneralCoringMorphism into_sweedler(const AlgebraMap& alpha) {
    Coring d = trivial_coring(alpha.source);
    SweedlerCoring sw = sweedler_coring(alpha);
    Matrix gamma(sw.coring.dim(), 1, alpha.source.field);
    gamma.set_column(0, sw.chain.q.project.apply(
                            sw.chain.pure({alpha.target.unit, alpha.target.unit})));
    return {d, sw.coring, alpha, gamma};
}

Coring matrix_coalgebra(Field k, std::size_t n) {
    Algebra base = ground_algebra(k);
    std::size_t d = n * n;
    Bimodule carrier = free_bimodule(base, d);
    Matrix comult(d * d, d, k);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t t = 0; t < n; ++t)
                comult.at((r * n + t) * d + (t * n + c), r * n + c) = 1;
    Matrix counit(1, d, k);
    for (std::size_t r = 0; r < n; ++r) counit.at(0, r * n + r) = 1;
    return make_coring(base, carrier, comult, counit);
}

}  // namespace

TEST_CASE("identity morphism over the ground field") {
    Field q = Field::rationals();
    Coring d = trivial_coring(ground_algebra(q));
    GeneralCoringMorphism g{d, d, identity_map(ground_algebra(q)),
                            Matrix::identity(1, q)};
    CHECK(check_general_coring_morphism(g).ok());
    DescentContext ctx = descent_context(g);
    Comodule m = regular_comodule(ctx.am.coring);
    DescentDatum dd = comodule_to_descent(ctx, m);
    CHECK(check_descent_datum(dd).ok());
    Comodule back = descent_to_comodule(ctx, dd);
    CHECK(back.coaction_q() == m.coaction_q());
}

TEST_CASE("diagonal base change into its own base change coring") {
    Field q = Field::rationals();
    GeneralCoringMorphism g = into_sweedler(diagonal_pair(q));
    CHECK(check_general_coring_morphism(g).ok());
    DescentContext ctx = descent_context(g);
    CHECK(check_coring_morphism(ctx.gamma_tilde).ok());
    CHECK(check_coring_morphism(ctx.eps_alpha).ok());

    Comodule m = regular_comodule(ctx.am.coring);
    DescentDatum dd = comodule_to_descent(ctx, m);
    CHECK(check_descent_datum(dd).ok());
    Comodule back = descent_to_comodule(ctx, dd);
    CHECK(back.coaction_q() == m.coaction_q());
    DescentDatum dd2 = comodule_to_descent(ctx, back);
    CHECK(dd.chain.q.project * dd.rho == dd2.chain.q.project * dd2.rho);
}

TEST_CASE("perturbed structure map is rejected") {
    Field q = Field::rationals();
    GeneralCoringMorphism g = into_sweedler(diagonal_pair(q));
    DescentContext ctx = descent_context(g);
    DescentDatum dd = comodule_to_descent(ctx, regular_comodule(ctx.am.coring));
    dd.rho.at(0, 0) = q.add(dd.rho.at(0, 0), Rat(1));
    CHECK_FALSE(check_descent_datum(dd).ok());
}

TEST_CASE("matrix coalgebra source over the identity base change") {
    Field q = Field::rationals();
    Coring d = matrix_coalgebra(q, 2);
    GeneralCoringMorphism g{d, d, identity_map(ground_algebra(q)),
                            Matrix::identity(d.dim(), q)};
    CHECK(check_general_coring_morphism(g).ok());
    DescentContext ctx = descent_context(g);
    Comodule m = regular_comodule(ctx.am.coring);
    DescentDatum dd = comodule_to_descent(ctx, m);
    CHECK(check_descent_datum(dd).ok());
    Comodule back = descent_to_comodule(ctx, dd);
    CHECK(back.coaction_q() == m.coaction_q());
}

TEST_CASE("diagram of canonical morphisms and functor squares") {
    Field q = Field::rationals();
    GeneralCoringMorphism g = into_sweedler(diagonal_pair(q));
    DescentContext ctx = descent_context(g);
    std::vector<Comodule> family = default_comodule_family(g.source);
    Report rep = descent_diagram_check(ctx, family);
    CHECK(rep.ok());
}

TEST_CASE("base change along a free extension is an equivalence on the family") {
    Field q = Field::rationals();
    GeneralCoringMorphism g = into_sweedler(diagonal_pair(q));
    DescentContext ctx = descent_context(g);
    Bimodule sig = bimodule_along(g.alpha);
    BaseExtension ext = base_ext_by_module(g.source, sig);
    CoringMorphism cmp = a_alpha_comparison(ctx.am, ext);
    auto inv = cmp.matrix.inverse();
    REQUIRE(inv.has_value());
    ModuleMorphism mm{ext, CoringMorphism{ext.coring, ctx.am.coring, *inv}};
    CHECK(check_module_morphism(mm).ok());
    std::vector<Comodule> family_d = default_comodule_family(g.source);
    std::vector<Comodule> family_c = default_comodule_family(ctx.am.coring);
    CHECK(verify_equivalence_on(mm, family_d, family_c).ok());
}
