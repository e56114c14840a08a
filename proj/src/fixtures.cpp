#include "corings/fixtures.hpp"

namespace corings {

Coring matrix_coalgebra_coring(Field k, std::size_t n) {
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

Algebra dual_number_algebra(Field k) {
    Algebra a;
    a.dim = 2;
    a.field = k;
    a.mult.assign(8, Rat(0));
    a.c(0, 0, 0) = 1;
    a.c(0, 1, 1) = 1;
    a.c(1, 0, 1) = 1;
    a.unit = {k.normalize(Rat(1)), Rat(0)};
    return a;
}

AlgebraMap diagonal_pair_map(Field k) {
    Algebra base = ground_algebra(k);
    Algebra two = direct_sum(base, base);
    Matrix diag(2, 1, k);
    diag.at(0, 0) = 1;
    diag.at(1, 0) = 1;
    return {base, two, diag};
}

namespace {

std::string field_tag(const Field& k) {
    if (k.is_rational()) return "Q";
    return "Fp" + std::to_string(k.characteristic());
}

AlgebraMap unit_embedding(const Algebra& a) {
    Matrix m(a.dim, 1, a.field);
    for (std::size_t i = 0; i < a.dim; ++i) m.at(i, 0) = a.unit[i];
    return {ground_algebra(a.field), a, m};
}

}  // namespace

std::vector<Fixture> fixtures_for(Field k) {
    std::vector<Fixture> out;
    Algebra ground = ground_algebra(k);
    Coring triv = trivial_coring(ground);
    std::string tag = "-" + field_tag(k);

    out.push_back({"F1" + tag, k, identity_map(ground), triv, free_bimodule(ground, 1)});

    AlgebraMap diag = diagonal_pair_map(k);
    out.push_back({"F2" + tag, k, diag, triv, bimodule_along(diag)});

    AlgebraMap dn = unit_embedding(dual_number_algebra(k));
    out.push_back({"F3" + tag, k, dn, triv, bimodule_along(dn)});

    out.push_back({"F4" + tag, k, identity_map(ground), matrix_coalgebra_coring(k, 2),
                   free_bimodule(ground, 2)});

    out.push_back({"F5" + tag, k, identity_map(ground), triv, free_bimodule(ground, 2)});
    return out;
}

std::vector<Fixture> standard_fixtures() {
    std::vector<Fixture> out;
    for (Field k : {Field::rationals(), Field::prime(5), Field::prime(7)})
        for (Fixture& f : fixtures_for(k)) out.push_back(std::move(f));
    return out;
}

std::optional<Fixture> fixture_named(const std::string& name) {
    for (Fixture& f : standard_fixtures())
        if (f.name == name) return std::move(f);
    return std::nullopt;
}

}  // namespace corings
