#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "corings/fixtures.hpp"
#include "corings/io.hpp"
#include "corings/properties.hpp"

using namespace corings;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    return read_file(path);
}

Document load(const std::string& path, const std::string& kind) {
    Document d = parse_document(slurp(path));
    if (d.kind != kind)
        throw std::runtime_error(path + ": expected a " + kind + " document, found " + d.kind);
    return d;
}

int finish(const Report& rep) {
    std::cout << rep.to_text();
    return rep.ok() ? 0 : 1;
}

int emit(const Document& doc, const std::string& out) {
    std::string text = serialize_document(doc);
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
    return 0;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Comodule> family_over(const Coring& c, const std::string& csv) {
    if (csv.empty()) return default_comodule_family(c);
    std::vector<Comodule> out;
    for (const std::string& path : split_list(csv)) {
        Document d = load(path, "comodule");
        if (!(d.comodule->coring == c))
            throw std::runtime_error(path + ": comodule is over a different coring");
        out.push_back(*d.comodule);
    }
    return out;
}

int run_check(const std::string& kind, const std::string& file) {
    if (kind == "algebra") return finish(check_algebra(*load(file, kind).algebra));
    if (kind == "bimodule") return finish(check_bimodule(*load(file, kind).bimodule));
    if (kind == "coring") return finish(check_coring(*load(file, kind).coring));
    if (kind == "comodule") return finish(check_comodule(*load(file, kind).comodule));
    if (kind == "one-cell") return finish(check_one_cell(*load(file, "one_cell").one_cell));
    if (kind == "two-cell") return finish(check_two_cell(*load(file, "two_cell").two_cell));
    if (kind == "descent")
        return finish(check_descent_datum(*load(file, "descent_datum").descent_datum));
    throw CLI::ValidationError("check", "unknown kind " + kind);
}

int run_props(const std::string& what, const std::string& coring_file,
              const std::string& mm_file, long coeff_bound) {
    if (what == "cosplit") return finish(cosplit_check(*load(coring_file, "coring").coring).report);
    if (what == "coseparable")
        return finish(coseparable_check(*load(coring_file, "coring").coring).report);
    if (what == "frobenius") {
        ModuleMorphism mm = *load(mm_file, "module_morphism").module_morphism;
        FrobeniusWitness fw = frobenius_bimodule_witness(mm.ext.sigma, coeff_bound);
        if (fw.status != FrobeniusStatus::Found) {
            Report rep;
            rep.add("module_self_dual", true,
                    fw.status == FrobeniusStatus::AbsentDimension
                        ? "dual dimensions differ"
                        : "no unimodular intertwiner within the coefficient bound");
            rep.verdict = Verdict::Absent;
            return finish(rep);
        }
        return finish(frobenius_chain(mm.ext, fw, coeff_bound).report);
    }
    throw CLI::ValidationError("props", "unknown property " + what);
}

int run_verify(const std::string& what, const std::string& mm_file, const std::string& mm2_file,
               const std::string& morphism_file, const std::string& cell_file,
               const std::string& comodule_file, const std::string& family_csv) {
    if (what == "adjunction") {
        ModuleMorphism mm = *load(mm_file, "module_morphism").module_morphism;
        Report rep;
        std::vector<Comodule> family = family_over(mm.ext.d, family_csv);
        for (std::size_t i = 0; i < family.size(); ++i) {
            Comodule n = push_out_right(mm, family[i]).result;
            rep.merge(verify_triangles(mm, family[i], n), "member[" + std::to_string(i) + "]");
        }
        rep.add("family_scope", true, "verified on the given family only");
        return finish(rep);
    }
    if (what == "theta") {
        ModuleMorphism mm = *load(mm_file, "module_morphism").module_morphism;
        return finish(theta_iso(mm).report);
    }
    if (what == "equivalence") {
        ModuleMorphism mm = *load(mm_file, "module_morphism").module_morphism;
        std::vector<Comodule> fam_d = family_over(mm.ext.d, family_csv);
        std::vector<Comodule> fam_c = default_comodule_family(mm.sigma.target);
        return finish(verify_equivalence_on(mm, fam_d, fam_c));
    }
    if (what == "naturality") {
        ModuleMorphism mm = *load(mm_file, "module_morphism").module_morphism;
        ModuleMorphism mt =
            mm2_file.empty() ? mm : *load(mm2_file, "module_morphism").module_morphism;
        TensorChain ds = tensor_chain({mm.ext.d.carrier, mm.ext.sigma});
        TensorChain dt = tensor_chain({mt.ext.d.carrier, mt.ext.sigma});
        if (ds.q.dim() != dt.q.dim())
            throw std::runtime_error("naturality: carriers of the two morphisms differ");
        Matrix phi = Matrix::identity(ds.q.dim(), mm.ext.coring.field());
        return finish(verify_naturality(mm, mt, phi, family_over(mm.ext.d, family_csv)));
    }
    if (what == "duality") {
        OneCellRight s = *load(cell_file, "one_cell").one_cell;
        Report rep;
        std::optional<DualBasisWitness> w = dual_basis(s.sigma);
        if (!w) {
            rep.add("finite_dual_basis", true, "module is not finitely generated projective");
            rep.verdict = Verdict::NotProjective;
            return finish(rep);
        }
        DualityImage img = duality_on_object(s, *w);
        rep.merge(check_one_cell(img.cell), "dual_cell");
        std::optional<DualBasisWitness> wl = left_dual_basis(img.dual.mod);
        if (!wl) {
            rep.add("finite_left_dual_basis", true, "dual has no finite left dual basis");
            rep.verdict = Verdict::NotProjective;
            return finish(rep);
        }
        CoDualityImage ddi = duality_on_object_left(img.cell, *wl);
        rep.merge(check_one_cell(ddi.cell), "double_dual_cell");
        Matrix ev = evaluation_map(s.sigma, img.dual, wl->dual);
        rep.add("evaluation_bijective", ev.inverse().has_value());
        const Field& f = s.c.field();
        Matrix idd = Matrix::identity(s.d.dim(), f);
        Matrix idc = Matrix::identity(s.c.dim(), f);
        Matrix lhs = ddi.cell.sc.q.project * ev.kron(idc) * s.sc.q.lift * s.cell;
        Matrix rhs = ddi.cell.cell * s.ds.q.induce(ddi.cell.ds.q, idd.kron(ev));
        rep.add("double_dual_identity", lhs == rhs, first_difference(lhs, rhs));
        return finish(rep);
    }
    if (what == "rep") {
        ModuleMorphism mm = *load(mm_file, "module_morphism").module_morphism;
        Report rep;
        RepArrow id = rep_identity(mm);
        rep.merge(rep_condition_check(id), "identity");
        RepArrow sq = rep_compose(id, id);
        rep.add("identity_idempotent", sq.map == id.map, first_difference(sq.map, id.map));
        return finish(rep);
    }
    if (what == "descent") {
        DescentDatum dd = *load(morphism_file, "descent_datum").descent_datum;
        DescentContext ctx = descent_context(dd.morphism);
        Report rep;
        rep.merge(check_descent_datum(dd), "datum");
        Comodule m = descent_to_comodule(ctx, dd);
        DescentDatum back = comodule_to_descent(ctx, m);
        rep.add("round_trip", dd.chain.q.project * dd.rho == back.chain.q.project * back.rho);
        rep.merge(descent_diagram_check(ctx, family_over(dd.morphism.source, family_csv)),
                  "diagram");
        return finish(rep);
    }
    if (what == "purity") {
        ModuleMorphism mm = *load(mm_file, "module_morphism").module_morphism;
        Comodule l = comodule_file.empty() ? regular_comodule(mm.sigma.target)
                                           : *load(comodule_file, "comodule").comodule;
        return finish(purity_check(mm, l));
    }
    throw CLI::ValidationError("verify", "unknown target " + what);
}

int run_construct(const std::string& what, const std::string& coring_file,
                  const std::string& map_file, const std::string& module_file,
                  const std::string& outer_file, const std::string& out) {
    if (what == "sweedler") {
        AlgebraMap alpha = *load(map_file, "algebra_map").algebra_map;
        return emit(document_of(sweedler_coring(alpha).coring), out);
    }
    if (what == "base-ext-map") {
        Coring d = *load(coring_file, "coring").coring;
        AlgebraMap alpha = *load(map_file, "algebra_map").algebra_map;
        return emit(document_of(base_ext_by_map(d, alpha).coring), out);
    }
    if (what == "comatrix") {
        Bimodule sigma = *load(module_file, "bimodule").bimodule;
        std::optional<DualBasisWitness> w = dual_basis(sigma);
        if (!w) {
            Report rep;
            rep.add("finite_dual_basis", true, "module is not finitely generated projective");
            rep.verdict = Verdict::NotProjective;
            return finish(rep);
        }
        return emit(document_of(comatrix_coring(sigma, *w).coring), out);
    }
    if (what == "base-ext-module") {
        Coring d = *load(coring_file, "coring").coring;
        Bimodule sigma = *load(module_file, "bimodule").bimodule;
        std::optional<DualBasisWitness> w = dual_basis(sigma);
        if (!w) {
            Report rep;
            rep.add("finite_dual_basis", true, "module is not finitely generated projective");
            rep.verdict = Verdict::NotProjective;
            return finish(rep);
        }
        return emit(document_of(base_ext_by_module(d, sigma, *w).coring), out);
    }
    if (what == "composition-iso") {
        Coring d = *load(coring_file, "coring").coring;
        Bimodule sigma = *load(module_file, "bimodule").bimodule;
        Bimodule xi = *load(outer_file, "bimodule").bimodule;
        CompositionIso iso = composition_iso(sigma, xi, d);
        Report rep;
        rep.merge(check_coring_morphism(iso.phi), "phi");
        rep.add("bijective", iso.phi.matrix.inverse().has_value());
        if (!rep.ok()) return finish(rep);
        return emit(document_of(iso.composite.coring), out);
    }
    throw CLI::ValidationError("construct", "unknown construction " + what);
}

int run_fixtures(const std::string& action, const std::string& field_str,
                 const std::string& family, const std::string& part, const std::string& out) {
    if (action == "list") {
        std::vector<Fixture> all;
        if (field_str.empty()) {
            all = standard_fixtures();
        } else if (field_str == "Q") {
            all = fixtures_for(Field::rationals());
        } else if (field_str.rfind("Fp:", 0) == 0) {
            all = fixtures_for(Field::prime(std::stol(field_str.substr(3))));
        } else {
            throw CLI::ValidationError("fixtures", "field must be Q or Fp:<p>");
        }
        for (const Fixture& f : all) std::cout << f.name << '\n';
        return 0;
    }
    if (action == "emit") {
        std::optional<Fixture> f = fixture_named(family);
        if (!f) throw std::runtime_error("no fixture named '" + family + "'");
        if (part == "alpha") return emit(document_of(f->alpha), out);
        if (part == "coring") return emit(document_of(f->d), out);
        if (part == "sigma") return emit(document_of(f->sigma), out);
        if (part == "base-ext")
            return emit(document_of(base_ext_by_module(f->d, f->sigma).coring), out);
        throw CLI::ValidationError("fixtures", "unknown part " + part);
    }
    throw CLI::ValidationError("fixtures", "unknown action " + action);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with corings built from module data"};
    app.require_subcommand(1);

    std::string kind, file, what, coring_file, map_file, module_file, outer_file, out;
    std::string mm_file, mm2_file, morphism_file, cell_file, comodule_file, family_csv;
    std::string fix_action, fix_field, fix_part = "base-ext";
    long coeff_bound = 2;

    CLI::App* check = app.add_subcommand("check", "run the axiom sweep for one document");
    check->add_option("kind", kind,
                      "algebra|bimodule|coring|comodule|one-cell|two-cell|descent")
        ->required();
    check->add_option("file", file, "document path, or - for standard input")->required();

    CLI::App* construct = app.add_subcommand("construct", "build an object and print it");
    construct->add_option("what", what,
                          "sweedler|base-ext-map|comatrix|base-ext-module|composition-iso")
        ->required();
    construct->add_option("--coring", coring_file, "coring document");
    construct->add_option("--map", map_file, "algebra map document");
    construct->add_option("--module", module_file, "bimodule document");
    construct->add_option("--outer", outer_file, "outer bimodule document");
    construct->add_option("--out", out, "write the result here instead of standard output");

    CLI::App* verify = app.add_subcommand("verify", "verify a structural statement");
    verify->add_option("what", what,
                       "adjunction|theta|equivalence|naturality|duality|rep|descent|purity")
        ->required();
    verify->add_option("--mm", mm_file, "module morphism document");
    verify->add_option("--mm2", mm2_file, "second module morphism document");
    verify->add_option("--morphism", morphism_file, "descent datum document");
    verify->add_option("--cell", cell_file, "one cell document");
    verify->add_option("--comodule", comodule_file, "comodule document");
    verify->add_option("--family", family_csv, "comma separated comodule documents");

    CLI::App* props = app.add_subcommand("props", "decide a property with a certificate");
    props->add_option("what", what, "cosplit|coseparable|frobenius")->required();
    props->add_option("--coring", coring_file, "coring document");
    props->add_option("--mm", mm_file, "module morphism document");
    props->add_option("--witness", map_file, "unused placeholder for external witnesses");
    props->add_option("--coeff-bound", coeff_bound, "search bound for intertwiner coefficients");

    CLI::App* fixtures = app.add_subcommand("fixtures", "standard corpus");
    fixtures->add_option("action", fix_action, "list|emit")->required();
    fixtures->add_option("--field", fix_field, "Q or Fp:<p>");
    fixtures->add_option("--family", family_csv, "fixture name, e.g. F4-Q");
    fixtures->add_option("--part", fix_part, "alpha|coring|sigma|base-ext");
    fixtures->add_option("--out", out, "write the result here instead of standard output");

    try {
        app.parse(argc, argv);
        if (check->parsed()) return run_check(kind, file);
        if (construct->parsed())
            return run_construct(what, coring_file, map_file, module_file, outer_file, out);
        if (verify->parsed())
            return run_verify(what, mm_file, mm2_file, morphism_file, cell_file, comodule_file,
                              family_csv);
        if (props->parsed()) return run_props(what, coring_file, mm_file, coeff_bound);
        if (fixtures->parsed())
            return run_fixtures(fix_action, fix_field, family_csv, fix_part, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
