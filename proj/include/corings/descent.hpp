#pragma once

#include "corings/functors.hpp"

namespace corings {

/// Coring morphism over a change of base ring: gamma: D -> C compatible
/// with alpha: B -> A on actions, counits and comultiplications.
struct GeneralCoringMorphism {
    Coring source;     // over B
    Coring target;     // over A
    AlgebraMap alpha;  // B -> A
    Matrix gamma;      // target.dim x source.dim
};

Report check_general_coring_morphism(const GeneralCoringMorphism& g);

/// Right A-module X with a coaction-like map into X (x)_B D (x)_B A,
/// stored as an ambient-space representative.
struct DescentDatum {
    GeneralCoringMorphism morphism;
    Bimodule x;        // right A-module (trivial left algebra)
    TensorChain chain;  // X (x)_B D (x)_B A
    Matrix rho;         // chain.ambient_dim x x.dim
};

DescentDatum make_descent_datum(const GeneralCoringMorphism& g, const Bimodule& x,
                                const Matrix& rho);

/// Right A-linearity plus the two defining squares: collapsing D by its
/// counit and acting with the A factor recovers the identity, and the two
/// ways of iterating rho agree after inserting a unit between the two
/// D factors.
Report check_descent_datum(const DescentDatum& d);

/// The shared constructions attached to a morphism over a base change:
/// the extended coring A (x)_B D (x)_B A, the Sweedler coring of alpha,
/// and the three canonical morphisms between them.
struct DescentContext {
    GeneralCoringMorphism morphism;
    BaseExtByMap am;  // A (x)_B D (x)_B A
    SweedlerCoring sw;
    GeneralCoringMorphism alpha_tilde;  // D -> extended coring, d to 1 (x) d (x) 1
    CoringMorphism gamma_tilde;         // extended coring -> C
    CoringMorphism eps_alpha;           // extended coring -> A (x)_B A
};

DescentContext descent_context(const GeneralCoringMorphism& g);

/// A datum is the same thing as a comodule over the extended coring; the
/// two translations below are mutually inverse on the nose.
Comodule descent_to_comodule(const DescentContext& ctx, const DescentDatum& d);
DescentDatum comodule_to_descent(const DescentContext& ctx, const Comodule& m);

/// All compatibilities at once: the triangle gamma_tilde o alpha_tilde =
/// gamma, the counit collapse onto the Sweedler coring, and for every
/// family member the agreement of the two routes from D-comodules to
/// C-comodules (directly, and through the extended coring) together with
/// the classical module-level coaction.
Report descent_diagram_check(const DescentContext& ctx, const std::vector<Comodule>& family);

}  // namespace corings
