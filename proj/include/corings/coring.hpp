#pragma once

#include "corings/bimodule.hpp"

namespace corings {

/// A-coring: an (A,A)-bimodule C with a comultiplication into C (x)_A C and
/// a counit into A. The comultiplication is stored as a map into the ambient
/// C (x)_k C and projected; all axiom checks happen in the quotient, so any
/// representative of the same quotient-valued map is accepted.
struct Coring {
    Algebra base;       // A
    Bimodule carrier;   // (A,A)-bimodule C
    Matrix comult;      // (dim^2) x dim, ambient-valued
    Matrix counit;      // base.dim x dim
    TensorChain cc;     // C (x)_A C

    std::size_t dim() const { return carrier.dim; }
    const Field& field() const { return base.field; }
    /// Quotient-valued comultiplication cc.q.dim x dim.
    Matrix comult_q() const { return cc.q.project * comult; }

    bool operator==(const Coring& o) const {
        return base == o.base && carrier.left_action == o.carrier.left_action &&
               carrier.right_action == o.carrier.right_action && carrier.dim == o.carrier.dim &&
               comult_q() == o.comult_q() && counit == o.counit;
    }
};

/// Builds the C (x)_A C chain; comult given at ambient level.
Coring make_coring(Algebra base, Bimodule carrier, Matrix comult, Matrix counit);

/// C = A with the canonical comultiplication A ≅ A (x)_A A and counit id.
Coring trivial_coring(const Algebra& a);

Report check_coring(const Coring& c);

/// Morphism of corings over the same base.
struct CoringMorphism {
    Coring source;
    Coring target;
    Matrix matrix;  // target.dim x source.dim
};

Report check_coring_morphism(const CoringMorphism& f);

CoringMorphism identity_coring_morphism(const Coring& c);
CoringMorphism compose(const CoringMorphism& g, const CoringMorphism& f);

/// The underlying one-sided modules of a bimodule, with the other action
/// restricted to the ground field.
Bimodule underlying_right_module(const Bimodule& m);
Bimodule underlying_left_module(const Bimodule& m);

/// Right comodule over a coring: a right A-module M with a coaction valued
/// in the ambient M (x)_k C, considered up to the M (x)_A C relations.
struct Comodule {
    Coring coring;
    Bimodule mod;       // (k, A)-bimodule
    Matrix coaction;    // (mod.dim * C.dim) x mod.dim, ambient-valued
    TensorChain mc;     // M (x)_A C

    Matrix coaction_q() const { return mc.q.project * coaction; }
};

struct LeftComodule {
    Coring coring;
    Bimodule mod;       // (A, k)-bimodule
    Matrix coaction;    // (C.dim * mod.dim) x mod.dim, ambient-valued
    TensorChain cm;     // C (x)_A M

    Matrix coaction_q() const { return cm.q.project * coaction; }
};

Comodule make_comodule(const Coring& c, Bimodule mod, Matrix coaction);
LeftComodule make_left_comodule(const Coring& c, Bimodule mod, Matrix coaction);

/// C as a comodule over itself via the comultiplication.
Comodule regular_comodule(const Coring& c);
LeftComodule regular_left_comodule(const Coring& c);

/// A as the comodule over the trivial coring (the identity coaction).
Comodule trivial_comodule(const Algebra& a);

Report check_comodule(const Comodule& m);
Report check_left_comodule(const LeftComodule& m);

struct ComoduleMap {
    Comodule source;
    Comodule target;
    Matrix matrix;
};

Report check_comodule_map(const ComoduleMap& f);

/// Echelon basis of right-A-linear colinear maps source -> target, rows
/// flattened target.dim x source.dim.
Matrix comodule_hom_basis(const Comodule& source, const Comodule& target);

/// (B,A)-bimodule carrying a left D-coaction and a right C-coaction.
struct Bicomodule {
    Bimodule carrier;       // (B,A)
    LeftComodule left;      // over D, on underlying_left_module(carrier)
    Comodule right;         // over C, on underlying_right_module(carrier)
};

Report check_bicomodule(const Bicomodule& m);

/// Cotensor product M [] N = ker(omega), omega = rho^M (x) N - M (x) rho^N,
/// computed inside the quotient M (x)_A N.
struct CotensorSpace {
    TensorChain mn;     // M (x)_A N
    TensorChain mcn;    // M (x)_A C (x)_A N
    Matrix omega;       // mcn.q.dim x mn.q.dim
    Matrix basis;       // rows: echelon kernel basis in mn quotient coords
};

CotensorSpace cotensor(const Comodule& m, const LeftComodule& n);

/// Convolution algebra on the right dual: (f*g)(c) = sum f(g(c_1) c_2).
struct DualRing {
    Algebra ring;
    DualModule dual;  // functionals realising the basis
};

DualRing right_dual_ring(const Coring& c);
/// (f*g)(c) = sum f(c_1 g(c_2)) on the left dual.
DualRing left_dual_ring(const Coring& c);

/// a |-> [c |-> counit(c . a)], an anti-algebra map into the left dual ring.
struct IotaEmbedding {
    DualRing left_dual;
    Matrix matrix;   // left dual dim x base dim
    Report report;   // unit image and anti-multiplicativity
};

IotaEmbedding iota_embedding(const Coring& c);

}  // namespace corings
