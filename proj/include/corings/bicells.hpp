#pragma once

#include "corings/constructions.hpp"

namespace corings {

/// 1-cell from (C : A) to (D : B): a (B,A)-bimodule Sigma together with an
/// entwining-style map D (x)_B Sigma -> Sigma (x)_A C, stored between the
/// computed quotient spaces.
struct OneCellRight {
    Coring c;        // over A
    Coring d;        // over B
    Bimodule sigma;  // (B, A)
    TensorChain ds;  // D (x)_B Sigma
    TensorChain sc;  // Sigma (x)_A C
    Matrix cell;     // sc quotient dim x ds quotient dim

    /// Representative on the ambient tensor spaces.
    Matrix cell_ambient() const { return sc.q.lift * cell * ds.q.project; }
};

/// Mirror 1-cell: an (A,B)-bimodule Xi with a map Xi (x)_B D -> C (x)_A Xi.
struct OneCellLeft {
    Coring c;    // over A
    Coring d;    // over B
    Bimodule xi; // (A, B)
    TensorChain xd;  // Xi (x)_B D
    TensorChain cx;  // C (x)_A Xi
    Matrix cell;     // cx quotient dim x xd quotient dim

    Matrix cell_ambient() const { return cx.q.lift * cell * xd.q.project; }
};

/// Builds the chains and projects the given ambient-level map; asserts the
/// map descends to the quotients.
OneCellRight make_one_cell_right(const Coring& c, const Coring& d,
                                 const Bimodule& sigma, const Matrix& ambient_cell);
OneCellLeft make_one_cell_left(const Coring& c, const Coring& d,
                               const Bimodule& xi, const Matrix& ambient_cell);

/// The identity 1-cell of a coring: the base algebra with the canonical
/// identification C (x)_A A = A (x)_A C.
OneCellRight identity_one_cell(const Coring& c);
OneCellLeft identity_one_cell_left(const Coring& c);

/// The 1-cell (A, s) attached to a coring morphism gamma: D -> C over
/// alpha: B -> A, with s: D (x)_B A -> A (x)_A C, d (x) a |-> 1 (x) gamma(d) a.
OneCellRight one_cell_from_coring_morphism(const Coring& c, const Coring& d,
                                           const AlgebraMap& alpha, const Matrix& gamma);

Report check_one_cell(const OneCellRight& s);
Report check_one_cell(const OneCellLeft& x);

/// 2-cell between parallel right 1-cells: a bilinear map D (x)_B Sigma -> Sigma~
/// compatible with both cells through the comultiplication of D.
struct TwoCell {
    OneCellRight source;
    OneCellRight target;
    Matrix map;  // target.sigma.dim x source.ds quotient dim

    Matrix map_ambient() const { return map * source.ds.q.project; }
};

Report check_two_cell(const TwoCell& t);

/// The identity 2-cell eps_D (x) Sigma of a 1-cell.
TwoCell identity_two_cell(const OneCellRight& s);

/// Vertical composition, evaluated through the unreduced form:
/// (b . a) = b o (D (x) a) o (Delta_D (x) Sigma).
TwoCell vcompose_two_cells(const TwoCell& b, const TwoCell& a);

/// Unreduced form: the bicolinear map (D (x) a) o (Delta_D (x) Sigma) from
/// D (x)_B Sigma to D (x)_B Sigma~, between the quotients of the ds chains.
Matrix two_cell_unreduce(const TwoCell& a);
/// Reduced form of a bicolinear map f: (eps_D (x) Sigma~) o f.
TwoCell two_cell_reduce(const OneCellRight& src, const OneCellRight& tgt, const Matrix& f);
/// Bilinearity plus left-D- and right-C-colinearity of an unreduced map.
Report check_unreduced_map(const OneCellRight& src, const OneCellRight& tgt, const Matrix& f);

/// 2-cell between parallel left 1-cells: Xi (x)_B D -> Xi~.
struct LeftTwoCell {
    OneCellLeft source;
    OneCellLeft target;
    Matrix map;  // target.xi.dim x source.xd quotient dim

    Matrix map_ambient() const { return map * source.xd.q.project; }
};

Report check_left_two_cell(const LeftTwoCell& t);

LeftTwoCell identity_left_two_cell(const OneCellLeft& x);
LeftTwoCell vcompose_left_two_cells(const LeftTwoCell& b, const LeftTwoCell& a);

/// Contravariant duality on objects: (Sigma, s) |-> (Sigma^*, s_*) with
/// s_*(s^* (x) d) = sum_i ((s^* (x) C) o s(d (x) e_i)) (x) e_i^*.
struct DualityImage {
    OneCellLeft cell;
    DualModule dual;
    DualBasisWitness witness;
};

DualityImage duality_on_object(const OneCellRight& s, const DualBasisWitness& w);

/// Duality on 2-cells: a: (Sigma,s) -> (Sigma~,s~) maps to
/// a_*: Sigma~^* (x) D -> Sigma^*, s~^* (x) d |-> sum_i s~^*(a(d (x) e_i)) e_i^*.
LeftTwoCell duality_on_morphism(const TwoCell& a, const DualityImage& src_img,
                                const DualityImage& tgt_img);

/// Reverse duality: (Xi, x) |-> (^*Xi, x^) using a left dual basis of Xi,
/// x^(d (x) g) = sum_i g_i (x) ((C (x) g) o x(u_i (x) d)).
struct CoDualityImage {
    OneCellRight cell;
    DualModule dual;
    DualBasisWitness witness;
};

CoDualityImage duality_on_object_left(const OneCellLeft& x, const DualBasisWitness& w);

/// Evaluation Sigma -> ^*(Sigma^*), s |-> [g |-> g(s)], in the coordinates of
/// the given double dual.
Matrix evaluation_map(const Bimodule& sigma, const DualModule& dual,
                      const DualModule& double_dual);

/// A bimodule with a finite dual basis plus a coring morphism Sigma[D] -> C.
struct ModuleMorphism {
    BaseExtension ext;     // Sigma[D], with witness and dual module
    CoringMorphism sigma;  // ext.coring -> C
};

Report check_module_morphism(const ModuleMorphism& m);

/// s_sigma(d (x) s) = sum_i e_i (x) sigma(e_i^* (x) d (x) s).
OneCellRight mm_to_one_cell(const ModuleMorphism& m);
/// sigma_s = (eval (x) C) o (Sigma^* (x) s).
ModuleMorphism one_cell_to_mm(const OneCellRight& s, const DualBasisWitness& w);

/// Horizontal composition of 1-cells: s from (C : A) to (D : B) and w from
/// (E : E0) to (C : A) compose to (Sigma (x)_A W, (Sigma (x) w) o (s (x) W))
/// from (E : E0) to (D : B).
OneCellRight hcompose_one_cells(const OneCellRight& s, const OneCellRight& w);
/// Horizontal composition of 2-cells over composable pairs.
TwoCell hcompose_two_cells(const TwoCell& a, const TwoCell& b);

/// Arrow of the representation category from (Sigma, sigma) to
/// (Sigma~, sigma~): an A-bilinear balanced map Sigma^* (x)_B D (x)_B Sigma~ -> A,
/// stored at ambient level.
struct RepArrow {
    ModuleMorphism source;
    ModuleMorphism target;
    Matrix map;  // A.dim x (dual dim * D.dim * target sigma dim)
};

/// Balancedness, bilinearity, and the comultiplication-compatibility
/// condition identifying rep arrows with dual 2-cells.
Report rep_condition_check(const RepArrow& f);

/// The identity arrow: the counit of Sigma[D].
RepArrow rep_identity(const ModuleMorphism& m);

/// (g <> f)(s^* (x) d (x) s^) = sum_j f(s^* (x) d_1 (x) e~_j) g(e~_j^* (x) d_2 (x) s^).
RepArrow rep_compose(const RepArrow& g, const RepArrow& f);

}  // namespace corings
