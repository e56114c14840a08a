#pragma once

#include "corings/constructions.hpp"

namespace corings {

/// Invariant element search: c in C with a.c = c.a for all a and counit 1.
/// Verdict Absent carries a rank certificate of the inconsistent system.
struct InvariantResult {
    Report report;
    std::vector<Rat> element;  // coords in C when found
};

InvariantResult cosplit_check(const Coring& c);

/// Re-verifies invariance and counit-one for a candidate element.
Report invariant_condition_sweep(const Coring& c, const std::vector<Rat>& element);

/// Cointegral search: a bimodule map C (x)_A C -> C splitting the
/// comultiplication and bicolinear on both sides.
struct CointegralResult {
    Report report;
    Matrix nabla;  // c.dim x c.cc.q.dim quotient-level map when found
};

CointegralResult coseparable_check(const Coring& c);

/// Re-verifies split, bilinearity and both colinearity families for a
/// candidate quotient-level map.
Report cointegral_condition_sweep(const Coring& c, const Matrix& nabla);

/// Cointegral for Sigma^* (x) D (x) Sigma assembled from a normalised
/// separability map for Sigma and a cointegral for D; re-verified by the
/// full condition sweep rather than trusted.
struct TransportedCointegral {
    Matrix nabla;
    Report report;
};

TransportedCointegral transport_coseparable(const BaseExtension& ext,
                                            const SeparabilityWitness& kappa,
                                            const Matrix& nabla_d);

/// Invariant element of Sigma^* (x) D (x) Sigma from a section of the
/// evaluation on Sigma^* (x) Sigma and an invariant element of D.
struct TransportedInvariant {
    std::vector<Rat> element;
    Report report;
};

TransportedInvariant transport_cosplit(const BaseExtension& ext, const ComatrixCoring& comat,
                                       const std::vector<Rat>& section,
                                       const std::vector<Rat>& inv_d);

/// Converse direction: collapse an invariant element of Sigma^* (x) D (x)
/// Sigma by the counit of D into a section of the evaluation.
TransportedInvariant extract_separability_from_cosplit(const BaseExtension& ext,
                                                       const ComatrixCoring& comat,
                                                       const std::vector<Rat>& invariant);

/// Identification of Sigma^* (x) D (x) Sigma with the opposite of its own
/// left dual ring, assembled from a dual-module identification for Sigma
/// and a solved identification of D with the opposite of its left dual.
struct FrobeniusChainResult {
    Report report;
    Matrix sigma_d;             // D coords -> left dual coords of D
    Matrix z;                   // coring coords -> left dual ring coords
    std::vector<Matrix> transported_action;  // declared right action per dual basis element
};

FrobeniusChainResult frobenius_chain(const BaseExtension& ext, const FrobeniusWitness& gamma,
                                     long coeff_bound = 2);

}  // namespace corings
