#pragma once

#include <stdexcept>

#include "corings/coring.hpp"

namespace corings {

/// Raised when a construction needs a finite dual basis and the module is
/// not finitely generated projective on the relevant side.
struct NotProjectiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The Sweedler coring A (x)_B A of an algebra map alpha: B -> A.
struct SweedlerCoring {
    Coring coring;
    TensorChain chain;  // A (x)_B A
    AlgebraMap alpha;
};

SweedlerCoring sweedler_coring(const AlgebraMap& alpha);

/// Base ring extension of a B-coring D along alpha: B -> A, with carrier
/// A (x)_B D (x)_B A.
struct BaseExtByMap {
    Coring coring;
    TensorChain chain;
    Coring d;
    AlgebraMap alpha;
};

BaseExtByMap base_ext_by_map(const Coring& d, const AlgebraMap& alpha);

/// Comatrix coring Sigma^* (x)_B Sigma of a (B,A)-bimodule with a finite
/// dual basis.
struct ComatrixCoring {
    Coring coring;
    TensorChain chain;  // Sigma^* (x)_B Sigma
    DualModule dual;
    DualBasisWitness witness;
    Bimodule sigma;
};

ComatrixCoring comatrix_coring(const Bimodule& sigma, const DualBasisWitness& w);

/// Base ring extension by a module: the A-coring Sigma^* (x)_B D (x)_B Sigma.
struct BaseExtension {
    Coring coring;
    TensorChain chain;  // Sigma^* (x)_B D (x)_B Sigma
    DualModule dual;
    DualBasisWitness witness;
    Coring d;
    Bimodule sigma;
};

BaseExtension base_ext_by_module(const Coring& d, const Bimodule& sigma,
                                 const DualBasisWitness& w);
/// Convenience: computes the dual basis, raising NotProjectiveError.
BaseExtension base_ext_by_module(const Coring& d, const Bimodule& sigma);

/// Functor action on a coring morphism f: D -> D' over B; source and target
/// extensions must share sigma and witness.
CoringMorphism coring_functor_on_morphism(const BaseExtension& src, const BaseExtension& tgt,
                                          const CoringMorphism& f);

/// The morphism Sigma[D] -> Sigma^* (x)_B Sigma collapsing D by its counit.
CoringMorphism eps_coring_morphism(const BaseExtension& ext, const ComatrixCoring& comat);

/// Canonical comparison A_alpha[D] -> Sigma[D] when Sigma = A along alpha.
CoringMorphism a_alpha_comparison(const BaseExtByMap& am, const BaseExtension& ext);

/// Composition isomorphism phi: Sigma[Xi[D]] -> (Xi (x)_B Sigma)[D].
struct CompositionIso {
    BaseExtension inner;      // Xi[D] over B
    BaseExtension outer;      // Sigma[Xi[D]] over A
    BaseExtension composite;  // (Xi (x)_B Sigma)[D] over A
    TensorChain comp_chain;   // Xi (x)_B Sigma
    CoringMorphism phi;
};

CompositionIso composition_iso(const Bimodule& sigma, const Bimodule& xi, const Coring& d);

/// Direct sum of corings over the same base with the two inclusions.
struct CoringSum {
    Coring sum;
    CoringMorphism inc1;
    CoringMorphism inc2;
};

CoringSum direct_sum_coring(const Coring& a, const Coring& b);

/// The canonical coactions making D (x)_B Sigma a (D, Sigma[D])-bicomodule
/// and Sigma^* (x)_B D a (Sigma[D], D)-bicomodule.
struct CanonicalBicomodules {
    TensorChain ds_chain;      // D (x)_B Sigma
    Bicomodule d_sigma;        // (D, Sigma[D])
    TensorChain sd_chain;      // Sigma^* (x)_B D
    Bicomodule sigma_dual_d;   // (Sigma[D], D)
};

CanonicalBicomodules canonical_bicomodule_structures(const BaseExtension& ext);

}  // namespace corings
