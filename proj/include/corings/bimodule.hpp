#pragma once

#include <optional>

#include "corings/algebra.hpp"
#include "corings/quotient.hpp"
#include "corings/report.hpp"

namespace corings {

/// (B,A)-bimodule with explicit action tensors in a distinguished basis:
///   b . m_i = sum_j l[b][i][j] m_j,   m_i . a = sum_j r[i][a][j] m_j.
struct Bimodule {
    Algebra left_alg;   // B
    Algebra right_alg;  // A
    std::size_t dim = 0;
    std::vector<Rat> left_action;   // l[b][i][j]
    std::vector<Rat> right_action;  // r[i][a][j]

    const Field& field() const { return left_alg.field; }

    const Rat& l(std::size_t b, std::size_t i, std::size_t j) const {
        return left_action[(b * dim + i) * dim + j];
    }
    Rat& l(std::size_t b, std::size_t i, std::size_t j) {
        return left_action[(b * dim + i) * dim + j];
    }
    const Rat& r(std::size_t i, std::size_t a, std::size_t j) const {
        return right_action[(i * right_alg.dim + a) * dim + j];
    }
    Rat& r(std::size_t i, std::size_t a, std::size_t j) {
        return right_action[(i * right_alg.dim + a) * dim + j];
    }

    Matrix left_act(std::size_t b) const;           // dim x dim
    Matrix right_act(std::size_t a) const;          // dim x dim
    Matrix left_act_by(const std::vector<Rat>& x) const;
    Matrix right_act_by(const std::vector<Rat>& x) const;

    /// Action as a linear map B (x) M -> M, shape dim x (dimB * dim).
    Matrix left_action_map() const;
    /// Action as a linear map M (x) A -> M, shape dim x (dim * dimA).
    Matrix right_action_map() const;

    void allocate();  // zero-fills action tensors for the current dims
};

/// The regular bimodule _A A _A.
Bimodule regular_bimodule(const Algebra& a);

/// A as a (B,A)-bimodule along an algebra map alpha: B -> A.
Bimodule bimodule_along(const AlgebraMap& alpha);

/// A right A-module presented as a bimodule with the trivial one-dimensional
/// left algebra (the ground field).
Bimodule right_module(const Algebra& a, std::size_t dim, std::vector<Rat> right_action);

/// Free module A^n with both-sided multiplication actions of A.
Bimodule free_bimodule(const Algebra& a, std::size_t n);

/// Replace the left algebra by pulling the action back along beta: B' -> B.
Bimodule restrict_left(const Bimodule& m, const AlgebraMap& beta);
Bimodule restrict_right(const Bimodule& m, const AlgebraMap& beta);

Report check_bimodule(const Bimodule& m);

struct BimoduleMap {
    Bimodule source;
    Bimodule target;
    Matrix matrix;
};

Report check_bimodule_map(const BimoduleMap& f);

/// Echelon basis of the space of (B,A)-bilinear maps source -> target;
/// each row is a flattened target.dim x source.dim matrix.
Matrix bimodule_hom_basis(const Bimodule& source, const Bimodule& target);

/// Multi-factor tensor product over the adjacent algebras
/// M_0 (x)_{R_0} M_1 (x)_{R_1} ... with R_t = right algebra of M_t
/// (= left algebra of M_{t+1}). The ambient space is the plain k-tensor
/// product of the carriers; `q` holds the balancing relations, and `mod`
/// is the induced (B,A)-bimodule structure on the quotient.
struct TensorChain {
    std::vector<Bimodule> factors;
    std::size_t ambient_dim = 0;
    QuotientSpace q;
    Bimodule mod;

    std::size_t flat(const std::vector<std::size_t>& idx) const;
    /// Ambient coordinates of the pure tensor of the given factor vectors.
    std::vector<Rat> pure(const std::vector<std::vector<Rat>>& parts) const;
};

TensorChain tensor_chain(const std::vector<Bimodule>& factors);

/// Kronecker product of a list of maps (empty list -> 1x1 identity).
Matrix kron_list(const std::vector<Matrix>& ms, Field field);

/// Permutation of tensor slots: target slot t is fed from source slot
/// perm[t]; dims are the source slot dimensions. Index convention is the
/// kron one (first slot most significant).
Matrix tensor_permutation(const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& perm, Field field);

/// (ms[0] (x) ... (x) ms[k-1]) * m without materialising the product.
Matrix kron_list_apply(const std::vector<Matrix>& ms, const Matrix& m);

/// Reduced-echelon relation rows of X (x)_R Y inside the plain tensor
/// product of the carriers (R = right algebra of X = left algebra of Y).
Matrix pair_relations(const Bimodule& x, const Bimodule& y);

/// Lifts a quotient-level map to ambient level: lift_tgt * f * project_src.
Matrix ambientize(const TensorChain& src, const TensorChain& tgt, const Matrix& f);

/// Dual module with the concrete functionals retained: column u of `embed`
/// is the u-th canonical dual basis vector as a flattened map matrix
/// (values.dim x module.dim, row-major).
struct DualModule {
    Bimodule mod;   // (A,B)-bimodule for the right dual of a (B,A)-bimodule
    Matrix embed;   // (values_dim * source_dim) x mod.dim
    std::size_t source_dim = 0;
    std::size_t values_dim = 0;

    /// Map matrix (values_dim x source_dim) of the functional with the
    /// given dual coordinates.
    Matrix functional(const std::vector<Rat>& coords) const;
    /// Dual coordinates of a concrete functional matrix; absent when the
    /// map is not in the dual (not linear over the algebra).
    std::optional<std::vector<Rat>> coordinates(const Matrix& fn) const;
};

/// Right dual Sigma^* = right-A-linear maps Sigma -> A, as an (A,B)-bimodule.
DualModule dual_module(const Bimodule& s);
/// Left dual ^*Sigma = left-B-linear maps Sigma -> B, as an (A,B)-bimodule.
DualModule left_dual_module(const Bimodule& s);

/// Finite dual basis {e_i, e_i^*} for Sigma_A: sum_i e_i . e_i^*(s) = s.
struct DualBasisWitness {
    std::vector<std::vector<Rat>> elements;     // in Sigma coordinates
    std::vector<std::vector<Rat>> functionals;  // in dual coordinates
    DualModule dual;
};

/// Absent result means Sigma_A is not finitely generated projective
/// (the identity is not in the image of the evaluation map).
std::optional<DualBasisWitness> dual_basis(const Bimodule& s);
/// Mirror for _B Sigma: sum_i g_i(s) . u_i = s with g_i in ^*Sigma.
std::optional<DualBasisWitness> left_dual_basis(const Bimodule& s);

/// B-bilinear kappa: Sigma (x)_A Sigma^* -> B with
/// kappa(sum_i e_i (x) e_i^*) = 1_B; the normalised separability witness.
struct SeparabilityWitness {
    Matrix kappa;        // dimB x quotient dim of Sigma (x)_A Sigma^*
    TensorChain space;   // Sigma (x)_A Sigma^*
    std::vector<Rat> canonical;  // quotient coords of sum_i e_i (x) e_i^*
};

std::optional<SeparabilityWitness> separable_bimodule_witness(const Bimodule& s,
                                                              const DualBasisWitness& w);

enum class FrobeniusStatus { Found, AbsentDimension, AbsentWithinBound };

struct FrobeniusWitness {
    FrobeniusStatus status = FrobeniusStatus::AbsentWithinBound;
    Matrix iso;          // dual coords of Sigma^* -> dual coords of ^*Sigma
    DualModule right_dual;
    DualModule left_dual;
};

/// Searches the space of (A,B)-bimodule maps Sigma^* -> ^*Sigma for an
/// invertible element: first single hom-basis elements, then integer
/// combinations with coefficients bounded by coeff_bound, in a fixed order.
FrobeniusWitness frobenius_bimodule_witness(const Bimodule& s, long coeff_bound = 2);

}  // namespace corings
