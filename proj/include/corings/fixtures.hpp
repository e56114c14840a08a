#pragma once

#include <optional>

#include "corings/constructions.hpp"

namespace corings {

/// The n x n comatrix coalgebra over the ground field: basis e_{rc} with
/// comultiplication e_{rc} -> sum_t e_{rt} (x) e_{tc} and trace counit.
Coring matrix_coalgebra_coring(Field k, std::size_t n);

/// k[x]/(x^2).
Algebra dual_number_algebra(Field k);

/// The diagonal embedding of the ground field into k x k.
AlgebraMap diagonal_pair_map(Field k);

/// One member of the standard corpus: a base change alpha: B -> A, a
/// B-coring D and a (B,A)-bimodule Sigma with a finite dual basis.
struct Fixture {
    std::string name;
    Field field;
    AlgebraMap alpha;  // B -> A
    Coring d;          // over B
    Bimodule sigma;    // (B, A)
};

/// The five named families over one field:
///   F1 everything trivial, F2 the split pair k -> k x k, F3 the dual
///   numbers k -> k[x]/(x^2), F4 the 2x2 comatrix coalgebra with a free
///   rank 2 module, F5 a free rank 2 module over trivial data.
std::vector<Fixture> fixtures_for(Field k);

/// All families over Q, F_5 and F_7, in that order.
std::vector<Fixture> standard_fixtures();

std::optional<Fixture> fixture_named(const std::string& name);

}  // namespace corings
