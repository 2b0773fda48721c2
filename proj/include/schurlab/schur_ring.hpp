// The graded ring Lambda with the Schur basis as native representation:
// Littlewood-Richardson products, Pieri rules, Jacobi-Trudi conversions,
// Hopf structure, ideal reduction, and a monomial-expansion oracle.
#pragma once

#include <vector>

#include "schurlab/multipoly.hpp"
#include "schurlab/symfunc.hpp"

namespace schurlab {

// Littlewood-Richardson coefficient c^pi_{mu,nu} = #LR skew tableaux of
// shape pi/mu and content nu.
Int lr_coefficient(const Partition& pi, const Partition& mu, const Partition& nu);

// s_mu * s_nu in the Schur basis. Memoized process-wide on (mu, nu);
// concurrent reads are safe, inserts serialized, results deterministic.
SymFunc schur_product(const Partition& mu, const Partition& nu,
                      int max_degree = kDefaultMaxDegree);

SymFunc multiply(const SymFunc& f, const SymFunc& g,
                 int max_degree = kDefaultMaxDegree);

// h_p * s_pi: add p boxes, no two in the same column (horizontal strip).
SymFunc pieri_h(int p, const Partition& pi, int max_degree = kDefaultMaxDegree);
// e_p * s_pi: add p boxes, no two in the same row (vertical strip).
SymFunc pieri_e(int p, const Partition& pi, int max_degree = kDefaultMaxDegree);

enum class GenBasis { e, h };

struct GenFactor {
    GenBasis basis;
    int index; // >= 1
    bool operator==(const GenFactor&) const = default;
    auto operator<=>(const GenFactor&) const = default;
};
// A product of e/h generators, kept sorted; the empty word is the unit.
using GenWord = std::vector<GenFactor>;

struct SignedWord {
    Int coeff;
    GenWord word;
    bool operator==(const SignedWord&) const = default;
};

// Expand the listed generators into the Schur basis by iterated Pieri.
SymFunc from_generator_monomial(const GenWord& word,
                                int max_degree = kDefaultMaxDegree);

// Determinant expansion of the Jacobi-Trudi matrix for s_pi in the chosen
// basis: s_pi = det|h_{pi_i+j-i}| = det|e_{pi'_i+j-i}|. Index-0 entries are
// the unit, negative indices kill the term. Re-expanding the result through
// from_generator_monomial recovers s_pi exactly.
std::vector<SignedWord> jacobi_trudi(const Partition& pi, GenBasis basis);

// Delta(s_pi) = sum c^pi_{mu,nu} s_mu (x) s_nu, extended linearly.
TensorSymFunc coproduct(const SymFunc& f, int max_degree = kDefaultMaxDegree);

// Ring involution s_pi -> s_{pi'}.
SymFunc omega(const SymFunc& f);
// Hopf antipode: (-1)^n * omega on the degree-n component. Note the sign is
// forced by the antipode axiom even though omega alone is often quoted as S.
SymFunc antipode(const SymFunc& f);

// Normal form in Lambda/I_lambda: drop every term whose index contains lambda.
SymFunc reduce_mod_ideal(const SymFunc& f, const Partition& lambda);

// Evaluate f as a concrete symmetric polynomial in variables xi_1..xi_N via
// semistandard-tableau enumeration. Independent of the LR/Pieri machinery;
// partitions with more than N rows evaluate to 0.
MultiPoly monomial_expansion_oracle(const SymFunc& f, int num_vars);

// Product and multiplication-by-pure-tensor in Lambda (x) Lambda (Hopf tests).
TensorSymFunc tensor_multiply(const TensorSymFunc& a, const TensorSymFunc& b,
                              int max_degree = kDefaultMaxDegree);

} // namespace schurlab
