// Universal lambda-ring operation polynomials: the product rule P_n with
// lambda^n(xy) = P_n(lambda^1 x,...; lambda^1 y,...), the composition rule
// P_{m,n} with lambda^m(lambda^n x) = P_{m,n}(lambda^1 x,...), and
// coproduct-driven evaluation at sums.
#pragma once

#include <vector>

#include "schurlab/lambda_poly.hpp"
#include "schurlab/schur_ring.hpp"

namespace schurlab {

// P_n, cached process-wide. Computed from the dual Cauchy identity
// e_n(xy) = sum_{|pi|=n} s_pi(x) s_{pi'}(y) with both Schur factors expanded
// through the e-basis Jacobi-Trudi determinant.
const LambdaPolynomial& product_polynomial(int n, int max_degree = kDefaultMaxDegree);

// P_{m,n} = e_m[e_n] rewritten in the e-basis, cached process-wide.
// Every monomial carries a factor lambda^i x with i >= n.
const LambdaPolynomial& composition_polynomial(int m, int n,
                                               int max_degree = kDefaultMaxDegree);

// Plethysm e_m[e_n] as an element of Lambda in the Schur basis (test hook and
// construction backend for composition_polynomial).
SymFunc elementary_plethysm(int m, int n, int max_degree = kDefaultMaxDegree);

// Evaluate phi in a lambda-ring given values[i] = lambda^i(x) (values[0] must
// be the unit): expands phi through e-basis Jacobi-Trudi words and multiplies
// them out in the host ring. Ring-homomorphic in phi.
template <class T, class Ops>
T evaluate_at_lambda_values(const SymFunc& phi, const std::vector<T>& values,
                            const Ops& ops) {
    T acc = ops.zero();
    for (auto& [pi, c] : phi.coeffs()) {
        for (auto& sw : jacobi_trudi(pi, GenBasis::e)) {
            T term = ops.scalar(c * sw.coeff);
            for (auto& factor : sw.word) {
                if (static_cast<size_t>(factor.index) >= values.size())
                    throw PreconditionError("evaluate_at_lambda_values: insufficient lambda-values");
                term = ops.mul(term, values[factor.index]);
            }
            acc = ops.add(acc, term);
        }
    }
    return acc;
}

// phi(x+y) = sum phi'_i(x) phi''_i(y) via the coproduct of phi.
template <class T, class Ops>
T apply_to_sum(const SymFunc& phi, const std::vector<T>& xs, const std::vector<T>& ys,
               const Ops& ops, int max_degree = kDefaultMaxDegree) {
    TensorSymFunc delta = coproduct(phi, max_degree);
    T acc = ops.zero();
    for (auto& [key, c] : delta.coeffs()) {
        T left = evaluate_at_lambda_values(SymFunc::schur(key.first), xs, ops);
        T right = evaluate_at_lambda_values(SymFunc::schur(key.second), ys, ops);
        acc = ops.add(acc, ops.mul(ops.scalar(c), ops.mul(left, right)));
    }
    return acc;
}

} // namespace schurlab
