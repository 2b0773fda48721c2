// Universal lambda-operation polynomials in the formal symbols
// lambda^1 x ... lambda^N x and lambda^1 y ... lambda^N y.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "schurlab/numeric.hpp"

namespace schurlab {

// Monomial: exponents of lambda^i x and lambda^j y, trimmed.
struct LambdaMonomial {
    std::vector<int> x_exp; // x_exp[i-1] = exponent of lambda^i x
    std::vector<int> y_exp;

    void trim();
    // Weighted degree in x (sum of i * exponent) and in y.
    long x_weight() const;
    long y_weight() const;
    // Least i with a lambda^i x factor; 0 if none.
    int min_x_index() const;
    // Greatest i with a lambda^i x factor; 0 if none.
    int max_x_index() const;

    auto operator<=>(const LambdaMonomial&) const = default;
};

class LambdaPolynomial {
public:
    using Terms = std::map<LambdaMonomial, Int>;

    LambdaPolynomial() = default;
    static LambdaPolynomial x_power(int index, int exponent = 1, Int c = 1);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(LambdaMonomial m, const Int& c);
    LambdaPolynomial operator+(const LambdaPolynomial& o) const;
    LambdaPolynomial operator*(const LambdaPolynomial& o) const;
    bool operator==(const LambdaPolynomial& o) const = default;

    // Evaluate with xs[i] = lambda^i(x) (xs[0] the unit) and likewise ys.
    // Throws PreconditionError when a needed lambda-value is missing.
    template <class T, class Ops>
    T evaluate(const std::vector<T>& xs, const std::vector<T>& ys, const Ops& ops) const {
        T acc = ops.zero();
        for (auto& [m, c] : terms_) {
            T term = ops.scalar(c);
            for (size_t i = 0; i < m.x_exp.size(); ++i)
                for (int k = 0; k < m.x_exp[i]; ++k) {
                    if (i + 1 >= xs.size())
                        throw PreconditionError("lambda polynomial: missing lambda-value of x");
                    term = ops.mul(term, xs[i + 1]);
                }
            for (size_t j = 0; j < m.y_exp.size(); ++j)
                for (int k = 0; k < m.y_exp[j]; ++k) {
                    if (j + 1 >= ys.size())
                        throw PreconditionError("lambda polynomial: missing lambda-value of y");
                    term = ops.mul(term, ys[j + 1]);
                }
            acc = ops.add(acc, term);
        }
        return acc;
    }

    std::string to_string() const;

private:
    Terms terms_;
};

} // namespace schurlab
