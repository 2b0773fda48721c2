// Sparse multivariate polynomials over Int, and a light fraction type over them.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "schurlab/numeric.hpp"

namespace schurlab {

// Exponent vectors are stored trimmed (no trailing zeros), so a polynomial is
// independent of the ambient variable count. Variable names live in whatever
// context owns the polynomial.
using Exponents = std::vector<int>;

class MultiPoly {
public:
    using Terms = std::map<Exponents, Int>;

    MultiPoly() = default;
    static MultiPoly constant(Int c);
    static MultiPoly variable(int index); // 0-based
    static MultiPoly monomial(Exponents e, Int c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (0 if absent).
    Int constant_term() const;
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    int total_degree() const;
    long weighted_degree(const std::vector<int>& weights) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const Int& c) const;
    bool operator==(const MultiPoly& o) const = default;

    // Simultaneous substitution of polynomials for variables. Variables with
    // index beyond the table are left alone.
    MultiPoly substitute(const std::vector<MultiPoly>& values) const;

    // Extract the coefficient of var^k as a polynomial in the other variables.
    MultiPoly coefficient_of(int var, int k) const;
    int degree_in(int var) const;

    void add_term(const Exponents& e, const Int& c);

    std::string to_string(const std::vector<std::string>& names) const;

private:
    Terms terms_;
};

inline MultiPoly operator*(const Int& c, const MultiPoly& p) { return p * c; }

// Numerator/denominator pair over MultiPoly, normalized only by integer
// content and sign. Exact field arithmetic for Gaussian elimination over
// fraction fields of polynomial rings; equality goes via cross-multiplication.
class PolyFrac {
public:
    PolyFrac() : num_(), den_(MultiPoly::constant(1)) {}
    PolyFrac(MultiPoly num, MultiPoly den);
    static PolyFrac of(MultiPoly p) { return PolyFrac(std::move(p), MultiPoly::constant(1)); }
    static PolyFrac constant(Int c) { return of(MultiPoly::constant(std::move(c))); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    PolyFrac operator-() const;
    PolyFrac operator+(const PolyFrac& o) const;
    PolyFrac operator-(const PolyFrac& o) const;
    PolyFrac operator*(const PolyFrac& o) const;
    PolyFrac operator/(const PolyFrac& o) const;
    bool operator==(const PolyFrac& o) const;

private:
    MultiPoly num_, den_;
    void normalize();
};

} // namespace schurlab
