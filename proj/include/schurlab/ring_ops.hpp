// Value-semantic ring operation bundles used by the generic series and
// universal-polynomial evaluators.
#pragma once

#include "schurlab/multipoly.hpp"
#include "schurlab/schur_ring.hpp"
#include "schurlab/symfunc.hpp"

namespace schurlab {

struct IntOps {
    Int zero() const { return 0; }
    Int one() const { return 1; }
    Int scalar(const Int& c) const { return c; }
    Int add(const Int& a, const Int& b) const { return a + b; }
    Int mul(const Int& a, const Int& b) const { return a * b; }
    Int neg(const Int& a) const { return -a; }
    bool is_zero(const Int& a) const { return a == 0; }
};

struct MultiPolyOps {
    MultiPoly zero() const { return {}; }
    MultiPoly one() const { return MultiPoly::constant(1); }
    MultiPoly scalar(const Int& c) const { return MultiPoly::constant(c); }
    MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
    MultiPoly neg(const MultiPoly& a) const { return -a; }
    bool is_zero(const MultiPoly& a) const { return a.is_zero(); }
};

// Arithmetic in Lambda, or in Lambda/I_lambda when a quotient partition is
// set (products are reduced eagerly; I_lambda is a lambda-ideal).
struct SymFuncOps {
    int max_degree = kDefaultMaxDegree;
    bool reduce = false;
    Partition quotient;

    SymFunc normalize(SymFunc f) const {
        return reduce ? reduce_mod_ideal(f, quotient) : f;
    }
    SymFunc zero() const { return {}; }
    SymFunc one() const { return SymFunc::one(); }
    SymFunc scalar(const Int& c) const { return SymFunc::one() * c; }
    SymFunc add(const SymFunc& a, const SymFunc& b) const { return a + b; }
    SymFunc mul(const SymFunc& a, const SymFunc& b) const {
        return normalize(multiply(a, b, max_degree));
    }
    SymFunc neg(const SymFunc& a) const { return -a; }
    bool is_zero(const SymFunc& a) const { return a.is_zero(); }
};

} // namespace schurlab
