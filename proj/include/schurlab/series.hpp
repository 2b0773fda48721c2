// Truncated power series over an arbitrary host ring.
#pragma once

#include <vector>

#include "schurlab/numeric.hpp"

namespace schurlab {

// Coefficient list [c_0, c_1, ..., c_len-1]; the host ring only needs
// value-semantic +, -, * and an is_zero test supplied via Ops.
//
// Ops requirements:
//   T    Ops::one() const
//   T    Ops::zero() const
//   T    Ops::add(const T&, const T&) const
//   T    Ops::mul(const T&, const T&) const
//   T    Ops::neg(const T&) const
//   bool Ops::is_zero(const T&) const
template <class T>
using Series = std::vector<T>;

template <class T, class Ops>
Series<T> series_from_lambdas(const std::vector<T>& values, const Ops& ops, size_t len) {
    if (values.empty() || !ops.is_zero(ops.add(values[0], ops.neg(ops.one()))))
        throw PreconditionError("series: constant term must be the unit");
    Series<T> out;
    out.reserve(len);
    for (size_t i = 0; i < len; ++i)
        out.push_back(i < values.size() ? values[i] : ops.zero());
    return out;
}

template <class T, class Ops>
Series<T> series_multiply(const Series<T>& f, const Series<T>& g, const Ops& ops, size_t len) {
    Series<T> out(len, ops.zero());
    for (size_t i = 0; i < f.size() && i < len; ++i) {
        if (ops.is_zero(f[i])) continue;
        for (size_t j = 0; j < g.size() && i + j < len; ++j) {
            if (ops.is_zero(g[j])) continue;
            out[i + j] = ops.add(out[i + j], ops.mul(f[i], g[j]));
        }
    }
    return out;
}

// Inverse of a series with constant term 1, by the usual recursion
// b_n = -sum_{k=1..n} a_k b_{n-k}.
template <class T, class Ops>
Series<T> series_invert(const Series<T>& f, const Ops& ops, size_t len) {
    if (f.empty() || !ops.is_zero(ops.add(f[0], ops.neg(ops.one()))))
        throw PreconditionError("series_invert: constant term must be the unit");
    Series<T> out(len, ops.zero());
    if (len == 0) return out;
    out[0] = ops.one();
    for (size_t n = 1; n < len; ++n) {
        T acc = ops.zero();
        for (size_t k = 1; k <= n && k < f.size(); ++k)
            acc = ops.add(acc, ops.mul(f[k], out[n - k]));
        out[n] = ops.neg(acc);
    }
    return out;
}

template <class T, class Ops>
Series<T> series_power(const Series<T>& f, long e, const Ops& ops, size_t len) {
    Series<T> base = f;
    if (e < 0) {
        base = series_invert(f, ops, len);
        e = -e;
    }
    Series<T> out(len, ops.zero());
    if (len > 0) out[0] = ops.one();
    for (long i = 0; i < e; ++i) out = series_multiply(out, base, ops, len);
    return out;
}

} // namespace schurlab
