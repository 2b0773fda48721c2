#include "schurlab/rationality.hpp"

#include <algorithm>
#include <limits>

namespace schurlab {

namespace {

// All positive divisors of |v| by trial division; |v| must fit in 64 bits.
std::optional<std::vector<long long>> divisors_of(const Int& v) {
    Int a = v < 0 ? -v : v;
    if (a > std::numeric_limits<long long>::max()) return std::nullopt;
    long long x = a.convert_to<long long>();
    if (x == 0) return std::vector<long long>{};
    std::vector<long long> out;
    for (long long d = 1; d * d <= x; ++d) {
        if (x % d) continue;
        out.push_back(d);
        if (d != x / d) out.push_back(x / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int poly_degree(const std::vector<Rational>& c) {
    int d = static_cast<int>(c.size()) - 1;
    while (d > 0 && c[d] == 0) --d;
    return d;
}

Rational eval_reversed(const std::vector<Rational>& c, int d, const Rational& x) {
    // sum_k c_k x^{d-k}
    Rational acc = 0;
    for (int k = 0; k <= d; ++k) acc = acc * x + (k < static_cast<int>(c.size()) ? c[k] : 0);
    return acc;
}

// Extract rational alphas with p(t) = prod (1 - alpha t) * residual.
bool extract_roots(std::vector<Rational> c, std::vector<Rational>& roots,
                   std::vector<Rational>& residual) {
    while (true) {
        int d = poly_degree(c);
        c.resize(d + 1);
        if (d == 0) {
            residual = c;
            return true;
        }
        // candidates alpha = u/v after clearing denominators
        Int lcm = 1;
        for (auto& ck : c)
            lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(ck));
        Int lead = boost::multiprecision::numerator(c[0] * Rational(lcm));
        Int tail = boost::multiprecision::numerator(c[d] * Rational(lcm));
        auto us = divisors_of(tail), vs = divisors_of(lead);
        if (!us || !vs) {
            residual = c;
            return false; // coefficients too large for exact root search
        }
        bool found = false;
        for (long long u : *us) {
            for (long long v : *vs) {
                for (int sign : {1, -1}) {
                    Rational alpha(sign * u, v);
                    if (eval_reversed(c, d, alpha) != 0) continue;
                    // divide by (1 - alpha t): g_k = c_k + alpha g_{k-1}
                    std::vector<Rational> g(d);
                    Rational carry = 0;
                    for (int k = 0; k < d; ++k) {
                        g[k] = c[k] + alpha * carry;
                        carry = g[k];
                    }
                    roots.push_back(alpha);
                    c = std::move(g);
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            residual = c;
            return false;
        }
    }
}

} // namespace

LineFactorization factor_into_lines(const RationalPair<Rational>& pair) {
    LineFactorization out;
    bool p_ok = extract_roots(pair.p, out.lines_plus, out.p_residual);
    bool q_ok = extract_roots(pair.q, out.lines_minus, out.q_residual);
    out.complete = p_ok && q_ok && poly_degree(out.p_residual) == 0 &&
                   poly_degree(out.q_residual) == 0;
    std::sort(out.lines_plus.begin(), out.lines_plus.end());
    std::sort(out.lines_minus.begin(), out.lines_minus.end());
    return out;
}

CounterexampleRing::CounterexampleRing(int m, int index_cap)
    : m_(m), index_cap_(index_cap) {
    if (m < 2) throw PreconditionError("counterexample_ring: m must be at least 2");
    if (index_cap < 1) throw PreconditionError("counterexample_ring: index_cap must be positive");
}

bool CounterexampleRing::monomial_dies(const Exponents& e) const {
    // variable indices (1-based) with multiplicity, ascending
    std::vector<int> idx;
    for (size_t v = 0; v < e.size(); ++v)
        for (int k = 0; k < e[v]; ++k) idx.push_back(static_cast<int>(v) + 1);
    if (static_cast<int>(idx.size()) < m_) return false;
    // a pairwise-close m-subset exists iff some m consecutive sorted indices
    // span less than 2m
    for (size_t i = 0; i + m_ <= idx.size(); ++i)
        if (idx[i + m_ - 1] - idx[i] < 2 * m_) return true;
    return false;
}

MultiPoly CounterexampleRing::reduce(const MultiPoly& p) const {
    MultiPoly out;
    for (auto& [e, c] : p.terms())
        if (!monomial_dies(e)) out.add_term(e, c);
    return out;
}

SeriesOracle<MultiPoly> CounterexampleRing::series() const {
    int cap = index_cap_;
    return SeriesOracle<MultiPoly>(
        [cap](int n) {
            if (n == 0) return MultiPoly::constant(1);
            if (n > cap)
                throw CapExceeded("counterexample series: index " + std::to_string(n) +
                                  " beyond the generator truncation " + std::to_string(cap));
            return MultiPoly::variable(n - 1);
        },
        MultiPoly{}, MultiPoly::constant(1));
}

} // namespace schurlab
