#include "schurlab/lambda_calculus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace schurlab {

namespace {

// ---------------------------------------------------------------------------
// Monomial-symmetric-basis workbench. Symmetric functions of weight d are
// faithfully represented by maps Partition -> coefficient; products are
// computed from explicit expansions in d variables. This carries the plethysm
// recursion, where p_k[e_n] = m_{(k^n)} is a single basis element.
// ---------------------------------------------------------------------------

using MBasisQ = std::map<Partition, Rational>;

std::vector<std::vector<int>> distinct_perms(const Partition& p, int slots) {
    std::vector<std::vector<int>> out;
    std::vector<int> padded(p.parts());
    padded.resize(slots, 0);
    std::sort(padded.begin(), padded.end());
    do {
        out.push_back(padded);
    } while (std::next_permutation(padded.begin(), padded.end()));
    return out;
}

bool is_perm_of(const std::vector<int>& v, const Partition& p) {
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
    return sorted == p.parts();
}

// Coefficients of m_lambda * m_mu in the monomial basis.
std::map<Partition, Int> m_mono_product(const Partition& lambda, const Partition& mu) {
    static std::shared_mutex mx;
    static std::map<std::pair<Partition, Partition>, std::map<Partition, Int>> cache;
    std::pair<Partition, Partition> key{lambda, mu};
    if (key.second < key.first) std::swap(key.first, key.second);
    {
        std::shared_lock lock(mx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const int d = lambda.weight() + mu.weight();
    const int slots = std::max(1, d);
    auto perms = distinct_perms(key.second, slots);
    std::map<Partition, Int> out;
    for (auto& nu : partitions_of(d)) {
        std::vector<int> target(nu.parts());
        target.resize(slots, 0);
        Int count = 0;
        for (auto& beta : perms) {
            std::vector<int> rest(slots);
            bool ok = true;
            for (int i = 0; i < slots; ++i) {
                rest[i] = target[i] - beta[i];
                if (rest[i] < 0) { ok = false; break; }
            }
            if (ok && is_perm_of(rest, key.first)) ++count;
        }
        if (count != 0) out[nu] = count;
    }
    {
        std::unique_lock lock(mx);
        cache.emplace(std::move(key), out);
    }
    return out;
}

MBasisQ mbasis_mul(const MBasisQ& f, const MBasisQ& g) {
    MBasisQ out;
    for (auto& [a, ca] : f)
        for (auto& [b, cb] : g)
            for (auto& [nu, n] : m_mono_product(a, b)) {
                Rational& slot = out[nu];
                slot += ca * cb * Rational(n);
                if (slot == 0) out.erase(nu);
            }
    return out;
}

// Expansion of e_{w_1} e_{w_2} ... in the monomial basis (w a partition of
// factor indices).
std::map<Partition, Int> e_word_in_mbasis(const Partition& word) {
    static std::shared_mutex mx;
    static std::map<Partition, std::map<Partition, Int>> cache;
    {
        std::shared_lock lock(mx);
        auto it = cache.find(word);
        if (it != cache.end()) return it->second;
    }
    MBasisQ acc{{Partition{}, Rational(1)}};
    for (int k : word.parts()) {
        MBasisQ factor{{Partition(std::vector<int>(k, 1)), Rational(1)}};
        acc = mbasis_mul(acc, factor);
    }
    std::map<Partition, Int> out;
    for (auto& [nu, c] : acc) {
        if (boost::multiprecision::denominator(c) != 1)
            throw std::logic_error("e_word_in_mbasis: non-integral coefficient");
        out[nu] = boost::multiprecision::numerator(c);
    }
    {
        std::unique_lock lock(mx);
        cache.emplace(word, out);
    }
    return out;
}

// Rewrite a symmetric function (monomial basis) as a polynomial in the e_k.
// e_{mu'} = m_mu + dominance-lower terms, and the canonical partition order
// (reverse lex within a weight) refines dominance, so elimination against the
// first remaining key terminates.
std::map<Partition, Rational> mbasis_to_e(MBasisQ g) {
    std::map<Partition, Rational> out; // key: partition of e-factor indices
    while (!g.empty()) {
        auto [mu, c] = *g.begin();
        Partition word = mu.conjugate();
        out[word] += c;
        for (auto& [nu, n] : e_word_in_mbasis(word)) {
            Rational& slot = g[nu];
            slot -= c * Rational(n);
            if (slot == 0) g.erase(nu);
        }
    }
    return out;
}

// e_m[e_n] in the monomial basis via Newton's identity
// m e_m = sum_{k=1..m} (-1)^{k-1} p_k e_{m-k}, with p_k[e_n] = m_{(k^n)}.
MBasisQ e_plethysm_mbasis(int m, int n) {
    static std::shared_mutex mx;
    static std::map<std::pair<int, int>, MBasisQ> cache;
    std::pair<int, int> key{m, n};
    {
        std::shared_lock lock(mx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    MBasisQ out;
    if (m == 0) {
        out[Partition{}] = 1;
    } else {
        for (int k = 1; k <= m; ++k) {
            MBasisQ pk{{Partition(std::vector<int>(n, k)), Rational(1)}};
            MBasisQ term = mbasis_mul(e_plethysm_mbasis(m - k, n), pk);
            Rational sign = k % 2 == 1 ? 1 : -1;
            for (auto& [nu, c] : term) {
                Rational& slot = out[nu];
                slot += sign * c;
                if (slot == 0) out.erase(nu);
            }
        }
        for (auto& [nu, c] : out) c /= m;
    }
    {
        std::unique_lock lock(mx);
        cache.emplace(key, out);
    }
    return out;
}

std::shared_mutex g_poly_mx;
std::map<int, LambdaPolynomial> g_product_cache;
std::map<std::pair<int, int>, LambdaPolynomial> g_composition_cache;

} // namespace

const LambdaPolynomial& product_polynomial(int n, int max_degree) {
    if (n < 1) throw PreconditionError("product_polynomial: n must be positive");
    check_cap(n, max_degree, "product_polynomial");
    {
        std::shared_lock lock(g_poly_mx);
        auto it = g_product_cache.find(n);
        if (it != g_product_cache.end()) return it->second;
    }
    LambdaPolynomial p;
    for (auto& pi : partitions_of(n)) {
        auto left = jacobi_trudi(pi, GenBasis::e);
        auto right = jacobi_trudi(pi.conjugate(), GenBasis::e);
        for (auto& sl : left)
            for (auto& sr : right) {
                LambdaMonomial mono;
                for (auto& f : sl.word) {
                    if (mono.x_exp.size() < static_cast<size_t>(f.index))
                        mono.x_exp.resize(f.index, 0);
                    mono.x_exp[f.index - 1]++;
                }
                for (auto& f : sr.word) {
                    if (mono.y_exp.size() < static_cast<size_t>(f.index))
                        mono.y_exp.resize(f.index, 0);
                    mono.y_exp[f.index - 1]++;
                }
                p.add_term(std::move(mono), sl.coeff * sr.coeff);
            }
    }
    std::unique_lock lock(g_poly_mx);
    return g_product_cache.emplace(n, std::move(p)).first->second;
}

const LambdaPolynomial& composition_polynomial(int m, int n, int max_degree) {
    if (m < 1 || n < 1)
        throw PreconditionError("composition_polynomial: m, n must be positive");
    check_cap(static_cast<long>(m) * n, max_degree, "composition_polynomial");
    std::pair<int, int> key{m, n};
    {
        std::shared_lock lock(g_poly_mx);
        auto it = g_composition_cache.find(key);
        if (it != g_composition_cache.end()) return it->second;
    }
    LambdaPolynomial p;
    if (m == 1) {
        p = LambdaPolynomial::x_power(n);
    } else {
        auto ebasis = mbasis_to_e(e_plethysm_mbasis(m, n));
        for (auto& [word, c] : ebasis) {
            if (boost::multiprecision::denominator(c) != 1)
                throw std::logic_error("composition_polynomial: non-integral coefficient");
            LambdaMonomial mono;
            for (int idx : word.parts()) {
                if (mono.x_exp.size() < static_cast<size_t>(idx)) mono.x_exp.resize(idx, 0);
                mono.x_exp[idx - 1]++;
            }
            p.add_term(std::move(mono), boost::multiprecision::numerator(c));
        }
        for (auto& [mono, c] : p.terms()) {
            if (mono.max_x_index() < n)
                throw std::logic_error("composition_polynomial: monomial violates the i >= n property");
        }
    }
    std::unique_lock lock(g_poly_mx);
    return g_composition_cache.emplace(std::move(key), std::move(p)).first->second;
}

SymFunc elementary_plethysm(int m, int n, int max_degree) {
    if (m < 0 || n < 1) throw PreconditionError("elementary_plethysm: bad arguments");
    check_cap(static_cast<long>(m) * n, max_degree, "elementary_plethysm");
    if (m == 0) return SymFunc::one();
    auto ebasis = mbasis_to_e(e_plethysm_mbasis(m, n));
    SymFunc out;
    for (auto& [word, c] : ebasis) {
        if (boost::multiprecision::denominator(c) != 1)
            throw std::logic_error("elementary_plethysm: non-integral coefficient");
        GenWord w;
        for (int idx : word.parts()) w.push_back({GenBasis::e, idx});
        out += from_generator_monomial(w, max_degree) * boost::multiprecision::numerator(c);
    }
    return out;
}

} // namespace schurlab
