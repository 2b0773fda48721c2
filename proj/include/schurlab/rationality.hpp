// Power-series rationality analysis over exact coefficient rings: Hankel
// determinantal rationality, Schur-rationality minors, rational
// reconstruction within degree bounds, line factorization over the
// rationals, and the separating quotient-ring family.
#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "schurlab/multipoly.hpp"
#include "schurlab/partition.hpp"
#include "schurlab/ring_ops.hpp"

namespace schurlab {

// Memoized coefficient stream r_0 = 1, r_1, r_2, ... in a coefficient ring.
// Negative indices read as zero. Thread-safe coefficient requests.
template <class T>
class SeriesOracle {
public:
    SeriesOracle(std::function<T(int)> fn, T zero, T one)
        : state_(std::make_shared<State>(std::move(fn))),
          zero_(std::move(zero)),
          one_(std::move(one)) {}

    T coeff(int n) const {
        if (n < 0) return zero_;
        std::lock_guard lock(state_->mutex);
        while (static_cast<int>(state_->memo.size()) <= n)
            state_->memo.push_back(state_->fn(static_cast<int>(state_->memo.size())));
        return state_->memo[n];
    }

    const T& zero() const { return zero_; }
    const T& one() const { return one_; }

private:
    struct State {
        explicit State(std::function<T(int)> f) : fn(std::move(f)) {}
        std::function<T(int)> fn;
        std::vector<T> memo;
        std::mutex mutex;
    };
    std::shared_ptr<State> state_;
    T zero_, one_;
};

// Determinant over a commutative ring by DP over used-column subsets with
// zero pruning.
template <class T, class Ops>
T ring_determinant(const std::vector<std::vector<T>>& a, const Ops& ops) {
    const size_t n = a.size();
    if (n == 0) return ops.one();
    std::vector<T> state(static_cast<size_t>(1) << n, ops.zero());
    std::vector<bool> live(state.size(), false);
    state[0] = ops.one();
    live[0] = true;
    for (size_t i = 0; i < n; ++i) {
        std::vector<T> next(state.size(), ops.zero());
        std::vector<bool> nlive(state.size(), false);
        for (size_t mask = 0; mask < state.size(); ++mask) {
            if (!live[mask] || static_cast<size_t>(std::popcount(mask)) != i) continue;
            if (ops.is_zero(state[mask])) continue;
            for (size_t j = 0; j < n; ++j) {
                size_t bit = static_cast<size_t>(1) << j;
                if (mask & bit) continue;
                if (ops.is_zero(a[i][j])) continue;
                int flips = 0;
                for (size_t k = j + 1; k < n; ++k)
                    if (mask & (static_cast<size_t>(1) << k)) ++flips;
                T contrib = ops.mul(state[mask], a[i][j]);
                if (flips % 2 != 0) contrib = ops.neg(contrib);
                size_t nm = mask | bit;
                next[nm] = nlive[nm] ? ops.add(next[nm], contrib) : contrib;
                nlive[nm] = true;
            }
        }
        state = std::move(next);
        live = std::move(nlive);
    }
    return live.back() ? state.back() : ops.zero();
}

// Exact determinant of the m x m Hankel matrix (r_{n+i+j})_{i,j=1..m}.
template <class T, class Ops>
T hankel_det(const SeriesOracle<T>& f, int m, int n, const Ops& ops) {
    if (m < 1) throw PreconditionError("hankel_det: m must be positive");
    if (n < 0) throw PreconditionError("hankel_det: offset must be nonnegative");
    std::vector<std::vector<T>> a(m, std::vector<T>(m, ops.zero()));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) a[i - 1][j - 1] = f.coeff(n + i + j);
    return ring_determinant(a, ops);
}

template <class T>
struct DetRatReport {
    int m = 0, n0 = 0, max_order = 0;
    bool pass = true;
    std::vector<std::pair<int, T>> witnesses; // offsets with nonzero minors
};

// Checks hankel_det(f, m, n) = 0 for all n0 < n <= N - 2m.
template <class T, class Ops>
DetRatReport<T> is_determinantally_rational(const SeriesOracle<T>& f, int m, int n0, int N,
                                            const Ops& ops) {
    if (N < n0 + 2 * m)
        throw PreconditionError("is_determinantally_rational: N must be at least n0 + 2m");
    DetRatReport<T> report{m, n0, N, true, {}};
    for (int n = n0 + 1; n <= N - 2 * m; ++n) {
        T det = hankel_det(f, m, n, ops);
        if (!ops.is_zero(det)) {
            report.pass = false;
            report.witnesses.emplace_back(n, std::move(det));
        }
    }
    return report;
}

// The Jacobi-Trudi minor s_pi(f) = det(r_{pi'_i + j - i}), an m x m matrix
// for pi with m columns. With f = lambda_t(x) this is s_pi(x). The
// determinant walk prunes partial assignments whose index-sum exceeds |pi|:
// remaining entries have nonnegative indices, so those can never complete.
template <class T, class Ops>
T schur_minor(const SeriesOracle<T>& f, const Partition& pi, const Ops& ops) {
    const Partition conj = pi.conjugate();
    const int m = pi.part(1); // number of columns of pi = rows of pi'
    if (m == 0) return ops.one();
    const int total = pi.weight();
    std::vector<T> state(static_cast<size_t>(1) << m, ops.zero());
    std::vector<bool> live(state.size(), false);
    state[0] = ops.one();
    live[0] = true;
    int rowsum = 0;
    for (int i = 1; i <= m; ++i) {
        std::vector<T> next(state.size(), ops.zero());
        std::vector<bool> nlive(state.size(), false);
        for (size_t mask = 0; mask < state.size(); ++mask) {
            if (!live[mask] || std::popcount(mask) != i - 1) continue;
            if (ops.is_zero(state[mask])) continue;
            int colsum = 0;
            for (int k = 1; k <= m; ++k)
                if (mask & (static_cast<size_t>(1) << (k - 1))) colsum += k;
            for (int j = 1; j <= m; ++j) {
                size_t bit = static_cast<size_t>(1) << (j - 1);
                if (mask & bit) continue;
                int idx = conj.part(i) + j - i;
                if (idx < 0) continue;
                if (rowsum + colsum + conj.part(i) + j - i > total) continue;
                T entry = f.coeff(idx);
                if (ops.is_zero(entry)) continue;
                int flips = 0;
                for (int k = j + 1; k <= m; ++k)
                    if (mask & (static_cast<size_t>(1) << (k - 1))) ++flips;
                T contrib = ops.mul(state[mask], entry);
                if (flips % 2 != 0) contrib = ops.neg(contrib);
                size_t nm = mask | bit;
                next[nm] = nlive[nm] ? ops.add(next[nm], contrib) : contrib;
                nlive[nm] = true;
            }
        }
        rowsum += conj.part(i) - i;
        state = std::move(next);
        live = std::move(nlive);
    }
    return live.back() ? state.back() : ops.zero();
}

template <class T>
struct SchurRatReport {
    Partition mu;
    int max_weight = 0;
    bool pass = true;
    std::vector<std::pair<Partition, T>> witnesses;
};

// Checks schur_minor(f, pi) = 0 for every pi containing mu with |pi| <= N.
// When stop_at_first_witness is set the scan ends at the first failure
// (witness order is canonical either way).
template <class T, class Ops>
SchurRatReport<T> is_schur_rational(const SeriesOracle<T>& f, const Partition& mu, int N,
                                    const Ops& ops, bool stop_at_first_witness = false) {
    SchurRatReport<T> report{mu, N, true, {}};
    for (int w = mu.weight(); w <= N; ++w)
        for (auto& pi : superpartitions_of(mu, w)) {
            T det = schur_minor(f, pi, ops);
            if (!ops.is_zero(det)) {
                report.pass = false;
                report.witnesses.emplace_back(pi, std::move(det));
                if (stop_at_first_witness) return report;
            }
        }
    return report;
}

// p/q with q(0) = p(0) = 1 over the fraction field; p = f q holds to the
// verified order.
template <class F>
struct RationalPair {
    std::vector<F> p, q; // coefficient lists, constant terms included
    int verified_order = 0;
};

// Exact linear solve for q f = p (mod t^{N+1}) with deg q < m, deg p < n0,
// q(0) = 1 over a field. Returns nothing when no solution fits the bounds.
// Underdetermined systems take free unknowns as zero before verification.
template <class F, class FOps>
std::optional<RationalPair<F>> reconstruct_rational(const std::function<F(int)>& coeff, int m,
                                                    int n0, int N, const FOps& ops) {
    if (m < 1 || n0 < 1)
        throw PreconditionError("reconstruct_rational: bounds must be positive");
    if (N < n0 + 2 * m)
        throw PreconditionError("reconstruct_rational: N must be at least n0 + 2m");
    const int unknowns = m - 1;
    // rows: sum_{k=1..m-1} r_{j-k} q_k = -r_j for j = n0..N
    std::vector<std::vector<F>> rows;
    for (int j = n0; j <= N; ++j) {
        std::vector<F> row;
        for (int k = 1; k <= unknowns; ++k)
            row.push_back(j - k < 0 ? ops.zero() : coeff(j - k));
        row.push_back(ops.neg(coeff(j)));
        rows.push_back(std::move(row));
    }
    // Gaussian elimination with partial structure: reduce to echelon form.
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < unknowns && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!ops.is_zero(rows[r][col])) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || ops.is_zero(rows[r][col])) continue;
            F factor = ops.div(rows[r][col], rows[rank][col]);
            for (int c = col; c <= unknowns; ++c)
                rows[r][c] = ops.sub(rows[r][c], ops.mul(factor, rows[rank][c]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (!ops.is_zero(rows[r][unknowns])) return std::nullopt; // inconsistent

    std::vector<F> q(m, ops.zero());
    q[0] = ops.one();
    for (int r = 0; r < rank; ++r)
        q[pivot_col[r] + 1] = ops.div(rows[r][unknowns], rows[r][pivot_col[r]]);

    RationalPair<F> pair;
    pair.q = q;
    pair.p.assign(n0, ops.zero());
    for (int j = 0; j < n0; ++j) {
        F acc = ops.zero();
        for (int k = 0; k <= j && k < m; ++k) acc = ops.add(acc, ops.mul(q[k], coeff(j - k)));
        pair.p[j] = acc;
    }
    // verify the product through order N
    for (int j = n0; j <= N; ++j) {
        F acc = ops.zero();
        for (int k = 0; k < m && k <= j; ++k) acc = ops.add(acc, ops.mul(q[k], coeff(j - k)));
        if (!ops.is_zero(acc)) return std::nullopt;
    }
    pair.verified_order = N;
    while (pair.p.size() > 1 && ops.is_zero(pair.p.back())) pair.p.pop_back();
    while (pair.q.size() > 1 && ops.is_zero(pair.q.back())) pair.q.pop_back();
    return pair;
}

struct RationalFieldOps {
    Rational zero() const { return 0; }
    Rational one() const { return 1; }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational div(const Rational& a, const Rational& b) const { return a / b; }
    Rational neg(const Rational& a) const { return -a; }
    bool is_zero(const Rational& a) const { return a == 0; }
};

struct PolyFracFieldOps {
    PolyFrac zero() const { return {}; }
    PolyFrac one() const { return PolyFrac::constant(1); }
    PolyFrac add(const PolyFrac& a, const PolyFrac& b) const { return a + b; }
    PolyFrac sub(const PolyFrac& a, const PolyFrac& b) const { return a - b; }
    PolyFrac mul(const PolyFrac& a, const PolyFrac& b) const { return a * b; }
    PolyFrac div(const PolyFrac& a, const PolyFrac& b) const { return a / b; }
    PolyFrac neg(const PolyFrac& a) const { return -a; }
    bool is_zero(const PolyFrac& a) const { return a.is_zero(); }
};

struct LineFactorization {
    std::vector<Rational> lines_plus;  // roots alpha_i of p, with multiplicity
    std::vector<Rational> lines_minus; // roots beta_j of q
    bool complete = false;             // both polynomials split over Q
    std::vector<Rational> p_residual, q_residual; // unfactored parts, constant 1
};

// Factor p and q as products of (1 - alpha t) over the rationals by exact
// rational root extraction. Residual factors of positive degree mean the
// virtual-line decomposition needs irrational roots: complete = false.
LineFactorization factor_into_lines(const RationalPair<Rational>& pair);

// The quotient of Z[x_1, x_2, ...] by the monomial ideal of all m-fold
// products x_{i_1}...x_{i_m} with all pairwise |i_j - i_k| < 2m. Generator
// indices are truncated at index_cap.
class CounterexampleRing {
public:
    CounterexampleRing(int m, int index_cap);

    int m() const { return m_; }
    int index_cap() const { return index_cap_; }

    // Normal form: discard monomials containing a forbidden m-fold product.
    MultiPoly reduce(const MultiPoly& p) const;
    bool monomial_dies(const Exponents& e) const;

    // f(t) = 1 + sum x_n t^n as a series oracle over this ring.
    SeriesOracle<MultiPoly> series() const;

    struct Ops {
        const CounterexampleRing* ring;
        MultiPoly zero() const { return {}; }
        MultiPoly one() const { return MultiPoly::constant(1); }
        MultiPoly scalar(const Int& c) const { return MultiPoly::constant(c); }
        MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
        MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const {
            return ring->reduce(a * b);
        }
        MultiPoly neg(const MultiPoly& a) const { return -a; }
        bool is_zero(const MultiPoly& a) const { return a.is_zero(); }
    };
    Ops ops() const { return Ops{this}; }

private:
    int m_;
    int index_cap_;
};

} // namespace schurlab
