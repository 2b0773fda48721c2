#include "schurlab/splitting.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "schurlab/schur_ring.hpp"

namespace schurlab {

namespace {

// Row-echelon rank over the rationals; destroys its argument.
int rational_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        size_t pivot = m.size();
        for (size_t r = rank; r < m.size(); ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        Rational lead = m[rank][col];
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<size_t>(rank) || m[r][col] == 0) continue;
            Rational f = m[r][col] / lead;
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace

// ---------------------------------------------------------------------------
// QuotientEmbedding
// ---------------------------------------------------------------------------

QuotientEmbedding::QuotientEmbedding(Partition beta, int cap) : beta_(std::move(beta)) {
    if (!beta_.is_rectangle())
        throw PreconditionError("quotient_embedding: beta must be rectangular");
    // The even factor bounds row counts and the odd factor bounds column
    // widths: s_mu(a) = 0 once mu has more than m rows, s_nu(b) = 0 once
    // nu_1 > n. The kernel is I_beta for beta with m+1 rows and n+1 columns.
    const int m = beta_.length() - 1;
    const int n = beta_.part(1) - 1;
    source_ = LambdaRing::schur_quotient(beta_, cap);
    target_ = LambdaRing::tensor({LambdaRing::even_free(m, cap), LambdaRing::odd_free(n, cap)});
    RingElement a = m > 0 ? target_->var(0) : target_->zero();
    RingElement b = n > 0 ? target_->var(m) : target_->zero();
    x_ = a + b;
}

RingElement QuotientEmbedding::map_schur(const Partition& pi) const {
    {
        std::lock_guard lock(mutex_);
        auto it = schur_cache_.find(pi);
        if (it != schur_cache_.end()) return it->second;
    }
    RingElement value = target_->apply_symfunc(SymFunc::schur(pi), x_);
    std::lock_guard lock(mutex_);
    return schur_cache_.emplace(pi, std::move(value)).first->second;
}

RingElement QuotientEmbedding::map(const RingElement& f) const {
    if (f.ring() != source_)
        throw PreconditionError("quotient_embedding: element not from Lambda_beta");
    RingElement out = target_->zero();
    for (auto& [pi, c] : f.sym().coeffs()) out = out + map_schur(pi) * c;
    return out;
}

QuotientEmbedding::KernelCheck QuotientEmbedding::verify_kernel_degree(int degree) const {
    KernelCheck check;
    check.degree = degree;
    std::map<Exponents, size_t> columns;
    std::vector<std::vector<Rational>> rows;
    for (auto& pi : partitions_of(degree)) {
        RingElement image = map_schur(pi);
        if (pi.contains(beta_)) {
            if (!image.is_zero()) check.contained_vanish = false;
            continue;
        }
        std::vector<Rational> row;
        for (auto& [e, c] : image.poly().terms()) {
            auto [it, inserted] = columns.try_emplace(e, columns.size());
            if (it->second >= row.size()) row.resize(it->second + 1);
            row[it->second] = Rational(c);
        }
        rows.push_back(std::move(row));
    }
    for (auto& row : rows) row.resize(columns.size());
    check.complement_independent =
        rational_rank(rows) == static_cast<int>(rows.size());
    return check;
}

// ---------------------------------------------------------------------------
// split_even
// ---------------------------------------------------------------------------

RingElement split_even(const RingElement& x, const RingPtr& omega) {
    const RingPtr& R = x.ring();
    if (R->kind() != RingKind::Even)
        throw PreconditionError("split_even: element must live in an even-free ring");
    if (omega->kind() != RingKind::Split)
        throw PreconditionError("split_even: target must be a split ring");
    const int n = R->families()[0].size;
    if (static_cast<int>(omega->var_names().size()) != n)
        throw PreconditionError("split_even: split ring must have one line per degree");
    // a_k -> e_k(l_1..l_n)
    std::vector<MultiPoly> values;
    for (int k = 1; k <= n; ++k) {
        MultiPoly ek;
        std::vector<int> subset;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(subset.size()) == k) {
                Exponents e(n, 0);
                for (int i : subset) e[i] = 1;
                ek.add_term(e, 1);
                return;
            }
            for (int i = start; i < n; ++i) {
                subset.push_back(i);
                rec(i + 1);
                subset.pop_back();
            }
        };
        rec(0);
        values.push_back(ek);
    }
    return omega->from_poly(x.poly().substitute(values));
}

// ---------------------------------------------------------------------------
// hook_split
// ---------------------------------------------------------------------------

namespace {

std::vector<Partition> ring_basis_of_degree(const LambdaRing& R, int degree) {
    std::vector<Partition> out;
    for (auto& pi : partitions_of(degree)) {
        if (R.kind() == RingKind::SchurQuotient && pi.contains(R.quotient())) continue;
        out.push_back(pi);
    }
    return out;
}

} // namespace

HookSplitReport hook_split(const RingElement& x, int injectivity_degree) {
    const RingPtr& R = x.ring();
    if (!R->is_schur_native())
        throw PreconditionError("hook_split: base ring must be Schur-native");
    const int cap = R->cap();

    HookSplitReport report;
    BoundReport bound = check_bound(x, Partition{2, 1}, cap);
    report.bound_ok = bound.holds_up_to_N;
    if (!report.bound_ok)
        throw PreconditionError("hook_split: the element is not bounded by (2,1) up to the cap");

    RingPtr A = LambdaRing::line_poly(R);
    RingElement xe = A->embed_base(x);
    RingElement y = xe + A->generator();
    report.extension = A;
    report.y = y;

    auto lam_y = A->lambda_series_of(y, cap + 1);
    report.lambda3_y = lam_y[3];

    report.identities_ok = true;
    for (int n = 3; n + 1 <= cap; ++n) {
        RingElement xdpow = A->one();
        for (int i = 0; i < n - 2; ++i) xdpow = xdpow * xe;
        if (!(lam_y[n + 1] == xdpow * report.lambda3_y)) {
            report.identities_ok = false;
            report.failed_identity = Partition{n + 1};
            break;
        }
    }

    report.even_degree = lam_y[2].is_zero() ? (lam_y[1].is_zero() ? 0 : 1) : 2;
    report.input_rank = report.even_degree - 1;

    // Degreewise injectivity: the span of { (a^j s_rho) * lambda^3(y) } in
    // degree d must intersect the base ring trivially. Compare the rank of
    // the image vectors with the rank of their projections away from the
    // a-degree-0 block.
    report.injectivity_ok = true;
    report.injectivity_degree = injectivity_degree;
    for (int d = 3; d <= injectivity_degree && report.injectivity_ok; ++d) {
        std::vector<RingElement> images;
        for (int j = 0; j + 3 <= d; ++j) {
            for (auto& rho : ring_basis_of_degree(*R, d - 3 - j)) {
                LineElem mono{{j, SymFunc::schur(rho)}};
                RingElement f = A->from_line(std::move(mono));
                images.push_back(f * report.lambda3_y);
            }
        }
        std::map<std::pair<int, Partition>, size_t> columns;
        std::vector<std::vector<Rational>> full, projected;
        for (auto& img : images) {
            std::vector<Rational> row;
            for (auto& [j, g] : img.line())
                for (auto& [pi, c] : g.coeffs()) {
                    auto [it, ins] = columns.try_emplace({j, pi}, columns.size());
                    if (it->second >= row.size()) row.resize(it->second + 1);
                    row[it->second] = Rational(c);
                }
            full.push_back(std::move(row));
        }
        for (auto& row : full) row.resize(columns.size());
        projected = full;
        for (auto& [key, idx] : columns)
            if (key.first == 0)
                for (auto& row : projected) row[idx] = 0;
        if (rational_rank(full) != rational_rank(projected)) {
            report.injectivity_ok = false;
            report.injectivity_counterexample =
                "degree " + std::to_string(d) + ": the ideal meets the base ring";
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// sum_bound_candidate
// ---------------------------------------------------------------------------

SumBoundReport sum_bound_candidate(const Partition& lambda, const Partition& mu, int N,
                                   std::optional<Partition> candidate_override) {
    SumBoundReport report;
    report.candidate =
        candidate_override ? *candidate_override : lambda.componentwise_sum(mu);
    report.max_weight = N;
    for (int w = report.candidate.weight(); w <= N; ++w)
        for (auto& pi : superpartitions_of(report.candidate, w)) {
            TensorSymFunc delta = coproduct(SymFunc::schur(pi), N);
            for (auto& [key, c] : delta.coeffs()) {
                if (key.first.contains(lambda) || key.second.contains(mu)) continue;
                report.verified = false;
                report.failures.push_back({pi, key.first, key.second});
            }
        }
    return report;
}

// ---------------------------------------------------------------------------
// line_scaling / negate_schur_identity
// ---------------------------------------------------------------------------

LineScalingCheck line_scaling(const RingElement& line, const RingElement& x,
                              const Partition& pi) {
    const RingPtr& R = line.ring();
    if (R != x.ring()) throw PreconditionError("line_scaling: elements from different rings");
    auto lam = R->lambda_series_of(line, R->cap() + 1);
    for (size_t k = 2; k < lam.size(); ++k)
        if (!lam[k].is_zero())
            throw PreconditionError("line_scaling: lambda^" + std::to_string(k) +
                                    " of the scalar is nonzero, not a line element");
    const int n = pi.weight();
    LineScalingCheck check;
    RingElement lx = line * x;
    check.lhs = R->apply_symfunc(SymFunc::schur(pi), lx);
    RingElement scale = R->one();
    for (int i = 0; i < n; ++i) scale = scale * line;
    check.rhs = scale * R->apply_symfunc(SymFunc::schur(pi), x);
    check.matches = check.lhs == check.rhs;

    check.lhs_neg = R->apply_symfunc(SymFunc::schur(pi), -lx);
    RingElement conj = scale * R->apply_symfunc(SymFunc::schur(pi.conjugate()), x);
    check.rhs_neg = n % 2 == 0 ? conj : -conj;
    check.matches_neg = check.lhs_neg == check.rhs_neg;
    return check;
}

NegationCheck negate_schur_identity(const RingElement& x, const Partition& pi) {
    const RingPtr& R = x.ring();
    NegationCheck check;
    check.lhs = R->apply_symfunc(SymFunc::schur(pi.conjugate()), -x);
    RingElement spi = R->apply_symfunc(SymFunc::schur(pi), x);
    check.rhs = pi.weight() % 2 == 0 ? spi : -spi;
    check.equal = check.lhs == check.rhs;
    check.unsigned_equal = check.lhs == spi;
    return check;
}

} // namespace schurlab
