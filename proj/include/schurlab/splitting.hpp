// Splitting-principle constructions: the rectangular quotient embedding
// Lambda_beta -> Lambda_m (x) Lambda_{-n}, the even splitting into lines, the
// hook-bound extension R[a]/(lambda^3 y), sum-bound candidates, line scaling,
// and the signed negation identity.
#pragma once

#include <optional>

#include "schurlab/lambda_ring.hpp"

namespace schurlab {

class QuotientEmbedding {
public:
    // beta must be rectangular, beta = (m+1)^(n+1).
    QuotientEmbedding(Partition beta, int cap = kDefaultMaxDegree);

    const Partition& beta() const { return beta_; }
    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    // image of the universal generator: a + b
    const RingElement& generator_image() const { return x_; }

    // s_pi(a+b) in the target (cached).
    RingElement map_schur(const Partition& pi) const;
    // image of an element of Lambda_beta (Schur normal form).
    RingElement map(const RingElement& f) const;

    struct KernelCheck {
        int degree = 0;
        bool contained_vanish = true;   // every s_pi, pi >= beta, maps to 0
        bool complement_independent = true; // the rest map to independent vectors
    };
    KernelCheck verify_kernel_degree(int degree) const;

private:
    Partition beta_;
    RingPtr source_;
    RingPtr target_;
    RingElement x_;
    mutable std::mutex mutex_;
    mutable std::map<Partition, RingElement> schur_cache_;
};

// Image of an even-free element under Lambda_n -> Omega_n, a_k -> e_k(l_1..l_n).
RingElement split_even(const RingElement& x, const RingPtr& omega);

struct HookSplitReport {
    bool bound_ok = false;          // (2,1) bound verified for the input
    bool identities_ok = false;     // lambda^{n+1}(y) = x^{n-2} lambda^3(y), 3 <= n < cap
    int even_degree = 0;            // degree of y in A (expected 2)
    bool injectivity_ok = false;    // no basis element of R_{<=D} lies in (lambda^3 y)
    int injectivity_degree = 0;
    int input_rank = 0;             // rank of the input element in the extension
    std::optional<Partition> failed_identity;  // lambda index of a failed identity
    std::optional<std::string> injectivity_counterexample;
    RingPtr extension;              // R[a] (the quotient divisor is lambda3_y)
    RingElement y;                  // x + a in R[a]
    RingElement lambda3_y;
};

// Splitting construction for elements bounded by the hook (2,1):
// adjoin a line a, set y = x + a, and quotient by lambda^3(y).
HookSplitReport hook_split(const RingElement& x, int injectivity_degree = 6);

struct SumBoundReport {
    Partition candidate;
    int max_weight = 0;
    bool verified = true;
    struct Failure {
        Partition pi, alpha, beta;
    };
    std::vector<Failure> failures;
};

// Candidate pi0 = componentwise sum of the bounds (or the supplied override),
// verified by brute force over Littlewood-Richardson coproducts up to weight
// N: every (alpha, beta) with c^pi_{alpha beta} != 0 and pi >= pi0 must have
// alpha >= lambda or beta >= mu. The candidate formula is a heuristic; the
// verification verdict is the deliverable.
SumBoundReport sum_bound_candidate(const Partition& lambda, const Partition& mu, int N,
                                   std::optional<Partition> candidate_override = {});

struct LineScalingCheck {
    RingElement lhs, rhs;  // s_pi(l x) and l^{|pi|} s_pi(x)
    bool matches = false;
    RingElement lhs_neg, rhs_neg; // s_pi(-l x) and (-l)^{|pi|} s_{pi'}(x)
    bool matches_neg = false;
};

// Requires l to be a line element (checked); evaluates both sides of
// s_pi(l x) = l^{|pi|} s_pi(x) and the sign-conjugate variant.
LineScalingCheck line_scaling(const RingElement& line, const RingElement& x,
                              const Partition& pi);

struct NegationCheck {
    RingElement lhs, rhs; // s_{pi'}(-x) and (-1)^{|pi|} s_pi(x)
    bool equal = false;
    bool unsigned_equal = false; // s_{pi'}(-x) == s_pi(x), fails for odd weight
};

NegationCheck negate_schur_identity(const RingElement& x, const Partition& pi);

} // namespace schurlab
