// Finitely presented lambda-rings with canonical normal forms.
//
// Presentations fall into four payload shapes:
//   - Schur-native (free ring on one generator, Schur quotients): SymFunc
//   - polynomial (even/odd free, split, tensors, adjoined lines): MultiPoly
//   - componentwise integers (binomial rings Z^k) and table rings: vector<Int>
//   - line-polynomial over a Schur-native base: map a-exponent -> SymFunc
//
// lambda on a general element goes through its monomial decomposition: the
// lambda-series of a product is folded with the universal product polynomials,
// integer multiples become series powers, and negative multiples invert the
// series. Generator-level lambda-series are presentation data.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schurlab/lambda_calculus.hpp"
#include "schurlab/multipoly.hpp"
#include "schurlab/series.hpp"
#include "schurlab/symfunc.hpp"

namespace schurlab {

enum class RingKind { Free, Even, Odd, SchurQuotient, Tensor, Binomial, Split, LinePoly, Table };

class LambdaRing;
using RingPtr = std::shared_ptr<const LambdaRing>;

// Coefficients of a line-polynomial element: a-exponent -> coefficient in the
// Schur-native base ring.
using LineElem = std::map<int, SymFunc>;

class RingElement {
public:
    using Payload = std::variant<SymFunc, MultiPoly, std::vector<Int>, LineElem>;

    RingElement() = default;
    RingElement(RingPtr ring, Payload payload);

    const RingPtr& ring() const { return ring_; }
    const Payload& payload() const { return payload_; }
    const SymFunc& sym() const { return std::get<SymFunc>(payload_); }
    const MultiPoly& poly() const { return std::get<MultiPoly>(payload_); }
    const std::vector<Int>& coords() const { return std::get<std::vector<Int>>(payload_); }
    const LineElem& line() const { return std::get<LineElem>(payload_); }

    bool is_zero() const;
    // Weighted degree of the normal form (0 for constants).
    long degree() const;

    RingElement operator-() const;
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator*(const Int& c) const;
    bool operator==(const RingElement& o) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    Payload payload_;
};

// Ring-operation bundle over RingElement for the generic evaluators.
struct RingElementOps {
    const LambdaRing* ring;
    RingElement zero() const;
    RingElement one() const;
    RingElement scalar(const Int& c) const;
    RingElement add(const RingElement& a, const RingElement& b) const { return a + b; }
    RingElement mul(const RingElement& a, const RingElement& b) const { return a * b; }
    RingElement neg(const RingElement& a) const { return -a; }
    bool is_zero(const RingElement& a) const { return a.is_zero(); }
};

// Variable families of polynomial-type presentations. A family is a block of
// consecutive variables sharing one lambda-structure recipe.
struct VarFamily {
    enum class Kind {
        Line,   // each variable is a line element
        Even,   // variables a_1..a_n with a_k = lambda^k(a), zero beyond n
        Odd,    // variables b_1..b_n with b_k = sigma^k(b), zero beyond n
        FreeE,  // variables e_1..e_cap of the free ring on one generator
    };
    Kind kind;
    int start; // first variable index
    int size;
    std::string prefix; // naming: prefix + (1-based position), or just prefix when size==1
};

struct TableData {
    std::vector<std::string> labels;
    std::vector<int> degrees;
    // product of basis i and j as coordinates; empty optional when the result
    // overflows the truncated basis.
    std::vector<std::vector<std::optional<std::vector<Int>>>> product;
    // lambda^k(basis i) for k = 0..cap, as coordinates; empty beyond truncation.
    std::vector<std::vector<std::optional<std::vector<Int>>>> lambda;
    int generator_index; // the distinguished element the tables were built around
};

class LambdaRing : public std::enable_shared_from_this<LambdaRing> {
public:
    // --- factories -----------------------------------------------------
    static RingPtr free_ring(int cap = kDefaultMaxDegree);
    static RingPtr even_free(int n, int cap = kDefaultMaxDegree);
    static RingPtr odd_free(int n, int cap = kDefaultMaxDegree);
    static RingPtr schur_quotient(Partition lambda, int cap = kDefaultMaxDegree);
    static RingPtr binomial_ring(int components = 1, int cap = kDefaultMaxDegree);
    static RingPtr split_ring(int n, int cap = kDefaultMaxDegree);
    // Tensor of polynomial-type presentations (even, odd, split, line_poly
    // over those, free). Free factors enter through their e-generators.
    static RingPtr tensor(const std::vector<RingPtr>& factors);
    // Adjoin a line element. Polynomial-type bases stay polynomial; a
    // Schur-native base yields a line-polynomial ring.
    static RingPtr line_poly(RingPtr base);
    // The worked ring Lambda_(2,2)/(lambda^{2i} x): basis {1, x^n, x b^{2n}}.
    static RingPtr table_lambda2_3(int cap = kDefaultMaxDegree);
    // Lambda/(I_(2)+I_(1,1)): basis {1, s_1}; the generator is even and odd.
    static RingPtr table_i2_plus_i11(int cap = kDefaultMaxDegree);

    // --- presentation data ---------------------------------------------
    RingKind kind() const { return kind_; }
    int cap() const { return cap_; }
    const Partition& quotient() const { return quotient_; }
    const std::vector<VarFamily>& families() const { return families_; }
    const std::vector<std::string>& var_names() const { return var_names_; }
    const std::vector<int>& var_weights() const { return var_weights_; }
    int components() const { return components_; }
    const TableData& table() const { return *table_; }
    const std::vector<RingPtr>& tensor_factors() const { return tensor_factors_; }
    const RingPtr& line_base() const { return line_base_; }
    bool is_polynomial_type() const;
    bool is_schur_native() const;
    std::string describe() const;

    // --- element constructors -------------------------------------------
    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(const Int& c) const;
    // The canonical generator: s_1, a_1, b_1, l_1, x, or the adjoined line.
    RingElement generator() const;
    RingElement from_sym(SymFunc f) const;      // Schur-native rings
    RingElement from_poly(MultiPoly p) const;   // polynomial-type rings
    RingElement from_coords(std::vector<Int> v) const;
    RingElement from_line(LineElem m) const;    // line-polynomial rings
    RingElement var(int index) const;           // polynomial-type rings
    std::optional<int> var_by_name(const std::string& name) const;
    // Lift an element of the line-polynomial base ring.
    RingElement embed_base(const RingElement& x) const;

    // --- normal form and arithmetic backends ------------------------------
    RingElement::Payload normalize(RingElement::Payload p) const;
    RingElement::Payload add(const RingElement::Payload& a, const RingElement::Payload& b) const;
    RingElement::Payload mul(const RingElement::Payload& a, const RingElement::Payload& b) const;
    RingElement::Payload neg(const RingElement::Payload& a) const;
    bool payload_is_zero(const RingElement::Payload& a) const;

    // --- lambda structure -------------------------------------------------
    // lambda^n(x) in normal form.
    RingElement lambda_op(const RingElement& x, int n) const;
    // sigma^n(x) = (-1)^n lambda^n(-x).
    RingElement sigma_op(const RingElement& x, int n) const;
    // [1, lambda^1(x), ..., lambda^len-1(x)]
    std::vector<RingElement> lambda_series_of(const RingElement& x, int len) const;
    std::vector<RingElement> sigma_series_of(const RingElement& x, int len) const;

    // u_x(phi): evaluate a symmetric function at x via e-basis Jacobi-Trudi
    // words over the lambda-values of x.
    RingElement apply_symfunc(const SymFunc& phi, const RingElement& x) const;
    // s_pi(x) through the h-basis Jacobi-Trudi determinant det(sigma^{pi_i+j-i}(x)).
    RingElement schur_value(const Partition& pi, const RingElement& x) const;

    // lambda-series of one polynomial variable (internal, cached).
    Series<MultiPoly> var_lambda_series(int var, int len) const;

    ~LambdaRing() = default;

private:
    LambdaRing() = default;

    RingKind kind_{};
    int cap_ = kDefaultMaxDegree;
    Partition quotient_;                 // SchurQuotient
    std::vector<VarFamily> families_;    // polynomial-type
    std::vector<std::string> var_names_;
    std::vector<int> var_weights_;
    int components_ = 1;                 // Binomial
    std::shared_ptr<TableData> table_;   // Table
    std::vector<RingPtr> tensor_factors_;
    RingPtr line_base_;                  // LinePoly over Schur-native

    mutable std::mutex cache_mutex_;
    mutable std::map<int, Series<MultiPoly>> var_series_cache_;
    mutable std::map<int, Series<SymFunc>> egen_series_cache_; // Schur-native e_i

    Series<SymFunc> egen_lambda_series(int i, int len) const;
    Series<SymFunc> sym_lambda_series(const SymFunc& f, int len) const;
    Series<MultiPoly> poly_lambda_series(const MultiPoly& f, int len) const;
    std::vector<Int> coords_lambda(const std::vector<Int>& v, int n) const;
    Series<LineElem> line_lambda_series(const LineElem& f, int len) const;

    friend RingPtr make_table_ring(RingKind, int, std::shared_ptr<TableData>);
};

struct BoundWitness {
    Partition pi;
    RingElement value;
};

struct BoundReport {
    Partition lambda;
    int max_weight = 0;
    bool holds_up_to_N = true;
    std::vector<BoundWitness> witnesses;
};

// Evaluates s_pi(x) for every pi containing lambda with |pi| <= N.
// threads > 1 fans the partition list out; results are deterministic.
BoundReport check_bound(const RingElement& x, const Partition& lambda, int N,
                        int threads = 1);

struct EvenOddReport {
    std::optional<int> even_degree;
    std::optional<int> odd_degree;
    int up_to = 0;
};

EvenOddReport even_odd_analysis(const RingElement& x, int N);

} // namespace schurlab
