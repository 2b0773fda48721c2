#include "schurlab/lambda_ring.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <future>
#include <sstream>

#include "schurlab/ring_ops.hpp"

namespace schurlab {

namespace {

SymFuncOps sym_ops(const LambdaRing& r) {
    return SymFuncOps{.max_degree = r.cap(),
                      .reduce = r.kind() == RingKind::SchurQuotient,
                      .quotient = r.quotient()};
}

// Table-ring coordinate arithmetic.
struct TableOps {
    const LambdaRing* ring;
    std::vector<Int> zero() const {
        return std::vector<Int>(ring->table().labels.size(), 0);
    }
    std::vector<Int> one() const {
        auto v = zero();
        v[0] = 1; // label 0 is the unit by construction
        return v;
    }
    std::vector<Int> scalar(const Int& c) const {
        auto v = zero();
        v[0] = c;
        return v;
    }
    std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const {
        auto v = a;
        for (size_t i = 0; i < v.size(); ++i) v[i] += b[i];
        return v;
    }
    std::vector<Int> neg(const std::vector<Int>& a) const {
        auto v = a;
        for (auto& c : v) c = -c;
        return v;
    }
    std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) const {
        auto& t = ring->table();
        auto v = zero();
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                if (b[j] == 0) continue;
                auto& entry = t.product[i][j];
                if (!entry)
                    throw CapExceeded("table ring: product of " + t.labels[i] + " and " +
                                      t.labels[j] + " exceeds the basis truncation");
                for (size_t k = 0; k < v.size(); ++k) v[k] += a[i] * b[j] * (*entry)[k];
            }
        }
        return v;
    }
    bool is_zero(const std::vector<Int>& a) const {
        return std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; });
    }
};

// lambda-series of a ring product u*v from the factor series, via the
// universal product polynomials.
template <class T, class Ops>
Series<T> lambda_series_of_product(const Series<T>& a, const Series<T>& b,
                                   const Ops& ops, size_t len, int cap) {
    Series<T> out(len, ops.zero());
    if (len == 0) return out;
    out[0] = ops.one();
    for (size_t n = 1; n < len; ++n)
        out[n] = product_polynomial(static_cast<int>(n), cap).evaluate(a, b, ops);
    return out;
}

// lambda_t(c * u) = lambda_t(u)^c as plain series; negative c inverts.
template <class T, class Ops>
Series<T> lambda_series_of_multiple(const Series<T>& s, const Int& c, const Ops& ops,
                                    size_t len) {
    Int e = c;
    Series<T> base = s;
    if (e < 0) {
        base = series_invert(s, ops, len);
        e = -e;
    }
    Series<T> out(len, ops.zero());
    if (len > 0) out[0] = ops.one();
    // binary powering with plain series multiplication
    while (e > 0) {
        if ((e & 1) != 0) out = series_multiply(out, base, ops, len);
        e >>= 1;
        if (e > 0) base = series_multiply(base, base, ops, len);
    }
    return out;
}

template <class T, class Ops>
Series<T> unit_element_series(const Ops& ops, size_t len) {
    // lambda_t(1) = 1 + t: the unit is a line element.
    Series<T> s(len, ops.zero());
    if (len > 0) s[0] = ops.one();
    if (len > 1) s[1] = ops.one();
    return s;
}

} // namespace

RingElement RingElementOps::zero() const { return ring->zero(); }
RingElement RingElementOps::one() const { return ring->one(); }
RingElement RingElementOps::scalar(const Int& c) const { return ring->from_int(c); }

// ---------------------------------------------------------------------------
// RingElement
// ---------------------------------------------------------------------------

RingElement::RingElement(RingPtr ring, Payload payload) : ring_(std::move(ring)) {
    payload_ = ring_->normalize(std::move(payload));
}

bool RingElement::is_zero() const { return ring_->payload_is_zero(payload_); }

long RingElement::degree() const {
    if (auto* f = std::get_if<SymFunc>(&payload_)) return f->degree();
    if (auto* p = std::get_if<MultiPoly>(&payload_))
        return p->weighted_degree(ring_->var_weights());
    if (auto* v = std::get_if<std::vector<Int>>(&payload_)) {
        if (ring_->kind() == RingKind::Binomial) return 0;
        long d = 0;
        for (size_t i = 0; i < v->size(); ++i)
            if ((*v)[i] != 0) d = std::max<long>(d, ring_->table().degrees[i]);
        return d;
    }
    auto& m = std::get<LineElem>(payload_);
    long d = 0;
    for (auto& [k, f] : m)
        if (!f.is_zero()) d = std::max<long>(d, k + f.degree());
    return d;
}

RingElement RingElement::operator-() const {
    return RingElement(ring_, ring_->neg(payload_));
}

RingElement RingElement::operator+(const RingElement& o) const {
    if (ring_ != o.ring_) throw PreconditionError("ring element mismatch in +");
    return RingElement(ring_, ring_->add(payload_, o.payload_));
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
    if (ring_ != o.ring_) throw PreconditionError("ring element mismatch in *");
    return RingElement(ring_, ring_->mul(payload_, o.payload_));
}

RingElement RingElement::operator*(const Int& c) const {
    return *this * RingElement(ring_, ring_->from_int(c).payload());
}

bool RingElement::operator==(const RingElement& o) const {
    return ring_ == o.ring_ && payload_ == o.payload_;
}

std::string RingElement::to_string() const {
    if (auto* f = std::get_if<SymFunc>(&payload_)) return f->to_string();
    if (auto* p = std::get_if<MultiPoly>(&payload_)) return p->to_string(ring_->var_names());
    if (auto* v = std::get_if<std::vector<Int>>(&payload_)) {
        if (ring_->kind() == RingKind::Binomial) {
            if (v->size() == 1) return (*v)[0].str();
            std::string out = "(";
            for (size_t i = 0; i < v->size(); ++i) {
                if (i) out += ", ";
                out += (*v)[i].str();
            }
            return out + ")";
        }
        std::string out;
        bool first = true;
        for (size_t i = 0; i < v->size(); ++i) {
            if ((*v)[i] == 0) continue;
            Int a = (*v)[i];
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1 || ring_->table().labels[i] == "1") out += a.str();
            if (a != 1 && ring_->table().labels[i] != "1") out += "*";
            if (ring_->table().labels[i] != "1") out += ring_->table().labels[i];
        }
        return first ? "0" : out;
    }
    auto& m = std::get<LineElem>(payload_);
    if (m.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [k, f] : m) {
        if (!first) out += " + ";
        first = false;
        out += "(" + f.to_string() + ")";
        if (k == 1) out += "*a";
        else if (k > 1) out += "*a^" + std::to_string(k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// LambdaRing: factories
// ---------------------------------------------------------------------------

bool LambdaRing::is_polynomial_type() const {
    switch (kind_) {
        case RingKind::Even:
        case RingKind::Odd:
        case RingKind::Split:
        case RingKind::Tensor:
            return true;
        case RingKind::LinePoly:
            // the variable table is only populated over polynomial-type bases
            return !var_names_.empty();
        default:
            return false;
    }
}

bool LambdaRing::is_schur_native() const {
    return kind_ == RingKind::Free || kind_ == RingKind::SchurQuotient;
}

RingPtr LambdaRing::free_ring(int cap) {
    auto r = std::shared_ptr<LambdaRing>(new LambdaRing());
    r->kind_ = RingKind::Free;
    r->cap_ = cap;
    return r;
}

RingPtr LambdaRing::schur_quotient(Partition lambda, int cap) {
    auto r = std::shared_ptr<LambdaRing>(new LambdaRing());
    r->kind_ = RingKind::SchurQuotient;
    r->cap_ = cap;
    r->quotient_ = std::move(lambda);
    return r;
}

namespace {

void add_family(LambdaRing& r, std::vector<VarFamily>& fams, std::vector<std::string>& names,
                std::vector<int>& weights, VarFamily::Kind kind, int size,
                const std::string& prefix) {
    VarFamily fam{kind, static_cast<int>(names.size()), size, prefix};
    for (int k = 1; k <= size; ++k) {
        names.push_back(size == 1 && kind == VarFamily::Kind::Line ? prefix
                                                                   : prefix + std::to_string(k));
        weights.push_back(kind == VarFamily::Kind::Line ? 1 : k);
    }
    fams.push_back(fam);
    (void)r;
}

} // namespace

RingPtr LambdaRing::even_free(int n, int cap) {
    if (n < 0) throw PreconditionError("even_free: n must be nonnegative");
    auto r = std::shared_ptr<LambdaRing>(new LambdaRing());
    r->kind_ = RingKind::Even;
    r->cap_ = cap;
    add_family(*r, r->families_, r->var_names_, r->var_weights_, VarFamily::Kind::Even, n, "a");
    return r;
}

RingPtr LambdaRing::odd_free(int n, int cap) {
    if (n < 0) throw PreconditionError("odd_free: n must be nonnegative");
    auto r = std::shared_ptr<LambdaRing>(new LambdaRing());
    r->kind_ = RingKind::Odd;
    r->cap_ = cap;
    add_family(*r, r->families_, r->var_names_, r->var_weights_, VarFamily::Kind::Odd, n, "b");
    return r;
}

RingPtr LambdaRing::split_ring(int n, int cap) {
    if (n < 0) throw PreconditionError("split_ring: n must be nonnegative");
    auto r = std::shared_ptr<LambdaRing>(new LambdaRing());
    r->kind_ = RingKind::Split;
    r->cap_ = cap;
    VarFamily fam{VarFamily::Kind::Line, 0, n, "l"};
    for (int k = 1; k <= n; ++k) {
        r->var_names_.push_back("l" + std::to_string(k));
        r->var_weights_.push_back(1);
    }
    r->families_.push_back(fam);
    return r;
}

RingPtr LambdaRing::binomial_ring(int components, int cap) {
    if (components < 1) throw PreconditionError("binomial_ring: need at least one component");
    auto r = std::shared_ptr<LambdaRing>(new LambdaRing());
    r->kind_ = RingKind::Binomial;
    r->cap_ = cap;
    r->components_ = components;
    return r;
}

RingPtr LambdaRing::tensor(const std::vector<RingPtr>& factors) {
    auto r = std::shared_ptr<LambdaRing>(new LambdaRing());
    r->kind_ = RingKind::Tensor;
    int cap = kDefaultMaxDegree;
    bool first = true;
    std::vector<std::string> used_prefixes;
    for (auto& f : factors) {
        cap = first ? f->cap() : std::min(cap, f->cap());
        first = false;
    }
    r->cap_ = cap;
    std::function<void(const RingPtr&)> absorb = [&](const RingPtr& f) {
        auto add = [&](VarFamily::Kind kind, int size, std::string prefix) {
            int bump = 0;
            std::string candidate = prefix;
            while (std::find(used_prefixes.begin(), used_prefixes.end(), candidate) !=
                   used_prefixes.end())
                candidate = prefix + "_" + std::to_string(++bump);
            used_prefixes.push_back(candidate);
            VarFamily fam{kind, static_cast<int>(r->var_names_.size()), size, candidate};
            for (int k = 1; k <= size; ++k) {
                r->var_names_.push_back(candidate + std::to_string(k));
                r->var_weights_.push_back(kind == VarFamily::Kind::Line ? 1 : k);
            }
            r->families_.push_back(fam);
        };
        switch (f->kind()) {
            case RingKind::Even:
                add(VarFamily::Kind::Even, f->families_[0].size, "a");
                break;
            case RingKind::Odd:
                add(VarFamily::Kind::Odd, f->families_[0].size, "b");
                break;
            case RingKind::Split:
                add(VarFamily::Kind::Line, f->families_[0].size, "l");
                break;
            case RingKind::Free:
                add(VarFamily::Kind::FreeE, cap, "e");
                break;
            case RingKind::Tensor:
                for (auto& g : f->tensor_factors_) absorb(g);
                break;
            case RingKind::LinePoly:
                if (!f->is_polynomial_type())
                    throw PreconditionError(
                        "tensor: line-polynomial factors over Schur-native bases are not supported");
                absorb(f->line_base_);
                add(VarFamily::Kind::Line, 1, "a");
                break;
            default:
                throw PreconditionError("tensor: unsupported factor presentation");
        }
    };
    for (auto& f : factors) absorb(f);
    r->tensor_factors_ = factors;
    return r;
}

RingPtr LambdaRing::line_poly(RingPtr base) {
    auto r = std::shared_ptr<LambdaRing>(new LambdaRing());
    r->kind_ = RingKind::LinePoly;
    r->cap_ = base->cap();
    r->line_base_ = base;
    if (base->is_polynomial_type()) {
        r->families_ = base->families_;
        r->var_names_ = base->var_names_;
        r->var_weights_ = base->var_weights_;
        std::string name = "a";
        while (std::find(r->var_names_.begin(), r->var_names_.end(), name) !=
               r->var_names_.end())
            name += "'";
        VarFamily fam{VarFamily::Kind::Line, static_cast<int>(r->var_names_.size()), 1, name};
        r->var_names_.push_back(name);
        r->var_weights_.push_back(1);
        r->families_.push_back(fam);
    } else if (!base->is_schur_native()) {
        throw PreconditionError("line_poly: base must be polynomial-type or Schur-native");
    }
    return r;
}

std::string LambdaRing::describe() const {
    switch (kind_) {
        case RingKind::Free: return "free";
        case RingKind::Even: return "even:" + std::to_string(families_[0].size);
        case RingKind::Odd: return "odd:" + std::to_string(families_[0].size);
        case RingKind::SchurQuotient: return "quot:" + quotient_.to_string();
        case RingKind::Binomial: return "binomial:" + std::to_string(components_);
        case RingKind::Split: return "split:" + std::to_string(var_names_.size());
        case RingKind::Tensor: {
            std::string out = "tensor(";
            for (size_t i = 0; i < tensor_factors_.size(); ++i) {
                if (i) out += ", ";
                out += tensor_factors_[i]->describe();
            }
            return out + ")";
        }
        case RingKind::LinePoly: return "line_poly(" + line_base_->describe() + ")";
        case RingKind::Table: return "table:" + table_->labels[table_->generator_index];
    }
    return "?";
}

// ---------------------------------------------------------------------------
// element constructors and payload arithmetic
// ---------------------------------------------------------------------------

RingElement LambdaRing::zero() const {
    return from_int(0);
}

RingElement LambdaRing::one() const {
    return from_int(1);
}

RingElement LambdaRing::from_int(const Int& c) const {
    auto self = shared_from_this();
    switch (kind_) {
        case RingKind::Free:
        case RingKind::SchurQuotient:
            return RingElement(self, SymFunc::one() * c);
        case RingKind::Binomial:
            return RingElement(self, std::vector<Int>(components_, c));
        case RingKind::Table: {
            std::vector<Int> v(table_->labels.size(), 0);
            v[0] = c;
            return RingElement(self, std::move(v));
        }
        case RingKind::LinePoly:
            if (!is_polynomial_type()) {
                LineElem m;
                if (c != 0) m[0] = SymFunc::one() * c;
                return RingElement(self, std::move(m));
            }
            [[fallthrough]];
        default:
            return RingElement(self, MultiPoly::constant(c));
    }
}

RingElement LambdaRing::generator() const {
    auto self = shared_from_this();
    switch (kind_) {
        case RingKind::Free:
        case RingKind::SchurQuotient:
            return RingElement(self, SymFunc::schur(Partition{1}));
        case RingKind::Binomial:
            throw PreconditionError("binomial ring has no distinguished generator");
        case RingKind::Table: {
            std::vector<Int> v(table_->labels.size(), 0);
            v[table_->generator_index] = 1;
            return RingElement(self, std::move(v));
        }
        case RingKind::LinePoly:
            if (!is_polynomial_type()) {
                LineElem m;
                m[1] = SymFunc::one();
                return RingElement(self, std::move(m));
            }
            return var(static_cast<int>(var_names_.size()) - 1);
        default:
            if (var_names_.empty()) return zero();
            return var(0);
    }
}

RingElement LambdaRing::from_sym(SymFunc f) const {
    if (!is_schur_native()) throw PreconditionError("from_sym: not a Schur-native ring");
    return RingElement(shared_from_this(), std::move(f));
}

RingElement LambdaRing::from_poly(MultiPoly p) const {
    if (!is_polynomial_type()) throw PreconditionError("from_poly: not a polynomial-type ring");
    return RingElement(shared_from_this(), std::move(p));
}

RingElement LambdaRing::from_coords(std::vector<Int> v) const {
    if (kind_ != RingKind::Binomial && kind_ != RingKind::Table)
        throw PreconditionError("from_coords: ring has no coordinate payload");
    return RingElement(shared_from_this(), std::move(v));
}

RingElement LambdaRing::from_line(LineElem m) const {
    if (kind_ != RingKind::LinePoly || is_polynomial_type())
        throw PreconditionError("from_line: not a line-polynomial ring");
    return RingElement(shared_from_this(), std::move(m));
}

RingElement LambdaRing::var(int index) const {
    if (!is_polynomial_type() || index < 0 ||
        index >= static_cast<int>(var_names_.size()))
        throw PreconditionError("var: no such variable");
    return RingElement(shared_from_this(), MultiPoly::variable(index));
}

std::optional<int> LambdaRing::var_by_name(const std::string& name) const {
    for (size_t i = 0; i < var_names_.size(); ++i)
        if (var_names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

RingElement LambdaRing::embed_base(const RingElement& x) const {
    if (kind_ != RingKind::LinePoly) throw PreconditionError("embed_base: not a line-polynomial ring");
    if (x.ring() != line_base_) throw PreconditionError("embed_base: element not from the base ring");
    if (is_polynomial_type()) return from_poly(x.poly());
    LineElem m;
    if (!x.sym().is_zero()) m[0] = x.sym();
    return RingElement(shared_from_this(), std::move(m));
}

RingElement::Payload LambdaRing::normalize(RingElement::Payload p) const {
    if (auto* f = std::get_if<SymFunc>(&p)) {
        if (kind_ == RingKind::SchurQuotient) return reduce_mod_ideal(*f, quotient_);
        return p;
    }
    if (auto* m = std::get_if<LineElem>(&p)) {
        LineElem out;
        for (auto& [k, f] : *m) {
            SymFunc g = line_base_->kind() == RingKind::SchurQuotient
                            ? reduce_mod_ideal(f, line_base_->quotient())
                            : f;
            if (!g.is_zero()) out[k] = std::move(g);
        }
        return out;
    }
    if (auto* v = std::get_if<std::vector<Int>>(&p)) {
        size_t want = kind_ == RingKind::Binomial ? components_ : table_->labels.size();
        if (v->size() != want)
            throw PreconditionError("coordinate payload has the wrong length");
    }
    return p;
}

bool LambdaRing::payload_is_zero(const RingElement::Payload& p) const {
    if (auto* f = std::get_if<SymFunc>(&p)) return f->is_zero();
    if (auto* q = std::get_if<MultiPoly>(&p)) return q->is_zero();
    if (auto* v = std::get_if<std::vector<Int>>(&p))
        return std::all_of(v->begin(), v->end(), [](const Int& c) { return c == 0; });
    auto& m = std::get<LineElem>(p);
    return std::all_of(m.begin(), m.end(), [](auto& kv) { return kv.second.is_zero(); });
}

RingElement::Payload LambdaRing::add(const RingElement::Payload& a,
                                     const RingElement::Payload& b) const {
    if (auto* f = std::get_if<SymFunc>(&a)) return *f + std::get<SymFunc>(b);
    if (auto* p = std::get_if<MultiPoly>(&a)) return *p + std::get<MultiPoly>(b);
    if (auto* v = std::get_if<std::vector<Int>>(&a)) {
        auto out = *v;
        auto& w = std::get<std::vector<Int>>(b);
        for (size_t i = 0; i < out.size(); ++i) out[i] += w[i];
        return out;
    }
    LineElem out = std::get<LineElem>(a);
    for (auto& [k, f] : std::get<LineElem>(b)) {
        auto it = out.find(k);
        if (it == out.end()) out[k] = f;
        else {
            it->second += f;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

RingElement::Payload LambdaRing::neg(const RingElement::Payload& a) const {
    if (auto* f = std::get_if<SymFunc>(&a)) return -*f;
    if (auto* p = std::get_if<MultiPoly>(&a)) return -*p;
    if (auto* v = std::get_if<std::vector<Int>>(&a)) {
        auto out = *v;
        for (auto& c : out) c = -c;
        return out;
    }
    LineElem out;
    for (auto& [k, f] : std::get<LineElem>(a)) out[k] = -f;
    return out;
}

RingElement::Payload LambdaRing::mul(const RingElement::Payload& a,
                                     const RingElement::Payload& b) const {
    if (auto* f = std::get_if<SymFunc>(&a)) {
        SymFunc prod = multiply(*f, std::get<SymFunc>(b), cap_);
        if (kind_ == RingKind::SchurQuotient) prod = reduce_mod_ideal(prod, quotient_);
        return prod;
    }
    if (auto* p = std::get_if<MultiPoly>(&a)) return *p * std::get<MultiPoly>(b);
    if (std::holds_alternative<std::vector<Int>>(a)) {
        auto& v = std::get<std::vector<Int>>(a);
        auto& w = std::get<std::vector<Int>>(b);
        if (kind_ == RingKind::Binomial) {
            auto out = v;
            for (size_t i = 0; i < out.size(); ++i) out[i] *= w[i];
            return out;
        }
        return TableOps{this}.mul(v, w);
    }
    SymFuncOps base_ops = sym_ops(*line_base_);
    LineElem out;
    for (auto& [i, f] : std::get<LineElem>(a))
        for (auto& [j, g] : std::get<LineElem>(b)) {
            SymFunc prod = base_ops.mul(f, g);
            if (prod.is_zero()) continue;
            auto it = out.find(i + j);
            if (it == out.end()) out[i + j] = prod;
            else {
                it->second += prod;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// lambda structure
// ---------------------------------------------------------------------------

Series<MultiPoly> LambdaRing::var_lambda_series(int v, int len) const {
    {
        std::lock_guard lock(cache_mutex_);
        auto it = var_series_cache_.find(v);
        if (it != var_series_cache_.end() && it->second.size() >= static_cast<size_t>(len)) {
            Series<MultiPoly> s(it->second.begin(), it->second.begin() + len);
            return s;
        }
    }
    const VarFamily* fam = nullptr;
    for (auto& f : families_)
        if (v >= f.start && v < f.start + f.size) { fam = &f; break; }
    if (!fam) throw PreconditionError("var_lambda_series: unknown variable");
    const int k = v - fam->start + 1;
    MultiPolyOps ops;
    Series<MultiPoly> s(len, MultiPoly{});
    if (len > 0) s[0] = MultiPoly::constant(1);
    switch (fam->kind) {
        case VarFamily::Kind::Line:
            if (len > 1) s[1] = MultiPoly::variable(v);
            break;
        case VarFamily::Kind::Even: {
            std::vector<MultiPoly> xs{MultiPoly::constant(1)};
            for (int i = 1; i <= (len - 1) * k; ++i)
                xs.push_back(i <= fam->size ? MultiPoly::variable(fam->start + i - 1)
                                            : MultiPoly{});
            for (int j = 1; j < len; ++j)
                s[j] = composition_polynomial(j, k, cap_).evaluate(xs, {}, ops);
            break;
        }
        case VarFamily::Kind::Odd: {
            // b_k = (-1)^k lambda^k(c) with c = -b and lambda^i(c) = (-1)^i b_i.
            std::vector<MultiPoly> cs{MultiPoly::constant(1)};
            for (int i = 1; i <= (len - 1) * k; ++i) {
                MultiPoly value =
                    i <= fam->size ? MultiPoly::variable(fam->start + i - 1) : MultiPoly{};
                cs.push_back(i % 2 == 0 ? value : -value);
            }
            Series<MultiPoly> u(len, MultiPoly{});
            u[0] = MultiPoly::constant(1);
            for (int j = 1; j < len; ++j)
                u[j] = composition_polynomial(j, k, cap_).evaluate(cs, {}, ops);
            s = k % 2 == 0 ? u : series_invert(u, ops, len);
            break;
        }
        case VarFamily::Kind::FreeE: {
            std::vector<MultiPoly> es{MultiPoly::constant(1)};
            for (int i = 1; i <= (len - 1) * k; ++i) {
                if (i > fam->size)
                    throw CapExceeded("free factor: lambda-series needs e_" + std::to_string(i) +
                                      " beyond the cap");
                es.push_back(MultiPoly::variable(fam->start + i - 1));
            }
            for (int j = 1; j < len; ++j)
                s[j] = composition_polynomial(j, k, cap_).evaluate(es, {}, ops);
            break;
        }
    }
    {
        std::lock_guard lock(cache_mutex_);
        auto& slot = var_series_cache_[v];
        if (slot.size() < s.size()) slot = s;
    }
    return s;
}

Series<SymFunc> LambdaRing::egen_lambda_series(int i, int len) const {
    {
        std::lock_guard lock(cache_mutex_);
        auto it = egen_series_cache_.find(i);
        if (it != egen_series_cache_.end() && it->second.size() >= static_cast<size_t>(len))
            return Series<SymFunc>(it->second.begin(), it->second.begin() + len);
    }
    SymFuncOps ops = sym_ops(*this);
    std::vector<SymFunc> es{SymFunc::one()};
    for (int j = 1; j <= (len - 1) * i; ++j) es.push_back(ops.normalize(SymFunc::e(j)));
    Series<SymFunc> s(len, SymFunc{});
    if (len > 0) s[0] = SymFunc::one();
    for (int j = 1; j < len; ++j)
        s[j] = composition_polynomial(j, i, cap_).evaluate(es, {}, ops);
    {
        std::lock_guard lock(cache_mutex_);
        auto& slot = egen_series_cache_[i];
        if (slot.size() < s.size()) slot = s;
    }
    return s;
}

Series<SymFunc> LambdaRing::sym_lambda_series(const SymFunc& f, int len) const {
    SymFuncOps ops = sym_ops(*this);
    // decompose into e-words
    std::map<Partition, Int> words;
    for (auto& [pi, c] : f.coeffs())
        for (auto& sw : jacobi_trudi(pi, GenBasis::e)) {
            std::vector<int> idx;
            for (auto& g : sw.word) idx.push_back(g.index);
            std::sort(idx.begin(), idx.end(), std::greater<>());
            words[Partition(idx)] += c * sw.coeff;
        }
    Series<SymFunc> out(len, SymFunc{});
    if (len > 0) out[0] = SymFunc::one();
    for (auto& [word, c] : words) {
        if (c == 0) continue;
        Series<SymFunc> mono = unit_element_series<SymFunc>(ops, len);
        for (int idx : word.parts())
            mono = lambda_series_of_product(mono, egen_lambda_series(idx, len), ops, len, cap_);
        out = series_multiply(out, lambda_series_of_multiple(mono, c, ops, len), ops, len);
    }
    return out;
}

Series<MultiPoly> LambdaRing::poly_lambda_series(const MultiPoly& f, int len) const {
    MultiPolyOps ops;
    Series<MultiPoly> out(len, MultiPoly{});
    if (len > 0) out[0] = MultiPoly::constant(1);
    for (auto& [e, c] : f.terms()) {
        Series<MultiPoly> mono = unit_element_series<MultiPoly>(ops, len);
        for (size_t v = 0; v < e.size(); ++v)
            for (int rep = 0; rep < e[v]; ++rep)
                mono = lambda_series_of_product(mono, var_lambda_series(static_cast<int>(v), len),
                                                ops, len, cap_);
        out = series_multiply(out, lambda_series_of_multiple(mono, c, ops, len), ops, len);
    }
    return out;
}

std::vector<Int> LambdaRing::coords_lambda(const std::vector<Int>& v, int n) const {
    std::vector<Int> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = binomial(v[i], n);
    return out;
}

Series<LineElem> LambdaRing::line_lambda_series(const LineElem& f, int len) const {
    SymFuncOps base_ops = sym_ops(*line_base_);
    struct LineOpsLocal {
        const LambdaRing* R;
        SymFuncOps base;
        LineElem zero() const { return {}; }
        LineElem one() const { return LineElem{{0, SymFunc::one()}}; }
        LineElem scalar(const Int& c) const {
            LineElem m;
            if (c != 0) m[0] = SymFunc::one() * c;
            return m;
        }
        LineElem add(const LineElem& a, const LineElem& b) const {
            return std::get<LineElem>(R->add(a, b));
        }
        LineElem mul(const LineElem& a, const LineElem& b) const {
            return std::get<LineElem>(R->mul(a, b));
        }
        LineElem neg(const LineElem& a) const { return std::get<LineElem>(R->neg(a)); }
        bool is_zero(const LineElem& a) const { return R->payload_is_zero(a); }
    } ops{this, base_ops};

    Series<LineElem> out(len);
    for (auto& s : out) s = ops.zero();
    if (len > 0) out[0] = ops.one();
    // f = sum_k f_k a^k; each summand is a product of the base element f_k and
    // the line a^k.
    for (auto& [k, fk] : f) {
        Series<SymFunc> base_series = line_base_->sym_lambda_series(fk, len);
        Series<LineElem> lifted(len);
        for (int j = 0; j < len; ++j)
            lifted[j] = base_series[j].is_zero() ? ops.zero()
                                                 : LineElem{{0, base_series[j]}};
        Series<LineElem> summand;
        if (k == 0) {
            summand = std::move(lifted);
        } else {
            Series<LineElem> line(len);
            for (auto& s : line) s = ops.zero();
            line[0] = ops.one();
            if (len > 1) line[1] = LineElem{{k, SymFunc::one()}}; // a^k is a line
            summand = lambda_series_of_product(lifted, line, ops, len, cap_);
        }
        out = series_multiply(out, summand, ops, len);
    }
    return out;
}

RingElement LambdaRing::lambda_op(const RingElement& x, int n) const {
    if (n < 0) throw PreconditionError("lambda_op: n must be nonnegative");
    if (n == 0) return one();
    check_cap(n, cap_, "lambda_op");
    long d = x.degree();
    if (d > 1) check_cap(static_cast<long>(n) * d, cap_, "lambda_op");
    if (kind_ == RingKind::Binomial)
        return RingElement(shared_from_this(), coords_lambda(x.coords(), n));
    return lambda_series_of(x, n + 1)[n];
}

RingElement LambdaRing::sigma_op(const RingElement& x, int n) const {
    if (n < 0) throw PreconditionError("sigma_op: n must be nonnegative");
    if (n == 0) return one();
    check_cap(n, cap_, "sigma_op");
    long d = x.degree();
    if (d > 1) check_cap(static_cast<long>(n) * d, cap_, "sigma_op");
    return sigma_series_of(x, n + 1)[n];
}

std::vector<RingElement> LambdaRing::lambda_series_of(const RingElement& x, int len) const {
    auto self = shared_from_this();
    std::vector<RingElement> out;
    out.reserve(len);
    if (kind_ == RingKind::Binomial) {
        for (int n = 0; n < len; ++n)
            out.emplace_back(self, coords_lambda(x.coords(), n));
        return out;
    }
    if (auto* f = std::get_if<SymFunc>(&x.payload())) {
        for (auto& s : sym_lambda_series(*f, len)) out.emplace_back(self, s);
        return out;
    }
    if (auto* p = std::get_if<MultiPoly>(&x.payload())) {
        for (auto& s : poly_lambda_series(*p, len)) out.emplace_back(self, s);
        return out;
    }
    if (auto* m = std::get_if<LineElem>(&x.payload())) {
        for (auto& s : line_lambda_series(*m, len)) out.emplace_back(self, s);
        return out;
    }
    // table coordinates
    TableOps ops{this};
    auto& t = *table_;
    auto& v = x.coords();
    Series<std::vector<Int>> acc(len, ops.zero());
    if (len > 0) acc[0] = ops.one();
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Series<std::vector<Int>> basis_series;
        basis_series.reserve(len);
        for (int n = 0; n < len; ++n) {
            if (n >= static_cast<int>(t.lambda[i].size()) || !t.lambda[i][n])
                throw CapExceeded("table ring: lambda^" + std::to_string(n) + "(" + t.labels[i] +
                                  ") exceeds the basis truncation");
            basis_series.push_back(*t.lambda[i][n]);
        }
        acc = series_multiply(acc, lambda_series_of_multiple(basis_series, v[i], ops, len), ops,
                              len);
    }
    for (auto& s : acc) out.emplace_back(self, s);
    return out;
}

std::vector<RingElement> LambdaRing::sigma_series_of(const RingElement& x, int len) const {
    // sigma_t(x) = lambda_{-t}(x)^{-1}
    auto lam = lambda_series_of(x, len);
    RingElementOps ops{this};
    for (size_t i = 1; i < lam.size(); i += 2) lam[i] = -lam[i];
    return series_invert(lam, ops, len);
}

RingElement LambdaRing::apply_symfunc(const SymFunc& phi, const RingElement& x) const {
    int d = phi.degree();
    check_cap(d, cap_, "apply_symfunc");
    long xd = x.degree();
    if (xd > 1) check_cap(static_cast<long>(d) * xd, cap_, "apply_symfunc");
    RingElementOps ops{this};
    auto values = lambda_series_of(x, d + 1);
    return evaluate_at_lambda_values(phi, values, ops);
}

RingElement LambdaRing::schur_value(const Partition& pi, const RingElement& x) const {
    check_cap(pi.weight(), cap_, "schur_value");
    long xd = x.degree();
    if (xd > 1) check_cap(static_cast<long>(pi.weight()) * xd, cap_, "schur_value");
    const int m = pi.length();
    if (m == 0) return one();
    int max_idx = pi.part(1) + m - 1;
    auto sig = sigma_series_of(x, max_idx + 1);
    // det(sigma^{pi_i + j - i}(x)) via DP over used-column subsets. The
    // index-sum of a partial assignment depends only on (row, mask); partial
    // assignments whose sum exceeds |pi| cannot complete (the remaining
    // entries have nonnegative indices) and are pruned.
    const int total = pi.weight();
    std::vector<RingElement> state(static_cast<size_t>(1) << m);
    std::vector<bool> live(state.size(), false);
    state[0] = one();
    live[0] = true;
    for (int i = 1; i <= m; ++i) {
        std::vector<RingElement> next(state.size());
        std::vector<bool> nlive(state.size(), false);
        for (size_t mask = 0; mask < state.size(); ++mask) {
            if (!live[mask] || std::popcount(mask) != i - 1) continue;
            int colsum = 0, rowsum = 0;
            for (int k = 1; k <= m; ++k)
                if (mask & (static_cast<size_t>(1) << (k - 1))) colsum += k;
            for (int r = 1; r < i; ++r) rowsum += pi.part(r) - r;
            for (int j = 1; j <= m; ++j) {
                size_t bit = static_cast<size_t>(1) << (j - 1);
                if (mask & bit) continue;
                int idx = pi.part(i) + j - i;
                if (idx < 0) continue;
                if (rowsum + colsum + pi.part(i) + j - i > total) continue;
                // sign: inversions against already-used columns right of j
                int flips = 0;
                for (int k = j + 1; k <= m; ++k)
                    if (mask & (static_cast<size_t>(1) << (k - 1))) ++flips;
                RingElement entry = idx == 0 ? one() : sig[idx];
                if (entry.is_zero()) continue;
                RingElement contrib = state[mask] * entry;
                if (flips % 2 != 0) contrib = -contrib;
                size_t nm = mask | bit;
                if (!nlive[nm]) {
                    next[nm] = contrib;
                    nlive[nm] = true;
                } else {
                    next[nm] = next[nm] + contrib;
                }
            }
        }
        state = std::move(next);
        live = std::move(nlive);
    }
    size_t full = state.size() - 1;
    return live[full] ? state[full] : zero();
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

BoundReport check_bound(const RingElement& x, const Partition& lambda, int N, int threads) {
    const LambdaRing& R = *x.ring();
    check_cap(N, R.cap(), "check_bound");
    BoundReport report;
    report.lambda = lambda;
    report.max_weight = N;
    std::vector<Partition> todo;
    for (int w = lambda.weight(); w <= N; ++w)
        for (auto& pi : superpartitions_of(lambda, w)) todo.push_back(pi);

    auto eval_range = [&](size_t begin, size_t end) {
        std::vector<BoundWitness> found;
        for (size_t i = begin; i < end; ++i) {
            RingElement v = R.schur_value(todo[i], x);
            if (!v.is_zero()) found.push_back({todo[i], v});
        }
        return found;
    };

    if (threads <= 1 || todo.size() < 2) {
        report.witnesses = eval_range(0, todo.size());
    } else {
        size_t nt = std::min<size_t>(threads, todo.size());
        std::vector<std::future<std::vector<BoundWitness>>> futures;
        size_t chunk = (todo.size() + nt - 1) / nt;
        for (size_t t = 0; t < nt; ++t) {
            size_t begin = t * chunk, end = std::min(todo.size(), begin + chunk);
            if (begin >= end) break;
            futures.push_back(std::async(std::launch::async, eval_range, begin, end));
        }
        for (auto& f : futures) {
            auto part = f.get();
            report.witnesses.insert(report.witnesses.end(), part.begin(), part.end());
        }
        std::sort(report.witnesses.begin(), report.witnesses.end(),
                  [](const BoundWitness& a, const BoundWitness& b) { return a.pi < b.pi; });
    }
    report.holds_up_to_N = report.witnesses.empty();
    return report;
}

EvenOddReport even_odd_analysis(const RingElement& x, int N) {
    const LambdaRing& R = *x.ring();
    check_cap(N, R.cap(), "even_odd_analysis");
    EvenOddReport rep;
    rep.up_to = N;
    auto lam = R.lambda_series_of(x, N + 1);
    auto sig = R.sigma_series_of(x, N + 1);
    auto detect = [&](const std::vector<RingElement>& s) -> std::optional<int> {
        int last = 0;
        for (int k = 1; k <= N; ++k)
            if (!s[k].is_zero()) last = k;
        if (last == N && !s[N].is_zero()) return std::nullopt;
        return last;
    };
    rep.even_degree = detect(lam);
    rep.odd_degree = detect(sig);
    return rep;
}

// ---------------------------------------------------------------------------
// table rings
// ---------------------------------------------------------------------------

namespace {

// Quotient-reduction coordinates for Lambda_(2,2)/I: the subring Z + x Z[a,b]
// of Z[a,b] with x = a+b, modulo J = (x^2 b) and the x b^{2i-1}. Internal
// basis: 1, x a^i (i >= 0), x b^{2i} (i >= 1).
struct Lambda23Builder {
    int cap;
    RingPtr model; // tensor(even(1), odd(1)): variables a, b
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::map<std::string, int> index;

    // internal coordinates keyed by (kind, i): kind 0 = unit, 1 = x a^i, 2 = x b^{2i}
    using Internal = std::map<std::pair<int, int>, Int>;

    MultiPoly a, b, x;

    explicit Lambda23Builder(int cap_) : cap(cap_) {
        model = LambdaRing::tensor({LambdaRing::even_free(1, cap), LambdaRing::odd_free(1, cap)});
        a = MultiPoly::variable(0);
        b = MultiPoly::variable(1);
        x = a + b;
        labels.push_back("1");
        degrees.push_back(0);
        for (int n = 1; n <= cap; ++n) {
            labels.push_back("x^" + std::to_string(n));
            degrees.push_back(n);
        }
        for (int n = 1; 2 * n + 1 <= cap; ++n) {
            labels.push_back("x*b^" + std::to_string(2 * n));
            degrees.push_back(2 * n + 1);
        }
        for (size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
    }

    // p = c + x q; returns (c, q) or nullopt when p is not in Z + x Z[a,b].
    std::optional<std::pair<Int, MultiPoly>> split_off(const MultiPoly& p) const {
        Int c = p.constant_term();
        MultiPoly r = p - MultiPoly::constant(c);
        MultiPoly q;
        while (!r.is_zero()) {
            // leading term in a
            int da = r.degree_in(0);
            MultiPoly lead = r.coefficient_of(0, da);
            if (da == 0) return std::nullopt; // leftover without a: not divisible by a+b
            MultiPoly t;
            for (auto& [e, cc] : lead.terms()) {
                Exponents ee = e;
                if (ee.size() < 1) ee.resize(1, 0);
                ee[0] = da - 1;
                t.add_term(ee, cc);
            }
            q += t;
            r -= t * x;
        }
        return std::make_pair(c, q);
    }

    std::optional<Internal> reduce(const MultiPoly& p) const {
        auto parts = split_off(p);
        if (!parts) return std::nullopt;
        Internal out;
        if (parts->first != 0) out[{0, 0}] = parts->first;
        for (auto& [e, c] : parts->second.terms()) {
            int i = e.size() > 0 ? e[0] : 0;
            int j = e.size() > 1 ? e[1] : 0;
            // x a^i b^j == (-1)^i x b^{i+j} (mod J) when j >= 1
            if (j >= 1) {
                int total = i + j;
                Int sign = i % 2 == 0 ? 1 : -1;
                if (total % 2 == 1) continue; // x b^{odd} == 0
                auto& slot = out[{2, total / 2}];
                slot += sign * c;
                if (slot == 0) out.erase({2, total / 2});
            } else {
                auto& slot = out[{1, i}];
                slot += c;
                if (slot == 0) out.erase({1, i});
            }
        }
        return out;
    }

    // public-basis element -> model polynomial
    MultiPoly image(int idx) const {
        const std::string& label = labels[idx];
        if (label == "1") return MultiPoly::constant(1);
        if (label[0] == 'x' && label[1] == '^') {
            int n = std::stoi(label.substr(2));
            MultiPoly p = MultiPoly::constant(1);
            for (int i = 0; i < n; ++i) p = p * x;
            return p;
        }
        int n = std::stoi(label.substr(4));
        MultiPoly p = x;
        for (int i = 0; i < n; ++i) p = p * b;
        return p;
    }

    // matrix: public basis written in internal coordinates (per degree it is
    // unitriangular), inverted on the fly for coordinate conversion.
    std::map<std::pair<int, int>, int> internal_index;
    std::vector<Internal> public_in_internal;

    void prepare() {
        for (size_t i = 0; i < labels.size(); ++i) {
            auto red = reduce(image(static_cast<int>(i)));
            if (!red) throw std::logic_error("table construction: image not in the subring");
            public_in_internal.push_back(*red);
        }
    }

    // convert internal coordinates to public-basis coordinates by triangular
    // elimination: eliminate x a^i terms with x^{i+1}, then x b^{2i} terms.
    std::optional<std::vector<Int>> to_public(Internal v) const {
        std::vector<Int> out(labels.size(), 0);
        auto take = [&](std::pair<int, int> key) -> Int {
            auto it = v.find(key);
            return it == v.end() ? Int(0) : it->second;
        };
        // highest a-power first
        for (int i = cap - 1; i >= 0; --i) {
            Int c = take({1, i});
            if (c == 0) continue;
            int public_idx = index.at("x^" + std::to_string(i + 1));
            out[public_idx] += c;
            for (auto& [key, w] : public_in_internal[public_idx]) {
                auto& slot = v[key];
                slot -= c * w;
                if (slot == 0) v.erase(key);
            }
        }
        for (int i = 1; 2 * i + 1 <= cap; ++i) {
            Int c = take({2, i});
            if (c == 0) continue;
            int public_idx = index.at("x*b^" + std::to_string(2 * i));
            out[public_idx] += c;
            for (auto& [key, w] : public_in_internal[public_idx]) {
                auto& slot = v[key];
                slot -= c * w;
                if (slot == 0) v.erase(key);
            }
        }
        Int c0 = take({0, 0});
        if (c0 != 0) {
            out[0] += c0;
            v.erase({0, 0});
        }
        if (!v.empty()) return std::nullopt; // residue beyond the truncated basis
        return out;
    }
};

} // namespace

RingPtr make_table_ring(RingKind kind, int cap, std::shared_ptr<TableData> data) {
    auto r = std::shared_ptr<LambdaRing>(new LambdaRing());
    const_cast<RingKind&>(r->kind_) = kind;
    r->cap_ = cap;
    r->table_ = std::move(data);
    return r;
}

RingPtr LambdaRing::table_lambda2_3(int cap) {
    Lambda23Builder builder(cap);
    builder.prepare();
    auto data = std::make_shared<TableData>();
    data->labels = builder.labels;
    data->degrees = builder.degrees;
    data->generator_index = builder.index.at("x^1");
    const size_t n = data->labels.size();

    data->product.assign(n, std::vector<std::optional<std::vector<Int>>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto red = builder.reduce(builder.image(static_cast<int>(i)) *
                                      builder.image(static_cast<int>(j)));
            if (!red) throw std::logic_error("table construction: product left the subring");
            data->product[i][j] = builder.to_public(*red);
        }

    data->lambda.assign(n, {});
    for (size_t i = 0; i < n; ++i) {
        data->lambda[i].resize(cap + 1);
        RingElement img = builder.model->from_poly(builder.image(static_cast<int>(i)));
        for (int k = 0; k <= cap; ++k) {
            long need = static_cast<long>(k) * std::max<long>(1, data->degrees[i]);
            if (need > cap) break; // leave overflow entries empty
            RingElement lk = builder.model->lambda_op(img, k);
            auto red = builder.reduce(lk.poly());
            if (!red) throw std::logic_error("table construction: lambda left the subring");
            data->lambda[i][k] = builder.to_public(*red);
        }
    }
    return make_table_ring(RingKind::Table, cap, std::move(data));
}

RingPtr LambdaRing::table_i2_plus_i11(int cap) {
    auto data = std::make_shared<TableData>();
    data->labels = {"1", "s1"};
    data->degrees = {0, 1};
    data->generator_index = 1;
    data->product.assign(2, std::vector<std::optional<std::vector<Int>>>(2));
    data->product[0][0] = std::vector<Int>{1, 0};
    data->product[0][1] = std::vector<Int>{0, 1};
    data->product[1][0] = std::vector<Int>{0, 1};
    // s_1^2 = s_2 + s_11, both killed in Lambda/(I_(2)+I_(1,1)).
    data->product[1][1] = std::vector<Int>{0, 0};
    data->lambda.assign(2, {});
    data->lambda[0].resize(cap + 1);
    data->lambda[1].resize(cap + 1);
    for (int k = 0; k <= cap; ++k) {
        data->lambda[0][k] = std::vector<Int>{binomial(1, k), 0};
        data->lambda[1][k] =
            k == 0 ? std::vector<Int>{1, 0}
                   : (k == 1 ? std::vector<Int>{0, 1} : std::vector<Int>{0, 0});
    }
    return make_table_ring(RingKind::Table, cap, std::move(data));
}

} // namespace schurlab
