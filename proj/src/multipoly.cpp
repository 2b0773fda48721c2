#include "schurlab/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace schurlab {

namespace {

void trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponents add_exp(const Exponents& a, const Exponents& b) {
    Exponents out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

} // namespace

MultiPoly MultiPoly::constant(Int c) {
    MultiPoly p;
    if (c != 0) p.terms_[{}] = std::move(c);
    return p;
}

MultiPoly MultiPoly::variable(int index) {
    Exponents e(index + 1, 0);
    e[index] = 1;
    return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Exponents e, Int c) {
    MultiPoly p;
    trim(e);
    if (c != 0) p.terms_[std::move(e)] = std::move(c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Int MultiPoly::constant_term() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Int(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

long MultiPoly::weighted_degree(const std::vector<int>& weights) const {
    long d = 0;
    for (auto& [e, c] : terms_) {
        long w = 0;
        for (size_t i = 0; i < e.size(); ++i)
            w += static_cast<long>(e[i]) * (i < weights.size() ? weights[i] : 1);
        d = std::max(d, w);
    }
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Int& c) {
    if (c == 0) return;
    Exponents key = e;
    trim(key);
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    out += o;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    out -= o;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out;
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_)
            out.add_term(add_exp(ea, eb), ca * cb);
    return out;
}

MultiPoly MultiPoly::operator*(const Int& c) const {
    MultiPoly out;
    if (c == 0) return out;
    for (auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& values) const {
    MultiPoly out;
    for (auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(c);
        Exponents untouched;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i < values.size()) {
                for (int k = 0; k < e[i]; ++k) term = term * values[i];
            } else {
                if (untouched.size() <= i) untouched.resize(i + 1, 0);
                untouched[i] = e[i];
            }
        }
        out += term * MultiPoly::monomial(untouched, 1);
    }
    return out;
}

MultiPoly MultiPoly::coefficient_of(int var, int k) const {
    MultiPoly out;
    for (auto& [e, c] : terms_) {
        int got = var < static_cast<int>(e.size()) ? e[var] : 0;
        if (got != k) continue;
        Exponents rest = e;
        if (var < static_cast<int>(rest.size())) rest[var] = 0;
        trim(rest);
        out.add_term(rest, c);
    }
    return out;
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (auto& [e, c] : terms_)
        if (var < static_cast<int>(e.size())) d = std::max(d, e[var]);
    return d;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest-degree monomials last under lex map order; print in map order.
    for (auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : ("v" + std::to_string(i));
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += mono;
        }
    }
    return out;
}

PolyFrac::PolyFrac(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("PolyFrac: zero denominator");
    normalize();
}

void PolyFrac::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(1);
        return;
    }
    // Divide out the integer content common to numerator and denominator,
    // and make the denominator's leading coefficient positive.
    Int g = 0;
    for (auto& [e, c] : num_.terms()) g = boost::multiprecision::gcd(g, c);
    for (auto& [e, c] : den_.terms()) g = boost::multiprecision::gcd(g, c);
    if (den_.terms().rbegin()->second < 0) g = -g;
    if (g != 1 && g != 0) {
        MultiPoly n2, d2;
        for (auto& [e, c] : num_.terms()) n2.add_term(e, c / g);
        for (auto& [e, c] : den_.terms()) d2.add_term(e, c / g);
        num_ = std::move(n2);
        den_ = std::move(d2);
    }
}

PolyFrac PolyFrac::operator-() const { return PolyFrac(-num_, den_); }

PolyFrac PolyFrac::operator+(const PolyFrac& o) const {
    if (den_ == o.den_) return PolyFrac(num_ + o.num_, den_);
    return PolyFrac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

PolyFrac PolyFrac::operator-(const PolyFrac& o) const { return *this + (-o); }

PolyFrac PolyFrac::operator*(const PolyFrac& o) const {
    return PolyFrac(num_ * o.num_, den_ * o.den_);
}

PolyFrac PolyFrac::operator/(const PolyFrac& o) const {
    if (o.is_zero()) throw std::domain_error("PolyFrac: division by zero");
    return PolyFrac(num_ * o.den_, den_ * o.num_);
}

bool PolyFrac::operator==(const PolyFrac& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

} // namespace schurlab
