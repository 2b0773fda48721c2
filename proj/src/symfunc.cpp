#include "schurlab/symfunc.hpp"

#include <algorithm>

namespace schurlab {

SymFunc SymFunc::schur(Partition pi, Int c) {
    SymFunc f;
    if (c != 0) f.coeffs_[std::move(pi)] = std::move(c);
    return f;
}

SymFunc SymFunc::e(int n) {
    if (n < 0) return zero();
    return schur(Partition(std::vector<int>(n, 1)));
}

SymFunc SymFunc::h(int n) {
    if (n < 0) return zero();
    if (n == 0) return one();
    return schur(Partition{n});
}

Int SymFunc::coeff(const Partition& pi) const {
    auto it = coeffs_.find(pi);
    return it == coeffs_.end() ? Int(0) : it->second;
}

int SymFunc::degree() const {
    int d = 0;
    for (auto& [pi, c] : coeffs_) d = std::max(d, pi.weight());
    return d;
}

bool SymFunc::is_homogeneous() const {
    int d = -1;
    for (auto& [pi, c] : coeffs_) {
        if (d < 0) d = pi.weight();
        else if (pi.weight() != d) return false;
    }
    return true;
}

SymFunc SymFunc::component(int n) const {
    SymFunc out;
    for (auto& [pi, c] : coeffs_)
        if (pi.weight() == n) out.coeffs_[pi] = c;
    return out;
}

void SymFunc::add_term(const Partition& pi, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(pi, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SymFunc SymFunc::operator-() const {
    SymFunc out;
    for (auto& [pi, c] : coeffs_) out.coeffs_[pi] = -c;
    return out;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc out = *this;
    out += o;
    return out;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    SymFunc out = *this;
    out -= o;
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    for (auto& [pi, c] : o.coeffs_) add_term(pi, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    for (auto& [pi, c] : o.coeffs_) add_term(pi, -c);
    return *this;
}

SymFunc SymFunc::operator*(const Int& c) const {
    SymFunc out;
    if (c == 0) return out;
    for (auto& [pi, v] : coeffs_) out.coeffs_[pi] = v * c;
    return out;
}

std::string SymFunc::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [pi, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out += a.str() + "*";
        out += "s" + pi.to_string();
    }
    return out;
}

TensorSymFunc TensorSymFunc::pure(Partition left, Partition right, Int c) {
    TensorSymFunc t;
    if (c != 0) t.coeffs_[{std::move(left), std::move(right)}] = std::move(c);
    return t;
}

Int TensorSymFunc::coeff(const Partition& l, const Partition& r) const {
    auto it = coeffs_.find({l, r});
    return it == coeffs_.end() ? Int(0) : it->second;
}

void TensorSymFunc::add_term(const Partition& l, const Partition& r, const Int& c) {
    if (c == 0) return;
    Key key{l, r};
    auto [it, inserted] = coeffs_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

TensorSymFunc TensorSymFunc::operator+(const TensorSymFunc& o) const {
    TensorSymFunc out = *this;
    for (auto& [k, c] : o.coeffs_) out.add_term(k.first, k.second, c);
    return out;
}

TensorSymFunc TensorSymFunc::operator-(const TensorSymFunc& o) const {
    TensorSymFunc out = *this;
    for (auto& [k, c] : o.coeffs_) out.add_term(k.first, k.second, -c);
    return out;
}

std::string TensorSymFunc::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [k, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out += a.str() + "*";
        out += "s" + k.first.to_string() + "(x)s" + k.second.to_string();
    }
    return out;
}

} // namespace schurlab
