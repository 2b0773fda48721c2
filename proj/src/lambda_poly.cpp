#include "schurlab/lambda_poly.hpp"

namespace schurlab {

void LambdaMonomial::trim() {
    while (!x_exp.empty() && x_exp.back() == 0) x_exp.pop_back();
    while (!y_exp.empty() && y_exp.back() == 0) y_exp.pop_back();
}

long LambdaMonomial::x_weight() const {
    long w = 0;
    for (size_t i = 0; i < x_exp.size(); ++i) w += static_cast<long>(i + 1) * x_exp[i];
    return w;
}

long LambdaMonomial::y_weight() const {
    long w = 0;
    for (size_t i = 0; i < y_exp.size(); ++i) w += static_cast<long>(i + 1) * y_exp[i];
    return w;
}

int LambdaMonomial::min_x_index() const {
    for (size_t i = 0; i < x_exp.size(); ++i)
        if (x_exp[i] > 0) return static_cast<int>(i + 1);
    return 0;
}

int LambdaMonomial::max_x_index() const {
    for (size_t i = x_exp.size(); i > 0; --i)
        if (x_exp[i - 1] > 0) return static_cast<int>(i);
    return 0;
}

LambdaPolynomial LambdaPolynomial::x_power(int index, int exponent, Int c) {
    LambdaPolynomial p;
    LambdaMonomial m;
    if (exponent > 0) {
        m.x_exp.assign(index, 0);
        m.x_exp[index - 1] = exponent;
    }
    p.add_term(std::move(m), c);
    return p;
}

void LambdaPolynomial::add_term(LambdaMonomial m, const Int& c) {
    if (c == 0) return;
    m.trim();
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LambdaPolynomial LambdaPolynomial::operator+(const LambdaPolynomial& o) const {
    LambdaPolynomial out = *this;
    for (auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

LambdaPolynomial LambdaPolynomial::operator*(const LambdaPolynomial& o) const {
    LambdaPolynomial out;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            LambdaMonomial m;
            m.x_exp.assign(std::max(ma.x_exp.size(), mb.x_exp.size()), 0);
            m.y_exp.assign(std::max(ma.y_exp.size(), mb.y_exp.size()), 0);
            for (size_t i = 0; i < ma.x_exp.size(); ++i) m.x_exp[i] += ma.x_exp[i];
            for (size_t i = 0; i < mb.x_exp.size(); ++i) m.x_exp[i] += mb.x_exp[i];
            for (size_t i = 0; i < ma.y_exp.size(); ++i) m.y_exp[i] += ma.y_exp[i];
            for (size_t i = 0; i < mb.y_exp.size(); ++i) m.y_exp[i] += mb.y_exp[i];
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

std::string LambdaPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        auto emit = [&](const std::vector<int>& exp, const char* sym) {
            for (size_t i = 0; i < exp.size(); ++i) {
                if (exp[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "L" + std::to_string(i + 1) + sym;
                if (exp[i] > 1) mono += "^" + std::to_string(exp[i]);
            }
        };
        emit(m.x_exp, "x");
        emit(m.y_exp, "y");
        if (mono.empty()) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += mono;
        }
    }
    return out;
}

} // namespace schurlab
