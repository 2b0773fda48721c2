#include "schurlab/expr.hpp"

#include <cctype>

#include "schurlab/schur_ring.hpp"

namespace schurlab {

namespace {

// One recursive-descent skeleton over +, -, *, parentheses; atoms come from
// the instantiating context.
template <class V, class Ctx>
class Parser {
public:
    Parser(const std::string& text, const Ctx& ctx) : text_(text), ctx_(ctx) {}

    V parse() {
        V v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing characters in expression: " + text_.substr(pos_));
        return v;
    }

private:
    const std::string& text_;
    const Ctx& ctx_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    V expr() {
        V v = term();
        while (true) {
            skip_ws();
            if (eat('+')) v = ctx_.add(v, term());
            else if (eat('-')) v = ctx_.sub(v, term());
            else return v;
        }
    }

    V term() {
        V v = factor();
        while (true) {
            skip_ws();
            if (eat('*')) v = ctx_.mul(v, factor());
            else return v;
        }
    }

    V factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression");
        if (eat('-')) return ctx_.neg(factor());
        if (eat('(')) {
            V v = expr();
            if (!eat(')')) throw ParseError("missing ')' in expression");
            return v;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return ctx_.integer(Int(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            ++pos_;
            // s[...] form: the bracket belongs to the atom
            if (c == 's' && pos_ < text_.size() && text_[pos_] == '[') {
                size_t close = text_.find(']', pos_);
                if (close == std::string::npos) throw ParseError("missing ']' after s[");
                std::string part = text_.substr(pos_, close - pos_ + 1);
                pos_ = close + 1;
                return ctx_.schur_atom(Partition::parse(part));
            }
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_' || text_[pos_] == '\''))
                ++pos_;
            return ctx_.name_atom(text_.substr(start, pos_ - start));
        }
        throw ParseError(std::string("unexpected character '") + c + "' in expression");
    }
};

struct SymCtx {
    int max_degree;
    SymFunc add(const SymFunc& a, const SymFunc& b) const { return a + b; }
    SymFunc sub(const SymFunc& a, const SymFunc& b) const { return a - b; }
    SymFunc mul(const SymFunc& a, const SymFunc& b) const {
        return multiply(a, b, max_degree);
    }
    SymFunc neg(const SymFunc& a) const { return -a; }
    SymFunc integer(const Int& c) const { return SymFunc::one() * c; }
    SymFunc schur_atom(Partition pi) const {
        check_cap(pi.weight(), max_degree, "schur expression");
        return SymFunc::schur(std::move(pi));
    }
    SymFunc name_atom(const std::string& name) const {
        if (name.size() >= 2 && (name[0] == 'e' || name[0] == 'h')) {
            bool digits = true;
            for (size_t i = 1; i < name.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
            if (digits) {
                int k = std::stoi(name.substr(1));
                check_cap(k, max_degree, "schur expression");
                return name[0] == 'e' ? SymFunc::e(k) : SymFunc::h(k);
            }
        }
        throw ParseError("unknown symmetric-function atom: " + name);
    }
};

struct ElemCtx {
    RingPtr ring;
    RingElement add(const RingElement& a, const RingElement& b) const { return a + b; }
    RingElement sub(const RingElement& a, const RingElement& b) const { return a - b; }
    RingElement mul(const RingElement& a, const RingElement& b) const { return a * b; }
    RingElement neg(const RingElement& a) const { return -a; }
    RingElement integer(const Int& c) const { return ring->from_int(c); }
    RingElement schur_atom(Partition pi) const {
        if (!ring->is_schur_native())
            throw ParseError("s[...] atoms need a Schur-native ring");
        return ring->from_sym(SymFunc::schur(std::move(pi)));
    }
    RingElement name_atom(const std::string& name) const {
        if (name == "gen" || name == "x") return ring->generator();
        if (auto idx = ring->var_by_name(name)) return ring->var(*idx);
        if (ring->is_schur_native() && name.size() >= 2 &&
            (name[0] == 'e' || name[0] == 'h')) {
            bool digits = true;
            for (size_t i = 1; i < name.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
            if (digits) {
                int k = std::stoi(name.substr(1));
                return ring->from_sym(name[0] == 'e' ? SymFunc::e(k) : SymFunc::h(k));
            }
        }
        if (ring->kind() == RingKind::Table) {
            for (size_t i = 0; i < ring->table().labels.size(); ++i)
                if (ring->table().labels[i] == name) {
                    std::vector<Int> v(ring->table().labels.size(), 0);
                    v[i] = 1;
                    return ring->from_coords(std::move(v));
                }
        }
        throw ParseError("unknown element atom: " + name);
    }
};

} // namespace

SymFunc parse_schur_expr(const std::string& text, int max_degree) {
    SymCtx ctx{max_degree};
    return Parser<SymFunc, SymCtx>(text, ctx).parse();
}

RingElement parse_element_expr(const std::string& text, const RingPtr& ring) {
    ElemCtx ctx{ring};
    return Parser<RingElement, ElemCtx>(text, ctx).parse();
}

} // namespace schurlab
