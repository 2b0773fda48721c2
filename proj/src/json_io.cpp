#include "schurlab/json_io.hpp"

#include <algorithm>

namespace schurlab {

Json symfunc_to_json(const SymFunc& f) {
    Json out = Json::object();
    for (auto& [pi, c] : f.coeffs()) out[pi.to_string()] = c.str();
    return out;
}

SymFunc symfunc_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("symmetric function JSON must be an object");
    SymFunc f;
    for (auto& [key, value] : j.items()) {
        Int c(value.is_string() ? value.get<std::string>() : value.dump());
        f.add_term(Partition::parse(key), c);
    }
    return f;
}

namespace {

std::string monomial_key(const Exponents& e, const std::vector<std::string>& names) {
    std::string key;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!key.empty()) key += "*";
        key += i < names.size() ? names[i] : ("v" + std::to_string(i));
        if (e[i] > 1) key += "^" + std::to_string(e[i]);
    }
    return key.empty() ? "1" : key;
}

} // namespace

Json multipoly_to_json(const MultiPoly& p, const std::vector<std::string>& names) {
    Json out = Json::object();
    for (auto& [e, c] : p.terms()) out[monomial_key(e, names)] = c.str();
    return out;
}

MultiPoly multipoly_from_json(const Json& j, const std::vector<std::string>& names) {
    if (!j.is_object()) throw ParseError("polynomial JSON must be an object");
    MultiPoly out;
    for (auto& [key, value] : j.items()) {
        Int c(value.is_string() ? value.get<std::string>() : value.dump());
        Exponents e;
        if (key != "1") {
            size_t pos = 0;
            while (pos < key.size()) {
                size_t star = key.find('*', pos);
                std::string factor =
                    key.substr(pos, star == std::string::npos ? star : star - pos);
                pos = star == std::string::npos ? key.size() : star + 1;
                int exp = 1;
                if (size_t caret = factor.find('^'); caret != std::string::npos) {
                    exp = std::stoi(factor.substr(caret + 1));
                    factor = factor.substr(0, caret);
                }
                auto it = std::find(names.begin(), names.end(), factor);
                if (it == names.end()) throw ParseError("unknown variable: " + factor);
                size_t idx = static_cast<size_t>(it - names.begin());
                if (e.size() <= idx) e.resize(idx + 1, 0);
                e[idx] += exp;
            }
        }
        out.add_term(e, c);
    }
    return out;
}

Json ring_to_json(const LambdaRing& ring) {
    Json out = Json::object();
    switch (ring.kind()) {
        case RingKind::Free:
            out["kind"] = "free";
            break;
        case RingKind::Even:
            out["kind"] = "even";
            out["n"] = ring.families()[0].size;
            break;
        case RingKind::Odd:
            out["kind"] = "odd";
            out["n"] = ring.families()[0].size;
            break;
        case RingKind::SchurQuotient:
            out["kind"] = "schur_quotient";
            out["lambda"] = ring.quotient().to_string();
            break;
        case RingKind::Tensor: {
            out["kind"] = "tensor";
            Json factors = Json::array();
            for (auto& f : ring.tensor_factors()) factors.push_back(ring_to_json(*f));
            out["factors"] = std::move(factors);
            break;
        }
        case RingKind::Binomial:
            out["kind"] = "binomial";
            out["components"] = ring.components();
            break;
        case RingKind::Split:
            out["kind"] = "split";
            out["n"] = static_cast<int>(ring.var_names().size());
            break;
        case RingKind::LinePoly:
            out["kind"] = "line_poly";
            out["base"] = ring_to_json(*ring.line_base());
            break;
        case RingKind::Table:
            out["kind"] = "table";
            out["name"] = ring.table().labels[1] == "s1" ? "i2+i11" : "lambda2-3";
            break;
    }
    return out;
}

RingPtr ring_from_json(const Json& j, int cap) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("ring presentation JSON needs a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "free") return LambdaRing::free_ring(cap);
    if (kind == "even") return LambdaRing::even_free(j.at("n").get<int>(), cap);
    if (kind == "odd") return LambdaRing::odd_free(j.at("n").get<int>(), cap);
    if (kind == "schur_quotient")
        return LambdaRing::schur_quotient(Partition::parse(j.at("lambda").get<std::string>()),
                                          cap);
    if (kind == "tensor") {
        std::vector<RingPtr> factors;
        for (auto& f : j.at("factors")) factors.push_back(ring_from_json(f, cap));
        return LambdaRing::tensor(factors);
    }
    if (kind == "binomial")
        return LambdaRing::binomial_ring(j.value("components", 1), cap);
    if (kind == "split") return LambdaRing::split_ring(j.at("n").get<int>(), cap);
    if (kind == "line_poly") return LambdaRing::line_poly(ring_from_json(j.at("base"), cap));
    if (kind == "table") {
        std::string name = j.at("name").get<std::string>();
        if (name == "lambda2-3") return LambdaRing::table_lambda2_3(cap);
        if (name == "i2+i11") return LambdaRing::table_i2_plus_i11(cap);
        throw ParseError("unknown table ring: " + name);
    }
    throw ParseError("unknown ring kind: " + kind);
}

RingPtr ring_from_preset(const std::string& text, int cap) {
    if (!text.empty() && text[0] == '{') return ring_from_json(Json::parse(text), cap);
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    try {
        if (head == "free") return LambdaRing::free_ring(cap);
        if (head == "even") return LambdaRing::even_free(std::stoi(arg), cap);
        if (head == "odd") return LambdaRing::odd_free(std::stoi(arg), cap);
        if (head == "quot") return LambdaRing::schur_quotient(Partition::parse(arg), cap);
        if (head == "binomial")
            return LambdaRing::binomial_ring(arg.empty() ? 1 : std::stoi(arg), cap);
        if (head == "split") return LambdaRing::split_ring(std::stoi(arg), cap);
        if (head == "table") {
            if (arg == "lambda2-3") return LambdaRing::table_lambda2_3(cap);
            if (arg == "i2+i11") return LambdaRing::table_i2_plus_i11(cap);
            throw ParseError("unknown table ring preset: " + arg);
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("bad ring preset argument: " + text);
    }
    throw ParseError("unknown ring preset: " + text);
}

Json element_to_json(const RingElement& x) {
    if (auto* f = std::get_if<SymFunc>(&x.payload())) return symfunc_to_json(*f);
    if (auto* p = std::get_if<MultiPoly>(&x.payload()))
        return multipoly_to_json(*p, x.ring()->var_names());
    if (auto* v = std::get_if<std::vector<Int>>(&x.payload())) {
        Json out = Json::array();
        for (auto& c : *v) out.push_back(c.str());
        return out;
    }
    Json out = Json::object();
    for (auto& [k, f] : std::get<LineElem>(x.payload()))
        out[std::to_string(k)] = symfunc_to_json(f);
    return out;
}

RingElement element_from_json(const RingPtr& ring, const Json& j) {
    if (ring->is_schur_native()) return ring->from_sym(symfunc_from_json(j));
    if (ring->is_polynomial_type())
        return ring->from_poly(multipoly_from_json(j, ring->var_names()));
    if (ring->kind() == RingKind::Binomial || ring->kind() == RingKind::Table) {
        if (!j.is_array()) throw ParseError("coordinate element JSON must be an array");
        std::vector<Int> v;
        for (auto& c : j) v.emplace_back(c.is_string() ? c.get<std::string>() : c.dump());
        return ring->from_coords(std::move(v));
    }
    // line polynomial over a Schur-native base
    LineElem m;
    for (auto& [key, value] : j.items()) m[std::stoi(key)] = symfunc_from_json(value);
    return ring->from_line(std::move(m));
}

Json lambda_poly_to_json(const LambdaPolynomial& p) {
    Json out = Json::array();
    for (auto& [mono, c] : p.terms()) {
        Json rec = Json::object();
        rec["coeff"] = c.str();
        Json factors = Json::array();
        for (size_t i = 0; i < mono.x_exp.size(); ++i)
            if (mono.x_exp[i] > 0)
                factors.push_back(Json::array({"x", static_cast<int>(i + 1), mono.x_exp[i]}));
        for (size_t i = 0; i < mono.y_exp.size(); ++i)
            if (mono.y_exp[i] > 0)
                factors.push_back(Json::array({"y", static_cast<int>(i + 1), mono.y_exp[i]}));
        rec["monomial"] = std::move(factors);
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace schurlab
