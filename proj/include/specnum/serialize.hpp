#pragma once

// Text forms of exact values.
//
//   Rational  "num/den" (canonical, "0/1" for zero)
//   UniPoly   JSON: array of rationals, index = degree
//             CSV:  "<var>[c0;c1;...]", e.g. "x[-1/12;0/1;1/1]"
//   BiPoly    JSON: matrix of rationals, row = x-degree, column = lambda-degree
//             CSV:  "[[r0c0;r0c1];[r1c0;r1c1]]"
//
// The CSV forms contain no commas, so CSV cells never need quoting. JSON
// records carry the degree bounds next to the coefficient arrays.

#include "specnum/polynomial.hpp"
#include "specnum/rational.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace specnum {

using Value = std::variant<Rational, UniPoly, BiPoly>;
using Json = nlohmann::ordered_json;

inline std::string_view kind_name(const Value& v) {
    switch (v.index()) {
        case 0: return "rational";
        case 1: return "unipoly";
        default: return "bipoly";
    }
}

inline Json rationals_to_json(std::span<const Rational> cs) {
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(c.str());
    return a;
}

/// Bare value: a string, an array or a matrix.
inline Json value_payload(const Value& v) {
    if (const auto* q = std::get_if<Rational>(&v)) return q->str();
    if (const auto* p = std::get_if<UniPoly>(&v)) return rationals_to_json(p->coeffs());
    const auto& b = std::get<BiPoly>(v);
    Json m = Json::array();
    for (const auto& row : b.matrix()) m.push_back(rationals_to_json(row));
    return m;
}

/// {"kind", "value", degree bounds, ...}
inline Json value_to_json(const Value& v) {
    Json j;
    j["kind"] = kind_name(v);
    if (const auto* p = std::get_if<UniPoly>(&v)) {
        j["var"] = to_string(p->var());
        j["degree"] = p->degree();
    } else if (const auto* b = std::get_if<BiPoly>(&v)) {
        j["deg_x"] = b->deg_x();
        j["deg_lambda"] = b->deg_lambda();
    }
    j["value"] = value_payload(v);
    return j;
}

namespace detail {

inline std::vector<Rational> rationals_from_json(const Json& a) {
    if (!a.is_array()) throw std::invalid_argument("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& e : a) out.push_back(Rational::parse(e.get<std::string>()));
    return out;
}

}  // namespace detail

inline Value value_from_json(const Json& j) {
    const auto kind = j.at("kind").get<std::string>();
    const Json& payload = j.at("value");
    if (kind == "rational") return Rational::parse(payload.get<std::string>());
    if (kind == "unipoly") {
        auto cs = detail::rationals_from_json(payload);
        const auto p = UniPoly(parse_var(j.at("var").get<std::string>()), cs);
        if (p.degree() != j.at("degree").get<int>()) throw std::invalid_argument("degree bound mismatch");
        return p;
    }
    if (kind == "bipoly") {
        std::vector<std::vector<Rational>> m;
        for (const auto& row : payload) m.push_back(detail::rationals_from_json(row));
        BiPoly b(m);
        if (b.deg_x() != j.at("deg_x").get<int>() || b.deg_lambda() != j.at("deg_lambda").get<int>())
            throw std::invalid_argument("degree bound mismatch");
        return b;
    }
    throw std::invalid_argument("unknown value kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// CSV cells

inline std::string join_rationals(std::span<const Rational> cs) {
    std::string s = "[";
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ';';
        s += cs[i].str();
    }
    return s + "]";
}

inline std::string value_to_csv(const Value& v) {
    if (const auto* q = std::get_if<Rational>(&v)) return q->str();
    if (const auto* p = std::get_if<UniPoly>(&v)) return std::string(to_string(p->var())) + join_rationals(p->coeffs());
    const auto m = std::get<BiPoly>(v).matrix();
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ';';
        s += join_rationals(m[i]);
    }
    return s + "]";
}

namespace detail {

inline std::vector<Rational> split_rationals(std::string_view body) {
    std::vector<Rational> out;
    if (body.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto semi = body.find(';', start);
        out.push_back(Rational::parse(body.substr(start, semi - start)));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return out;
}

}  // namespace detail

inline Value value_from_csv(std::string_view cell) {
    if (cell.empty()) throw std::invalid_argument("empty CSV value");
    if (cell.starts_with("[")) {
        if (!cell.ends_with("]")) throw std::invalid_argument("unterminated matrix");
        std::string_view body = cell.substr(1, cell.size() - 2);
        std::vector<std::vector<Rational>> rows;
        while (!body.empty()) {
            if (!body.starts_with("[")) throw std::invalid_argument("malformed matrix row");
            const auto close = body.find(']');
            if (close == std::string_view::npos) throw std::invalid_argument("malformed matrix row");
            rows.push_back(detail::split_rationals(body.substr(1, close - 1)));
            body.remove_prefix(close + 1);
            if (body.starts_with(";")) body.remove_prefix(1);
        }
        return BiPoly(rows);
    }
    const auto open = cell.find('[');
    if (open != std::string_view::npos) {
        if (!cell.ends_with("]")) throw std::invalid_argument("unterminated coefficient list");
        const Var var = parse_var(cell.substr(0, open));
        return UniPoly(var, detail::split_rationals(cell.substr(open + 1, cell.size() - open - 2)));
    }
    return Rational::parse(cell);
}

}  // namespace specnum
