#pragma once

// File formats: configuration matrices, Chern-number tables and
// positive-polynomial tables, all JSON. Rationals are written as "n/d"
// strings so every value round-trips exactly.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "toddkit/config.hpp"
#include "toddkit/errors.hpp"
#include "toddkit/hyperkahler.hpp"
#include "toddkit/lemmas.hpp"
#include "toddkit/rational.hpp"

namespace toddkit::io {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Parses JSON text; syntax errors report line and column.
inline Json parse_json(const std::string& text, const std::string& source = "<input>") {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": malformed JSON (byte " + std::to_string(e.byte) + ")");
    }
}

namespace detail {

inline long long integer_field(const Json& v, const std::string& what) {
    if (!v.is_number_integer()) throw InputError(what + " must be an integer");
    return v.get<long long>();
}

}  // namespace detail

/// {"name": optional, "dims": [n_1..n_m], "degrees": [[q_1^1..q_1^m], ...]}
inline RawConfig config_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("configuration must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "name" && key != "dims" && key != "degrees") throw InputError("unknown configuration field '" + key + "'");
    if (!j.contains("dims") || !j["dims"].is_array()) throw InputError("configuration needs a \"dims\" array");
    if (!j.contains("degrees") || !j["degrees"].is_array()) throw InputError("configuration needs a \"degrees\" array");
    RawConfig raw;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw InputError("\"name\" must be a string");
        raw.name = j["name"].get<std::string>();
    }
    for (const auto& d : j["dims"]) raw.dims.push_back(detail::integer_field(d, "dims entry"));
    for (const auto& row : j["degrees"]) {
        if (!row.is_array()) throw InputError("each \"degrees\" row must be an array");
        std::vector<long long> r;
        for (const auto& q : row) r.push_back(detail::integer_field(q, "degree"));
        raw.degrees.push_back(std::move(r));
    }
    return raw;
}

inline Json config_to_json(const ConfigMatrix& cfg) {
    Json j;
    if (!cfg.name().empty()) j["name"] = cfg.name();
    j["dims"] = cfg.dims();
    j["degrees"] = cfg.degrees();
    return j;
}

inline ConfigMatrix load_config(const std::string& path) {
    return validate_config(config_from_json(parse_json(read_file(path), path)));
}

/// {"dim": 2n, "numbers": {"c2^3": ..., ...}}; values are integers or integer strings.
inline hk::ChernNumberTable chern_table_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("numbers") || !j["numbers"].is_object())
        throw InputError("Chern table needs \"dim\" and a \"numbers\" object");
    const long long dim = detail::integer_field(j["dim"], "\"dim\"");
    if (dim < 2 || dim > 64) throw InputError("\"dim\" out of range");
    hk::ChernNumberTable table(static_cast<unsigned>(dim));
    for (const auto& [key, value] : j["numbers"].items()) {
        BigInteger v;
        if (value.is_number_integer()) {
            v = BigInteger(std::to_string(value.get<long long>()));
        } else if (value.is_string()) {
            const BigRational r = parse_rational(value.get<std::string>());
            if (!is_integer(r)) throw InputError("Chern number for " + key + " must be an integer");
            v = r.get_num();
        } else {
            throw InputError("Chern number for " + key + " must be an integer");
        }
        table.set(key, v);
    }
    table.require_complete();
    return table;
}

inline hk::ChernNumberTable load_chern_table(const std::string& path) {
    return chern_table_from_json(parse_json(read_file(path), path));
}

/// {"q": [[q_1^2..q_1^m], ...]}: K rows of m-1 non-negative rationals
/// (integers or "n/d" strings).
inline lemmas::QTable qtable_from_json(const Json& j) {
    const Json& rows = j.is_object() && j.contains("q") ? j["q"] : j;
    if (!rows.is_array()) throw InputError("positive-polynomial table must be an array of rows or {\"q\": [...]}");
    lemmas::QTable table;
    for (const auto& row : rows) {
        if (!row.is_array()) throw InputError("each table row must be an array");
        std::vector<BigRational> r;
        for (const auto& v : row) {
            if (v.is_number_integer())
                r.push_back(make_rational(v.get<long long>()));
            else if (v.is_string())
                r.push_back(parse_rational(v.get<std::string>()));
            else
                throw InputError("table entries must be integers or \"n/d\" strings");
        }
        table.push_back(std::move(r));
    }
    return table;
}

inline lemmas::QTable load_qtable(const std::string& path) { return qtable_from_json(parse_json(read_file(path), path)); }

/// Rational as an exact "n/d" string.
inline Json rational(const BigRational& q) { return to_fraction_string(q); }

/// Sparse polynomial as [{"monomial": [e_1..e_m], "coefficient": "n/d"}, ...] in monomial order.
inline Json polynomial(const MultiPoly& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) out.push_back({{"monomial", m}, {"coefficient", rational(c)}});
    return out;
}

inline Json coefficients(const std::vector<BigRational>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(rational(c));
    return out;
}

/// FNV-1a 64-bit, hex.
inline std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = hex[h & 0xf];
    return s;
}

}  // namespace toddkit::io
